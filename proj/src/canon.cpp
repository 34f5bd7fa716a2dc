#include "cluster/canon.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "cluster/error.hpp"
#include "cluster/seed.hpp"

namespace cluster {

namespace {

template <class T>
using Signature = std::vector<T>;

// Rank signatures into dense color ids (smallest signature gets color 0).
template <class T>
std::vector<int> rank(const std::vector<Signature<T>>& sig) {
    std::vector<std::size_t> idx(sig.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    std::vector<int> color(sig.size());
    int c = -1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++c;
        color[idx[i]] = c;
    }
    return color;
}

int count_colors(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

// T is Integer, or long long when every entry fits (the common case).
template <class T>
class Search {
public:
    Search(std::vector<T> a, std::size_t m, std::size_t n) : a_(std::move(a)), n_(n), m_(m) {}

    std::vector<std::size_t> run() {
        refine();
        twins();
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return color_[a] < color_[b]; });
        used_.assign(n_, false);
        cur_.clear();
        cur_.reserve(m_ * n_ * 2);
        dfs(0);
        return best_perm_;
    }

private:
    const T& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    bool nz(std::size_t i, std::size_t j) const { return at(i, j) != T(0); }

    void refine() {
        std::vector<Signature<T>> sig(n_);
        std::vector<std::pair<T, T>> nb;
        for (std::size_t v = 0; v < n_; ++v) {
            Signature<T>& s = sig[v];
            for (std::size_t r = n_; r < m_; ++r) s.push_back(at(r, v));
            nb.clear();
            for (std::size_t j = 0; j < n_; ++j)
                if (j != v && (nz(v, j) || nz(j, v))) nb.emplace_back(at(v, j), at(j, v));
            std::sort(nb.begin(), nb.end());
            s.push_back(T(static_cast<long long>(nb.size())));
            for (auto& [x, y] : nb) {
                s.push_back(x);
                s.push_back(y);
            }
        }
        color_ = rank(sig);
        int ncol = count_colors(color_);
        std::vector<std::array<T, 3>> nb3;
        while (true) {
            std::vector<Signature<T>> next(n_);
            for (std::size_t v = 0; v < n_; ++v) {
                nb3.clear();
                for (std::size_t j = 0; j < n_; ++j)
                    if (j != v && (nz(v, j) || nz(j, v))) nb3.push_back({T(color_[j]), at(v, j), at(j, v)});
                std::sort(nb3.begin(), nb3.end());
                Signature<T>& s = next[v];
                s.reserve(1 + 3 * nb3.size());
                s.push_back(T(color_[v]));
                for (auto& t : nb3) s.insert(s.end(), t.begin(), t.end());
            }
            std::vector<int> c2 = rank(next);
            int n2 = count_colors(c2);
            color_ = c2;
            if (n2 == ncol) break;
            ncol = n2;
        }
    }

    void twins() {
        twin_.resize(n_);
        std::iota(twin_.begin(), twin_.end(), 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (twin_[i] != i) continue;
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (twin_[j] != j || color_[i] != color_[j]) continue;
                if (nz(i, j) || nz(j, i)) continue;
                bool ok = true;
                for (std::size_t k = 0; k < m_ && ok; ++k) {
                    if (k == i || k == j) continue;
                    if (at(k, i) != at(k, j)) ok = false;
                    if (k < n_ && at(i, k) != at(j, k)) ok = false;
                }
                if (ok) twin_[j] = i;
            }
        }
    }

    // Entries contributed by placing vertex v at position p.
    void block(std::size_t p, std::size_t v, std::vector<T>& out) const {
        for (std::size_t q = 0; q < p; ++q) {
            out.push_back(at(v, assigned_[q]));
            out.push_back(at(assigned_[q], v));
        }
        for (std::size_t r = n_; r < m_; ++r) out.push_back(at(r, v));
    }

    bool prefix_greater() const {
        for (std::size_t i = 0; i < cur_.size(); ++i) {
            if (cur_[i] < best_[i]) return false;
            if (best_[i] < cur_[i]) return true;
        }
        return false;
    }

    void dfs(std::size_t p) {
        if (p == n_) {
            if (!have_best_ || cur_ < best_) {
                best_ = cur_;
                best_perm_ = assigned_;
                have_best_ = true;
            }
            return;
        }
        int want = color_[order_[p]];
        std::size_t start = cur_.size();
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v] || color_[v] != want) continue;
            // only the smallest unused member of a twin class
            bool skip = false;
            for (std::size_t u = 0; u < v; ++u)
                if (!used_[u] && twin_[u] == twin_[v]) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            block(p, v, cur_);
            if (!have_best_ || !prefix_greater()) {
                used_[v] = true;
                assigned_.push_back(v);
                dfs(p + 1);
                assigned_.pop_back();
                used_[v] = false;
            }
            cur_.resize(start);
        }
    }

    std::vector<T> a_;
    std::size_t n_, m_;
    std::vector<int> color_;
    std::vector<std::size_t> twin_, order_, assigned_;
    std::vector<bool> used_;
    std::vector<T> cur_, best_;
    std::vector<std::size_t> best_perm_;
    bool have_best_ = false;
};

std::vector<std::size_t> canonical_perm(const Matrix& b) {
    // entries bounded well inside int64 so signatures never overflow
    constexpr int64_t kFast = int64_t(1) << 40;
    bool fast = true;
    for (const auto& x : b.data())
        if (!x.is_small() || x.small() > kFast || x.small() < -kFast) {
            fast = false;
            break;
        }
    if (fast) {
        std::vector<long long> a;
        a.reserve(b.data().size());
        for (const auto& x : b.data()) a.push_back(x.small());
        return Search<long long>(std::move(a), b.rows(), b.cols()).run();
    }
    return Search<Integer>(b.data(), b.rows(), b.cols()).run();
}

}  // namespace

CanonicalForm canonical_form(const Matrix& b) {
    if (b.rows() < b.cols()) throw ShapeError("canonical_form needs rows >= cols");
    CanonicalForm out;
    out.perm = canonical_perm(b);
    out.matrix = permute_mutable(b, out.perm);
    return out;
}

CanonicalForm equivariant_canonical_form(const Matrix& b, const std::vector<std::vector<std::size_t>>& cent) {
    CanonicalForm best{b, {}};
    best.perm.resize(b.cols());
    std::iota(best.perm.begin(), best.perm.end(), 0);
    for (const auto& s : cent) {
        Matrix m = permute_mutable(b, s);
        if (m < best.matrix) {
            best.matrix = std::move(m);
            best.perm = s;
        }
    }
    return best;
}

std::vector<std::vector<std::size_t>> centralizer(std::size_t n, const std::vector<std::vector<std::size_t>>& gens) {
    for (const auto& g : gens)
        if (g.size() != n) throw ShapeError("generator has wrong length");
    std::vector<std::vector<std::size_t>> out;
    std::vector<long> sigma(n, -1);
    std::vector<bool> hit(n, false);
    // sigma(i) = v forces sigma(g(i)) = g(v); false on conflict. The trail
    // records what was set so it can be undone.
    auto assign = [&](std::size_t i, std::size_t v, std::vector<std::size_t>& trail) {
        std::vector<std::pair<std::size_t, std::size_t>> stack{{i, v}};
        while (!stack.empty()) {
            auto [a, x] = stack.back();
            stack.pop_back();
            if (sigma[a] >= 0) {
                if (static_cast<std::size_t>(sigma[a]) != x) return false;
                continue;
            }
            if (hit[x]) return false;
            sigma[a] = static_cast<long>(x);
            hit[x] = true;
            trail.push_back(a);
            for (const auto& g : gens) stack.emplace_back(g[a], g[x]);
        }
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        while (i < n && sigma[i] >= 0) ++i;
        if (i == n) {
            std::vector<std::size_t> p(n);
            for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::size_t>(sigma[k]);
            out.push_back(p);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (hit[v]) continue;
            std::vector<std::size_t> trail;
            if (assign(i, v, trail)) rec(i + 1);
            for (std::size_t a : trail) {
                hit[static_cast<std::size_t>(sigma[a])] = false;
                sigma[a] = -1;
            }
        }
    };
    rec(0);
    return out;
}

Matrix Quiver::to_matrix() const {
    Matrix b(n_total, n_mutable);
    for (const auto& [e, mult] : arrows) {
        auto [i, j] = e;
        if (j < n_mutable) b(i, j) += mult;
        if (i < n_mutable) b(j, i) -= mult;
    }
    return b;
}

Quiver Quiver::from_matrix(const Matrix& b) {
    if (!is_skew_symmetric(b)) throw PreconditionError("quiver needs a skew-symmetric top square");
    Quiver q;
    q.n_mutable = b.cols();
    q.n_total = b.rows();
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (b(i, j).sign() > 0) q.arrows[{i, j}] = b(i, j);
            // frozen -> mutable arrows are seen from row i; mutable -> frozen from column
            if (i >= b.cols() && b(i, j).sign() < 0) q.arrows[{j, i}] = -b(i, j);
        }
    return q;
}

void Quiver::add_arrow(std::size_t i, std::size_t j, long long mult) {
    if (i == j) throw PreconditionError("quiver loops are not allowed");
    if (i >= n_total || j >= n_total) throw IndexError("arrow endpoint out of range");
    if (i >= n_mutable && j >= n_mutable) return;  // frozen-frozen arrows carry no data
    auto rev = arrows.find({j, i});
    Integer m(mult);
    if (rev != arrows.end()) {
        // cancel 2-cycles
        Integer left = rev->second - m;
        if (left.sign() > 0)
            rev->second = left;
        else {
            arrows.erase(rev);
            if (left.sign() < 0) arrows[{i, j}] += -left;
        }
        return;
    }
    arrows[{i, j}] += m;
}

}  // namespace cluster
