#include "cluster/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "cluster/error.hpp"

namespace cluster {

Matrix::Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    m_ = rows.size();
    n_ = m_ ? rows.begin()->size() : 0;
    a_.reserve(m_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw ShapeError("ragged matrix literal");
        for (long long v : r) a_.emplace_back(v);
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    Matrix out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("row " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
    }
    return out;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

std::vector<Integer> Matrix::row(std::size_t i) const {
    return std::vector<Integer>(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
}

Matrix Matrix::top_square() const {
    if (m_ < n_) throw ShapeError("matrix has fewer rows than columns");
    Matrix out(n_, n_);
    std::copy(a_.begin(), a_.begin() + n_ * n_, out.a_.begin());
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(n_, m_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool operator<(const Matrix& a, const Matrix& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        int c = compare(a.a_[i], b.a_[i]);
        if (c) return c < 0;
    }
    return false;
}

std::size_t Matrix::hash() const {
    std::size_t h = m_ * 131 + n_;
    for (const auto& x : a_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Matrix mutate(const Matrix& b, std::size_t k) {
    if (k >= b.cols())
        throw IndexError("mutation index " + std::to_string(k + 1) + " outside mutable range 1.." +
                         std::to_string(b.cols()));
    Matrix out(b);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        const Integer& bik = b(i, k);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
                continue;
            }
            const Integer& bkj = b(k, j);
            int s = bik.sign();
            if (s != 0 && s == bkj.sign()) {
                // sgn(b_ik) * b_ik * b_kj
                if (s > 0)
                    out(i, j) += bik * bkj;
                else
                    out(i, j) -= bik * bkj;
            }
        }
    }
    return out;
}

Matrix mutate_sequence(Matrix b, const std::vector<std::size_t>& ks) {
    for (std::size_t k : ks) b = mutate(b, k);
    return b;
}

Matrix restrict_matrix(const Matrix& b, std::vector<std::size_t> index_set) {
    std::sort(index_set.begin(), index_set.end());
    index_set.erase(std::unique(index_set.begin(), index_set.end()), index_set.end());
    if (index_set.empty()) throw PreconditionError("restriction to an empty index set");
    if (index_set.back() >= b.rows())
        throw IndexError("restriction index " + std::to_string(index_set.back() + 1) + " exceeds row count " +
                         std::to_string(b.rows()));
    std::vector<std::size_t> cols;
    for (std::size_t i : index_set)
        if (i < b.cols()) cols.push_back(i);
    Matrix out(index_set.size(), cols.size());
    for (std::size_t r = 0; r < index_set.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = b(index_set[r], cols[c]);
    return out;
}

Matrix cartan_counterpart(const Matrix& b) {
    std::size_t n = b.cols();
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j) ? Integer(2) : -abs(b(i, j));
    return a;
}

std::vector<std::vector<std::size_t>> Diagram::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

const DiagramEdge* Diagram::edge_between(std::size_t i, std::size_t j) const {
    for (const auto& e : edges)
        if ((e.from == i && e.to == j) || (e.from == j && e.to == i)) return &e;
    return nullptr;
}

namespace {

void check_sign_skew(const Matrix& b) {
    std::size_t n = b.cols();
    if (b.rows() < n) throw ShapeError("matrix has fewer rows than columns");
    for (std::size_t i = 0; i < n; ++i) {
        if (!b(i, i).is_zero())
            throw NotSkewSymmetrizable(i, i, "nonzero diagonal entry at (" + std::to_string(i + 1) + "," +
                                                 std::to_string(i + 1) + ")");
        for (std::size_t j = i + 1; j < n; ++j) {
            int s = b(i, j).sign(), t = b(j, i).sign();
            if (s != -t)
                throw NotSkewSymmetrizable(i, j, "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                     ") and (" + std::to_string(j + 1) + "," +
                                                     std::to_string(i + 1) + ") are not of opposite sign");
        }
    }
}

}  // namespace

Diagram diagram(const Matrix& b) {
    check_sign_skew(b);
    Diagram d;
    d.n = b.cols();
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.n; ++j)
            if (arrow_points_forward(b(i, j))) d.edges.push_back({i, j, abs(b(i, j) * b(j, i)), b(i, j), b(j, i)});
    return d;
}

std::vector<std::vector<std::size_t>> components(const Matrix& b) {
    std::size_t n = b.cols();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = static_cast<int>(out.size() - 1);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            out.back().push_back(v);
            for (std::size_t w = 0; w < n; ++w)
                if (comp[w] < 0 && (!b(v, w).is_zero() || !b(w, v).is_zero())) {
                    comp[w] = comp[s];
                    q.push(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::vector<Integer> skew_symmetrizer(const Matrix& b) {
    check_sign_skew(b);
    std::size_t n = b.cols();
    std::vector<mpq_class> d(n, mpq_class(0));
    std::vector<Integer> out(n);
    for (const auto& comp : components(b)) {
        d[comp.front()] = 1;
        std::queue<std::size_t> q;
        q.push(comp.front());
        std::vector<bool> seen(n, false);
        seen[comp.front()] = true;
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop();
            for (std::size_t j : comp) {
                if (b(i, j).is_zero()) continue;
                // d_j = -d_i b_ij / b_ji
                mpq_class dj = -d[i] * mpq_class(b(i, j).to_mpz()) / mpq_class(b(j, i).to_mpz());
                if (!seen[j]) {
                    seen[j] = true;
                    d[j] = dj;
                    q.push(j);
                } else if (d[j] != dj) {
                    throw NotSkewSymmetrizable(i, j, "no symmetrizer: ratio conflict at pair (" +
                                                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
            }
        }
        mpz_class den = 1, num = 0;
        for (std::size_t v : comp) den = lcm(den, mpz_class(d[v].get_den()));
        for (std::size_t v : comp) num = gcd(num, mpz_class(d[v] * den));
        for (std::size_t v : comp) out[v] = Integer(mpz_class(d[v] * den / num));
    }
    return out;
}

bool is_skew_symmetrizable(const Matrix& b) {
    try {
        skew_symmetrizer(b);
        return true;
    } catch (const NotSkewSymmetrizable&) {
        return false;
    }
}

bool is_skew_symmetric(const Matrix& b) {
    if (b.rows() < b.cols()) return false;
    for (std::size_t i = 0; i < b.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != -b(j, i)) return false;
    return true;
}

// ---- lattice ------------------------------------------------------------

namespace {

void row_axpy(Matrix& a, std::size_t dst, const Integer& q, std::size_t src) {
    // row dst -= q * row src
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(src, j).is_zero()) a(dst, j) -= q * a(src, j);
}

void row_swap(Matrix& a, std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(x, j), a(y, j));
}

void row_negate(Matrix& a, std::size_t x) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(x, j) = -a(x, j);
}

}  // namespace

HermiteResult hermite_normal_form(const Matrix& a) {
    HermiteResult r{a, Matrix::identity(a.rows()), {}};
    Matrix& h = r.h;
    Matrix& u = r.u;
    std::size_t m = a.rows(), n = a.cols();
    std::size_t prow = 0;
    for (std::size_t col = 0; col < n && prow < m; ++col) {
        // Euclid on the column: bring the smallest nonzero entry up and reduce.
        while (true) {
            std::size_t best = m;
            for (std::size_t i = prow; i < m; ++i)
                if (!h(i, col).is_zero() && (best == m || abs(h(i, col)) < abs(h(best, col)))) best = i;
            if (best == m) break;
            if (best != prow) {
                row_swap(h, best, prow);
                row_swap(u, best, prow);
            }
            bool done = true;
            for (std::size_t i = prow + 1; i < m; ++i) {
                if (h(i, col).is_zero()) continue;
                Integer q = h(i, col) / h(prow, col);
                row_axpy(h, i, q, prow);
                row_axpy(u, i, q, prow);
                if (!h(i, col).is_zero()) done = false;
            }
            if (done) break;
        }
        if (h(prow, col).is_zero()) continue;
        if (h(prow, col).sign() < 0) {
            row_negate(h, prow);
            row_negate(u, prow);
        }
        for (std::size_t i = 0; i < prow; ++i) {
            Integer q = floor_div(h(i, col), h(prow, col));
            if (q.is_zero()) continue;
            row_axpy(h, i, q, prow);
            row_axpy(u, i, q, prow);
        }
        r.pivots.push_back(col);
        ++prow;
    }
    return r;
}

bool full_z_rank(const Matrix& b) {
    HermiteResult r = hermite_normal_form(b);
    if (r.pivots.size() != b.cols()) return false;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        if (!r.h(i, r.pivots[i]).is_one()) return false;
    return true;
}

namespace {

std::optional<std::vector<Integer>> solve_with(const HermiteResult& r, std::vector<Integer> v) {
    std::size_t m = r.h.rows();
    std::vector<Integer> c(m);
    for (std::size_t p = 0; p < r.pivots.size(); ++p) {
        std::size_t col = r.pivots[p];
        if (v[col].is_zero()) continue;
        if (!(v[col] % r.h(p, col)).is_zero()) return std::nullopt;
        Integer q = v[col] / r.h(p, col);
        c[p] = q;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!r.h(p, j).is_zero()) v[j] -= q * r.h(p, j);
    }
    for (const auto& x : v)
        if (!x.is_zero()) return std::nullopt;
    // coefficients on the original rows: c * U
    std::vector<Integer> out(m);
    for (std::size_t p = 0; p < m; ++p) {
        if (c[p].is_zero()) continue;
        for (std::size_t i = 0; i < m; ++i)
            if (!r.u(p, i).is_zero()) out[i] += c[p] * r.u(p, i);
    }
    return out;
}

}  // namespace

std::optional<std::vector<Integer>> solve_in_row_lattice(const Matrix& a, const std::vector<Integer>& v) {
    if (v.size() != a.cols()) throw ShapeError("vector length does not match column count");
    return solve_with(hermite_normal_form(a), v);
}

bool rows_in_z_span(const Matrix& sub, const Matrix& sup) {
    if (sub.cols() != sup.cols())
        throw ShapeError("column counts differ (" + std::to_string(sub.cols()) + " vs " + std::to_string(sup.cols()) +
                         ")");
    HermiteResult r = hermite_normal_form(sup);
    for (std::size_t i = 0; i < sub.rows(); ++i)
        if (!solve_with(r, sub.row(i))) return false;
    return true;
}

std::optional<Matrix> psi_factor(const Matrix& circ, const Matrix& bar) {
    std::size_t n = circ.cols();
    if (bar.cols() != n || circ.rows() < n || bar.rows() < n)
        throw PreconditionError("psi_factor needs matrices with equal column counts and at least n rows");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (circ(i, j) != bar(i, j)) throw PreconditionError("psi_factor: top square blocks differ");
    std::size_t m = circ.rows(), mb = bar.rows();
    // Frozen rows go first so the elimination prefers them as pivots.
    std::vector<std::size_t> order;
    for (std::size_t i = n; i < m; ++i) order.push_back(i);
    for (std::size_t i = 0; i < n; ++i) order.push_back(i);
    Matrix a(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j < n; ++j) a(r, j) = circ(order[r], j);
    HermiteResult hr = hermite_normal_form(a);

    Matrix psi(mb, m);
    for (std::size_t i = 0; i < n; ++i) psi(i, i) = 1;
    for (std::size_t i = n; i < mb; ++i) {
        auto c = solve_with(hr, bar.row(i));
        if (!c) return std::nullopt;
        for (std::size_t r = 0; r < m; ++r) psi(i, order[r]) = (*c)[r];
    }
    if (psi * circ != bar) throw InternalError("psi_factor: verification of Psi * B failed");
    return psi;
}

// ---- formats ------------------------------------------------------------

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Integer>> rows;
    long long m = -1, n = -1;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (m < 0) {
            if (tok.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected 'm n'");
            m = to_int(Integer::parse(tok[0]));
            n = to_int(Integer::parse(tok[1]));
            if (m < 0 || n < 0 || m < n) throw ParseError("need m >= n >= 0 in header");
            continue;
        }
        if (static_cast<long long>(tok.size()) != n)
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries");
        std::vector<Integer> row;
        for (const auto& t : tok) row.push_back(Integer::parse(t));
        rows.push_back(std::move(row));
    }
    if (m < 0) throw ParseError("empty matrix text");
    if (static_cast<long long>(rows.size()) != m)
        throw ParseError("expected " + std::to_string(m) + " rows, found " + std::to_string(rows.size()));
    return Matrix::from_rows(rows, static_cast<std::size_t>(n));
}

std::string format_matrix(const Matrix& b) {
    std::ostringstream os;
    os << b.rows() << ' ' << b.cols() << '\n';
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) os << (j ? " " : "") << b(i, j);
        os << '\n';
    }
    return os.str();
}

Matrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("n_mutable") || !j.contains("rows")) throw ParseError("JSON matrix needs n_mutable and rows");
    std::size_t n = j["n_mutable"].get<std::size_t>();
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j["rows"]) {
        std::vector<Integer> row;
        for (const auto& x : r) {
            if (x.is_string())
                row.push_back(Integer::parse(x.get<std::string>()));
            else
                row.emplace_back(x.get<long long>());
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() < n) throw ParseError("fewer rows than n_mutable");
    return Matrix::from_rows(rows, n);
}

std::string matrix_to_json(const Matrix& b) {
    nlohmann::json j;
    j["n_mutable"] = b.cols();
    j["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (std::size_t k = 0; k < b.cols(); ++k) {
            const Integer& x = b(i, k);
            if (x.is_small())
                r.push_back(x.small());
            else
                r.push_back(x.str());
        }
        j["rows"].push_back(r);
    }
    return j.dump();
}

Matrix type_b_matrix(std::size_t n) {
    if (n < 2) throw PreconditionError("type B needs rank >= 2");
    Matrix b(n, n);
    b(0, 1) = -2;
    b(1, 0) = 1;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        b(i, i + 1) = -1;
        b(i + 1, i) = 1;
    }
    return b;
}

Matrix type_c_matrix(std::size_t n) {
    if (n < 2) throw PreconditionError("type C needs rank >= 2");
    Matrix b(n, n);
    b(0, 1) = -1;
    b(1, 0) = 2;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        b(i, i + 1) = -1;
        b(i + 1, i) = 1;
    }
    return b;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) throw ShapeError("block_diagonal takes square matrices");
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

}  // namespace cluster
