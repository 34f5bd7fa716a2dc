#include "cluster/seed.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cluster/error.hpp"

namespace cluster {

Seed initial_seed(const Matrix& b) {
    Seed s{b, {}};
    for (std::size_t i = 0; i < b.rows(); ++i) s.cluster.push_back(LaurentPolynomial::variable(b.rows(), i));
    return s;
}

std::pair<LaurentPolynomial, LaurentPolynomial> exchange_monomials(const Seed& s, std::size_t k) {
    std::size_t nv = s.cluster.empty() ? 0 : s.cluster.front().nvars();
    LaurentPolynomial plus = LaurentPolynomial::constant(nv, 1), minus = plus;
    for (std::size_t i = 0; i < s.n_total(); ++i) {
        const Integer& b = s.matrix(i, k);
        if (b.is_zero()) continue;
        unsigned e = static_cast<unsigned>(to_int(abs(b)));
        LaurentPolynomial f = s.cluster[i].pow(e);
        if (b.sign() > 0)
            plus = plus * f;
        else
            minus = minus * f;
    }
    return {plus, minus};
}

Seed seed_mutate(const Seed& s, std::size_t k) {
    if (k >= s.n_mutable())
        throw IndexError("mutation index " + std::to_string(k + 1) + " outside mutable range 1.." +
                         std::to_string(s.n_mutable()));
    auto [plus, minus] = exchange_monomials(s, k);
    Seed out{mutate(s.matrix, k), s.cluster};
    try {
        out.cluster[k] = LaurentPolynomial::exact_div(plus + minus, s.cluster[k]);
    } catch (const NotDivisible& e) {
        throw LaurentViolation(std::string("exchange relation in direction ") + std::to_string(k + 1) +
                               " is not Laurent: " + e.what());
    }
    return out;
}

Seed seed_mutate_sequence(Seed s, const std::vector<std::size_t>& ks) {
    for (std::size_t k : ks) s = seed_mutate(s, k);
    return s;
}

namespace {

// Reorder rows by `rows` and keep the first `ncols` of the listed rows as columns.
Seed reindex(const Seed& s, const std::vector<std::size_t>& rows, std::size_t ncols,
             const std::vector<std::size_t>& colsrc) {
    Seed out{Matrix(rows.size(), ncols), {}};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < ncols; ++c) out.matrix(r, c) = s.matrix(rows[r], colsrc[c]);
        out.cluster.push_back(s.cluster[rows[r]]);
    }
    return out;
}

}  // namespace

Seed freeze(const Seed& s, const std::vector<std::size_t>& f) {
    std::size_t n = s.n_mutable();
    std::vector<bool> frozen(s.n_total(), false);
    for (std::size_t i : f) {
        if (i >= n) throw PreconditionError("freeze: index " + std::to_string(i + 1) + " is not mutable");
        frozen[i] = true;
    }
    for (std::size_t i = n; i < s.n_total(); ++i) frozen[i] = true;
    std::vector<std::size_t> rows, fro;
    for (std::size_t i = 0; i < s.n_total(); ++i) (frozen[i] ? fro : rows).push_back(i);
    std::size_t ncols = rows.size();
    std::stable_sort(fro.begin(), fro.end(),
                     [&](std::size_t a, std::size_t b) { return compare(s.cluster[a], s.cluster[b]) < 0; });
    std::vector<std::size_t> colsrc = rows;
    rows.insert(rows.end(), fro.begin(), fro.end());
    return reindex(s, rows, ncols, colsrc);
}

Seed restrict_seed(const Seed& s, const std::vector<std::size_t>& index_set) {
    std::vector<std::size_t> idx = index_set;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.empty()) throw PreconditionError("restriction to an empty index set");
    if (idx.back() >= s.n_total()) throw IndexError("restriction index out of range");
    std::vector<bool> in(s.n_total(), false);
    for (std::size_t i : idx) in[i] = true;
    for (std::size_t k : idx) {
        if (k >= s.n_mutable()) continue;
        for (std::size_t i = 0; i < s.n_total(); ++i)
            if (!in[i] && !s.matrix(i, k).is_zero())
                throw RestrictionViolation(i, k,
                                           "restrict_seed: b_" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                                               " = " + s.matrix(i, k).str() +
                                               " couples a variable outside the index set");
    }
    std::vector<std::size_t> cols;
    for (std::size_t i : idx)
        if (i < s.n_mutable()) cols.push_back(i);
    return reindex(s, idx, cols.size(), cols);
}

Seed trivialize(const Seed& s, const std::vector<std::size_t>& f) {
    std::size_t n = s.n_mutable();
    std::vector<bool> drop(s.n_total(), false);
    std::size_t nv = s.cluster.empty() ? 0 : s.cluster.front().nvars();
    std::vector<int> map(nv);
    std::iota(map.begin(), map.end(), 0);
    for (std::size_t i : f) {
        if (i < n || i >= s.n_total())
            throw PreconditionError("trivialize: index " + std::to_string(i + 1) + " is not frozen");
        const LaurentPolynomial& x = s.cluster[i];
        int var = -1;
        if (x.is_monomial() && x.coeff(0).is_one()) {
            int ones = 0;
            for (std::size_t v = 0; v < nv; ++v) {
                if (x.exponent(0)[v] == 1) {
                    ++ones;
                    var = static_cast<int>(v);
                } else if (x.exponent(0)[v] != 0) {
                    ones = 2;
                }
            }
            if (ones != 1) var = -1;
        }
        if (var < 0) throw PreconditionError("trivialize: frozen entry " + std::to_string(i + 1) + " is not a variable");
        map[var] = -1;
        drop[i] = true;
    }
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < s.n_total(); ++i)
        if (!drop[i]) rows.push_back(i);
    for (std::size_t i = 0; i < n; ++i) cols.push_back(i);
    Seed out = reindex(s, rows, n, cols);
    for (auto& x : out.cluster) x = x.remap(map, nv);
    return out;
}

Matrix permute_mutable(const Matrix& b, const std::vector<std::size_t>& perm) {
    std::size_t n = b.cols();
    if (perm.size() != n) throw ShapeError("permutation has wrong length");
    Matrix out(b.rows(), n);
    auto src = [&](std::size_t r) { return r < n ? perm[r] : r; };
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = b(src(r), perm[c]);
    return out;
}

Seed permute_seed(const Seed& s, const std::vector<std::size_t>& perm) {
    Seed out{permute_mutable(s.matrix, perm), s.cluster};
    for (std::size_t p = 0; p < perm.size(); ++p) out.cluster[p] = s.cluster[perm[p]];
    return out;
}

Seed canonicalize(const Seed& s) {
    std::size_t n = s.n_mutable();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return compare(s.cluster[a], s.cluster[b]) < 0; });
    // tie groups of equal cluster entries
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && s.cluster[perm[j]] == s.cluster[perm[i]]) ++j;
        if (j - i > 1) groups.emplace_back(i, j);
        i = j;
    }
    if (groups.empty()) return permute_seed(s, perm);

    for (auto [a, b] : groups) std::sort(perm.begin() + a, perm.begin() + b);
    std::vector<std::size_t> best = perm;
    Matrix best_m = permute_mutable(s.matrix, perm);
    // odometer over the per-group permutations
    while (true) {
        std::size_t g = 0;
        for (; g < groups.size(); ++g) {
            auto [a, b] = groups[g];
            if (std::next_permutation(perm.begin() + a, perm.begin() + b)) break;
        }
        if (g == groups.size()) break;
        Matrix m = permute_mutable(s.matrix, perm);
        if (m < best_m) {
            best_m = std::move(m);
            best = perm;
        }
    }
    return permute_seed(s, best);
}

std::string format_seed(const Seed& s) {
    std::string out = format_matrix(s.matrix);
    for (const auto& x : s.cluster) out += x.str() + "\n";
    return out;
}

Seed parse_seed(const std::string& text) {
    std::istringstream in(text);
    std::string line, head;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty seed text");
    std::istringstream hs(lines[0]);
    std::size_t m = 0, n = 0;
    if (!(hs >> m >> n)) throw ParseError("seed text: bad matrix header");
    if (lines.size() != 1 + 2 * m) throw ParseError("seed text: expected " + std::to_string(m) + " matrix rows and " +
                                                    std::to_string(m) + " cluster entries");
    std::string mtext;
    for (std::size_t i = 0; i <= m; ++i) mtext += lines[i] + "\n";
    Seed s{parse_matrix(mtext), {}};
    for (std::size_t i = 0; i < m; ++i) s.cluster.push_back(LaurentPolynomial::parse(lines[1 + m + i], m));
    return s;
}

}  // namespace cluster
