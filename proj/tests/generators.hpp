#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "cluster/folding.hpp"
#include "cluster/matrix.hpp"

namespace test {

// Random skew-symmetrizable n x n top block (random positive symmetrizer d,
// entries b_ij = s * d_j * t, b_ji = -s * d_i * t up to gcd) plus `frozen`
// random rows.
inline cluster::Matrix random_symmetrizable(std::mt19937& rng, std::size_t n, std::size_t frozen, int range = 2) {
    std::vector<long long> d(n);
    for (auto& x : d) x = 1 + static_cast<long long>(rng() % 2);
    cluster::Matrix b(n + frozen, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long long s = static_cast<long long>(rng() % (2 * range + 1)) - range;
            // d_i b_ij = -d_j b_ji with b_ij = s * d_j / g, b_ji = -s * d_i / g
            long long g = std::gcd(d[i], d[j]);
            b(i, j) = s * d[j] / g;
            b(j, i) = -s * d[i] / g;
        }
    for (std::size_t r = n; r < n + frozen; ++r)
        for (std::size_t j = 0; j < n; ++j) b(r, j) = static_cast<long long>(rng() % 5) - 2;
    return b;
}

// Straight from the case formulas, independent of the library routine.
inline cluster::Matrix mutate_oracle(const cluster::Matrix& b, std::size_t k) {
    cluster::Matrix out = b;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
                continue;
            }
            cluster::Integer p = b(i, k) * b(k, j);
            if (p.sign() > 0) out(i, j) = b(i, j) + cluster::Integer(b(i, k).sign()) * p;
        }
    return out;
}

// Random G-admissible quiver: one generator made of cycles of length 1..3
// inside the mutable and inside the frozen vertices; every orbit pair gets a
// sign, and G-orbits of vertex pairs get a magnitude.
inline cluster::FoldingExample random_admissible(std::mt19937_64& rng, std::size_t n, std::size_t frozen) {
    std::size_t m = n + frozen;
    std::vector<std::size_t> g(m);
    auto cycles = [&](std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> v(hi - lo);
        std::iota(v.begin(), v.end(), lo);
        std::shuffle(v.begin(), v.end(), rng);
        std::size_t p = 0;
        while (p < v.size()) {
            std::size_t len = std::min<std::size_t>(1 + rng() % 3, v.size() - p);
            for (std::size_t t = 0; t < len; ++t) g[v[p + t]] = v[p + (t + 1) % len];
            p += len;
        }
    };
    cycles(0, n);
    cycles(n, m);
    cluster::GroupAction act(m, n, {g});
    std::size_t no = act.orbits().size();
    std::vector<std::vector<int>> sign(no, std::vector<int>(no, 0));
    for (std::size_t I = 0; I < no; ++I)
        for (std::size_t J = I + 1; J < no; ++J) {
            sign[I][J] = rng() % 2 ? 1 : -1;
            sign[J][I] = -sign[I][J];
        }
    cluster::Matrix b(m, n);
    std::vector<std::vector<bool>> done(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (done[i][j] || i == j) continue;
            std::size_t I = act.orbit_of(i), J = act.orbit_of(j);
            if (I == J || (i >= n && j >= n)) continue;
            long long v = sign[I][J] * static_cast<long long>(rng() % 3);
            std::size_t a = i, c = j;
            do {
                done[a][c] = done[c][a] = true;
                if (c < n) b(a, c) = v;
                if (a < n) b(c, a) = -v;
                a = g[a];
                c = g[c];
            } while (a != i || c != j);
        }
    return {b, act};
}

}  // namespace test
