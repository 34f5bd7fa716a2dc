#pragma once

#include <string>
#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/matrix.hpp"

namespace cluster {

// Extended cluster plus extended exchange matrix. cluster[i] is the entry for
// row i; rows 0..n-1 are mutable, the rest frozen.
struct Seed {
    Matrix matrix;
    std::vector<LaurentPolynomial> cluster;

    std::size_t n_mutable() const { return matrix.cols(); }
    std::size_t n_total() const { return matrix.rows(); }

    friend bool operator==(const Seed& a, const Seed& b) { return a.matrix == b.matrix && a.cluster == b.cluster; }
    friend bool operator!=(const Seed& a, const Seed& b) { return !(a == b); }
};

// cluster[i] = x_{i+1} in m variables.
Seed initial_seed(const Matrix& b);

// The two exchange monomials of direction k over the full extended cluster.
std::pair<LaurentPolynomial, LaurentPolynomial> exchange_monomials(const Seed& s, std::size_t k);

// Throws IndexError for a bad k and LaurentViolation if the division is inexact.
Seed seed_mutate(const Seed& s, std::size_t k);
Seed seed_mutate_sequence(Seed s, const std::vector<std::size_t>& ks);

// Indices in F (mutable) become frozen. Remaining mutables keep their
// relative order; all frozen rows are then listed in the global Laurent
// order of their cluster entries, which makes freezing order-independent.
Seed freeze(const Seed& s, const std::vector<std::size_t>& f);

// Requires b_ik = 0 for i outside I and mutable k inside I.
Seed restrict_seed(const Seed& s, const std::vector<std::size_t>& index_set);

// Drops frozen rows F and sets their variables to 1. Each entry in F must be
// a single initial variable x_v.
Seed trivialize(const Seed& s, const std::vector<std::size_t>& f);

// Permute mutable indices: new index p takes old index perm[p].
Seed permute_seed(const Seed& s, const std::vector<std::size_t>& perm);
Matrix permute_mutable(const Matrix& b, const std::vector<std::size_t>& perm);

// Mutable entries sorted by the global Laurent order; ties broken by the
// lexicographically smallest matrix.
Seed canonicalize(const Seed& s);

std::string format_seed(const Seed& s);
Seed parse_seed(const std::string& text);

}  // namespace cluster
