#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cluster/matrix.hpp"

namespace cluster {

// Lexicographically minimal relabelling of the mutable indices of an extended
// matrix (frozen rows stay put). For skew-symmetric input this is a complete
// quiver-isomorphism invariant; in general it is one for simultaneous
// permutation of rows and columns.
struct CanonicalForm {
    Matrix matrix;                  // permute_mutable(b, perm)
    std::vector<std::size_t> perm;  // new index p holds old index perm[p]
};

CanonicalForm canonical_form(const Matrix& b);

// Same search, restricted to relabellings that commute with every generator
// (each generator is a permutation of 0..n-1 fixing frozen indices).
CanonicalForm equivariant_canonical_form(const Matrix& b, const std::vector<std::vector<std::size_t>>& centralizer);

// All permutations of 0..n-1 commuting with every generator. Brute force over
// orbits; intended for n <= 10.
std::vector<std::vector<std::size_t>> centralizer(std::size_t n, const std::vector<std::vector<std::size_t>>& gens);

// Quiver with mutable vertices 0..n-1 and frozen vertices n..m-1.
struct Quiver {
    std::size_t n_mutable = 0, n_total = 0;
    std::map<std::pair<std::size_t, std::size_t>, Integer> arrows;  // (i, j) -> multiplicity of i -> j

    Matrix to_matrix() const;
    static Quiver from_matrix(const Matrix& b);  // requires skew-symmetric top square
    void add_arrow(std::size_t i, std::size_t j, long long mult = 1);
};

}  // namespace cluster
