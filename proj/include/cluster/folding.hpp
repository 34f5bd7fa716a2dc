#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cluster/error.hpp"
#include "cluster/explore.hpp"
#include "cluster/matrix.hpp"
#include "cluster/seed.hpp"

namespace cluster {

// Permutation group on the vertices 0..m-1 of a quiver with n mutable
// vertices, given by generators. Orbits are sorted by their smallest
// element, which puts the mutable orbits first.
class GroupAction {
public:
    GroupAction() = default;
    // Throws PreconditionError when a generator is not a permutation of 0..m-1.
    GroupAction(std::size_t m, std::size_t n, std::vector<std::vector<std::size_t>> generators);

    std::size_t size() const { return m_; }
    std::size_t n_mutable() const { return n_; }
    const std::vector<std::vector<std::size_t>>& generators() const { return gens_; }
    const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }
    std::size_t orbit_of(std::size_t v) const { return orbit_of_[v]; }
    // Orbits made of mutable vertices; only meaningful when condition (1) holds.
    std::size_t n_mutable_orbits() const;

private:
    std::size_t m_ = 0, n_ = 0;
    std::vector<std::vector<std::size_t>> gens_;
    std::vector<std::vector<std::size_t>> orbits_;
    std::vector<std::size_t> orbit_of_;
};

// Parses "2 1 3 ..." (1-based images) into a 0-based permutation.
std::vector<std::size_t> parse_permutation(const std::string& text);

struct Admissibility {
    bool ok = true;
    int condition = 0;          // 1..4 for the first failure
    std::size_t i = 0, j = 0;   // offending indices (0-based)
    std::size_t g = 0;          // generator, for condition 2
    std::string message() const;
};

// Conditions, checked in order:
//   (1) orbits are all-mutable or all-frozen
//   (2) b_ij = b_{g(i), g(j)} for every generator
//   (3) b_ii' = 0 for mutable i ~ i'
//   (4) b_ij b_i'j >= 0 for i ~ i' and mutable j
Admissibility is_admissible(const Matrix& b, const GroupAction& g);

// Rows: all orbits; columns: mutable orbits. Throws FoldingError.
Matrix fold_matrix(const Matrix& b, const GroupAction& g);

class FoldingError : public PreconditionError {
public:
    FoldingError(const Admissibility& a) : PreconditionError(a.message()), info(a) {}
    Admissibility info;
};

struct OrbitMutation {
    Matrix matrix;
    bool admissible = false;
    Admissibility check;
};

// Product of mu_k over the orbit K (an index into g.orbits()). Throws
// IndexError when K is not a mutable orbit and PreconditionError when K is not
// totally disconnected, since then the product depends on the order.
OrbitMutation orbit_mutate(const Matrix& b, const GroupAction& g, std::size_t orbit);

struct Foldability {
    enum Kind { Foldable, Counterexample, Unknown } kind = Unknown;
    std::vector<std::size_t> word;  // orbit indices, for Counterexample
    std::optional<Admissibility> failure;
    std::size_t states = 0;         // up to G-equivariant isomorphism
    std::vector<std::size_t> depth_profile;
};
const char* foldability_name(Foldability::Kind k);

// BFS over orbit-mutation words. Uses opt.max_depth, opt.max_states and
// opt.threads. The input itself must be admissible (else Counterexample with
// the empty word).
Foldability global_foldability(const Matrix& b, const GroupAction& g, const ExploreOptions& opt = {});

struct FoldedPattern {
    Matrix folded;
    Seed initial;          // one variable per orbit
    SeedPattern pattern;   // the folded seed pattern
};

// Requires global foldability; throws FoldingError / PreconditionError.
FoldedPattern fold_seed_pattern(const Matrix& b, const GroupAction& g, const ExploreOptions& opt = {});

// Walks labeled seeds reached by orbit words and compares, at every step, the
// unfolded seed under x_i -> x_[i] against the folded seed mutated along the
// same word (matrix and cluster). Returns the number of seeds compared;
// throws InternalError on the first mismatch.
std::size_t check_folded_seeds(const Matrix& b, const GroupAction& g, std::size_t max_states = 100000);

// For admissible input: every block {b_ij : i in I, j in J} with J mutable
// is sign-coherent.
bool sign_coherent(const Matrix& b, const GroupAction& g);

// ---- worked examples (0-based vertex order noted in folding.cpp) -----------

struct FoldingExample {
    Matrix quiver;
    GroupAction action;
};

FoldingExample d4_affine_example();       // folds to a 3x3 matrix with two 2s
FoldingExample e6_f4_example();
FoldingExample d4_g2_example();
FoldingExample hexagon_cycle_example();   // oriented 6-cycle, i -> i+3
FoldingExample a3_b2_example();           // 1 <- 2 -> 3
FoldingExample central_a_example(std::size_t n);  // A_{2n-1} -> C_n
FoldingExample tagged_d_example(std::size_t n);   // D_{n+1} -> B_n

}  // namespace cluster
