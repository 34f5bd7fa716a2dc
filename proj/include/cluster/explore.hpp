#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/matrix.hpp"
#include "cluster/seed.hpp"

namespace cluster {

enum class ExploreStatus { Closed, AbortedInfiniteWitness, DepthCapped };

const char* status_name(ExploreStatus s);

// A pair with |b_ij b_ji| >= 4, found in the matrix mu_word(B) (0-based
// indices, word applied left to right).
struct Witness {
    std::size_t i = 0, j = 0;
    Integer product;
    std::size_t depth = 0;
    std::vector<std::size_t> word;
};

struct ExploreOptions {
    std::optional<std::size_t> max_depth;
    std::size_t max_states = 1000000;  // hitting this also reports DepthCapped
    unsigned threads = 1;
    bool abort_on_witness = true;  // matrix classes only
    bool labeled = false;          // seed patterns: count labeled seeds
    bool keep_seeds = false;       // seed patterns: materialize canonical seeds
};

struct ExplorationReport {
    ExploreStatus status = ExploreStatus::Closed;
    std::size_t count = 0;      // seeds or matrices
    std::size_t variables = 0;  // distinct mutable cluster variables (seed patterns)
    std::vector<std::size_t> depth_profile;  // cumulative, one entry per BFS depth
    std::optional<Witness> witness;
    std::size_t divisions = 0;  // exact divisions performed (all verified)
};

// {"status":..., "seeds"|"matrices":..., "variables":..., "depth_profile":[...]}
std::string report_to_json(const ExplorationReport& r, bool seeds);

struct MatrixClass {
    ExplorationReport report;
    std::vector<Matrix> canonical;       // canonical forms, BFS order
    std::vector<Matrix> representative;  // mu_word(B) for each member
    std::vector<std::size_t> parent, via;  // BFS tree (parent of 0 is 0)
    std::vector<std::size_t> word(std::size_t member) const;
};

// BFS over the mutation class of B (rows >= cols; frozen rows ride along)
// up to relabelling of mutable indices. Throws NotSkewSymmetrizable.
MatrixClass explore_matrix_class(const Matrix& b, const ExploreOptions& opt = {});

struct SeedPattern {
    ExplorationReport report;
    std::vector<LaurentPolynomial> variables;  // mutable cluster variables, discovery order
    std::vector<Seed> seeds;                   // canonical seeds when keep_seeds
};

// BFS over seeds reachable from s0, deduplicated as unlabeled seeds.
SeedPattern explore_seed_pattern(const Seed& s0, const ExploreOptions& opt = {});

enum class Verdict { Yes, No, Unknown };
const char* verdict_name(Verdict v);

struct FiniteTypeDecision {
    enum Kind { Finite, Infinite, Unknown } kind = Unknown;
    std::size_t class_size = 0;
    std::optional<Witness> witness;
};

// Explores the class of the top square with abort on the first 2-infinite pair.
FiniteTypeDecision decide_finite_type(const Matrix& b, const ExploreOptions& opt = {});

struct EmbeddingResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<std::size_t> subset;  // I, in the labelling of mu_word(R)
    std::vector<std::size_t> word;
};

// Is the top square of q an induced restriction of some member of [r]?
EmbeddingResult is_embeddable(const Matrix& q, const Matrix& r, const ExploreOptions& opt = {});

Verdict mutation_equivalent(const Matrix& b1, const Matrix& b2, const ExploreOptions& opt = {});

// First pair (row-major, i < j) of the top square with |b_ij b_ji| >= 4.
std::optional<Witness> infinite_pair(const Matrix& b);

}  // namespace cluster
