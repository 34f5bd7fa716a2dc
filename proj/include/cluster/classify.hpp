#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cluster/explore.hpp"
#include "cluster/matrix.hpp"

namespace cluster {

// One connected Cartan-Killing label, e.g. {'E', 6}.
struct DynkinComponent {
    char family = 'A';
    int rank = 1;
    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    friend bool operator==(const DynkinComponent& a, const DynkinComponent& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator<(const DynkinComponent& a, const DynkinComponent& b) {
        return a.family != b.family ? a.family < b.family : a.rank < b.rank;
    }
};

// Multiset of components, kept sorted.
struct DynkinType {
    std::vector<DynkinComponent> components;
    int rank() const;
    std::string str() const;  // "A1+A2", "E8"
    friend bool operator==(const DynkinType& a, const DynkinType& b) { return a.components == b.components; }
    friend bool operator!=(const DynkinType& a, const DynkinType& b) { return !(a == b); }
};

// "D4", "A1+A2"; C2 is read as B2. Throws ParseError / PreconditionError.
DynkinType parse_dynkin(const std::string& s);
void validate(const DynkinComponent& c);

std::vector<int> exponents(const DynkinComponent& c);
int coxeter_number(const DynkinComponent& c);

// (seeds, cluster variables): products of (e_i + h + 1)/(e_i + 1) and
// n(h + 2)/2, multiplied / added over components.
std::pair<Integer, Integer> count_type(const DynkinType& t);

// Weighted-graph match of each component against the finite list. B/C is
// read from the placement of the 2: |b_{v1 v2}| = 2 at the end vertex v1
// means B.
std::optional<DynkinType> match_dynkin(const Diagram& d);

struct ChordlessCycle {
    std::vector<std::size_t> vertices;  // in cycle order, smallest first
    bool cyclically_oriented = false;
};

std::vector<ChordlessCycle> chordless_cycles(const Diagram& d);

// Companion satisfying the sign condition on every chordless cycle, with all
// spanning-forest edges negative. None when some chordless cycle is not
// cyclically oriented.
std::optional<Matrix> signed_companion(const Matrix& b);

// Fraction-free leading principal minors.
std::vector<Integer> leading_minors(const Matrix& a);
Integer determinant(const Matrix& a);

// Symmetrizes with d (d_i a_ij) and applies Sylvester's criterion.
bool is_positive(const Matrix& a, const std::vector<Integer>& d);
bool is_positive(const Matrix& a);  // d from the sign pattern of a as a Cartan-like matrix

bool finite_type_criterion(const Matrix& b);

struct TypeResult {
    bool finite = false;
    std::optional<DynkinType> type;  // empty when infinite, or when the search was capped
};

TypeResult identify_type(const Matrix& b, const ExploreOptions& opt = {});

// ---- generators ----------------------------------------------------------

// Edge {i, j} with |b_ij| = wij and |b_ji| = wji, arrow i -> j.
struct WeightedEdge {
    std::size_t i, j;
    long long wij = 1, wji = 1;
};

// Orientation bit e flips edge e.
Matrix tree_matrix(std::size_t n, const std::vector<WeightedEdge>& edges, unsigned long long flip = 0);

// Edges of the standard shapes (0-based), weights placed as in the B_n and C_n
// matrices.
std::vector<WeightedEdge> dynkin_edges(const DynkinComponent& c);
Matrix dynkin_matrix(const DynkinComponent& c, unsigned long long flip = 0);

// T_{p,q,r}: center 0, then the three arms outward.
std::vector<WeightedEdge> t_edges(int p, int q, int r);
Matrix t_matrix(int p, int q, int r);

// S^s_{p,q,r}: cyclically oriented (s+3)-cycle 0 -> 1 -> ... -> s+2 -> 0 with
// arms of lengths p-1, q-1, r-1 at cycle vertices 0, 1, 2.
Matrix s_matrix(int p, int q, int r, int s);

// Extended Dynkin trees. label in {B, C, D, E, F, G}; for E the rank is 6..8,
// for F 4, for G 2 with `a` the second weight.
std::vector<WeightedEdge> extended_dynkin_edges(char family, int n, int a = 1);
std::size_t extended_dynkin_size(char family, int n);

// B(n) with b_{i,i+1} = -1 and b_{i,i+2} = 1 above the diagonal.
Matrix q_matrix(std::size_t n);
// A(n): a_ij = b_ij for i < j, symmetric, diagonal 2.
Matrix q_companion(std::size_t n);

// Triangulated rows x cols grid: bottom row 0..cols-1, next row above it.
// Arrows run right and up, diagonals from (r+1, c+1) down to (r, c).
// The 2 x 4 grid is of type E8.
Matrix grid_matrix(std::size_t rows, std::size_t cols);

}  // namespace cluster
