#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cluster/integer.hpp"

namespace cluster {

// Dense integer matrix, row-major. Used for extended exchange matrices
// (rows() = m, cols() = n mutable indices) and for plain integer matrices.
// All indices are 0-based.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    bool empty() const { return m_ == 0 || n_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<Integer>& data() const { return a_; }

    std::vector<Integer> row(std::size_t i) const;
    Matrix top_square() const;  // rows 0..n-1
    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    // Lexicographic on (rows, cols, entries row-major).
    friend bool operator<(const Matrix& a, const Matrix& b);

    std::size_t hash() const;

private:
    std::size_t m_ = 0, n_ = 0;
    std::vector<Integer> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// ---- exchange-matrix operations ----------------------------------------

// mu_k. Throws IndexError when k >= cols().
Matrix mutate(const Matrix& b, std::size_t k);
Matrix mutate_sequence(Matrix b, const std::vector<std::size_t>& ks);

// Rows I, columns I ∩ [0, n). I is sorted and deduplicated first.
Matrix restrict_matrix(const Matrix& b, std::vector<std::size_t> index_set);

// a_ii = 2, a_ij = -|b_ij|, on the top square.
Matrix cartan_counterpart(const Matrix& b);

struct DiagramEdge {
    std::size_t from, to;
    Integer weight;     // |b_ij b_ji|
    Integer b_fwd;      // b_{from,to} (> 0)
    Integer b_back;     // b_{to,from} (< 0)
};

struct Diagram {
    std::size_t n = 0;
    std::vector<DiagramEdge> edges;  // sorted by (from, to)

    std::vector<std::vector<std::size_t>> adjacency() const;  // undirected
    const DiagramEdge* edge_between(std::size_t i, std::size_t j) const;
};

// The single place where arrow orientation is decided: i -> j iff b_ij > 0.
inline bool arrow_points_forward(const Integer& b_ij) { return b_ij.sign() > 0; }

// Requires sign-skew-symmetry of the top square (b_ij, b_ji zero together and
// of opposite signs); throws NotSkewSymmetrizable otherwise.
Diagram diagram(const Matrix& b);

// Connected components (vertex lists, each sorted) of the top square.
std::vector<std::vector<std::size_t>> components(const Matrix& b);

// Minimal positive d with d_i b_ij = -d_j b_ji; each component has gcd 1.
std::vector<Integer> skew_symmetrizer(const Matrix& b);
bool is_skew_symmetrizable(const Matrix& b);
bool is_skew_symmetric(const Matrix& b);

// ---- integer lattice utilities ------------------------------------------

struct HermiteResult {
    Matrix h;             // row-style Hermite normal form, zero rows last
    Matrix u;             // unimodular, u * a = h
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

HermiteResult hermite_normal_form(const Matrix& a);

bool full_z_rank(const Matrix& b);
bool rows_in_z_span(const Matrix& sub, const Matrix& sup);
// Coefficients c with c * a = v, or nullopt when v is outside the row lattice.
std::optional<std::vector<Integer>> solve_in_row_lattice(const Matrix& a, const std::vector<Integer>& v);

// Psi = [[Id, 0], [Psi1, Psi2]] with Psi * circ = bar, or nullopt.
std::optional<Matrix> psi_factor(const Matrix& circ, const Matrix& bar);

// ---- text formats -------------------------------------------------------

// Format v1: "m n" then m rows; '#' lines are comments.
Matrix parse_matrix(const std::string& text);
std::string format_matrix(const Matrix& b);
Matrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const Matrix& b);

// Standard matrices.
Matrix type_b_matrix(std::size_t n);
Matrix type_c_matrix(std::size_t n);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

}  // namespace cluster

template <>
struct std::hash<cluster::Matrix> {
    std::size_t operator()(const cluster::Matrix& m) const { return m.hash(); }
};
