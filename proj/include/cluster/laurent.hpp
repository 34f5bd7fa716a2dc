#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cluster/integer.hpp"

namespace cluster {

// Integer Laurent polynomial in a fixed number of variables x1..xm.
// Terms are stored densely (one int32 exponent per variable) and kept sorted
// in descending graded-lex order, so the leading term comes first and
// equal polynomials have identical storage.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(std::size_t nvars = 0) : nv_(nvars) {}

    static LaurentPolynomial constant(std::size_t nvars, const Integer& c);
    static LaurentPolynomial variable(std::size_t nvars, std::size_t i);  // 0-based
    static LaurentPolynomial monomial(std::size_t nvars, const std::vector<int32_t>& exps, const Integer& c = 1);
    // Parses "3*x1^2*x2^-1 + 1". With nvars == 0 the count is inferred.
    static LaurentPolynomial parse(const std::string& text, std::size_t nvars = 0);

    std::size_t nvars() const { return nv_; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    const Integer& coeff(std::size_t t) const { return coeffs_[t]; }
    const int32_t* exponent(std::size_t t) const { return exps_.data() + t * nv_; }
    int total_degree(std::size_t t) const;

    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial pow(unsigned e) const;

    // Quotient q with q * b == a; throws DivisionByZero or NotDivisible.
    static LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);

    // Variable substitution x_v -> x_{map[v]} (map[v] < 0 means x_v -> 1).
    LaurentPolynomial remap(const std::vector<int>& map, std::size_t new_nvars) const;

    // Sum of coefficients (value at x = (1,...,1)).
    Integer value_at_ones() const;

    std::string str() const;
    std::size_t hash() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.nv_ == b.nv_ && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    // Global total order: variable count, term count, then terms one by one
    // (exponent in graded-lex, then coefficient).
    friend int compare(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) { return compare(a, b) < 0; }

private:
    friend class TermTable;
    std::size_t nv_;
    std::vector<int32_t> exps_;
    std::vector<Integer> coeffs_;
};

LaurentPolynomial lp_add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial lp_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial lp_exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Graded-lex comparison of exponent vectors of length n: >0 when a is larger.
int grlex_compare(const int32_t* a, const int32_t* b, std::size_t n);

}  // namespace cluster

template <>
struct std::hash<cluster::LaurentPolynomial> {
    std::size_t operator()(const cluster::LaurentPolynomial& p) const { return p.hash(); }
};
