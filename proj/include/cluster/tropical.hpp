#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace cluster {

// p + q*sqrt(delta) with rational p, q and a fixed integer delta >= 0.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(mpq_class p, mpq_class q, mpz_class delta);
    static QuadraticNumber rational(const mpq_class& p, const mpz_class& delta = 0) { return {p, 0, delta}; }

    const mpq_class& p() const { return p_; }
    const mpq_class& q() const { return q_; }
    const mpz_class& delta() const { return delta_; }

    int sign() const;
    double approx() const;
    std::string str() const;

    QuadraticNumber operator-() const { return {-p_, -q_, delta_}; }
    friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
    friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
    friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);

    friend int compare(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign(); }
    friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) == 0; }
    friend bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) < 0; }
    friend bool operator>(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) > 0; }

private:
    void normalize();
    mpq_class p_ = 0, q_ = 0;
    mpz_class delta_ = 0;
};

// Tropical semifield u^r with r in Q(sqrt(delta)): oplus is max, times is +.
struct TropicalMonomial {
    QuadraticNumber exponent;

    friend TropicalMonomial operator*(const TropicalMonomial& a, const TropicalMonomial& b) {
        return {a.exponent + b.exponent};
    }
    friend TropicalMonomial oplus(const TropicalMonomial& a, const TropicalMonomial& b) {
        return a.exponent < b.exponent ? b : a;
    }
    friend TropicalMonomial operator/(const TropicalMonomial& a, const TropicalMonomial& b) {
        return {a.exponent - b.exponent};
    }
    TropicalMonomial power(long k) const {
        return {exponent * QuadraticNumber::rational(mpq_class(k), exponent.delta())};
    }
};

// lambda = ((bc-2) + sqrt((bc-2)^2 - 4)) / 2, the larger root of
// lambda^2 - (bc-2) lambda + 1 = 0.
QuadraticNumber lambda_root(long b, long c);

// psi(z_1), ..., psi(z_steps) for the rank-2 pattern with bc >= 4.
// Throws PreconditionError when bc <= 3.
std::vector<TropicalMonomial> tropical_orbit(long b, long c, std::size_t steps);

}  // namespace cluster
