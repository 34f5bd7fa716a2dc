#include "cluster/tropical.hpp"

#include <cmath>
#include <sstream>

#include "cluster/error.hpp"

namespace cluster {

QuadraticNumber::QuadraticNumber(mpq_class p, mpq_class q, mpz_class delta)
    : p_(std::move(p)), q_(std::move(q)), delta_(std::move(delta)) {
    if (delta_ < 0) throw PreconditionError("quadratic field needs delta >= 0");
    normalize();
}

void QuadraticNumber::normalize() {
    p_.canonicalize();
    q_.canonicalize();
    if (delta_ == 0) q_ = 0;
}

namespace {

void same_field(const QuadraticNumber& a, const QuadraticNumber& b) {
    // Rationals (q == 0) mix freely with any field.
    if (a.q() != 0 && b.q() != 0 && a.delta() != b.delta())
        throw PreconditionError("quadratic numbers from different fields");
}

mpz_class pick_delta(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.q() != 0 ? a.delta() : b.q() != 0 ? b.delta() : std::max(a.delta(), b.delta());
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    same_field(a, b);
    return {a.p_ + b.p_, a.q_ + b.q_, pick_delta(a, b)};
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) { return a + (-b); }

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    same_field(a, b);
    mpz_class d = pick_delta(a, b);
    return {a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d};
}

int QuadraticNumber::sign() const {
    int sp = sgn(p_), sq = (delta_ == 0) ? 0 : sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 with q^2 delta
    mpq_class lhs = p_ * p_, rhs = q_ * q_ * delta_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? sp : sq;
}

double QuadraticNumber::approx() const { return p_.get_d() + q_.get_d() * std::sqrt(delta_.get_d()); }

std::string QuadraticNumber::str() const {
    std::ostringstream os;
    if (q_ == 0) {
        os << p_;
        return os.str();
    }
    if (p_ != 0) os << p_ << (q_ > 0 ? " + " : " - ");
    else if (q_ < 0) os << "-";
    mpq_class aq = abs(q_);
    if (aq != 1) os << aq << "*";
    os << "sqrt(" << delta_ << ")";
    return os.str();
}

QuadraticNumber lambda_root(long b, long c) {
    mpz_class t = mpz_class(b) * c - 2;
    mpz_class delta = t * t - 4;
    if (delta < 0) throw PreconditionError("lambda is not real for bc < 4");
    return {mpq_class(t, 2), mpq_class(1, 2), delta};
}

std::vector<TropicalMonomial> tropical_orbit(long b, long c, std::size_t steps) {
    if (b <= 0 || c <= 0) throw PreconditionError("tropical_orbit needs positive b and c");
    if (b * c <= 3) throw PreconditionError("finite type; no witness (bc <= 3)");
    std::vector<TropicalMonomial> z;
    if (steps == 0) return z;
    QuadraticNumber one = QuadraticNumber::rational(1);
    if (b * c > 4) {
        QuadraticNumber lam = lambda_root(b, c);
        z.push_back({QuadraticNumber::rational(c, lam.delta())});
        z.push_back({lam + one});
    } else {
        z.push_back({one});
        z.push_back({QuadraticNumber::rational(b)});
    }
    TropicalMonomial unit{QuadraticNumber::rational(0, z[1].exponent.delta())};
    // z_{t-1} z_{t+1} = z_t^c (+) 1 for even t, z_t^b (+) 1 for odd t (1-based t)
    while (z.size() < steps) {
        std::size_t t = z.size();  // 1-based index of the last element
        long power = (t % 2 == 0) ? c : b;
        z.push_back(oplus(z[t - 1].power(power), unit) / z[t - 2]);
    }
    z.resize(steps);
    return z;
}

}  // namespace cluster
