#include "cluster/integer.hpp"

#include <limits>
#include <ostream>

#include "cluster/error.hpp"

namespace cluster {

namespace {

mpz_class from_i64(int64_t v) {
    mpz_class z;
    // long is 64-bit on the supported platforms
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

void Integer::assign(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) {
        small_ = mpz_get_si(z.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(z);
    }
}

void Integer::normalize() {
    if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
        small_ = mpz_get_si(big_->get_mpz_t());
        big_.reset();
    }
}

Integer Integer::parse(const std::string& s) {
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("bad integer literal '" + s + "'");
    return Integer(z);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_i64(small_); }

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer Integer::operator-() const {
    if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Integer(static_cast<long long>(-small_));
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
    int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& o) {
    int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& o) {
    int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
}

Integer& Integer::operator/=(const Integer& o) {
    if (o.is_zero()) throw DivisionByZero("integer division by zero");
    if (!big_ && !o.big_ && !(small_ == std::numeric_limits<int64_t>::min() && o.small_ == -1)) {
        small_ /= o.small_;
        return *this;
    }
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
    assign(q);
    return *this;
}

Integer& Integer::operator%=(const Integer& o) {
    if (o.is_zero()) throw DivisionByZero("integer division by zero");
    if (!big_ && !o.big_) {
        small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
        return *this;
    }
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
    assign(r);
    return *this;
}

int compare(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
    int c = cmp(a.to_mpz(), b.to_mpz());
    return (c > 0) - (c < 0);
}

std::size_t Integer::hash() const {
    if (!big_) return std::hash<int64_t>{}(small_);
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    const __mpz_struct* z = big_->get_mpz_t();
    for (int i = 0; i < std::abs(z->_mp_size); ++i)
        h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(z->_mp_size < 0);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small() != std::numeric_limits<int64_t>::min() &&
        b.small() != std::numeric_limits<int64_t>::min()) {
        int64_t x = std::abs(a.small()), y = std::abs(b.small());
        while (y) {
            int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(static_cast<long long>(x));
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DivisionByZero("integer division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer pow(const Integer& base, unsigned e) {
    Integer r(1), b(base);
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Integer(z);
}

int to_int(const Integer& a) {
    if (!a.is_small() || a.small() > std::numeric_limits<int>::max() ||
        a.small() < std::numeric_limits<int>::min())
        throw InternalError("integer " + a.str() + " does not fit in int");
    return static_cast<int>(a.small());
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

}  // namespace cluster
