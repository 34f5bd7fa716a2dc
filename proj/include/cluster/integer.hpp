#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace cluster {

// Arbitrary-precision integer. Values that fit in int64 stay inline; anything
// larger lives in an mpz. Every operation checks for overflow and promotes.
class Integer {
public:
    Integer() = default;
    Integer(int v) : small_(v) {}
    Integer(long v) : small_(v) {}
    Integer(long long v) : small_(static_cast<int64_t>(v)) {}
    explicit Integer(const mpz_class& z) { assign(z); }

    Integer(const Integer& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;

    static Integer parse(const std::string& s);

    bool is_small() const { return !big_; }
    int64_t small() const { return small_; }  // valid only when is_small()
    mpz_class to_mpz() const;
    std::string str() const;

    int sign() const {
        if (big_) return sgn(*big_);
        return (small_ > 0) - (small_ < 0);
    }
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }
    explicit operator bool() const { return !is_zero(); }

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);
    // Truncating division and remainder, as for built-in integers.
    Integer& operator/=(const Integer& o);
    Integer& operator%=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

    friend int compare(const Integer& a, const Integer& b);
    friend bool operator==(const Integer& a, const Integer& b) {
        if (a.is_small() && b.is_small()) return a.small_ == b.small_;
        return compare(a, b) == 0;
    }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) {
        if (a.is_small() && b.is_small()) return a.small_ < b.small_;
        return compare(a, b) < 0;
    }
    friend bool operator>(const Integer& a, const Integer& b) { return b < a; }
    friend bool operator<=(const Integer& a, const Integer& b) { return !(b < a); }
    friend bool operator>=(const Integer& a, const Integer& b) { return !(a < b); }

    std::size_t hash() const;

private:
    void assign(const mpz_class& z);
    void normalize();

    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Floor division (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned e);
Integer binomial(unsigned n, unsigned k);
// Fits in an int for use as an exponent or index; throws otherwise.
int to_int(const Integer& a);

std::ostream& operator<<(std::ostream& os, const Integer& a);

}  // namespace cluster

template <>
struct std::hash<cluster::Integer> {
    std::size_t operator()(const cluster::Integer& a) const { return a.hash(); }
};
