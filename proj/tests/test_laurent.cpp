#include <cmath>
#include <random>

#include "cluster/error.hpp"
#include "cluster/laurent.hpp"
#include "cluster/tropical.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cluster;
using LP = LaurentPolynomial;

namespace {

LP P(const char* s, std::size_t nv = 3) { return LP::parse(s, nv); }

LP random_lp(std::mt19937& rng, std::size_t nv, int terms) {
    LP out(nv);
    for (int t = 0; t < terms; ++t) {
        std::vector<int32_t> e(nv);
        for (auto& x : e) x = static_cast<int32_t>(rng() % 5) - 2;
        out = out + LP::monomial(nv, e, static_cast<long long>(rng() % 7) - 3);
    }
    return out;
}

}  // namespace

TEST_CASE("laurent: basic arithmetic") {
    CHECK(P("x1") * P("x1^-1") == P("1"));
    CHECK((P("x1 + x2") * P("x1 - x2")) == P("x1^2 - x2^2"));
    CHECK(P("x1 + x2") + P("-x2") == P("x1"));
    CHECK(P("x1 - x1").is_zero());
    CHECK(P("0").is_zero());
    CHECK(P("x1+1").pow(3) == P("x1^3 + 3*x1^2 + 3*x1 + 1"));
    CHECK_THROWS(P("x1") + LP::variable(2, 0));
}

TEST_CASE("laurent: rendering round trip") {
    LP p = P("3*x1^2*x2^-1 + 1 - x3");
    CHECK(LP::parse(p.str(), 3) == p);
    CHECK(P("1").str() == "1");
    CHECK(P("0").str() == "0");
    CHECK_THROWS_AS(LP::parse("x1 +* 2", 2), ParseError);
}

TEST_CASE("laurent: exact division") {
    CHECK(LP::exact_div(P("x1^2 - x2^2"), P("x1 - x2")) == P("x1 + x2"));
    CHECK(LP::exact_div(P("x2 + 1"), P("x1")) == P("x1^-1*x2 + x1^-1"));
    CHECK_THROWS_AS(LP::exact_div(P("x1 + x2"), P("x1 + 1")), NotDivisible);
    CHECK_THROWS_AS(LP::exact_div(P("x1"), LP(3)), DivisionByZero);
    CHECK(LP::exact_div(LP(3), P("x1+1")).is_zero());
}

TEST_CASE("laurent: ring axioms and division on random inputs") {
    std::mt19937 rng(21);
    for (int t = 0; t < 500; ++t) {
        LP a = random_lp(rng, 3, 1 + t % 4), b = random_lp(rng, 3, 1 + t % 3), c = random_lp(rng, 3, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(LP::exact_div(a * b, b) == a);
    }
}

TEST_CASE("laurent: global order is total and consistent") {
    std::mt19937 rng(22);
    std::vector<LP> v;
    for (int t = 0; t < 60; ++t) v.push_back(random_lp(rng, 2, t % 4));
    for (auto& a : v)
        for (auto& b : v) {
            CHECK((compare(a, b) == 0) == (a == b));
            CHECK(compare(a, b) == -compare(b, a));
        }
}

TEST_CASE("quadratic numbers") {
    for (long bc = 5; bc <= 36; ++bc) {
        QuadraticNumber lam = lambda_root(1, bc);
        QuadraticNumber lhs = lam * lam;
        QuadraticNumber rhs = QuadraticNumber::rational(bc - 2) * lam - QuadraticNumber::rational(1);
        CHECK(lhs == rhs);
    }
    std::mt19937 rng(23);
    int agree = 0;
    for (int t = 0; t < 1000; ++t) {
        long d = 2 + rng() % 40;
        mpq_class p(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 50);
        mpq_class q(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 50);
        QuadraticNumber x(p, q, d);
        long double v = static_cast<long double>(p.get_d()) + static_cast<long double>(q.get_d()) * std::sqrt((long double)d);
        int s = v > 1e-12L ? 1 : v < -1e-12L ? -1 : 0;
        if (s == x.sign() || s == 0) ++agree;
    }
    CHECK(agree == 1000);
}

TEST_CASE("tropical orbit") {
    // b=2, c=3: z3 = lambda*c, z4 = lambda*(lambda+1)
    auto z = tropical_orbit(2, 3, 4);
    QuadraticNumber lam = lambda_root(2, 3);
    QuadraticNumber one = QuadraticNumber::rational(1);
    CHECK(z[2].exponent == lam * QuadraticNumber::rational(3));
    CHECK(z[3].exponent == lam * (lam + one));
    auto w = tropical_orbit(2, 2, 8);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(w[2 * k - 2].exponent == QuadraticNumber::rational(2 * static_cast<long>(k) - 1));
        CHECK(w[2 * k - 1].exponent == QuadraticNumber::rational(2 * static_cast<long>(k)));
    }
    CHECK_THROWS_AS(tropical_orbit(1, 3, 5), PreconditionError);
}
