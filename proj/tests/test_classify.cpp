#include <functional>
#include <random>

#include "cluster/classify.hpp"
#include "cluster/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cluster;

namespace {

DynkinType T(const char* s) { return parse_dynkin(s); }

// Coefficients of (1+x)(1+x+x^2)(1+x^2)(1+x^3)/(1-x^12), expanded by hand
// as a polynomial product, independent of the determinant routine.
std::vector<long long> delta_series(std::size_t upto) {
    std::vector<long long> num{1};
    auto mul = [&](std::vector<long long> f) {
        std::vector<long long> r(num.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < num.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) r[i + j] += num[i] * f[j];
        num = r;
    };
    mul({1, 1});
    mul({1, 1, 1});
    mul({1, 0, 1});
    mul({1, 0, 0, 1});
    std::vector<long long> out(upto + 1, 0);
    for (std::size_t n = 0; n <= upto; ++n)
        for (std::size_t j = 0; j < num.size(); ++j)
            if (j <= n && (n - j) % 12 == 0) out[n] += num[j];
    return out;
}

}  // namespace

TEST_CASE("count_type matches the closed forms") {
    for (int n = 2; n <= 8; ++n) {
        auto a = count_type(T(("A" + std::to_string(n)).c_str()));
        CHECK(a.first == binomial(2 * n + 2, n + 1) / Integer(n + 2));
        CHECK(a.second == Integer(n * (n + 3) / 2));
        auto b = count_type(T(("B" + std::to_string(n)).c_str()));
        CHECK(b.first == binomial(2 * n, n));
        CHECK(b.second == Integer(n * (n + 1)));
        if (n >= 3) CHECK(count_type(T(("C" + std::to_string(n)).c_str())) == b);
        if (n >= 4) {
            auto d = count_type(T(("D" + std::to_string(n)).c_str()));
            CHECK(d.first * Integer(n) == Integer(3 * n - 2) * binomial(2 * n - 2, n - 1));
            CHECK(d.second == Integer(n * n));
        }
    }
    CHECK(count_type(T("E6")) == std::pair<Integer, Integer>{833, 42});
    CHECK(count_type(T("E7")) == std::pair<Integer, Integer>{4160, 70});
    CHECK(count_type(T("E8")) == std::pair<Integer, Integer>{25080, 128});
    CHECK(count_type(T("F4")) == std::pair<Integer, Integer>{105, 28});
    CHECK(count_type(T("G2")) == std::pair<Integer, Integer>{8, 8});
    CHECK(count_type(T("A2")).first == 5);
    CHECK(count_type(T("A1+A1")) == std::pair<Integer, Integer>{4, 4});
    for (const char* s : {"A3", "B4", "D5", "E7", "F4", "G2"}) {
        DynkinComponent c = T(s).components[0];
        int sum = 0;
        for (int e : exponents(c)) sum += e;
        CHECK(2 * sum == c.rank * coxeter_number(c));
    }
    CHECK_THROWS_AS(parse_dynkin("E9"), PreconditionError);
    CHECK_THROWS_AS(parse_dynkin("Q3"), PreconditionError);
    CHECK_THROWS_AS(parse_dynkin("D"), ParseError);
    CHECK(T("C2") == T("B2"));
}

TEST_CASE("match_dynkin") {
    for (int n = 1; n <= 7; ++n) {
        DynkinComponent a{'A', n};
        CHECK(match_dynkin(diagram(dynkin_matrix(a)))->str() == a.str());
    }
    Matrix b3{{0, -2, 0}, {1, 0, -1}, {0, 1, 0}};
    Matrix c3{{0, -1, 0}, {2, 0, -1}, {0, 1, 0}};
    CHECK(cartan_counterpart(b3) == Matrix{{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(cartan_counterpart(c3) == Matrix{{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}});
    CHECK(match_dynkin(diagram(b3))->str() == "B3");
    CHECK(match_dynkin(diagram(c3))->str() == "C3");
    CHECK(match_dynkin(diagram(type_b_matrix(5)))->str() == "B5");
    CHECK(match_dynkin(diagram(type_c_matrix(5)))->str() == "C5");
    for (const char* s : {"D4", "D6", "E6", "E7", "E8", "F4", "G2", "B2"}) {
        DynkinComponent c = T(s).components[0];
        for (unsigned long long flip = 0; flip < 4; ++flip)
            CHECK(match_dynkin(diagram(dynkin_matrix(c, flip)))->str() == s);
    }
    Matrix four(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        four(i, (i + 1) % 4) = 1;
        four((i + 1) % 4, i) = -1;
    }
    CHECK_FALSE(match_dynkin(diagram(four)));
    CHECK(match_dynkin(diagram(t_matrix(1, 2, 2)))->str() == "E6");
    CHECK(match_dynkin(diagram(block_diagonal(Matrix(1, 1), Matrix{{0, 1}, {-1, 0}})))->str() == "A1+A2");
}

TEST_CASE("chordless cycles") {
    CHECK(chordless_cycles(diagram(dynkin_matrix({'E', 8}))).empty());
    for (std::size_t n = 3; n <= 10; ++n) {
        auto cyc = chordless_cycles(diagram(q_matrix(n)));
        REQUIRE(cyc.size() == n - 2);
        for (std::size_t i = 0; i < n - 2; ++i) {
            auto v = cyc[i].vertices;
            std::sort(v.begin(), v.end());
            CHECK(v == std::vector<std::size_t>{i, i + 1, i + 2});
            CHECK(cyc[i].cyclically_oriented);
        }
    }
    Matrix four(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        four(i, (i + 1) % 4) = 1;
        four((i + 1) % 4, i) = -1;
    }
    auto c = chordless_cycles(diagram(four));
    REQUIRE(c.size() == 1);
    CHECK(c[0].cyclically_oriented);
    four(0, 1) = -1;
    four(1, 0) = 1;
    c = chordless_cycles(diagram(four));
    REQUIRE(c.size() == 1);
    CHECK_FALSE(c[0].cyclically_oriented);
    CHECK_FALSE(signed_companion(four));
    // complete graph K4: four triangles, no longer cycles
    Matrix k4(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            k4(i, j) = 1;
            k4(j, i) = -1;
        }
    CHECK(chordless_cycles(diagram(k4)).size() == 4);
}

TEST_CASE("companions and positivity") {
    for (const char* s : {"A4", "B3", "C4", "D5", "E6", "F4", "G2"}) {
        Matrix b = dynkin_matrix(T(s).components[0], 5);
        CHECK(*signed_companion(b) == cartan_counterpart(b));
    }
    for (std::size_t n = 3; n <= 12; ++n) {
        auto a = signed_companion(q_matrix(n));
        REQUIRE(a);
        // unique up to simultaneous sign changes: compare through determinants
        CHECK(leading_minors(*a) == leading_minors(q_companion(n)));
    }
    CHECK(is_positive(Matrix{{2, -1}, {-1, 2}}));
    CHECK(leading_minors(Matrix{{2, -1}, {-1, 2}}) == std::vector<Integer>{2, 3});
    CHECK_FALSE(is_positive(Matrix{{2, -2}, {-2, 2}}));
    CHECK_FALSE(finite_type_criterion(Matrix{{0, 2}, {-2, 0}}));
    Matrix four(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        four(i, (i + 1) % 4) = 1;
        four((i + 1) % 4, i) = -1;
    }
    CHECK(finite_type_criterion(four));
}

TEST_CASE("delta sequence and its generating function") {
    auto series = delta_series(24);
    std::vector<long long> expect{2, 3, 4, 4, 4, 3, 2, 1, 0, 0, 0};
    for (std::size_t n = 1; n <= 24; ++n) {
        Integer d = determinant(q_companion(n));
        CHECK(d == Integer(series[n]));
        if (n <= 11) CHECK(d == Integer(expect[n - 1]));
        if (n + 12 <= 24) CHECK(d == determinant(q_companion(n + 12)));
        CHECK(finite_type_criterion(q_matrix(n)) == (n <= 8));
    }
}

TEST_CASE("determinant against cofactor expansion") {
    std::mt19937 rng(41);
    std::function<Integer(const Matrix&)> cof = [&](const Matrix& m) -> Integer {
        std::size_t n = m.rows();
        if (n == 1) return m(0, 0);
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Matrix sub(n - 1, n - 1);
            for (std::size_t r = 1; r < n; ++r)
                for (std::size_t c = 0, cc = 0; c < n; ++c)
                    if (c != j) sub(r - 1, cc++) = m(r, c);
            Integer t = m(0, j) * cof(sub);
            s = (j % 2) ? s - t : s + t;
        }
        return s;
    };
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + t % 5;
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long long>(rng() % 7) - 3;
        CHECK(determinant(m) == cof(m));
    }
}

TEST_CASE("identify_type") {
    std::vector<std::string> q = {"A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"};
    for (std::size_t n = 1; n <= 8; ++n) {
        auto r = identify_type(q_matrix(n));
        REQUIRE(r.type);
        CHECK(r.type->str() == q[n - 1]);
    }
    CHECK_FALSE(identify_type(q_matrix(9)).finite);
    for (std::size_t n = 3; n <= 7; ++n) {
        Matrix cyc(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            cyc(i, (i + 1) % n) = 1;
            cyc((i + 1) % n, i) = -1;
        }
        CHECK(identify_type(cyc).type->str() == (n == 3 ? "A3" : "D" + std::to_string(n)));
    }
    CHECK(identify_type(block_diagonal(Matrix(1, 1), Matrix{{0, 1}, {-1, 0}})).type->str() == "A1+A2");
    // mutation invariance on random finite-type members
    std::mt19937 rng(42);
    for (const char* s : {"B4", "C4", "F4", "G2", "D5"}) {
        Matrix b = dynkin_matrix(T(s).components[0]);
        for (int step = 0; step < 6; ++step) {
            b = mutate(b, rng() % b.cols());
            CHECK(identify_type(b).type->str() == s);
        }
    }
}

TEST_CASE("generators") {
    CHECK(s_matrix(4, 3, 2, 5).cols() == 14);
    CHECK(t_matrix(5, 4, 2).cols() == 12);
    for (int a = 1; a <= 3; ++a) {
        Matrix g = tree_matrix(3, extended_dynkin_edges('G', 2, a));
        Diagram d = diagram(g);
        CHECK(d.edges.size() == 2);
        CHECK(d.edges[0].weight == 3);
        CHECK(d.edges[1].weight == Integer(a));
    }
    CHECK_THROWS_AS(extended_dynkin_edges('B', 2), PreconditionError);
    CHECK_THROWS_AS(s_matrix(0, 1, 1, 0), PreconditionError);
}
