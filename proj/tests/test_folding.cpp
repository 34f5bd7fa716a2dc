#include <algorithm>
#include <numeric>
#include <random>

#include "cluster/canon.hpp"
#include "cluster/classify.hpp"
#include "cluster/folding.hpp"
#include "support.hpp"

using namespace cluster;

TEST_CASE("folding: displayed matrices") {
    CHECK(fold_matrix(d4_affine_example().quiver, d4_affine_example().action) ==
          Matrix{{0, -1, -1}, {2, 0, 0}, {2, 0, 0}});
    auto e = e6_f4_example();
    CHECK(fold_matrix(e.quiver, e.action) == Matrix{{0, -1, 0, 0}, {1, 0, 1, 0}, {0, -2, 0, -1}, {0, 0, 1, 0}});
    auto gg = d4_g2_example();
    CHECK(fold_matrix(gg.quiver, gg.action) == Matrix{{0, 3}, {-1, 0}});
    CHECK(fold_matrix(central_a_example(3).quiver, central_a_example(3).action) == type_c_matrix(3));
    CHECK(fold_matrix(tagged_d_example(3).quiver, tagged_d_example(3).action) == type_b_matrix(3));
    CHECK(fold_matrix(a3_b2_example().quiver, a3_b2_example().action) == Matrix{{0, -2}, {1, 0}});
}

TEST_CASE("folding: admissibility conditions") {
    auto d = d4_affine_example();
    CHECK(is_admissible(d.quiver, d.action).ok);

    // two mutable vertices joined by an arrow and swapped
    Matrix b{{0, 1}, {-1, 0}};
    GroupAction swap(2, 2, {{1, 0}});
    Admissibility a = is_admissible(b, swap);
    CHECK_FALSE(a.ok);
    CHECK(a.condition == 2);  // b_12 = 1 but b_21 = -1
    Matrix z{{0, 0}, {0, 0}};
    CHECK(is_admissible(z, swap).ok);

    // condition 3 on its own: a 2-cycle-free cyclic triangle rotated
    Matrix tri{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    Admissibility t = is_admissible(tri, GroupAction(3, 3, {{1, 2, 0}}));
    CHECK(t.condition == 3);

    // condition 1: mutable and frozen in one orbit
    Matrix ext{{0}, {1}};
    CHECK(is_admissible(ext, GroupAction(2, 1, {{1, 0}})).condition == 1);

    // leaves with opposite arrows to the center, swapped
    Quiver q;
    q.n_mutable = q.n_total = 3;
    q.add_arrow(0, 2);
    q.add_arrow(2, 1);
    GroupAction leaves(3, 3, {{1, 0, 2}});
    CHECK(is_admissible(q.to_matrix(), leaves).condition == 2);
    CHECK_THROWS_AS(fold_matrix(q.to_matrix(), leaves), FoldingError);

    CHECK_THROWS_AS(GroupAction(3, 3, {{0, 0, 1}}), PreconditionError);
}

TEST_CASE("folding: condition 4") {
    // frozen pair swapped together with the columns: (2) holds, signs clash
    Matrix d{{0, 0}, {0, 0}, {1, -1}, {-1, 1}};
    Admissibility e = is_admissible(d, GroupAction(4, 2, {{1, 0, 3, 2}}));
    CHECK_FALSE(e.ok);
    CHECK(e.condition == 4);
}

TEST_CASE("folding: orbit mutation and commutation on the displayed examples") {
    auto d = d4_affine_example();
    Matrix f = fold_matrix(d.quiver, d.action);
    for (std::size_t K = 0; K < d.action.n_mutable_orbits(); ++K) {
        OrbitMutation mu = orbit_mutate(d.quiver, d.action, K);
        REQUIRE(mu.admissible);
        CHECK(fold_matrix(mu.matrix, d.action) == mutate(f, K));
    }
    // singleton orbit is ordinary mutation
    auto e = e6_f4_example();
    CHECK(orbit_mutate(e.quiver, e.action, 0).matrix == mutate(e.quiver, 0));
    CHECK_THROWS_AS(orbit_mutate(e.quiver, e.action, 7), IndexError);

    // folded exchange relation x1 x1' = x2^2 x3^2 + 1
    Seed s = initial_seed(f);
    auto [plus, minus] = exchange_monomials(s, 0);
    CHECK(plus + minus == LaurentPolynomial::parse("x2^2*x3^2 + 1", 3));
}

TEST_CASE("folding: global foldability") {
    auto e = e6_f4_example();
    Foldability fe = global_foldability(e.quiver, e.action);
    CHECK(fe.kind == Foldability::Foldable);
    auto g = d4_g2_example();
    CHECK(global_foldability(g.quiver, g.action).kind == Foldability::Foldable);
    auto c = central_a_example(3);
    CHECK(global_foldability(c.quiver, c.action).kind == Foldability::Foldable);
    auto t = tagged_d_example(3);
    CHECK(global_foldability(t.quiver, t.action).kind == Foldability::Foldable);

    auto h = hexagon_cycle_example();
    CHECK(is_admissible(h.quiver, h.action).ok);
    for (std::size_t K = 0; K < 3; ++K) CHECK_FALSE(orbit_mutate(h.quiver, h.action, K).admissible);
    Foldability fh = global_foldability(h.quiver, h.action);
    CHECK(fh.kind == Foldability::Counterexample);
    CHECK(fh.word == std::vector<std::size_t>{0});

    // deterministic across thread counts
    ExploreOptions o;
    o.threads = 4;
    Foldability fe4 = global_foldability(e.quiver, e.action, o);
    CHECK(fe4.states == fe.states);
    CHECK(fe4.depth_profile == fe.depth_profile);
}

TEST_CASE("folding: folded seed patterns") {
    auto g = d4_g2_example();
    FoldedPattern pg = fold_seed_pattern(g.quiver, g.action);
    CHECK(pg.pattern.report.count == 8);
    CHECK(pg.pattern.report.variables == 8);

    auto c = central_a_example(3);
    FoldedPattern pc = fold_seed_pattern(c.quiver, c.action);
    CHECK(pc.pattern.report.count == 20);
    CHECK(pc.pattern.report.variables == 12);

    auto t = tagged_d_example(3);
    FoldedPattern pt = fold_seed_pattern(t.quiver, t.action);
    CHECK(pt.pattern.report.count == 20);
    CHECK(pt.pattern.report.variables == 12);

    auto e = e6_f4_example();
    FoldedPattern pe = fold_seed_pattern(e.quiver, e.action);
    CHECK(pe.pattern.report.count == 105);
    CHECK(pe.pattern.report.variables == 28);

    auto a = a3_b2_example();
    FoldedPattern pa = fold_seed_pattern(a.quiver, a.action);
    CHECK(pa.pattern.report.count == 6);
    // x0 (the orbit {1,3}) sits at index 1, x1 (vertex 2) at index 2
    auto [p0, m0] = exchange_monomials(pa.initial, 0);
    CHECK(p0 + m0 == LaurentPolynomial::parse("x2 + 1", 2));
    auto [p1, m1] = exchange_monomials(pa.initial, 1);
    CHECK(p1 + m1 == LaurentPolynomial::parse("x1^2 + 1", 2));

    auto h = hexagon_cycle_example();
    CHECK_THROWS_AS(fold_seed_pattern(h.quiver, h.action), FoldingError);

    CHECK(check_folded_seeds(c.quiver, c.action) > 20);
    CHECK(check_folded_seeds(t.quiver, t.action) > 20);
    CHECK(check_folded_seeds(g.quiver, g.action) >= 8);
    CHECK(check_folded_seeds(e.quiver, e.action) > 105);
}

TEST_CASE("folding: random admissible instances") {
    std::mt19937_64 rng(42);
    int both = 0, tried = 0;
    while (both < 200 && tried < 20000) {
        ++tried;
        std::size_t n = 2 + rng() % 5, fr = rng() % 3;
        auto ex = test::random_admissible(rng, n, fr);
        REQUIRE(is_admissible(ex.quiver, ex.action).ok);
        CHECK(sign_coherent(ex.quiver, ex.action));
        Matrix f = fold_matrix(ex.quiver, ex.action);
        // |J| b_IJ is skew-symmetric on the square part
        const auto& orb = ex.action.orbits();
        for (std::size_t I = 0; I < f.cols(); ++I)
            for (std::size_t J = 0; J < f.cols(); ++J)
                CHECK(Integer(static_cast<long long>(orb[J].size())) * f(I, J) ==
                      -(Integer(static_cast<long long>(orb[I].size())) * f(J, I)));
        CHECK(is_skew_symmetrizable(f));
        for (std::size_t K = 0; K < f.cols(); ++K) {
            OrbitMutation mu = orbit_mutate(ex.quiver, ex.action, K);
            if (!mu.admissible) continue;
            CHECK(fold_matrix(mu.matrix, ex.action) == mutate(f, K));
            ++both;
        }
    }
    CHECK(both >= 200);
}

TEST_CASE("folding: parse_permutation") {
    CHECK(parse_permutation("2 1 3") == std::vector<std::size_t>{1, 0, 2});
    CHECK_THROWS_AS(parse_permutation("0 1"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 x"), ParseError);
}
