#include <algorithm>
#include <random>

#include "cluster/canon.hpp"
#include "cluster/error.hpp"
#include "cluster/seed.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cluster;
using LP = LaurentPolynomial;

TEST_CASE("seed: rank one") {
    Seed s = initial_seed(Matrix(1, 1));
    CHECK(seed_mutate(s, 0).cluster[0] == LP::parse("2*x1^-1", 1));
}

TEST_CASE("seed: A2 is 5-periodic") {
    Seed s = initial_seed(Matrix{{0, 1}, {-1, 0}});
    std::vector<LP> seen{s.cluster[0], s.cluster[1]};
    for (int t = 0; t < 3; ++t) {
        s = seed_mutate(s, t % 2);
        seen.push_back(s.cluster[t % 2]);
    }
    CHECK(seen[2] == LP::parse("x1^-1 + x1^-1*x2", 2));
    CHECK(seen[3] == LP::parse("x1^-1*x2^-1 + x2^-1 + x1^-1", 2));
    CHECK(seen[4] == LP::parse("x2^-1 + x1*x2^-1", 2));
    // after 5 mutations the initial variables come back, swapped
    s = seed_mutate(seed_mutate(s, 1), 0);
    std::vector<LP> c = s.cluster, init = initial_seed(Matrix{{0, 1}, {-1, 0}}).cluster;
    std::sort(c.begin(), c.end());
    std::sort(init.begin(), init.end());
    CHECK(c == init);
}

TEST_CASE("seed: B2-style exchange relations") {
    Seed s = initial_seed(Matrix{{0, 1}, {-2, 0}});
    // x0 of the rank-2 relations sits at index 2 here
    CHECK(seed_mutate(s, 1).cluster[1] * s.cluster[1] == LP::parse("x1 + 1", 2));
    CHECK(seed_mutate(s, 0).cluster[0] * s.cluster[0] == LP::parse("x2^2 + 1", 2));
}

TEST_CASE("seed: freeze") {
    Matrix b{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 1}};
    Seed s = initial_seed(b);
    Seed all = freeze(s, {0, 1, 2});
    CHECK(all.n_mutable() == 0);
    CHECK(all.n_total() == 4);
    CHECK(freeze(freeze(s, {0}), {0}) == freeze(s, {0, 1}));
    CHECK(freeze(freeze(s, {2}), {0}) == freeze(freeze(s, {0}), {1}));
    CHECK_THROWS_AS(freeze(s, {3}), PreconditionError);
    std::mt19937 rng(31);
    for (int t = 0; t < 60; ++t) {
        Seed r = initial_seed(test::random_symmetrizable(rng, 3 + t % 2, t % 2, 1));
        for (int step = 0; step < t % 4; ++step) r = seed_mutate(r, rng() % r.n_mutable());
        std::size_t f = rng() % r.n_mutable();
        for (std::size_t k = 0; k < r.n_mutable(); ++k) {
            if (k == f) continue;
            std::size_t kk = k > f ? k - 1 : k;
            CHECK(freeze(seed_mutate(r, k), {f}) == seed_mutate(freeze(r, {f}), kk));
        }
    }
}

TEST_CASE("seed: restrict") {
    Matrix path{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
    Seed s = initial_seed(path);
    CHECK(restrict_seed(s, {0, 1, 2}) == s);
    try {
        restrict_seed(s, {0, 1});
        FAIL("expected a violation");
    } catch (const RestrictionViolation& e) {
        CHECK(e.i == 2);
        CHECK(e.k == 1);
    }
    Matrix two = block_diagonal(Matrix{{0, 1}, {-1, 0}}, Matrix(1, 1));
    Seed t = restrict_seed(initial_seed(two), {0, 1});
    CHECK(t.matrix == Matrix{{0, 1}, {-1, 0}});
    CHECK(seed_mutate(t, 0).cluster[0] == seed_mutate(initial_seed(two), 0).cluster[0]);
}

TEST_CASE("seed: trivialize") {
    Matrix b{{0, 1}, {-1, 0}, {1, 0}, {0, 0}};
    Seed s = initial_seed(b);
    CHECK(trivialize(s, {}) == s);
    Seed t = trivialize(s, {3});
    CHECK(t.matrix == Matrix{{0, 1}, {-1, 0}, {1, 0}});
    CHECK_THROWS_AS(trivialize(s, {0}), PreconditionError);
    std::mt19937 rng(32);
    for (int t2 = 0; t2 < 60; ++t2) {
        Seed r = initial_seed(test::random_symmetrizable(rng, 2 + t2 % 3, 1 + t2 % 2, 1));
        std::size_t f = r.n_mutable() + rng() % (r.n_total() - r.n_mutable());
        for (std::size_t k = 0; k < r.n_mutable(); ++k)
            CHECK(trivialize(seed_mutate(r, k), {f}) == seed_mutate(trivialize(r, {f}), k));
    }
}

TEST_CASE("seed: canonicalize is permutation invariant") {
    std::mt19937 rng(33);
    for (int t = 0; t < 40; ++t) {
        Seed r = initial_seed(test::random_symmetrizable(rng, 3 + t % 2, t % 2, 1));
        for (int step = 0; step < 3; ++step) r = seed_mutate(r, rng() % r.n_mutable());
        Seed c = canonicalize(r);
        CHECK(canonicalize(c) == c);
        std::vector<std::size_t> perm(r.n_mutable());
        std::iota(perm.begin(), perm.end(), 0);
        for (int p = 0; p < 10; ++p) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonicalize(permute_seed(r, perm)) == c);
        }
    }
    // A2: the 5-cycle returns the initial seed up to relabeling
    Seed s = initial_seed(Matrix{{0, 1}, {-1, 0}});
    CHECK(canonicalize(seed_mutate_sequence(s, {0, 1, 0, 1, 0})) == canonicalize(s));
}

TEST_CASE("seed: text round trip") {
    Seed s = seed_mutate(initial_seed(Matrix{{0, 1}, {-2, 0}, {1, 0}}), 0);
    CHECK(parse_seed(format_seed(s)) == s);
}

TEST_CASE("canonical form of matrices") {
    std::mt19937 rng(34);
    for (int t = 0; t < 200; ++t) {
        Matrix b = test::random_symmetrizable(rng, 2 + t % 5, t % 3, 1);
        CanonicalForm c = canonical_form(b);
        CHECK(permute_mutable(b, c.perm) == c.matrix);
        std::vector<std::size_t> perm(b.cols());
        std::iota(perm.begin(), perm.end(), 0);
        for (int p = 0; p < 5; ++p) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(permute_mutable(b, perm)).matrix == c.matrix);
        }
    }
    // brute force minimum on small cases
    for (int t = 0; t < 50; ++t) {
        Matrix b = test::random_symmetrizable(rng, 4, t % 2, 1);
        std::vector<std::size_t> perm(4);
        std::iota(perm.begin(), perm.end(), 0);
        Matrix best = b;
        do {
            Matrix m = permute_mutable(b, perm);
            if (m < best) best = m;
        } while (std::next_permutation(perm.begin(), perm.end()));
        // canonical form need not be the lexicographic minimum, but it is an
        // invariant: equal iff some permutation matches
        Matrix other = test::random_symmetrizable(rng, 4, t % 2, 1);
        bool iso = false;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (permute_mutable(other, perm) == b) iso = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(iso == (canonical_form(other).matrix == canonical_form(b).matrix));
    }
}

TEST_CASE("quiver round trip and centralizer") {
    Quiver q;
    q.n_mutable = 3;
    q.n_total = 4;
    q.add_arrow(0, 1);
    q.add_arrow(1, 2, 2);
    q.add_arrow(2, 1);
    q.add_arrow(3, 0);
    Matrix b = q.to_matrix();
    CHECK(b == Matrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}});
    CHECK(Quiver::from_matrix(b).to_matrix() == b);
    auto cent = centralizer(4, {{1, 0, 3, 2}});
    CHECK(cent.size() == 8);  // centralizer of (01)(23) in S4
}
