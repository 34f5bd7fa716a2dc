#include <algorithm>
#include <random>

#include "cluster/canon.hpp"
#include "cluster/classify.hpp"
#include "cluster/error.hpp"
#include "cluster/explore.hpp"
#include "support.hpp"

using namespace cluster;

namespace {

Matrix a3() { return Matrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}; }

std::size_t edge_count(const Matrix& b) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < b.cols(); ++i)
        for (std::size_t j = i + 1; j < b.cols(); ++j)
            if (!b(i, j).is_zero()) ++e;
    return e;
}

void check_profile(const ExplorationReport& r) {
    const auto& p = r.depth_profile;
    REQUIRE(!p.empty());
    CHECK(p.front() == 1);
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i - 1] <= p[i]);
    CHECK(p.back() == r.count);
    if (r.status == ExploreStatus::Closed && p.size() > 1) CHECK(p[p.size() - 2] == p.back());
}

}  // namespace

TEST_CASE("explore: Kronecker aborts at once") {
    MatrixClass k = explore_matrix_class(Matrix{{0, 2}, {-2, 0}});
    CHECK(k.report.status == ExploreStatus::AbortedInfiniteWitness);
    REQUIRE(k.report.witness);
    CHECK(k.report.witness->depth == 0);
    CHECK(k.report.witness->product == 4);
    CHECK(k.report.count == 1);
    CHECK(report_to_json(k.report, false).find("AbortedInfiniteWitness") != std::string::npos);
}

TEST_CASE("explore: small matrix classes") {
    MatrixClass c = explore_matrix_class(a3());
    CHECK(c.report.status == ExploreStatus::Closed);
    CHECK(c.report.count == 4);
    check_profile(c.report);
    for (std::size_t id = 0; id < c.canonical.size(); ++id) {
        CHECK(mutate_sequence(a3(), c.word(id)) == c.representative[id]);
        CHECK(canonical_form(c.representative[id]).matrix == c.canonical[id]);
    }

    // acyclic triangle: two quivers up to isomorphism, neither a tree
    Quiver q;
    q.n_mutable = q.n_total = 3;
    q.add_arrow(0, 1);
    q.add_arrow(1, 2);
    q.add_arrow(0, 2);
    ExploreOptions o;
    o.abort_on_witness = false;
    MatrixClass t = explore_matrix_class(q.to_matrix(), o);
    CHECK(t.report.status == ExploreStatus::Closed);
    CHECK(t.report.count == 2);
    CHECK(t.report.witness);
    for (const auto& m : t.representative) CHECK(edge_count(m) >= 3);
    CHECK(decide_finite_type(q.to_matrix()).kind == FiniteTypeDecision::Infinite);

    CHECK_THROWS_AS(explore_matrix_class(Matrix{{0, 1}, {1, 0}}), NotSkewSymmetrizable);
}

TEST_CASE("explore: seed patterns") {
    SeedPattern p = explore_seed_pattern(initial_seed(a3()));
    CHECK(p.report.status == ExploreStatus::Closed);
    CHECK(p.report.count == 14);
    CHECK(p.report.variables == 9);
    CHECK(p.variables.size() == 9);
    check_profile(p.report);
    for (long long c = 1; c <= 3; ++c) {
        SeedPattern r = explore_seed_pattern(initial_seed(Matrix{{0, 1}, {-c, 0}, {1, 0}}));
        CHECK(r.report.count == std::vector<std::size_t>{5, 6, 8}[c - 1]);
    }
    ExploreOptions o;
    o.max_depth = 2;
    SeedPattern capped = explore_seed_pattern(initial_seed(grid_matrix(2, 4)), o);
    CHECK(capped.report.status == ExploreStatus::DepthCapped);
    CHECK(capped.report.depth_profile == std::vector<std::size_t>{1, 9, 50});
    o.max_depth.reset();
    o.max_states = 10;
    CHECK(explore_seed_pattern(initial_seed(a3()), o).report.status == ExploreStatus::DepthCapped);
}

TEST_CASE("explore: determinism across thread counts") {
    Matrix d5 = dynkin_matrix({'D', 5});
    ExploreOptions one, four;
    four.threads = 4;
    SeedPattern a = explore_seed_pattern(initial_seed(d5), one);
    SeedPattern b = explore_seed_pattern(initial_seed(d5), four);
    CHECK(report_to_json(a.report, true) == report_to_json(b.report, true));
    CHECK(a.variables == b.variables);
    MatrixClass x = explore_matrix_class(d5, one), y = explore_matrix_class(d5, four);
    CHECK(x.canonical == y.canonical);
    CHECK(x.parent == y.parent);
    CHECK(report_to_json(x.report, false) == report_to_json(y.report, false));
}

TEST_CASE("explore: quiver and matrix give the same counts") {
    Matrix e6 = dynkin_matrix({'E', 6});
    Quiver q = Quiver::from_matrix(e6);
    CHECK(explore_matrix_class(q.to_matrix()).report.count == explore_matrix_class(e6).report.count);
    CHECK(explore_seed_pattern(initial_seed(q.to_matrix())).report.count == 833);
}

TEST_CASE("explore: finite mutation type is hereditary") {
    for (const Matrix& b : {dynkin_matrix({'D', 5}), dynkin_matrix({'B', 4}), grid_matrix(2, 3)}) {
        MatrixClass c = explore_matrix_class(b);
        REQUIRE(c.report.status == ExploreStatus::Closed);
        std::mt19937 rng(7);
        for (std::size_t id = 0; id < c.representative.size(); id += 3) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < b.cols(); ++i)
                if (rng() % 2) keep.push_back(i);
            if (keep.empty()) continue;
            CHECK(explore_matrix_class(restrict_matrix(c.representative[id], keep)).report.status ==
                  ExploreStatus::Closed);
        }
    }
}

TEST_CASE("explore: embeddings") {
    EmbeddingResult one = is_embeddable(Matrix{{0}}, a3());
    CHECK(one.verdict == Verdict::Yes);
    EmbeddingResult a2 = is_embeddable(Matrix{{0, 1}, {-1, 0}}, a3());
    CHECK(a2.verdict == Verdict::Yes);
    CHECK(a2.subset.size() == 2);
    Matrix m = mutate_sequence(a3(), a2.word);
    CHECK(canonical_form(restrict_matrix(m, a2.subset)).matrix == canonical_form(Matrix{{0, 1}, {-1, 0}}).matrix);
    CHECK(is_embeddable(Matrix{{0, 2}, {-2, 0}}, a3()).verdict == Verdict::No);
    CHECK(is_embeddable(dynkin_matrix({'A', 4}), a3()).verdict == Verdict::No);
    // D4 sits inside some member of the E6 class
    CHECK(is_embeddable(dynkin_matrix({'D', 4}), dynkin_matrix({'E', 6})).verdict == Verdict::Yes);
}

TEST_CASE("explore: mutation equivalence") {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        Matrix b = test::random_symmetrizable(rng, 3, 0, 1);
        ExploreOptions o;
        o.max_states = 2000;
        CHECK(mutation_equivalent(b, mutate(b, rng() % 3), o) == Verdict::Yes);
    }
    // every orientation of a tree lands in one class
    auto e = dynkin_edges({'E', 6});
    for (unsigned long long f = 0; f < (1ull << e.size()); ++f)
        CHECK(mutation_equivalent(tree_matrix(6, e), tree_matrix(6, e, f)) == Verdict::Yes);
    auto d = t_edges(2, 2, 1);
    for (unsigned long long f = 0; f < (1ull << d.size()); f += 3)
        CHECK(mutation_equivalent(t_matrix(2, 2, 1), tree_matrix(6, d, f)) == Verdict::Yes);
    CHECK(mutation_equivalent(s_matrix(2, 2, 1, 2), t_matrix(2, 2, 2)) == Verdict::Yes);
    CHECK(mutation_equivalent(dynkin_matrix({'A', 4}), dynkin_matrix({'D', 4})) == Verdict::No);
    CHECK(mutation_equivalent(dynkin_matrix({'B', 3}), dynkin_matrix({'C', 3})) == Verdict::No);
}

TEST_CASE("explore: finite type decisions") {
    FiniteTypeDecision q8 = decide_finite_type(q_matrix(8));
    CHECK(q8.kind == FiniteTypeDecision::Finite);
    FiniteTypeDecision q9 = decide_finite_type(q_matrix(9));
    CHECK(q9.kind == FiniteTypeDecision::Infinite);
    REQUIRE(q9.witness);
    Matrix w = mutate_sequence(q_matrix(9), q9.witness->word);
    CHECK(abs(w(q9.witness->i, q9.witness->j) * w(q9.witness->j, q9.witness->i)) == q9.witness->product);
    CHECK(q9.witness->product >= 4);
    CHECK(decide_finite_type(grid_matrix(2, 4)).kind == FiniteTypeDecision::Finite);
    CHECK(decide_finite_type(grid_matrix(2, 5)).kind == FiniteTypeDecision::Infinite);
    // orientations of extended E6
    auto e = extended_dynkin_edges('E', 6);
    for (unsigned long long f = 0; f < (1ull << e.size()); f += 5)
        CHECK(decide_finite_type(tree_matrix(7, e, f)).kind == FiniteTypeDecision::Infinite);
    ExploreOptions o;
    o.max_states = 3;
    CHECK(decide_finite_type(dynkin_matrix({'D', 5}), o).kind == FiniteTypeDecision::Unknown);
}

TEST_CASE("explore: triangulated grid depth profile") {
    Matrix g = grid_matrix(2, 4);
    CHECK(is_skew_symmetric(g));
    CHECK(edge_count(g) == 13);
    ExploreOptions o;
    o.max_depth = 4;
    SeedPattern p = explore_seed_pattern(initial_seed(g), o);
    CHECK(p.report.depth_profile == std::vector<std::size_t>{1, 9, 50, 196, 614});
}
