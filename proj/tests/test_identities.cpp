#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "genstat/extractor.hpp"
#include "genstat/identities.hpp"
#include "genstat/witnesses.hpp"

using namespace genstat;

TEST_CASE("identity arity thresholds by dimension and degree") {
    // Smallest commutator arity with empty common support, then the default
    // depth used by the pipeline (at least d+1).
    CHECK(min_identity_arity(1, 0) == 3);
    CHECK(min_identity_arity(2, 0) == 2);
    CHECK(min_identity_arity(3, 0) == 2);
    CHECK(min_identity_arity(2, 1) == 4);
    CHECK(min_identity_arity(3, 1) == 3);
    CHECK(min_identity_arity(3, 2) == 5);

    CHECK(default_identity_depth(1, 0) == 3);
    CHECK(default_identity_depth(2, 0) == 3);
    CHECK(default_identity_depth(3, 0) == 4);
    CHECK(default_identity_depth(2, 1) == 4);
    CHECK(default_identity_depth(3, 1) == 4);
    CHECK(default_identity_depth(3, 2) == 5);
}

TEST_CASE("index-level walk matches word evaluation on random commutators") {
    std::mt19937 rng(31337);
    auto m = build_model(minimal_sphere_triangulation(2), make_group({2, 3}), 0);
    std::vector<std::pair<std::int32_t, int>> buf;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<int> gens, exps;
        std::vector<Word> words;
        for (int i = 0; i < n; ++i) {
            gens.push_back(static_cast<int>(rng() % m.num_generators()));
            exps.push_back(rng() % 2 ? 1 : -1);
            words.push_back(Word{{m.generator_label(gens.back()), exps.back()}});
        }
        auto iw = detail::index_commutator(gens, exps);
        std::int64_t a0 = static_cast<std::int64_t>(rng() % m.num_configs());
        SparseRow fast = detail::walk_row(m, iw, a0, buf);
        auto [theta, fin] = evaluate_word(m, commutator_word(words), a0);
        CHECK(fin == a0);  // commutators return to the initial configuration
        CHECK(theta_to_row(theta) == fast);
    }
}

TEST_CASE("a disjoint hop pair yields the four-term commutator row") {
    auto m = build_model(minimal_sphere_triangulation(2), make_group({2}), 0);
    GeneratorLabel s1{0, make_simplex({0, 1})};
    GeneratorLabel s2{0, make_simplex({2, 3})};
    int i1 = m.generator_index(s1), i2 = m.generator_index(s2);
    std::vector<std::pair<std::int32_t, int>> buf;
    auto iw = detail::index_commutator({i1, i2}, {1, 1});
    SparseRow row = detail::walk_row(m, iw, 0, buf);
    CHECK(row.size() == 4);
    for (const auto& [c, v] : row) CHECK((v == 1 || v == -1));
}

TEST_CASE("generated rows are nonzero, deduplicated, and deterministic") {
    auto m = build_model(minimal_sphere_triangulation(2), make_group({2}), 0);
    auto a = generate_identities(m, 3, 1'000'000);
    auto b = generate_identities(m, 3, 1'000'000);
    CHECK(!a.budget_exhausted);
    REQUIRE(!a.rows.empty());
    REQUIRE(a.rows.size() == b.rows.size());
    std::set<SparseRow> seen;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(!a.rows[i].is_zero());
        CHECK(a.rows[i] == b.rows[i]);
        CHECK(seen.insert(theta_to_row(a.rows[i])).second);
    }
}

TEST_CASE("every generated row satisfies the invariance conditions") {
    for (auto [d, p] : {std::pair{1, 0}, {2, 0}, {2, 1}}) {
        auto m = build_model(minimal_sphere_triangulation(d),
                             make_group({2, 3}), p);
        auto ids = generate_identities(m, default_identity_depth(d, p),
                                       200'000);
        REQUIRE(!ids.rows.empty());
        for (const auto& r : ids.rows) {
            auto rep = verify_invariance(m, r);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("the row budget cuts emission short and reports it") {
    auto m = build_model(minimal_sphere_triangulation(2), make_group({2}), 0);
    auto full = generate_identities(m, 3, 1'000'000);
    auto cut = generate_identities(m, 3, 10);
    CHECK(cut.budget_exhausted);
    CHECK(cut.rows.size() <= 10);
    CHECK(cut.rows.size() < full.rows.size());
    // The truncated stream is a prefix of the full one.
    for (std::size_t i = 0; i < cut.rows.size(); ++i)
        CHECK(cut.rows[i] == full.rows[i]);
}

TEST_CASE("streaming and materialized generation agree up to duplicates") {
    auto m = build_model(minimal_sphere_triangulation(1), make_group({3}), 0);
    std::set<SparseRow> streamed;
    bool exhausted = for_each_identity_row(
        m, 3, 1'000'000, [&](SparseRow&& r) { streamed.insert(r); });
    CHECK(!exhausted);
    auto ids = generate_identities(m, 3, 1'000'000);
    std::set<SparseRow> materialized;
    for (const auto& r : ids.rows) materialized.insert(theta_to_row(r));
    CHECK(streamed == materialized);
}

TEST_CASE("saturation check detects span growth and span stability") {
    auto m = build_model(minimal_sphere_triangulation(2), make_group({2}), 0);
    auto ids = generate_identities(m, 3, 1'000'000);
    int cols = static_cast<int>(m.theta_columns());
    REQUIRE(ids.rows.size() >= 4);
    std::size_t half = ids.rows.size() / 2;
    std::vector<ThetaVector> first(ids.rows.begin(), ids.rows.begin() + half);
    std::vector<ThetaVector> rest(ids.rows.begin() + half, ids.rows.end());
    // The full set saturates itself.
    CHECK(saturation_check(ids.rows, ids.rows, cols));
    // A vector outside the span is reported as growth.
    ThetaVector unit;
    unit.add(0, 1);
    CHECK(!saturation_check(first, {unit}, cols));
    // Scaled copies of existing rows never grow the span.
    std::vector<ThetaVector> doubled;
    for (const auto& r : rest) doubled.push_back(theta_scale(r, 2));
    CHECK(saturation_check(ids.rows, doubled, cols));
}

TEST_CASE("depth below two is rejected") {
    auto m = build_model(minimal_sphere_triangulation(2), make_group({2}), 0);
    CHECK_THROWS_AS(generate_identities(m, 1, 100), InvalidInputError);
}
