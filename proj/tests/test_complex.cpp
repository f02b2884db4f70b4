#include <catch2/catch_amalgamated.hpp>

#include "genstat/complex.hpp"

using namespace genstat;

TEST_CASE("simplices are sorted vertex sets") {
    auto s = make_simplex({3, 1, 0});
    CHECK(s.vertices == std::vector<int>{0, 1, 3});
    CHECK(s.dim() == 2);
    CHECK_THROWS_AS(make_simplex({1, 1}), InvalidInputError);
    CHECK(s.face(1).vertices == std::vector<int>{0, 3});
    CHECK(format_simplex(s) == "013");
    CHECK(format_simplex(make_simplex({2, 10})) == "2.10");
}

TEST_CASE("complex closure generates all faces") {
    SimplicialComplex x({make_simplex({0, 1, 2})});
    CHECK(x.dim() == 2);
    CHECK(x.count(0) == 3);
    CHECK(x.count(1) == 3);
    CHECK(x.count(2) == 1);
    CHECK(x.contains(make_simplex({0, 2})));
    CHECK(!x.contains(make_simplex({0, 3})));
    CHECK(x.index_of(make_simplex({0, 1})) == 0);
    CHECK(x.index_of(make_simplex({1, 2})) == 2);
}

TEST_CASE("minimal sphere triangulations have binomial face counts") {
    auto s1 = minimal_sphere_triangulation(1);
    CHECK(s1.dim() == 1);
    CHECK(s1.count(0) == 3);
    CHECK(s1.count(1) == 3);

    auto s2 = minimal_sphere_triangulation(2);
    CHECK(s2.count(0) == 4);
    CHECK(s2.count(1) == 6);
    CHECK(s2.count(2) == 4);

    auto s3 = minimal_sphere_triangulation(3);
    CHECK(s3.count(0) == 5);
    CHECK(s3.count(1) == 10);
    CHECK(s3.count(2) == 10);
    CHECK(s3.count(3) == 5);

    CHECK_THROWS_AS(minimal_sphere_triangulation(0), InvalidInputError);
}

TEST_CASE("boundary of a boundary vanishes") {
    auto g = make_group({4});
    for (int d = 2; d <= 3; ++d) {
        auto x = minimal_sphere_triangulation(d);
        for (int k = 2; k <= d; ++k) {
            for (const auto& s : x.simplices(k)) {
                Chain c;
                c.degree = k;
                c.coeffs.emplace(s, generator(g, 0));
                Chain b = boundary(g, c);
                CHECK(boundary(g, b).is_zero());
            }
        }
    }
}

TEST_CASE("boundary alternates signs over faces") {
    auto g = make_group({3});
    Chain c;
    c.degree = 1;
    c.coeffs.emplace(make_simplex({0, 1}), generator(g, 0));
    Chain b = boundary(g, c);
    // d(g*<01>) = g*<1> - g*<0>
    CHECK(b.coeffs.at(make_simplex({1})).residues == std::vector<int>{1});
    CHECK(b.coeffs.at(make_simplex({0})).residues == std::vector<int>{2});
}

TEST_CASE("support intersection reports the common vertex set") {
    auto x = minimal_sphere_triangulation(2);
    auto both = support_intersection(
        x, {make_simplex({0, 1}), make_simplex({0, 2})});
    REQUIRE(both.has_value());
    CHECK(both->vertices == std::vector<int>{0});
    CHECK(!support_intersection(x, {make_simplex({0, 1}),
                                    make_simplex({2, 3})}));
    CHECK(support_intersection(x, {make_simplex({0, 1, 2}),
                                   make_simplex({0, 1, 3})})
              ->vertices == std::vector<int>{0, 1});
    CHECK_THROWS_AS(support_intersection(x, {}), InvalidInputError);
}

TEST_CASE("complex text format parses maximal simplices") {
    auto x = parse_complex("# sphere\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    CHECK(x.dim() == 2);
    CHECK(x.count(2) == 4);
    auto y = parse_complex("tri: 0 1 2");
    CHECK(y.count(2) == 1);
    CHECK_THROWS_AS(parse_complex(""), InvalidInputError);
    CHECK_THROWS_AS(parse_complex("0 1 x"), InvalidInputError);
    CHECK_THROWS_AS(parse_complex("0 0 1"), InvalidInputError);
}
