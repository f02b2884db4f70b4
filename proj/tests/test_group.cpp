#include <catch2/catch_amalgamated.hpp>

#include "genstat/group.hpp"

using namespace genstat;

TEST_CASE("group construction validates factor orders") {
    CHECK_NOTHROW(make_group({2}));
    CHECK_NOTHROW(make_group({2, 3, 4}));
    CHECK_THROWS_AS(make_group({}), InvalidInputError);
    CHECK_THROWS_AS(make_group({1}), InvalidInputError);
    CHECK_THROWS_AS(make_group({2, 0}), InvalidInputError);
}

TEST_CASE("element arithmetic is componentwise modular") {
    auto g = make_group({2, 3});
    CHECK(g.size() == 6);
    auto a = generator(g, 0);
    auto b = generator(g, 1);
    auto s = add(g, a, b);
    CHECK(s.residues == std::vector<int>{1, 1});
    CHECK(add(g, s, s).residues == std::vector<int>{0, 2});
    CHECK(neg(g, s).residues == std::vector<int>{1, 2});
    CHECK(add(g, s, neg(g, s)).is_zero());
    CHECK(zero_element(g).is_zero());
}

TEST_CASE("scale handles negative multipliers") {
    auto g = make_group({5});
    auto a = generator(g, 0);
    CHECK(scale(g, 3, a).residues == std::vector<int>{3});
    CHECK(scale(g, -1, a).residues == std::vector<int>{4});
    CHECK(scale(g, -7, a).residues == std::vector<int>{3});
    CHECK(scale(g, 0, a).is_zero());
}

TEST_CASE("element order is the lcm over cyclic factors") {
    auto g = make_group({6});
    CHECK(element_order(g, GroupElement{{4}}) == 3);
    CHECK(element_order(g, GroupElement{{1}}) == 6);
    CHECK(element_order(g, GroupElement{{0}}) == 1);
    auto h = make_group({4, 6});
    CHECK(element_order(h, GroupElement{{2, 3}}) == 2);
    CHECK(element_order(h, GroupElement{{1, 2}}) == 12);
}

TEST_CASE("group spec parsing is case-insensitive") {
    CHECK(parse_group("Z2").orders() == std::vector<int>{2});
    CHECK(parse_group("Z2xZ3").orders() == std::vector<int>{2, 3});
    CHECK(parse_group("z4XZ4").orders() == std::vector<int>{4, 4});
    CHECK(parse_group(" Z2 x Z5 ").orders() == std::vector<int>{2, 5});
    CHECK_THROWS_AS(parse_group(""), InvalidInputError);
    CHECK_THROWS_AS(parse_group("A3"), InvalidInputError);
    CHECK_THROWS_AS(parse_group("Z"), InvalidInputError);
    CHECK_THROWS_AS(parse_group("Z1"), InvalidInputError);
    CHECK(format_group(parse_group("z2xz3")) == "Z2xZ3");
}
