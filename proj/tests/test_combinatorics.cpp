#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace htors;

namespace {
TupleUniverse auslander(int n, int d) {
    return TupleUniverse::build(Context::auslander(n, d));
}
} // namespace

TEST_CASE("product order") {
    CHECK(leq(OsTuple{0, 0, 1}, OsTuple{0, 0, 1}));
    CHECK(leq(OsTuple{0, 0, 1}, OsTuple{0, 1, 1}));
    CHECK_FALSE(leq(OsTuple{0, 2, 2}, OsTuple{1, 1, 2}));
    CHECK_THROWS_AS(leq(OsTuple{0, 1}, OsTuple{0, 1, 2}), UsageError);
}

TEST_CASE("interleaving relation") {
    CHECK(interleaves(OsTuple{0, 1, 1}, OsTuple{0, 1, 1}));
    CHECK(interleaves(OsTuple{0, 1, 1}, OsTuple{1, 1, 2}));
    CHECK_FALSE(interleaves(OsTuple{0, 0, 0}, OsTuple{0, 0, -1}));
    CHECK_THROWS_AS(interleaves(OsTuple{0}, OsTuple{0, 1}), UsageError);
}

TEST_CASE("translate decrements coordinates") {
    CHECK(tau(OsTuple{1, 1, 1}) == OsTuple{0, 0, 0});
    CHECK(tau(OsTuple{0, 0, 0}) == OsTuple{-1, -1, -1});
    CHECK(tau(OsTuple{1, 2, 3}) == OsTuple{0, 1, 2});
}

TEST_CASE("loewy length") {
    CHECK(loewy_length(OsTuple{0, 0, 0}) == 1);
    CHECK(loewy_length(OsTuple{1, 3, 3}) == 3);
    CHECK(loewy_length(OsTuple{1, 2, 3}) == 3);
}

TEST_CASE("auslander universe enumeration") {
    const auto u = auslander(2, 1);
    REQUIRE(u.size() == 3);
    CHECK(u.tuple(0) == OsTuple{0, 0});
    CHECK(u.tuple(1) == OsTuple{0, 1});
    CHECK(u.tuple(2) == OsTuple{1, 1});

    CHECK(auslander(4, 2).size() == 20);
}

TEST_CASE("auslander universe size is the binomial count") {
    for (int n = 1; n <= 6; ++n) {
        for (int d = 1; d <= 8; ++d) {
            const auto u = auslander(n, d);
            CHECK(u.size() == testsup::binomial(static_cast<std::uint64_t>(n + d),
                                                static_cast<std::uint64_t>(d + 1)));
            // strictly increasing lexicographic order
            for (std::size_t i = 0; i + 1 < u.size(); ++i) CHECK(u.tuple(i) < u.tuple(i + 1));
        }
    }
}

TEST_CASE("nakayama universe matches the figure") {
    const auto series = KupischSeries::type_a({1, 2, 2, 3});
    const auto u = TupleUniverse::build(Context::nakayama_a(series, 2));
    const std::vector<OsTuple> expected = {
        {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2},
        {1, 2, 3}, {1, 3, 3}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
    REQUIRE(u.size() == 13);
    CHECK(u.tuples() == expected);
}

TEST_CASE("nakayama universe equals the filtered auslander universe") {
    const auto series = KupischSeries::type_a({1, 2, 2, 3});
    const auto nak = TupleUniverse::build(Context::nakayama_a(series, 2));
    const auto aus = auslander(4, 2);
    std::vector<OsTuple> filtered;
    for (const auto& t : aus.tuples())
        if (loewy_length(t) <= series.at(t.back())) filtered.push_back(t);
    CHECK(nak.tuples() == filtered);
}

TEST_CASE("kupisch validation names the violation") {
    CHECK_THROWS_AS(KupischSeries::type_a({2, 2}), UsageError);
    CHECK_THROWS_AS(KupischSeries::type_a({1, 3}), UsageError);
    CHECK_THROWS_AS(KupischSeries::type_a({1, 2, 1}), UsageError);
    CHECK_THROWS_WITH(KupischSeries::type_a({1, 3}),
                      Catch::Matchers::ContainsSubstring("l_1") &&
                          Catch::Matchers::ContainsSubstring("l_{i-1}+1"));
    CHECK_THROWS_AS(KupischSeries::finite_ainf({1, 3}), UsageError);
    CHECK_THROWS_AS(KupischSeries::finite_ainf({2, 2}), UsageError);
    CHECK_NOTHROW(KupischSeries::finite_ainf({1, 2, 0, 1, 2, 3}));
}

TEST_CASE("finite a-infinity series normalises its window") {
    const auto s = KupischSeries::finite_ainf({0, 0, 1, 2, 0}, -1);
    CHECK(s.offset() == 1);
    CHECK(s.values() == std::vector<int>{1, 2});
    CHECK(s.at(0) == 0);
    CHECK(s.at(1) == 1);
    CHECK(s.at(2) == 2);
    CHECK(s.at(3) == 0);

    const auto empty = KupischSeries::finite_ainf({0, 0, 0}, 5);
    CHECK(empty.empty());
    CHECK(empty.offset() == 0);
}

TEST_CASE("a-infinity universe covers the window positions") {
    const auto s = KupischSeries::finite_ainf({1, 2, 2}, 3);
    const auto u = TupleUniverse::build(Context::nakayama_ainf(s, 2));
    // same shape as the 0-based series, shifted by 3
    const auto base = TupleUniverse::build(
        Context::nakayama_a(KupischSeries::type_a({1, 2, 2}), 2));
    REQUIRE(u.size() == base.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        OsTuple shifted = base.tuple(i);
        for (auto& c : shifted) c += 3;
        CHECK(u.tuple(i) == shifted);
    }
}

TEST_CASE("interleaving implies product order, exhaustively") {
    for (const auto& u : {auslander(3, 2), auslander(2, 5), auslander(4, 1)}) {
        REQUIRE(u.size() <= 200);
        for (std::size_t i = 0; i < u.size(); ++i) {
            for (std::size_t j = 0; j < u.size(); ++j) {
                if (interleaves(u.tuple(i), u.tuple(j))) CHECK(leq(u.tuple(i), u.tuple(j)));
            }
        }
    }
}

TEST_CASE("interleaving is reflexive and antisymmetric on the universe") {
    const auto u = auslander(3, 3);
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(interleaves(u.tuple(i), u.tuple(i)));
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (i != j && interleaves(u.tuple(i), u.tuple(j)))
                CHECK_FALSE(interleaves(u.tuple(j), u.tuple(i)));
        }
    }
}

TEST_CASE("translate preserves the product order") {
    const auto u = auslander(4, 2);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (leq(u.tuple(i), u.tuple(j))) CHECK(leq(tau(u.tuple(i)), tau(u.tuple(j))));
        }
    }
}

TEST_CASE("module support") {
    const auto u1 = auslander(3, 1);
    CHECK(u1.module_support(OsTuple{0, 2}) ==
          std::vector<OsTuple>{{0}, {1}, {2}});
    CHECK(u1.module_support(OsTuple{1, 1}) == std::vector<OsTuple>{{1}});

    const auto u2 = auslander(3, 2);
    CHECK(u2.module_support(OsTuple{0, 1, 2}) ==
          std::vector<OsTuple>{{0, 1}, {0, 2}, {1, 1}, {1, 2}});

    CHECK_THROWS_AS(u2.module_support(OsTuple{0, 0, 7}), UsageError);
}

TEST_CASE("universe cap is a resource error") {
    CHECK_THROWS_AS(TupleUniverse::build(Context::auslander(100, 8)), ResourceError);
    CHECK_THROWS_AS(TupleUniverse::build(Context::auslander(3, 2), 5), ResourceError);
}
