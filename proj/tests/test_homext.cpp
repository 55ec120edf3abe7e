#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace htors;

namespace {

TupleUniverse auslander(int n, int d) {
    return TupleUniverse::build(Context::auslander(n, d));
}

TupleUniverse nakayama_1223() {
    return TupleUniverse::build(Context::nakayama_a(KupischSeries::type_a({1, 2, 2, 3}), 2));
}

/// All middle terms of the pair, pooled across layers.
std::vector<OsTuple> pooled(const ExtensionMiddleTerms& e) {
    std::vector<OsTuple> all;
    for (const auto& layer : e.layers) all.insert(all.end(), layer.begin(), layer.end());
    return all;
}

} // namespace

TEST_CASE("hom dimensions") {
    const auto u = auslander(3, 2);
    for (std::size_t i = 0; i < u.size(); ++i)
        CHECK(hom_dim(u.tuple(i), u.tuple(i), u) == 1);
    CHECK(hom_dim(OsTuple{0, 0, 1}, OsTuple{0, 1, 2}, u) == 1);
    CHECK(hom_dim(OsTuple{1, 1, 1}, OsTuple{0, 0, 0}, u) == 0);
    CHECK_THROWS_AS(hom_dim(OsTuple{0, 0, 7}, OsTuple{0, 0, 0}, u), UsageError);
}

TEST_CASE("ext dimensions") {
    const auto u = auslander(3, 2);
    for (std::size_t i = 0; i < u.size(); ++i)
        CHECK(ext_dim(u.tuple(i), u.tuple(i), u) == 0);
    CHECK(ext_dim(OsTuple{1, 1, 1}, OsTuple{0, 0, 0}, u) == 1);
    CHECK(ext_dim(OsTuple{1, 1, 1}, OsTuple{0, 1, 1}, u) == 0);
    CHECK_THROWS_AS(ext_dim(OsTuple{3, 3, 3}, OsTuple{0, 0, 0}, u), UsageError);
}

TEST_CASE("middle terms of the basic extension") {
    const auto u = auslander(3, 2);
    const auto e = ext_middle_terms(OsTuple{0, 0, 0}, OsTuple{1, 1, 1}, u);
    REQUIRE(e.layers.size() == 2);
    CHECK(e.layers[0] == std::vector<OsTuple>{{0, 0, 1}});
    CHECK(e.layers[1] == std::vector<OsTuple>{{0, 1, 1}});
}

TEST_CASE("middle terms for d = 1") {
    const auto u = auslander(3, 1);
    const auto e = ext_middle_terms(OsTuple{0, 1}, OsTuple{1, 2}, u);
    REQUIRE(e.layers.size() == 1);
    CHECK(e.layers[0] == std::vector<OsTuple>{{0, 2}, {1, 1}});
}

TEST_CASE("nakayama loewy filter excludes mixtures") {
    const auto u = nakayama_1223();
    const OsTuple x{0, 0, 1}, y{1, 1, 2};
    REQUIRE(ext_dim(y, x, u) == 1);
    const auto e = ext_middle_terms(x, y, u);
    CHECK(e.layers[0] == std::vector<OsTuple>{{0, 1, 1}});
    CHECK(e.layers[1] == std::vector<OsTuple>{{1, 1, 1}});
    // (0,0,2) and (0,1,2) are non-decreasing mixtures of the pair, but their
    // Loewy length 3 exceeds the bound 2 at position 2.
    const auto all = pooled(e);
    CHECK(std::find(all.begin(), all.end(), OsTuple{0, 0, 2}) == all.end());
    CHECK(std::find(all.begin(), all.end(), OsTuple{0, 1, 2}) == all.end());
    // the same mixtures are genuine middle terms in the ambient universe
    const auto aus = auslander(4, 2);
    const auto pooled_aus = pooled(ext_middle_terms(x, y, aus));
    CHECK(std::find(pooled_aus.begin(), pooled_aus.end(), OsTuple{0, 0, 2}) != pooled_aus.end());
    CHECK(std::find(pooled_aus.begin(), pooled_aus.end(), OsTuple{0, 1, 2}) != pooled_aus.end());
}

TEST_CASE("middle terms require a non-trivial extension") {
    const auto u = auslander(3, 2);
    CHECK_THROWS_WITH(ext_middle_terms(OsTuple{0, 0, 0}, OsTuple{0, 1, 1}, u),
                      Catch::Matchers::ContainsSubstring("ext_dim = 0"));
}

TEST_CASE("middle terms sit strictly between the end terms") {
    for (const auto& u : {auslander(3, 2), auslander(3, 3), auslander(4, 2)}) {
        REQUIRE(u.size() <= 200);
        for (std::size_t xi = 0; xi < u.size(); ++xi) {
            for (std::size_t yi = 0; yi < u.size(); ++yi) {
                if (!u.ext_pair(xi, yi)) continue;
                const auto e = ext_middle_terms(u.tuple(xi), u.tuple(yi), u);
                auto all = pooled(e);
                all.push_back(u.tuple(xi));
                all.push_back(u.tuple(yi));
                auto sorted = all;
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                for (const auto& z : pooled(e)) {
                    CHECK(leq(u.tuple(xi), z));
                    CHECK(leq(z, u.tuple(yi)));
                }
            }
        }
    }
}

TEST_CASE("layer sizes match the mixture count") {
    const auto u = auslander(4, 2);
    const int w = u.width();
    for (std::size_t xi = 0; xi < u.size(); ++xi) {
        for (std::size_t yi = 0; yi < u.size(); ++yi) {
            if (!u.ext_pair(xi, yi)) continue;
            const auto& x = u.tuple(xi);
            const auto& y = u.tuple(yi);
            const auto e = ext_middle_terms(x, y, u);
            for (int k = 1; k <= w - 1; ++k) {
                // direct mixture filter, independent of the layer assembly
                std::size_t expected = 0;
                for (std::uint32_t m = 0; m < (1u << w); ++m) {
                    if (std::popcount(m) != k) continue;
                    OsTuple z(static_cast<std::size_t>(w));
                    for (int i = 0; i < w; ++i)
                        z[static_cast<std::size_t>(i)] =
                            (m >> i) & 1 ? y[static_cast<std::size_t>(i)]
                                         : x[static_cast<std::size_t>(i)];
                    if (is_nondecreasing(z) && u.contains(z)) ++expected;
                }
                CHECK(e.layers[static_cast<std::size_t>(k - 1)].size() == expected);
                CHECK(e.layers[static_cast<std::size_t>(k - 1)].size() <=
                      testsup::binomial(static_cast<std::uint64_t>(w),
                                        static_cast<std::uint64_t>(k)));
            }
        }
    }
}

TEST_CASE("d = 1 extensions have one or two middle terms") {
    for (int n : {2, 3, 4, 5}) {
        const auto u = auslander(n, 1);
        for (std::size_t xi = 0; xi < u.size(); ++xi) {
            for (std::size_t yi = 0; yi < u.size(); ++yi) {
                if (!u.ext_pair(xi, yi)) continue;
                const auto& x = u.tuple(xi);
                const auto& y = u.tuple(yi);
                const auto e = ext_middle_terms(x, y, u);
                const std::size_t count = e.layers[0].size();
                CHECK((count == 1 || count == 2));
                CHECK(count == (y[0] <= x[1] ? 2u : 1u));
            }
        }
    }
}
