#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace htors;

TEST_CASE("context descriptors round-trip") {
    const Context cases[] = {
        Context::auslander(3, 2),
        Context::nakayama_a(KupischSeries::type_a({1, 2, 2, 3}), 2),
        Context::nakayama_ainf(KupischSeries::finite_ainf({1, 2, 0, 1}, -2), 3),
    };
    for (const auto& ctx : cases) {
        const json j = context_to_json(ctx);
        CHECK(context_from_json(j) == ctx);
        // and through text
        CHECK(context_from_json(json::parse(j.dump())) == ctx);
    }
    CHECK_THROWS_AS(context_from_json(json::parse(R"({"variant":"?","d":1})")), UsageError);
    CHECK_THROWS_AS(context_from_json(json::parse(R"({"d":1})")), UsageError);
}

TEST_CASE("documents round-trip losslessly") {
    const auto u = TupleUniverse::build(Context::auslander(2, 2));
    const auto c = enumerate_incremental(u);
    const json doc = collection_to_json(c);
    CHECK(doc.at("count").get<std::size_t>() == 6);
    CHECK(doc.at("format_version").get<std::string>() == "1");

    const std::string text = canonical_dump(doc);
    const ResultDocument parsed = parse_document(json::parse(text));
    CHECK(parsed.context == u.context());
    REQUIRE(parsed.classes.has_value());
    const auto rebuilt = collection_from_document(parsed, u);
    REQUIRE(rebuilt.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(rebuilt.at(i) == c.at(i));

    // serialise(parse(serialise(x))) is byte-identical
    CHECK(canonical_dump(collection_to_json(rebuilt)) == text);
}

TEST_CASE("classes are serialised in canonical order") {
    const auto u = TupleUniverse::build(Context::auslander(3, 2));
    const json doc = collection_to_json(enumerate_incremental(u));
    const auto& classes = doc.at("classes");
    for (std::size_t i = 0; i + 1 < classes.size(); ++i) {
        const auto& a = classes[i];
        const auto& b = classes[i + 1];
        const bool card_ok = a.size() < b.size() || (a.size() == b.size() && a < b);
        CHECK(card_ok);
    }
    for (const auto& cls : classes) {
        for (std::size_t k = 0; k + 1 < cls.size(); ++k)
            CHECK(cls[k].get<OsTuple>() < cls[k + 1].get<OsTuple>());
    }
}

TEST_CASE("document validation") {
    const auto u = TupleUniverse::build(Context::auslander(2, 1));
    json doc = collection_to_json(enumerate_incremental(u));

    json bad_count = doc;
    bad_count["count"] = 99;
    CHECK_THROWS_AS(parse_document(bad_count), DataError);

    json bad_version = doc;
    bad_version["format_version"] = "0";
    CHECK_THROWS_AS(parse_document(bad_version), UsageError);

    json foreign = doc;
    foreign["classes"].push_back(json::array({json::array({7, 9})}));
    foreign["count"] = foreign["classes"].size();
    CHECK_THROWS_AS(collection_from_document(parse_document(foreign), u), DataError);

    json dup = doc;
    dup["classes"].push_back(dup["classes"].back());
    dup["count"] = dup["classes"].size();
    CHECK_THROWS_AS(collection_from_document(parse_document(dup), u), DataError);
}

TEST_CASE("hasse edges serialise as index pairs") {
    const auto u = TupleUniverse::build(Context::auslander(2, 1));
    const auto c = enumerate_incremental(u);
    const auto lat = build_hasse(c);
    json doc = collection_to_json(c);
    doc["hasse"] = hasse_to_json(lat);
    const auto parsed = parse_document(doc);
    REQUIRE(parsed.hasse.has_value());
    CHECK(*parsed.hasse == lat.covers);
}

TEST_CASE("dot output is stable and labelled") {
    const auto u = TupleUniverse::build(Context::auslander(1, 1));
    const auto c = enumerate_incremental(u);
    const auto lat = build_hasse(c);
    CHECK(to_dot(c, lat) == "digraph hasse {\n"
                            "  c0 [label=\"0\"];\n"
                            "  c1 [label=\"1\"];\n"
                            "  c1 -> c0;\n"
                            "}\n");
    CHECK(to_dot(c, lat, DotLabels::full) == "digraph hasse {\n"
                                             "  c0 [label=\"{}\"];\n"
                                             "  c1 [label=\"(0,0)\"];\n"
                                             "  c1 -> c0;\n"
                                             "}\n");
}

TEST_CASE("glued series document lists blocks") {
    const auto ctx = Context::nakayama_ainf(KupischSeries::finite_ainf({1, 2, 0, 1}), 2);
    const auto e = enumerate_ainf(ctx);
    const json doc = ainf_to_json(e);
    CHECK(doc.at("count").get<std::uint64_t>() == e.total);
    REQUIRE(doc.at("blocks").size() == 2);
    CHECK(doc["blocks"][0]["offset"] == 0);
    CHECK(doc["blocks"][0]["kupisch"] == json::array({1, 2}));
    CHECK(doc["blocks"][1]["offset"] == 3);
    CHECK(doc["blocks"][1]["count"].get<std::size_t>() == e.collections[1].size());
    // context descriptor round-trips
    CHECK(context_from_json(doc.at("context")) == ctx);
}
