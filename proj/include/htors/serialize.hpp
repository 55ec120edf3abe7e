#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "htors/context.hpp"
#include "htors/enumerate.hpp"
#include "htors/lattice.hpp"

namespace htors {

inline constexpr const char* format_version = "1";

using json = nlohmann::json;

inline json context_to_json(const Context& ctx) {
    json j;
    j["d"] = ctx.d();
    switch (ctx.kind()) {
    case AlgebraKind::auslander:
        j["variant"] = "auslander";
        j["n"] = ctx.n();
        break;
    case AlgebraKind::nakayama_a:
        j["variant"] = "nakayama_a";
        j["kupisch"] = ctx.series().values();
        break;
    case AlgebraKind::nakayama_ainf:
        j["variant"] = "nakayama_ainf_finite";
        j["kupisch"] = ctx.series().values();
        j["offset"] = ctx.series().offset();
        break;
    }
    return j;
}

inline Context context_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variant") || !j.contains("d"))
        throw UsageError("context descriptor needs 'variant' and 'd'");
    const std::string variant = j.at("variant").get<std::string>();
    const int d = j.at("d").get<int>();
    if (variant == "auslander") return Context::auslander(j.at("n").get<int>(), d);
    if (variant == "nakayama_a")
        return Context::nakayama_a(
            KupischSeries::type_a(j.at("kupisch").get<std::vector<int>>()), d);
    if (variant == "nakayama_ainf_finite")
        return Context::nakayama_ainf(
            KupischSeries::finite_ainf(j.at("kupisch").get<std::vector<int>>(),
                                       j.value("offset", 0)),
            d);
    throw UsageError("unknown context variant '" + variant + "'");
}

inline json tuples_to_json(const std::vector<OsTuple>& ts) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(t);
    return arr;
}

inline json class_to_json(const ModuleSet& s) { return tuples_to_json(s.to_tuples()); }

/// Full result document for an enumerated collection. Canonical: classes in
/// collection order, tuples in ascending order inside each class.
inline json collection_to_json(const ClassCollection& c) {
    json doc;
    doc["format_version"] = format_version;
    doc["context"] = context_to_json(c.universe().context());
    doc["count"] = c.size();
    json classes = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) classes.push_back(class_to_json(c.module_set(i)));
    doc["classes"] = std::move(classes);
    return doc;
}

inline json hasse_to_json(const TorsionLattice& lat) {
    json edges = json::array();
    for (const auto& [upper, lower] : lat.covers) edges.push_back(json::array({upper, lower}));
    return edges;
}

inline json ainf_to_json(const AinfEnumeration& e) {
    json doc;
    doc["format_version"] = format_version;
    doc["context"] = context_to_json(e.context);
    doc["count"] = e.total;
    json blocks = json::array();
    for (std::size_t k = 0; k < e.blocks.size(); ++k) {
        json b;
        b["offset"] = e.blocks[k].offset;
        b["kupisch"] = e.blocks[k].series.values();
        b["count"] = e.collections[k].size();
        json classes = json::array();
        for (std::size_t i = 0; i < e.collections[k].size(); ++i)
            classes.push_back(class_to_json(e.collections[k].module_set(i)));
        b["classes"] = std::move(classes);
        blocks.push_back(std::move(b));
    }
    doc["blocks"] = std::move(blocks);
    return doc;
}

struct ResultDocument {
    Context context;
    std::optional<std::vector<std::vector<OsTuple>>> classes;
    std::uint64_t count = 0;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> hasse;
};

inline ResultDocument parse_document(const json& j) {
    if (!j.is_object()) throw UsageError("result document must be a JSON object");
    if (j.value("format_version", "") != format_version)
        throw UsageError("unsupported format_version");
    ResultDocument doc{context_from_json(j.at("context")), std::nullopt, 0, std::nullopt};
    if (j.contains("classes")) {
        std::vector<std::vector<OsTuple>> classes;
        for (const auto& cls : j.at("classes")) {
            std::vector<OsTuple> members;
            for (const auto& t : cls) members.push_back(t.get<OsTuple>());
            classes.push_back(std::move(members));
        }
        doc.classes = std::move(classes);
    }
    doc.count = j.value("count", std::uint64_t{0});
    if (doc.classes && doc.count != doc.classes->size())
        throw DataError("count does not match the number of classes");
    if (j.contains("hasse")) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : j.at("hasse"))
            edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        doc.hasse = std::move(edges);
    }
    return doc;
}

/// Rebuild a collection from a parsed document against a freshly built
/// universe. Members outside the universe are inconsistent data.
inline ClassCollection collection_from_document(const ResultDocument& doc,
                                                const TupleUniverse& u) {
    if (!doc.classes) throw UsageError("document has no classes");
    std::vector<Bitset> sets;
    sets.reserve(doc.classes->size());
    for (const auto& members : *doc.classes) {
        Bitset b(u.size());
        for (const auto& t : members) {
            auto idx = u.find(t);
            if (!idx)
                throw DataError("class member " + tuple_to_string(t) +
                                " is not in the universe of " + u.context().describe());
            b.set(*idx);
        }
        sets.push_back(std::move(b));
    }
    const std::size_t before = sets.size();
    ClassCollection out(u, std::move(sets));
    if (out.size() != before) throw DataError("document contains duplicate classes");
    return out;
}

enum class DotLabels { cardinality, full };

/// Graphviz output: one node per class (canonical ids), one edge u -> v per
/// cover, arrows pointing downward. Emission order is canonical, so output
/// is byte-identical across runs.
inline std::string to_dot(const ClassCollection& c, const TorsionLattice& lat,
                          DotLabels labels = DotLabels::cardinality) {
    std::string out = "digraph hasse {\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::string label;
        if (labels == DotLabels::cardinality) {
            label = std::to_string(c.at(i).count());
        } else {
            const auto tuples = c.module_set(i).to_tuples();
            if (tuples.empty()) label = "{}";
            for (std::size_t k = 0; k < tuples.size(); ++k) {
                if (k) label += ' ';
                label += tuple_to_string(tuples[k]);
            }
        }
        out += "  c" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (const auto& [upper, lower] : lat.covers)
        out += "  c" + std::to_string(upper) + " -> c" + std::to_string(lower) + ";\n";
    out += "}\n";
    return out;
}

/// The one serialised form used for files and stdout.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace htors
