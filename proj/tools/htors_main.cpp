// Command-line driver: enumerate, closure, check, hasse, props.
//
// Exit codes: 0 success, 1 input error, 2 inconsistent input data,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <htors/htors.hpp>

namespace {

using namespace htors;

struct ContextFlags {
    int n = 0;
    int d = 0;
    std::string kupisch;
    bool ainf = false;
    int offset = 0;
};

void add_context_flags(CLI::App* cmd, ContextFlags& f) {
    cmd->add_option("--n", f.n, "number of simples of the linear quiver (Auslander context)");
    cmd->add_option("--d", f.d, "degree d of the cluster tilting subcategory")->required();
    cmd->add_option("--kupisch", f.kupisch, "comma-separated kupisch series (Nakayama context)");
    cmd->add_flag("--ainf", f.ainf, "treat --kupisch as a finite A-infinity series");
    cmd->add_option("--offset", f.offset, "first listed position of an A-infinity window");
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse integer '" + item + "'");
        }
    }
    return out;
}

Context make_context(const ContextFlags& f) {
    const bool have_n = f.n != 0;
    const bool have_k = !f.kupisch.empty();
    if (have_n == have_k)
        throw UsageError("specify exactly one context: --n INT or --kupisch L0,L1,...");
    if (have_n) {
        if (f.ainf) throw UsageError("--ainf requires --kupisch");
        return Context::auslander(f.n, f.d);
    }
    const auto values = parse_int_list(f.kupisch);
    if (f.ainf)
        return Context::nakayama_ainf(KupischSeries::finite_ainf(values, f.offset), f.d);
    return Context::nakayama_a(KupischSeries::type_a(values), f.d);
}

std::vector<OsTuple> parse_tuple_list(const std::string& s, int width) {
    std::vector<OsTuple> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        OsTuple t;
        for (int v : parse_int_list(item)) t.push_back(v);
        if (static_cast<int>(t.size()) != width)
            throw UsageError("tuple '" + item + "' has " + std::to_string(t.size()) +
                             " coordinates, expected " + std::to_string(width));
        out.push_back(std::move(t));
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file '" + out_path + "'");
    out << text;
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

struct EnumerateCmd {
    ContextFlags ctx;
    bool count_only = false;
    std::string algorithm = "incremental";
    unsigned workers = 1;
    std::string out_path;
    std::size_t max_classes = 1'000'000;
    std::size_t max_universe = default_universe_cap;

    EnumerateOptions options() const {
        EnumerateOptions o;
        if (algorithm == "incremental")
            o.algorithm = EnumAlgorithm::incremental;
        else if (algorithm == "paper")
            o.algorithm = EnumAlgorithm::levelwise;
        else
            throw UsageError("--algorithm must be 'paper' or 'incremental'");
        o.workers = workers == 0 ? 1 : workers;
        o.max_classes = max_classes;
        o.max_universe = max_universe;
        return o;
    }

    int run() const {
        const Context c = make_context(ctx);
        const EnumerateOptions opts = options();
        if (c.kind() == AlgebraKind::nakayama_ainf) {
            const AinfEnumeration e = enumerate_ainf(c, opts);
            if (count_only)
                emit(std::to_string(e.total) + "\n", out_path);
            else
                emit(canonical_dump(ainf_to_json(e)), out_path);
            return 0;
        }
        const TupleUniverse u = TupleUniverse::build(c, opts.max_universe);
        const ClassCollection classes = enumerate_classes(u, opts);
        if (count_only)
            emit(std::to_string(classes.size()) + "\n", out_path);
        else
            emit(canonical_dump(collection_to_json(classes)), out_path);
        return 0;
    }
};

struct ClosureCmd {
    ContextFlags ctx;
    std::string gens;
    std::string out_path;

    int run() const {
        const Context c = make_context(ctx);
        const TupleUniverse u = TupleUniverse::build(c);
        const auto tuples = parse_tuple_list(gens, c.width());
        const ModuleSet closed = generate_minimal(tuples, u);
        emit(class_to_json(closed).dump() + "\n", out_path);
        return 0;
    }
};

struct CheckCmd {
    ContextFlags ctx;
    std::string members;
    std::string class_file;
    std::string out_path;

    int run() const {
        const Context c = make_context(ctx);
        const TupleUniverse u = TupleUniverse::build(c);
        std::vector<OsTuple> tuples;
        if (!class_file.empty()) {
            const json j = load_json(class_file);
            if (!j.is_array()) throw UsageError("class file must hold a JSON array of tuples");
            for (const auto& t : j) {
                OsTuple tup = t.get<OsTuple>();
                if (static_cast<int>(tup.size()) != c.width())
                    throw UsageError("class file tuple has wrong width");
                tuples.push_back(std::move(tup));
            }
        } else {
            tuples = parse_tuple_list(members, c.width());
        }
        const ModuleSet s = ModuleSet::of_tuples(u, tuples);
        const auto violation = find_torsion_violation(s);
        std::string text;
        if (!violation) {
            text = "true\n";
        } else {
            json w;
            w["condition"] = violation->condition;
            w["x"] = u.tuple(violation->x);
            w["z"] = u.tuple(violation->z);
            w["y"] = u.tuple(violation->y);
            text = "false\n" + w.dump() + "\n";
        }
        emit(text, out_path);
        return 0;
    }
};

struct HasseCmd {
    std::string in_path;
    std::string format = "dot";
    std::string labels = "card";
    std::string out_path;

    int run() const {
        const json j = load_json(in_path);
        const ResultDocument doc = parse_document(j);
        const TupleUniverse u = TupleUniverse::build(doc.context);
        const ClassCollection classes = collection_from_document(doc, u);
        validate_collection(classes);
        const TorsionLattice lat = build_hasse(classes);
        if (format == "dot") {
            if (labels != "card" && labels != "full")
                throw UsageError("--labels must be 'card' or 'full'");
            emit(to_dot(classes, lat,
                        labels == "full" ? DotLabels::full : DotLabels::cardinality),
                 out_path);
        } else if (format == "json") {
            json out = collection_to_json(classes);
            out["hasse"] = hasse_to_json(lat);
            emit(canonical_dump(out), out_path);
        } else {
            throw UsageError("--format must be 'dot' or 'json'");
        }
        return 0;
    }
};

struct PropsCmd {
    std::string in_path;
    std::size_t node_cap = default_semidistributive_node_cap;
    bool force = false;
    std::string out_path;

    int run() const {
        const json j = load_json(in_path);
        const ResultDocument doc = parse_document(j);
        const TupleUniverse u = TupleUniverse::build(doc.context);
        const ClassCollection classes = collection_from_document(doc, u);
        validate_collection(classes);
        const TorsionLattice lat = build_hasse(classes);
        const LatticeTables tables = build_tables(classes);
        const SemidistributivityReport sd = check_semidistributive(classes, tables, node_cap, force);
        const RegularityReport reg = check_hasse_regular(lat);
        json rep;
        rep["is_lattice"] = true; // build_tables verified every pairwise meet and join
        rep["join_semidistributive"] = sd.join_sd;
        rep["meet_semidistributive"] = sd.meet_sd;
        if (sd.witness) {
            json w;
            w["law"] = sd.witness->law;
            w["a"] = sd.witness->a;
            w["b"] = sd.witness->b;
            w["c"] = sd.witness->c;
            rep["witness"] = std::move(w);
        } else {
            rep["witness"] = nullptr;
        }
        rep["hasse_regular"] = reg.regular;
        json hist = json::array();
        for (const auto& [degree, count] : reg.degree_multiset)
            hist.push_back(json::array({degree, count}));
        rep["degree_multiset"] = std::move(hist);
        emit(canonical_dump(rep), out_path);
        return 0;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics of higher torsion classes for higher Auslander and "
                 "Nakayama algebras of type A"};
    app.require_subcommand(1);

    EnumerateCmd enumerate_cmd;
    auto* enum_app = app.add_subcommand("enumerate", "enumerate all torsion classes of a context");
    add_context_flags(enum_app, enumerate_cmd.ctx);
    enum_app->add_flag("--count-only", enumerate_cmd.count_only, "print only the class count");
    enum_app->add_option("--algorithm", enumerate_cmd.algorithm,
                         "enumeration engine: paper | incremental");
    enum_app->add_option("--workers", enumerate_cmd.workers, "worker threads");
    enum_app->add_option("--out", enumerate_cmd.out_path, "write output to a file");
    enum_app->add_option("--max-classes", enumerate_cmd.max_classes, "class count cap");
    enum_app->add_option("--max-universe", enumerate_cmd.max_universe, "universe size cap");

    ClosureCmd closure_cmd;
    auto* closure_app =
        app.add_subcommand("closure", "smallest torsion class containing the generators");
    add_context_flags(closure_app, closure_cmd.ctx);
    closure_app->add_option("--gens", closure_cmd.gens,
                            "generators as 'x0,x1,...;y0,y1,...' (may be empty)");
    closure_app->add_option("--out", closure_cmd.out_path, "write output to a file");

    CheckCmd check_cmd;
    auto* check_app = app.add_subcommand("check", "test whether a set is a torsion class");
    add_context_flags(check_app, check_cmd.ctx);
    check_app->add_option("--members", check_cmd.members, "inline members, same syntax as --gens");
    check_app->add_option("--class-file", check_cmd.class_file, "JSON array of tuples");
    check_app->add_option("--out", check_cmd.out_path, "write output to a file");

    HasseCmd hasse_cmd;
    auto* hasse_app = app.add_subcommand("hasse", "cover relations of an enumerated collection");
    hasse_app->add_option("--in", hasse_cmd.in_path, "classes JSON produced by enumerate")
        ->required();
    hasse_app->add_option("--format", hasse_cmd.format, "dot | json");
    hasse_app->add_option("--labels", hasse_cmd.labels, "dot node labels: card | full");
    hasse_app->add_option("--out", hasse_cmd.out_path, "write output to a file");

    PropsCmd props_cmd;
    auto* props_app = app.add_subcommand("props", "lattice property report");
    props_app->add_option("--in", props_cmd.in_path, "classes JSON produced by enumerate")
        ->required();
    props_app->add_option("--node-cap", props_cmd.node_cap,
                          "refuse semidistributivity scans above this many classes");
    props_app->add_flag("--force", props_cmd.force, "scan even above the node cap");
    props_app->add_option("--out", props_cmd.out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (enum_app->parsed()) return enumerate_cmd.run();
        if (closure_app->parsed()) return closure_cmd.run();
        if (check_app->parsed()) return check_cmd.run();
        if (hasse_app->parsed()) return hasse_cmd.run();
        if (props_app->parsed()) return props_cmd.run();
        std::cerr << "no subcommand given\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
