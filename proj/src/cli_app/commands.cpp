#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcp/cli.hpp"
#include "mcp/parallel.hpp"
#include "text.hpp"

#ifndef MCP_DEFAULT_GOLDEN_DIR
#define MCP_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace mcp {

namespace {

using ojson = nlohmann::ordered_json;

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& t) {
    std::string s;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_escape(cells[i]);
        s += "\n";
    };
    line(t.headers);
    for (const auto& r : t.rows) line(r);
    return s;
}

std::string render_md(const Table& t) {
    std::string s;
    auto line = [&](const std::vector<std::string>& cells) {
        s += "|";
        for (const auto& c : cells) s += " " + c + " |";
        s += "\n";
    };
    line(t.headers);
    s += "|";
    for (std::size_t i = 0; i < t.headers.size(); ++i) s += " --- |";
    s += "\n";
    for (const auto& r : t.rows) line(r);
    return s;
}

std::string yes(bool b) { return b ? "+" : ""; }

ojson instance_header(const Instance& inst) {
    ojson j;
    j["group"] = inst.spec.name();
    j["g0"] = inst.spec.argument(inst.g0);
    std::vector<std::string> order;
    for (int e = 1; e < inst.spec.order(); ++e) order.push_back(inst.spec.label(e));
    j["order"] = order;
    return j;
}

std::vector<std::string> coord_headers(const Instance& inst) {
    std::vector<std::string> h;
    for (int e = 1; e < inst.spec.order(); ++e) h.push_back(inst.spec.label(e));
    return h;
}

std::vector<std::string> coord_cells(const Point& t) {
    std::vector<std::string> c;
    for (int x : t) c.push_back(std::to_string(x));
    return c;
}

struct Emitted {
    std::string text;
    int status = 0;
};

struct Context {
    std::string format;
    Instance inst;
    AutScope scope = AutScope::componentwise;
};

// Either a JSON document or a table, rendered in the requested format.
std::string emit(const Context& c, const ojson& j, const Table& t) {
    if (c.format == "json") return j.dump(2) + "\n";
    if (c.format == "csv") return render_csv(t);
    return render_md(t);
}

Emitted cmd_points(const Context& c) {
    auto pts = enumerate_irreducible_points(c.inst);
    ojson j = instance_header(c.inst);
    j["points"] = pts;
    Table t;
    t.headers = coord_headers(c.inst);
    t.headers.insert(t.headers.begin(), "#");
    t.headers.push_back("total");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto row = coord_cells(pts[i]);
        row.insert(row.begin(), std::to_string(i + 1));
        row.push_back(std::to_string(total(pts[i])));
        t.rows.push_back(std::move(row));
    }
    return {emit(c, j, t)};
}

InstanceAnalysis analysis_for(const Context& c, bool graph) {
    AnalysisOptions o;
    o.scope = c.scope;
    o.graph = graph;
    return analyze(c.inst, o);
}

Emitted cmd_vertices(const Context& c) {
    auto a = analysis_for(c, false);
    if (c.format == "json") return {to_json(make_artifact(a))};
    Table t;
    t.headers = coord_headers(c.inst);
    t.headers.insert(t.headers.begin(), "#");
    for (const char* h : {"Support", "Orbit", "B_A", "B_AS"}) t.headers.push_back(h);
    auto art = make_artifact(a);
    for (std::size_t i = 0; i < art.vertices.size(); ++i) {
        const auto& v = art.vertices[i];
        auto row = coord_cells(v.coords);
        row.insert(row.begin(), "t" + std::to_string(i + 1));
        row.push_back(yes(v.support));
        row.push_back(std::to_string(v.orbit + 1));
        row.push_back(yes(v.basis_a));
        row.push_back(yes(v.basis_as));
        t.rows.push_back(std::move(row));
    }
    return {emit(c, ojson(), t)};
}

Emitted cmd_facets(const Context& c) {
    auto a = analysis_for(c, false);
    ojson j = instance_header(c.inst);
    j["facets"] = ojson::array();
    Table t;
    t.headers = coord_headers(c.inst);
    t.headers.push_back("pi0");
    t.headers.push_back("tight");
    for (const auto& f : a.model.nontrivial_facets()) {
        std::vector<int> tight;
        std::string names;
        for (std::size_t v = 0; v < a.model.vertices.size(); ++v)
            if (f.tight(a.model.vertices[v])) {
                tight.push_back(static_cast<int>(v));
                names += (names.empty() ? "t" : " t") + std::to_string(v + 1);
            }
        ojson r;
        r["pi"] = f.normal;
        r["pi0"] = f.rhs;
        r["tight"] = tight;
        j["facets"].push_back(std::move(r));
        std::vector<std::string> row;
        for (long long x : f.normal) row.push_back(std::to_string(x));
        row.push_back(std::to_string(f.rhs));
        row.push_back(names);
        t.rows.push_back(std::move(row));
    }
    return {emit(c, j, t)};
}

Emitted cmd_support(const Context& c) {
    auto a = analysis_for(c, false);
    ojson j = instance_header(c.inst);
    j["support"] = a.support;
    j["derived"] = ojson::array();
    Table t;
    t.headers = {"vertex", "support", "derivation"};
    for (std::size_t i = 0; i < a.model.vertices.size(); ++i) {
        const auto& v = a.model.vertices[i];
        std::string how;
        if (!a.is_support(v)) {
            auto d = mu_derivation(c.inst, a.model.vertices, v);
            if (d) {
                how = d->op.name(c.inst.spec) + fmt_point(d->source);
                ojson r;
                r["vertex"] = v;
                r["op"] = d->op.name(c.inst.spec);
                r["from"] = d->source;
                j["derived"].push_back(std::move(r));
            }
        }
        t.rows.push_back({fmt_point(v), yes(a.is_support(v)), how});
    }
    return {emit(c, j, t)};
}

Emitted cmd_orbits(const Context& c) {
    auto a = analysis_for(c, false);
    ojson j = instance_header(c.inst);
    j["stabilizer_order"] = a.stab.size();
    j["orbits"] = ojson::array();
    Table t;
    t.headers = {"representative", "size", "type", "support", "members"};
    for (const auto& o : a.orbits) {
        ojson r;
        r["representative"] = o.representative;
        r["members"] = o.members;
        r["multiplicity_type"] = o.multiplicity_type;
        r["support"] = o.is_support_orbit;
        j["orbits"].push_back(std::move(r));
        std::string type = "<";
        for (std::size_t i = 0; i < o.multiplicity_type.size(); ++i)
            type += (i ? "," : "") + std::to_string(o.multiplicity_type[i]);
        t.rows.push_back({fmt_point(o.representative), std::to_string(o.members.size()), type + ">",
                          yes(o.is_support_orbit), fmt_points(o.members)});
    }
    return {emit(c, j, t)};
}

Emitted cmd_bases(const Context& c) {
    auto a = analysis_for(c, false);
    ojson j = instance_header(c.inst);
    Table t;
    t.headers = {"basis", "size", "members"};
    for (const BasisReport* b : {&a.basis_a, &a.basis_s, &a.basis_as}) {
        j[basis_name(b->kind)] = b->members;
        t.rows.push_back({basis_name(b->kind), std::to_string(b->cardinality), fmt_points(b->members)});
    }
    return {emit(c, j, t)};
}

Emitted cmd_graph(const Context& c) {
    auto a = analysis_for(c, true);
    const VertexGraph& g = *a.graph;
    if (c.format == "text") {
        std::string s;
        for (auto [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
        return {s};
    }
    ojson j = instance_header(c.inst);
    j["vertices"] = g.vertices;
    j["adjacency"] = ojson::array();
    for (std::size_t u = 0; u < g.size(); ++u) {
        std::vector<int> nb;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g.adjacency[u][v]) nb.push_back(static_cast<int>(v));
        j["adjacency"].push_back(nb);
    }
    Table t;
    t.headers = {"u", "v"};
    for (auto [u, v] : g.edges()) t.rows.push_back({std::to_string(u), std::to_string(v)});
    return {emit(c, j, t)};
}

Emitted cmd_diameter(const Context& c) {
    auto a = analysis_for(c, true);
    int d = diameter(*a.graph);
    Emitted e;
    e.status = d > 2 ? 3 : 0;
    if (c.format == "json") {
        ojson j = instance_header(c.inst);
        j["diameter"] = d;
        e.text = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        e.text = "group,g0,diameter\n" + c.inst.spec.name() + "," + csv_escape(c.inst.spec.argument(c.inst.g0)) +
                 "," + std::to_string(d) + "\n";
    } else {
        e.text = std::to_string(d) + "\n";
    }
    return e;
}

Emitted cmd_table1(const Context& c, int max_order, const std::optional<std::filesystem::path>& golden,
                   std::ostream& err) {
    auto insts = table1_instances(max_order);
    AnalysisOptions o;
    o.scope = c.scope;
    o.graph = false;
    auto as = analyze_all(insts, o);
    ojson j;
    j["columns"] = ojson::array();
    Table t;
    t.headers = {"P(G,g0)"};
    std::vector<std::vector<std::string>> rows(5);
    const char* names[] = {"|V|", "|S|", "|B_A|", "|B_AS|", "|Aut_g0|-1"};
    for (int r = 0; r < 5; ++r) rows[r].push_back(names[r]);
    for (const auto& a : as) {
        Counts k = a.counts();
        ojson col;
        col["group"] = a.inst().spec.name();
        col["g0"] = a.inst().spec.argument(a.inst().g0);
        col["V"] = k.vertices;
        col["S"] = k.support;
        col["B_A"] = k.basis_a;
        col["B_AS"] = k.basis_as;
        col["aut_minus_1"] = k.aut_minus_1;
        j["columns"].push_back(std::move(col));
        t.headers.push_back("G" + a.inst().name());
        int vals[] = {k.vertices, k.support, k.basis_a, k.basis_as, k.aut_minus_1};
        for (int r = 0; r < 5; ++r) rows[r].push_back(std::to_string(vals[r]));
    }
    t.rows = rows;
    Emitted e{emit(c, j, t)};
    if (golden) {
        for (const auto& col : load_table1(*golden / "table1.json")) {
            for (const auto& a : as) {
                if (!(a.inst() == col.instance())) continue;
                if (!col.expected_mismatch.empty())
                    err << "note: column " << col.label << ": " << col.expected_mismatch << "\n";
                for (const auto& m : compare_with_table1(col, a)) {
                    err << "mismatch [" << m.source << "] " << m.what << ": expected " << m.expected
                        << ", computed " << m.computed << "\n";
                    e.status = 4;
                }
            }
        }
    }
    return e;
}

std::string report_json(const RunReport& r) {
    ojson j;
    j["instances"] = ojson::array();
    for (const auto& i : r.instances) {
        ojson x;
        x["instance"] = i.id;
        x["V"] = i.counts.vertices;
        x["S"] = i.counts.support;
        x["B_A"] = i.counts.basis_a;
        x["B_AS"] = i.counts.basis_as;
        x["aut_minus_1"] = i.counts.aut_minus_1;
        x["diameter"] = i.diameter;
        x["suites"] = ojson::array();
        for (const auto& s : i.suites) {
            ojson y;
            y["name"] = s.name;
            y["passed"] = s.passed;
            if (!s.passed) y["detail"] = s.detail;
            x["suites"].push_back(std::move(y));
        }
        j["instances"].push_back(std::move(x));
    }
    j["annotations"] = r.annotations;
    j["mismatches"] = ojson::array();
    for (const auto& m : r.mismatches) {
        ojson y;
        y["instance"] = m.instance;
        y["source"] = m.source;
        y["what"] = m.what;
        y["expected"] = m.expected;
        y["computed"] = m.computed;
        y["certificate"] = m.certificate;
        j["mismatches"].push_back(std::move(y));
    }
    j["exit"] = r.exit_status();
    return j.dump(2) + "\n";
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertices, facets and symmetry of master corner polyhedra", "mcp"};
    app.require_subcommand(1);
    // Global options may also follow the subcommand; set before subcommands inherit it.
    app.fallthrough();
    std::string group, g0, format = "text", out_path, aut = "componentwise";
    std::optional<std::string> golden;
    int max_order = 11, threads = 0;
    app.add_option("--format", format, "json, csv, md or text")
        ->check(CLI::IsMember({"json", "csv", "md", "text"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write the artifact here instead of stdout");
    app.add_option("--threads", threads, "OpenMP threads (default: all)")->check(CLI::NonNegativeNumber);
    app.add_option("--aut", aut, "automorphism scope")
        ->check(CLI::IsMember({"componentwise", "full"}))
        ->capture_default_str();

    const std::vector<std::pair<std::string, std::string>> per_instance = {
        {"points", "irreducible points"},
        {"vertices", "vertices with support and basis marks"},
        {"facets", "nontrivial facets"},
        {"support", "support vertices and derivations of the others"},
        {"orbits", "orbits of the g0 stabilizer"},
        {"bases", "the bases B_A, B_S and B_AS"},
        {"graph", "vertex adjacency graph (text: edge list; json: adjacency lists)"},
        {"diameter", "diameter of the vertex graph"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, desc] : per_instance) {
        auto* s = app.add_subcommand(name, desc);
        s->add_option("--group", group, "e.g. 6 or 4x2")->required();
        s->add_option("--g0", g0, "e.g. 3 or 3,0")->required();
        subs.push_back(s);
    }
    auto* t1 = app.add_subcommand("table1", "counts per instance for the groups of order <= N");
    t1->add_option("--max-order", max_order)->check(CLI::Range(2, 64))->capture_default_str();
    t1->add_option("--golden", golden, "directory holding table1.json to compare against");
    auto* ver = app.add_subcommand("verify", "run every check over all instances and compare with golden data");
    ver->add_option("--max-order", max_order)->check(CLI::Range(2, 64))->capture_default_str();
    ver->add_option("--golden", golden, "golden directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (threads > 0) set_threads(threads);
    Context ctx;
    ctx.format = format;
    Emitted result;
    try {
        ctx.scope = parse_scope(aut);
        CLI::App* chosen = app.get_subcommands().front();
        const std::string name = chosen->get_name();
        if (name == "table1") {
            std::optional<std::filesystem::path> dir;
            if (golden) dir = *golden;
            result = cmd_table1(ctx, max_order, dir, err);
        } else if (name == "verify") {
            VerifyOptions vo;
            vo.max_order = max_order;
            vo.scope = ctx.scope;
            vo.golden_dir = golden ? std::filesystem::path(*golden) : std::filesystem::path(MCP_DEFAULT_GOLDEN_DIR);
            RunReport r = run_verify(vo);
            result.text = format == "json" ? report_json(r) : r.render();
            result.status = r.exit_status();
        } else {
            ctx.inst = parse_instance(group, g0);
            if (name == "points") result = cmd_points(ctx);
            else if (name == "vertices") result = cmd_vertices(ctx);
            else if (name == "facets") result = cmd_facets(ctx);
            else if (name == "support") result = cmd_support(ctx);
            else if (name == "orbits") result = cmd_orbits(ctx);
            else if (name == "bases") result = cmd_bases(ctx);
            else if (name == "graph") result = cmd_graph(ctx);
            else result = cmd_diameter(ctx);
        }
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (result.status == 3 && app.get_subcommands().front()->get_name() == "diameter")
        err << "theorem violation: diameter exceeds 2\n";
    if (out_path.empty()) {
        out << result.text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "cannot write " << out_path << "\n";
            return 2;
        }
        f << result.text;
    }
    return result.status;
}

}  // namespace mcp
