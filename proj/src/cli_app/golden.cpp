#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mcp/cli.hpp"
#include "text.hpp"

namespace mcp {

using json = nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw DataError("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool flag(const json& row, const char* key) {
    const json& v = row.at(key);
    if (!v.is_boolean()) throw DataError(std::string("flag '") + key + "' is not boolean");
    return v.get<bool>();
}

}  // namespace

GoldenTable parse_golden_table(const std::string& text) {
    GoldenTable g;
    try {
        json j = json::parse(text);
        g.source = j.at("source").get<std::string>();
        g.group = j.at("group").get<std::string>();
        g.g0 = j.at("g0").get<std::string>();
        g.order = j.at("order").get<std::vector<std::string>>();
        for (const auto& r : j.at("rows")) {
            GoldenRow row;
            row.coords = r.at("coords").get<Point>();
            row.support = flag(r, "support");
            row.nonequivalent = flag(r, "nonequivalent");
            row.bas = flag(r, "bas");
            g.rows.push_back(std::move(row));
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed golden table: ") + e.what());
    }
    Instance inst;
    try {
        inst = g.instance();
    } catch (const std::invalid_argument& e) {
        throw DataError(g.source + ": " + e.what());
    }
    if (static_cast<int>(g.order.size()) != inst.dim())
        throw DataError(g.source + ": order lists " + std::to_string(g.order.size()) + " elements, expected " +
                        std::to_string(inst.dim()));
    for (int p = 0; p < inst.dim(); ++p)
        if (g.order[p] != inst.spec.label(p + 1))
            throw DataError(g.source + ": order entry " + g.order[p] + " is not the canonical " +
                            inst.spec.label(p + 1));
    for (const auto& r : g.rows) {
        if (static_cast<int>(r.coords.size()) != inst.dim())
            throw DataError(g.source + ": row " + fmt_point(r.coords) + " has the wrong length");
        for (int x : r.coords)
            if (x < 0) throw DataError(g.source + ": negative coordinate in " + fmt_point(r.coords));
    }
    return g;
}

std::vector<GoldenTable> load_golden(const std::filesystem::path& path) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_directory(path)) {
        for (const auto& e : std::filesystem::directory_iterator(path)) {
            auto name = e.path().filename().string();
            if (e.is_regular_file() && name.rfind("table", 0) == 0 && e.path().extension() == ".json" &&
                name != "table1.json")
                files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(path);
    }
    std::vector<GoldenTable> out;
    for (const auto& f : files) {
        try {
            out.push_back(parse_golden_table(read_file(f)));
        } catch (const DataError& e) {
            throw DataError(f.filename().string() + ": " + e.what());
        }
    }
    return out;
}

std::vector<Table1Column> load_table1(const std::filesystem::path& path) {
    std::vector<Table1Column> out;
    try {
        json j = json::parse(read_file(path));
        for (const auto& c : j.at("columns")) {
            Table1Column col;
            col.label = c.at("label").get<std::string>();
            col.group = c.at("group").get<std::string>();
            col.g0 = c.at("g0").get<std::string>();
            col.expected.vertices = c.at("V").get<int>();
            col.expected.support = c.at("S").get<int>();
            col.expected.basis_a = c.at("B_A").get<int>();
            col.expected.basis_as = c.at("B_AS").get<int>();
            col.expected.aut_minus_1 = c.at("aut_minus_1").get<int>();
            if (c.contains("expected_mismatch")) col.expected_mismatch = c.at("expected_mismatch").get<std::string>();
            col.instance();  // validates group and element
            out.push_back(std::move(col));
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed count table: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("count table: ") + e.what());
    }
    return out;
}

namespace {

std::string not_a_vertex_certificate(const Instance& inst, const Point& t) {
    int s = group_sum(inst.spec, t);
    if (s != inst.g0)
        return "not a solution: group sum is " + inst.spec.label(s) + ", not " + inst.spec.label(inst.g0);
    if (auto w = reducibility_witness(inst, t))
        return "reducible: sub-vectors " + fmt_point(w->first) + " and " + fmt_point(w->second) +
               " have the same group sum " + inst.spec.label(group_sum(inst.spec, w->first));
    return "irreducible but not a vertex: exact LP writes it as a convex combination of other irreducible points";
}

Mismatch make(const Instance& inst, const std::string& source, std::string what, std::string expected,
              std::string computed, std::string certificate) {
    return Mismatch{inst.name(), source, std::move(what), std::move(expected), std::move(computed),
                    std::move(certificate)};
}

}  // namespace

std::vector<Mismatch> compare_with_golden(const GoldenTable& golden, const InstanceAnalysis& a) {
    const Instance& inst = a.inst();
    if (!(golden.instance() == inst)) throw PreconditionError("golden table and analysis describe different instances");
    std::vector<Mismatch> out;
    const auto& computed = a.model.vertices;

    std::map<Point, const GoldenRow*> rows;
    for (const auto& r : golden.rows)
        if (!rows.emplace(r.coords, &r).second)
            out.push_back(make(inst, golden.source, "duplicate row " + fmt_point(r.coords), "once", "twice", ""));

    if (rows.size() != computed.size())
        out.push_back(make(inst, golden.source, "vertex count", std::to_string(rows.size()),
                           std::to_string(computed.size()), "see the vertex rows below"));
    for (const auto& [coords, row] : rows) {
        if (a.model.index_of(coords) >= 0) continue;
        out.push_back(make(inst, golden.source, "vertex " + fmt_point(coords), "listed", "absent",
                           not_a_vertex_certificate(inst, coords)));
    }
    for (const auto& v : computed) {
        if (rows.count(v)) continue;
        out.push_back(make(inst, golden.source, "vertex " + fmt_point(v), "absent", "present",
                           "irreducible solution; the exact LP over the other irreducible points is infeasible"));
    }

    // Support marks, on the rows that are vertices.
    for (const auto& [coords, row] : rows) {
        if (a.model.index_of(coords) < 0) continue;
        bool comp = a.is_support(coords);
        if (row->support == comp) continue;
        std::string cert;
        if (!comp) {
            auto d = mu_derivation(inst, computed, coords);
            cert = d ? d->op.name(inst.spec) + fmt_point(d->source) + " = " + fmt_point(d->result) : "";
        } else {
            cert = "no mu-operation applied to any other vertex yields it";
        }
        out.push_back(make(inst, golden.source, "support mark of " + fmt_point(coords), row->support ? "yes" : "no",
                           comp ? "yes" : "no", cert));
    }

    // Bases: cardinality, then one mark per (support) orbit.
    auto check_basis = [&](const char* name, bool GoldenRow::*mark, std::size_t expected_card, bool support_only) {
        std::size_t marks = 0;
        for (const auto& [coords, row] : rows)
            if (row->*mark) ++marks;
        if (marks != expected_card)
            out.push_back(make(inst, golden.source, std::string("|") + name + "|", std::to_string(marks),
                               std::to_string(expected_card), ""));
        for (const auto& o : a.orbits) {
            std::size_t hit = 0;
            for (const auto& m : o.members) {
                auto it = rows.find(m);
                if (it != rows.end() && it->second->*mark) ++hit;
            }
            std::size_t want = (!support_only || o.is_support_orbit) ? 1 : 0;
            if (hit != want)
                out.push_back(make(inst, golden.source,
                                   std::string(name) + " marks in orbit " + fmt_orbit(o.members),
                                   std::to_string(hit), std::to_string(want), ""));
        }
    };
    check_basis("B_A", &GoldenRow::nonequivalent, a.basis_a.cardinality, false);
    check_basis("B_AS", &GoldenRow::bas, a.basis_as.cardinality, true);
    return out;
}

std::vector<Mismatch> compare_with_table1(const Table1Column& column, const InstanceAnalysis& a) {
    const Instance& inst = a.inst();
    if (!(column.instance() == inst)) throw PreconditionError("column and analysis describe different instances");
    const Counts c = a.counts();
    const Counts& e = column.expected;
    std::vector<Mismatch> out;
    auto add = [&](const char* what, int exp, int got, std::string cert) {
        if (exp == got) return;
        Mismatch m = make(inst, "count table column " + column.label, what, std::to_string(exp), std::to_string(got),
                          std::move(cert));
        out.push_back(std::move(m));
    };
    add("|V|", e.vertices, c.vertices,
        std::to_string(a.model.irreducible.size()) + " irreducible points, each tested by exact LP");
    add("|S|", e.support, c.support, "support " + fmt_points(a.support));
    std::vector<Point> reps, sreps;
    for (const auto& o : a.orbits) {
        reps.push_back(o.representative);
        if (o.is_support_orbit) sreps.push_back(o.representative);
    }
    add("|B_A|", e.basis_a, c.basis_a, "orbit representatives " + fmt_points(reps));
    add("|B_AS|", e.basis_as, c.basis_as, "support orbit representatives " + fmt_points(sreps));
    std::string stab;
    for (const auto& phi : a.stab)
        if (!phi.is_identity()) stab += (stab.empty() ? "" : "; ") + fmt_automorphism(inst.spec, phi);
    add("|Aut_g0|-1", e.aut_minus_1, c.aut_minus_1, "non-identity stabilizer elements: " + (stab.empty() ? "none" : stab));
    return out;
}

}  // namespace mcp
