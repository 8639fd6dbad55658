#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "mcp/cli.hpp"
#include "text.hpp"

namespace mcp {

namespace {

// Collects the first failure of a suite; later failures only bump the count.
class Suite {
public:
    explicit Suite(std::string name) { r_.name = std::move(name); }
    void fail(const std::string& why) {
        if (r_.passed) r_.detail = why;
        r_.passed = false;
        ++failures_;
    }
    template <class F>
    void run(F body) {
        try {
            body();
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
    }
    SuiteResult done() {
        if (failures_ > 1) r_.detail += " (+" + std::to_string(failures_ - 1) + " more)";
        return r_;
    }

private:
    SuiteResult r_;
    int failures_ = 0;
};

std::vector<int> bfs(const VertexGraph& g, int s) {
    const int n = static_cast<int>(g.size());
    std::vector<int> dist(n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y = 0; y < n; ++y)
            if (g.adjacency[x][y] && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    return dist;
}

// Every u with 0 <= u <= t, u != t and total(u) >= 2.
template <class F>
void for_each_proper_subvector(const Point& t, F f) {
    Point u(t.size(), 0);
    for (;;) {
        std::size_t p = 0;
        while (p < t.size() && u[p] == t[p]) u[p++] = 0;
        if (p == t.size()) return;
        ++u[p];
        if (u != t && total(u) >= 2) f(u);
    }
}

}  // namespace

std::vector<SuiteResult> run_suites(const InstanceAnalysis& a, const std::vector<const InstanceAnalysis*>& peers) {
    const Instance& inst = a.inst();
    const auto& V = a.model.vertices;
    const int n = static_cast<int>(V.size());
    const int order = inst.spec.order();
    std::vector<SuiteResult> out;
    if (!a.graph) throw PreconditionError("suites need the vertex graph");
    const VertexGraph& g = *a.graph;

    {
        Suite s("mu-closure");
        s.run([&] {
            for (int i = 0; i < n; ++i)
                for (const auto& app : a.mu_map[i]) {
                    int j = a.model.index_of(app.result);
                    if (j < 0)
                        s.fail(app.op.name(inst.spec) + fmt_point(V[i]) + " is not a vertex");
                    else if (!g.adjacency[i][j])
                        s.fail(app.op.name(inst.spec) + fmt_point(V[i]) + " = " + fmt_point(app.result) +
                               " is not adjacent to its source");
                    if (total(app.result) >= total(V[i]))
                        s.fail(app.op.name(inst.spec) + fmt_point(V[i]) + " does not lower the total");
                }
        });
        out.push_back(s.done());
    }
    {
        Suite s("commutation");
        s.run([&] {
            for (const auto& t : V)
                for (const auto& op : applicable_ops(inst, t))
                    for (const auto& phi : a.stab)
                        if (!verify_commutation(inst, t, op, phi))
                            s.fail(op.name(inst.spec) + fmt_point(t) + " under " +
                                   fmt_automorphism(inst.spec, phi));
        });
        out.push_back(s.done());
    }
    {
        Suite s("orbit-transport");
        s.run([&] {
            if (!verify_orbit_transport(inst, V, a.orbits, a.stab, a.mu_map))
                s.fail("some orbit is mixed or is not mapped onto an orbit");
        });
        out.push_back(s.done());
    }
    {
        Suite s("support-transport");
        s.run([&] {
            for (const auto& phi : automorphisms(inst.spec, a.scope)) {
                int image = phi(inst.g0);
                std::vector<Point> target;
                if (image < static_cast<int>(peers.size()) && peers[image]) {
                    target = peers[image]->support;
                } else {
                    Instance other{inst.spec, image};
                    target = support_vertices(other, enumerate_vertices(other));
                }
                std::vector<Point> moved;
                for (const auto& t : a.support) moved.push_back(act_on_point(phi, t));
                std::sort(moved.begin(), moved.end());
                if (moved != target)
                    s.fail("S(G," + inst.spec.label(inst.g0) + ") under " + fmt_automorphism(inst.spec, phi) +
                           " differs from S(G," + inst.spec.label(image) + ")");
            }
        });
        out.push_back(s.done());
    }
    {
        Suite s("orbit-laws");
        s.run([&] {
            std::set<Point> seen;
            std::size_t covered = 0;
            for (const auto& o : a.orbits) {
                if (a.stab.size() % o.members.size() != 0) s.fail("orbit size does not divide the stabilizer order");
                for (const auto& m : o.members) {
                    if (!seen.insert(m).second) s.fail("orbits overlap at " + fmt_point(m));
                    if (multiplicity_type(m) != o.multiplicity_type)
                        s.fail("multiplicity type varies in orbit of " + fmt_point(o.representative));
                }
                covered += o.members.size();
            }
            if (covered != V.size()) s.fail("orbits do not cover the vertex set");
            if (a.basis_as.cardinality > a.basis_a.cardinality || a.basis_as.cardinality > a.basis_s.cardinality)
                s.fail("|B_AS| exceeds |B_A| or |B_S|");
            if (a.support.empty()) s.fail("no support vertices");
            if (inst.g0 != 0 && n > 1 && order > 3 && a.is_support(unit_point(inst, inst.g0)))
                s.fail("s0 is a support vertex");
        });
        out.push_back(s.done());
    }
    if (order <= 8) {
        Suite s("facet-exchange");
        s.run([&] {
            auto facets = a.model.nontrivial_facets();
            for (const auto& t : V)
                for (const auto& f : facets) {
                    if (!f.tight(t)) continue;
                    for_each_proper_subvector(t, [&](const Point& u) {
                        try {
                            exchange_point(inst, t, u, facets);
                        } catch (const TheoremViolation& e) {
                            s.fail(fmt_point(t) + " with u=" + fmt_point(u) + ": " + e.what());
                        }
                        if (!exchange_relation(inst, f, t, u))
                            s.fail("pi(h) != sum u(g) pi(g) at t=" + fmt_point(t) + ", u=" + fmt_point(u));
                    });
                }
        });
        out.push_back(s.done());
    }
    {
        Suite s("facet-validity");
        s.run([&] {
            for (const auto& f : a.model.facets)
                if (f.kind == FacetKind::nontrivial && !verify_facet_validity(inst, f, V))
                    s.fail("facet fails validity or dimension");
        });
        out.push_back(s.done());
    }
    if (inst.g0 != 0) {
        Suite s("s0-adjacency");
        s.run([&] {
            int s0 = a.model.index_of(unit_point(inst, inst.g0));
            if (s0 < 0) {
                s.fail("s0 is not a vertex");
                return;
            }
            for (int j = 0; j < n; ++j)
                if (j != s0 && !g.adjacency[s0][j]) s.fail("s0 is not adjacent to " + fmt_point(V[j]));
        });
        out.push_back(s.done());
    }
    {
        Suite s("chains");
        s.run([&] {
            Point s0 = inst.g0 != 0 ? unit_point(inst, inst.g0) : Point{};
            for (const auto& t : V) {
                ChainSequence c;
                try {
                    c = build_chain(inst, t);
                } catch (const TheoremViolation& e) {
                    s.fail(fmt_point(t) + ": " + e.what());
                    continue;
                }
                if (!chain_is_linked(c)) s.fail("chain from " + fmt_point(t) + " is not linked");
                if (!verify_complete_subgraph(c, g)) s.fail("chain from " + fmt_point(t) + " is not a clique");
                if (inst.g0 != 0 && c.points.back() != s0)
                    s.fail("chain from " + fmt_point(t) + " ends at " + fmt_point(c.points.back()));
            }
        });
        out.push_back(s.done());
    }
    {
        Suite s("diameter");
        s.run([&] {
            int diam = 0;
            for (int i = 0; i < n; ++i) {
                auto d = bfs(g, i);
                for (int j = 0; j < n; ++j) {
                    if (d[j] < 0) {
                        s.fail("disconnected: " + fmt_point(V[i]) + " cannot reach " + fmt_point(V[j]));
                        return;
                    }
                    if (d[j] > 2 && i < j)
                        s.fail("distance " + std::to_string(d[j]) + " between " + fmt_point(V[i]) + " and " +
                               fmt_point(V[j]));
                    diam = std::max(diam, d[j]);
                }
            }
            bool non_adjacent = non_adjacent_pair(g).has_value();
            if (diam <= 2 && (diam == 2) != non_adjacent) s.fail("diameter disagrees with the non-adjacent pairs");
        });
        out.push_back(s.done());
    }
    if (order <= 8) {
        Suite s("adjacency-oracles");
        s.run([&] {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (adjacent_by_lp(a.model, i, j) != g.adjacency[i][j])
                        s.fail("rank and LP tests disagree on " + fmt_point(V[i]) + ", " + fmt_point(V[j]));
        });
        out.push_back(s.done());
    }
    if (order <= 6) {
        Suite s("midpoint-equivalence");
        s.run([&] {
            for (const auto& t : enumerate_solutions(inst, inst.spec.order()))
                if (is_irreducible(inst, t) == is_midpoint_of_solutions(inst, t))
                    s.fail(fmt_point(t) + " breaks irreducible <=> not a midpoint");
        });
        out.push_back(s.done());
    }
    return out;
}

bool RunReport::theorem_violation() const {
    for (const auto& i : instances)
        for (const auto& s : i.suites)
            if (!s.passed) return true;
    return false;
}

int RunReport::exit_status() const {
    if (theorem_violation()) return 3;
    if (!mismatches.empty()) return 4;
    return 0;
}

std::string RunReport::render() const {
    std::ostringstream os;
    int failed_suites = 0;
    for (const auto& i : instances) {
        os << "instance " << i.id << "  " << format_counts(i.counts);
        if (i.diameter >= 0) os << " diameter=" << i.diameter;
        std::vector<const SuiteResult*> bad;
        for (const auto& s : i.suites)
            if (!s.passed) bad.push_back(&s);
        os << (bad.empty() ? "  suites ok" : "  suites FAILED") << " (" << i.suites.size() << ")\n";
        for (const auto* s : bad) os << "  FAIL " << s->name << ": " << s->detail << "\n";
        failed_suites += static_cast<int>(bad.size());
    }
    if (!annotations.empty()) {
        os << "annotations\n";
        for (const auto& a : annotations) os << "  " << a << "\n";
    }
    if (!mismatches.empty()) {
        os << "mismatches\n";
        for (const auto& m : mismatches) {
            os << "  [" << m.source << "] G" << m.instance << " " << m.what << ": expected " << m.expected
               << ", computed " << m.computed << "\n";
            if (!m.certificate.empty()) os << "    certificate: " << m.certificate << "\n";
        }
    }
    os << "summary: instances=" << instances.size() << " failed_suites=" << failed_suites
       << " mismatches=" << mismatches.size() << " exit=" << exit_status() << "\n";
    return os.str();
}

RunReport verify_against_golden(const std::vector<GoldenTable>& goldens, AutScope scope) {
    std::vector<Instance> insts;
    for (const auto& g : goldens) insts.push_back(g.instance());
    AnalysisOptions opts;
    opts.scope = scope;
    opts.graph = false;
    auto analyses = analyze_all(insts, opts);
    RunReport r;
    for (std::size_t i = 0; i < goldens.size(); ++i) {
        auto m = compare_with_golden(goldens[i], analyses[i]);
        r.mismatches.insert(r.mismatches.end(), m.begin(), m.end());
    }
    return r;
}

RunReport run_verify(const VerifyOptions& opts) {
    std::vector<Instance> insts = all_instances(opts.max_order);
    AnalysisOptions ao;
    ao.scope = opts.scope;
    auto analyses = analyze_all(insts, ao);

    std::map<std::pair<std::vector<int>, int>, std::size_t> where;
    for (std::size_t i = 0; i < insts.size(); ++i) where[{insts[i].spec.orders(), insts[i].g0}] = i;

    RunReport r;
    r.instances.resize(insts.size());
    const long long n = static_cast<long long>(insts.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        const auto& a = analyses[i];
        std::vector<const InstanceAnalysis*> peers(a.inst().spec.order(), nullptr);
        for (int e = 0; e < a.inst().spec.order(); ++e) {
            auto it = where.find({a.inst().spec.orders(), e});
            if (it != where.end()) peers[e] = &analyses[it->second];
        }
        InstanceReport& rep = r.instances[i];
        rep.id = a.inst().name();
        rep.counts = a.counts();
        try {
            rep.diameter = diameter(*a.graph);
        } catch (const TheoremViolation&) {
            rep.diameter = -1;
        }
        rep.suites = run_suites(a, peers);
    }

    if (opts.golden_dir) {
        auto find = [&](const Instance& inst) -> const InstanceAnalysis* {
            auto it = where.find({inst.spec.orders(), inst.g0});
            return it == where.end() ? nullptr : &analyses[it->second];
        };
        for (const auto& g : load_golden(*opts.golden_dir)) {
            const InstanceAnalysis* a = find(g.instance());
            if (!a) continue;
            auto m = compare_with_golden(g, *a);
            r.mismatches.insert(r.mismatches.end(), m.begin(), m.end());
        }
        auto t1 = *opts.golden_dir / "table1.json";
        if (std::filesystem::exists(t1)) {
            for (const auto& col : load_table1(t1)) {
                const InstanceAnalysis* a = find(col.instance());
                if (!a) continue;
                if (!col.expected_mismatch.empty())
                    r.annotations.push_back("count table column " + col.label + " compared with G" + a->inst().name() +
                                            ": " + col.expected_mismatch);
                auto m = compare_with_table1(col, *a);
                r.mismatches.insert(r.mismatches.end(), m.begin(), m.end());
            }
        }
    }
    return r;
}

}  // namespace mcp
