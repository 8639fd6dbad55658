#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcp/graph.hpp"
#include "mcp/group.hpp"
#include "mcp/mu_ops.hpp"
#include "mcp/points.hpp"
#include "mcp/polyhedron.hpp"
#include "mcp/symmetry.hpp"

namespace mcp {

// Malformed golden or artifact input.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Counts {
    int vertices = 0;
    int support = 0;
    int basis_a = 0;
    int basis_as = 0;
    int aut_minus_1 = 0;
    auto operator<=>(const Counts&) const = default;
};

std::string format_counts(const Counts& c);

// Everything the commands and the verifier need about one (G, g0).
struct InstanceAnalysis {
    AutScope scope = AutScope::componentwise;
    PolyhedronModel model;
    MuImageMap mu_map;
    std::vector<Point> support;
    std::vector<Automorphism> stab;
    std::vector<Orbit> orbits;
    BasisReport basis_a, basis_s, basis_as;
    std::optional<VertexGraph> graph;

    const Instance& inst() const { return model.inst; }
    Counts counts() const;
    bool is_support(const Point& t) const;
    int orbit_of(const Point& t) const;  // index into orbits, -1 if absent
};

struct AnalysisOptions {
    AutScope scope = AutScope::componentwise;
    bool graph = true;
    bool parallel = true;  // parallel kernels inside the instance
};

InstanceAnalysis analyze(const Instance& inst, const AnalysisOptions& opts = {});

// Runs analyze over many instances at once (one task per instance) and returns the
// results in input order.
std::vector<InstanceAnalysis> analyze_all(const std::vector<Instance>& instances, const AnalysisOptions& opts);

// Abelian groups in invariant-factor form with the largest factor first ("4x2").
std::vector<GroupSpec> groups_up_to(int max_order);
std::vector<Instance> all_instances(int max_order);
// The instances summarised by the published count table, in column order.
std::vector<Instance> table1_instances(int max_order);

// ---- JSON artifacts --------------------------------------------------------

struct VertexRecord {
    Point coords;
    bool support = false;
    int orbit = 0;
    bool basis_a = false;
    bool basis_as = false;
    bool operator==(const VertexRecord&) const = default;
};

struct FacetRecord {
    std::vector<long long> pi;
    long long pi0 = 0;
    bool operator==(const FacetRecord&) const = default;
};

struct PolyhedronArtifact {
    std::string group;
    std::string g0;
    std::vector<std::string> order;
    std::vector<VertexRecord> vertices;
    std::vector<FacetRecord> facets;
    bool operator==(const PolyhedronArtifact&) const = default;
};

PolyhedronArtifact make_artifact(const InstanceAnalysis& a);
std::string to_json(const PolyhedronArtifact& art);
PolyhedronArtifact artifact_from_json(const std::string& text);

// ---- golden data -----------------------------------------------------------

struct GoldenRow {
    Point coords;
    bool support = false;
    bool nonequivalent = false;
    bool bas = false;
};

struct GoldenTable {
    std::string source;
    std::string group;
    std::string g0;
    std::vector<std::string> order;
    std::vector<GoldenRow> rows;

    Instance instance() const { return parse_instance(group, g0); }
};

struct Table1Column {
    std::string label;
    std::string group;
    std::string g0;
    Counts expected;
    std::string expected_mismatch;  // empty unless the printed label is known to be off

    Instance instance() const { return parse_instance(group, g0); }
};

GoldenTable parse_golden_table(const std::string& text);
// A single table file, or every table*.json in a directory except table1.json,
// ordered by file name.
std::vector<GoldenTable> load_golden(const std::filesystem::path& path);
std::vector<Table1Column> load_table1(const std::filesystem::path& path);

// ---- reports ---------------------------------------------------------------

struct Mismatch {
    std::string instance;
    std::string source;
    std::string what;
    std::string expected;
    std::string computed;
    std::string certificate;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first failure, if any
};

struct InstanceReport {
    std::string id;
    Counts counts;
    int diameter = -1;
    std::vector<SuiteResult> suites;
};

struct RunReport {
    std::vector<InstanceReport> instances;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> annotations;

    bool theorem_violation() const;
    // 0 ok, 3 theorem violation, 4 golden mismatch.
    int exit_status() const;
    std::string render() const;
};

// Exact vertex-set and support comparison, plus basis cardinality and orbit
// structure. `analysis` must describe the table's instance.
std::vector<Mismatch> compare_with_golden(const GoldenTable& golden, const InstanceAnalysis& analysis);
std::vector<Mismatch> compare_with_table1(const Table1Column& column, const InstanceAnalysis& analysis);

RunReport verify_against_golden(const std::vector<GoldenTable>& goldens, AutScope scope = AutScope::componentwise);

// Theorem suites on one instance. `peers` supplies S(G, g) for every g in the same
// group, for the support transport check; missing peers are computed on demand.
std::vector<SuiteResult> run_suites(const InstanceAnalysis& a, const std::vector<const InstanceAnalysis*>& peers);

struct VerifyOptions {
    int max_order = 11;
    AutScope scope = AutScope::componentwise;
    std::optional<std::filesystem::path> golden_dir;
};

RunReport run_verify(const VerifyOptions& opts);

// ---- entry point -----------------------------------------------------------

// Exit status: 0 ok, 2 usage, 3 theorem violation, 4 golden mismatch.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcp
