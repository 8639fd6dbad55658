#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mcp/cli.hpp"

using namespace mcp;

namespace {

const std::filesystem::path golden_dir = MCP_TEST_GOLDEN_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<const char*> args) {
    args.insert(args.begin(), "mcp");
    std::ostringstream out, err;
    int code = run_command(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Artifact, JsonRoundTripIsByteIdentical) {
    for (auto [g, e] : {std::pair{"6", "3"}, {"4x2", "2,0"}, {"3x3", "1,0"}, {"9", "0"}}) {
        auto art = make_artifact(analyze(parse_instance(g, e)));
        std::string once = to_json(art);
        auto back = artifact_from_json(once);
        EXPECT_EQ(back, art);
        EXPECT_EQ(to_json(back), once);
    }
    EXPECT_THROW(artifact_from_json("{\"group\": 6}"), DataError);
}

TEST(Golden, G63MatchesExactly) {
    auto tables = load_golden(golden_dir / "table12_6_3.json");
    ASSERT_EQ(tables.size(), 1u);
    auto a = analyze(tables[0].instance());
    EXPECT_TRUE(compare_with_golden(tables[0], a).empty());
}

TEST(Golden, G87Counts) {
    auto t = load_golden(golden_dir / "table20_8_7.json").at(0);
    EXPECT_EQ(t.rows.size(), 16u);
    std::size_t support = 0;
    for (const auto& r : t.rows) support += r.support;
    EXPECT_EQ(support, 9u);
    auto a = analyze(t.instance());
    EXPECT_EQ(a.model.vertices.size(), 16u);
    EXPECT_EQ(a.support.size(), 9u);
    EXPECT_TRUE(compare_with_golden(t, a).empty());
}

TEST(Golden, CorruptedRowIsReportedWithCertificate) {
    auto t = load_golden(golden_dir / "table12_6_3.json").at(0);
    t.rows[1].coords = {2, 0, 0, 0, 1};  // 2 + 5 = 1, not a solution
    auto ms = compare_with_golden(t, analyze(t.instance()));
    ASSERT_FALSE(ms.empty());
    bool found = false;
    for (const auto& m : ms) found |= m.certificate.find("not a solution") != std::string::npos;
    EXPECT_TRUE(found);

    t = load_golden(golden_dir / "table12_6_3.json").at(0);
    t.rows[2].support = true;  // (0,0,1,0,0) is mu-reachable
    ms = compare_with_golden(t, analyze(t.instance()));
    ASSERT_EQ(ms.size(), 1u);
    EXPECT_NE(ms[0].certificate.find("="), std::string::npos);
}

TEST(Golden, MalformedInputIsDataError) {
    EXPECT_THROW(parse_golden_table("{"), DataError);
    EXPECT_THROW(parse_golden_table(R"({"source":"x","group":"6","g0":"3","order":["1","2","3","4","5"],
        "rows":[{"coords":[1,1,0,0,0],"support":1,"nonequivalent":false,"bas":false}]})"),
                 DataError);
    EXPECT_THROW(parse_golden_table(R"({"source":"x","group":"6","g0":"3","order":["1","2","3","4"],"rows":[]})"),
                 DataError);
    EXPECT_THROW(parse_golden_table(R"({"source":"x","group":"6","g0":"3","order":["1","2","3","4","5"],
        "rows":[{"coords":[1,1,0,0],"support":false,"nonequivalent":false,"bas":false}]})"),
                 DataError);
    EXPECT_THROW(load_golden(golden_dir / "no_such_table.json"), DataError);
}

TEST(Golden, Table1Loads) {
    auto cols = load_table1(golden_dir / "table1.json");
    EXPECT_EQ(cols.size(), 37u);
    std::vector<Instance> expect = table1_instances(11);
    ASSERT_EQ(expect.size(), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) EXPECT_EQ(cols[i].instance(), expect[i]) << cols[i].label;
}

TEST(Instances, Enumeration) {
    auto groups = groups_up_to(11);
    std::vector<std::string> names;
    for (const auto& g : groups) names.push_back(g.name());
    std::sort(names.begin(), names.end());
    EXPECT_EQ(names, (std::vector<std::string>{"10", "11", "2", "2x2", "2x2x2", "3", "3x3", "4", "4x2", "5", "6",
                                               "7", "8", "9"}));
    EXPECT_EQ(all_instances(11).size(), 94u);
}

TEST(Commands, ExitCodes) {
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"vertices", "--group", "6"}).code, 2);
    EXPECT_EQ(run({"vertices", "--group", "6", "--g0", "7"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    auto d = run({"diameter", "--group", "5", "--g0", "4"});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.out, "2\n");
    auto v = run({"diameter", "--group", "7", "--g0", "0"});
    EXPECT_EQ(v.code, 3);
    EXPECT_EQ(v.out, "3\n");
}

TEST(Commands, VerticesJson) {
    auto r = run({"vertices", "--group", "6", "--g0", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto art = artifact_from_json(r.out);
    EXPECT_EQ(art.vertices.size(), 7u);
    EXPECT_EQ(art.order, (std::vector<std::string>{"1", "2", "3", "4", "5"}));
    auto f = run({"--format", "json", "facets", "--group", "6", "--g0", "3"});
    ASSERT_EQ(f.code, 0) << f.err;
    auto j = nlohmann::json::parse(f.out);
    ASSERT_EQ(j.at("facets").size(), 4u);
    // Vertices are listed in ascending order, so (0,0,1,0,0) is index 2 and
    // (1,1,0,0,0) is index 5; both are tight on every nontrivial facet.
    for (const auto& facet : j["facets"]) {
        auto tight = facet.at("tight").get<std::vector<int>>();
        EXPECT_TRUE(std::count(tight.begin(), tight.end(), 2) == 1);
        EXPECT_TRUE(std::count(tight.begin(), tight.end(), 5) == 1);
    }
}

TEST(Commands, OutFile) {
    auto path = std::filesystem::temp_directory_path() / "mcp_test_out.json";
    std::filesystem::remove(path);
    std::string p = path.string();
    auto r = run({"vertices", "--group", "4x2", "--g0", "0,1", "--format", "json", "--out", p.c_str()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(artifact_from_json(slurp(path)).group, "4x2");
    std::filesystem::remove(path);
}

TEST(Commands, Table1ReportsMismatches) {
    std::string dir = golden_dir.string();
    auto r = run({"table1", "--max-order", "4", "--golden", dir.c_str()});
    // G3,2 and G4,0 disagree with the published counts.
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("G3,2"), std::string::npos);
    auto clean = run({"table1", "--max-order", "4"});
    EXPECT_EQ(clean.code, 0);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
    std::string dir = golden_dir.string();
    auto a = run({"--threads", "1", "verify", "--max-order", "8", "--golden", dir.c_str()});
    auto b = run({"--threads", "4", "verify", "--max-order", "8", "--golden", dir.c_str()});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.code, 3);  // G7,0 has diameter 3
}
