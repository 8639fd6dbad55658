#include "json.hpp"
#include "mcp/cli.hpp"

namespace mcp {

using ojson = nlohmann::ordered_json;

PolyhedronArtifact make_artifact(const InstanceAnalysis& a) {
    const Instance& inst = a.inst();
    PolyhedronArtifact art;
    art.group = inst.spec.name();
    art.g0 = inst.spec.argument(inst.g0);
    for (int e = 1; e < inst.spec.order(); ++e) art.order.push_back(inst.spec.label(e));
    for (const auto& v : a.model.vertices) {
        VertexRecord r;
        r.coords = v;
        r.support = a.is_support(v);
        r.orbit = a.orbit_of(v);
        r.basis_a = std::binary_search(a.basis_a.members.begin(), a.basis_a.members.end(), v);
        r.basis_as = std::binary_search(a.basis_as.members.begin(), a.basis_as.members.end(), v);
        art.vertices.push_back(std::move(r));
    }
    for (const auto& f : a.model.facets)
        if (f.kind == FacetKind::nontrivial) art.facets.push_back({f.normal, f.rhs});
    return art;
}

std::string to_json(const PolyhedronArtifact& art) {
    ojson j;
    j["group"] = art.group;
    j["g0"] = art.g0;
    j["order"] = art.order;
    j["vertices"] = ojson::array();
    for (const auto& v : art.vertices) {
        ojson r;
        r["coords"] = v.coords;
        r["support"] = v.support;
        r["orbit"] = v.orbit;
        r["b_a"] = v.basis_a;
        r["b_as"] = v.basis_as;
        j["vertices"].push_back(std::move(r));
    }
    j["facets"] = ojson::array();
    for (const auto& f : art.facets) {
        ojson r;
        r["pi"] = f.pi;
        r["pi0"] = f.pi0;
        j["facets"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

PolyhedronArtifact artifact_from_json(const std::string& text) {
    try {
        ojson j = ojson::parse(text);
        PolyhedronArtifact art;
        art.group = j.at("group").get<std::string>();
        art.g0 = j.at("g0").get<std::string>();
        art.order = j.at("order").get<std::vector<std::string>>();
        for (const auto& r : j.at("vertices")) {
            VertexRecord v;
            v.coords = r.at("coords").get<Point>();
            v.support = r.at("support").get<bool>();
            v.orbit = r.at("orbit").get<int>();
            v.basis_a = r.at("b_a").get<bool>();
            v.basis_as = r.at("b_as").get<bool>();
            if (v.coords.size() != art.order.size()) throw DataError("vertex length differs from order length");
            art.vertices.push_back(std::move(v));
        }
        for (const auto& r : j.at("facets")) {
            FacetRecord f;
            f.pi = r.at("pi").get<std::vector<long long>>();
            f.pi0 = r.at("pi0").get<long long>();
            if (f.pi.size() != art.order.size()) throw DataError("facet length differs from order length");
            art.facets.push_back(std::move(f));
        }
        return art;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad artifact: ") + e.what());
    }
}

}  // namespace mcp
