#include "text.hpp"

namespace mcp {

std::string fmt_point(const Point& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

std::string fmt_points(const std::vector<Point>& ts) {
    std::string s = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + fmt_point(ts[i]);
    return s + "}";
}

std::string fmt_orbit(const std::vector<Point>& members) { return fmt_points(members); }

std::string fmt_automorphism(const GroupSpec& spec, const Automorphism& phi) {
    std::string s;
    const auto& orders = spec.orders();
    for (std::size_t i = 0; i < orders.size(); ++i) {
        GroupElement gen{std::vector<int>(orders.size(), 0)};
        gen.residues[i] = 1;
        int g = spec.index(gen);
        s += (i ? "," : "") + spec.label(g) + "->" + spec.label(phi(g));
    }
    return s;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace mcp
