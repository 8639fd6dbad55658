#pragma once

#include <string>
#include <vector>

#include "mcp/group.hpp"
#include "mcp/points.hpp"

namespace mcp {

// "(1,0,0,2,0)"
std::string fmt_point(const Point& t);
// "{(..), (..)}"
std::string fmt_points(const std::vector<Point>& ts);
std::string fmt_orbit(const std::vector<Point>& members);
// Images of the standard generators: "1->5" or "(1,0)->(3,0),(0,1)->(0,1)"
std::string fmt_automorphism(const GroupSpec& spec, const Automorphism& phi);

std::string csv_escape(const std::string& s);

}  // namespace mcp
