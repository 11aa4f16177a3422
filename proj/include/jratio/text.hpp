#pragma once

#include <string>
#include <string_view>

#include "jratio/domain.hpp"

namespace jratio {

class MapExpr;

// Text forms shared by every interface:
//   complex  "a+bi", "a-bi", "a", "i", "-i" (also "bi" and "a+i")
//   domain   "unitdisk" | "upperhalfplane" | "disk:cx,cy,r" | "halfplane:nx,ny,offset"
//   map      mobius:cx,cx,cx,cx | blaschke:real;[cx,...] | extremal:real,real
//            | compose(map,map)
// Whitespace between tokens is ignored. Parsers throw ParseError.

// Shortest representation that round-trips.
std::string format_real(double x);
// printf("%.*g") style with the given significant digits.
std::string format_real(double x, int significant_digits);

std::string format_cx(Cx z);
std::string format_cx(Cx z, int significant_digits);

std::string format_domain(const PlanarDomain& d);
std::string format_map(const MapExpr& m);

double parse_real(std::string_view text);
Cx parse_cx(std::string_view text);
PlanarDomain parse_domain(std::string_view text);
MapExpr parse_map(std::string_view text);

}  // namespace jratio
