#pragma once

// Text rendering in the same syntax the expression parser accepts:
// x(i), y(i), u(i,j), integer or p/q coefficients, '^' for powers.

#include "weitz/xu_poly.hpp"
#include "weitz/xy_poly.hpp"

#include <ostream>
#include <string>

namespace weitz {

std::string to_string(const XYMonomial& m);
std::string to_string(const UMonomial& m);
std::string to_string(const XYPolynomial& f);
std::string to_string(const UPolynomial& p);

inline std::ostream& operator<<(std::ostream& os, const XYMonomial& m) { return os << to_string(m); }
inline std::ostream& operator<<(std::ostream& os, const UMonomial& m) { return os << to_string(m); }
inline std::ostream& operator<<(std::ostream& os, const XYPolynomial& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const UPolynomial& p) { return os << to_string(p); }

} // namespace weitz
