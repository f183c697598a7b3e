#include "weitz/format.hpp"

#include <sstream>
#include <vector>

namespace weitz {

namespace {

void factor(std::vector<std::string>& out, const std::string& var, Exponent e) {
  if (e == 0) return;
  out.push_back(e == 1 ? var : var + "^" + std::to_string(e));
}

std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "1";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

std::vector<std::string> factors(const XYMonomial& m) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= m.n(); ++i) factor(out, "x(" + std::to_string(i) + ")", m.x_exp(i));
  for (std::size_t i = 1; i <= m.n(); ++i) factor(out, "y(" + std::to_string(i) + ")", m.y_exp(i));
  return out;
}

std::vector<std::string> factors(const UMonomial& m) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= m.n(); ++i) factor(out, "x(" + std::to_string(i) + ")", m.x_exp(i));
  for (std::size_t i = 1; i <= m.n(); ++i)
    for (std::size_t j = i + 1; j <= m.n(); ++j)
      factor(out, "u(" + std::to_string(i) + "," + std::to_string(j) + ")", m.u_exp(i, j));
  return out;
}

template <class Terms>
std::string render(const Terms& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    const auto fs = factors(m);
    if (fs.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << join(fs);
    } else {
      os << mag.get_str() << "*" << join(fs);
    }
  }
  return os.str();
}

} // namespace

std::string to_string(const XYMonomial& m) { return join(factors(m)); }
std::string to_string(const UMonomial& m) { return join(factors(m)); }
std::string to_string(const XYPolynomial& f) { return render(f.terms()); }
std::string to_string(const UPolynomial& p) { return render(p.terms()); }

} // namespace weitz
