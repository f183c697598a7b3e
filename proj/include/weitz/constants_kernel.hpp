#pragma once

// Membership in ker(Delta) and the constructive rewriting of a constant as a
// polynomial in x_1..x_n and u_ij = x_i y_j - x_j y_i.

#include "weitz/xu_poly.hpp"
#include "weitz/xy_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weitz {

enum class StepKind {
  SplitComponents,  // split into bihomogeneous, (x_n,y_n)-homogeneous parts
  BaseCase,         // n = 1: the constant is a polynomial in x_1
  DropVariable,     // no x_n, y_n present: continue with n - 1
  StripXnPower,     // divide out x_n^q
  DivideU12,        // n = 2 and phi(f) = 0: divide by u_12
  RewriteUsn,       // replace x_s y_n by u_sn + x_n y_s and divide by x_n
};

const char* to_string(StepKind kind);

struct TraceStep {
  StepKind kind;
  std::size_t n;          // active number of index pairs
  unsigned xnyn_degree;   // degree in (x_n, y_n) when the step was taken
  std::string detail;
};

struct Decomposition {
  XYPolynomial input;
  UPolynomial result;
  std::vector<TraceStep> trace;  // empty unless requested
};

struct DecomposeOptions {
  bool trace = false;
};

/// Writes f in terms of the generators x_i, u_ij. Throws NotAConstant when
/// delta(f) != 0. The result satisfies pi(result) == f but is not reduced;
/// apply normal_form for the canonical representative.
Decomposition decompose(const XYPolynomial& f, const DecomposeOptions& options = {});

struct MembershipCertificate {
  bool member = false;
  std::optional<Decomposition> decomposition;
};

MembershipCertificate membership_certificate(const XYPolynomial& f,
                                             const DecomposeOptions& options = {});

} // namespace weitz
