// weitz: command-line front end for the constants algebra of
// Delta = sum x_i d/dy_i.
//
// Exit codes: 0 success, 1 domain error (NotAConstant, ...), 2 usage or
// parse error, 3 internal error. Results go to stdout, diagnostics to stderr.

#include "weitz/basis.hpp"
#include "weitz/constants_kernel.hpp"
#include "weitz/format.hpp"
#include "weitz/parser.hpp"
#include "weitz/xu_poly.hpp"
#include "weitz/xy_poly.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace weitz;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t n = 0;
  bool json = false;
  bool trace = false;
  bool basis = false;
  std::optional<unsigned> weight;
  std::vector<unsigned> bidegree;
  std::size_t max_pairs = 0;
  std::string ring = "xy";
  std::vector<std::string> drop;
  std::vector<std::string> args;
};

// ------------------------------------------------------------------ output

json exponents_json(const XYMonomial& m) {
  json x = json::array(), y = json::array();
  for (std::size_t i = 1; i <= m.n(); ++i) {
    if (m.x_exp(i)) x.push_back({i, m.x_exp(i)});
    if (m.y_exp(i)) y.push_back({i, m.y_exp(i)});
  }
  return {{"x", x}, {"y", y}};
}

json exponents_json(const UMonomial& m) {
  json x = json::array(), u = json::array();
  for (std::size_t i = 1; i <= m.n(); ++i)
    if (m.x_exp(i)) x.push_back({i, m.x_exp(i)});
  for (std::size_t i = 1; i <= m.n(); ++i)
    for (std::size_t j = i + 1; j <= m.n(); ++j)
      if (m.u_exp(i, j)) u.push_back({i, j, m.u_exp(i, j)});
  return {{"x", x}, {"u", u}};
}

template <class Poly>
json poly_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({c.get_num().get_str(), c.get_den().get_str(), exponents_json(m)});
  return {{"text", to_string(p)}, {"terms", terms}};
}

template <class Mono>
json monomial_json(const Mono& m) {
  return {{"text", to_string(m)}, {"exponents", exponents_json(m)}};
}

// A result document rendered either as JSON or as "key: value" lines.
// Arrays of strings print one element per line, indented.
class Document {
public:
  Document(std::string command, std::size_t n) {
    doc_["command"] = std::move(command);
    doc_["n"] = n;
    doc_["input"] = json::object();
    doc_["result"] = json::object();
  }

  void input(const std::string& key, json value, std::string text) {
    doc_["input"][key] = std::move(value);
    lines_.emplace_back(key, std::move(text));
  }
  void result(const std::string& key, json value, std::string text) {
    doc_["result"][key] = std::move(value);
    lines_.emplace_back(key, std::move(text));
  }
  void result_list(const std::string& key, json value, const std::vector<std::string>& items) {
    doc_["result"][key] = std::move(value);
    std::string text = std::to_string(items.size());
    for (const auto& s : items) text += "\n  " + s;
    lines_.emplace_back(key, std::move(text));
  }

  void print(std::ostream& out, bool as_json, double elapsed_ms) {
    if (as_json) {
      doc_["timing_ms"] = elapsed_ms;
      out << doc_.dump(2) << "\n";
      return;
    }
    out << "command: " << doc_["command"].get<std::string>() << "\n";
    out << "n: " << doc_["n"].get<std::size_t>() << "\n";
    for (const auto& [k, v] : lines_) out << k << ": " << v << "\n";
  }

private:
  json doc_;
  std::vector<std::pair<std::string, std::string>> lines_;
};

// --------------------------------------------------------------- commands

const std::string& single_arg(const Options& o, const char* what) {
  if (o.args.size() != 1) throw UsageError(std::string("expected exactly one ") + what);
  return o.args.front();
}

std::pair<unsigned, unsigned> require_bidegree(const Options& o) {
  if (o.bidegree.size() != 2) throw UsageError("--bidegree <d1> <d2> is required");
  return {o.bidegree[0], o.bidegree[1]};
}

int cmd_delta(const Options& o, Document& doc) {
  const XYPolynomial f = parse_xy(single_arg(o, "expression"), o.n);
  doc.input("f", poly_json(f), to_string(f));
  const XYPolynomial d = delta(f);
  doc.result("delta", poly_json(d), to_string(d));
  doc.result("is_constant", d.is_zero(), d.is_zero() ? "true" : "false");
  return 0;
}

void add_decomposition(Document& doc, const Decomposition& d, bool trace) {
  doc.result("decomposition", poly_json(d.result), to_string(d.result));
  const UPolynomial nf = normal_form(d.result);
  doc.result("normal_form", poly_json(nf), to_string(nf));
  if (trace) {
    json steps = json::array();
    std::vector<std::string> lines;
    for (const auto& s : d.trace) {
      steps.push_back({{"step", to_string(s.kind)}, {"n", s.n}, {"degree", s.xnyn_degree},
                       {"detail", s.detail}});
      std::string line = std::string(to_string(s.kind)) + " n=" + std::to_string(s.n) +
                         " deg=" + std::to_string(s.xnyn_degree);
      if (!s.detail.empty()) line += " " + s.detail;
      lines.push_back(std::move(line));
    }
    doc.result_list("trace", steps, lines);
  }
}

int cmd_member(const Options& o, Document& doc) {
  const XYPolynomial f = parse_xy(single_arg(o, "expression"), o.n);
  doc.input("f", poly_json(f), to_string(f));
  const auto cert = membership_certificate(f, {.trace = o.trace});
  doc.result("member", cert.member, cert.member ? "true" : "false");
  if (!cert.member) throw NotAConstant("Delta(f) = " + to_string(delta(f)) + " != 0");
  add_decomposition(doc, *cert.decomposition, o.trace);
  return 0;
}

int cmd_decompose(const Options& o, Document& doc) {
  const XYPolynomial f = parse_xy(single_arg(o, "expression"), o.n);
  doc.input("f", poly_json(f), to_string(f));
  add_decomposition(doc, decompose(f, {.trace = o.trace}), o.trace);
  return 0;
}

int cmd_normalform(const Options& o, Document& doc) {
  const UPolynomial p = parse_xu(single_arg(o, "expression"), o.n);
  doc.input("p", poly_json(p), to_string(p));
  const UPolynomial nf = normal_form(p);
  doc.result("normal_form", poly_json(nf), to_string(nf));
  return 0;
}

int cmd_lead(const Options& o, Document& doc) {
  const std::string& text = single_arg(o, "expression");
  if (o.ring == "xy") {
    const XYPolynomial f = parse_xy(text, o.n);
    doc.input("f", poly_json(f), to_string(f));
    const XYMonomial m = lead_xy(f);
    doc.result("lead", monomial_json(m), to_string(m));
  } else if (o.ring == "xu") {
    const UPolynomial p = parse_xu(text, o.n);
    doc.input("p", poly_json(p), to_string(p));
    const UMonomial m = lead_dill(p);
    doc.result("lead", monomial_json(m), to_string(m));
    const XYMonomial l = lead_of(m);
    doc.result("lead_of", monomial_json(l), to_string(l));
  } else {
    throw UsageError("--ring must be xy or xu");
  }
  return 0;
}

int cmd_dill_cmp(const Options& o, Document& doc) {
  if (o.args.size() != 2) throw UsageError("expected two monomials");
  const UMonomial v = parse_xu_monomial(o.args[0], o.n);
  const UMonomial w = parse_xu_monomial(o.args[1], o.n);
  doc.input("v", monomial_json(v), to_string(v));
  doc.input("w", monomial_json(w), to_string(w));
  const auto c = dill_compare(v, w);
  const char* s = c > 0 ? "greater" : c < 0 ? "less" : "equal";
  doc.result("order", s, s);
  return 0;
}

int cmd_enum_basis(const Options& o, Document& doc) {
  std::vector<UMonomial> ms;
  if (o.weight && o.bidegree.empty()) {
    doc.input("weight", *o.weight, std::to_string(*o.weight));
    ms = enumerate_normal(o.n, *o.weight);
  } else if (!o.weight) {
    const auto [d1, d2] = require_bidegree(o);
    doc.input("bidegree", {d1, d2}, std::to_string(d1) + " " + std::to_string(d2));
    ms = enumerate_normal_bidegree(o.n, d1, d2);
  } else {
    throw UsageError("give either --weight or --bidegree, not both");
  }
  json arr = json::array();
  std::vector<std::string> lines;
  for (const auto& m : ms) {
    arr.push_back(monomial_json(m));
    lines.push_back(to_string(m));
  }
  doc.result_list("basis", arr, lines);
  return 0;
}

int cmd_dim(const Options& o, Document& doc) {
  std::size_t dim = 0;
  if (o.weight && o.bidegree.empty()) {
    doc.input("weight", *o.weight, std::to_string(*o.weight));
    dim = enumerate_normal(o.n, *o.weight).size();
  } else if (!o.weight) {
    const auto [d1, d2] = require_bidegree(o);
    doc.input("bidegree", {d1, d2}, std::to_string(d1) + " " + std::to_string(d2));
    dim = graded_dimension(o.n, d1, d2);
  } else {
    throw UsageError("give either --weight or --bidegree, not both");
  }
  doc.result("dimension", dim, std::to_string(dim));
  return 0;
}

int cmd_oracle_dim(const Options& o, Document& doc) {
  const auto [d1, d2] = require_bidegree(o);
  doc.input("bidegree", {d1, d2}, std::to_string(d1) + " " + std::to_string(d2));
  const OracleResult r = oracle_kernel(o.n, d1, d2, o.basis);
  doc.result("dimension", r.dimension, std::to_string(r.dimension));
  if (o.basis) {
    json arr = json::array();
    std::vector<std::string> lines;
    for (const auto& v : r.basis) {
      arr.push_back(poly_json(v));
      lines.push_back(to_string(v));
    }
    doc.result_list("basis", arr, lines);
  }
  return 0;
}

int cmd_verify_gb(const Options& o, Document& doc) {
  RelationSet rel = RelationSet::standard(o.n);
  json dropped = json::array();
  for (const auto& name : o.drop) {
    std::size_t pos = rel.size();
    for (std::size_t p = 0; p < rel.size(); ++p)
      if (rel.relations()[p].name() == name) pos = p;
    if (pos == rel.size()) throw UsageError("no relation named " + name);
    rel = rel.without(pos);
    dropped.push_back(name);
  }
  if (!o.drop.empty()) {
    std::string text;
    for (const auto& d : o.drop) text += (text.empty() ? "" : " ") + d;
    doc.input("drop", dropped, text);
  }
  const BuchbergerReport r = buchberger_check(rel, o.max_pairs);
  doc.result("groebner_basis", r.ok(), r.ok() ? "true" : "false");
  doc.result("s_pairs_ok", r.groebner, r.groebner ? "true" : "false");
  doc.result("reduced", r.reduced, r.reduced ? "true" : "false");
  doc.result("relations", rel.size(), std::to_string(rel.size()));
  doc.result("pairs", r.pairs_total, std::to_string(r.pairs_total));
  doc.result("pairs_coprime_skipped", r.pairs_skipped_coprime,
             std::to_string(r.pairs_skipped_coprime));
  doc.result("pairs_reduced", r.pairs_reduced, std::to_string(r.pairs_reduced));
  doc.result("truncated", r.truncated, r.truncated ? "true" : "false");
  if (r.failure) doc.result("failure", *r.failure, *r.failure);
  return 0;
}

int cmd_reconstruct(const Options& o, Document& doc) {
  const XYMonomial m = parse_xy_monomial(single_arg(o, "monomial"), o.n);
  doc.input("lead", monomial_json(m), to_string(m));
  const UMonomial w = reconstruct_from_lead(m);
  doc.result("monomial", monomial_json(w), to_string(w));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constants of the Weitzenboeck derivation sum x_i d/dy_i"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&, Document&);
  struct Sub {
    const char* name;
    const char* help;
    Handler fn;
  };
  const std::vector<Sub> subs{
      {"delta", "apply Delta to an XY polynomial", cmd_delta},
      {"member", "kernel membership with a decomposition certificate", cmd_member},
      {"decompose", "write a constant in terms of x(i) and u(i,j)", cmd_decompose},
      {"normalform", "reduce an XU polynomial modulo the relations", cmd_normalform},
      {"lead", "leading monomial (--ring xy: lex, --ring xu: DILL)", cmd_lead},
      {"dill-cmp", "compare two XU monomials in the DILL order", cmd_dill_cmp},
      {"enum-basis", "list normal monomials (--weight or --bidegree)", cmd_enum_basis},
      {"dim", "count normal monomials (--weight or --bidegree)", cmd_dim},
      {"oracle-dim", "kernel dimension by linear algebra (--bidegree)", cmd_oracle_dim},
      {"verify-gb", "check the relations form a reduced Groebner basis", cmd_verify_gb},
      {"reconstruct", "normal monomial with a given leading monomial", cmd_reconstruct},
  };

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("-n", o.n, "number of index pairs")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_flag("--trace", o.trace, "record decomposition steps");
    sub->add_flag("--basis", o.basis, "also print the oracle kernel basis");
    sub->add_option("--weight", o.weight, "total degree of the image in X and Y");
    sub->add_option("--bidegree", o.bidegree, "degrees in X and Y")->expected(2);
    sub->add_option("--max-pairs", o.max_pairs, "cap on reduced S-pairs (0 = none)");
    sub->add_option("--ring", o.ring, "xy or xu");
    sub->add_option("--drop", o.drop, "relation to remove, e.g. s(1,2,3)");
    sub->add_option("args", o.args, "expressions or monomials");
    handlers.emplace_back(sub, s.fn);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& [sub, fn] : handlers) {
    if (!sub->parsed()) continue;
    Document doc(sub->get_name(), o.n);
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
      code = fn(o, doc);
    } catch (const UsageError& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return 2;
    } catch (const weitz::Error& e) {
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      doc.print(std::cout, o.json, ms);
      std::cerr << e.kind() << ": " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 3;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc.print(std::cout, o.json, ms);
    return code;
  }
  return 2;
}
