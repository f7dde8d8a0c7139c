// dct: transcendence certificates for linear differential operators.
//
// Exit codes: 0 certificate or decision, 2 nothing found at the given bounds
// (or a rejected certificate for `verify`), 1 error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "dct/algsols.hpp"
#include "dct/certsearch.hpp"
#include "dct/parse.hpp"
#include "dct/serialize.hpp"

using namespace dct;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kFound = 0;
constexpr int kError = 1;
constexpr int kNone = 2;

struct Options {
  std::string input;
  std::string format = "text";
  int max_s = 0;
  int max_s_ansatz = 2;
  std::string denom_bound = "auto";
  int escalations = 2;
  int degree = 1;
  int budget = 6;
  std::uint64_t seed = 0;
  int guard = 5;
  std::string method = "auto";
  bool adjoin = false;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_input(const std::string& src) {
  if (src != "-") return src;
  return read_all(std::cin);
}

OrePoly read_operator(const std::string& src) {
  std::string text = read_input(src);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  OrePoly l = first != std::string::npos && text[first] == '{' ? operator_from_json(text) : parse_operator(text);
  if (l.is_zero()) throw OreError("the operator is zero");
  return l;
}

AnsatzConfig ansatz_config(const Options& o) {
  AnsatzConfig cfg;
  cfg.guard = o.guard;
  cfg.max_escalations = o.escalations;
  if (o.denom_bound != "auto") {
    std::size_t used = 0;
    int n = std::stoi(o.denom_bound, &used);
    if (used != o.denom_bound.size() || n < 0) throw CLI::ValidationError("--denom-bound", "expected N >= 0 or auto");
    cfg.uniform_bound = n;
  }
  return cfg;
}

Json cert_json(const Certificate& c) { return Json::parse(certificate_to_json(c, -1)); }

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& e : v) a.push_back(e.get_str());
  return a;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const Rational& e : v) s += (s.empty() ? "" : " ") + to_string(e);
  return s;
}

std::string describe(const Certificate& c) {
  std::ostringstream out;
  out << "certificate: " << to_string(c.kind);
  if (c.kind == Certificate::Kind::singular_structure)
    out << " at " << to_string(*c.point) << " (" << to_string(*c.classification) << ")\n";
  else
    out << ", s = " << c.s << "\n  P = " << to_string(*c.p) << "\n";
  return out.str();
}

std::string bounds_text(const AnsatzConfig& b) {
  std::string s;
  for (const auto& [xi, n] : b.denom_bounds) s += (s.empty() ? "" : ", ") + to_string(xi) + ": " + std::to_string(n);
  if (b.locus_bound) s += (s.empty() ? "" : ", ") + std::string("locus: ") + std::to_string(*b.locus_bound);
  return "{" + s + "}";
}

Json bounds_json(const AnsatzConfig& b) {
  Json j = Json::object();
  for (const auto& [xi, n] : b.denom_bounds) j[xi.get_str()] = n;
  if (b.locus_bound) j["locus"] = *b.locus_bound;
  return j;
}

// Singularity table with per-point classification.
std::vector<PointClassification> singularity_table(const OrePoly& l) {
  SingularSupport ss = singular_support(l);
  std::vector<PointClassification> out;
  for (const Rational& xi : ss.finite_points) out.push_back(classify_point(l, Point::at(xi)));
  if (ss.irrational_locus.degree() > 0)
    for (PointClassification& c : classify_locus(l, ss.irrational_locus)) out.push_back(std::move(c));
  out.push_back(classify_point(l, Point::infinity()));
  return out;
}

int emit_certificate(const Certificate& c, const Options& o) {
  if (o.format == "json")
    std::cout << certificate_to_json(c) << "\n";
  else
    std::cout << describe(c);
  return kFound;
}

int emit_none(const std::string& what, const Json& detail, const Options& o) {
  if (o.format == "json") {
    Json j{{"result", "none"}, {"search", what}};
    for (const auto& [k, v] : detail.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "none found: " << what;
    for (const auto& [k, v] : detail.items()) std::cout << ", " << k << " = " << v.dump();
    std::cout << "\n";
  }
  return kNone;
}

int cmd_pseudo(const Options& o) {
  OrePoly l = read_operator(o.input);
  int max_s = o.max_s > 0 ? o.max_s : 5;
  AnsatzConfig cfg = ansatz_config(o);
  try {
    if (o.method == "monomial") {
      MonomialSearch m = monomial_search(l, max_s, o.guard);
      if (m.certificate) return emit_certificate(*m.certificate, o);
      Json counts = Json::array();
      for (auto [s, n] : m.polytope_counts) counts.push_back(Json{{"s", s}, {"points", n}});
      return emit_none("monomial", Json{{"max_s", max_s}, {"polytope_points", counts}}, o);
    }
    if (o.method == "ansatz") {
      int top = o.max_s > 0 ? o.max_s : o.max_s_ansatz;
      Json tried = Json::array();
      for (int s = 1; s <= top; ++s) {
        OrePoly ls = s == 1 ? l : symmetric_power(l, s);
        AnsatzConfig local = cfg;
        AnsatzResult r = ansatz_search(ls, local);
        if (!r.classes.empty()) {
          Certificate c;
          c.kind = s == 1 ? Certificate::Kind::pseudoconstant : Certificate::Kind::sympow_pseudoconstant;
          c.op = l;
          c.s = s;
          c.p = r.classes.front().rep;
          c.exponents = exponent_table(l);
          return emit_certificate(c, o);
        }
        tried.push_back(Json{{"s", s}, {"bounds", bounds_json(r.bounds)}, {"escalations", r.escalations}});
      }
      return emit_none("ansatz", Json{{"attempts", tried}}, o);
    }
    // auto: monomial and ansatz per power, then monomial alone
    if (auto c = sympow_pseudoconstant_search(l, std::min(max_s, o.max_s_ansatz), cfg)) return emit_certificate(*c, o);
    if (max_s > o.max_s_ansatz) {
      MonomialSearch m = monomial_search(l, max_s, o.guard);
      if (m.certificate) return emit_certificate(*m.certificate, o);
    }
    return emit_none("auto", Json{{"max_s", max_s}, {"max_s_ansatz", o.max_s_ansatz}}, o);
  } catch (const NotPuiseux&) {
    std::optional<Certificate> c = singularity_certificate(l);
    if (!c) throw;
    return emit_certificate(*c, o);
  }
}

int cmd_analyze(const Options& o) {
  OrePoly l = read_operator(o.input);
  int max_s = o.max_s > 0 ? o.max_s : 5;
  AnsatzConfig cfg = ansatz_config(o);
  std::vector<PointClassification> table = singularity_table(l);
  std::optional<Certificate> cert = singularity_certificate(l);
  std::string stage = "singularity";
  std::optional<AnsatzConfig> last_bounds;
  if (!cert) {
    AnsatzResult r = ansatz_search(l, cfg);
    last_bounds = r.bounds;
    stage = "ansatz s=1";
    if (!r.classes.empty()) {
      Certificate c;
      c.kind = Certificate::Kind::pseudoconstant;
      c.op = l;
      c.p = r.classes.front().rep;
      c.exponents = exponent_table(l);
      cert = c;
    }
  }
  if (!cert) {
    stage = "monomial";
    cert = monomial_search(l, max_s, o.guard).certificate;
  }
  if (!cert) {
    stage = "ansatz per power";
    for (int s = 2; s <= o.max_s_ansatz && !cert; ++s) {
      AnsatzConfig local = cfg;
      AnsatzResult r = ansatz_search(symmetric_power(l, s), local);
      if (!r.classes.empty()) {
        Certificate c;
        c.kind = Certificate::Kind::sympow_pseudoconstant;
        c.op = l;
        c.s = s;
        c.p = r.classes.front().rep;
        c.exponents = exponent_table(l);
        cert = c;
      }
    }
  }
  std::optional<GrowthProbe> growth;
  if (max_s >= 2) growth = growth_probe(l, max_s, false);

  if (o.format == "json") {
    Json j;
    j["operator"] = Json::parse(operator_to_json(l));
    Json sing = Json::array();
    for (const PointClassification& c : table)
      sing.push_back(Json{{"point", to_string(c.point)}, {"classification", to_string(c.kind)}, {"exponents", rationals_json(c.exponents)}});
    j["singularities"] = sing;
    j["certificate"] = cert ? cert_json(*cert) : Json(nullptr);
    j["stage"] = cert ? Json(stage) : Json(nullptr);
    if (growth) {
      Json orders = Json::array();
      for (auto [s, r] : growth->orders) orders.push_back(Json{{"s", s}, {"order", r}});
      j["growth"] = Json{{"orders", orders}, {"classification", to_string(growth->classification)}, {"advisory", true}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "operator: " << to_string(l) << "\n";
    for (const PointClassification& c : table)
      std::cout << "  " << to_string(c.point) << ": " << to_string(c.kind) << " [" << join(c.exponents) << "]\n";
    if (cert)
      std::cout << "stage: " << stage << "\n" << describe(*cert);
    else
      std::cout << "no certificate found (max-s " << max_s << ", max-s-ansatz " << o.max_s_ansatz
                << (last_bounds ? ", bounds " + bounds_text(*last_bounds) : "") << ")\n";
    if (growth) {
      std::cout << "growth (advisory):";
      for (auto [s, r] : growth->orders) std::cout << " " << r;
      std::cout << " -> " << to_string(growth->classification) << "\n";
    }
  }
  return cert ? kFound : kNone;
}

int cmd_sympow(const Options& o) {
  OrePoly l = read_operator(o.input);
  int s = o.max_s > 0 ? o.max_s : 2;
  OrePoly ls = symmetric_power(l, s);
  if (o.format == "json")
    std::cout << Json{{"s", s}, {"order", ls.order()}, {"operator", Json::parse(operator_to_json(ls))}}.dump(2) << "\n";
  else
    std::cout << "order " << ls.order() << "\n" << to_string(ls) << "\n";
  return kFound;
}

int cmd_growth(const Options& o) {
  OrePoly l = read_operator(o.input);
  GrowthProbe g = growth_probe(l, o.max_s > 0 ? o.max_s : 5, o.adjoin);
  if (o.format == "json") {
    Json orders = Json::array();
    for (auto [s, r] : g.orders) orders.push_back(Json{{"s", s}, {"order", r}});
    std::cout << Json{{"orders", orders}, {"classification", to_string(g.classification)}, {"adjoined", g.adjoined}}.dump(2)
              << "\n";
  } else {
    std::cout << "orders:";
    for (auto [s, r] : g.orders) std::cout << " " << r;
    std::cout << "\nclassification: " << to_string(g.classification) << (g.adjoined ? " (after lclm with D^2)" : "")
              << "\n";
  }
  return g.classification == GrowthProbe::Kind::inconclusive ? kNone : kFound;
}

int cmd_algsols(const Options& o) {
  OrePoly l = read_operator(o.input);
  AlgOptions opt;
  opt.budget = o.budget;
  opt.seed = o.seed;
  AlgDecision d = all_algebraic_of_degree(l, o.degree, opt);
  if (o.format == "json") {
    Json j{{"degree", o.degree}, {"result", to_string(d.kind)}};
    j["minimal_polynomial"] = d.minpoly ? Json(to_string(*d.minpoly)) : Json(nullptr);
    j["truncation"] = d.truncation;
    std::cout << j.dump(2) << "\n";
  } else if (d.minpoly) {
    std::cout << "minimal polynomial: " << to_string(*d.minpoly) << "\n";
  } else {
    std::cout << to_string(d.kind) << " (degree " << o.degree << ", last truncation " << d.truncation << ")\n";
  }
  return d.kind == AlgDecision::Kind::inconclusive_budget ? kNone : kFound;
}

int cmd_verify(const Options& o) {
  std::string text;
  if (o.input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(o.input);
    if (!in) throw CertificateError("cannot read " + o.input);
    text = read_all(in);
  }
  Certificate c = certificate_from_json(text);
  bool ok = verify_certificate(c, o.guard);
  if (o.format == "json")
    std::cout << Json{{"valid", ok}, {"kind", to_string(c.kind)}}.dump(2) << "\n";
  else
    std::cout << (ok ? "valid" : "rejected") << "\n";
  return ok ? kFound : kNone;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transcendence certificates for linear differential operators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto common = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--nterms-guard", o.guard, "Extra series terms past exponent 0")->check(CLI::PositiveNumber);
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--max-s", o.max_s, "Largest symmetric power")->check(CLI::PositiveNumber);
    sub->add_option("--max-s-ansatz", o.max_s_ansatz, "Largest power for the ansatz search")->check(CLI::PositiveNumber);
    sub->add_option("--denom-bound", o.denom_bound, "Denominator bound per singularity: N or auto");
    sub->add_option("--escalations", o.escalations, "Times the bounds may be doubled")->check(CLI::NonNegativeNumber);
  };
  const char* op_help = "Operator text, operator JSON, or - for stdin";

  CLI::App* analyze = app.add_subcommand("analyze", "Singularities, certificate pipeline and growth probe");
  common(analyze, op_help);
  search(analyze);
  CLI::App* pseudo = app.add_subcommand("pseudo", "Search for a pseudoconstant");
  common(pseudo, op_help);
  search(pseudo);
  pseudo->add_option("--method", o.method, "Search method")->check(CLI::IsMember({"auto", "monomial", "ansatz"}));
  CLI::App* sympow = app.add_subcommand("sympow", "Symmetric power of order --max-s");
  common(sympow, op_help);
  sympow->add_option("--max-s", o.max_s, "Power")->check(CLI::PositiveNumber);
  CLI::App* growth = app.add_subcommand("growth", "Orders of symmetric powers");
  common(growth, op_help);
  growth->add_option("--max-s", o.max_s, "Largest power (>= 2)")->check(CLI::Range(2, 1000));
  growth->add_flag("--adjoin", o.adjoin, "Use lclm(L, D^2) unless D^2 already divides L");
  CLI::App* algsols = app.add_subcommand("algsols", "Algebraic solutions of bounded degree");
  common(algsols, op_help);
  algsols->add_option("--degree", o.degree, "Degree bound")->check(CLI::PositiveNumber);
  algsols->add_option("--budget", o.budget, "Doublings of the truncation order")->check(CLI::NonNegativeNumber);
  algsols->add_option("--seed", o.seed, "Seed for the random combination");
  CLI::App* verify = app.add_subcommand("verify", "Re-check a certificate JSON file");
  common(verify, "Certificate file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  try {
    if (*analyze) return cmd_analyze(o);
    if (*pseudo) return cmd_pseudo(o);
    if (*sympow) return cmd_sympow(o);
    if (*growth) return cmd_growth(o);
    if (*algsols) return cmd_algsols(o);
    if (*verify) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const NotPuiseux& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
