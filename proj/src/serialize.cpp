#include "dct/serialize.hpp"

#include <json.hpp>

namespace dct {

namespace {

using Json = nlohmann::ordered_json;

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw CertificateError("expected a rational string");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw CertificateError("bad rational '" + j.get<std::string>() + "'");
  q.canonicalize();
  return q;
}

Json poly_json(const Polynomial& p) {
  Json a = Json::array();
  for (const Rational& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

Polynomial poly_from(const Json& j) {
  if (!j.is_array()) throw CertificateError("expected a coefficient array");
  std::vector<Rational> c;
  for (const Json& e : j) c.push_back(rational_from(e));
  if (!c.empty() && c.back() == 0) throw CertificateError("trailing zero coefficient");
  return Polynomial(std::move(c));
}

Json op_json(const OrePoly& l) {
  Json coeffs = Json::array();
  for (const RationalFunction& f : l.coeffs()) coeffs.push_back(Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}});
  return Json{{"var", "x"}, {"coeffs", coeffs}};
}

OrePoly op_from(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw CertificateError("operator needs a coeffs array");
  if (j.contains("var") && j["var"] != "x") throw CertificateError("operator variable must be x");
  std::vector<RationalFunction> c;
  for (const Json& e : j["coeffs"]) {
    if (!e.is_object() || !e.contains("num")) throw CertificateError("coefficient needs num");
    Polynomial den = e.contains("den") ? poly_from(e["den"]) : Polynomial(1);
    if (den.is_zero()) throw CertificateError("zero denominator");
    c.emplace_back(poly_from(e["num"]), den);
  }
  if (!c.empty() && c.back().is_zero()) throw CertificateError("leading coefficient is zero");
  return OrePoly(std::move(c));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CertificateError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string operator_to_json(const OrePoly& l) { return op_json(l).dump(); }

OrePoly operator_from_json(const std::string& text) { return op_from(parse_json(text)); }

std::string certificate_to_json(const Certificate& c, int indent) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["s"] = c.s;
  j["operator"] = op_json(c.op);
  j["P"] = c.p ? op_json(*c.p) : Json(nullptr);
  j["point"] = c.point ? Json(to_string(*c.point)) : Json(nullptr);
  j["classification"] = c.classification ? Json(to_string(*c.classification)) : Json(nullptr);
  Json ex = Json::object();
  for (const auto& [pt, es] : c.exponents) {
    Json a = Json::array();
    for (const Rational& e : es) a.push_back(e.get_str());
    ex[to_string(pt)] = a;
  }
  j["exponents"] = ex;
  j["tool_version"] = kToolVersion;
  return j.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
  Json j = parse_json(text);
  try {
    Certificate c;
    c.kind = parse_certificate_kind(j.at("kind").get<std::string>());
    c.s = j.at("s").get<int>();
    c.op = op_from(j.at("operator"));
    if (j.contains("P") && !j["P"].is_null()) c.p = op_from(j["P"]);
    if (j.contains("point") && !j["point"].is_null()) c.point = parse_point(j["point"].get<std::string>());
    if (j.contains("classification") && !j["classification"].is_null())
      c.classification = parse_point_kind(j["classification"].get<std::string>());
    if (j.contains("exponents"))
      for (const auto& [key, arr] : j["exponents"].items()) {
        std::vector<Rational> es;
        for (const Json& e : arr) es.push_back(rational_from(e));
        c.exponents.emplace_back(parse_point(key), std::move(es));
      }
    return c;
  } catch (const CertificateError&) {
    throw;
  } catch (const std::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace dct
