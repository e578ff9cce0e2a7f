#include "ivkit/serialize.hpp"

#include "ivkit/error.hpp"

namespace ivkit::json {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidSpec, std::string("malformed JSON: ") + what);
}

}  // namespace

Json rational(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j) {
  require(j.is_string(), "rational must be a string");
  return parse_rational(j.get<std::string>());
}

Json rationals(const std::vector<Rational>& qs) {
  Json a = Json::array();
  for (const auto& q : qs) a.push_back(rational(q));
  return a;
}

std::vector<Rational> rationals_from(const Json& j) {
  require(j.is_array(), "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from(x));
  return out;
}

Json poly(const intpoly::IVPoly& f) {
  Json j;
  j["coeffs"] = rationals(f.poly().coeffs());
  if (f.site().is_all_integers()) {
    j["site"] = "Z";
  } else {
    j["site"] = f.site().points();
  }
  return j;
}

intpoly::IVPoly poly_from(const Json& j) {
  require(j.is_object() && j.contains("coeffs") && j.contains("site"), "polynomial object");
  QPoly p(rationals_from(j["coeffs"]));
  const auto& s = j["site"];
  if (s.is_string()) {
    require(s.get<std::string>() == "Z", "site tag");
    return intpoly::IVPoly(std::move(p));
  }
  require(s.is_array(), "site");
  return intpoly::IVPoly(std::move(p), intpoly::Site::finite(s.get<std::vector<std::int64_t>>()));
}

Json factorizations(const std::vector<intpoly::Factorization>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) {
    Json parts = Json::array();
    for (const auto& p : f.parts) parts.push_back(rationals(p.poly().coeffs()));
    out.push_back(std::move(parts));
  }
  return out;
}

Json element(const ring::Element& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms()) terms.push_back(Json::array({rational(t.coeff), rational(t.exponent)}));
  return Json{{"ring", e.ring().tag()}, {"terms", std::move(terms)}};
}

ring::Element element_from(const Json& j) {
  require(j.is_object() && j.contains("ring") && j.contains("terms"), "ring element object");
  auto r = ring::CoefficientRing::from_tag(j["ring"].get<std::string>());
  std::vector<ring::Term> raw;
  require(j["terms"].is_array(), "terms");
  for (const auto& t : j["terms"]) {
    require(t.is_array() && t.size() == 2, "term pair");
    raw.push_back({rational_from(t[0]), rational_from(t[1])});
  }
  return ring::Element::canonicalize(r, std::move(raw));
}

Json certificate(const puiseux::MembershipCertificate& c, const puiseux::MonoidSpec& spec) {
  Json out = Json::array();
  for (const auto& [idx, count] : c.combo) {
    out.push_back({{"index", idx}, {"generator", rational(spec.generator(idx))}, {"count", count.get_str()}});
  }
  return out;
}

Json grams(const puiseux::GramsDecomposition& d) {
  Json coeffs = Json::array();
  for (const auto& [i, c] : d.coeffs) {
    coeffs.push_back({{"index", i}, {"generator", rational(puiseux::MonoidSpec::grams().generator(i))},
                      {"coeff", c.get_str()}});
  }
  return Json{{"nu", rational(d.nu)}, {"coeffs", std::move(coeffs)}};
}

Json tpoly(const cone::TPoly& p) { return rationals(p.coeffs()); }

cone::TPoly tpoly_from(const Json& j) { return cone::TPoly(rationals_from(j)); }

Json cone_certificate(const cone::ConeCertificate& c, const cone::ConeSpec& spec) {
  Json out = Json::object();
  for (const auto& [k, w] : c.weights) out[spec.generators().at(k).name()] = rational(w);
  return out;
}

Json idf_report(const cone::IdfReport& r) {
  return Json{{"index", r.index},
              {"sum_identities", r.sum_identities},
              {"mass", rational(r.mass)},
              {"no_common_divisor", r.no_common_divisor},
              {"distinct", r.distinct},
              {"fm_agrees", r.fm_agrees},
              {"passed", r.passed()}};
}

}  // namespace ivkit::json
