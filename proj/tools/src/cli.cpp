#include "ivkit_cli/cli.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ivkit/cone.hpp"
#include "ivkit/error.hpp"
#include "ivkit/intpoly.hpp"
#include "ivkit/monoid_ring.hpp"
#include "ivkit/puiseux.hpp"
#include "ivkit/serialize.hpp"
#include "ivkit_cli/verify.hpp"

namespace ivkit::cli {

namespace {

using Json = nlohmann::json;

struct Output {
  Json result;
  std::string text;
  bool ok = true;  // verify-paper may complete but report failure
};

struct Flags {
  std::string format = "text";
  std::string spec = "grams";
  std::string gens;
  std::size_t truncation = 0;
  std::string value;
  std::string denom_bound = "100";
  std::size_t length_cap = 12;
  std::size_t n_max = 10;
  std::string ring = "Z";
  std::string a;
  std::string b;
  bool not_cone_closed = false;
  std::string poly;
  std::string binomial;
  std::string site = "Z";
  std::string target;
  std::vector<std::string> exclude;
  unsigned cone_n = 8;
  unsigned index = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_rational(item));
  return out;
}

puiseux::MonoidSpec parse_spec(const Flags& f) {
  using puiseux::MonoidSpec;
  const std::size_t t = f.truncation ? f.truncation : MonoidSpec::kDefaultTruncation;
  if (f.spec == "grams") return MonoidSpec::grams(t);
  if (f.spec == "prime-reciprocal") return MonoidSpec::prime_reciprocal(t);
  if (f.spec == "dyadic") return MonoidSpec::dyadic(t);
  if (f.spec == "explicit") {
    std::optional<std::size_t> trunc;
    if (f.truncation) trunc = f.truncation;
    return MonoidSpec::explicit_generators(parse_list(f.gens), trunc);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown monoid spec '" + f.spec + "'");
}

intpoly::Site parse_site(const std::string& s) {
  if (s == "Z") return intpoly::Site::integers();
  std::vector<std::int64_t> pts;
  for (const auto& q : parse_list(s)) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) {
      throw Error(ErrorCode::InvalidSpec, "site points must be machine-size integers");
    }
    pts.push_back(q.get_num().get_si());
  }
  return intpoly::Site::finite(std::move(pts));
}

intpoly::IVPoly parse_poly(const Flags& f) {
  if (!f.poly.empty() && !f.binomial.empty()) {
    throw Error(ErrorCode::InvalidSpec, "give either --poly or --binomial, not both");
  }
  QPoly p = f.binomial.empty() ? QPoly(parse_list(f.poly))
                               : intpoly::from_binomial_basis({parse_list(f.binomial)});
  return intpoly::IVPoly(std::move(p), parse_site(f.site));
}

ring::Element parse_element(const ring::CoefficientRing& r, const std::string& s) {
  std::vector<ring::Term> terms;
  for (const auto& item : split(s, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::MalformedRational, "ring term '" + item + "' is not coeff:exponent");
    }
    terms.push_back({parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1))});
  }
  return ring::Element::canonicalize(r, std::move(terms));
}

std::string join(const std::vector<Rational>& qs) {
  std::string s;
  for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? ", " : "") + to_string(qs[i]);
  return s;
}

std::string show(const intpoly::IVPoly& f) { return f.poly().pretty(); }

// Handlers.

Output monoid_member(const Flags& f) {
  auto spec = parse_spec(f);
  const Rational q = parse_rational(f.value);
  auto m = puiseux::membership(spec, q);
  Output o;
  o.result = {{"value", json::rational(q)}, {"member", m.is_member()}, {"exact", m.exact}};
  o.result["certificate"] = m.certificate ? json::certificate(*m.certificate, spec) : Json(nullptr);
  std::ostringstream t;
  t << to_string(q) << (m.is_member() ? " is a member" : " is not a member");
  if (!m.exact) t << " (within truncation " << spec.truncation() << ")";
  if (m.certificate) {
    t << "\n";
    for (const auto& [i, c] : m.certificate->combo) t << "  " << c << " x " << to_string(spec.generator(i)) << "\n";
  } else {
    t << "\n";
  }
  o.text = t.str();
  return o;
}

Output monoid_atoms(const Flags& f) {
  auto spec = parse_spec(f);
  const Rational bound = parse_rational(f.denom_bound);
  if (!is_integer(bound)) throw Error(ErrorCode::InvalidSpec, "--denom-bound must be an integer");
  auto atoms = puiseux::atoms_up_to(spec, bound.get_num());
  return {json::rationals(atoms), join(atoms) + "\n"};
}

Output monoid_factor(const Flags& f) {
  auto spec = parse_spec(f);
  const Rational b = parse_rational(f.value);
  auto fs = puiseux::factorizations(spec, b, f.length_cap);
  auto ls = puiseux::length_set(spec, b, f.length_cap);
  Json items = Json::array();
  std::ostringstream t;
  for (const auto& fz : fs.items) {
    items.push_back(json::rationals(fz.parts));
    t << "[" << join(fz.parts) << "]\n";
  }
  std::vector<std::size_t> lengths(ls.lengths.begin(), ls.lengths.end());
  Output o;
  o.result = {{"value", json::rational(b)},
              {"factorizations", std::move(items)},
              {"lengths", lengths},
              {"elasticity", ls.elasticity ? json::rational(*ls.elasticity) : Json(nullptr)},
              {"cap_hit", fs.cap_hit}};
  t << "lengths:";
  for (auto l : lengths) t << " " << l;
  t << (fs.cap_hit ? " (length cap reached; lower bound)\n" : "\n");
  o.text = t.str();
  return o;
}

Output grams_decompose(const Flags& f) {
  const Rational q = parse_rational(f.value);
  auto d = puiseux::grams_decompose(q);
  if (!d) throw Error(ErrorCode::NotAMember, to_string(q) + " is not in the Grams monoid");
  std::ostringstream t;
  t << to_string(q) << " = " << to_string(d->nu);
  for (const auto& [i, c] : d->coeffs) t << " + " << c << "/" << to_string(puiseux::MonoidSpec::grams().generator(i).get_den());
  t << "\n";
  return {json::grams(*d), t.str()};
}

Output accp_chain(const Flags& f) {
  auto spec = puiseux::MonoidSpec::grams();
  auto steps = puiseux::accp_chain_check(spec, f.n_max);
  Json arr = Json::array();
  std::ostringstream t;
  for (const auto& s : steps) {
    arr.push_back({{"n", s.n},
                   {"ascending", s.ascending},
                   {"strict", s.strict},
                   {"certificate", json::certificate(s.certificate, spec)}});
    t << "n=" << s.n << " ascending=" << s.ascending << " strict=" << s.strict << "\n";
  }
  return {arr, t.str()};
}

Output ring_mul(const Flags& f) {
  auto r = ring::CoefficientRing::from_tag(f.ring);
  auto a = parse_element(r, f.a);
  auto b = parse_element(r, f.b);
  auto p = ring::mul(a, b);
  return {json::element(p), p.pretty() + "\n"};
}

Output ring_root(const Flags& f) {
  auto r = ring::CoefficientRing::from_tag(f.ring);
  auto a = parse_element(r, f.a);
  auto root = ring::pth_root(a, !f.not_cone_closed);
  if (!root) {
    throw Error(ErrorCode::WrongMonoidKind, "exponent monoid is not closed under division by p");
  }
  return {json::element(*root), root->pretty() + "\n"};
}

Output ivp_member(const Flags& f) {
  auto p = parse_poly(f);
  const bool m = intpoly::is_member(p);
  return {{{"poly", json::poly(p)}, {"member", m}}, std::string(m ? "member\n" : "not a member\n")};
}

Output ivp_basis(const Flags& f) {
  auto p = parse_poly(f);
  auto e = intpoly::to_binomial_basis(p.poly());
  std::ostringstream t;
  t << "monomial: " << join(p.poly().coeffs()) << "\nbinomial: " << join(e.deltas) << "\n";
  return {{{"poly", json::poly(p)}, {"binomial", json::rationals(e.deltas)}}, t.str()};
}

Output ivp_divisors(const Flags& f) {
  auto p = parse_poly(f);
  auto ds = intpoly::divisors(p);
  Json arr = Json::array();
  std::ostringstream t;
  for (const auto& d : ds) {
    arr.push_back(json::poly(d));
    t << show(d) << "\n";
  }
  return {arr, t.str()};
}

Output ivp_factor(const Flags& f) {
  auto p = parse_poly(f);
  auto fs = intpoly::factorizations(p);
  auto prof = intpoly::length_profile(p);
  std::ostringstream t;
  for (const auto& fz : fs) {
    t << "[";
    for (std::size_t i = 0; i < fz.parts.size(); ++i) t << (i ? "] * [" : "") << show(fz.parts[i]);
    t << "]\n";
  }
  std::vector<std::size_t> lengths(prof.lengths.begin(), prof.lengths.end());
  t << "lengths:";
  for (auto l : lengths) t << " " << l;
  t << "\nelasticity: " << to_string(prof.elasticity) << "\n";
  Output o;
  o.result = {{"poly", json::poly(p)},
              {"factorizations", json::factorizations(fs)},
              {"lengths", lengths},
              {"elasticity", json::rational(prof.elasticity)},
              {"half_factorial", !prof.hfd_violation}};
  o.text = t.str();
  return o;
}

Output ivp_irreducible(const Flags& f) {
  auto p = parse_poly(f);
  const bool irr = intpoly::is_irreducible(p);
  return {{{"poly", json::poly(p)}, {"irreducible", irr}},
          std::string(irr ? "irreducible\n" : "not irreducible\n")};
}

Output ivp_furstenberg(const Flags& f) {
  auto p = parse_poly(f);
  auto d = intpoly::find_irreducible_divisor(p);
  return {{{"poly", json::poly(p)}, {"divisor", json::poly(d)}}, show(d) + "\n"};
}

Output ivp_nonatomic(const Flags& f) {
  auto p = parse_poly(f);
  auto w = intpoly::vanishing_nonatomic_witness(p);
  Output o;
  o.result = {{"poly", json::poly(p)},
              {"vanishing_points", w.vanishing_points},
              {"blocking_factor", json::poly(w.blocking_factor)},
              {"split_constant", w.split_constant.get_str()},
              {"split_cofactor", json::poly(w.split_cofactor)},
              {"cofactor_member", w.cofactor_member}};
  std::ostringstream t;
  t << "blocking factor: " << show(w.blocking_factor) << "\nsplit: " << w.split_constant << " * ("
    << show(w.split_cofactor) << ")" << (w.cofactor_member ? "" : " [cofactor not a member]") << "\n";
  o.text = t.str();
  return o;
}

cone::ConeSpec cone_spec(const Flags& f) {
  auto spec = cone::ConeSpec::truncated(f.cone_n);
  for (const auto& name : f.exclude) spec = spec.without(name);
  return spec;
}

Output cone_member(const Flags& f) {
  auto spec = cone_spec(f);
  cone::TPoly target(parse_list(f.target));
  auto cert = cone::cone_member(target, spec);
  const bool fm = cone::cone_member_fm(target, spec);
  Output o;
  o.result = {{"target", json::tpoly(target)},
              {"member", cert.has_value()},
              {"certificate", cert ? json::cone_certificate(*cert, spec) : Json(nullptr)},
              {"fm_agrees", fm == cert.has_value()},
              {"truncation", f.cone_n}};
  std::ostringstream t;
  if (cert) {
    t << "member:";
    for (const auto& [k, w] : cert->weights) t << " " << to_string(w) << "*" << spec.generators()[k].name();
    t << "\n";
  } else {
    t << "not a member (verified up to N=" << f.cone_n << ")\n";
  }
  o.text = t.str();
  return o;
}

Output cone_idf(const Flags& f) {
  auto spec = cone::ConeSpec::truncated(f.cone_n);
  auto rep = cone::idf_family_check(f.index, spec);
  std::ostringstream t;
  t << "i=" << rep.index << " identities=" << rep.sum_identities << " mass=" << to_string(rep.mass)
    << " distinct=" << rep.distinct << " fm_agrees=" << rep.fm_agrees << (rep.passed() ? " PASS" : " FAIL")
    << "\n";
  Output o{json::idf_report(rep), t.str()};
  o.ok = rep.passed();
  return o;
}

Output verify_paper(const Flags&) {
  auto rep = verify_all();
  Output o{to_json(rep), to_text(rep)};
  o.ok = rep.pass();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ivkit: monoids of rationals, integer-valued polynomials and cone certificates", "ivkit"};
  app.require_subcommand(1);
  Flags f;
  std::map<CLI::App*, std::function<Output(const Flags&)>> handlers;

  auto add = [&](const std::string& name, const std::string& desc, auto handler) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    handlers[sub] = handler;
    return sub;
  };
  auto monoid_flags = [&](CLI::App* s) {
    s->add_option("--spec", f.spec, "grams | prime-reciprocal | dyadic | explicit");
    s->add_option("--gens", f.gens, "generators for --spec explicit");
    s->add_option("--truncation", f.truncation, "generator index bound for searches");
  };
  auto poly_flags = [&](CLI::App* s, bool with_site) {
    s->add_option("--poly", f.poly, "coefficients, lowest degree first");
    s->add_option("--binomial", f.binomial, "coefficients in the binomial basis");
    if (with_site) s->add_option("--site", f.site, "Z or a list of integer points");
  };

  auto* s = add("monoid-member", "membership with certificate", monoid_member);
  monoid_flags(s);
  s->add_option("--value", f.value)->required();
  s = add("monoid-atoms", "atoms up to a denominator bound", monoid_atoms);
  monoid_flags(s);
  s->add_option("--denom-bound", f.denom_bound);
  s = add("monoid-factor", "factorizations and length set", monoid_factor);
  monoid_flags(s);
  s->add_option("--value", f.value)->required();
  s->add_option("--length-cap", f.length_cap);
  s = add("grams-decompose", "canonical decomposition in the Grams monoid", grams_decompose);
  s->add_option("--value", f.value)->required();
  s = add("accp-chain", "strictly ascending chain of principal ideals", accp_chain);
  s->add_option("--n-max", f.n_max);
  s = add("ring-mul", "product in the monoid ring", ring_mul);
  s->add_option("--ring", f.ring, "Z, Q or F_p");
  s->add_option("--a", f.a, "terms coeff:exponent, comma separated")->required();
  s->add_option("--b", f.b)->required();
  s = add("ring-root", "p-th root over F_p", ring_root);
  s->add_option("--ring", f.ring)->required();
  s->add_option("--a", f.a)->required();
  s->add_flag("--not-cone-closed", f.not_cone_closed, "exponent monoid not closed under division by p");
  s = add("ivp-member", "integer-valuedness", ivp_member);
  poly_flags(s, true);
  s = add("ivp-basis", "binomial-basis coefficients", ivp_basis);
  poly_flags(s, false);
  s = add("ivp-divisors", "all divisors in Int(Z)", ivp_divisors);
  poly_flags(s, false);
  s = add("ivp-factor", "all factorizations in Int(Z)", ivp_factor);
  poly_flags(s, false);
  s = add("ivp-irreducible", "irreducibility", ivp_irreducible);
  poly_flags(s, true);
  s = add("ivp-furstenberg", "an irreducible divisor", ivp_furstenberg);
  poly_flags(s, true);
  s = add("ivp-nonatomic", "certificate that f has no factorization", ivp_nonatomic);
  poly_flags(s, true);
  s = add("cone-member", "membership in the truncated cone", cone_member);
  s->add_option("--target", f.target, "coefficients in t, lowest first")->required();
  s->add_option("--n-max", f.cone_n);
  s->add_option("--exclude", f.exclude, "generator names to drop, e.g. t^1");
  s = add("cone-idf", "family check for index i", cone_idf);
  s->add_option("--index", f.index)->required();
  s->add_option("--n-max", f.cone_n);
  add("verify-paper", "replay every golden fact", verify_paper);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string op = chosen->get_name();
  const bool as_json = f.format == "json";
  try {
    Output o = handlers.at(chosen)(f);
    if (as_json) {
      out << Json{{"op", op}, {"result", o.result}, {"error", nullptr}}.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.ok ? kOk : kDomainError;
  } catch (const Error& e) {
    const std::string code(error_code_name(e.code()));
    if (as_json) {
      out << Json{{"op", op}, {"result", nullptr}, {"error", {{"code", code}, {"message", e.what()}}}}.dump(2)
          << "\n";
    } else {
      err << "error [" << code << "]: " << e.what() << "\n";
    }
    return kDomainError;
  }
}

}  // namespace ivkit::cli
