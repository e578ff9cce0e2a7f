#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "ivkit/cone.hpp"
#include "ivkit/intpoly.hpp"
#include "ivkit/monoid_ring.hpp"
#include "ivkit/puiseux.hpp"
#include "ivkit/rational.hpp"

namespace ivkit::json {

using Json = nlohmann::json;

Json rational(const Rational& q);
Rational rational_from(const Json& j);

Json rationals(const std::vector<Rational>& qs);
std::vector<Rational> rationals_from(const Json& j);

/// {"coeffs": ["a/b", ...], "site": "Z" | [s1, ...]}
Json poly(const intpoly::IVPoly& f);
intpoly::IVPoly poly_from(const Json& j);

/// Each factorization as an array of coefficient arrays.
Json factorizations(const std::vector<intpoly::Factorization>& fs);

/// {"ring": "Z" | "Q" | "F_p", "terms": [["coeff", "exp"], ...]}
Json element(const ring::Element& e);
ring::Element element_from(const Json& j);

Json certificate(const puiseux::MembershipCertificate& c, const puiseux::MonoidSpec& spec);
Json grams(const puiseux::GramsDecomposition& d);

Json tpoly(const cone::TPoly& p);
cone::TPoly tpoly_from(const Json& j);
Json cone_certificate(const cone::ConeCertificate& c, const cone::ConeSpec& spec);
Json idf_report(const cone::IdfReport& r);

}  // namespace ivkit::json
