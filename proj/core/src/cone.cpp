#include "ivkit/cone.hpp"

#include "ivkit/error.hpp"
#include "ivkit/lp.hpp"

namespace ivkit::cone {

std::string Generator::name() const {
  switch (kind) {
    case GenKind::Power:
      return "t^" + std::to_string(n);
    case GenKind::A:
      return "a_" + std::to_string(n);
    case GenKind::B:
      return "b_" + std::to_string(n);
  }
  return {};
}

TPoly power(unsigned n) { return TPoly::monomial(Rational(1), n); }
TPoly a_gen(unsigned n) { return TPoly::constant(Rational(1)) - power(n + 1); }
TPoly b_gen(unsigned n) { return power(1) - power(n + 1); }

ConeSpec ConeSpec::truncated(unsigned n_max) {
  if (n_max == 0) throw Error(ErrorCode::InvalidSpec, "cone truncation must be at least 1");
  ConeSpec s;
  s.n_max_ = n_max;
  for (unsigned n = 1; n <= n_max; ++n) {
    s.gens_.push_back({GenKind::Power, n, power(n)});
    s.gens_.push_back({GenKind::A, n, a_gen(n)});
    s.gens_.push_back({GenKind::B, n, b_gen(n)});
  }
  return s;
}

std::optional<std::size_t> ConeSpec::index_of(const std::string& name) const {
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (gens_[k].name() == name) return k;
  }
  return std::nullopt;
}

ConeSpec ConeSpec::without(const std::string& name) const {
  auto k = index_of(name);
  if (!k) throw Error(ErrorCode::OutOfRange, "no generator named " + name);
  ConeSpec s = *this;
  s.gens_.erase(s.gens_.begin() + static_cast<std::ptrdiff_t>(*k));
  return s;
}

TPoly ConeCertificate::combination(const ConeSpec& spec) const {
  TPoly sum;
  for (const auto& [k, w] : weights) sum += spec.generators().at(k).value * w;
  return sum;
}

namespace {

void check_degree(const TPoly& p, const ConeSpec& spec) {
  if (p.degree() > static_cast<int>(spec.max_degree())) {
    throw Error(ErrorCode::OutOfRange, "target degree exceeds the truncation bound " +
                                           std::to_string(spec.max_degree()));
  }
}

// Row d of the matrix holds coefficient t^d of every generator.
lp::Matrix generator_matrix(const ConeSpec& spec) {
  const std::size_t rows = spec.max_degree() + 1;
  const auto& g = spec.generators();
  lp::Matrix a(rows, std::vector<Rational>(g.size(), Rational(0)));
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (std::size_t d = 0; d < rows; ++d) a[d][k] = g[k].value.coeff(d);
  }
  return a;
}

std::vector<Rational> coeff_vector(const TPoly& p, const ConeSpec& spec) {
  std::vector<Rational> v(spec.max_degree() + 1);
  for (std::size_t d = 0; d < v.size(); ++d) v[d] = p.coeff(d);
  return v;
}

// [A A 0; A 0 A] over (w, u, v)
lp::Matrix mass_matrix(const lp::Matrix& a) {
  const std::size_t rows = a.size();
  const std::size_t g = rows ? a.front().size() : 0;
  lp::Matrix m(2 * rows, std::vector<Rational>(3 * g, Rational(0)));
  for (std::size_t d = 0; d < rows; ++d) {
    for (std::size_t k = 0; k < g; ++k) {
      m[d][k] = a[d][k];
      m[d][g + k] = a[d][k];
      m[rows + d][k] = a[d][k];
      m[rows + d][2 * g + k] = a[d][k];
    }
  }
  return m;
}

void check_index(unsigned i, const ConeSpec& spec) {
  if (i == 0 || i > spec.n_max()) {
    throw Error(ErrorCode::OutOfRange, "family index must lie in 1.." + std::to_string(spec.n_max()));
  }
}

std::vector<Rational> mass_rhs(const TPoly& p, const TPoly& q, const ConeSpec& spec) {
  auto r = coeff_vector(p, spec);
  auto rq = coeff_vector(q, spec);
  r.insert(r.end(), rq.begin(), rq.end());
  return r;
}

}  // namespace

std::optional<ConeCertificate> cone_member(const TPoly& target, const ConeSpec& spec) {
  check_degree(target, spec);
  const auto a = generator_matrix(spec);
  std::vector<Rational> cost;
  for (const auto& g : spec.generators()) cost.emplace_back(-g.value.degree());
  auto r = lp::maximize(a, coeff_vector(target, spec), cost);
  if (r.status != lp::Status::Optimal) return std::nullopt;
  ConeCertificate cert;
  for (std::size_t k = 0; k < r.x.size(); ++k) {
    if (r.x[k] != 0) cert.weights.emplace_back(k, r.x[k]);
  }
  return cert;
}

bool cone_member_fm(const TPoly& target, const ConeSpec& spec) {
  check_degree(target, spec);
  const auto a = generator_matrix(spec);
  return lp::fourier_motzkin_feasible(lp::standard_form_system(a, coeff_vector(target, spec)),
                                      spec.generators().size());
}

Rational common_divisor_mass(const TPoly& p, const TPoly& q, const ConeSpec& spec) {
  check_degree(p, spec);
  check_degree(q, spec);
  const auto m = mass_matrix(generator_matrix(spec));
  const std::size_t g = spec.generators().size();
  std::vector<Rational> obj(3 * g, Rational(0));
  for (std::size_t k = 0; k < g; ++k) obj[k] = 1;
  auto r = lp::maximize(m, mass_rhs(p, q, spec), obj);
  if (r.status == lp::Status::Infeasible) {
    throw Error(ErrorCode::NotAMember, "both arguments must lie in the cone");
  }
  // Bounded: every generator has positive weight under the functional used below.
  return r.objective;
}

Rational common_divisor_mass(unsigned i, const ConeSpec& spec) {
  check_index(i, spec);
  return common_divisor_mass(a_gen(i), b_gen(i), spec);
}

std::vector<lp::Constraint> cone_inequalities(const ConeSpec& spec) {
  const auto a = generator_matrix(spec);
  const std::size_t dim = a.size();
  const std::size_t g = spec.generators().size();
  // x - A w = 0, w >= 0 over (x, w); project out w.
  std::vector<lp::Constraint> sys;
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<Rational> row(dim + g, Rational(0));
    row[d] = 1;
    for (std::size_t k = 0; k < g; ++k) row[dim + k] = -a[d][k];
    sys.push_back({std::move(row), lp::Relation::Equal, Rational(0)});
  }
  for (std::size_t k = 0; k < g; ++k) {
    std::vector<Rational> row(dim + g, Rational(0));
    row[dim + k] = 1;
    sys.push_back({std::move(row), lp::Relation::GreaterEqual, Rational(0)});
  }
  std::vector<bool> drop(dim + g, false);
  for (std::size_t k = 0; k < g; ++k) drop[dim + k] = true;
  auto projected = lp::fourier_motzkin_project(sys, dim + g, drop);
  std::vector<lp::Constraint> out;
  for (auto& c : *projected) {
    c.coeffs.resize(dim);
    out.push_back(std::move(c));
  }
  return out;
}

bool common_divisor_exists_fm(const TPoly& p, const TPoly& q, const ConeSpec& spec) {
  check_degree(p, spec);
  check_degree(q, spec);
  const auto cone = cone_inequalities(spec);
  const auto ai = coeff_vector(p, spec);
  const auto bi = coeff_vector(q, spec);
  const std::size_t dim = ai.size();
  auto dot = [](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * v[j];
    return s;
  };
  // d in C, p - d in C, q - d in C, and d != 0. The functional below is
  // positive on every generator, so on C it vanishes only at 0.
  std::vector<lp::Constraint> sys;
  for (const auto& h : cone) {
    sys.push_back(h);
    std::vector<Rational> neg(dim);
    for (std::size_t j = 0; j < dim; ++j) neg[j] = -h.coeffs[j];
    sys.push_back({neg, h.rel, h.rhs - dot(h.coeffs, ai)});
    sys.push_back({neg, h.rel, h.rhs - dot(h.coeffs, bi)});
  }
  std::vector<Rational> ell(dim, Rational(1));
  ell[0] = 2;
  ell[1] = 2;
  sys.push_back({std::move(ell), lp::Relation::Greater, Rational(0)});
  return lp::fourier_motzkin_feasible(sys, dim);
}

bool common_divisor_exists_fm(unsigned i, const ConeSpec& spec) {
  check_index(i, spec);
  return common_divisor_exists_fm(a_gen(i), b_gen(i), spec);
}

IdfReport idf_family_check(unsigned i, const ConeSpec& spec) {
  check_index(i, spec);
  IdfReport rep;
  rep.index = i;
  const TPoly one = TPoly::constant(Rational(1));
  rep.sum_identities = a_gen(i) + power(i + 1) == one && b_gen(i) + power(i + 1) == power(1);
  rep.mass = common_divisor_mass(i, spec);
  rep.no_common_divisor = rep.mass == 0;
  rep.distinct = true;
  for (unsigned j = 1; j <= spec.n_max(); ++j) {
    if (j == i) continue;
    if (a_gen(j) == a_gen(i) && b_gen(j) == b_gen(i)) rep.distinct = false;
  }
  rep.fm_agrees = common_divisor_exists_fm(i, spec) == !rep.no_common_divisor;
  return rep;
}

}  // namespace ivkit::cone
