#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivkit/lp.hpp"
#include "ivkit/poly.hpp"
#include "ivkit/rational.hpp"

namespace ivkit::cone {

// Polynomials in t share the representation of Q[x].
using TPoly = QPoly;

enum class GenKind { Power, A, B };

struct Generator {
  GenKind kind;
  unsigned n;
  TPoly value;

  /// "t^n", "a_n" or "b_n"
  std::string name() const;
};

TPoly power(unsigned n);
/// 1 - t^(n+1)
TPoly a_gen(unsigned n);
/// t - t^(n+1)
TPoly b_gen(unsigned n);

// Truncation of the cone generated by t^n, a_n, b_n for 1 <= n <= N.
class ConeSpec {
 public:
  static ConeSpec truncated(unsigned n_max);

  unsigned n_max() const { return n_max_; }
  /// Targets above this degree are rejected.
  unsigned max_degree() const { return n_max_ + 1; }
  const std::vector<Generator>& generators() const { return gens_; }
  /// Copy with the named generator dropped (OutOfRange if absent).
  ConeSpec without(const std::string& name) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  unsigned n_max_ = 0;
  std::vector<Generator> gens_;
};

struct ConeCertificate {
  /// generator index -> positive weight
  std::vector<std::pair<std::size_t, Rational>> weights;

  TPoly combination(const ConeSpec& spec) const;
};

/// Exact membership by simplex. Among certificates, returns one minimising
/// the weighted sum of generator degrees.
std::optional<ConeCertificate> cone_member(const TPoly& target, const ConeSpec& spec);

/// Membership decided by Fourier-Motzkin elimination instead.
bool cone_member_fm(const TPoly& target, const ConeSpec& spec);

/// Largest total weight sum(w) of a common lower bound d = sum w_k g_k with
/// p - d and q - d both in the cone. NotAMember if p or q is outside the cone.
Rational common_divisor_mass(const TPoly& p, const TPoly& q, const ConeSpec& spec);
/// The same for the pair (a_i, b_i).
Rational common_divisor_mass(unsigned i, const ConeSpec& spec);

/// Facet inequalities h.x >= 0 of the truncated cone in coefficient space,
/// obtained by projecting out the generator weights.
std::vector<lp::Constraint> cone_inequalities(const ConeSpec& spec);

/// Whether p and q have a nonzero common lower bound, by Fourier-Motzkin.
bool common_divisor_exists_fm(const TPoly& p, const TPoly& q, const ConeSpec& spec);
bool common_divisor_exists_fm(unsigned i, const ConeSpec& spec);

struct IdfReport {
  unsigned index = 0;
  bool sum_identities = false;  // a_i + t^(i+1) = 1 and b_i + t^(i+1) = t
  Rational mass;
  bool no_common_divisor = false;
  bool distinct = false;        // (a_i, b_i) differs from every other pair
  bool fm_agrees = false;

  bool passed() const { return sum_identities && no_common_divisor && distinct && fm_agrees; }
};

IdfReport idf_family_check(unsigned i, const ConeSpec& spec);

}  // namespace ivkit::cone
