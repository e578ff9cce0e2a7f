#include "ivkit/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "ivkit/error.hpp"

namespace ivkit::lp {

namespace {

// Dense tableau: rows hold B^{-1}[A | b]; `cost` holds the reduced costs
// r_j = c_B B^{-1} A_j - c_j and the current objective value in the last slot.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> cost;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (cost[c] != 0) {
      const Rational f = cost[c];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  void set_objective(const std::vector<Rational>& c) {
    cost.assign(cols + 1, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) cost[j] = -c[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) cost[j] += cb * rows[i][j];
    }
  }

  // Bland's rule over the allowed columns; false when unbounded.
  bool optimize(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed_cols) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

SimplexResult maximize(const Matrix& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(ErrorCode::OutOfRange, "rhs length mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::OutOfRange, "constraint row length mismatch");
  }

  Tableau t;
  t.cols = n + m;
  t.rows.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][t.cols] = flip ? Rational(-b[i]) : b[i];
    t.basis[i] = n + i;
  }

  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(t.cols, Rational(0));
  for (std::size_t j = n; j < t.cols; ++j) phase1[j] = -1;
  t.set_objective(phase1);
  t.optimize(t.cols);
  SimplexResult result;
  if (t.cost[t.cols] != 0) {
    result.status = Status::Infeasible;
    return result;
  }

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col < n) {
      t.pivot(i, col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  std::vector<Rational> phase2(t.cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  t.set_objective(phase2);
  if (!t.optimize(n)) {
    result.status = Status::Unbounded;
    return result;
  }
  result.status = Status::Optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) result.x[t.basis[i]] = t.rows[i][t.cols];
  }
  result.objective = t.cost[t.cols];
  return result;
}

std::optional<std::vector<Rational>> feasible_point(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  auto r = maximize(a, b, std::vector<Rational>(n, Rational(0)));
  if (r.status != Status::Optimal) return std::nullopt;
  return r.x;
}

std::vector<Constraint> standard_form_system(const Matrix& a, const std::vector<Rational>& b) {
  std::vector<Constraint> sys;
  const std::size_t n = a.empty() ? 0 : a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) sys.push_back({a[i], Relation::Equal, b[i]});
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    sys.push_back({std::move(e), Relation::GreaterEqual, Rational(0)});
  }
  return sys;
}

namespace {

using History = std::vector<std::uint64_t>;

struct Row {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = false;
  History history;
};

std::size_t popcount(const History& h) {
  std::size_t n = 0;
  for (auto w : h) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

History merge(const History& a, const History& b) {
  History r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] | b[i];
  return r;
}

// Scale to primitive integer coefficients (positive factor only, so the relation is kept).
void normalize(Row& row) {
  Integer den = row.rhs.get_den();
  for (const auto& c : row.coeffs) den = lcm(den, c.get_den());
  Integer g = 0;
  for (const auto& c : row.coeffs) {
    Rational s = c * Rational(den);
    g = gcd(g, s.get_num());
  }
  if (g == 0) return;
  const Rational f = make_rational(den, g);
  for (auto& c : row.coeffs) c *= f;
  row.rhs *= f;
}

std::string coeff_key(const Row& row) {
  std::string k;
  for (const auto& c : row.coeffs) {
    k += c.get_str();
    k += ',';
  }
  return k;
}

// Trivial-row check; returns false when the row is the contradiction 0 >= positive.
bool trivially_ok(const Row& row) {
  return row.strict ? 0 > row.rhs : 0 >= row.rhs;
}

bool is_zero_row(const Row& row) {
  return std::all_of(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return c == 0; });
}

}  // namespace

namespace {

// Eliminates the flagged variables. Returns nullopt on a contradiction; otherwise the
// remaining equalities and inequalities over the kept variables.
std::optional<std::vector<Row>> eliminate(const std::vector<Constraint>& system, std::size_t num_vars,
                                          std::vector<bool> target, std::vector<Row>* equalities,
                                          EliminationStats* stats) {
  std::vector<Row> eqs;
  std::vector<Row> rows;
  std::size_t n_ineq = 0;
  for (const auto& c : system) n_ineq += c.rel != Relation::Equal;
  const std::size_t words = (n_ineq + 63) / 64;
  std::size_t next_id = 0;
  for (const auto& c : system) {
    if (c.coeffs.size() != num_vars) throw Error(ErrorCode::OutOfRange, "constraint width mismatch");
    Row r{c.coeffs, c.rhs, c.rel == Relation::Greater, History(words, 0)};
    if (c.rel == Relation::Equal) {
      eqs.push_back(std::move(r));
    } else {
      r.history[next_id / 64] |= std::uint64_t{1} << (next_id % 64);
      ++next_id;
      rows.push_back(std::move(r));
    }
  }

  // Gaussian substitution, pivoting only on variables being eliminated.
  std::vector<Row> kept_eqs;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Row& eq = eqs[e];
    std::size_t var = num_vars;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (target[j] && eq.coeffs[j] != 0) {
        var = j;
        break;
      }
    }
    if (var == num_vars) {
      if (is_zero_row(eq)) {
        if (eq.rhs != 0) return std::nullopt;
      } else {
        kept_eqs.push_back(eq);
      }
      continue;
    }
    target[var] = false;
    const Rational pivot = eq.coeffs[var];
    auto substitute = [&](Row& r) {
      if (r.coeffs[var] == 0) return;
      const Rational f = r.coeffs[var] / pivot;
      for (std::size_t j = 0; j < num_vars; ++j) r.coeffs[j] -= f * eq.coeffs[j];
      r.rhs -= f * eq.rhs;
    };
    for (std::size_t o = e + 1; o < eqs.size(); ++o) substitute(eqs[o]);
    for (auto& r : kept_eqs) substitute(r);
    for (auto& r : rows) substitute(r);
  }
  if (equalities) *equalities = std::move(kept_eqs);

  std::size_t eliminated = 0;
  std::size_t max_rows = rows.size();
  std::size_t combined = 0;

  auto tidy = [&](std::vector<Row>& in) -> bool {
    std::map<std::string, Row> best;
    for (auto& r : in) {
      if (is_zero_row(r)) {
        if (!trivially_ok(r)) return false;
        continue;
      }
      normalize(r);
      auto key = coeff_key(r);
      auto it = best.find(key);
      if (it == best.end()) {
        best.emplace(std::move(key), std::move(r));
      } else if (r.rhs > it->second.rhs ||
                 (r.rhs == it->second.rhs && r.strict && !it->second.strict) ||
                 (r.rhs == it->second.rhs && r.strict == it->second.strict &&
                  popcount(r.history) < popcount(it->second.history))) {
        it->second = std::move(r);
      }
    }
    in.clear();
    for (auto& [k, r] : best) in.push_back(std::move(r));
    return true;
  };

  if (!tidy(rows)) return std::nullopt;
  for (;;) {
    // Pick the variable whose elimination creates the fewest rows.
    std::size_t var = num_vars;
    long best_growth = 0;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (!target[j]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.coeffs[j] > 0) ++pos;
        else if (r.coeffs[j] < 0) ++neg;
      }
      const long growth = pos * neg - pos - neg;
      if (var == num_vars || growth < best_growth) {
        var = j;
        best_growth = growth;
      }
    }
    if (var == num_vars) break;
    target[var] = false;
    ++eliminated;

    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.coeffs[var] > 0) pos.push_back(std::move(r));
      else if (r.coeffs[var] < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        History h = merge(p.history, q.history);
        if (popcount(h) > eliminated + 1) continue;  // Chernikov: redundant
        const Rational fp = -q.coeffs[var];
        const Rational fq = p.coeffs[var];
        Row r{std::vector<Rational>(num_vars), fp * p.rhs + fq * q.rhs, p.strict || q.strict,
              std::move(h)};
        for (std::size_t j = 0; j < num_vars; ++j) r.coeffs[j] = fp * p.coeffs[j] + fq * q.coeffs[j];
        r.coeffs[var] = 0;
        next.push_back(std::move(r));
        ++combined;
      }
    }
    rows = std::move(next);
    if (!tidy(rows)) return std::nullopt;
    max_rows = std::max(max_rows, rows.size());
  }
  if (stats) *stats = {max_rows, combined};
  return rows;
}

Constraint to_constraint(const Row& r) {
  return {r.coeffs, r.strict ? Relation::Greater : Relation::GreaterEqual, r.rhs};
}

}  // namespace

bool fourier_motzkin_feasible(const std::vector<Constraint>& system, std::size_t num_vars,
                              EliminationStats* stats) {
  return eliminate(system, num_vars, std::vector<bool>(num_vars, true), nullptr, stats).has_value();
}

std::optional<std::vector<Constraint>> fourier_motzkin_project(const std::vector<Constraint>& system,
                                                               std::size_t num_vars,
                                                               const std::vector<bool>& eliminate_var,
                                                               EliminationStats* stats) {
  if (eliminate_var.size() != num_vars) throw Error(ErrorCode::OutOfRange, "variable mask width mismatch");
  std::vector<Row> eqs;
  auto rows = eliminate(system, num_vars, eliminate_var, &eqs, stats);
  if (!rows) return std::nullopt;
  std::vector<Constraint> out;
  for (const auto& e : eqs) out.push_back({e.coeffs, Relation::Equal, e.rhs});
  for (const auto& r : *rows) out.push_back(to_constraint(r));
  return out;
}

}  // namespace ivkit::lp
