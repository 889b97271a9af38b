#pragma once

// Exact solver for piecewise-linear programs.
//
// A program consists of declared variables (optionally constrained to be
// nonnegative), an objective to maximize, and constraints comparing two
// piecewise-linear expressions with <=, >= or ==. An expression is an
// affine form in the variables plus rational multiples of max/min nodes
// whose arguments are again expressions of the same shape:
//
//     e  =  a.x + a0  +  sum_i k_i * node_i,   node = max(e,...,e) | min(...)
//
// Nodes live in a pool keyed by structural identity, so a subexpression
// that is written twice (for instance the same min(max(...), max(...))
// appearing in two different constraints) is stored - and later branched -
// only once.
//
// Solution method. For every pooled node fix a choice of "active"
// argument. Under a fixed choice tuple each expression linearizes to an
// affine form (replace every node by the linearization of its chosen
// argument, recursively), and the region where each chosen argument really
// attains the max/min is the polyhedron cut out by the ordering
// constraints
//
//     chosen argument >= every sibling     (max nodes; <= for min).
//
// At any point of the space one can pick, bottom-up, an attaining argument
// for every node, so the union of the regions over all choice tuples is
// the whole space; and on each region every expression equals its
// linearization, by induction over the node nesting. Hence the optimum of
// the program is the maximum of the branch optima, where each branch is an
// ordinary linear program: the linearized objective subject to the
// linearized constraints, the ordering constraints of the region, and the
// declared sign constraints. The number of branches is the product of the
// node arities over distinct reachable nodes, which never exceeds the
// classical bound taken over syntactic occurrences.
//
// Branch LPs are solved with a two-phase tableau simplex over exact
// rationals using Bland's anti-cycling rule (entering variable: lowest
// index with negative reduced cost; leaving variable: lowest basic index
// among the minimum-ratio rows), so termination is guaranteed and there is
// no floating-point error anywhere in the pipeline. Before returning, the
// solver re-evaluates its own argmax against the original piecewise
// program - exact feasibility and exact objective agreement - as an
// internal consistency guard.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gl3verify/rational.hpp"

namespace gl3verify {

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

// Affine form a.x + a0 with sparse rational coefficients.
struct LinExpr {
  std::map<std::string, Rational> coeffs;
  Rational constant{0};

  // *this += k * other. Zero coefficients are erased so that equal forms
  // have equal representations (required by the structural node keys).
  void accumulate(const LinExpr& other, const Rational& k) {
    for (const auto& [name, c] : other.coeffs) {
      Rational updated = coeffs[name] + k * c;
      if (updated == 0) {
        coeffs.erase(name);
      } else {
        coeffs[name] = updated;
      }
    }
    constant += k * other.constant;
  }
};

// Piecewise-linear expression: affine part plus weighted node references.
struct PLExpr {
  LinExpr affine;
  std::map<int, Rational> node_terms;  // pool id -> coefficient

  bool is_constant() const {
    return affine.coeffs.empty() && node_terms.empty();
  }

  void accumulate(const PLExpr& other, const Rational& k) {
    affine.accumulate(other.affine, k);
    for (const auto& [id, c] : other.node_terms) {
      Rational updated = node_terms[id] + k * c;
      if (updated == 0) {
        node_terms.erase(id);
      } else {
        node_terms[id] = updated;
      }
    }
  }

  PLExpr scaled(const Rational& k) const {
    PLExpr out;
    if (k != 0) out.accumulate(*this, k);
    return out;
  }
};

enum class NodeKind { kMax, kMin };

struct PLNode {
  NodeKind kind;
  std::vector<PLExpr> args;
};

// Pool of max/min nodes deduplicated by structural identity. Arguments are
// interned bottom-up, so node ids inside argument expressions are already
// canonical when the parent is interned and serialization is well defined.
class NodePool {
 public:
  int intern(NodeKind kind, std::vector<PLExpr> args) {
    std::string key = kind == NodeKind::kMax ? "max" : "min";
    for (const PLExpr& a : args) key += "(" + expr_key(a) + ")";
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(PLNode{kind, std::move(args)});
    index_.emplace(std::move(key), id);
    return id;
  }

  const PLNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return nodes_.size(); }

  static std::string expr_key(const PLExpr& e) {
    std::string key;
    for (const auto& [name, c] : e.affine.coeffs)
      key += name + ":" + rational_to_string(c) + ";";
    key += "|" + rational_to_string(e.affine.constant) + "|";
    for (const auto& [id, c] : e.node_terms)
      key += std::to_string(id) + ":" + rational_to_string(c) + ";";
    return key;
  }

 private:
  std::vector<PLNode> nodes_;
  std::map<std::string, int> index_;
};

enum class Comparison { kLe, kGe, kEq };

struct PLConstraint {
  PLExpr lhs;
  Comparison op;
  PLExpr rhs;
};

struct PLProgram {
  std::vector<std::pair<std::string, bool>> variables;  // name, nonnegative
  NodePool pool;
  PLExpr objective;
  std::vector<PLConstraint> constraints;
};

// ---------------------------------------------------------------------------
// Exact evaluation of the original piecewise program at a point
// ---------------------------------------------------------------------------

namespace plp_detail {

inline Rational evaluate_expr(const PLProgram& program, const PLExpr& e,
                              const std::map<std::string, Rational>& point) {
  Rational value = e.affine.constant;
  for (const auto& [name, c] : e.affine.coeffs) value += c * point.at(name);
  for (const auto& [id, k] : e.node_terms) {
    const PLNode& node = program.pool.node(id);
    Rational extremum = evaluate_expr(program, node.args.front(), point);
    for (std::size_t i = 1; i < node.args.size(); ++i) {
      Rational v = evaluate_expr(program, node.args[i], point);
      if (node.kind == NodeKind::kMax ? v > extremum : v < extremum)
        extremum = v;
    }
    value += k * extremum;
  }
  return value;
}

}  // namespace plp_detail

struct PointCheck {
  bool feasible = false;
  Rational objective{0};
};

// Evaluates the program at the given point (missing variables are zero,
// unknown names are rejected): exact feasibility against the declared sign
// constraints and every constraint, and the exact objective value.
inline PointCheck evaluate_point(const PLProgram& program,
                                 const std::map<std::string, Rational>& point) {
  std::map<std::string, Rational> full;
  for (const auto& [name, nonneg] : program.variables) full[name] = 0;
  for (const auto& [name, value] : point) {
    auto it = full.find(name);
    if (it == full.end())
      throw std::invalid_argument("evaluate_point: unknown variable " + name);
    it->second = value;
  }
  PointCheck check;
  check.feasible = true;
  for (const auto& [name, nonneg] : program.variables)
    if (nonneg && full[name] < 0) check.feasible = false;
  for (const PLConstraint& c : program.constraints) {
    Rational l = plp_detail::evaluate_expr(program, c.lhs, full);
    Rational r = plp_detail::evaluate_expr(program, c.rhs, full);
    bool ok = c.op == Comparison::kLe   ? l <= r
              : c.op == Comparison::kGe ? l >= r
                                        : l == r;
    if (!ok) check.feasible = false;
  }
  check.objective = plp_detail::evaluate_expr(program, program.objective, full);
  return check;
}

// ---------------------------------------------------------------------------
// Exact two-phase simplex: maximize c.x subject to a x <= b, x >= 0
// ---------------------------------------------------------------------------

namespace plp_detail {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value{0};
  std::vector<Rational> x;
};

inline LpResult simplex_max(const std::vector<std::vector<Rational>>& a,
                            const std::vector<Rational>& b,
                            const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();

  // Rows with negative right-hand side are negated (turning their slack
  // coefficient into -1) and receive an artificial variable, so the
  // initial basis (slacks where possible, artificials elsewhere) is
  // feasible for phase 1.
  std::vector<bool> flip(m, false);
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      flip[i] = true;
      ++n_art;
    }
  const std::size_t ncols = n + m + n_art;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(ncols + 1));
  std::vector<std::size_t> basis(m);
  std::vector<bool> artificial(ncols, false);
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    Rational sgn = flip[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = sgn * a[i][j];
    rows[i][n + i] = sgn;
    rows[i][ncols] = sgn * b[i];
    if (flip[i]) {
      rows[i][next_art] = 1;
      artificial[next_art] = true;
      basis[i] = next_art++;
    } else {
      basis[i] = n + i;
    }
  }

  auto pivot = [&](std::size_t pr, std::size_t pc, std::vector<Rational>& z) {
    const Rational pv = rows[pr][pc];
    for (Rational& v : rows[pr]) v /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr || rows[i][pc] == 0) continue;
      const Rational f = rows[i][pc];
      for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[pr][j];
    }
    if (z[pc] != 0) {
      const Rational f = z[pc];
      for (std::size_t j = 0; j <= ncols; ++j) z[j] -= f * rows[pr][j];
    }
    basis[pr] = pc;
  };

  // Bland's rule on the reduced-cost row z (z[j] >= 0 for all eligible j
  // means optimal; the row is carried through the pivots). Returns false
  // when the problem is unbounded in the improving direction.
  auto optimize = [&](std::vector<Rational>& z, bool skip_artificial) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (skip_artificial && artificial[j]) continue;
        if (z[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols) return true;
      std::size_t leave = m;
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][ncols] / rows[i][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter, z);
    }
  };

  // Reduced-cost row for an objective with coefficient obj[j] on column j:
  // z[j] = sum_i obj[basis_i] rows[i][j] - obj[j]; z[rhs] = objective value.
  auto make_z = [&](const std::vector<Rational>& obj) {
    std::vector<Rational> z(ncols + 1);
    for (std::size_t j = 0; j < obj.size() && j <= ncols; ++j) z[j] = -obj[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < obj.size() && obj[basis[i]] != 0) {
        const Rational f = obj[basis[i]];
        for (std::size_t j = 0; j <= ncols; ++j) z[j] += f * rows[i][j];
      }
    }
    return z;
  };

  if (n_art > 0) {
    // Phase 1: maximize -(sum of artificials), which is bounded above by 0.
    std::vector<Rational> obj1(ncols, Rational(0));
    for (std::size_t j = 0; j < ncols; ++j)
      if (artificial[j]) obj1[j] = -1;
    std::vector<Rational> z1 = make_z(obj1);
    if (!optimize(z1, /*skip_artificial=*/false))
      throw std::logic_error("simplex_max: unbounded phase-1 objective");
    for (std::size_t i = 0; i < m; ++i)
      if (artificial[basis[i]] && rows[i][ncols] != 0)
        return LpResult{LpStatus::kInfeasible, 0, {}};
    // Drive leftover zero-level artificials out of the basis where a real
    // column allows it; a row with no real entry is the redundant 0 = 0.
    for (std::size_t i = 0; i < m; ++i) {
      if (!artificial[basis[i]]) continue;
      for (std::size_t j = 0; j < n + m; ++j) {
        if (rows[i][j] != 0) {
          std::vector<Rational> zdummy(ncols + 1, Rational(0));
          pivot(i, j, zdummy);
          break;
        }
      }
    }
  }

  std::vector<Rational> obj2(ncols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) obj2[j] = c[j];
  std::vector<Rational> z2 = make_z(obj2);
  if (!optimize(z2, /*skip_artificial=*/true))
    return LpResult{LpStatus::kUnbounded, 0, {}};

  LpResult result;
  result.status = LpStatus::kOptimal;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) result.x[basis[i]] = rows[i][ncols];
  for (std::size_t j = 0; j < n; ++j) result.value += c[j] * result.x[j];
  return result;
}

// Max/min nodes reachable from the given expressions through arguments.
inline std::vector<int> reachable_nodes(const NodePool& pool,
                                        const std::vector<const PLExpr*>& exprs) {
  std::vector<bool> seen(pool.size(), false);
  std::vector<int> stack;
  for (const PLExpr* e : exprs)
    for (const auto& [id, k] : e->node_terms) stack.push_back(id);
  std::vector<int> out;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(id)]) continue;
    seen[static_cast<std::size_t>(id)] = true;
    out.push_back(id);
    for (const PLExpr& arg : pool.node(id).args)
      for (const auto& [sub, k] : arg.node_terms) stack.push_back(sub);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Affine form of an expression once every node is resolved to its chosen
// argument; memoized per branch since nodes are shared.
inline const LinExpr& linearize(const PLProgram& program, const PLExpr& e,
                                const std::vector<int>& choice,
                                std::vector<std::optional<LinExpr>>& memo,
                                LinExpr& out) {
  out = e.affine;
  for (const auto& [id, k] : e.node_terms) {
    auto& slot = memo[static_cast<std::size_t>(id)];
    if (!slot.has_value()) {
      const PLNode& node = program.pool.node(id);
      LinExpr resolved;
      linearize(program, node.args[static_cast<std::size_t>(
                             choice[static_cast<std::size_t>(id)])],
                choice, memo, resolved);
      slot = std::move(resolved);
    }
    out.accumulate(*slot, k);
  }
  return out;
}

inline long long saturating_mul(long long a, long long b) {
  constexpr long long kCap = 1000000000000000000LL;
  if (a > kCap / b) return kCap;
  return a * b;
}

// Constraint differences lhs - rhs; a node with equal weight on both sides
// cancels here and is then invisible to both the solver and the counts.
inline std::vector<PLExpr> constraint_diffs(const PLProgram& program) {
  std::vector<PLExpr> diffs;
  diffs.reserve(program.constraints.size());
  for (const PLConstraint& c : program.constraints) {
    PLExpr d = c.lhs;
    d.accumulate(c.rhs, -1);
    diffs.push_back(std::move(d));
  }
  return diffs;
}

inline std::vector<int> program_nodes(const PLProgram& program,
                                      const std::vector<PLExpr>& diffs) {
  std::vector<const PLExpr*> roots{&program.objective};
  for (const PLExpr& d : diffs) roots.push_back(&d);
  return reachable_nodes(program.pool, roots);
}

}  // namespace plp_detail

// ---------------------------------------------------------------------------
// Branch counting
// ---------------------------------------------------------------------------

// Number of DNF branches the solver enumerates: the product of the node
// arities over distinct reachable nodes (structural deduplication).
inline long long dnf_branch_count(const PLProgram& program) {
  const std::vector<PLExpr> diffs = plp_detail::constraint_diffs(program);
  long long count = 1;
  for (int id : plp_detail::program_nodes(program, diffs))
    count = plp_detail::saturating_mul(
        count, static_cast<long long>(program.pool.node(id).args.size()));
  return count;
}

namespace plp_detail {

inline long long branch_bound_expr(const PLProgram& program, const PLExpr& e) {
  long long prod = 1;
  for (const auto& [id, k] : e.node_terms) {
    const PLNode& node = program.pool.node(id);
    long long f = static_cast<long long>(node.args.size());
    for (const PLExpr& arg : node.args)
      f = saturating_mul(f, branch_bound_expr(program, arg));
    prod = saturating_mul(prod, f);
  }
  return prod;
}

}  // namespace plp_detail

// Classical branch bound without deduplication: the product of the node
// arities over syntactic occurrences. Always >= dnf_branch_count.
inline long long dnf_branch_bound(const PLProgram& program) {
  long long bound = plp_detail::branch_bound_expr(program, program.objective);
  for (const PLConstraint& c : program.constraints) {
    bound = plp_detail::saturating_mul(
        bound, plp_detail::branch_bound_expr(program, c.lhs));
    bound = plp_detail::saturating_mul(
        bound, plp_detail::branch_bound_expr(program, c.rhs));
  }
  return bound;
}

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

struct PLSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  Rational value{0};
  std::map<std::string, Rational> argmax;
  long long branches_enumerated = 0;
};

inline PLSolution solve(const PLProgram& program) {
  using plp_detail::LpStatus;

  // Column layout: one column per nonnegative variable, a split pair
  // x = x+ - x- per free variable.
  std::vector<std::pair<std::string, int>> columns;
  for (const auto& [name, nonneg] : program.variables) {
    columns.emplace_back(name, +1);
    if (!nonneg) columns.emplace_back(name, -1);
  }
  auto row_of = [&](const LinExpr& e) {
    std::vector<Rational> row(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      auto it = e.coeffs.find(columns[j].first);
      if (it != e.coeffs.end()) row[j] = it->second * columns[j].second;
    }
    return row;
  };

  const std::vector<PLExpr> diffs = plp_detail::constraint_diffs(program);
  const std::vector<int> nodes = plp_detail::program_nodes(program, diffs);

  PLSolution solution;
  std::vector<int> choice(program.pool.size(), 0);
  bool any_feasible = false;
  for (;;) {
    ++solution.branches_enumerated;
    std::vector<std::optional<LinExpr>> memo(program.pool.size());
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    auto add_le = [&](const LinExpr& e) {  // constraint e <= 0
      a.push_back(row_of(e));
      b.push_back(-e.constant);
    };
    LinExpr scratch;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      plp_detail::linearize(program, diffs[i], choice, memo, scratch);
      const Comparison op = program.constraints[i].op;
      if (op == Comparison::kLe || op == Comparison::kEq) add_le(scratch);
      if (op == Comparison::kGe || op == Comparison::kEq) {
        LinExpr neg;
        neg.accumulate(scratch, -1);
        add_le(neg);
      }
    }
    for (int id : nodes) {
      const PLNode& node = program.pool.node(id);
      const std::size_t j = static_cast<std::size_t>(choice[static_cast<std::size_t>(id)]);
      LinExpr chosen;
      plp_detail::linearize(program, node.args[j], choice, memo, chosen);
      for (std::size_t i = 0; i < node.args.size(); ++i) {
        if (i == j) continue;
        LinExpr other;
        plp_detail::linearize(program, node.args[i], choice, memo, other);
        // Region of the choice: chosen >= other for max, <= for min.
        LinExpr ordering;
        if (node.kind == NodeKind::kMax) {
          ordering = other;
          ordering.accumulate(chosen, -1);
        } else {
          ordering = chosen;
          ordering.accumulate(other, -1);
        }
        add_le(ordering);
      }
    }
    LinExpr objective;
    plp_detail::linearize(program, program.objective, choice, memo, objective);

    plp_detail::LpResult lp = plp_detail::simplex_max(a, b, row_of(objective));
    if (lp.status == LpStatus::kUnbounded) {
      // The branch region is contained in the feasible set, so the whole
      // program is unbounded.
      solution.status = SolveStatus::kUnbounded;
      return solution;
    }
    if (lp.status == LpStatus::kOptimal) {
      Rational value = lp.value + objective.constant;
      if (!any_feasible || value > solution.value) {
        any_feasible = true;
        solution.value = value;
        solution.argmax.clear();
        for (const auto& [name, nonneg] : program.variables)
          solution.argmax[name] = 0;
        for (std::size_t j = 0; j < columns.size(); ++j)
          solution.argmax[columns[j].first] +=
              Rational(columns[j].second) * lp.x[j];
      }
    }

    std::size_t k = 0;
    for (; k < nodes.size(); ++k) {
      const std::size_t id = static_cast<std::size_t>(nodes[k]);
      if (++choice[id] <
          static_cast<int>(program.pool.node(nodes[k]).args.size()))
        break;
      choice[id] = 0;
    }
    if (k == nodes.size()) break;
  }

  if (!any_feasible) {
    solution.status = SolveStatus::kInfeasible;
    return solution;
  }
  solution.status = SolveStatus::kOptimal;

  // Internal guard: the argmax must be exactly feasible for the original
  // piecewise program and reproduce the reported optimum exactly.
  PointCheck check = evaluate_point(program, solution.argmax);
  if (!check.feasible || check.objective != solution.value)
    throw std::logic_error("plp solve: witness re-check failed");
  return solution;
}

}  // namespace gl3verify
