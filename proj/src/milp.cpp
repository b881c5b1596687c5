#include "tas/milp.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <sstream>

namespace tas {

Rational make_rational(int64_t num, int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

const std::string& MilpModel::var_name(int index) const {
  const int ni = static_cast<int>(int_vars.size());
  if (index < ni) return int_vars[index].name;
  return cont_vars[index - ni].name;
}

std::string MilpModel::dump() const {
  std::ostringstream out;
  for (const LinearLe& row : constraints) {
    if (row.terms.empty()) out << "0";
    for (size_t t = 0; t < row.terms.size(); ++t) {
      if (t > 0) out << " ";
      out << row.terms[t].coef.str() << "*" << var_name(row.terms[t].var);
    }
    out << " <= " << row.rhs.str() << "\n";
  }
  return out.str();
}

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::vector<int> checked_permutation(std::span<const int> order, int k, const char* who) {
  require(static_cast<int>(order.size()) == k, std::string(who) + ": order size mismatch");
  std::vector<bool> seen(k, false);
  for (int v : order) {
    require(v >= 0 && v < k && !seen[v], std::string(who) + ": order is not a permutation");
    seen[v] = true;
  }
  return {order.begin(), order.end()};
}

struct ModelNames {
  static std::string x(int j) { return "x_" + std::to_string(j); }
  static std::string y(int j) { return "y_" + std::to_string(j); }
  static std::string yij(int i, int j) {
    return "y_" + std::to_string(i) + "_" + std::to_string(j);
  }
};

// Shared frame for the two builders: k integer vars, y_j then y_ij blocks.
struct ModelFrame {
  MilpModel m;
  int n;
  int k;

  ModelFrame(int n_, int k_) : n(n_), k(k_) {
    for (int j = 1; j <= k; ++j) m.int_vars.push_back({ModelNames::x(j), 0, n});
    for (int j = 1; j <= k; ++j) m.cont_vars.push_back({ModelNames::y(j), false});
    for (int j = 1; j <= k; ++j) {
      for (int i = 1; i <= n; ++i) m.cont_vars.push_back({ModelNames::yij(i, j), false});
    }
  }

  int x_index(int j) const { return j - 1; }
  int y_index(int j) const { return k + (j - 1); }
  int yij_index(int i, int j) const { return 2 * k + (j - 1) * n + (i - 1); }

  void add(std::vector<LinearTerm> terms, int64_t rhs) {
    m.constraints.push_back({std::move(terms), Rational::of(rhs)});
  }

  void emit_x_bounds() {
    for (int j = 1; j <= k; ++j) add({{Rational::of(1), x_index(j)}}, n);
  }

  // direction +1: x_j <= x_{j+1}; direction -1: x_{j+1} <= x_j.
  void emit_chain(int direction) {
    for (int j = 1; j < k; ++j) {
      int lo = direction > 0 ? x_index(j) : x_index(j + 1);
      int hi = direction > 0 ? x_index(j + 1) : x_index(j);
      add({{Rational::of(1), lo}, {Rational::of(-1), hi}}, 0);
    }
  }

  void emit_y_nonneg() {
    for (int j = 1; j <= k; ++j) {
      for (int i = 1; i <= n; ++i) add({{Rational::of(-1), yij_index(i, j)}}, 0);
    }
  }

  // y_ij >= (x_j + shift) * step_i, emitted as step_i*x_j - y_ij <= -shift*step_i.
  void emit_steps(const std::vector<int64_t>& step, const std::vector<int64_t>& shift) {
    for (int j = 1; j <= k; ++j) {
      for (int i = 1; i <= n; ++i) {
        std::vector<LinearTerm> terms;
        if (step[i] != 0) terms.push_back({Rational::of(step[i]), x_index(j)});
        terms.push_back({Rational::of(-1), yij_index(i, j)});
        add(std::move(terms), checked_mul(-shift[i], step[i]));
      }
    }
  }

  void emit_y_aggregation() {
    for (int j = 1; j <= k; ++j) {
      std::vector<LinearTerm> terms;
      for (int i = 1; i <= n; ++i) terms.push_back({Rational::of(1), yij_index(i, j)});
      terms.push_back({Rational::of(-1), y_index(j)});
      add(std::move(terms), 0);
    }
  }
};

}  // namespace

MilpModel build_cc_model(const Instance& inst, std::span<const int> agent2_order) {
  require(inst.crit1.kind == CriterionKind::TotalWeightedCompletion &&
              inst.crit2.kind == CriterionKind::TotalWeightedCompletion,
          "build_cc_model: both criteria must be total completion time");
  for (const Job& j : inst.jobs1) {
    require(j.w == 1, "build_cc_model: agent-1 weights must all be 1");
  }
  const int n = inst.n();
  const int k = inst.k();
  auto order = checked_permutation(agent2_order, k, "build_cc_model");

  // 1-based renumbered data: agent 1 by SPT, agent 2 by the given order.
  std::vector<int64_t> p1(n + 1, 0);
  auto spt = spt_order(inst.jobs1);
  for (int i = 1; i <= n; ++i) p1[i] = inst.jobs1[spt[i - 1]].p;
  std::vector<int64_t> p2(k + 1, 0), w2(k + 1, 0);
  for (int j = 1; j <= k; ++j) {
    p2[j] = inst.jobs2[order[j - 1]].p;
    w2[j] = inst.jobs2[order[j - 1]].w;
  }

  ModelFrame f(n, k);
  f.emit_x_bounds();
  f.emit_chain(+1);

  // Agent-1 bound: sum (n-i+1)p1_i + sum (n-x_j)p2_j <= A1.
  {
    int64_t base = 0;
    for (int i = 1; i <= n; ++i) base = checked_add(base, checked_mul(n - i + 1, p1[i]));
    int64_t p2_total = 0;
    std::vector<LinearTerm> terms;
    for (int j = 1; j <= k; ++j) {
      p2_total = checked_add(p2_total, p2[j]);
      terms.push_back({Rational::of(-p2[j]), f.x_index(j)});
    }
    f.add(std::move(terms), inst.a1 - base - checked_mul(n, p2_total));
  }

  f.emit_y_nonneg();

  // Step rows: y_ij >= (x_j - i + 1)(p1_i - p1_{i-1}).
  std::vector<int64_t> step(n + 1, 0), shift(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    step[i] = p1[i] - p1[i - 1];
    shift[i] = -(i - 1);
  }
  f.emit_steps(step, shift);
  f.emit_y_aggregation();

  // Agent-2 bound: sum_i w2_i * prefix_p2_i + sum_j w2_j y_j <= A2.
  {
    int64_t base = 0, prefix = 0;
    std::vector<LinearTerm> terms;
    for (int j = 1; j <= k; ++j) {
      prefix = checked_add(prefix, p2[j]);
      base = checked_add(base, checked_mul(w2[j], prefix));
      terms.push_back({Rational::of(w2[j]), f.y_index(j)});
    }
    f.add(std::move(terms), inst.a2 - base);
  }
  return std::move(f.m);
}

MilpModel build_unitp_model(const Instance& inst, std::span<const int> agent2_order) {
  require(inst.crit1.kind == CriterionKind::TotalWeightedCompletion &&
              inst.crit2.kind == CriterionKind::TotalWeightedCompletion,
          "build_unitp_model: both criteria must be total completion time");
  for (const Job& j : inst.jobs1) {
    require(j.p == 1, "build_unitp_model: agent-1 processing times must all be 1");
  }
  const int n = inst.n();
  const int k = inst.k();
  auto order = checked_permutation(agent2_order, k, "build_unitp_model");

  // Agent 1 renumbered by non-increasing weight; w1[n+1] = 0 closes the tail.
  std::vector<int64_t> w1(n + 2, 0);
  auto worder = weight_desc_order(inst.jobs1);
  for (int i = 1; i <= n; ++i) w1[i] = inst.jobs1[worder[i - 1]].w;
  std::vector<int64_t> p2(k + 1, 0), w2(k + 1, 0);
  for (int j = 1; j <= k; ++j) {
    p2[j] = inst.jobs2[order[j - 1]].p;
    w2[j] = inst.jobs2[order[j - 1]].w;
  }

  ModelFrame f(n, k);
  f.emit_x_bounds();
  f.emit_chain(-1);

  // Agent-2 bound: sum_i w2_i * prefix_p2_i + sum_j w2_j (n - x_j) <= A2.
  {
    int64_t base = 0, prefix = 0, w2_total = 0;
    std::vector<LinearTerm> terms;
    for (int j = 1; j <= k; ++j) {
      prefix = checked_add(prefix, p2[j]);
      base = checked_add(base, checked_mul(w2[j], prefix));
      w2_total = checked_add(w2_total, w2[j]);
      terms.push_back({Rational::of(-w2[j]), f.x_index(j)});
    }
    f.add(std::move(terms), inst.a2 - base - checked_mul(n, w2_total));
  }

  f.emit_y_nonneg();

  // Step rows: y_ij >= (x_j - n + i)(w1_i - w1_{i+1}).
  std::vector<int64_t> step(n + 1, 0), shift(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    step[i] = w1[i] - w1[i + 1];
    shift[i] = i - n;
  }
  f.emit_steps(step, shift);
  f.emit_y_aggregation();

  // Agent-1 bound: sum_i i*w1_i + sum_j p2_j y_j <= A1.
  {
    int64_t base = 0;
    for (int i = 1; i <= n; ++i) base = checked_add(base, checked_mul(i, w1[i]));
    std::vector<LinearTerm> terms;
    for (int j = 1; j <= k; ++j) terms.push_back({Rational::of(p2[j]), f.y_index(j)});
    f.add(std::move(terms), inst.a1 - base);
  }
  return std::move(f.m);
}

// ---------------------------------------------------------------------------
// Specialized feasibility search.

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

int64_t sat_add(int64_t a, int64_t b) {
  if (a >= kInf || b >= kInf) return kInf;
  return checked_add(a, b);
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  int64_t r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

// Linear lower-bound expression a*u + b for a continuous variable, where u is
// the value of its (single) governing integer variable.
struct DefExpr {
  int64_t a = 0;
  int64_t b = 0;
};

struct ParsedModel {
  const MilpModel& model;
  int ni;
  int nc;
  std::vector<int64_t> lo, hi;  // integer variable ranges after bound folding
  int chain_direction = 0;      // +1 incr, -1 decr, 0 none

  // Per continuous variable: governing int var (-1 = constant) and its
  // defining expressions; tight value is the max over them.
  std::vector<int> dep;
  std::vector<std::vector<DefExpr>> defs;
  std::vector<bool> is_defined;
  // Aggregators: v >= sum coef*source - rhs.
  std::vector<bool> is_aggregate;
  std::vector<std::vector<std::pair<int64_t, int>>> agg_sources;
  std::vector<int64_t> agg_rhs;

  struct CheckRow {
    int model_row;                      // index into model.constraints
    int64_t rhs;                        // scaled
    int64_t const_part = 0;            // contribution independent of int vars
    std::vector<int64_t> direct;       // per int var direct coefficient
    std::vector<std::pair<int64_t, int>> raw_cont;  // (coef, cont var) as emitted
    // per int var: (multiplier, cont var) pieces whose tight value depends on it
    std::vector<std::vector<std::pair<int64_t, int>>> pieces;
  };
  std::vector<CheckRow> checks;

  explicit ParsedModel(const MilpModel& m) : model(m) {
    ni = static_cast<int>(m.int_vars.size());
    nc = static_cast<int>(m.cont_vars.size());
    lo.resize(ni);
    hi.resize(ni);
    for (int j = 0; j < ni; ++j) {
      lo[j] = m.int_vars[j].lower;
      hi[j] = m.int_vars[j].upper;
      require(lo[j] >= 0, "solve_feasibility: integer lower bounds must be >= 0");
    }
    dep.assign(nc, -2);  // -2 = unset, -1 = constant
    defs.resize(nc);
    is_defined.assign(nc, false);
    is_aggregate.assign(nc, false);
    agg_sources.resize(nc);
    agg_rhs.assign(nc, 0);
    classify();
  }

  static int64_t as_integer(const Rational& r, const char* what) {
    require(r.den == 1, std::string("solve_feasibility: ") + what +
                            " must be integral for the specialized search");
    return r.num;
  }

  void classify() {
    std::vector<std::pair<int, int>> chain_edges;  // (low var, high var): low <= high
    for (size_t ci = 0; ci < model.constraints.size(); ++ci) {
      const LinearLe& row = model.constraints[ci];
      std::vector<std::pair<int64_t, int>> iterms, cterms;
      for (const LinearTerm& t : row.terms) {
        int64_t c = as_integer(t.coef, "coefficient");
        if (c == 0) continue;
        if (t.var < ni) {
          iterms.emplace_back(c, t.var);
        } else {
          cterms.emplace_back(c, t.var - ni);
        }
      }
      int64_t rhs = as_integer(row.rhs, "right-hand side");

      if (cterms.empty()) {
        if (iterms.size() == 1) {
          // Fold single-variable rows into the variable range; the row also
          // stays on the check list so tight evaluation can report it.
          auto [c, v] = iterms[0];
          if (c > 0) {
            hi[v] = std::min(hi[v], floor_div(rhs, c));
          } else {
            lo[v] = std::max(lo[v], ceil_div(rhs, c));
          }
          add_check_row(static_cast<int>(ci), iterms, {}, rhs);
          continue;
        }
        if (iterms.size() == 2 && rhs == 0 && iterms[0].first == -iterms[1].first) {
          int64_t c0 = iterms[0].first;
          int low = c0 > 0 ? iterms[0].second : iterms[1].second;
          int high = c0 > 0 ? iterms[1].second : iterms[0].second;
          chain_edges.emplace_back(low, high);
          continue;
        }
        // General all-integer row: checked at leaves.
        add_check_row(static_cast<int>(ci), iterms, {}, rhs);
        continue;
      }

      std::vector<std::pair<int64_t, int>> negative;
      for (auto& [c, v] : cterms) {
        if (c < 0) negative.emplace_back(c, v);
      }
      if (negative.empty()) {
        add_check_row(static_cast<int>(ci), iterms, cterms, rhs);
        continue;
      }
      require(negative.size() == 1 && negative[0].first == -1,
              "solve_feasibility: model not in tight-evaluation pattern "
              "(expected a single -1 continuous term per defining row)");
      const int target = negative[0].second;
      if (cterms.size() == 1) {
        // Definer: target >= sum(int terms) - rhs, at most one int var.
        require(iterms.size() <= 1,
                "solve_feasibility: defining row references several integer variables");
        require(!is_aggregate[target],
                "solve_feasibility: variable is both defined and aggregated");
        int governs = iterms.empty() ? -1 : iterms[0].second;
        if (dep[target] == -2 || dep[target] == -1) {
          if (governs != -1) dep[target] = governs;
          else if (dep[target] == -2) dep[target] = -1;
        } else {
          require(governs == -1 || governs == dep[target],
                  "solve_feasibility: defining rows disagree on the governing variable");
        }
        defs[target].push_back({iterms.empty() ? 0 : iterms[0].first, -rhs});
        is_defined[target] = true;
      } else {
        // Aggregator: target >= sum(coef*source) - rhs over continuous sources.
        require(iterms.empty(),
                "solve_feasibility: aggregation row mixes integer terms");
        require(!is_defined[target] && !is_aggregate[target],
                "solve_feasibility: variable aggregated twice or also defined");
        is_aggregate[target] = true;
        agg_rhs[target] = rhs;
        for (auto& [c, v] : cterms) {
          if (v == target) continue;
          require(c > 0, "solve_feasibility: aggregation sources need positive coefficients");
          agg_sources[target].emplace_back(c, v);
        }
      }
    }

    resolve_chain(chain_edges);
    resolve_pieces();
  }

  void resolve_chain(const std::vector<std::pair<int, int>>& edges) {
    if (edges.empty() || ni <= 1) {
      chain_direction = 0;
      require(edges.empty(), "solve_feasibility: chain rows over a single variable");
      return;
    }
    bool incr = true, decr = true;
    for (auto [low, high] : edges) {
      if (high != low + 1) incr = false;
      if (low != high + 1) decr = false;
    }
    require(incr || decr, "solve_feasibility: chain rows must order adjacent variables");
    chain_direction = incr ? +1 : -1;
  }

  void add_check_row(int model_row, const std::vector<std::pair<int64_t, int>>& iterms,
                     const std::vector<std::pair<int64_t, int>>& cterms, int64_t rhs) {
    CheckRow row;
    row.model_row = model_row;
    row.rhs = rhs;
    row.direct.assign(ni, 0);
    row.pieces.resize(ni);
    for (auto [c, v] : iterms) row.direct[v] = checked_add(row.direct[v], c);
    row.raw_cont = cterms;
    checks.push_back(std::move(row));
  }

  int64_t tight_constant(int v) const {
    // Tight value of a variable whose defining rows involve no integer var.
    int64_t best = std::numeric_limits<int64_t>::min();
    for (const DefExpr& e : defs[v]) best = std::max(best, e.b);
    require(best != std::numeric_limits<int64_t>::min(),
            "solve_feasibility: continuous variable has no lower bound");
    return best;
  }

  void resolve_pieces() {
    for (CheckRow& row : checks) {
      for (auto [mult, v] : row.raw_cont) {
        if (is_aggregate[v]) {
          row.const_part = checked_add(row.const_part, checked_mul(-mult, agg_rhs[v]));
          for (auto [sc, sv] : agg_sources[v]) {
            require(is_defined[sv],
                    "solve_feasibility: aggregation source is not a defined variable");
            bucket_piece(row, checked_mul(mult, sc), sv);
          }
        } else {
          require(is_defined[v],
                  "solve_feasibility: bound row uses an undefined continuous variable");
          bucket_piece(row, mult, v);
        }
      }
    }
  }

  void bucket_piece(CheckRow& row, int64_t mult, int defined_var) {
    if (dep[defined_var] == -1) {
      row.const_part =
          checked_add(row.const_part, checked_mul(mult, tight_constant(defined_var)));
    } else {
      row.pieces[dep[defined_var]].emplace_back(mult, defined_var);
    }
  }

  int64_t tight_at(int defined_var, int64_t u) const {
    int64_t best = std::numeric_limits<int64_t>::min();
    for (const DefExpr& e : defs[defined_var]) {
      best = std::max(best, checked_add(checked_mul(e.a, u), e.b));
    }
    return best;
  }
};

}  // namespace

MilpSolveResult solve_feasibility(const MilpModel& model) {
  const auto t0 = std::chrono::steady_clock::now();
  ParsedModel pm(model);
  const int ni = pm.ni;
  const int rows = static_cast<int>(pm.checks.size());

  MilpSolveResult result;
  auto finish = [&](std::optional<std::vector<int64_t>> values) {
    if (values) {
      IntAssignment a;
      for (int j = 0; j < ni; ++j) a.values[model.int_vars[j].name] = (*values)[j];
      result.assignment = std::move(a);
    }
    result.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return std::move(result);
  };

  for (int j = 0; j < ni; ++j) {
    if (pm.lo[j] > pm.hi[j]) return finish(std::nullopt);  // empty range
  }

  // rhs adjusted by the integer-free contributions.
  std::vector<int64_t> rhs_adj(rows);
  for (int r = 0; r < rows; ++r) rhs_adj[r] = pm.checks[r].rhs - pm.checks[r].const_part;

  if (ni == 0) {
    result.stats.nodes = 1;
    for (int r = 0; r < rows; ++r) {
      if (0 > rhs_adj[r]) return finish(std::nullopt);
    }
    return finish(std::vector<int64_t>{});
  }

  const int64_t max_hi = *std::max_element(pm.hi.begin(), pm.hi.end());
  const int width = static_cast<int>(max_hi) + 1;

  // G[r][j][u]: contribution of x_j = u to check row r.
  std::vector<std::vector<std::vector<int64_t>>> G(
      rows, std::vector<std::vector<int64_t>>(ni, std::vector<int64_t>(width, 0)));
  for (int r = 0; r < rows; ++r) {
    const auto& row = pm.checks[r];
    for (int j = 0; j < ni; ++j) {
      for (int64_t u = pm.lo[j]; u <= pm.hi[j]; ++u) {
        int64_t g = checked_mul(row.direct[j], u);
        for (auto [mult, v] : row.pieces[j]) {
          g = checked_add(g, checked_mul(mult, pm.tight_at(v, u)));
        }
        G[r][j][u] = g;
      }
    }
  }

  // rest[r][j][v]: lower bound on the total contribution of x_j..x_{ni-1}
  // when the chain pins every one of them >= v (incr), <= v (decr), or
  // leaves them free (no chain; column 0 only).
  std::vector<std::vector<std::vector<int64_t>>> rest(
      rows, std::vector<std::vector<int64_t>>(ni + 1, std::vector<int64_t>(width, 0)));
  for (int r = 0; r < rows; ++r) {
    for (int j = ni - 1; j >= 0; --j) {
      std::vector<int64_t> mins(width, kInf);
      if (pm.chain_direction >= 0) {
        int64_t running = kInf;
        for (int64_t v = pm.hi[j]; v >= 0; --v) {
          if (v >= pm.lo[j]) running = std::min(running, G[r][j][v]);
          mins[v] = running;
        }
        // v above hi stays kInf: the range is empty there.
      } else {
        int64_t running = kInf;
        for (int64_t v = pm.lo[j]; v < width; ++v) {
          if (v <= pm.hi[j]) running = std::min(running, G[r][j][v]);
          mins[v] = running;
        }
      }
      for (int64_t v = 0; v < width; ++v) {
        int64_t tail = pm.chain_direction == 0 ? rest[r][j + 1][0] : rest[r][j + 1][v];
        rest[r][j][v] = sat_add(mins[pm.chain_direction == 0 ? pm.lo[j] : v], tail);
      }
    }
  }

  std::vector<int64_t> partial(rows, 0);
  std::vector<int64_t> chosen(ni, 0);
  std::optional<std::vector<int64_t>> found;
  int64_t leaves = 0, nodes = 0;

  // Ascending value order makes the first feasible leaf the lexicographically
  // smallest feasible assignment.
  auto dfs = [&](auto&& self, int j, int64_t prev) -> bool {
    int64_t from = pm.lo[j];
    int64_t to = pm.hi[j];
    if (j > 0 && pm.chain_direction > 0) from = std::max(from, prev);
    if (j > 0 && pm.chain_direction < 0) to = std::min(to, prev);
    for (int64_t v = from; v <= to; ++v) {
      ++nodes;
      if (j == ni - 1) ++leaves;
      bool viable = true;
      for (int r = 0; r < rows && viable; ++r) {
        int64_t with_v = sat_add(partial[r], G[r][j][v]);
        if (sat_add(with_v, rest[r][j + 1][v]) > rhs_adj[r]) viable = false;
      }
      if (!viable) continue;
      chosen[j] = v;
      if (j == ni - 1) {
        found = chosen;
        return true;
      }
      for (int r = 0; r < rows; ++r) partial[r] = sat_add(partial[r], G[r][j][v]);
      if (self(self, j + 1, v)) return true;
      for (int r = 0; r < rows; ++r) partial[r] -= G[r][j][v];
    }
    return false;
  };
  dfs(dfs, 0, 0);

  result.stats.nodes = leaves;
  result.stats.subproblems = nodes;
  return finish(std::move(found));
}

std::vector<TightRowValue> tight_check_row_values(const MilpModel& model,
                                                  const IntAssignment& assignment) {
  ParsedModel pm(model);
  std::vector<int64_t> x(pm.ni);
  for (int j = 0; j < pm.ni; ++j) {
    auto it = assignment.values.find(model.int_vars[j].name);
    if (it == assignment.values.end()) {
      throw std::invalid_argument("tight_check_row_values: assignment misses " +
                                  model.int_vars[j].name);
    }
    x[j] = it->second;
  }
  std::vector<TightRowValue> out;
  for (const auto& row : pm.checks) {
    int64_t lhs = row.const_part;
    for (int j = 0; j < pm.ni; ++j) {
      lhs = checked_add(lhs, checked_mul(row.direct[j], x[j]));
      for (auto [mult, v] : row.pieces[j]) {
        lhs = checked_add(lhs, checked_mul(mult, pm.tight_at(v, x[j])));
      }
    }
    out.push_back({row.model_row, lhs});
  }
  return out;
}

}  // namespace tas
