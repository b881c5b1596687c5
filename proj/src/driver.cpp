#include "tas/driver.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "tas/completion.hpp"
#include "tas/io.hpp"
#include "tas/jit.hpp"
#include "tas/tardy.hpp"

namespace tas {

namespace {

using SolverFn = SolveOutcome (*)(const Instance&, const SolveOptions&);

struct SolverSpec {
  const char* name;
  CriterionKind c1;
  CriterionKind c2;
  bool unit_w1, unit_w2, unit_p1, unit_p2;
  SolverFn fn;
};

const SolverSpec kSolvers[] = {
    {"solve_c_wc", CriterionKind::TotalWeightedCompletion,
     CriterionKind::TotalWeightedCompletion, true, false, false, false, &solve_c_wc},
    {"solve_wc_wc_unitp", CriterionKind::TotalWeightedCompletion,
     CriterionKind::TotalWeightedCompletion, false, false, true, false,
     &solve_wc_wc_unitp},
    {"solve_c_wu", CriterionKind::TotalWeightedCompletion,
     CriterionKind::WeightedTardyCount, true, false, false, false, &solve_c_wu},
    {"solve_u_wc", CriterionKind::WeightedTardyCount,
     CriterionKind::TotalWeightedCompletion, true, false, false, false, &solve_u_wc},
    {"solve_u_c", CriterionKind::WeightedTardyCount,
     CriterionKind::TotalWeightedCompletion, true, true, false, false, &solve_u_c},
    {"solve_u_wu", CriterionKind::WeightedTardyCount, CriterionKind::WeightedTardyCount,
     true, false, false, false, &solve_u_wu},
    {"solve_wu_wu_unitp", CriterionKind::WeightedTardyCount,
     CriterionKind::WeightedTardyCount, false, false, true, true, &solve_wu_wu_unitp},
    {"solve_e_wc", CriterionKind::WeightedJitCount,
     CriterionKind::TotalWeightedCompletion, true, false, false, false, &solve_e_wc},
    {"solve_we_wu", CriterionKind::WeightedJitCount, CriterionKind::WeightedTardyCount,
     false, false, false, false, &solve_we_wu},
    {"solve_we_we", CriterionKind::WeightedJitCount, CriterionKind::WeightedJitCount,
     false, false, false, false, &solve_we_we},
};

const SolverSpec* find_solver(const std::string& name) {
  for (const SolverSpec& s : kSolvers) {
    if (name == s.name) return &s;
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> solver_names() {
  std::vector<std::string> names;
  for (const SolverSpec& s : kSolvers) names.emplace_back(s.name);
  return names;
}

SolveOutcome run_solver(const std::string& name, const Instance& inst,
                        const SolveOptions& options) {
  const SolverSpec* spec = find_solver(name);
  if (!spec) throw std::invalid_argument("unknown solver operation: " + name);
  return spec->fn(inst, options);
}

bool solver_accepts(const std::string& name, const Instance& inst) {
  const SolverSpec* spec = find_solver(name);
  if (!spec) return false;
  if (inst.crit1.kind != spec->c1 || inst.crit2.kind != spec->c2) return false;
  const InstanceShape shape = instance_shape(inst);
  if (spec->unit_w1 && !shape.unit_w1) return false;
  if (spec->unit_w2 && !shape.unit_w2) return false;
  if (spec->unit_p1 && !shape.unit_p1) return false;
  if (spec->unit_p2 && !shape.unit_p2) return false;
  try {
    validate_instance(inst);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

RoutedSolve route_and_solve(const Instance& inst, const SolveOptions& options,
                            const OracleBudget& budget) {
  RoutedSolve out;
  out.verdict = classify(inst);
  if (out.verdict.solver == "oracle-only") {
    if (inst.n() + inst.k() > budget.max_total_jobs) {
      throw RoutingUnavailable(
          "no parameterized solver applies (" + out.verdict.citation +
          ") and the instance exceeds the oracle budget of " +
          std::to_string(budget.max_total_jobs) + " jobs");
    }
    out.engine = "oracle";
    out.outcome = brute_force_feasible(inst, budget);
    return out;
  }
  out.engine = out.verdict.solver;
  out.outcome = run_solver(out.verdict.solver, inst, options);
  return out;
}

// ---------------------------------------------------------------------------
// Sweep engine.

namespace {

struct JobShape {
  int64_t p;
  int64_t w;
  bool operator<(const JobShape& o) const { return std::tie(p, w) < std::tie(o.p, o.w); }
  bool operator==(const JobShape& o) const { return p == o.p && w == o.w; }
};

// All multisets of `size` job shapes, canonical (non-decreasing).
void multisets_rec(const std::vector<JobShape>& options, int size, size_t from,
                   std::vector<JobShape>& current,
                   std::vector<std::vector<JobShape>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (size_t i = from; i < options.size(); ++i) {
    current.push_back(options[i]);
    multisets_rec(options, size, i, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<JobShape>> job_multisets(const std::vector<JobShape>& options,
                                                 int max_size) {
  std::vector<std::vector<JobShape>> out;
  std::vector<JobShape> current;
  for (int size = 0; size <= max_size; ++size) {
    multisets_rec(options, size, 0, current, out);
  }
  return out;
}

// Due-date assignments over `grid`, non-decreasing across identical shapes so
// symmetric structures are enumerated once.
void due_vectors_rec(const std::vector<JobShape>& shapes, const std::vector<int64_t>& grid,
                     size_t at, std::vector<int64_t>& current,
                     const std::function<void(const std::vector<int64_t>&)>& emit) {
  if (at == shapes.size()) {
    emit(current);
    return;
  }
  for (int64_t d : grid) {
    if (at > 0 && shapes[at] == shapes[at - 1] && d < current[at - 1]) continue;
    current[at] = d;
    due_vectors_rec(shapes, grid, at + 1, current, emit);
  }
}

int64_t count_due_vectors(const std::vector<JobShape>& shapes, int64_t grid_size) {
  // Upper bound ignoring the identical-shape ordering; good enough to pick
  // the grid density.
  int64_t total = 1;
  for (size_t i = 0; i < shapes.size(); ++i) {
    if (total > (int64_t(1) << 40)) return total;
    total *= grid_size;
  }
  return total;
}

std::vector<int64_t> thin_grid(int64_t total_p, int levels) {
  std::set<int64_t> grid;
  grid.insert(1);
  grid.insert(total_p);
  if (levels >= 3) grid.insert((total_p + 1) / 2);
  if (levels >= 4) {
    grid.insert(std::max<int64_t>(1, total_p / 3));
    grid.insert(std::max<int64_t>(1, (2 * total_p) / 3));
  }
  return {grid.begin(), grid.end()};
}

int64_t meets_probe(const Criterion& crit, int64_t value) {
  // Bound value that flips the verdict for this achieved value, clamped into
  // the non-negative contract.
  return crit.is_lower_bound() ? value + 1 : std::max<int64_t>(0, value - 1);
}

}  // namespace

SweepReport sweep_solver_vs_oracle(const SweepConfig& config, const SolveOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const SolverSpec* spec = find_solver(config.solver);
  if (!spec) throw std::invalid_argument("sweep: unknown solver " + config.solver);

  SweepReport report;
  OracleBudget budget;
  budget.max_total_jobs = std::max(config.max_n + config.max_k,
                                   config.random_max_n + config.random_max_k);

  const Criterion crit1{spec->c1};
  const Criterion crit2{spec->c2};

  auto check_structure = [&](const std::vector<Job>& jobs1, const std::vector<Job>& jobs2) {
    ++report.structures;
    Instance base;
    base.jobs1 = jobs1;
    base.jobs2 = jobs2;
    base.crit1 = crit1;
    base.crit2 = crit2;

    auto pairs = enumerate_value_pairs(base, budget);

    // Achieved value pairs plus one flipped probe on each axis.
    std::set<std::pair<int64_t, int64_t>> bounds;
    for (auto [v1, v2] : pairs) {
      bounds.insert({v1, v2});
      bounds.insert({meets_probe(crit1, v1), v2});
      bounds.insert({v1, meets_probe(crit2, v2)});
    }
    std::vector<std::pair<int64_t, int64_t>> candidates(bounds.begin(), bounds.end());
    const size_t cap = 60;
    if (candidates.size() > cap) {
      std::vector<std::pair<int64_t, int64_t>> thinned;
      const size_t stride = (candidates.size() + cap - 1) / cap;
      for (size_t i = 0; i < candidates.size(); i += stride) thinned.push_back(candidates[i]);
      candidates = std::move(thinned);
    }

    for (auto [a1, a2] : candidates) {
      Instance inst = base;
      inst.a1 = a1;
      inst.a2 = a2;
      ++report.instances;

      bool reference = false;
      for (auto [v1, v2] : pairs) {
        if (crit1.meets(v1, a1) && crit2.meets(v2, a2)) {
          reference = true;
          break;
        }
      }
      if (config.cross_check > 0 && report.instances % config.cross_check == 0) {
        ++report.cross_checks;
        const bool direct = brute_force_feasible(inst, budget).feasible;
        if (direct != reference) {
          ++report.disagreements;
          if (report.first_counterexample.empty()) {
            report.first_counterexample = serialize_instance(inst, direct);
          }
          continue;
        }
      }

      SolveOutcome got = spec->fn(inst, options);
      bool ok = got.feasible == reference;
      if (ok && got.feasible) {
        ok = got.witness && is_feasible_schedule(*got.witness, inst);
      }
      if (!ok) {
        ++report.disagreements;
        if (report.first_counterexample.empty()) {
          report.first_counterexample = serialize_instance(inst, reference);
        }
      }
    }
  };

  if (config.exhaustive) {
    std::vector<JobShape> options1, options2;
    for (int64_t p : spec->unit_p1 ? std::vector<int64_t>{1} : config.p_choices) {
      for (int64_t w : spec->unit_w1 ? std::vector<int64_t>{1} : config.w_choices) {
        options1.push_back({p, w});
      }
    }
    for (int64_t p : spec->unit_p2 ? std::vector<int64_t>{1} : config.p_choices) {
      for (int64_t w : spec->unit_w2 ? std::vector<int64_t>{1} : config.w_choices) {
        options2.push_back({p, w});
      }
    }
    auto sets1 = job_multisets(options1, config.max_n);
    auto sets2 = job_multisets(options2, config.max_k);

    for (const auto& s1 : sets1) {
      for (const auto& s2 : sets2) {
        int64_t total_p = 0;
        for (const JobShape& s : s1) total_p += s.p;
        for (const JobShape& s : s2) total_p += s.p;
        total_p = std::max<int64_t>(total_p, 1);

        auto make_jobs = [&](const std::vector<JobShape>& shapes, int agent,
                             const std::vector<int64_t>& dues) {
          std::vector<Job> jobs;
          for (size_t i = 0; i < shapes.size(); ++i) {
            Job j;
            j.id = static_cast<int>(i);
            j.agent = agent;
            j.p = shapes[i].p;
            j.w = shapes[i].w;
            if (!dues.empty()) j.d = dues[i];
            jobs.push_back(j);
          }
          return jobs;
        };

        // Pick the due-date grid densities so the structure count stays sane.
        auto grid_for = [&](const Criterion& crit, const std::vector<JobShape>& shapes,
                            int64_t other_combos) -> std::vector<int64_t> {
          if (!crit.needs_due_dates()) return {};
          std::vector<int64_t> full(total_p);
          for (int64_t d = 1; d <= total_p; ++d) full[d - 1] = d;
          if (count_due_vectors(shapes, total_p) * other_combos <= config.d_combo_cap) {
            return full;
          }
          auto three = thin_grid(total_p, 3);
          if (count_due_vectors(shapes, three.size()) * other_combos <=
              config.d_combo_cap) {
            return three;
          }
          return thin_grid(total_p, 2);
        };

        const std::vector<int64_t> grid1 = grid_for(crit1, s1, 1);
        const std::vector<int64_t> grid2 =
            grid_for(crit2, s2,
                     crit1.needs_due_dates()
                         ? std::max<int64_t>(count_due_vectors(s1, grid1.size()), 1)
                         : 1);

        auto with_dues2 = [&](const std::vector<Job>& jobs1) {
          if (!crit2.needs_due_dates()) {
            check_structure(jobs1, make_jobs(s2, 2, {}));
            return;
          }
          std::vector<int64_t> dues2(s2.size());
          due_vectors_rec(s2, grid2, 0, dues2, [&](const std::vector<int64_t>& d2) {
            check_structure(jobs1, make_jobs(s2, 2, d2));
          });
        };
        if (!crit1.needs_due_dates()) {
          with_dues2(make_jobs(s1, 1, {}));
        } else {
          std::vector<int64_t> dues1(s1.size());
          due_vectors_rec(s1, grid1, 0, dues1, [&](const std::vector<int64_t>& d1) {
            with_dues2(make_jobs(s1, 1, d1));
          });
        }
      }
    }
  }

  // Random tier: direct brute-force comparison, bounds biased toward the
  // feasibility frontier by pricing one random layout.
  for (int r = 0; r < config.random_count; ++r) {
    SplitMix64 rng(config.seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(r));
    RandomSpec rs;
    rs.n = static_cast<int>(rng.range(0, config.random_max_n));
    rs.k = static_cast<int>(rng.range(0, config.random_max_k));
    rs.crit1 = spec->c1;
    rs.crit2 = spec->c2;
    rs.unit_w1 = spec->unit_w1;
    rs.unit_w2 = spec->unit_w2;
    rs.unit_p1 = spec->unit_p1;
    rs.unit_p2 = spec->unit_p2;
    rs.seed = rng.next();
    Instance inst = random_instance(rs);

    // Price a random-permutation layout and jitter around it.
    {
      std::vector<JobRef> seq;
      for (int i = 0; i < inst.n(); ++i) seq.push_back({1, i});
      for (int j = 0; j < inst.k(); ++j) seq.push_back({2, j});
      for (size_t i = seq.size(); i > 1; --i) {
        std::swap(seq[i - 1], seq[static_cast<size_t>(rng.range(0, i - 1))]);
      }
      auto layout = normalize_left_shift(inst, seq, {});
      const ObjectiveReport rep = evaluate(*layout, inst);
      inst.a1 = std::max<int64_t>(0, rep.value1 + rng.range(-2, 2));
      inst.a2 = std::max<int64_t>(0, rep.value2 + rng.range(-2, 2));
    }

    ++report.instances;
    const bool reference = brute_force_feasible(inst, budget).feasible;
    SolveOutcome got = spec->fn(inst, options);
    bool ok = got.feasible == reference;
    if (ok && got.feasible) {
      ok = got.witness && is_feasible_schedule(*got.witness, inst);
    }
    if (!ok) {
      ++report.disagreements;
      if (report.first_counterexample.empty()) {
        report.first_counterexample = serialize_instance(inst, reference);
      }
    }
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace tas
