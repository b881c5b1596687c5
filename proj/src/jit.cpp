#include "tas/jit.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <numeric>

#include "tas/parallel.hpp"
#include "tas/subroutines.hpp"

namespace tas {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

JitDpContext make_jit_context(const Instance& inst, std::span<const int> agent2_order) {
  JitDpContext ctx;
  ctx.n = inst.n();
  ctx.k = static_cast<int>(agent2_order.size());

  for (const Job& j : inst.jobs1) {
    require(j.d.has_value(), "jit context: agent-1 due dates required");
  }
  auto edd = edd_order(inst.jobs1);

  ctx.d1.assign(ctx.n + 2, 0);
  ctx.p1.assign(ctx.n + 2, 0);
  ctx.w1.assign(ctx.n + 2, 0);
  ctx.agent1_at.assign(ctx.n + 1, -1);
  int64_t max_d = 0;
  for (int i = 1; i <= ctx.n; ++i) {
    const Job& j = inst.jobs1[edd[i - 1]];
    ctx.d1[i] = *j.d;
    ctx.p1[i] = j.p;
    ctx.w1[i] = j.w;
    ctx.agent1_at[i] = edd[i - 1];
    max_d = std::max(max_d, *j.d);
  }
  for (const Job& j : inst.jobs2) {
    if (j.d) max_d = std::max(max_d, *j.d);
  }
  // "Infinite" due date for the closing dummy: large enough that no gap
  // constraint can bind.
  ctx.d1[ctx.n + 1] = checked_add(checked_add(inst.total_p(), max_d), 1);

  ctx.agent2_at.assign(ctx.k + 1, -1);
  ctx.p2_prefix.assign(ctx.k + 1, 0);
  ctx.w2.assign(ctx.k + 1, 0);
  ctx.d2.assign(ctx.k + 1, -1);
  for (int j = 1; j <= ctx.k; ++j) {
    const Job& job = inst.jobs2[agent2_order[j - 1]];
    ctx.agent2_at[j] = agent2_order[j - 1];
    ctx.p2_prefix[j] = checked_add(ctx.p2_prefix[j - 1], job.p);
    ctx.w2[j] = job.w;
    ctx.d2[j] = job.d.value_or(-1);
  }
  return ctx;
}

int k_abl(const JitDpContext& ctx, int a, int b, int ell) {
  require(0 <= a && a < b && b <= ctx.n + 1, "k_abl: need 0 <= a < b <= n+1");
  require(0 <= ell && ell <= ctx.k, "k_abl: need 0 <= ell <= k");
  const int64_t gap = ctx.d1[b] - ctx.d1[a] - ctx.p1[b];
  if (gap < 0 || ell == ctx.k) return 0;
  int count = 0;
  while (ell + count < ctx.k &&
         ctx.p2_prefix[ell + count + 1] - ctx.p2_prefix[ell] <= gap) {
    ++count;
  }
  return count;
}

int64_t w_abl(const JitDpContext& ctx, int a, int b, int ell) {
  const int count = k_abl(ctx, a, b, ell);
  int64_t total = 0;
  for (int j = ell + 1; j <= ell + count; ++j) {
    int64_t completion = checked_add(ctx.d1[a], ctx.p2_prefix[j] - ctx.p2_prefix[ell]);
    total = checked_add(total, checked_mul(ctx.w2[j], completion));
  }
  return total;
}

JitCcTable fill_jit_cc_table(const JitDpContext& ctx, int max_e) {
  const int n = ctx.n;
  const int k = ctx.k;
  JitCcTable t;
  t.value.assign(n + 2, std::vector<std::vector<int64_t>>(
                            max_e + 1, std::vector<int64_t>(k + 1, kJitUnreachable)));
  t.parent.assign(n + 2, std::vector<std::vector<JitCcState>>(
                             max_e + 1, std::vector<JitCcState>(k + 1)));
  t.value[0][0][0] = 0;

  for (int b = 1; b <= n + 1; ++b) {
    const int de = b <= n ? 1 : 0;  // dummies do not count as JIT jobs
    for (int a = 0; a < b; ++a) {
      if (ctx.d1[b] - ctx.d1[a] - ctx.p1[b] < 0) continue;
      for (int lp = 0; lp <= k; ++lp) {
        const int packed = k_abl(ctx, a, b, lp);
        const int l = lp + packed;
        const int64_t contribution = w_abl(ctx, a, b, lp);
        for (int ep = 0; ep + de <= max_e; ++ep) {
          const int64_t base = t.value[a][ep][lp];
          if (base >= kJitUnreachable) continue;
          const int64_t candidate = checked_add(base, contribution);
          if (candidate < t.value[b][ep + de][l]) {
            t.value[b][ep + de][l] = candidate;
            t.parent[b][ep + de][l] = {a, ep, lp};
          }
        }
      }
    }
  }
  return t;
}

JitWuTable fill_jit_wu_table(const JitDpContext& ctx) {
  const int n = ctx.n;
  const int k = ctx.k;
  JitWuTable t;
  t.value.assign(n + 2, std::vector<int64_t>(k + 1, -kJitUnreachable));
  t.parent.assign(n + 2, std::vector<std::pair<int, int>>(k + 1, {-1, -1}));
  t.value[0][0] = 0;

  for (int b = 1; b <= n + 1; ++b) {
    for (int a = 0; a < b; ++a) {
      if (ctx.d1[b] - ctx.d1[a] - ctx.p1[b] < 0) continue;  // condition 1
      for (int lp = 0; lp <= k; ++lp) {
        if (t.value[a][lp] <= -kJitUnreachable) continue;
        const int packed = k_abl(ctx, a, b, lp);
        // Condition 2: every packed agent-2 job, started back-to-back right
        // after d_a, must finish by its own due date (they are committed
        // early jobs in this variant).
        bool all_early = true;
        for (int j = lp + 1; j <= lp + packed && all_early; ++j) {
          int64_t completion = ctx.d1[a] + (ctx.p2_prefix[j] - ctx.p2_prefix[lp]);
          if (ctx.d2[j] < 0 || completion > ctx.d2[j]) all_early = false;
        }
        if (!all_early) continue;
        const int l = lp + packed;
        const int64_t candidate = checked_add(t.value[a][lp], ctx.w1[b]);
        if (candidate > t.value[b][l]) {
          t.value[b][l] = candidate;
          t.parent[b][l] = {a, lp};
        }
      }
    }
  }
  return t;
}

std::optional<JitInterval> jit_interval(const Job& job, JobRef ref) {
  if (!job.jit_possible()) return std::nullopt;
  return JitInterval{ref, *job.d - job.p, *job.d};
}

namespace {

std::vector<std::vector<int>> permutations_of(int k) {
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Rebuilds the schedule for a reconstructed DP path: packed agent-2 segment,
// then the pinned JIT job, for every edge; leftovers appended at the end.
struct PathAssembly {
  std::vector<JobRef> sequence;
  std::vector<JobRef> designated;
};

PathAssembly assemble_path(const JitDpContext& ctx,
                           const std::vector<std::tuple<int, int, int>>& edges) {
  // edges: (b, l_prev, l) along the path from 0 up to n+1.
  PathAssembly out;
  for (auto [b, lp, l] : edges) {
    for (int j = lp + 1; j <= l; ++j) out.sequence.push_back({2, ctx.agent2_at[j]});
    if (b >= 1 && b <= ctx.n) {
      JobRef ref{1, ctx.agent1_at[b]};
      out.sequence.push_back(ref);
      out.designated.push_back(ref);
    }
  }
  return out;
}

void append_missing(const Instance& inst, std::vector<JobRef>& seq) {
  std::vector<bool> used1(inst.jobs1.size(), false), used2(inst.jobs2.size(), false);
  for (const JobRef& r : seq) (r.agent == 1 ? used1 : used2)[r.index] = true;
  for (int agent : {1, 2}) {
    auto& used = agent == 1 ? used1 : used2;
    for (size_t i = 0; i < used.size(); ++i) {
      if (!used[i]) seq.push_back({agent, static_cast<int>(i)});
    }
  }
}

}  // namespace

SolveOutcome solve_e_wc(const Instance& inst, const SolveOptions& options) {
  require(inst.crit1.kind == CriterionKind::WeightedJitCount &&
              inst.crit2.kind == CriterionKind::TotalWeightedCompletion,
          "solve_e_wc: needs JIT count vs completion time");
  for (const Job& j : inst.jobs1) {
    require(j.w == 1, "solve_e_wc: agent-1 weights must be 1");
    require(j.d.has_value(), "solve_e_wc: agent-1 due dates required");
  }

  const auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out;
  if (inst.a1 > inst.n()) {
    // At most n unit-weight jobs can be just in time.
    out.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
  const int max_e = static_cast<int>(inst.a1);

  auto orders = permutations_of(inst.k());
  std::vector<std::optional<Schedule>> found(orders.size());
  std::atomic<int64_t> cells{0};
  auto hit = first_hit(orders.size(), options.parallel, [&](size_t i) {
    std::vector<int> order = orders[i];
    JitDpContext ctx = make_jit_context(inst, order);
    JitCcTable table = fill_jit_cc_table(ctx, max_e);
    cells.fetch_add(static_cast<int64_t>(ctx.n + 2) * (max_e + 1) * (ctx.k + 1));
    if (table.value[ctx.n + 1][max_e][ctx.k] > inst.a2) return false;

    // Walk parents back from the accepting state.
    std::vector<std::tuple<int, int, int>> edges;
    int b = ctx.n + 1, e = max_e, l = ctx.k;
    while (b != 0) {
      JitCcState s = table.parent[b][e][l];
      edges.push_back({b, s.l, l});
      b = s.a;
      e = s.e;
      l = s.l;
    }
    std::reverse(edges.begin(), edges.end());
    PathAssembly path = assemble_path(ctx, edges);
    append_missing(inst, path.sequence);
    auto schedule = normalize_left_shift(inst, path.sequence, path.designated);
    if (!schedule || !is_feasible_schedule(*schedule, inst)) return false;
    found[i] = std::move(*schedule);
    return true;
  });

  if (hit) {
    out.feasible = true;
    out.witness = std::move(found[*hit]);
  }
  out.stats.subproblems = static_cast<int64_t>(orders.size());
  out.stats.nodes = cells.load();
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SolveOutcome solve_we_wu(const Instance& inst, const SolveOptions& options) {
  require(inst.crit1.kind == CriterionKind::WeightedJitCount &&
              inst.crit2.kind == CriterionKind::WeightedTardyCount,
          "solve_we_wu: needs JIT count vs tardy count");
  for (const Job& j : inst.jobs1) require(j.d.has_value(), "solve_we_wu: due dates required");
  for (const Job& j : inst.jobs2) require(j.d.has_value(), "solve_we_wu: due dates required");

  const auto t0 = std::chrono::steady_clock::now();
  const int k = inst.k();

  // Candidate early sets with tardy complement light enough for the bound.
  std::vector<uint32_t> masks;
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    int64_t tardy_weight = 0;
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) tardy_weight = checked_add(tardy_weight, inst.jobs2[j].w);
    }
    if (tardy_weight <= inst.a2) masks.push_back(mask);
  }

  std::vector<std::optional<Schedule>> found(masks.size());
  std::atomic<int64_t> cells{0};
  auto hit = first_hit(masks.size(), options.parallel, [&](size_t i) {
    const uint32_t mask = masks[i];
    std::vector<int> early_idx;
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) early_idx.push_back(j);
    }
    std::sort(early_idx.begin(), early_idx.end(), [&](int a, int b) {
      if (*inst.jobs2[a].d != *inst.jobs2[b].d) return *inst.jobs2[a].d < *inst.jobs2[b].d;
      return inst.jobs2[a].id < inst.jobs2[b].id;
    });

    auto try_order = [&](const std::vector<int>& order) {
      JitDpContext ctx = make_jit_context(inst, order);
      JitWuTable table = fill_jit_wu_table(ctx);
      cells.fetch_add(static_cast<int64_t>(ctx.n + 2) * (ctx.k + 1));
      if (table.value[ctx.n + 1][ctx.k] < inst.a1) return false;

      std::vector<std::tuple<int, int, int>> edges;
      int b = ctx.n + 1, l = ctx.k;
      while (b != 0) {
        auto [a, lp] = table.parent[b][l];
        edges.push_back({b, lp, l});
        b = a;
        l = lp;
      }
      std::reverse(edges.begin(), edges.end());
      PathAssembly path = assemble_path(ctx, edges);
      append_missing(inst, path.sequence);
      auto schedule = normalize_left_shift(inst, path.sequence, path.designated);
      if (!schedule || !is_feasible_schedule(*schedule, inst)) return false;
      found[i] = std::move(*schedule);
      return true;
    };

    // The gap packing consumes the sequence in prefix order, so the relative
    // order of equal-due-date early jobs is load-bearing (a long job may only
    // fit an early gap, or only the short one may stay on time). Enumerate
    // every order consistent with non-decreasing due dates.
    std::function<bool(size_t)> permute_ties = [&](size_t from) -> bool {
      if (from >= early_idx.size()) return try_order(early_idx);
      size_t to = from + 1;
      while (to < early_idx.size() &&
             *inst.jobs2[early_idx[to]].d == *inst.jobs2[early_idx[from]].d) {
        ++to;
      }
      std::vector<int> group(early_idx.begin() + from, early_idx.begin() + to);
      do {
        std::copy(group.begin(), group.end(), early_idx.begin() + from);
        if (permute_ties(to)) return true;
      } while (std::next_permutation(group.begin(), group.end()));
      std::sort(early_idx.begin() + from, early_idx.begin() + to);
      return false;
    };
    return permute_ties(0);
  });

  SolveOutcome out;
  if (hit) {
    out.feasible = true;
    out.witness = std::move(found[*hit]);
  }
  out.stats.subproblems = static_cast<int64_t>(masks.size());
  out.stats.nodes = cells.load();
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SolveOutcome solve_we_we(const Instance& inst, const SolveOptions& options) {
  require(inst.crit1.kind == CriterionKind::WeightedJitCount &&
              inst.crit2.kind == CriterionKind::WeightedJitCount,
          "solve_we_we: needs JIT counts on both agents");
  for (const Job& j : inst.jobs1) require(j.d.has_value(), "solve_we_we: due dates required");
  for (const Job& j : inst.jobs2) require(j.d.has_value(), "solve_we_we: due dates required");

  const auto t0 = std::chrono::steady_clock::now();
  const int n = inst.n();
  const int k = inst.k();

  // Agent-1 JIT windows, sorted by end once; per-candidate exclusion masks
  // reuse the same order.
  std::vector<int> a1_jobs;  // instance indices with a usable window
  for (int i = 0; i < n; ++i) {
    if (inst.jobs1[i].jit_possible()) a1_jobs.push_back(i);
  }
  const int m = static_cast<int>(a1_jobs.size());
  std::vector<int64_t> w_start(m), w_end(m), w_weight(m);
  std::vector<int> sorted(m);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    const Job &ja = inst.jobs1[a1_jobs[a]], &jb = inst.jobs1[a1_jobs[b]];
    if (*ja.d != *jb.d) return *ja.d < *jb.d;
    return *ja.d - ja.p < *jb.d - jb.p;
  });
  {
    std::vector<int> remap(m);
    for (int i = 0; i < m; ++i) remap[i] = a1_jobs[sorted[i]];
    a1_jobs = std::move(remap);
  }
  for (int i = 0; i < m; ++i) {
    const Job& j = inst.jobs1[a1_jobs[i]];
    w_start[i] = *j.d - j.p;
    w_end[i] = *j.d;
    w_weight[i] = j.w;
  }
  std::vector<int> pred(m);
  for (int i = 0; i < m; ++i) {
    pred[i] = static_cast<int>(
        std::upper_bound(w_end.begin(), w_end.begin() + i, w_start[i]) - w_end.begin());
  }

  // Agent-2 windows: pairwise conflicts and per-job agent-1 exclusion lists.
  std::vector<std::optional<JitInterval>> window2(k);
  std::vector<uint32_t> conflict(k, 0);
  std::vector<std::vector<int>> excludes(k);  // sorted-agent-1 positions hit
  int64_t full_weight2 = 0;
  for (int j = 0; j < k; ++j) {
    window2[j] = jit_interval(inst.jobs2[j], {2, j});
    full_weight2 = checked_add(full_weight2, inst.jobs2[j].w);
    if (!window2[j]) continue;
    for (int j2 = 0; j2 < j; ++j2) {
      if (!window2[j2]) continue;
      if (window2[j]->start < window2[j2]->end && window2[j2]->start < window2[j]->end) {
        conflict[j] |= 1u << j2;
        conflict[j2] |= 1u << j;
      }
    }
    // Agent-1 windows overlapping this one: a contiguous range in end-sorted
    // order is not guaranteed, so scan with an early cut on window ends.
    for (int i = 0; i < m; ++i) {
      if (w_start[i] < window2[j]->end && window2[j]->start < w_end[i]) {
        excludes[j].push_back(i);
      }
    }
  }

  struct Candidate {
    uint32_t mask;
    int64_t excluded_estimate;
  };
  std::vector<Candidate> candidates;
  int64_t scanned = 0;
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    ++scanned;
    int64_t weight = 0;
    int64_t excluded = 0;
    bool valid = true;
    for (int j = 0; j < k && valid; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!window2[j] || (conflict[j] & mask)) valid = false;
      if (valid) {
        weight = checked_add(weight, inst.jobs2[j].w);
        excluded += static_cast<int64_t>(excludes[j].size());
      }
    }
    if (valid && weight >= inst.a2) candidates.push_back({mask, excluded});
  }
  // Fewer blocked agent-1 windows first: those candidates leave the most
  // JIT weight available, so a feasible instance tends to hit early.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.excluded_estimate < b.excluded_estimate;
                   });

  // Reusable exclusion stamps and DP arrays for the per-candidate pass.
  std::vector<int> stamp(m, -1);
  std::vector<int64_t> best(m + 1, 0);
  std::mutex wis_mutex;

  std::vector<std::optional<Schedule>> found(candidates.size());
  std::atomic<int64_t> wis_runs{0};
  auto evaluate = [&](size_t ci) {
    const uint32_t mask = candidates[ci].mask;
    wis_runs.fetch_add(1);
    std::unique_lock<std::mutex> lock(wis_mutex);  // shared scratch arrays
    const int generation = static_cast<int>(ci);
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) {
        for (int pos : excludes[j]) stamp[pos] = generation;
      }
    }
    best[0] = 0;
    for (int i = 0; i < m; ++i) {
      int64_t take = stamp[i] == generation
                         ? std::numeric_limits<int64_t>::min()
                         : checked_add(w_weight[i], best[pred[i]]);
      best[i + 1] = std::max(best[i], take);
    }
    if (best[m] < inst.a1) return false;

    // Reconstruct the chosen agent-1 windows.
    std::vector<int> chosen;
    int i = m;
    while (i > 0) {
      if (best[i] == best[i - 1]) {
        --i;
      } else {
        chosen.push_back(i - 1);
        i = pred[i - 1];
      }
    }

    Schedule schedule;
    int64_t horizon = 0;
    std::vector<bool> used1(inst.jobs1.size(), false), used2(inst.jobs2.size(), false);
    for (int pos : chosen) {
      schedule.entries.push_back({{1, a1_jobs[pos]}, w_start[pos]});
      used1[a1_jobs[pos]] = true;
      horizon = std::max(horizon, w_end[pos]);
    }
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) {
        schedule.entries.push_back({{2, j}, window2[j]->start});
        used2[j] = true;
        horizon = std::max(horizon, window2[j]->end);
      }
    }
    for (int agent : {1, 2}) {
      auto& used = agent == 1 ? used1 : used2;
      for (size_t idx = 0; idx < used.size(); ++idx) {
        if (used[idx]) continue;
        schedule.entries.push_back({{agent, static_cast<int>(idx)}, horizon});
        horizon = checked_add(horizon, inst.jobs(agent)[idx].p);
      }
    }
    if (!is_feasible_schedule(schedule, inst)) return false;
    found[ci] = std::move(schedule);
    return true;
  };

  auto hit = first_hit(candidates.size(), options.parallel, evaluate);

  SolveOutcome out;
  if (hit) {
    out.feasible = true;
    out.witness = std::move(found[*hit]);
  }
  out.stats.subproblems = scanned;
  out.stats.nodes = wis_runs.load();
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace tas
