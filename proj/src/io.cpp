#include "tas/io.hpp"

#include <json.hpp>

namespace tas {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw std::invalid_argument(path + ": " + why);
}

int64_t get_nonneg_int(const json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<int64_t>() < 0) {
    fail(path, "must be a non-negative integer");
  }
  return node.get<int64_t>();
}

CriterionKind parse_kind(const json& node, const std::string& path) {
  if (!node.is_string()) fail(path, "must be a criterion name string");
  const std::string s = node.get<std::string>();
  for (CriterionKind kind : {CriterionKind::TotalWeightedCompletion,
                             CriterionKind::WeightedTardyCount,
                             CriterionKind::WeightedJitCount}) {
    if (s == criterion_kind_name(kind)) return kind;
  }
  fail(path, "unknown criterion kind '" + s + "'");
}

std::vector<Job> parse_jobs(const json& node, int agent, const std::string& path) {
  if (!node.is_array()) fail(path, "must be an array of jobs");
  std::vector<Job> jobs;
  for (size_t i = 0; i < node.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const json& item = node[i];
    if (!item.is_object()) fail(at, "must be an object");
    for (auto it = item.begin(); it != item.end(); ++it) {
      if (it.key() != "p" && it.key() != "w" && it.key() != "d") {
        fail(at + "." + it.key(), "unknown field");
      }
    }
    Job job;
    job.id = static_cast<int>(i);
    job.agent = agent;
    if (!item.contains("p")) fail(at + ".p", "required");
    job.p = get_nonneg_int(item["p"], at + ".p");
    if (item.contains("w")) job.w = get_nonneg_int(item["w"], at + ".w");
    if (item.contains("d")) job.d = get_nonneg_int(item["d"], at + ".d");
    jobs.push_back(job);
  }
  return jobs;
}

}  // namespace

ParsedDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("document: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "must be a JSON object");

  ParsedDocument out;
  if (!doc.contains("criteria")) fail("criteria", "required");
  const json& crit = doc["criteria"];
  for (int agent : {1, 2}) {
    const std::string path = std::string("criteria.agent") + (agent == 1 ? "1" : "2");
    if (!crit.contains(agent == 1 ? "agent1" : "agent2")) fail(path, "required");
    const json& node = crit[agent == 1 ? "agent1" : "agent2"];
    if (!node.is_object()) fail(path, "must be an object");
    if (!node.contains("kind")) fail(path + ".kind", "required");
    if (!node.contains("bound")) fail(path + ".bound", "required");
    Criterion c{parse_kind(node["kind"], path + ".kind")};
    int64_t bound = get_nonneg_int(node["bound"], path + ".bound");
    if (agent == 1) {
      out.instance.crit1 = c;
      out.instance.a1 = bound;
    } else {
      out.instance.crit2 = c;
      out.instance.a2 = bound;
    }
  }
  if (!doc.contains("jobs1")) fail("jobs1", "required");
  if (!doc.contains("jobs2")) fail("jobs2", "required");
  out.instance.jobs1 = parse_jobs(doc["jobs1"], 1, "jobs1");
  out.instance.jobs2 = parse_jobs(doc["jobs2"], 2, "jobs2");

  if (doc.contains("expected")) {
    const json& e = doc["expected"];
    if (!e.is_string() || (e != "feasible" && e != "infeasible")) {
      fail("expected", "must be \"feasible\" or \"infeasible\"");
    }
    out.expected = e == "feasible";
  }
  validate_instance(out.instance);
  return out;
}

Instance parse_instance_document(const std::string& text) {
  return parse_document(text).instance;
}

std::string serialize_instance(const Instance& inst, std::optional<bool> expected) {
  json doc;
  doc["criteria"]["agent1"] = {{"kind", criterion_kind_name(inst.crit1.kind)},
                               {"bound", inst.a1}};
  doc["criteria"]["agent2"] = {{"kind", criterion_kind_name(inst.crit2.kind)},
                               {"bound", inst.a2}};
  for (int agent : {1, 2}) {
    json arr = json::array();
    for (const Job& j : inst.jobs(agent)) {
      json item;
      item["p"] = j.p;
      if (j.w != 1) item["w"] = j.w;
      if (j.d) item["d"] = *j.d;
      arr.push_back(item);
    }
    doc[agent == 1 ? "jobs1" : "jobs2"] = arr;
  }
  if (expected) doc["expected"] = verdict_name(*expected);
  return doc.dump(2) + "\n";
}

const char* verdict_name(bool feasible) { return feasible ? "feasible" : "infeasible"; }

uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int64_t SplitMix64::range(int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("SplitMix64::range: empty range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int64_t>(next() % span);
}

Instance random_instance(const RandomSpec& spec) {
  SplitMix64 rng(spec.seed);
  Instance inst;
  inst.crit1 = {spec.crit1};
  inst.crit2 = {spec.crit2};

  for (int agent : {1, 2}) {
    const int count = agent == 1 ? spec.n : spec.k;
    const bool unit_w = agent == 1 ? spec.unit_w1 : spec.unit_w2;
    const bool unit_p = agent == 1 ? spec.unit_p1 : spec.unit_p2;
    auto& jobs = agent == 1 ? inst.jobs1 : inst.jobs2;
    for (int i = 0; i < count; ++i) {
      Job j;
      j.id = i;
      j.agent = agent;
      j.p = unit_p ? 1 : rng.range(1, spec.max_p);
      j.w = unit_w ? 1 : rng.range(1, spec.max_w);
      jobs.push_back(j);
    }
  }
  const int64_t total_p = std::max<int64_t>(inst.total_p(), 1);
  int64_t max_value1 = 0, max_value2 = 0;
  for (int agent : {1, 2}) {
    auto& jobs = agent == 1 ? inst.jobs1 : inst.jobs2;
    const Criterion& crit = agent == 1 ? inst.crit1 : inst.crit2;
    int64_t& max_value = agent == 1 ? max_value1 : max_value2;
    for (Job& j : jobs) {
      if (crit.needs_due_dates()) j.d = rng.range(1, total_p);
      max_value = checked_add(
          max_value, crit.kind == CriterionKind::TotalWeightedCompletion
                         ? checked_mul(j.w, total_p)
                         : j.w);
    }
  }
  inst.a1 = rng.range(0, max_value1);
  inst.a2 = rng.range(0, max_value2);
  validate_instance(inst);
  return inst;
}

}  // namespace tas
