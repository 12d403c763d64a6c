#include "diamondpaths/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>

#include "diamondpaths/rng.hpp"
#include "diamondpaths/serialize.hpp"

#ifdef DIAMONDPATHS_HAVE_OPENMP
#include <omp.h>
#endif

namespace diamondpaths {

int scan_thread_count() {
  if (const char* env = std::getenv("DIAMONDPATHS_THREADS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end && *end == '\0' && value > 0) return static_cast<int>(value);
  }
#ifdef DIAMONDPATHS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

using nlohmann::json;

// Runs body(0..count-1). Bodies write into preallocated slots, so the
// aggregation below is identical for serial and parallel runs.
void scan_indices(std::int64_t count, ScanMode mode,
                  const std::function<void(std::int64_t)>& body) {
#ifdef DIAMONDPATHS_HAVE_OPENMP
  if (mode == ScanMode::parallel) {
    int threads = scan_thread_count();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    body(i);
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Zero-padded names keep lexicographic order equal to numeric order.
std::string vertex_name(int i, int width) {
  std::string digits = std::to_string(i);
  std::string pad(static_cast<size_t>(width) - digits.size(), '0');
  return "v" + pad + digits;
}

int name_width(int n) {
  int width = 1;
  for (int limit = 10; n > limit; limit *= 10) ++width;
  return width;
}

// One witness trial for the planted-instance harnesses.
struct TrialOutcome {
  bool attempted = false;
  bool passed = false;
  json counterexample;  // null when passed
};

json instance_json(const PlantedInstance& inst, const std::string& reason) {
  json j;
  j["reason"] = reason;
  j["seed"] = inst.seed;
  j["n"] = inst.graph.vertex_count();
  j["planted_k"] = inst.planted_k;
  j["graph"] = serialize_graph(inst.graph, GraphFormat::edge_list);
  return j;
}

Report run_witness_trials(const std::string& experiment, const Lemma1Params& params, int k,
                          ScanMode mode) {
  if (params.trials < 1) {
    throw precondition_error(experiment + ": trials must be >= 1");
  }
  if (params.n_min < k + 2) {
    throw precondition_error(experiment + ": n_min must be at least k + 2");
  }
  if (params.n_max < params.n_min) {
    throw precondition_error(experiment + ": n_max below n_min");
  }
  if (params.extra_fractions.empty()) {
    throw precondition_error(experiment + ": need at least one extra-edge fraction");
  }

  Timer timer;
  // Per-trial seeds come from one master stream, so trials are independent
  // of scheduling.
  std::vector<std::uint64_t> trial_seeds(static_cast<size_t>(params.trials));
  SplitMix64 master(params.seed);
  for (auto& s : trial_seeds) s = master.next();

  std::vector<TrialOutcome> outcomes(static_cast<size_t>(params.trials));
  scan_indices(params.trials, mode, [&](std::int64_t i) {
    TrialOutcome& slot = outcomes[static_cast<size_t>(i)];
    slot.attempted = true;
    SplitMix64 rng(trial_seeds[static_cast<size_t>(i)]);
    int n = params.n_min +
            static_cast<int>(rng.next_below(
                static_cast<std::uint64_t>(params.n_max - params.n_min + 1)));
    double extra = params.extra_fractions[static_cast<size_t>(i) % params.extra_fractions.size()];
    PlantedInstance inst = plant_paths_graph(rng.next(), n, k, extra);
    try {
      PathSystem measured = max_edge_disjoint_paths(inst.graph, inst.s, inst.t);
      if (measured.count() < k) {
        slot.counterexample = instance_json(
            inst, "precondition violation: measured edge connectivity " +
                      std::to_string(measured.count()) + " below planted " + std::to_string(k));
        return;
      }
      IndependentWitness w = k == 2 ? find_two_independent(inst.graph, inst.s, inst.t)
                                    : find_three_independent(inst.graph, inst.s, inst.t);
      std::string reason;
      if (w.u != inst.s) reason = "witness u differs from s";
      if (w.system.count() != k) {
        reason = "witness has " + std::to_string(w.system.count()) + " paths, expected " +
                 std::to_string(k);
      }
      Verdict verdict = check_path_system(inst.graph, w.system);
      if (!verdict.ok()) {
        reason = "invalid path system: " + verdict.failures.front();
      }
      if (reason.empty()) {
        slot.passed = true;
      } else {
        json ce = instance_json(inst, reason);
        ce["witness"] = witness_to_json(w);
        slot.counterexample = ce;
      }
    } catch (const std::exception& e) {
      slot.counterexample = instance_json(inst, std::string("exception: ") + e.what());
    }
  });

  Report report;
  report.experiment = experiment;
  report.seed = params.seed;
  report.params = {{"trials", params.trials},
                   {"k", k},
                   {"n_min", params.n_min},
                   {"n_max", params.n_max},
                   {"extra_fractions", params.extra_fractions}};
  for (std::int64_t i = 0; i < params.trials; ++i) {
    const TrialOutcome& slot = outcomes[static_cast<size_t>(i)];
    ++report.attempted;
    if (slot.passed) {
      ++report.passed;
    } else {
      json ce = slot.counterexample;
      ce["trial"] = i;
      report.counterexamples.push_back(std::move(ce));
    }
  }
  report.max_observed = report.passed > 0 ? k : 0;
  report.duration_ms = timer.ms();
  return report;
}

// Per-pair slot for the diamond all-pairs scan.
struct PairOutcome {
  int count = 0;
  int structural_bound = 0;
  bool fallback = false;
  std::string failure;  // empty when all checks held
};

struct PairScan {
  std::vector<std::pair<int, int>> pairs;
  std::vector<PairOutcome> outcomes;
  int max_count = 0;
  long long fallbacks = 0;
  json fallback_pairs = json::array();  // surfaced even when the cut is valid
};

PairScan scan_diamond_pairs(const DiamondGraph& d, ScanMode mode, bool with_flow) {
  const Graph& g = d.graph;
  PairScan scan;
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (int j = i + 1; j < g.vertex_count(); ++j) {
      scan.pairs.emplace_back(i, j);
    }
  }
  scan.outcomes.resize(scan.pairs.size());

  scan_indices(static_cast<std::int64_t>(scan.pairs.size()), mode, [&](std::int64_t idx) {
    PairOutcome& slot = scan.outcomes[static_cast<size_t>(idx)];
    const VertexId& u = g.id_of(scan.pairs[static_cast<size_t>(idx)].first);
    const VertexId& v = g.id_of(scan.pairs[static_cast<size_t>(idx)].second);
    try {
      UpperBoundCertificate structural = structural_upper_bound(d.hierarchy, g, u, v);
      slot.structural_bound = structural.bound;
      slot.fallback = structural.fallback;
      if (structural.bound > 3) {
        slot.failure = "structural bound " + std::to_string(structural.bound) + " exceeds 3";
        return;
      }
      Verdict cut_check = verify_cut(g, u, v, structural);
      if (!cut_check.ok()) {
        slot.failure = "structural certificate invalid: " + cut_check.failures.front();
        return;
      }
      if (!with_flow) return;

      IndependentResult flow = max_independent_paths(g, u, v);
      slot.count = flow.system.count();
      if (slot.count > 3) {
        slot.failure = std::to_string(slot.count) + " independent paths found";
        return;
      }
      if (slot.count > structural.bound) {
        slot.failure = "flow count " + std::to_string(slot.count) +
                       " exceeds structural bound " + std::to_string(structural.bound);
        return;
      }
      Verdict system_check = check_path_system(g, flow.system);
      if (!system_check.ok()) {
        slot.failure = "flow path system invalid: " + system_check.failures.front();
        return;
      }
      Verdict flow_cut_check = verify_cut(g, u, v, flow.certificate);
      if (!flow_cut_check.ok()) {
        slot.failure = "flow certificate invalid: " + flow_cut_check.failures.front();
        return;
      }
      if (!g.adjacent(u, v) && flow.certificate.bound != slot.count) {
        slot.failure = "Menger equality violated: count " + std::to_string(slot.count) +
                       ", cut size " + std::to_string(flow.certificate.bound);
        return;
      }
    } catch (const std::exception& e) {
      slot.failure = std::string("exception: ") + e.what();
    }
  });

  for (size_t i = 0; i < scan.outcomes.size(); ++i) {
    scan.max_count = std::max(scan.max_count, scan.outcomes[i].count);
    if (scan.outcomes[i].fallback) {
      ++scan.fallbacks;
      scan.fallback_pairs.push_back(
          {g.id_of(scan.pairs[i].first), g.id_of(scan.pairs[i].second)});
    }
  }
  return scan;
}

}  // namespace

PlantedInstance plant_paths_graph(std::uint64_t seed, int n, int k, double extra_edge_fraction) {
  if (k < 1) {
    throw precondition_error("plant_paths_graph: k must be >= 1");
  }
  if (n < k + 2) {
    throw precondition_error("plant_paths_graph: need n >= k + 2, got n = " + std::to_string(n));
  }
  if (extra_edge_fraction < 0.0 || extra_edge_fraction > 1.0) {
    throw precondition_error("plant_paths_graph: extra_edge_fraction must be in [0,1]");
  }

  PlantedInstance inst;
  inst.s = "s";
  inst.t = "t";
  inst.planted_k = k;
  inst.seed = seed;

  int interior = n - 2;
  int width = name_width(interior);
  std::vector<VertexId> names;
  for (int i = 0; i < interior; ++i) names.push_back(vertex_name(i, width));

  // k internally disjoint s-t paths over consecutive interior blocks, sized
  // as evenly as possible (first (n-2) mod k paths get one extra vertex).
  std::vector<std::pair<VertexId, VertexId>> edges;
  int base = interior / k;
  int extra_verts = interior % k;
  int cursor = 0;
  for (int p = 0; p < k; ++p) {
    int len = base + (p < extra_verts ? 1 : 0);
    VertexId prev = inst.s;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, names[static_cast<size_t>(cursor)]);
      prev = names[static_cast<size_t>(cursor)];
      ++cursor;
    }
    edges.emplace_back(prev, inst.t);
  }

  Graph planted = Graph::build(edges);
  if (extra_edge_fraction > 0.0) {
    SplitMix64 rng(seed);
    const auto& verts = planted.vertices();
    for (size_t i = 0; i < verts.size(); ++i) {
      for (size_t j = i + 1; j < verts.size(); ++j) {
        if (planted.adjacent(verts[i], verts[j])) continue;
        if (rng.next_double() < extra_edge_fraction) {
          edges.emplace_back(verts[i], verts[j]);
        }
      }
    }
    planted = Graph::build(edges);
  }
  inst.graph = std::move(planted);
  return inst;
}

Graph random_graph(std::uint64_t seed, int n, double edge_prob) {
  if (n < 1) {
    throw precondition_error("random_graph: n must be >= 1");
  }
  int width = name_width(n);
  std::vector<VertexId> names;
  for (int i = 0; i < n; ++i) names.push_back(vertex_name(i, width));
  SplitMix64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_double() < edge_prob) {
        edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(j)]);
      }
    }
  }
  return Graph::build(edges, names);
}

std::string serialize_report(const Report& r) {
  json j;
  j["experiment"] = r.experiment;
  j["params"] = r.params;
  j["attempted"] = r.attempted;
  j["passed"] = r.passed;
  j["max_observed"] = r.max_observed;
  j["fallbacks"] = r.fallbacks;
  j["counterexamples"] = r.counterexamples;
  j["seed"] = r.seed;
  for (const auto& [key, value] : r.details.items()) {
    j[key] = value;
  }
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  try {
    json j = json::parse(text);
    Report r;
    r.experiment = j.at("experiment").get<std::string>();
    r.params = j.at("params");
    r.attempted = j.at("attempted").get<long long>();
    r.passed = j.at("passed").get<long long>();
    r.max_observed = j.at("max_observed").get<long long>();
    r.fallbacks = j.at("fallbacks").get<long long>();
    r.counterexamples = j.at("counterexamples");
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [key, value] : j.items()) {
      if (key != "experiment" && key != "params" && key != "attempted" && key != "passed" &&
          key != "max_observed" && key != "fallbacks" && key != "counterexamples" &&
          key != "seed") {
        r.details[key] = value;
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid report document: ") + e.what());
  }
}

Report verify_lemma1(const Lemma1Params& params, ScanMode mode) {
  return run_witness_trials("lemma1", params, 3, mode);
}

Report verify_two_path(const Lemma1Params& params, ScanMode mode) {
  return run_witness_trials("two-path", params, 2, mode);
}

Report verify_lemma2(int p, ScanMode mode, int max_order) {
  if (max_order > 4) {
    throw precondition_error("verify_lemma2: all-pairs scans are capped at order 4");
  }
  if (p < 0 || p > max_order) {
    throw precondition_error("verify_lemma2: order " + std::to_string(p) +
                             " outside the all-pairs guard (max " + std::to_string(max_order) +
                             ")");
  }
  Timer timer;
  DiamondGraph d = generate_diamond(p);
  PairScan scan = scan_diamond_pairs(d, mode, /*with_flow=*/true);

  Report report;
  report.experiment = "lemma2";
  report.params = {{"order", p}};
  report.seed = 0;
  report.attempted = static_cast<long long>(scan.pairs.size());
  report.max_observed = scan.max_count;
  report.fallbacks = scan.fallbacks;
  report.details["fallback_pairs"] = scan.fallback_pairs;
  for (size_t i = 0; i < scan.pairs.size(); ++i) {
    const auto& slot = scan.outcomes[i];
    if (slot.failure.empty()) {
      ++report.passed;
    } else {
      json ce;
      ce["u"] = d.graph.id_of(scan.pairs[i].first);
      ce["v"] = d.graph.id_of(scan.pairs[i].second);
      ce["reason"] = slot.failure;
      report.counterexamples.push_back(std::move(ce));
    }
  }
  report.duration_ms = timer.ms();
  return report;
}

Report f_table(int k_max, ScanMode mode, int scan_limit) {
  if (k_max < 1) {
    throw precondition_error("f_table: k_max must be >= 1");
  }
  if (scan_limit > 4) {
    throw precondition_error("f_table: flow scans are capped at order 4");
  }
  Timer timer;

  Report report;
  report.experiment = "f-table";
  report.seed = 0;  // rows embed their own instance seeds
  report.params = {{"k_max", k_max}, {"scan_limit", scan_limit}};
  report.details["fallback_pairs"] = json::array();

  // Diamond scans are shared between rows with the same order.
  std::map<int, std::pair<std::string, int>> upper_cache;  // order -> (mode, max)
  json rows = json::array();
  for (int k = 1; k <= k_max; ++k) {
    ++report.attempted;
    json row;
    row["k"] = k;
    std::string reason;

    int witness_paths = 0;
    std::uint64_t instance_seed = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(k);
    try {
      int expected = std::min(k, 3);
      int n = std::max(8, 2 * expected + 2);
      PlantedInstance inst = plant_paths_graph(instance_seed, n, expected, 0.0);
      IndependentWitness w;
      if (expected == 1) {
        PathSystem one = max_edge_disjoint_paths(inst.graph, inst.s, inst.t);
        w.u = inst.s;
        w.v = inst.t;
        w.system.source = inst.s;
        w.system.sink = inst.t;
        w.system.kind = PathKind::independent;
        w.system.paths.push_back(one.paths.at(0));
      } else if (expected == 2) {
        w = find_two_independent(inst.graph, inst.s, inst.t);
      } else {
        w = find_three_independent(inst.graph, inst.s, inst.t);
      }
      Verdict verdict = check_path_system(inst.graph, w.system);
      if (!verdict.ok()) {
        reason = "lower-bound witness invalid: " + verdict.failures.front();
      } else if (w.system.count() != expected) {
        reason = "lower-bound witness has wrong path count";
      }
      witness_paths = w.system.count();
    } catch (const std::exception& e) {
      reason = std::string("lower-bound witness failed: ") + e.what();
    }
    row["witness_paths"] = witness_paths;
    row["witness_seed"] = instance_seed;

    // Upper bound: the diamond graph of the smallest order with 2^p >= k.
    int p = 0;
    while ((std::int64_t{1} << p) < k) ++p;
    if (p > 5) {
      throw precondition_error("f_table: k = " + std::to_string(k) +
                               " needs a diamond of order " + std::to_string(p) +
                               "; all-pairs certification is capped at order 5 (k_max 32)");
    }
    row["order"] = p;
    auto cached = upper_cache.find(p);
    if (cached == upper_cache.end()) {
      try {
        DiamondGraph d = generate_diamond(p);
        PathSystem st = max_edge_disjoint_paths(d.graph, "s", "t");
        if (st.count() != (std::int64_t{1} << p)) {
          reason = "diamond s-t edge connectivity mismatch";
        }
        bool with_flow = p <= scan_limit;
        PairScan scan = scan_diamond_pairs(d, mode, with_flow);
        int upper = 0;
        for (size_t i = 0; i < scan.outcomes.size(); ++i) {
          if (!scan.outcomes[i].failure.empty() && reason.empty()) {
            reason = "diamond scan failure: " + scan.outcomes[i].failure;
          }
          upper = std::max(upper,
                           with_flow ? scan.outcomes[i].count : scan.outcomes[i].structural_bound);
        }
        report.fallbacks += scan.fallbacks;
        for (const auto& pair : scan.fallback_pairs) {
          json entry = pair;
          entry.push_back("order " + std::to_string(p));
          report.details["fallback_pairs"].push_back(std::move(entry));
        }
        cached = upper_cache
                     .emplace(p, std::make_pair(with_flow ? "flow-scan" : "structural-only",
                                                upper))
                     .first;
      } catch (const std::exception& e) {
        reason = std::string("diamond scan failed: ") + e.what();
        cached = upper_cache.emplace(p, std::make_pair(std::string("failed"), -1)).first;
      }
    }
    row["upper_mode"] = cached->second.first;
    row["upper_bound"] = cached->second.second;

    int expected_f = std::min(k, 3);
    if (reason.empty() && witness_paths != expected_f) {
      reason = "witness count does not match the formula";
    }
    if (reason.empty() && cached->second.second != expected_f) {
      reason = "upper bound does not match the formula";
    }
    row["f"] = expected_f;
    if (reason.empty()) {
      ++report.passed;
    } else {
      json ce;
      ce["k"] = k;
      ce["reason"] = reason;
      report.counterexamples.push_back(std::move(ce));
    }
    report.max_observed = std::max(report.max_observed, static_cast<long long>(witness_paths));
    rows.push_back(std::move(row));
  }
  report.details["rows"] = std::move(rows);
  report.duration_ms = timer.ms();
  return report;
}

Report verify_oracle_equivalence(int graphs, std::uint64_t seed, int n_max, double edge_prob,
                                 ScanMode mode) {
  if (graphs < 1) {
    throw precondition_error("verify_oracle_equivalence: need at least one graph");
  }
  if (n_max < 2 || n_max > 12) {
    throw precondition_error("verify_oracle_equivalence: n_max must be in 2..12");
  }
  Timer timer;

  std::vector<std::uint64_t> graph_seeds(static_cast<size_t>(graphs));
  SplitMix64 master(seed);
  for (auto& s : graph_seeds) s = master.next();

  struct Slot {
    long long pairs_checked = 0;
    long long menger_checked = 0;
    std::string failure;
    int max_count = 0;
  };
  std::vector<Slot> slots(static_cast<size_t>(graphs));

  scan_indices(graphs, mode, [&](std::int64_t gi) {
    Slot& slot = slots[static_cast<size_t>(gi)];
    SplitMix64 rng(graph_seeds[static_cast<size_t>(gi)]);
    int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_max - 1)));
    Graph g = random_graph(rng.next(), n, edge_prob);
    try {
      const auto& verts = g.vertices();
      for (size_t i = 0; i < verts.size() && slot.failure.empty(); ++i) {
        for (size_t j = i + 1; j < verts.size() && slot.failure.empty(); ++j) {
          IndependentResult flow = max_independent_paths(g, verts[i], verts[j]);
          int expected = oracle_max_independent(g, verts[i], verts[j]);
          ++slot.pairs_checked;
          slot.max_count = std::max(slot.max_count, flow.system.count());
          if (flow.system.count() != expected) {
            slot.failure = "flow " + std::to_string(flow.system.count()) + " != oracle " +
                           std::to_string(expected) + " for " + verts[i] + "," + verts[j] +
                           " (graph seed " + std::to_string(graph_seeds[static_cast<size_t>(gi)]) +
                           ")";
            break;
          }
          Verdict v = check_path_system(g, flow.system);
          if (!v.ok()) {
            slot.failure = "invalid path system: " + v.failures.front();
            break;
          }
          Verdict c = verify_cut(g, verts[i], verts[j], flow.certificate);
          if (!c.ok()) {
            slot.failure = "invalid certificate: " + c.failures.front();
            break;
          }
          if (!g.adjacent(verts[i], verts[j])) {
            ++slot.menger_checked;
            if (flow.certificate.bound != flow.system.count()) {
              slot.failure = "Menger equality violated for " + verts[i] + "," + verts[j];
              break;
            }
          }
        }
      }
    } catch (const std::exception& e) {
      slot.failure = std::string("exception: ") + e.what();
    }
  });

  Report report;
  report.experiment = "oracle-equivalence";
  report.seed = seed;
  report.params = {{"graphs", graphs}, {"n_max", n_max}, {"edge_prob", edge_prob}};
  long long pairs = 0;
  long long menger = 0;
  for (int gi = 0; gi < graphs; ++gi) {
    const Slot& slot = slots[static_cast<size_t>(gi)];
    ++report.attempted;
    pairs += slot.pairs_checked;
    menger += slot.menger_checked;
    report.max_observed = std::max(report.max_observed, static_cast<long long>(slot.max_count));
    if (slot.failure.empty()) {
      ++report.passed;
    } else {
      json ce;
      ce["graph_index"] = gi;
      ce["reason"] = slot.failure;
      report.counterexamples.push_back(std::move(ce));
    }
  }
  report.details["pairs_checked"] = pairs;
  report.details["menger_pairs_checked"] = menger;
  report.duration_ms = timer.ms();
  return report;
}

}  // namespace diamondpaths
