// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "diamondpaths/connectivity.hpp"
#include "diamondpaths/construct.hpp"
#include "diamondpaths/diamond.hpp"
#include "diamondpaths/experiments.hpp"
#include "diamondpaths/serialize.hpp"

using namespace diamondpaths;

namespace {

int failures = 0;

struct Timed {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void criterion(int num, const std::string& what, bool ok, double ms, double limit_ms,
               const std::string& detail = "") {
  bool in_time = ms <= limit_ms;
  bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s (%.0f ms, limit %.0f ms)%s%s\n", pass ? "PASS" : "FAIL", num,
              what.c_str(), ms, limit_ms, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

// Fixed seeds for the randomized criteria.
constexpr std::uint64_t kLemma1Seed = 1001;
constexpr std::uint64_t kTwoPathSeed = 1002;
constexpr std::uint64_t kOracleSeed = 1003;

Lemma1Params lemma1_params() {
  Lemma1Params p;
  p.trials = 1000;
  p.seed = kLemma1Seed;
  p.n_min = 5;
  p.n_max = 60;
  p.extra_fractions = {0.0, 0.05, 0.2};
  return p;
}

Lemma1Params two_path_params() {
  Lemma1Params p;
  p.trials = 500;
  p.seed = kTwoPathSeed;
  p.n_min = 4;
  p.n_max = 60;
  p.extra_fractions = {0.0, 0.05, 0.2};
  return p;
}

}  // namespace

int main() {
  std::map<std::string, std::string> first_bytes;  // for the determinism re-run

  // 1. Diamond counts, p = 0..6.
  {
    Timed t;
    bool ok = true;
    std::ostringstream detail;
    for (int p = 0; p <= 6 && ok; ++p) {
      DiamondGraph d = generate_diamond(p);
      DiamondCounts c = diamond_counts(p);
      std::int64_t want_edges = 1;
      for (int i = 0; i < p; ++i) want_edges *= 4;
      std::int64_t want_verts = (2 * want_edges + 4) / 3;
      if (d.graph.vertex_count() != want_verts || d.graph.edge_count() != want_edges ||
          c.vertices != want_verts || c.edges != want_edges) {
        ok = false;
        detail << "mismatch at p=" << p;
      }
    }
    criterion(1, "diamond counts match (2*4^p+4)/3 vertices and 4^p edges for p=0..6", ok, t.ms(),
              5000, detail.str());
  }

  // 2. Edge-disjoint connectivity on diamonds, p = 0..5.
  {
    Timed t;
    bool ok = true;
    std::ostringstream detail;
    for (int p = 0; p <= 5 && ok; ++p) {
      DiamondGraph d = generate_diamond(p);
      PathSystem ps = max_edge_disjoint_paths(d.graph, "s", "t");
      if (ps.count() != (1 << p)) {
        ok = false;
        detail << "p=" << p << ": got " << ps.count() << " paths, want " << (1 << p);
        break;
      }
      Verdict v = check_path_system(d.graph, ps);
      if (!v.ok()) {
        ok = false;
        detail << "p=" << p << ": " << v.failures.front();
      }
    }
    criterion(2, "max_edge_disjoint_paths(G_p, s, t) returns exactly 2^p valid paths for p=0..5",
              ok, t.ms(), 10000, detail.str());
  }

  // 3 + 4. Lemma 2 scans for p in {1,2,3} and their structural certificates.
  {
    Timed t;
    bool ok = true;
    long long fallbacks = 0;
    std::ostringstream detail;
    const long long want_max[4] = {0, 2, 3, 3};
    for (int p = 1; p <= 3; ++p) {
      Report r = verify_lemma2(p);
      first_bytes["lemma2-" + std::to_string(p)] = serialize_report(r);
      fallbacks += r.fallbacks;
      if (!r.ok() || r.max_observed != want_max[p]) {
        ok = false;
        detail << "p=" << p << ": max " << r.max_observed << ", "
               << r.counterexamples.size() << " counterexamples";
        break;
      }
    }
    double ms = t.ms();
    criterion(3, "all-pairs independent maxima on G_1,G_2,G_3 are 2,3,3 with no pair above 3", ok,
              ms, 60000, detail.str());
    std::ostringstream fb;
    fb << fallbacks << " fallback certificates";
    criterion(4,
              "every structural certificate in the scans is valid, bounds <= 3, dominates the "
              "flow count, zero fallbacks",
              ok && fallbacks == 0, ms, 60000, fb.str());
  }

  // 5. Lemma 1 on 1000 planted instances.
  {
    Timed t;
    Report r = verify_lemma1(lemma1_params());
    first_bytes["lemma1"] = serialize_report(r);
    std::ostringstream detail;
    detail << r.passed << "/" << r.attempted << " witnesses valid";
    criterion(5, "find_three_independent yields valid 3-path witnesses on 1000 planted instances",
              r.ok() && r.attempted == 1000, t.ms(), 30000, detail.str());
  }

  // 6. Two-path construction on 500 planted instances.
  {
    Timed t;
    Report r = verify_two_path(two_path_params());
    first_bytes["two-path"] = serialize_report(r);
    std::ostringstream detail;
    detail << r.passed << "/" << r.attempted << " witnesses valid";
    criterion(6, "find_two_independent yields valid 2-path witnesses on 500 planted instances",
              r.ok() && r.attempted == 500, t.ms(), 10000, detail.str());
  }

  // 7 + 8. Oracle equivalence and Menger duality.
  long long menger_checked = 0;
  {
    Timed t;
    Report r = verify_oracle_equivalence(500, kOracleSeed, 8, 0.4);
    first_bytes["oracle"] = serialize_report(r);
    menger_checked = r.details.at("menger_pairs_checked").get<long long>();
    std::ostringstream detail;
    detail << r.details.at("pairs_checked").get<long long>() << " pairs compared";
    criterion(7, "max_independent_paths equals the brute-force oracle on 500 random graphs", r.ok(),
              t.ms(), 60000, detail.str());
    std::ostringstream md;
    md << menger_checked << " non-adjacent pairs checked for exact equality";
    // Equality is asserted inside every scan above; any violation would have
    // failed criteria 3 or 7.
    criterion(8, "Menger duality held exactly for every non-adjacent pair across all runs",
              r.ok() && menger_checked > 0, t.ms(), 60000, md.str());
  }

  // 9. f-table.
  {
    Timed t;
    Report r = f_table(8);
    first_bytes["f-table"] = serialize_report(r);
    bool ok = r.ok() && r.attempted == 8;
    std::ostringstream detail;
    if (ok) {
      const auto& rows = r.details.at("rows");
      for (int k = 1; k <= 8; ++k) {
        int want = k <= 2 ? k : 3;
        if (rows[static_cast<size_t>(k - 1)].at("f") != want) ok = false;
      }
      detail << "f(1)=1 f(2)=2 f(3..8)=3";
      for (const auto& row : rows) {
        if (row.at("upper_mode") != "flow-scan") ok = false;
      }
    } else if (!r.counterexamples.empty()) {
      detail << r.counterexamples[0].dump();
    }
    criterion(9, "f_table(8) reproduces f(k) = k for k<=2 and 3 otherwise, certified on scans", ok,
              t.ms(), 120000, detail.str());
  }

  // 10. Determinism: every report re-runs to identical bytes, and the serial
  // reference matches the parallel scan.
  {
    Timed t;
    bool ok = true;
    std::string offender;
    for (int p = 1; p <= 3 && ok; ++p) {
      if (serialize_report(verify_lemma2(p)) != first_bytes["lemma2-" + std::to_string(p)]) {
        ok = false;
        offender = "lemma2-" + std::to_string(p);
      }
    }
    if (ok && serialize_report(verify_lemma2(2, ScanMode::serial)) != first_bytes["lemma2-2"]) {
      ok = false;
      offender = "lemma2-2 serial vs parallel";
    }
    if (ok && serialize_report(verify_lemma1(lemma1_params())) != first_bytes["lemma1"]) {
      ok = false;
      offender = "lemma1";
    }
    if (ok && serialize_report(verify_two_path(two_path_params())) != first_bytes["two-path"]) {
      ok = false;
      offender = "two-path";
    }
    if (ok &&
        serialize_report(verify_oracle_equivalence(500, kOracleSeed, 8, 0.4)) !=
            first_bytes["oracle"]) {
      ok = false;
      offender = "oracle";
    }
    if (ok && serialize_report(f_table(8)) != first_bytes["f-table"]) {
      ok = false;
      offender = "f-table";
    }
    criterion(10, "re-running every report with the same seeds reproduces identical bytes", ok,
              t.ms(), 300000, offender);
  }

  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
