#include "howe/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <thread>

#include "howe/boundary.hpp"
#include "howe/enumerate.hpp"
#include "howe/langlands.hpp"
#include "howe/parse.hpp"
#include "howe/theta.hpp"

namespace howe {

namespace {

struct ShardOutcome {
  long long cases = 0;
  long long failures = 0;
  long long first_index = -1;
  std::string first;
};

// Runs fn(0..count) across shards; failure aggregation is order-independent
// (the reported counterexample is the one with the least case index).
ShardOutcome run_indexed(std::size_t count, int jobs,
                         const std::function<std::optional<std::string>(
                             std::size_t)>& fn) {
  jobs = std::max(1, jobs);
  std::vector<ShardOutcome> outcomes(static_cast<std::size_t>(jobs));
  auto worker = [&](int w) {
    ShardOutcome& out = outcomes[static_cast<std::size_t>(w)];
    for (std::size_t idx = static_cast<std::size_t>(w); idx < count;
         idx += static_cast<std::size_t>(jobs)) {
      ++out.cases;
      std::optional<std::string> failure = fn(idx);
      if (failure) {
        ++out.failures;
        if (out.first_index < 0 ||
            static_cast<long long>(idx) < out.first_index) {
          out.first_index = static_cast<long long>(idx);
          out.first = *failure;
        }
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (std::thread& t : threads) t.join();
  }
  ShardOutcome merged;
  for (const ShardOutcome& o : outcomes) {
    merged.cases += o.cases;
    merged.failures += o.failures;
    if (o.first_index >= 0 &&
        (merged.first_index < 0 || o.first_index < merged.first_index)) {
      merged.first_index = o.first_index;
      merged.first = o.first;
    }
  }
  return merged;
}

struct SuiteTimer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

SuiteResult finish(const std::string& name, const ShardOutcome& o,
                   const SuiteTimer& timer, std::string notes = "") {
  SuiteResult r;
  r.name = name;
  r.cases = o.cases;
  r.failures = o.failures;
  r.first_counterexample = o.first;
  r.notes = std::move(notes);
  r.passed = o.failures == 0 && o.cases > 0;
  if (o.cases == 0) r.first_counterexample = "no cases enumerated";
  r.seconds = timer.elapsed();
  return r;
}

std::vector<Multisegment> unr_enumeration(const Rat& window,
                                          long long max_size) {
  return enumerate_multisegments(
      segment_pool(window, max_size, {unr_label()}), max_size);
}

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::string instance_str(const Multisegment& pi, long long n, long long m) {
  return "pi=" + render_text(pi) + " n=" + std::to_string(n) +
         " m=" + std::to_string(m);
}

// ---- suite 1: theta_star at m = n is the contragredient -------------------

SuiteResult suite_duality(const SelftestBounds& b) {
  SuiteTimer timer;
  long long max_n = std::min<long long>(4, b.max_n);
  std::vector<Multisegment> all =
      unr_enumeration(rat_min(Rat(2), b.window), max_n);
  ShardOutcome o = run_indexed(all.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Multisegment& pi = all[idx];
        long long n = pi.group_size();
        if (theta_star(pi, n, n) != dual_multisegment(pi))
          return instance_str(pi, n, n) + ": theta_star != dual";
        return std::nullopt;
      });
  return finish("m=n duality", o, timer);
}

// ---- suite 2: group size of both lifts equals m ----------------------------

SuiteResult suite_degree(const SelftestBounds& b) {
  SuiteTimer timer;
  long long max_n = std::min<long long>(4, b.max_n);
  long long max_gap = std::min<long long>(2, b.max_gap);
  std::vector<Multisegment> all =
      unr_enumeration(rat_min(Rat(2), b.window), max_n);
  ShardOutcome o = run_indexed(all.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Multisegment& pi = all[idx];
        long long n = pi.group_size();
        for (long long gap = 0; gap <= max_gap; ++gap) {
          long long m = n + gap;
          if (theta_star(pi, n, m).group_size() != m)
            return instance_str(pi, n, m) + ": theta_star size != m";
          if (theta_omega(pi, n, m).group_size() != m)
            return instance_str(pi, n, m) + ": theta_omega size != m";
        }
        return std::nullopt;
      });
  return finish("degree conservation", o, timer);
}

// ---- suite 3: the normalization bridge lands on theta_omega ----------------

SuiteResult suite_bridge(const SelftestBounds& b) {
  SuiteTimer timer;
  long long max_n = std::min<long long>(4, b.max_n);
  long long max_gap = std::min<long long>(2, b.max_gap);
  std::vector<Multisegment> all =
      unr_enumeration(rat_min(Rat(2), b.window), max_n);
  ShardOutcome o = run_indexed(all.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Multisegment& pi = all[idx];
        long long n = pi.group_size();
        for (long long gap = 0; gap <= max_gap; ++gap) {
          long long m = n + gap;
          if (convention_bridge(pi, n, m) != theta_omega(pi, n, m))
            return instance_str(pi, n, m) + ": bridge != theta_omega";
        }
        return std::nullopt;
      });
  return finish("convention bridge", o, timer);
}

// ---- suite 4: the recursion reproduces the closed form ---------------------

SuiteResult suite_recursion(const SelftestBounds& b) {
  SuiteTimer timer;
  long long max_n = std::min<long long>(3, b.max_n);
  long long max_gap = std::min<long long>(2, b.max_gap);
  std::vector<Multisegment> all =
      unr_enumeration(rat_min(Rat(2), b.window), max_n);
  std::atomic<long long> pure{0}, with_a2{0}, with_h{0}, with_dual{0};
  ShardOutcome o = run_indexed(all.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Multisegment& pi = all[idx];
        long long n = pi.group_size();
        for (long long gap = 0; gap <= max_gap; ++gap) {
          long long m = n + gap;
          RecursionStats stats;
          Multisegment got = theta_recursive(pi, n, m, &stats);
          if (stats.h_fallback > 0) ++with_h;
          else if (stats.a2 > 0) ++with_a2;
          else if (stats.dual_terminal > 0) ++with_dual;
          else ++pure;
          if (got != theta_star(pi, n, m))
            return instance_str(pi, n, m) + ": recursive " + render_text(got) +
                   " != closed " + render_text(theta_star(pi, n, m));
        }
        return std::nullopt;
      });
  std::string notes = "paths: " + std::to_string(pure.load()) + " generic, " +
                      std::to_string(with_a2.load()) + " with a2, " +
                      std::to_string(with_dual.load()) + " with m=n terminal, " +
                      std::to_string(with_h.load()) + " with h-fallback";
  return finish("recursion vs closed form", o, timer, notes);
}

// ---- suite 5: xi reconstruction --------------------------------------------

SuiteResult suite_xi(const SelftestBounds& b, const XiCorruption* corrupt) {
  SuiteTimer timer;
  struct Case {
    long long n, m, t, i;
    Side side;
  };
  std::vector<Case> cases;
  for (long long n = 1; n <= 4; ++n)
    for (long long m = n; m <= 5; ++m)
      for (long long t = 1; t <= n; ++t) {
        for (long long i = 0; i <= std::min(t, m); ++i)
          cases.push_back({n, m, t, i, Side::left});
        for (long long i = 0; i <= std::min(t, n); ++i)
          cases.push_back({n, m, t, i, Side::right});
      }
  ShardOutcome o = run_indexed(cases.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Case& c = cases[idx];
        std::vector<FiltrationFactor> series =
            c.side == Side::left ? jacquet_factors_left(c.n, c.m, c.t)
                                 : jacquet_factors_right(c.n, c.m, c.t);
        auto stored = series[static_cast<std::size_t>(c.i)].blocks;
        if (corrupt && corrupt->n == c.n && corrupt->m == c.m &&
            corrupt->t == c.t && corrupt->i == c.i &&
            corrupt->side == c.side && !stored.empty())
          stored[0].second = stored[0].second + Rat(1);
        auto derived = derive_xi(c.n, c.m, c.t, c.i, c.side);
        if (stored.size() != derived.size())
          return "xi mismatch at (n,m,t,i)=(" + std::to_string(c.n) + "," +
                 std::to_string(c.m) + "," + std::to_string(c.t) + "," +
                 std::to_string(c.i) + ") side=" +
                 (c.side == Side::left ? "left" : "right");
        for (std::size_t k = 0; k < stored.size(); ++k) {
          if (stored[k].second != derived[k].second ||
              stored[k].first.size != derived[k].first.size ||
              stored[k].first.label != derived[k].first.label)
            return "xi mismatch at (n,m,t,i)=(" + std::to_string(c.n) + "," +
                   std::to_string(c.m) + "," + std::to_string(c.t) + "," +
                   std::to_string(c.i) + ") side=" +
                   (c.side == Side::left ? "left" : "right") + " block " +
                   block_name(stored[k].first);
        }
        return std::nullopt;
      });
  return finish("xi reconstruction", o, timer);
}

// ---- suite 6: lima classifiers vs the support oracle ------------------------

// Cuspidal support of the character nu^s of G_k on the unramified line.
std::vector<Rat> character_support(const Rat& s, long long k) {
  std::vector<Rat> pts;
  for (long long j = 0; j < k; ++j)
    pts.push_back(s - Rat(k - 1, 2) + Rat(j));
  return pts;
}

bool all_equal_to(const std::vector<Rat>& pts, const Rat& x) {
  for (const Rat& p : pts)
    if (p != x) return false;
  return true;
}

SuiteResult suite_lima(const SelftestBounds& b) {
  SuiteTimer timer;
  struct Case {
    long long n, m, a, bb;  // bb < 0: left-side case
    Rat x;
  };
  std::vector<Case> cases;
  std::vector<Rat> grid;
  for (Rat x = Rat(-3); x <= Rat(7); x = x + Rat(1, 2)) grid.push_back(x);
  for (long long n = 1; n <= 4; ++n)
    for (long long m = n; m <= 6; ++m)
      for (long long a = 1; a <= 3; ++a) {
        if (a <= n)
          for (const Rat& x : grid) cases.push_back({n, m, a, -1, x});
        for (long long bb = a; bb <= m; ++bb)
          for (const Rat& x : grid) cases.push_back({n, m, a, bb, x});
      }
  ShardOutcome o = run_indexed(cases.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Case& c = cases[idx];
        Segment chi = cusp_point(c.x);
        auto describe = [&](const char* what) {
          return std::string(what) + " at n=" + std::to_string(c.n) +
                 " m=" + std::to_string(c.m) + " a=" + std::to_string(c.a) +
                 (c.bb >= 0 ? " b=" + std::to_string(c.bb) : std::string()) +
                 " chi=nu^" + c.x.str();
        };
        if (c.bb < 0) {
          std::set<long long> got = lima_classifier_left(c.n, c.m, 1, c.a, chi);
          std::set<long long> want;
          for (long long i = 0; i <= c.a; ++i) {
            long long k = c.a - i;
            if (all_equal_to(
                    character_support(Rat(2 * c.m - c.n + c.a - i, 2), k), c.x))
              want.insert(i);
          }
          if (got != want) return describe("lima left mismatch");
          bool exceptional = got.count(c.a - 1) > 0;
          if (exceptional != (c.x == Rat(2 * c.m - c.n + 1, 2)) && c.a >= 1)
            return describe("lima left exceptional-point mismatch");
        } else {
          std::set<long long> got =
              lima_classifier_right(c.n, c.m, 1, c.a, c.bb, chi);
          std::set<long long> want;
          long long t = c.bb - c.a;
          for (long long i = 0; i <= t; ++i) {
            long long k = t - i;
            if (all_equal_to(
                    character_support(Rat(c.m - 2 * c.n + c.a - c.bb + i, 2), k),
                    Rat(c.m - c.n, 2) - c.x))
              want.insert(i);
          }
          if (got != want) return describe("lima right mismatch");
          if (t >= 1) {
            bool exceptional = got.count(t - 1) > 0;
            if (exceptional != (c.x == Rat(c.n + 1, 2)))
              return describe("lima right exceptional-point mismatch");
          }
        }
        return std::nullopt;
      });
  return finish("lima classifiers vs oracle", o, timer);
}

// ---- suite 7: reduction consistency on true theta pairs --------------------

SuiteResult suite_reduce(const SelftestBounds& b) {
  SuiteTimer timer;
  long long max_n = std::min<long long>(3, b.max_n);
  long long max_gap = std::min<long long>(2, b.max_gap);
  std::vector<Multisegment> all =
      unr_enumeration(rat_min(Rat(2), b.window), max_n);
  std::atomic<long long> reduced{0};
  ShardOutcome o = run_indexed(all.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Multisegment& pi = all[idx];
        long long n = pi.group_size();
        for (long long gap = 0; gap <= max_gap; ++gap) {
          long long m = n + gap;
          Segment j_point = cusp_point(Rat(n + 1, 2));
          Segment h_point = cusp_point(Rat(2 * m - n + 1, 2));
          std::vector<Segment> generic;
          for (const Segment& p : left_strippable_points(pi))
            if (p != j_point && p != h_point) generic.push_back(p);
          if (generic.empty()) continue;
          Multisegment partner = theta_star(pi, n, m);
          for (const Segment& chi : generic) {
            ReduceResult red;
            try {
              red = reduce_instance(pi, partner, n, m, chi);
            } catch (const domain_error& e) {
              return instance_str(pi, n, m) + " chi=nu^" + chi.begin.str() +
                     ": " + e.what();
            }
            ++reduced;
            if (theta_star(red.rho, red.n_reduced, red.m_reduced) !=
                red.rho_prime)
              return instance_str(pi, n, m) + " chi=nu^" + chi.begin.str() +
                     ": reduced pair is not a theta pair";
          }
        }
        return std::nullopt;
      });
  // Sanity: a constructed non-pair must be flagged.
  LabelTable labels;
  bool flagged = false;
  try {
    reduce_instance(parse_multisegment("{[0..1]}", labels),
                    parse_multisegment("{[0..1]}", labels), 2, 2,
                    cusp_point(Rat(1)));
  } catch (const domain_error&) {
    flagged = true;
  }
  if (!flagged) {
    o.failures += 1;
    o.cases += 1;
    if (o.first.empty())
      o.first = "constructed non-pair was not flagged with a != b";
  }
  std::string notes = std::to_string(reduced.load()) + " reductions checked";
  return finish("reduce consistency", o, timer, notes);
}

// ---- suite 8: H-class nonexistence witness ---------------------------------

SuiteResult suite_h_nonexistence(const SelftestBounds& b) {
  SuiteTimer timer;
  long long max_n = std::min<long long>(3, b.max_n);
  long long max_gap = std::min<long long>(2, std::max<long long>(1, b.max_gap));
  // Wider window than the default enumeration: H-class data ends at
  // (2m-n+1)/2, which leaves a [-2,2] window almost empty.
  std::vector<Multisegment> all =
      unr_enumeration(rat_max(Rat(4), b.window), max_n);
  std::atomic<long long> h_cases{0};
  ShardOutcome o = run_indexed(all.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Multisegment& pi = all[idx];
        long long n = pi.group_size();
        for (long long gap = 1; gap <= max_gap; ++gap) {
          long long m = n + gap;
          if (jh_classify(pi, n, m).cls != JH::H) continue;
          ++h_cases;
          HReport report = check_h_nonexistence(pi, n, m);
          if (!report.impossible || !report.witness ||
              !(*report.witness > report.bound))
            return instance_str(pi, n, m) + ": missing H witness";
        }
        return std::nullopt;
      });
  if (h_cases.load() == 0 && o.failures == 0 && max_n >= 1) {
    o.failures = 1;
    o.first = "no H-class instances enumerated";
  }
  std::string notes = std::to_string(h_cases.load()) + " H-class instances";
  return finish("h-nonexistence", o, timer, notes);
}

// ---- suite 9: boundary shadow ----------------------------------------------

// The rank-filtration dichotomy: a recursion node that is not boundary-
// excluded always has a generic strippable point and takes the generic step;
// the exceptional branches only ever fire on boundary-excluded instances.
// For every boundary-excluded pi the recursion agrees with the closed form.
SuiteResult suite_boundary_shadow(const SelftestBounds& b) {
  SuiteTimer timer;
  long long max_n = std::min<long long>(3, b.max_n);
  long long max_gap = std::min<long long>(2, b.max_gap);
  std::vector<Multisegment> all =
      unr_enumeration(rat_min(Rat(2), b.window), max_n);
  std::atomic<long long> excluded_count{0}, exceptional_on_excluded{0};
  ShardOutcome o = run_indexed(all.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Multisegment& pi = all[idx];
        long long n = pi.group_size();
        for (long long gap = 0; gap <= max_gap; ++gap) {
          long long m = n + gap;
          RecursionStats stats;
          Multisegment got = theta_recursive(pi, n, m, &stats);
          if (stats.exceptional_on_nonexcluded != 0)
            return instance_str(pi, n, m) +
                   ": non-generic branch on a non-excluded instance";
          bool excluded = boundary_excluded(pi, n, m).excluded;
          if (excluded) {
            ++excluded_count;
            if (stats.used_exceptional() || stats.dual_terminal > 0)
              ++exceptional_on_excluded;
            if (got != theta_star(pi, n, m))
              return instance_str(pi, n, m) +
                     ": excluded pi disagrees with closed form";
          }
        }
        return std::nullopt;
      });
  std::string notes = std::to_string(excluded_count.load()) +
                      " excluded instances, " +
                      std::to_string(exceptional_on_excluded.load()) +
                      " of them resolved by non-generic branches";
  return finish("boundary shadow", o, timer, notes);
}

// ---- suite 10: involutions and round trips ---------------------------------

SuiteResult suite_roundtrips(const SelftestBounds& b) {
  SuiteTimer timer;
  LabelTable labels;
  labels.declare("rho", 2, "rho*");
  std::vector<CuspLabel> pool_labels = {unr_label(), *labels.find("rho"),
                                        *labels.find("rho*")};
  std::vector<Multisegment> all = enumerate_multisegments(
      segment_pool(b.window, b.max_n, pool_labels), b.max_n);
  std::vector<Rat> twists = {Rat(1), Rat(-1, 2), Rat(3, 2)};
  ShardOutcome o = run_indexed(all.size(), b.jobs,
      [&](std::size_t idx) -> std::optional<std::string> {
        const Multisegment& m = all[idx];
        if (dual_multisegment(dual_multisegment(m)) != m)
          return render_text(m) + ": dual is not an involution";
        if (dual_multisegment(m).group_size() != m.group_size())
          return render_text(m) + ": dual changes group size";
        for (const Rat& x : twists) {
          if (twist_multisegment(twist_multisegment(m, x), -x) != m)
            return render_text(m) + ": twist round trip fails at " + x.str();
          if (twist_multisegment(m, x).group_size() != m.group_size())
            return render_text(m) + ": twist changes group size";
        }
        if (parse_multisegment(render_text(m), labels) != m)
          return render_text(m) + ": parse(render) != id";
        return std::nullopt;
      });
  return finish("involutions and round trips", o, timer);
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestBounds& bounds,
                                      const XiCorruption* corrupt) {
  std::vector<SuiteResult> results;
  results.push_back(suite_duality(bounds));
  results.push_back(suite_degree(bounds));
  results.push_back(suite_bridge(bounds));
  results.push_back(suite_recursion(bounds));
  results.push_back(suite_xi(bounds, corrupt));
  results.push_back(suite_lima(bounds));
  results.push_back(suite_reduce(bounds));
  results.push_back(suite_h_nonexistence(bounds));
  results.push_back(suite_boundary_shadow(bounds));
  results.push_back(suite_roundtrips(bounds));
  return results;
}

std::string format_suite_line(const SuiteResult& r, int index, int total) {
  std::string line = "[" + std::to_string(index) + "/" +
                     std::to_string(total) + "] " + r.name + ": " +
                     (r.passed ? "PASS" : "FAIL") + " (" +
                     std::to_string(r.cases) + " cases";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fs", r.seconds);
  line += std::string(", ") + buf;
  if (!r.notes.empty()) line += "; " + r.notes;
  line += ")";
  if (!r.passed) {
    line += "\n      failures: " + std::to_string(r.failures);
    if (!r.first_counterexample.empty())
      line += "; first: " + r.first_counterexample;
  }
  return line;
}

}  // namespace howe
