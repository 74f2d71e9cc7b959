#include "howe/theta.hpp"

#include <algorithm>

#include "howe/boundary.hpp"
#include "howe/langlands.hpp"

/*
  The lift is computed twice, by independent routes, and the selftest drives
  the two against each other over full enumerations.

  Closed form (theta_star): the partner of <pi> on G_m is the Langlands datum
  made of m - n unramified singletons at (-m+1)/2 .. (m-2n-1)/2 plus the
  contragredient of pi shifted by (m-n)/2. theta_omega is the same statement
  in the other normalization of the pair, and convention_bridge transports one
  into the other with the nu^{m/2} / nu^{n/2} twists.

  Recursion (theta_recursive): pick a strippable cuspidal point chi of pi.

    generic   chi is not one of the two exceptional unramified points
              (n+1)/2, (2m-n+1)/2. Strip it a times (a maximal), compute the
              lift of the remainder on the (n-ra, m-ra) pair after a -ra/2
              twist, untwist, and socle nu^{(m-n)/2} chi~ back a times.

    a2        the only strippable points are exceptional and (n+1)/2 is among
              them, with m > n. The strip count drops m by one extra step:
              recurse on (n-a, m-a-1) with a -a/2-1 twist, untwist by
              -(a+1)/2, and socle nu^{(m-2n-1)/2} back a+1 times.

    h         the only strippable point is (2m-n+1)/2 and m > n. No reduction
              step exists; the lift is still defined and the closed form is
              used directly (the configuration cannot occur as a terminal
              pair, see check_h_nonexistence). Recorded by instrumentation.

    dual      m == n and the only strippable point is the coincident
              exceptional one; the m == n lift is the plain contragredient,
              which is taken directly.

  Every non-generic branch can only fire on boundary-excluded instances (the
  exceptional points lie outside the rank-filtration test range); the stats
  record any violation, and the selftest asserts there are none.
*/

namespace howe {

namespace {

void require_instance(const Multisegment& pi, long long n, long long m,
                      const char* who) {
  if (pi.group_size() != n)
    throw domain_error(std::string(who) + ": group size of pi is " +
                       std::to_string(pi.group_size()) + ", expected n = " +
                       std::to_string(n));
  if (m < n)
    throw domain_error(std::string(who) +
                       ": unsupported range m < n (m = " + std::to_string(m) +
                       ", n = " + std::to_string(n) + ")");
}

Multisegment singleton_string(const Rat& low, long long count) {
  std::vector<Segment> es;
  for (long long j = 0; j < count; ++j)
    es.push_back(cusp_point(low + Rat(j)));
  return Multisegment(std::move(es));
}

}  // namespace

ThetaInstance make_theta_instance(long long n, long long m,
                                  const Multisegment& pi,
                                  Convention convention) {
  require_instance(pi, n, m, "theta instance");
  return ThetaInstance{n, m, pi, convention};
}

Multisegment theta_lift(const ThetaInstance& inst) {
  return inst.convention == Convention::sigma
             ? theta_star(inst.pi, inst.n, inst.m)
             : theta_omega(inst.pi, inst.n, inst.m);
}

Multisegment theta_star(const Multisegment& pi, long long n, long long m) {
  require_instance(pi, n, m, "theta_star");
  Multisegment out = singleton_string(Rat(-m + 1, 2), m - n);
  Multisegment shifted_dual =
      twist_multisegment(dual_multisegment(pi), Rat(m - n, 2));
  for (const Segment& s : shifted_dual.entries()) out = out.with(s);
  return out;
}

Multisegment theta_omega(const Multisegment& pi, long long n, long long m) {
  require_instance(pi, n, m, "theta_omega");
  Multisegment out = trivial_rep_data(m - n);
  Multisegment dual = dual_multisegment(pi);
  for (const Segment& s : dual.entries()) out = out.with(s);
  return out;
}

Multisegment convention_bridge(const Multisegment& pi, long long n,
                               long long m) {
  require_instance(pi, n, m, "convention_bridge");
  Multisegment inner = theta_star(twist_multisegment(pi, Rat(m, 2)), n, m);
  return twist_multisegment(inner, Rat(n, 2));
}

namespace {

struct Driver {
  RecursionStats* stats;

  void note(long long n, long long m, const std::string& line) {
    if (stats && stats->collect_trace)
      stats->trace.push_back("(n=" + std::to_string(n) +
                             ",m=" + std::to_string(m) + ") " + line);
  }

  void check_excluded(const Multisegment& pi, long long n, long long m) {
    if (!stats) return;
    if (!boundary_excluded(pi, n, m).excluded)
      ++stats->exceptional_on_nonexcluded;
  }

  Multisegment run(const Multisegment& pi, long long n, long long m) {
    require_instance(pi, n, m, "theta_recursive");
    if (n == 0) {
      if (stats) ++stats->base_cases;
      note(n, m, "base");
      return theta_star(Multisegment(), 0, m);
    }
    std::vector<Segment> points = left_strippable_points(pi);
    if (points.empty())
      throw domain_error("theta_recursive: no strippable point");

    Segment j_point = cusp_point(Rat(n + 1, 2));
    Segment h_point = cusp_point(Rat(2 * m - n + 1, 2));
    std::vector<Segment> generic;
    bool has_j = false, has_h = false;
    for (const Segment& p : points) {
      if (p == j_point) has_j = true;
      else if (p == h_point) has_h = true;
      else generic.push_back(p);
    }

    if (!generic.empty()) {
      // Non-unramified lines first, then largest coordinate, then name.
      std::sort(generic.begin(), generic.end(),
                [](const Segment& a, const Segment& b) {
                  bool au = is_unr(a.cusp), bu = is_unr(b.cusp);
                  if (au != bu) return bu;
                  if (a.begin != b.begin) return b.begin < a.begin;
                  return a.cusp.name < b.cusp.name;
                });
      Segment chi = generic.front();
      long long r = chi.cusp.deg;
      auto [a, rho] = left_strip(chi, pi);
      if (stats) ++stats->generic;
      note(n, m, "generic chi=" + chi.cusp.name + "@" + chi.begin.str() +
                     " a=" + std::to_string(a));
      Rat shift = Rat(-r * a, 2);
      Multisegment sub = run(twist_multisegment(rho, shift), n - r * a,
                             m - r * a);
      Multisegment out = twist_multisegment(sub, shift);
      Segment target =
          cusp_point(dual_label(chi.cusp), Rat(m - n, 2) - chi.begin);
      for (long long s = 0; s < a; ++s) out = right_soc(out, target);
      return out;
    }

    if (m == n) {
      // Only the coincident exceptional point remains; the m == n lift is
      // the contragredient.
      if (stats) {
        ++stats->dual_terminal;
        check_excluded(pi, n, m);
      }
      note(n, m, "dual-terminal");
      return theta_star(pi, n, n);
    }

    if (has_j) {
      if (stats) {
        ++stats->a2;
        check_excluded(pi, n, m);
      }
      auto [a, rho] = left_strip(j_point, pi);
      note(n, m, "a2 a=" + std::to_string(a));
      Multisegment sub = run(twist_multisegment(rho, Rat(-a - 2, 2)), n - a,
                             m - a - 1);
      Multisegment out = twist_multisegment(sub, Rat(-a - 1, 2));
      Segment target = cusp_point(Rat(m - 2 * n - 1, 2));
      for (long long s = 0; s < a + 1; ++s) out = right_soc(out, target);
      return out;
    }

    (void)has_h;  // only the h point is strippable here
    if (stats) {
      ++stats->h_fallback;
      check_excluded(pi, n, m);
    }
    note(n, m, "h-fallback");
    return theta_star(pi, n, m);
  }
};

}  // namespace

Multisegment theta_recursive(const Multisegment& pi, long long n, long long m,
                             RecursionStats* stats) {
  Driver driver{stats};
  return driver.run(pi, n, m);
}

ReduceResult reduce_instance(const Multisegment& pi,
                             const Multisegment& pi_prime, long long n,
                             long long m, const Segment& chi) {
  require_instance(pi, n, m, "reduce_instance");
  if (pi_prime.group_size() != m)
    throw domain_error("reduce_instance: group size of pi' is " +
                       std::to_string(pi_prime.group_size()) +
                       ", expected m = " + std::to_string(m));
  if (is_unr(chi.cusp) &&
      (chi.begin == Rat(n + 1, 2) || chi.begin == Rat(2 * m - n + 1, 2)))
    throw domain_error("reduce_instance: chi is an exceptional point");
  long long r = chi.cusp.deg;
  auto [a, rho] = left_strip(chi, pi);
  Segment target = cusp_point(dual_label(chi.cusp), Rat(m - n, 2) - chi.begin);
  auto [b, rho_prime] = right_strip(pi_prime, target);
  if (a != b)
    throw domain_error("reduce_instance: a != b (a = " + std::to_string(a) +
                       ", b = " + std::to_string(b) +
                       "); not a theta-partner pair");
  ReduceResult out;
  out.a = a;
  out.b = b;
  out.n_reduced = n - r * a;
  out.m_reduced = m - r * a;
  out.rho = twist_multisegment(rho, Rat(-r * a, 2));
  out.rho_prime = twist_multisegment(rho_prime, Rat(r * a, 2));
  return out;
}

HReport check_h_nonexistence(const Multisegment& pi, long long n,
                             long long m) {
  require_instance(pi, n, m, "check_h_nonexistence");
  if (m <= n) throw domain_error("check_h_nonexistence: requires m > n");
  if (jh_classify(pi, n, m).cls != JH::H)
    throw domain_error("check_h_nonexistence: pi is not H-class");
  HReport report;
  report.bound = Rat(-m - 1, 2);
  report.partner = theta_star(pi, n, m);
  for (const Segment& s : report.partner.entries()) {
    if (s.begin > report.bound) {
      if (!report.witness || s.begin < *report.witness)
        report.witness = s.begin;
    }
  }
  report.impossible = report.witness.has_value();
  return report;
}

}  // namespace howe
