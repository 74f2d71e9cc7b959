#pragma once

#include <optional>
#include <string>
#include <vector>

#include "howe/segments.hpp"

namespace howe {

enum class Convention { sigma, omega };

struct ThetaInstance {
  long long n = 0;
  long long m = 0;
  Multisegment pi;
  Convention convention = Convention::sigma;
};

// Validates group_size(pi) == n and m >= n.
ThetaInstance make_theta_instance(long long n, long long m,
                                  const Multisegment& pi,
                                  Convention convention);

// The lift of the instance in its own convention.
Multisegment theta_lift(const ThetaInstance& inst);

// Closed-form lift in the sigma normalization: the m - n unramified
// singletons at (-m+1)/2, ..., (m-2n-1)/2 together with the contragredient
// data shifted by (m-n)/2. Requires group_size(pi) == n and m >= n.
Multisegment theta_star(const Multisegment& pi, long long n, long long m);

// Same lift in the omega normalization: the centered singleton string of
// length m - n together with the plain contragredient data.
Multisegment theta_omega(const Multisegment& pi, long long n, long long m);

// theta_omega recomputed by conjugating theta_star with the normalization
// twists nu^{m/2} / nu^{n/2}; contract: equal to theta_omega exactly.
Multisegment convention_bridge(const Multisegment& pi, long long n,
                               long long m);

// Instrumentation of one recursion run. "generic" counts ordinary reduction
// steps, "a2" the half-integer edge reduction at (n+1)/2, "h_fallback" the
// closed-form fallback at (2m-n+1)/2, "dual_terminal" the m == n terminal
// when only the coincident exceptional point is strippable.
struct RecursionStats {
  long long generic = 0;
  long long a2 = 0;
  long long h_fallback = 0;
  long long dual_terminal = 0;
  long long base_cases = 0;
  // Nodes that took a non-generic branch while NOT boundary-excluded; always
  // zero (the rank-filtration argument pins every non-excluded instance to a
  // generic step).
  long long exceptional_on_nonexcluded = 0;
  std::vector<std::string> trace;  // filled when collect_trace is set
  bool collect_trace = false;

  bool used_exceptional() const { return a2 > 0 || h_fallback > 0; }
};

// Computes theta_star(pi) without the closed form, by stripping a cuspidal
// point, recursing on the smaller dual pair, and socling the dual point back.
Multisegment theta_recursive(const Multisegment& pi, long long n, long long m,
                             RecursionStats* stats = nullptr);

struct ReduceResult {
  long long a = 0;
  long long b = 0;
  long long n_reduced = 0;
  long long m_reduced = 0;
  Multisegment rho;        // nu^{-ra/2} times the left remainder
  Multisegment rho_prime;  // nu^{+ra/2} times the right remainder
};

// One step of the reduction pinning theta partners: strips chi from pi on the
// left and the matching dual point from pi_prime on the right, asserts the
// two strip counts agree, and returns the untwisted smaller instance. Throws
// domain_error "a != b" on a pair that cannot be theta partners.
ReduceResult reduce_instance(const Multisegment& pi,
                             const Multisegment& pi_prime, long long n,
                             long long m, const Segment& chi);

struct HReport {
  bool impossible = false;
  std::optional<Rat> witness;  // least begin exceeding the bound
  Rat bound;                   // (-m-1)/2
  Multisegment partner;        // theta_star(pi, n, m)
};

// For an H-class pi with m > n: exhibits a begin coordinate of the would-be
// partner exceeding (-m-1)/2, contradicting the right-Jacquet constraint; no
// pair with both one-sided constraints can exist.
HReport check_h_nonexistence(const Multisegment& pi, long long n, long long m);

}  // namespace howe
