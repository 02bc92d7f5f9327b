#pragma once

// Test-only ground truth for the sequence-quantified hypotheses, by bounded
// enumeration of eventually-periodic sequences: an arbitrary prefix of length
// at most 2n followed by a repeated cycle of period at most n (total template
// length at most 3n). On a finite carrier every convergent sequence is
// eventually constant, so these templates exhaust the behaviors the
// definitions quantify over. Kept independent of the certifier's shortcuts.

#include "relfix/mappings.hpp"
#include "relfix/relspace.hpp"

#include <functional>
#include <vector>

namespace relfix::testing {

// Every R-preserving Cauchy template converges to a carrier point. (A
// template is Cauchy only when its cycle is a single repeated point.)
inline bool oracle_r_complete(const FiniteSpace& space, const FiniteRelation& r) {
  int n = space.size();
  bool ok = true;
  std::vector<int> walk;
  std::function<void(int)> extend = [&](int remaining) {
    if (!ok) return;
    // Try to close the template with a constant cycle at u.
    for (int u = 0; u < n && ok; ++u) {
      if (!r.member(u, u)) continue;  // tail pairs (u,u) must stay in R
      if (!walk.empty() && !r.member(walk.back(), u)) continue;
      // Cauchy template: prefix walk, then u forever. Its limit must lie in
      // the carrier; u does, so this template cannot refute completeness.
      bool converges_in_carrier = (u >= 0 && u < n);
      ok = ok && converges_in_carrier;
    }
    if (remaining == 0) return;
    for (int next = 0; next < n; ++next) {
      if (!walk.empty() && !r.member(walk.back(), next)) continue;
      walk.push_back(next);
      extend(remaining - 1);
      walk.pop_back();
    }
  };
  extend(2 * n);
  return ok;
}

// (g,d)-self-closedness: for every R-preserving convergent template with
// limit u there must be an infinite subsequence whose g-images are
// comparable to g(u). Only cycle values occur infinitely often.
inline bool oracle_d_self_closed_g(const FiniteSpace& space, const FiniteRelation& r,
                                   const std::vector<int>& g) {
  int n = space.size();
  bool ok = true;
  std::vector<int> walk;
  std::function<void(int)> extend = [&](int remaining) {
    if (!ok) return;
    for (int u = 0; u < n && ok; ++u) {
      if (!r.member(u, u)) continue;
      if (!walk.empty() && !r.member(walk.back(), u)) continue;
      // Convergent template: limit u, tail constant u. The subsequence must
      // pick indices arbitrarily deep, hence from the tail.
      bool subsequence_exists = comparable(r, g[u], g[u]);
      ok = ok && subsequence_exists;
    }
    if (remaining == 0) return;
    for (int next = 0; next < n; ++next) {
      if (!walk.empty() && !r.member(walk.back(), next)) continue;
      walk.push_back(next);
      extend(remaining - 1);
      walk.pop_back();
    }
  };
  extend(2 * n);
  return ok;
}

// R-compatibility: enumerate cycles c_0..c_{P-1} (P <= n) whose image
// sequences under f and g are R-preserving (wrap included) and constant with
// a common value; the compatibility limit must vanish along the cycle.
// Prefixes neither enable nor disable a cycle, so they are not enumerated.
inline bool oracle_r_compatible(const FiniteSpace& space, const FiniteRelation& r,
                                const FiniteMappingPair& pair) {
  int n = space.size();
  std::vector<int> cycle;
  bool ok = true;
  std::function<void()> extend = [&]() {
    if (!ok) return;
    if (!cycle.empty()) {
      // Close the cycle and test admissibility.
      bool admissible = true;
      for (std::size_t i = 0; i < cycle.size() && admissible; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        admissible = r.member(pair.f[a], pair.f[b]) && r.member(pair.g[a], pair.g[b]);
      }
      if (admissible) {
        bool f_constant = true, g_constant = true;
        for (std::size_t i = 1; i < cycle.size(); ++i) {
          f_constant = f_constant && pair.f[cycle[i]] == pair.f[cycle[0]];
          g_constant = g_constant && pair.g[cycle[i]] == pair.g[cycle[0]];
        }
        if (f_constant && g_constant &&
            pair.f[cycle[0]] == pair.g[cycle[0]]) {
          for (int c : cycle) {
            if (space.d(pair.g[pair.f[c]], pair.f[pair.g[c]]) != 0) {
              ok = false;
              return;
            }
          }
        }
      }
    }
    if (static_cast<int>(cycle.size()) == n) return;
    for (int next = 0; next < n; ++next) {
      cycle.push_back(next);
      extend();
      cycle.pop_back();
    }
  };
  extend();
  return ok;
}

}  // namespace relfix::testing
