#pragma once

/*! \file
 * \brief The theorem-verification suite: per-instance checks with hypothesis
 *        gating, and the Z_n sweep driver with its worker pool.
 */

#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mullat/core.hpp"
#include "mullat/decomposition.hpp"
#include "mullat/mult_lattice.hpp"
#include "mullat/ring_bridge.hpp"
#include "mullat/s_theory.hpp"

namespace mullat {

/// A batch of theorem reports. Skipped checks (unmet hypotheses) never count
/// as failures: a hypothesis miss is not a counterexample.
struct VerdictBundle {
  std::vector<PropertyReport> reports;

  bool overall() const {
    for (const auto& r : reports)
      if (r.failed()) return false;
    return true;
  }
  std::size_t count(CheckStatus s) const {
    std::size_t c = 0;
    for (const auto& r : reports)
      if (r.status == s) ++c;
    return c;
  }
};

struct VerifyOptions {
  NoetherianSampling sampling;
  /// When set, only checks whose name is listed are run; everything else is
  /// omitted from the bundle. Used to time criterion groups in isolation.
  std::optional<std::set<std::string>> only;
};

namespace detail {

class CheckRunner {
 public:
  CheckRunner(VerdictBundle& bundle, const VerifyOptions& opts) : bundle_(bundle), opts_(opts) {}

  template <typename Fn>
  void run(const std::string& name, bool hypothesis_met, const std::string& skip_reason, Fn&& fn) {
    if (opts_.only && !opts_.only->count(name)) return;
    if (!hypothesis_met) {
      bundle_.reports.push_back(PropertyReport::skip(name, skip_reason));
      return;
    }
    try {
      bundle_.reports.push_back(fn());
    } catch (const Error& e) {
      bundle_.reports.push_back(
          PropertyReport::fail(name, e.witness(), std::string("error: ") + e.what()));
    }
  }

 private:
  VerdictBundle& bundle_;
  const VerifyOptions& opts_;
};

inline bool saturation_not_below(const MultiplicativeLattice& M, const MClosedSet& S, ElementId b,
                                 ElementId c) {
  return !M.leq(saturation(M, S, b), saturation(M, S, c));
}

}  // namespace detail

/// Runs every theorem check whose hypotheses the instance meets. Checks whose
/// hypotheses fail (for example r-lattice theorems on a lattice that only
/// reaches V-lattice class) are reported as skipped with the reason. When the
/// instance is ring-backed, the ring/lattice correspondence checks run too.
inline VerdictBundle verify_instance(const MultiplicativeLattice& M, const MClosedSet& S,
                                     const ZnLattice* zn = nullptr,
                                     const std::vector<int>* s_ring = nullptr,
                                     const VerifyOptions& opts = {}) {
  VerdictBundle bundle;
  detail::CheckRunner check(bundle, opts);
  const std::size_t n = M.size();
  const bool mult_ok = M.at_least(AxiomClass::Multiplicative);
  const bool c_ok = M.at_least(AxiomClass::CLattice);
  const bool r_ok = M.at_least(AxiomClass::RLattice);
  const std::string below_c = "needs c-lattice, instance is " + std::string(to_string(M.axiom_class()));
  const std::string below_r = "needs r-lattice (S-Noetherian hypothesis), instance is " +
                              std::string(to_string(M.axiom_class()));

  check.run("axiom_class", true, "", [&] {
    return PropertyReport::pass("axiom_class", std::string(to_string(M.axiom_class())));
  });

  // Galois adjunction of the residual: x * b <= a iff x <= (a : b).
  check.run("galois_adjunction", mult_ok, below_c, [&] {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId x = 0; x < n; ++x)
          if (M.leq(M.mult(x, b), a) != M.leq(x, M.residual(a, b)))
            return PropertyReport::fail("galois_adjunction", {a, b, x}, "adjunction broken");
    return PropertyReport::pass("galois_adjunction");
  });

  // Radical is a closure operator and meets pass through it.
  check.run("radical_closure_operator", c_ok, below_c, [&] {
    for (ElementId a = 0; a < n; ++a) {
      if (!M.leq(a, M.radical(a)))
        return PropertyReport::fail("radical_closure_operator", {a}, "a !<= radical(a)");
      if (M.radical(M.radical(a)) != M.radical(a))
        return PropertyReport::fail("radical_closure_operator", {a}, "radical not idempotent");
      for (ElementId b = 0; b < n; ++b)
        if (M.leq(a, b) && !M.leq(M.radical(a), M.radical(b)))
          return PropertyReport::fail("radical_closure_operator", {a, b}, "radical not monotone");
    }
    return PropertyReport::pass("radical_closure_operator");
  });

  check.run("radical_of_meet", c_ok, below_c, [&] {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (M.radical(M.meet(a, b)) != M.meet(M.radical(a), M.radical(b)))
          return PropertyReport::fail("radical_of_meet", {a, b},
                                      "radical(a ^ b) != radical(a) ^ radical(b)");
    return PropertyReport::pass("radical_of_meet");
  });

  // At S = {1} the S-classifiers specialize to the classical ones.
  check.run("specialization_at_top", c_ok, below_c, [&] {
    const MClosedSet S1 = MClosedSet::validate(M, {M.top()});
    for (ElementId q = 0; q < n; ++q) {
      if (q == M.top()) continue;
      if (is_s_prime(M, S1, q).ok() != M.is_prime(q))
        return PropertyReport::fail("specialization_at_top", {q}, "S-prime at S={1} != prime");
      if (is_s_primary(M, S1, q).ok() != M.is_primary(q))
        return PropertyReport::fail("specialization_at_top", {q}, "S-primary at S={1} != primary");
    }
    return PropertyReport::pass("specialization_at_top");
  });

  // Primary plus eligibility gives S-primary.
  check.run("primary_implies_s_primary", c_ok, below_c, [&] {
    for (ElementId q = 0; q < n; ++q) {
      if (q == M.top() || s_meets(M, S, q)) continue;
      if (M.is_primary(q) && !is_s_primary(M, S, q).ok())
        return PropertyReport::fail("primary_implies_s_primary", {q},
                                    M.label(q) + " is primary, disjoint from S, but not S-primary");
    }
    return PropertyReport::pass("primary_implies_s_primary");
  });

  // Saturation is a closure operator.
  check.run("saturation_closure", mult_ok, below_c, [&] {
    for (ElementId a = 0; a < n; ++a) {
      const ElementId as = saturation(M, S, a);
      if (!M.leq(a, as))
        return PropertyReport::fail("saturation_closure", {a}, "a !<= a_S");
      if (saturation(M, S, as) != as)
        return PropertyReport::fail("saturation_closure", {a}, "saturation not idempotent");
      for (ElementId b = 0; b < n; ++b)
        if (M.leq(a, b) && !M.leq(as, saturation(M, S, b)))
          return PropertyReport::fail("saturation_closure", {a, b}, "saturation not monotone");
    }
    return PropertyReport::pass("saturation_closure");
  });

  // Saturations of S-prime elements are prime.
  check.run("s_prime_saturation_prime", mult_ok, below_c, [&] {
    for (ElementId p = 0; p < n; ++p) {
      if (p == M.top() || !is_s_prime(M, S, p).ok()) continue;
      const ElementId ps = saturation(M, S, p);
      if (ps == M.top() || !M.is_prime(ps))
        return PropertyReport::fail("s_prime_saturation_prime", {p},
                                    "p_S = " + M.label(ps) + " is not prime");
    }
    return PropertyReport::pass("s_prime_saturation_prime");
  });

  // An S-maximal radical forces S-primary.
  check.run("s_maximal_radical_implies_s_primary", c_ok, below_c, [&] {
    std::vector<ElementId> proper;
    for (ElementId x = 0; x < n; ++x)
      if (x != M.top()) proper.push_back(x);
    const std::vector<ElementId> maximal = s_maximal_elements(M, S, proper);
    std::vector<std::uint8_t> is_max(n, 0);
    for (ElementId m : maximal) is_max[m] = 1;
    for (ElementId q = 0; q < n; ++q) {
      if (q == M.top() || s_meets(M, S, q)) continue;
      const ElementId rq = M.radical(q);
      if (rq != M.top() && is_max[rq] && !is_s_primary(M, S, q).ok())
        return PropertyReport::fail("s_maximal_radical_implies_s_primary", {q},
                                    "radical " + M.label(rq) + " is S-maximal but " + M.label(q) +
                                        " is not S-primary");
    }
    return PropertyReport::pass("s_maximal_radical_implies_s_primary");
  });

  // Finite meets of S-primary elements with a common radical stay S-primary
  // with that radical (pairs and triples).
  check.run("finite_meet_s_p_primary", c_ok, below_c, [&] {
    std::vector<ElementId> sp;
    for (ElementId q = 0; q < n; ++q)
      if (q != M.top() && is_s_primary(M, S, q).ok()) sp.push_back(q);
    auto check_meet = [&](std::vector<ElementId> qs) -> std::optional<PropertyReport> {
      const ElementId p = M.radical(qs[0]);
      for (ElementId q : qs)
        if (M.radical(q) != p) return std::nullopt;
      ElementId m = M.top();
      for (ElementId q : qs) m = M.meet(m, q);
      if (!is_s_primary(M, S, m).ok() || M.radical(m) != p) {
        qs.insert(qs.begin(), m);
        return PropertyReport::fail("finite_meet_s_p_primary", qs,
                                    "meet is not S-primary with the common radical");
      }
      return std::nullopt;
    };
    for (std::size_t i = 0; i < sp.size(); ++i)
      for (std::size_t j = i + 1; j < sp.size(); ++j) {
        if (auto bad = check_meet({sp[i], sp[j]})) return *bad;
        for (std::size_t l = j + 1; l < sp.size(); ++l)
          if (auto bad = check_meet({sp[i], sp[j], sp[l]})) return *bad;
      }
    return PropertyReport::pass("finite_meet_s_p_primary");
  });

  // A meet below an S-prime leaves one factor below it after an S-multiplier.
  check.run("meet_below_s_prime", r_ok, below_r, [&] {
    std::vector<ElementId> primes;
    for (ElementId p = 0; p < n; ++p)
      if (p != M.top() && is_s_prime(M, S, p).ok()) primes.push_back(p);
    auto covered = [&](const std::vector<ElementId>& qs, ElementId p) {
      for (ElementId s : S.members())
        for (ElementId q : qs)
          if (M.leq(M.mult(s, q), p)) return true;
      return false;
    };
    for (ElementId p : primes)
      for (ElementId q1 = 0; q1 < n; ++q1) {
        if (M.leq(q1, p) && !covered({q1}, p))
          return PropertyReport::fail("meet_below_s_prime", {p, q1}, "singleton case");
        for (ElementId q2 = q1 + 1; q2 < n; ++q2) {
          if (M.leq(M.meet(q1, q2), p) && !covered({q1, q2}, p))
            return PropertyReport::fail("meet_below_s_prime", {p, q1, q2}, "pair case");
          for (ElementId q3 = q2 + 1; q3 < n; ++q3)
            if (M.leq(M.meet(M.meet(q1, q2), q3), p) && !covered({q1, q2, q3}, p))
              return PropertyReport::fail("meet_below_s_prime", {p, q1, q2, q3}, "triple case");
        }
      }
    return PropertyReport::pass("meet_below_s_prime");
  });

  // Quotient lemma: residuals of an S-primary element by sx are S-primary and
  // the saturated radical of (q : x) recovers p_S.
  check.run("quotient_lemma", c_ok, below_c, [&] {
    for (ElementId q = 0; q < n; ++q) {
      if (q == M.top() || s_meets(M, S, q)) continue;
      if (!is_s_primary(M, S, q).ok()) continue;
      const ElementId p_sat = saturation(M, S, M.radical(q));
      for (ElementId x = 0; x < n; ++x) {
        bool eligible_x = true;
        for (ElementId s : S.members())
          if (M.leq(M.mult(s, x), q)) {
            eligible_x = false;
            break;
          }
        if (!eligible_x) continue;
        for (ElementId s : S.members())
          if (!is_s_primary(M, S, M.residual(q, M.mult(s, x))).ok())
            return PropertyReport::fail("quotient_lemma", {q, x, s},
                                        "(q : sx) is not S-primary");
        if (saturation(M, S, M.radical(M.residual(q, x))) != p_sat)
          return PropertyReport::fail("quotient_lemma", {q, x},
                                      "(sqrt(q : x))_S != p_S at q = " + M.label(q));
      }
    }
    return PropertyReport::pass("quotient_lemma");
  });

  check.run("irreducible_implies_primary", r_ok, below_r,
            [&] { return verify_irreducible_implies_primary(M, S); });

  // Existence: every element with proper saturation has a minimal S-primary
  // decomposition.
  check.run("existence", r_ok, below_r, [&] {
    for (ElementId a = 0; a < n; ++a) {
      if (saturation(M, S, a) == M.top()) continue;
      const auto d = find_minimal_decomposition(M, S, a);
      if (!d || !d->minimal)
        return PropertyReport::fail("existence", {a},
                                    M.label(a) + " admits no minimal S-primary decomposition");
    }
    return PropertyReport::pass("existence");
  });

  check.run("first_uniqueness", r_ok, below_r, [&] {
    for (ElementId a = 0; a < n; ++a) {
      if (saturation(M, S, a) == M.top()) continue;
      const PropertyReport r = verify_first_uniqueness(M, S, a);
      if (!r.passed()) return r;
    }
    return PropertyReport::pass("first_uniqueness");
  });

  // The two phrasings of minimality clause 2 agree: saturation comparison
  // versus an explicit witness below the partial meet.
  check.run("minimality_witness_form", c_ok, below_c, [&] {
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c) {
        bool witness = false;
        for (ElementId x = 0; x < n && !witness; ++x) {
          if (!M.leq(x, b)) continue;
          bool all_escape = true;
          for (ElementId s : S.members())
            if (M.leq(M.mult(s, x), c)) {
              all_escape = false;
              break;
            }
          witness = all_escape;
        }
        if (witness != detail::saturation_not_below(M, S, b, c))
          return PropertyReport::fail("minimality_witness_form", {b, c},
                                      "witness form and saturation form disagree");
      }
    return PropertyReport::pass("minimality_witness_form");
  });

  check.run("radical_corollary", r_ok, below_r, [&] { return verify_radical_corollary(M, S); });
  check.run("cohen_kaplansky", r_ok, below_r, [&] { return cohen_kaplansky_verify(M, S); });
  check.run("s_noetherian", r_ok, below_r, [&] { return is_s_noetherian(M, S, opts.sampling); });
  check.run("s_compact_closure", r_ok, below_r, [&] { return s_compact_closure_check(M, S); });

  if (zn && s_ring) {
    const bool filter = opts.only.has_value();
    for (PropertyReport& r : verify_correspondence(*zn, *s_ring)) {
      if (filter && !opts.only->count(r.name)) continue;
      bundle.reports.push_back(std::move(r));
    }
  }
  return bundle;
}

/// Check names that make up the ring/lattice correspondence group.
inline const std::set<std::string>& correspondence_check_names() {
  static const std::set<std::string> names = {
      "correspondence_s_prime",   "correspondence_s_primary",    "correspondence_s_irreducible",
      "correspondence_radical",   "hamed_malek_equivalence",     "correspondence_s_noetherian"};
  return names;
}

struct SweepOptions {
  int n_lo = 4;
  int n_hi = 60;
  int max_s_size = 6;
  unsigned workers = 0;  ///< 0: MULLAT_WORKERS env var, then hardware concurrency
  VerifyOptions verify;
};

struct SweepInstanceResult {
  int n = 0;
  std::vector<int> s_ring;
  bool overall = true;
  std::vector<PropertyReport> failures;
  std::vector<std::pair<std::string, CheckStatus>> statuses;
};

struct SweepResult {
  std::vector<SweepInstanceResult> instances;  ///< ordered by (n, S)
  std::map<std::string, std::array<std::size_t, 3>> check_counts;  ///< name -> pass/fail/skip
  std::size_t failures = 0;

  bool overall() const { return failures == 0; }
};

/// Every multiplicatively closed S in Z_n with 1 in S, 0 not in S and at most
/// max_size elements. BFS over closures: any such S is reachable by adding its
/// own elements to {1} one at a time, since closures of subsets of S stay
/// inside S. The result is sorted, so enumeration order is deterministic.
inline std::vector<std::vector<int>> enumerate_mult_closed_sets(int n, int max_size) {
  auto close = [&](const std::vector<int>& gens) -> std::optional<std::vector<int>> {
    std::set<int> s(gens.begin(), gens.end());
    s.insert(1);
    bool changed = true;
    while (changed) {
      changed = false;
      const std::vector<int> cur(s.begin(), s.end());
      for (int a : cur)
        for (int b : cur) {
          const int c = static_cast<int>(static_cast<long long>(a) * b % n);
          if (!s.count(c)) {
            s.insert(c);
            changed = true;
          }
        }
      if (s.count(0) || static_cast<int>(s.size()) > max_size) return std::nullopt;
    }
    return std::vector<int>(s.begin(), s.end());
  };

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  seen.insert({1});
  frontier.push_back({1});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (int r = 2; r < n; ++r) {
        if (std::binary_search(s.begin(), s.end(), r)) continue;
        std::vector<int> gens = s;
        gens.push_back(r);
        if (auto c = close(gens))
          if (seen.insert(*c).second) next.push_back(std::move(*c));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline unsigned resolve_worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MULLAT_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Verifies every (n, S) instance in the requested range. Instances are
/// independent and distributed over a worker pool; results are slotted by
/// task index, so the output order is the (n, S) sort key no matter which
/// worker finishes first.
inline SweepResult sweep_zn(const SweepOptions& opts) {
  struct Task {
    int n;
    std::vector<int> s_ring;
  };
  std::vector<Task> tasks;
  for (int n = opts.n_lo; n <= opts.n_hi; ++n)
    for (auto& s : enumerate_mult_closed_sets(n, opts.max_s_size)) tasks.push_back({n, s});

  std::vector<SweepInstanceResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = resolve_worker_count(opts.workers);

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      SweepInstanceResult res;
      res.n = t.n;
      res.s_ring = t.s_ring;
      const ZnLattice zn = ideal_lattice_zn(t.n);
      const MClosedSet S = lift_mult_set(zn, t.s_ring);
      const VerdictBundle bundle = verify_instance(zn.M, S, &zn, &t.s_ring, opts.verify);
      for (const PropertyReport& r : bundle.reports) {
        res.statuses.emplace_back(r.name, r.status);
        if (r.failed()) res.failures.push_back(r);
      }
      res.overall = res.failures.empty();
      results[i] = std::move(res);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  SweepResult out;
  out.instances = std::move(results);
  for (const auto& inst : out.instances) {
    if (!inst.overall) ++out.failures;
    for (const auto& [name, status] : inst.statuses) {
      auto& slot = out.check_counts[name];
      if (status == CheckStatus::Pass) ++slot[0];
      else if (status == CheckStatus::Fail) ++slot[1];
      else ++slot[2];
    }
  }
  return out;
}

}  // namespace mullat
