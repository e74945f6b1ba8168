#pragma once

/*! \file
 * \brief Minimal S-primary decompositions, the uniqueness set P and the
 *        existence / first-uniqueness style verifiers.
 */

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mullat/core.hpp"
#include "mullat/mult_lattice.hpp"
#include "mullat/s_theory.hpp"

namespace mullat {

/// An S-primary decomposition of `target` together with everything the
/// uniqueness theorem talks about. Components are kept in ascending index
/// order; `radicals`, `saturated_radicals` and `witnesses` align with them.
struct Decomposition {
  ElementId target = 0;
  std::vector<ElementId> components;
  std::vector<ElementId> radicals;
  std::vector<ElementId> saturated_radicals;
  std::vector<Witness> witnesses;
  bool minimal = false;
  bool distinct_saturated_radicals = false;
  bool irredundant = false;
};

/// Both eligibility readings for decomposing `a`; the decomposition machinery
/// keys on the saturation form but reports the disjointness form alongside.
struct DecompositionEligibility {
  bool saturation_proper = false;  ///< a_S < 1, the decomposition definition's precondition
  bool s_disjoint = false;         ///< t !<= a for every t in S
};

inline DecompositionEligibility decomposition_eligibility(const MultiplicativeLattice& M,
                                                          const MClosedSet& S, ElementId a) {
  return {saturation(M, S, a) != M.top(), !s_meets(M, S, a).has_value()};
}

/// All S-primary q above a, ascending. Components of any decomposition of a
/// lie here since their meet equals a.
inline std::vector<ElementId> enumerate_s_primary_above(const MultiplicativeLattice& M,
                                                        const MClosedSet& S, ElementId a) {
  require_class(M, AxiomClass::CLattice, "enumerate_s_primary_above");
  std::vector<ElementId> out;
  for (ElementId q = 0; q < M.size(); ++q) {
    if (q == M.top() || !M.leq(a, q)) continue;
    if (is_s_primary(M, S, q).ok()) out.push_back(q);
  }
  return out;
}

namespace detail {

inline Decomposition make_decomposition(const MultiplicativeLattice& M, const MClosedSet& S,
                                        ElementId target, std::vector<ElementId> components) {
  std::sort(components.begin(), components.end());
  Decomposition d;
  d.target = target;
  d.components = std::move(components);
  for (ElementId q : d.components) {
    const ElementId p = M.radical(q);
    d.radicals.push_back(p);
    d.saturated_radicals.push_back(saturation(M, S, p));
    const SWitnessResult w = is_s_primary(M, S, q);
    d.witnesses.push_back(w.witness.value_or(Witness{M.top(), std::nullopt}));
  }

  d.distinct_saturated_radicals = true;
  for (std::size_t i = 0; i < d.components.size() && d.distinct_saturated_radicals; ++i)
    for (std::size_t j = i + 1; j < d.components.size(); ++j)
      if (d.saturated_radicals[i] == d.saturated_radicals[j]) {
        d.distinct_saturated_radicals = false;
        break;
      }

  d.irredundant = true;
  for (std::size_t i = 0; i < d.components.size() && d.irredundant; ++i) {
    ElementId rest = M.top();
    for (std::size_t j = 0; j < d.components.size(); ++j)
      if (j != i) rest = M.meet(rest, d.components[j]);
    if (M.leq(saturation(M, S, rest), saturation(M, S, d.components[i]))) d.irredundant = false;
  }

  d.minimal = d.distinct_saturated_radicals && d.irredundant;
  return d;
}

/// Enumerates subsets of `candidates` of exactly k elements in lexicographic
/// order, pruning extensions that cannot reach a minimal decomposition: a
/// component lying above the meet so far is redundant, and redundancy always
/// violates the second minimality clause.
inline void combinations_with_pruning(const MultiplicativeLattice& M,
                                      const std::vector<ElementId>& candidates, std::size_t k,
                                      const std::function<bool(const std::vector<ElementId>&)>& visit) {
  std::vector<ElementId> chosen;
  std::vector<ElementId> meets{M.top()};
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (stop) return;
    if (chosen.size() == k) {
      if (!visit(chosen)) stop = true;
      return;
    }
    for (std::size_t i = start; i < candidates.size() && !stop; ++i) {
      const ElementId q = candidates[i];
      if (M.leq(meets.back(), q)) continue;  // q would be a redundant component
      chosen.push_back(q);
      meets.push_back(M.meet(meets.back(), q));
      rec(i + 1);
      chosen.pop_back();
      meets.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

/// Checks both minimality clauses of a well-formed decomposition: pairwise
/// distinct saturated radicals, and no component whose removal is invisible
/// after saturation. Reports the first failing clause and index.
inline PropertyReport is_minimal(const MultiplicativeLattice& M, const MClosedSet& S,
                                 const Decomposition& d) {
  if (d.components.empty())
    throw Error(ErrorCode::MalformedDecomposition, "decomposition has no components");
  ElementId m = M.top();
  for (ElementId q : d.components) m = M.meet(m, q);
  if (m != d.target)
    throw Error(ErrorCode::MalformedDecomposition,
                "components meet to " + M.label(m) + ", not " + M.label(d.target), {m, d.target});
  for (ElementId q : d.components)
    if (!is_s_primary(M, S, q).ok())
      throw Error(ErrorCode::MalformedDecomposition, M.label(q) + " is not S-primary", {q});

  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (std::size_t j = i + 1; j < d.components.size(); ++j) {
      const ElementId si = saturation(M, S, M.radical(d.components[i]));
      const ElementId sj = saturation(M, S, M.radical(d.components[j]));
      if (si == sj)
        return PropertyReport::fail("minimal", {d.components[i], d.components[j]},
                                    "clause 1: saturated radicals coincide at components " +
                                        std::to_string(i) + ", " + std::to_string(j));
    }

  for (std::size_t i = 0; i < d.components.size(); ++i) {
    ElementId rest = M.top();
    for (std::size_t j = 0; j < d.components.size(); ++j)
      if (j != i) rest = M.meet(rest, d.components[j]);
    if (M.leq(saturation(M, S, rest), saturation(M, S, d.components[i])))
      return PropertyReport::fail("minimal", {d.components[i]},
                                  "clause 2: component " + std::to_string(i) + " is redundant");
  }
  return PropertyReport::pass("minimal");
}

/// Searches for a minimal S-primary decomposition of a, by increasing
/// component count and then lexicographic component order. When a itself is
/// S-primary the single-component decomposition is returned preferentially.
/// Returns nullopt only when no S-primary decomposition of a exists at all.
inline std::optional<Decomposition> find_minimal_decomposition(const MultiplicativeLattice& M,
                                                               const MClosedSet& S, ElementId a) {
  require_class(M, AxiomClass::RLattice, "find_minimal_decomposition");
  if (saturation(M, S, a) == M.top())
    throw Error(ErrorCode::SaturationIsTop, "S-saturation of " + M.label(a) + " is 1", {a});

  if (is_s_primary(M, S, a).ok()) return detail::make_decomposition(M, S, a, {a});

  const std::vector<ElementId> candidates = enumerate_s_primary_above(M, S, a);
  std::optional<Decomposition> fallback;
  for (std::size_t k = 1; k <= candidates.size(); ++k) {
    std::optional<Decomposition> found;
    detail::combinations_with_pruning(M, candidates, k, [&](const std::vector<ElementId>& chosen) {
      ElementId m = M.top();
      for (ElementId q : chosen) m = M.meet(m, q);
      if (m != a) return true;
      Decomposition d = detail::make_decomposition(M, S, a, chosen);
      if (!fallback) fallback = d;
      if (d.minimal) {
        found = std::move(d);
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return fallback;  // no minimal one; nullopt when nothing meets to a
}

/// Every minimal S-primary decomposition of a with at most `max_components`
/// components (default: distinct saturated radicals among the candidates plus
/// one, which bounds any minimal decomposition by clause 1).
inline std::vector<Decomposition> enumerate_minimal_decompositions(
    const MultiplicativeLattice& M, const MClosedSet& S, ElementId a,
    std::optional<std::size_t> max_components = std::nullopt) {
  require_class(M, AxiomClass::RLattice, "enumerate_minimal_decompositions");
  if (saturation(M, S, a) == M.top())
    throw Error(ErrorCode::SaturationIsTop, "S-saturation of " + M.label(a) + " is 1", {a});

  const std::vector<ElementId> candidates = enumerate_s_primary_above(M, S, a);
  std::size_t cap = max_components.value_or(0);
  if (!max_components) {
    std::set<ElementId> sats;
    for (ElementId q : candidates) sats.insert(saturation(M, S, M.radical(q)));
    cap = sats.size() + 1;
  }
  cap = std::min(cap, candidates.size());

  std::vector<Decomposition> out;
  for (std::size_t k = 1; k <= cap; ++k)
    detail::combinations_with_pruning(M, candidates, k, [&](const std::vector<ElementId>& chosen) {
      ElementId m = M.top();
      for (ElementId q : chosen) m = M.meet(m, q);
      if (m == a) {
        Decomposition d = detail::make_decomposition(M, S, a, chosen);
        if (d.minimal) out.push_back(std::move(d));
      }
      return true;
    });
  return out;
}

/// The uniqueness set P = { (sqrt(a : x))_S : x in L, s x !<= a for all s,
/// (sqrt(a : x))_S prime }, computed literally by scanning every x.
inline std::vector<ElementId> uniqueness_set_P(const MultiplicativeLattice& M, const MClosedSet& S,
                                               ElementId a) {
  require_class(M, AxiomClass::CLattice, "uniqueness_set_P");
  if (saturation(M, S, a) == M.top())
    throw Error(ErrorCode::SaturationIsTop, "S-saturation of " + M.label(a) + " is 1", {a});

  std::set<ElementId> P;
  for (ElementId x = 0; x < M.size(); ++x) {
    bool excluded = false;
    for (ElementId s : S.members())
      if (M.leq(M.mult(s, x), a)) {
        excluded = true;
        break;
      }
    if (excluded) continue;
    const ElementId r = saturation(M, S, M.radical(M.residual(a, x)));
    if (r != M.top() && M.is_prime(r)) P.insert(r);
  }
  return {P.begin(), P.end()};
}

/// First uniqueness: every minimal S-primary decomposition of a has the same
/// saturated-radical set, and that set is exactly P.
inline PropertyReport verify_first_uniqueness(const MultiplicativeLattice& M, const MClosedSet& S,
                                              ElementId a) {
  const std::vector<Decomposition> all = enumerate_minimal_decompositions(M, S, a);
  if (all.empty())
    throw Error(ErrorCode::NoDecomposition, M.label(a) + " has no minimal S-primary decomposition",
                {a});
  const std::vector<ElementId> P = uniqueness_set_P(M, S, a);
  for (const Decomposition& d : all) {
    std::set<ElementId> sats(d.saturated_radicals.begin(), d.saturated_radicals.end());
    if (std::vector<ElementId>(sats.begin(), sats.end()) != P)
      return PropertyReport::fail("first_uniqueness", d.components,
                                  "saturated-radical set differs from P at target " + M.label(a));
  }
  return PropertyReport::pass("first_uniqueness", std::to_string(all.size()) +
                                                      " minimal decompositions agree on P");
}

/// Theorem check: every S-irreducible element (with S disjoint from it) is
/// S-primary.
inline PropertyReport verify_irreducible_implies_primary(const MultiplicativeLattice& M,
                                                         const MClosedSet& S) {
  require_class(M, AxiomClass::RLattice, "verify_irreducible_implies_primary");
  for (ElementId q = 0; q < M.size(); ++q) {
    if (q == M.top() || s_meets(M, S, q)) continue;
    if (is_s_irreducible(M, S, q).value && !is_s_primary(M, S, q).ok())
      return PropertyReport::fail("irreducible_implies_primary", {q},
                                  M.label(q) + " is S-irreducible but not S-primary");
  }
  return PropertyReport::pass("irreducible_implies_primary");
}

/// Corollary check: every radical element disjoint from S is a finite meet of
/// S-prime elements. The meet of all S-primes above a is the least achievable,
/// so it decides feasibility exactly.
inline PropertyReport verify_radical_corollary(const MultiplicativeLattice& M, const MClosedSet& S) {
  require_class(M, AxiomClass::RLattice, "verify_radical_corollary");
  for (ElementId a = 0; a < M.size(); ++a) {
    if (a == M.top() || M.radical(a) != a || s_meets(M, S, a)) continue;
    ElementId m = M.top();
    for (ElementId p = 0; p < M.size(); ++p)
      if (p != M.top() && M.leq(a, p) && is_s_prime(M, S, p).ok()) m = M.meet(m, p);
    if (m != a)
      return PropertyReport::fail("radical_corollary", {a},
                                  "radical element " + M.label(a) +
                                      " is not a meet of S-prime elements (best: " + M.label(m) + ")");
  }
  return PropertyReport::pass("radical_corollary");
}

}  // namespace mullat
