#pragma once

/*! \file
 * \brief Multiplicatively closed subsets and the S-relative classifiers:
 *        S-prime, S-primary, S-irreducible, S-compact, S-maximal, saturation,
 *        S-stationary chains and the S-Noetherian checks.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mullat/core.hpp"
#include "mullat/mult_lattice.hpp"

namespace mullat {

inline void require_class(const MultiplicativeLattice& M, AxiomClass c, const char* what) {
  if (!M.at_least(c))
    throw Error(ErrorCode::WrongClass, std::string(what) + " needs class >= " +
                                           std::string(to_string(c)) + ", lattice is " +
                                           std::string(to_string(M.axiom_class())));
}

/// A validated multiplicatively closed subset: contains 1, excludes 0 and is
/// closed under the lattice multiplication. Members are kept in ascending
/// index order; every witness search that iterates them inherits the
/// least-index rule from that.
class MClosedSet {
 public:
  static MClosedSet validate(const MultiplicativeLattice& M, std::vector<ElementId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (ElementId s : members)
      if (s >= M.size()) throw Error(ErrorCode::SizeMismatch, "member index out of range", {s});

    if (std::find(members.begin(), members.end(), M.top()) == members.end())
      throw Error(ErrorCode::MissingTop, "1 must belong to a multiplicatively closed subset");
    if (std::find(members.begin(), members.end(), M.bottom()) != members.end())
      throw Error(ErrorCode::ContainsBottom, "0 must not belong to a multiplicatively closed subset");

    MClosedSet S;
    S.host_ = &M;
    S.members_ = std::move(members);
    S.flags_.assign(M.size(), 0);
    for (ElementId s : S.members_) S.flags_[s] = 1;
    for (ElementId s1 : S.members_)
      for (ElementId s2 : S.members_)
        if (!S.flags_[M.mult(s1, s2)])
          throw Error(ErrorCode::NotClosed,
                      M.label(s1) + " * " + M.label(s2) + " = " + M.label(M.mult(s1, s2)) +
                          " escapes the subset",
                      {s1, s2});
    // Membership in the compact elements is vacuous in a finite lattice; the
    // carrier is the compact set.
    return S;
  }

  const std::vector<ElementId>& members() const { return members_; }
  bool contains(ElementId x) const { return flags_[x] != 0; }
  const MultiplicativeLattice* host() const { return host_; }

 private:
  const MultiplicativeLattice* host_ = nullptr;
  std::vector<ElementId> members_;
  std::vector<std::uint8_t> flags_;
};

namespace detail {
inline void check_host(const MultiplicativeLattice& M, const MClosedSet& S) {
  if (S.host() != &M)
    throw Error(ErrorCode::SizeMismatch, "multiplicatively closed subset belongs to another lattice");
}
}  // namespace detail

/// The uniform multiplier certifying an S-classification; `extra` carries the
/// second multiplier where a definition uses one.
struct Witness {
  ElementId s;
  std::optional<ElementId> extra;
};

enum class ClassifyReason {
  Classified,        ///< the predicate was decided on its own terms
  NoUniformWitness,  ///< eligible, but no single s works for every pair
  SMeetsElement,     ///< ineligible: some t in S lies below the element
};

inline std::string_view to_string(ClassifyReason r) {
  switch (r) {
    case ClassifyReason::Classified: return "classified";
    case ClassifyReason::NoUniformWitness: return "no_uniform_witness";
    case ClassifyReason::SMeetsElement: return "s_meets_element";
  }
  return "?";
}

/// Result of an S-prime or S-primary test. `witness` is set exactly when the
/// element satisfies the predicate; the reason distinguishes a genuine
/// classification failure from an eligibility failure (t <= element for some
/// t in S), which the examples in Id(Z12) rely on.
struct SWitnessResult {
  std::optional<Witness> witness;
  ClassifyReason reason = ClassifyReason::Classified;
  std::optional<ElementId> blocking_t;

  bool ok() const { return witness.has_value(); }
};

/// Least t in S with t <= x, if any.
inline std::optional<ElementId> s_meets(const MultiplicativeLattice& M, const MClosedSet& S,
                                        ElementId x) {
  for (ElementId t : S.members())
    if (M.leq(t, x)) return t;
  return std::nullopt;
}

/// S-prime: one s in S works uniformly for every pair, a * b <= p implies
/// s * a <= p or s * b <= p. The quantifier order matters; a per-pair witness
/// would be a strictly weaker predicate and is deliberately not offered.
inline SWitnessResult is_s_prime(const MultiplicativeLattice& M, const MClosedSet& S, ElementId p) {
  detail::check_host(M, S);
  if (auto t = s_meets(M, S, p))
    return {std::nullopt, ClassifyReason::SMeetsElement, t};
  const std::size_t n = M.size();
  for (ElementId s : S.members()) {
    bool uniform = true;
    for (ElementId a = 0; a < n && uniform; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (M.leq(M.mult(a, b), p) && !M.leq(M.mult(s, a), p) && !M.leq(M.mult(s, b), p)) {
          uniform = false;
          break;
        }
    if (uniform) return {Witness{s, std::nullopt}, ClassifyReason::Classified, std::nullopt};
  }
  return {std::nullopt, ClassifyReason::NoUniformWitness, std::nullopt};
}

/// S-primary: one s in S with c * d <= q implying s * c <= q or
/// s * d <= radical(q). The disjunct is asymmetric; both orderings of each
/// pair are covered because (c, d) ranges over ordered pairs.
inline SWitnessResult is_s_primary(const MultiplicativeLattice& M, const MClosedSet& S,
                                   ElementId q) {
  detail::check_host(M, S);
  require_class(M, AxiomClass::CLattice, "is_s_primary");
  if (auto t = s_meets(M, S, q))
    return {std::nullopt, ClassifyReason::SMeetsElement, t};
  const std::size_t n = M.size();
  const ElementId rq = M.radical(q);
  for (ElementId s : S.members()) {
    bool uniform = true;
    for (ElementId c = 0; c < n && uniform; ++c)
      for (ElementId d = 0; d < n; ++d)
        if (M.leq(M.mult(c, d), q) && !M.leq(M.mult(s, c), q) && !M.leq(M.mult(s, d), rq)) {
          uniform = false;
          break;
        }
    if (uniform) return {Witness{s, std::nullopt}, ClassifyReason::Classified, std::nullopt};
  }
  return {std::nullopt, ClassifyReason::NoUniformWitness, std::nullopt};
}

/// One triggering triple s * (a ^ b) <= q <= a ^ b together with the
/// least-index s' that resolves it.
struct SIrreducibleWitness {
  ElementId s, a, b;
  ElementId s_prime;
};

/// Result of the S-irreducible test. The witness multiplier s' is per triple,
/// mirroring the definition's "for some s ... there exists s'" asymmetry; on
/// failure the first triple (s, a, b) with no admissible s' is reported.
struct SIrreducibleResult {
  bool value = false;
  ClassifyReason reason = ClassifyReason::Classified;
  std::optional<ElementId> blocking_t;
  std::optional<std::array<ElementId, 3>> failing_triple;
  std::vector<SIrreducibleWitness> witnesses;  ///< filled only on request

  bool eligible() const { return reason != ClassifyReason::SMeetsElement; }
};

/// S-irreducible: whenever s * (a ^ b) <= q <= a ^ b, some s' in S (dependent
/// on the triple) gives s * s' * a <= q or s * s' * b <= q. With
/// collect_witnesses the chosen s' of every triggering triple is returned.
inline SIrreducibleResult is_s_irreducible(const MultiplicativeLattice& M, const MClosedSet& S,
                                           ElementId q, bool collect_witnesses = false) {
  detail::check_host(M, S);
  if (auto t = s_meets(M, S, q)) {
    SIrreducibleResult r;
    r.reason = ClassifyReason::SMeetsElement;
    r.blocking_t = t;
    return r;
  }
  SIrreducibleResult out;
  const std::size_t n = M.size();
  for (ElementId s : S.members())
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        const ElementId m = M.meet(a, b);
        if (!M.leq(M.mult(s, m), q) || !M.leq(q, m)) continue;
        bool found = false;
        for (ElementId sp : S.members()) {
          const ElementId ssp = M.mult(s, sp);
          if (M.leq(M.mult(ssp, a), q) || M.leq(M.mult(ssp, b), q)) {
            if (collect_witnesses) out.witnesses.push_back({s, a, b, sp});
            found = true;
            break;
          }
        }
        if (!found) {
          out.value = false;
          out.witnesses.clear();
          out.failing_triple = {{s, a, b}};
          return out;
        }
      }
  out.value = true;
  return out;
}

struct SCompactWitness {
  ElementId s;
  ElementId bound;
};

/// S-compact: s * a <= b <= a with b compact. Every element of a finite
/// lattice qualifies (take s = 1, b = a); the witness is the least (s, b) in
/// s-major index order.
inline SCompactWitness is_s_compact(const MultiplicativeLattice& M, const MClosedSet& S,
                                    ElementId a) {
  detail::check_host(M, S);
  for (ElementId s : S.members())
    for (ElementId b = 0; b < M.size(); ++b)
      if (M.leq(M.mult(s, a), b) && M.leq(b, a)) return {s, b};
  // Unreachable in a finite lattice: 1 * a <= a <= a.
  throw Error(ErrorCode::WrongClass, "no S-compact witness in a finite lattice", {a});
}

/// S-saturation a_S = join of all x with s * x <= a for some s in S.
inline ElementId saturation(const MultiplicativeLattice& M, const MClosedSet& S, ElementId a) {
  detail::check_host(M, S);
  require_class(M, AxiomClass::Multiplicative, "saturation");
  ElementId out = M.bottom();
  for (ElementId x = 0; x < M.size(); ++x)
    for (ElementId s : S.members())
      if (M.leq(M.mult(s, x), a)) {
        out = M.join(out, x);
        break;
      }
  return out;
}

/// All S-maximal elements of T: m in T such that one s in S has s * a <= m
/// for every a in T above m. The definition is stated for c-lattices; calls
/// below that class are rejected.
inline std::vector<ElementId> s_maximal_elements(const MultiplicativeLattice& M,
                                                 const MClosedSet& S,
                                                 const std::vector<ElementId>& T) {
  detail::check_host(M, S);
  require_class(M, AxiomClass::CLattice, "s_maximal_elements");
  if (T.empty()) throw Error(ErrorCode::EmptySubset, "S-maximal elements of an empty subset");
  std::vector<ElementId> sorted(T);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<ElementId> out;
  for (ElementId m : sorted) {
    bool maximal = false;
    for (ElementId s : S.members()) {
      bool works = true;
      for (ElementId a : sorted)
        if (M.leq(m, a) && !M.leq(M.mult(s, a), m)) {
          works = false;
          break;
        }
      if (works) {
        maximal = true;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

/// A nondecreasing chain prefix i_1 <= i_2 <= ... <= i_k.
struct ChainSpec {
  std::vector<ElementId> elements;
};

struct StationaryVerdict {
  enum class Kind { Certified, NotInPrefix } kind;
  ElementId s = 0;    ///< certificate multiplier (Certified only)
  std::size_t n = 0;  ///< 1-based certificate index (Certified only)

  bool certified() const { return kind == Kind::Certified; }
};

/// Semi-decision of the S-stationary property on a chain prefix. A
/// certificate (s, n) means s * i_m <= i_n for every m >= n; it is only
/// issued when the prefix has visibly stabilized (its final step repeats the
/// last distinct value), so the certificate extends to the constant
/// continuation. NotInPrefix is not a refutation: an abstract strictly
/// increasing prefix says nothing about how it continues.
inline StationaryVerdict check_s_stationary(const MultiplicativeLattice& M, const MClosedSet& S,
                                            const ChainSpec& chain) {
  detail::check_host(M, S);
  const auto& c = chain.elements;
  if (c.empty()) throw Error(ErrorCode::NotAscending, "empty chain");
  for (ElementId x : c)
    if (x >= M.size()) throw Error(ErrorCode::SizeMismatch, "chain element out of range", {x});
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!M.leq(c[i], c[i + 1]))
      throw Error(ErrorCode::NotAscending,
                  M.label(c[i]) + " !<= " + M.label(c[i + 1]) + " at position " + std::to_string(i + 1),
                  {c[i], c[i + 1]});

  const bool stabilized = c.size() == 1 || c[c.size() - 2] == c.back();
  if (!stabilized) return {StationaryVerdict::Kind::NotInPrefix};

  for (ElementId s : S.members())
    for (std::size_t n = 0; n < c.size(); ++n) {
      bool ok = true;
      for (std::size_t m = n; m < c.size(); ++m)
        if (!M.leq(M.mult(s, c[m]), c[n])) {
          ok = false;
          break;
        }
      if (ok) return {StationaryVerdict::Kind::Certified, s, n + 1};
    }
  return {StationaryVerdict::Kind::NotInPrefix};
}

/// Deterministic sampling knobs for the S-Noetherian equivalence checks.
struct NoetherianSampling {
  unsigned subset_samples = 200;
  unsigned chain_samples = 50;
  std::uint64_t seed = 0x6d756c6c6174ULL;
};

/// S-Noetherian check on an r-lattice: every element must be S-compact
/// (literal scan), cross-checked against the equivalent S-maximal-element
/// condition on sampled subsets and the S-stationary property on sampled
/// stabilized chains. All three agree on every finite instance; a mismatch
/// would expose a classifier bug, never new mathematics.
inline PropertyReport is_s_noetherian(const MultiplicativeLattice& M, const MClosedSet& S,
                                      const NoetherianSampling& sampling = {}) {
  detail::check_host(M, S);
  require_class(M, AxiomClass::RLattice, "is_s_noetherian");
  const std::size_t n = M.size();

  bool all_compact = true;
  ElementId bad = 0;
  for (ElementId a = 0; a < n; ++a) {
    bool compact = false;
    for (ElementId s : S.members()) {
      for (ElementId b = 0; b < n; ++b)
        if (M.leq(M.mult(s, a), b) && M.leq(b, a)) {
          compact = true;
          break;
        }
      if (compact) break;
    }
    if (!compact) {
      all_compact = false;
      bad = a;
      break;
    }
  }

  std::mt19937_64 rng(sampling.seed);
  bool all_subsets_maximal = true;
  std::vector<ElementId> T;
  for (unsigned k = 0; k < sampling.subset_samples && all_subsets_maximal; ++k) {
    T.clear();
    for (ElementId x = 0; x < n; ++x)
      if (rng() & 1) T.push_back(x);
    if (T.empty()) T.push_back(static_cast<ElementId>(rng() % n));
    if (s_maximal_elements(M, S, T).empty()) all_subsets_maximal = false;
  }

  bool all_chains_stationary = true;
  for (unsigned k = 0; k < sampling.chain_samples && all_chains_stationary; ++k) {
    ChainSpec chain;
    ElementId cur = static_cast<ElementId>(rng() % n);
    chain.elements.push_back(cur);
    for (std::size_t step = 0; step <= n; ++step) {
      cur = M.join(cur, static_cast<ElementId>(rng() % n));
      chain.elements.push_back(cur);
    }
    chain.elements.push_back(cur);  // extend until it repeats
    if (!check_s_stationary(M, S, chain).certified()) all_chains_stationary = false;
  }

  if (all_compact && all_subsets_maximal && all_chains_stationary)
    return PropertyReport::pass("s_noetherian",
                                "all elements S-compact; " + std::to_string(sampling.subset_samples) +
                                    " sampled subsets have S-maximal elements; " +
                                    std::to_string(sampling.chain_samples) +
                                    " sampled chains certified S-stationary");
  if (!all_compact)
    return PropertyReport::fail("s_noetherian", {bad}, "element is not S-compact");
  return PropertyReport::fail("s_noetherian", {},
                              all_subsets_maximal ? "sampled chain not certified S-stationary"
                                                  : "sampled subset lacks an S-maximal element");
}

/// Cohen-Kaplansky S-version, checked as a biconditional with both sides
/// computed independently: (every element S-compact) iff (every S-prime
/// element S-compact).
inline PropertyReport cohen_kaplansky_verify(const MultiplicativeLattice& M, const MClosedSet& S) {
  detail::check_host(M, S);
  require_class(M, AxiomClass::RLattice, "cohen_kaplansky_verify");
  const std::size_t n = M.size();

  auto literally_s_compact = [&](ElementId a) {
    for (ElementId s : S.members())
      for (ElementId b = 0; b < n; ++b)
        if (M.leq(M.mult(s, a), b) && M.leq(b, a)) return true;
    return false;
  };

  bool lhs = true;
  for (ElementId a = 0; a < n && lhs; ++a) lhs = literally_s_compact(a);

  bool rhs = true;
  ElementId bad_prime = 0;
  for (ElementId p = 0; p < n && rhs; ++p) {
    if (p == M.top()) continue;
    if (!is_s_prime(M, S, p).ok()) continue;
    if (!literally_s_compact(p)) {
      rhs = false;
      bad_prime = p;
    }
  }

  if (lhs == rhs)
    return PropertyReport::pass("cohen_kaplansky",
                                std::string("both sides ") + (lhs ? "true" : "false") +
                                    "; finite instances cannot exercise the Zorn's-lemma direction");
  std::vector<ElementId> cex;
  if (!rhs) cex.push_back(bad_prime);
  return PropertyReport::fail("cohen_kaplansky", cex, "biconditional sides disagree");
}

/// Closure lemma: products of S-compact with principal elements, and joins of
/// compact with S-compact elements, stay S-compact.
inline PropertyReport s_compact_closure_check(const MultiplicativeLattice& M, const MClosedSet& S) {
  detail::check_host(M, S);
  require_class(M, AxiomClass::RLattice, "s_compact_closure_check");
  const std::size_t n = M.size();

  auto s_compact = [&](ElementId a) {
    for (ElementId s : S.members())
      for (ElementId b = 0; b < n; ++b)
        if (M.leq(M.mult(s, a), b) && M.leq(b, a)) return true;
    return false;
  };

  const std::vector<ElementId> principal = M.principal_elements();
  for (ElementId i = 0; i < n; ++i) {
    if (!s_compact(i)) continue;
    for (ElementId j : principal)
      if (!s_compact(M.mult(i, j)))
        return PropertyReport::fail("s_compact_closure", {i, j}, "i * j not S-compact");
    for (ElementId k = 0; k < n; ++k)
      if (!s_compact(M.join(k, i)))
        return PropertyReport::fail("s_compact_closure", {k, i}, "k v i not S-compact");
  }
  return PropertyReport::pass("s_compact_closure",
                              std::to_string(n) + " S-compact elements, " +
                                  std::to_string(principal.size()) + " principal multipliers");
}

}  // namespace mullat
