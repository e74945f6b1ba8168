#pragma once

/*! \file
 * \brief Id(Z_n) as a multiplicative lattice, lifting of ring multiplicative
 *        sets, ring-side brute-force classifiers and the ring/lattice
 *        correspondence checks.
 *
 * Ideals of Z_n are in bijection with the divisors of n: the ideal dZ_n for
 * d | n, with d = n representing (0) and d = 1 the whole ring. Ring-side
 * computations below work on raw residues only, so they form an oracle that is
 * genuinely independent of the lattice tables they are compared against.
 */

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mullat/core.hpp"
#include "mullat/finite_lattice.hpp"
#include "mullat/mult_lattice.hpp"
#include "mullat/s_theory.hpp"

namespace mullat {

/// Id(Z_n) with element i owning generator divisors()[i]. Divisors ascend, so
/// element 0 is the ring (top) and the last element is (0) (bottom).
struct ZnLattice {
  int n = 0;
  std::vector<int> divisors;
  MultiplicativeLattice M;

  ElementId element_of_divisor(int d) const {
    for (std::size_t i = 0; i < divisors.size(); ++i)
      if (divisors[i] == d) return i;
    throw Error(ErrorCode::UnknownLabel, std::to_string(d) + " does not divide " + std::to_string(n));
  }

  /// Ideal generated by a residue: (r) = (gcd(r, n)); (0) maps to d = n.
  ElementId element_of_residue(int r) const {
    const int rr = ((r % n) + n) % n;
    return element_of_divisor(rr == 0 ? n : std::gcd(rr, n));
  }

  int divisor_of(ElementId e) const { return divisors[e]; }
};

inline std::string zn_ideal_label(int d, int n) {
  return d == n ? "(0)" : "(" + std::to_string(d) + ")";
}

/// Builds Id(Z_n): order (a) <= (b) iff b | a, join (gcd(a, b)), meet
/// (gcd(lcm(a, b), n)), multiplication (gcd(ab, n)). The order goes through
/// the validated lattice builder; tests cross-check the resulting tables
/// against the divisor arithmetic.
inline ZnLattice ideal_lattice_zn(int n) {
  if (n < 2) throw Error(ErrorCode::ParseError, "Z_n needs n >= 2, got " + std::to_string(n));
  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);

  const std::size_t k = divisors.size();
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int d : divisors) labels.push_back(zn_ideal_label(d, n));

  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (divisors[i] % divisors[j] == 0) pairs.emplace_back(i, j);

  FiniteLattice L = FiniteLattice::build_from_leq(std::move(labels), pairs);

  ZnLattice zn;
  zn.n = n;
  zn.divisors = divisors;

  MultTable table(k, std::vector<ElementId>(k));
  auto index_of = [&](long long d) {
    for (std::size_t i = 0; i < k; ++i)
      if (divisors[i] == d) return static_cast<ElementId>(i);
    throw Error(ErrorCode::ParseError, "internal: product escaped the divisor set");
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i][j] = index_of(std::gcd(static_cast<long long>(divisors[i]) * divisors[j],
                                      static_cast<long long>(n)));

  zn.M = MultiplicativeLattice::attach_mult(std::move(L), table);
  return zn;
}

/// Validates a ring-side multiplicative set by brute force: 1 in S, 0 not in
/// S, closed under multiplication mod n. Residues are normalized mod n but
/// closure is never auto-completed. Returns the sorted residue set.
inline std::vector<int> validate_ring_mult_set(int n, const std::vector<int>& s_ring) {
  std::vector<int> s;
  for (int r : s_ring) s.push_back(((r % n) + n) % n);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  if (!s.empty() && s.front() == 0)
    throw Error(ErrorCode::RingSetContainsZero, "0 lies in the ring multiplicative set");
  if (std::find(s.begin(), s.end(), 1) == s.end())
    throw Error(ErrorCode::RingSetMissingOne, "1 is missing from the ring multiplicative set");
  for (int a : s)
    for (int b : s) {
      const int c = static_cast<int>((static_cast<long long>(a) * b) % n);
      if (std::find(s.begin(), s.end(), c) == s.end())
        throw Error(ErrorCode::RingSetNotClosed,
                    std::to_string(a) + " * " + std::to_string(b) + " = " + std::to_string(c) +
                        " mod " + std::to_string(n) + " escapes the set");
    }
  return s;
}

/// Lifts a validated ring multiplicative set to S_L = { (s) : s in S }.
inline MClosedSet lift_mult_set(const ZnLattice& zn, const std::vector<int>& s_ring) {
  const std::vector<int> s = validate_ring_mult_set(zn.n, s_ring);
  std::vector<ElementId> members;
  for (int r : s) members.push_back(zn.element_of_residue(r));
  return MClosedSet::validate(zn.M, std::move(members));
}

/// Ring-side classification of every ideal of Z_n, by brute force over
/// residues. Indexed by divisor position (same order as ZnLattice::divisors).
struct RingSideClassification {
  std::vector<int> divisors;
  std::vector<std::uint8_t> eligible;           ///< S and the ideal are disjoint
  std::vector<std::uint8_t> s_prime;            ///< element-wise definition
  std::vector<std::uint8_t> s_prime_ideal_pair; ///< ideal-pair characterization
  std::vector<std::uint8_t> s_primary;
  std::vector<std::uint8_t> s_irreducible;
  std::vector<int> radical_generator;           ///< generator divisor of the ring radical
  bool s_noetherian = false;                    ///< every ideal S-finite
};

inline RingSideClassification classify_ring_side(int n, const std::vector<int>& s_ring) {
  const std::vector<int> S = validate_ring_mult_set(n, s_ring);
  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  const std::size_t k = divisors.size();

  RingSideClassification out;
  out.divisors = divisors;
  out.eligible.assign(k, 0);
  out.s_prime.assign(k, 0);
  out.s_prime_ideal_pair.assign(k, 0);
  out.s_primary.assign(k, 0);
  out.s_irreducible.assign(k, 0);
  out.radical_generator.assign(k, 0);

  // x belongs to dZ_n iff d | x; valid because d | n.
  auto in_ideal = [](int x, int d) { return x % d == 0; };

  for (std::size_t di = 0; di < k; ++di) {
    const int d = divisors[di];

    // Radical members: r with r^j in dZ_n for some j.
    std::vector<std::uint8_t> rad(n, 0);
    for (int r = 0; r < n; ++r) {
      long long p = r % n;
      for (int j = 1; j <= n; ++j) {
        if (in_ideal(static_cast<int>(p), d)) {
          rad[r] = 1;
          break;
        }
        p = (p * r) % n;
      }
    }
    int g = n;
    for (int r = 0; r < n; ++r)
      if (rad[r]) g = std::gcd(g, r);
    out.radical_generator[di] = g == 0 ? n : g;

    bool eligible = true;
    for (int s : S)
      if (in_ideal(s, d)) eligible = false;
    out.eligible[di] = eligible;
    if (!eligible) continue;

    // Element-wise S-prime: one s for all residue pairs.
    for (int s : S) {
      bool uniform = true;
      for (int a = 0; a < n && uniform; ++a)
        for (int b = 0; b < n; ++b)
          if (in_ideal(a * b % n, d) && !in_ideal(s * a % n, d) && !in_ideal(s * b % n, d)) {
            uniform = false;
            break;
          }
      if (uniform) {
        out.s_prime[di] = 1;
        break;
      }
    }

    // Element-wise S-primary: one s, second disjunct lands in the radical.
    for (int s : S) {
      bool uniform = true;
      for (int a = 0; a < n && uniform; ++a)
        for (int b = 0; b < n; ++b)
          if (in_ideal(a * b % n, d) && !in_ideal(s * a % n, d) && !rad[s * b % n]) {
            uniform = false;
            break;
          }
      if (uniform) {
        out.s_primary[di] = 1;
        break;
      }
    }

    // Ideal-pair S-prime (Hamed-Malek form), quantified over ideal pairs.
    auto mult_into = [&](int s, int e) {  // s * eZ_n subset of dZ_n
      for (int x = 0; x < n; x += e)
        if (!in_ideal(s * x % n, d)) return false;
      return true;
    };
    for (int s : S) {
      bool uniform = true;
      for (std::size_t ei = 0; ei < k && uniform; ++ei)
        for (std::size_t fi = 0; fi < k; ++fi) {
          const int e = divisors[ei], f = divisors[fi];
          bool product_in = true;  // (eZ_n)(fZ_n) subset of dZ_n
          for (int x = 0; x < n && product_in; x += e)
            for (int y = 0; y < n; y += f)
              if (!in_ideal(x * y % n, d)) {
                product_in = false;
                break;
              }
          if (product_in && !mult_into(s, e) && !mult_into(s, f)) {
            uniform = false;
            break;
          }
        }
      if (uniform) {
        out.s_prime_ideal_pair[di] = 1;
        break;
      }
    }

    // S-irreducible: each triggering (s, I, J) admits its own s'.
    bool irreducible = true;
    for (int s : S) {
      if (!irreducible) break;
      for (std::size_t ei = 0; ei < k && irreducible; ++ei)
        for (std::size_t fi = 0; fi < k; ++fi) {
          const int e = divisors[ei], f = divisors[fi];
          const int l = static_cast<int>(std::gcd(static_cast<long long>(e) / std::gcd(e, f) * f,
                                                  static_cast<long long>(n)));
          // s (I cap J) subset of Q, and Q subset of I cap J.
          bool trigger = true;
          for (int x = 0; x < n && trigger; x += l)
            if (!in_ideal(s * x % n, d)) trigger = false;
          for (int x = 0; x < n && trigger; x += d)
            if (!in_ideal(x, l)) trigger = false;
          if (!trigger) continue;
          bool found = false;
          for (int sp : S) {
            const int ssp = static_cast<int>(static_cast<long long>(s) * sp % n);
            if (mult_into(ssp, e) || mult_into(ssp, f)) {
              found = true;
              break;
            }
          }
          if (!found) {
            irreducible = false;
            break;
          }
        }
    }
    out.s_irreducible[di] = eligible && irreducible;
  }

  // S-finiteness of every ideal: s I subset of J subset of I with J finitely
  // generated; every ideal of Z_n is principal, so quantify J over ideals.
  out.s_noetherian = true;
  for (std::size_t di = 0; di < k && out.s_noetherian; ++di) {
    const int d = divisors[di];
    bool s_finite = false;
    for (int s : S) {
      if (s_finite) break;
      for (std::size_t gi = 0; gi < k; ++gi) {
        const int g = divisors[gi];
        bool j_in_i = true;  // gZ_n subset of dZ_n
        for (int x = 0; x < n && j_in_i; x += g)
          if (!in_ideal(x, d)) j_in_i = false;
        if (!j_in_i) continue;
        bool si_in_j = true;  // s dZ_n subset of gZ_n
        for (int x = 0; x < n && si_in_j; x += d)
          if (!in_ideal(s * x % n, g)) si_in_j = false;
        if (si_in_j) {
          s_finite = true;
          break;
        }
      }
    }
    out.s_noetherian = s_finite;
  }
  return out;
}

inline std::vector<int> ring_s_prime_ideals(int n, const std::vector<int>& s_ring) {
  const RingSideClassification c = classify_ring_side(n, s_ring);
  std::vector<int> out;
  for (std::size_t i = 0; i < c.divisors.size(); ++i)
    if (c.s_prime[i]) out.push_back(c.divisors[i]);
  return out;
}

inline std::vector<int> ring_s_primary_ideals(int n, const std::vector<int>& s_ring) {
  const RingSideClassification c = classify_ring_side(n, s_ring);
  std::vector<int> out;
  for (std::size_t i = 0; i < c.divisors.size(); ++i)
    if (c.s_primary[i]) out.push_back(c.divisors[i]);
  return out;
}

inline std::vector<int> ring_s_irreducible_ideals(int n, const std::vector<int>& s_ring) {
  const RingSideClassification c = classify_ring_side(n, s_ring);
  std::vector<int> out;
  for (std::size_t i = 0; i < c.divisors.size(); ++i)
    if (c.s_irreducible[i]) out.push_back(c.divisors[i]);
  return out;
}

/// Ring/lattice correspondence on Id(Z_n): the ring-side and lattice-side
/// classifications must agree ideal by ideal, the two radicals must coincide,
/// the element-wise and ideal-pair S-prime readings must match, and both
/// S-Noetherian readings must agree.
inline std::vector<PropertyReport> verify_correspondence(const ZnLattice& zn,
                                                         const std::vector<int>& s_ring) {
  const MClosedSet S = lift_mult_set(zn, s_ring);
  const RingSideClassification ring = classify_ring_side(zn.n, s_ring);
  const MultiplicativeLattice& M = zn.M;
  const std::size_t k = zn.divisors.size();

  std::vector<PropertyReport> reports;
  auto check_sets = [&](const char* name, auto&& ring_value, auto&& lattice_value) {
    for (ElementId e = 0; e < k; ++e) {
      const auto r = ring_value(e);
      const auto l = lattice_value(e);
      if (r != l) {
        reports.push_back(PropertyReport::fail(
            name, {e},
            M.label(e) + ": ring says " + std::to_string(static_cast<long long>(r)) +
                ", lattice says " + std::to_string(static_cast<long long>(l))));
        return;
      }
    }
    reports.push_back(PropertyReport::pass(name));
  };

  check_sets(
      "correspondence_s_prime", [&](ElementId e) { return ring.s_prime[e] != 0; },
      [&](ElementId e) { return e != M.top() && is_s_prime(M, S, e).ok(); });
  check_sets(
      "correspondence_s_primary", [&](ElementId e) { return ring.s_primary[e] != 0; },
      [&](ElementId e) { return e != M.top() && is_s_primary(M, S, e).ok(); });
  check_sets(
      "correspondence_s_irreducible", [&](ElementId e) { return ring.s_irreducible[e] != 0; },
      [&](ElementId e) { return is_s_irreducible(M, S, e).value; });
  check_sets(
      "correspondence_radical",
      [&](ElementId e) { return ring.radical_generator[e]; },
      [&](ElementId e) { return zn.divisor_of(M.radical(e)); });
  check_sets(
      "hamed_malek_equivalence", [&](ElementId e) { return ring.s_prime[e] != 0; },
      [&](ElementId e) { return ring.s_prime_ideal_pair[e] != 0; });

  bool lattice_noeth = true;
  for (ElementId a = 0; a < k && lattice_noeth; ++a) {
    bool compact = false;
    for (ElementId s : S.members()) {
      for (ElementId b = 0; b < k; ++b)
        if (M.leq(M.mult(s, a), b) && M.leq(b, a)) {
          compact = true;
          break;
        }
      if (compact) break;
    }
    lattice_noeth = compact;
  }
  if (ring.s_noetherian == lattice_noeth)
    reports.push_back(PropertyReport::pass("correspondence_s_noetherian"));
  else
    reports.push_back(PropertyReport::fail("correspondence_s_noetherian", {},
                                           "ring and lattice S-Noetherian readings disagree"));
  return reports;
}

}  // namespace mullat
