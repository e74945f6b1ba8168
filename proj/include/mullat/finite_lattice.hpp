#pragma once

/*! \file
 * \brief Finite complete lattices: construction from an order relation,
 *        meet/join tables, modularity and compactness primitives.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mullat/core.hpp"

namespace mullat {

namespace detail {

/// Fixed-width bitset over 64-bit words, sized at runtime. Down-sets of
/// lattice elements are kept in this form so glb/lub searches are subset tests.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace detail

/// A finite complete lattice over dense integer-indexed elements. The order
/// relation and the meet/join tables are precomputed and validated at
/// construction; instances are immutable afterwards and safe to share across
/// threads.
class FiniteLattice {
 public:
  /// Empty lattice; only useful as an assignment target. Every validated
  /// instance comes from build_from_leq.
  FiniteLattice() = default;

  /// Builds a lattice from a label list and a (not necessarily closed) set of
  /// order pairs (i, j) meaning element i <= element j. The reflexive and
  /// transitive closure is computed here; covers and full relations are both
  /// accepted.
  ///
  /// Throws Error with NotAPoset (antisymmetry fails after closure),
  /// NotALattice (a pair lacks a meet or join) or NoBounds (empty carrier).
  static FiniteLattice build_from_leq(std::vector<std::string> labels,
                                      const std::vector<std::pair<ElementId, ElementId>>& leq_pairs) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorCode::NoBounds, "empty element set has no top or bottom");
    for (const auto& [i, j] : leq_pairs)
      if (i >= n || j >= n)
        throw Error(ErrorCode::SizeMismatch, "order pair index out of range", {i, j});

    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& [i, j] : leq_pairs) leq[i * n + j] = 1;

    // Warshall transitive closure.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j]) leq[i * n + j] = 1;

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (leq[a * n + b] && leq[b * n + a])
          throw Error(ErrorCode::NotAPoset, "antisymmetry fails for " + labels[a] + ", " + labels[b],
                      {a, b});

    FiniteLattice L;
    L.labels_ = std::move(labels);
    L.n_ = n;
    L.leq_ = std::move(leq);
    L.build_tables();
    return L;
  }

  std::size_t size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId x) const { return labels_[x]; }

  std::optional<ElementId> find_label(std::string_view lab) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (labels_[i] == lab) return i;
    return std::nullopt;
  }

  bool leq(ElementId a, ElementId b) const { return leq_[a * n_ + b] != 0; }
  ElementId meet(ElementId a, ElementId b) const { return meet_[a * n_ + b]; }
  ElementId join(ElementId a, ElementId b) const { return join_[a * n_ + b]; }
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  /// Least upper bound of a set; the empty join is bottom.
  ElementId join_all(std::span<const ElementId> xs) const {
    ElementId r = bottom_;
    for (ElementId x : xs) r = join(r, x);
    return r;
  }

  /// Greatest lower bound of a set; the empty meet is top.
  ElementId meet_all(std::span<const ElementId> xs) const {
    ElementId r = top_;
    for (ElementId x : xs) r = meet(r, x);
    return r;
  }

  /// Exhaustive modularity check: a <= c implies a v (b ^ c) = (a v b) ^ c.
  /// The counterexample, if any, is the first violating (a, b, c) in index order.
  PropertyReport is_modular() const {
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = 0; b < n_; ++b)
        for (ElementId c = 0; c < n_; ++c) {
          if (!leq(a, c)) continue;
          if (join(a, meet(b, c)) != meet(join(a, b), c))
            return PropertyReport::fail("modular", {a, b, c},
                                        "a v (b ^ c) != (a v b) ^ c at (" + labels_[a] + ", " +
                                            labels_[b] + ", " + labels_[c] + ")");
        }
    return PropertyReport::pass("modular");
  }

  /// Compact elements. In a finite lattice every join is a finite join, so the
  /// whole carrier comes back; the operation exists to keep the definitional
  /// pipeline uniform.
  std::vector<ElementId> compact_elements() const {
    std::vector<ElementId> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = i;
    return out;
  }

  const detail::Bits& down_set(ElementId x) const { return down_[x]; }

 private:
  void build_tables() {
    down_.assign(n_, detail::Bits(n_));
    up_.assign(n_, detail::Bits(n_));
    for (ElementId x = 0; x < n_; ++x)
      for (ElementId y = 0; y < n_; ++y)
        if (leq(x, y)) {
          down_[y].set(x);
          up_[x].set(y);
        }

    meet_.assign(n_ * n_, 0);
    join_.assign(n_ * n_, 0);
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = a; b < n_; ++b) {
        const ElementId m = bound_of(down_, a, b, /*lower=*/true);
        const ElementId j = bound_of(up_, a, b, /*lower=*/false);
        meet_[a * n_ + b] = meet_[b * n_ + a] = m;
        join_[a * n_ + b] = join_[b * n_ + a] = j;
      }

    std::vector<ElementId> all(n_);
    for (std::size_t i = 0; i < n_; ++i) all[i] = i;
    bottom_ = 0;
    top_ = 0;
    for (ElementId x : all) {
      bottom_ = meet_[bottom_ * n_ + x];
      top_ = join_[top_ * n_ + x];
    }
  }

  // Greatest element of down(a) & down(b) (or least of up sets, dually).
  ElementId bound_of(const std::vector<detail::Bits>& cone, ElementId a, ElementId b, bool lower) {
    const detail::Bits common = cone[a] & cone[b];
    for (ElementId g = 0; g < n_; ++g)
      if (common.test(g) && common.subset_of(cone[g])) return g;
    throw Error(ErrorCode::NotALattice,
                std::string("pair has no ") + (lower ? "meet" : "join") + ": " + labels_[a] + ", " +
                    labels_[b],
                {a, b});
  }

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  std::vector<detail::Bits> down_;
  std::vector<detail::Bits> up_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

/// Product lattice with componentwise order; element (i, j) of L1 x L2 gets
/// index i * |L2| + j and label "(l1,l2)". Meets and joins are recomputed by
/// the validated builder, so they agree with the componentwise ones by
/// uniqueness of bounds.
inline FiniteLattice product_lattice(const FiniteLattice& l1, const FiniteLattice& l2) {
  const std::size_t n1 = l1.size(), n2 = l2.size();
  std::vector<std::string> labels;
  labels.reserve(n1 * n2);
  for (ElementId i = 0; i < n1; ++i)
    for (ElementId j = 0; j < n2; ++j) labels.push_back("(" + l1.label(i) + "," + l2.label(j) + ")");

  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId i = 0; i < n1; ++i)
    for (ElementId j = 0; j < n2; ++j)
      for (ElementId k = 0; k < n1; ++k)
        for (ElementId l = 0; l < n2; ++l)
          if (l1.leq(i, k) && l2.leq(j, l)) pairs.emplace_back(i * n2 + j, k * n2 + l);

  return FiniteLattice::build_from_leq(std::move(labels), pairs);
}

}  // namespace mullat
