#pragma once

/*! \file
 * \brief Multiplication on a finite lattice: axiom classification, residuals,
 *        radicals, principal elements, prime and primary elements.
 */

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mullat/core.hpp"
#include "mullat/finite_lattice.hpp"

namespace mullat {

/// Axiom ladder, weakest to strongest. In a finite lattice the c-lattice
/// clauses (1-compact, compactly generated, compact products) are automatic,
/// so a computed class is never exactly Multiplicative: distributivity already
/// promotes it to CLattice.
enum class AxiomClass { VLattice, Multiplicative, CLattice, RLattice };

inline std::string_view to_string(AxiomClass c) {
  switch (c) {
    case AxiomClass::VLattice: return "v-lattice";
    case AxiomClass::Multiplicative: return "multiplicative";
    case AxiomClass::CLattice: return "c-lattice";
    case AxiomClass::RLattice: return "r-lattice";
  }
  return "?";
}

inline std::optional<AxiomClass> parse_axiom_class(std::string_view s) {
  if (s == "v-lattice" || s == "v") return AxiomClass::VLattice;
  if (s == "multiplicative" || s == "m") return AxiomClass::Multiplicative;
  if (s == "c-lattice" || s == "c") return AxiomClass::CLattice;
  if (s == "r-lattice" || s == "r") return AxiomClass::RLattice;
  return std::nullopt;
}

/// Row-major multiplication table; entry (i, j) is the element index of i * j.
using MultTable = std::vector<std::vector<ElementId>>;

/// A finite lattice with a validated commutative multiplication. Construction
/// via attach_mult computes the strongest axiom class whose checks pass and,
/// for class >= Multiplicative, full residual and radical tables. Immutable
/// afterwards; all queries are pure and thread-safe.
class MultiplicativeLattice {
 public:
  /// Empty instance; only useful as an assignment target. Every validated
  /// instance comes from attach_mult.
  MultiplicativeLattice() = default;

  /// Validates the table against the V-lattice axioms (commutative,
  /// associative, 1 identity, monotone, product below meet) and classifies the
  /// result. V-lattice violations abort with an Error carrying the witness
  /// tuple; a table that is V but not distributive is retained at class
  /// VLattice with residuals and radicals disabled.
  static MultiplicativeLattice attach_mult(FiniteLattice lattice, const MultTable& table) {
    const std::size_t n = lattice.size();
    if (n == 1)
      throw Error(ErrorCode::DegenerateLattice, "1-element lattice: 0 = 1 leaves no valid S");
    if (table.size() != n)
      throw Error(ErrorCode::SizeMismatch, "mult table has wrong number of rows");
    for (const auto& row : table)
      if (row.size() != n) throw Error(ErrorCode::SizeMismatch, "mult table row has wrong width");
    for (const auto& row : table)
      for (ElementId v : row)
        if (v >= n) throw Error(ErrorCode::SizeMismatch, "mult table entry out of range", {v});

    MultiplicativeLattice M;
    M.L_ = std::move(lattice);
    M.mult_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.mult_[i * n + j] = table[i][j];

    M.check_v_axioms();
    M.classify();
    return M;
  }

  const FiniteLattice& lattice() const { return L_; }
  std::size_t size() const { return L_.size(); }
  const std::string& label(ElementId x) const { return L_.label(x); }
  bool leq(ElementId a, ElementId b) const { return L_.leq(a, b); }
  ElementId meet(ElementId a, ElementId b) const { return L_.meet(a, b); }
  ElementId join(ElementId a, ElementId b) const { return L_.join(a, b); }
  ElementId top() const { return L_.top(); }
  ElementId bottom() const { return L_.bottom(); }

  ElementId mult(ElementId a, ElementId b) const { return mult_[a * size() + b]; }

  AxiomClass axiom_class() const { return class_; }
  bool at_least(AxiomClass c) const { return static_cast<int>(class_) >= static_cast<int>(c); }

  /// Per-clause reports backing the classification, in a fixed order.
  const std::vector<PropertyReport>& class_reports() const { return clause_reports_; }

  /// Residual (a : b) = join of all x with x * b <= a. Satisfies the Galois
  /// property x * b <= a iff x <= (a : b) once multiplication distributes.
  ElementId residual(ElementId a, ElementId b) const {
    require(AxiomClass::Multiplicative, "residual");
    return residual_[a * size() + b];
  }

  /// Radical of a: join of all x some power of which lies below a.
  ElementId radical(ElementId a) const {
    require(AxiomClass::CLattice, "radical");
    return radical_[a];
  }

  /// Meet principal test: a ^ (m * b) = m * ((a : m) ^ b) for all a, b.
  PropertyReport is_meet_principal(ElementId m) const {
    require(AxiomClass::Multiplicative, "is_meet_principal");
    const std::size_t n = size();
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        const ElementId lhs = meet(a, mult(m, b));
        const ElementId rhs = mult(m, meet(residual(a, m), b));
        if (lhs != rhs)
          return PropertyReport::fail("meet_principal(" + label(m) + ")", {a, b},
                                      "fails at (" + label(a) + ", " + label(b) + ")");
      }
    return PropertyReport::pass("meet_principal(" + label(m) + ")");
  }

  /// Join principal test: a v (b : m) = ((a * m) v b) : m for all a, b.
  PropertyReport is_join_principal(ElementId m) const {
    require(AxiomClass::Multiplicative, "is_join_principal");
    const std::size_t n = size();
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        const ElementId lhs = join(a, residual(b, m));
        const ElementId rhs = residual(join(mult(a, m), b), m);
        if (lhs != rhs)
          return PropertyReport::fail("join_principal(" + label(m) + ")", {a, b},
                                      "fails at (" + label(a) + ", " + label(b) + ")");
      }
    return PropertyReport::pass("join_principal(" + label(m) + ")");
  }

  bool is_principal(ElementId m) const {
    require(AxiomClass::Multiplicative, "is_principal");
    return principal_[m] != 0;
  }

  /// All principal (= meet and join principal) elements, ascending.
  std::vector<ElementId> principal_elements() const {
    require(AxiomClass::Multiplicative, "principal_elements");
    std::vector<ElementId> out;
    for (ElementId m = 0; m < size(); ++m)
      if (principal_[m]) out.push_back(m);
    return out;
  }

  /// Prime test for a proper element: a * b <= p implies a <= p or b <= p.
  bool is_prime(ElementId p) const {
    if (p == top()) throw Error(ErrorCode::NotProper, "prime test needs a proper element", {p});
    const std::size_t n = size();
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (leq(mult(a, b), p) && !leq(a, p) && !leq(b, p)) return false;
    return true;
  }

  /// Primary test for a proper element: a * b <= q implies a <= q or
  /// b <= radical(q).
  bool is_primary(ElementId q) const {
    if (q == top()) throw Error(ErrorCode::NotProper, "primary test needs a proper element", {q});
    require(AxiomClass::CLattice, "is_primary");
    const std::size_t n = size();
    const ElementId rq = radical_[q];
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (leq(mult(a, b), q) && !leq(a, q) && !leq(b, rq)) return false;
    return true;
  }

 private:
  void require(AxiomClass c, const char* what) const {
    if (!at_least(c))
      throw Error(ErrorCode::WrongClass, std::string(what) + " needs class >= " +
                                             std::string(to_string(c)) + ", lattice is " +
                                             std::string(to_string(class_)));
  }

  void check_v_axioms() const {
    const std::size_t n = size();
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (mult(a, b) != mult(b, a))
          throw Error(ErrorCode::NotCommutative, label(a) + " * " + label(b), {a, b});
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (mult(mult(a, b), c) != mult(a, mult(b, c)))
            throw Error(ErrorCode::NotAssociative,
                        "(" + label(a) + " * " + label(b) + ") * " + label(c), {a, b, c});
    for (ElementId a = 0; a < n; ++a)
      if (mult(a, top()) != a) throw Error(ErrorCode::NoIdentity, label(a) + " * 1 != " + label(a), {a});
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        if (!leq(a, b)) continue;
        for (ElementId c = 0; c < n; ++c)
          if (!leq(mult(a, c), mult(b, c)))
            throw Error(ErrorCode::NotMonotone,
                        label(a) + " <= " + label(b) + " but products reverse at " + label(c),
                        {a, b, c});
      }
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (!leq(mult(a, b), meet(a, b)))
          throw Error(ErrorCode::ProductAboveMeet, label(a) + " * " + label(b), {a, b});
  }

  void classify() {
    const std::size_t n = size();
    clause_reports_.push_back(PropertyReport::pass("commutative"));
    clause_reports_.push_back(PropertyReport::pass("associative"));
    clause_reports_.push_back(PropertyReport::pass("identity"));
    clause_reports_.push_back(PropertyReport::pass("monotone"));
    clause_reports_.push_back(PropertyReport::pass("product_below_meet"));

    // Distribution over arbitrary joins, finite form: binary joins plus the
    // empty join (a * 0 = 0).
    PropertyReport distrib = PropertyReport::pass("distributes_over_joins");
    for (ElementId a = 0; a < n && distrib.passed(); ++a)
      for (ElementId b = 0; b < n && distrib.passed(); ++b)
        for (ElementId c = 0; c < n; ++c)
          if (mult(a, join(b, c)) != join(mult(a, b), mult(a, c))) {
            distrib = PropertyReport::fail("distributes_over_joins", {a, b, c},
                                           "a * (b v c) != (a * b) v (a * c) at (" + label(a) +
                                               ", " + label(b) + ", " + label(c) + ")");
            break;
          }
    if (distrib.passed())
      for (ElementId a = 0; a < n; ++a)
        if (mult(a, bottom()) != bottom()) {
          distrib = PropertyReport::fail("distributes_over_joins", {a},
                                         label(a) + " * 0 != 0 (empty join)");
          break;
        }
    clause_reports_.push_back(distrib);

    class_ = AxiomClass::VLattice;
    const PropertyReport modular = L_.is_modular();
    if (!distrib.passed()) {
      clause_reports_.push_back(PropertyReport::skip("one_compact", "not multiplicative"));
      clause_reports_.push_back(PropertyReport::skip("compactly_generated", "not multiplicative"));
      clause_reports_.push_back(PropertyReport::skip("compact_products", "not multiplicative"));
      clause_reports_.push_back(modular);
      clause_reports_.push_back(
          PropertyReport::skip("principally_generated", "residuals unavailable below multiplicative"));
      return;
    }

    build_residuals();
    build_radicals();

    // Finite lattices: every element is compact, so the c-lattice clauses hold.
    clause_reports_.push_back(PropertyReport::pass("one_compact", "finite lattice"));
    clause_reports_.push_back(PropertyReport::pass("compactly_generated", "finite lattice"));
    clause_reports_.push_back(PropertyReport::pass("compact_products", "finite lattice"));
    class_ = AxiomClass::CLattice;

    clause_reports_.push_back(modular);

    principal_.assign(n, 0);
    for (ElementId m = 0; m < n; ++m)
      principal_[m] = is_meet_principal_raw(m) && is_join_principal_raw(m);

    PropertyReport pg = PropertyReport::pass("principally_generated");
    std::vector<ElementId> below;
    for (ElementId x = 0; x < n; ++x) {
      below.clear();
      for (ElementId p = 0; p < n; ++p)
        if (principal_[p] && leq(p, x)) below.push_back(p);
      if (L_.join_all(below) != x) {
        pg = PropertyReport::fail("principally_generated", {x},
                                  label(x) + " is not a join of principal elements");
        break;
      }
    }
    clause_reports_.push_back(pg);

    if (modular.passed() && pg.passed()) class_ = AxiomClass::RLattice;
  }

  bool is_meet_principal_raw(ElementId m) const {
    const std::size_t n = size();
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (meet(a, mult(m, b)) != mult(m, meet(residual_[a * n + m], b))) return false;
    return true;
  }

  bool is_join_principal_raw(ElementId m) const {
    const std::size_t n = size();
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (join(a, residual_[b * n + m]) != residual_[join(mult(a, m), b) * n + m]) return false;
    return true;
  }

  void build_residuals() {
    const std::size_t n = size();
    residual_.assign(n * n, 0);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        ElementId r = bottom();
        for (ElementId x = 0; x < n; ++x)
          if (leq(mult(x, b), a)) r = join(r, x);
        residual_[a * n + b] = r;
      }
  }

  void build_radicals() {
    const std::size_t n = size();
    radical_.assign(n, 0);
    for (ElementId a = 0; a < n; ++a) {
      ElementId r = bottom();
      for (ElementId x = 0; x < n; ++x) {
        // Powers of x descend (x^{k+1} <= x^k since products sit below meets),
        // so iterate to the fixpoint rather than to a magic bound.
        ElementId p = x;
        for (;;) {
          if (leq(p, a)) {
            r = join(r, x);
            break;
          }
          const ElementId next = mult(p, x);
          if (next == p) break;
          p = next;
        }
      }
      radical_[a] = r;
    }
  }

  FiniteLattice L_;
  std::vector<ElementId> mult_;
  std::vector<ElementId> residual_;
  std::vector<ElementId> radical_;
  std::vector<std::uint8_t> principal_;
  std::vector<PropertyReport> clause_reports_;
  AxiomClass class_ = AxiomClass::VLattice;
};

/// Componentwise product of two multiplicative lattices, revalidated through
/// attach_mult. Element (i, j) has index i * |L2| + j, matching product_lattice.
inline MultiplicativeLattice product_mult_lattice(const MultiplicativeLattice& m1,
                                                  const MultiplicativeLattice& m2) {
  FiniteLattice prod = product_lattice(m1.lattice(), m2.lattice());
  const std::size_t n1 = m1.size(), n2 = m2.size();
  MultTable table(n1 * n2, std::vector<ElementId>(n1 * n2));
  for (ElementId i = 0; i < n1; ++i)
    for (ElementId j = 0; j < n2; ++j)
      for (ElementId k = 0; k < n1; ++k)
        for (ElementId l = 0; l < n2; ++l)
          table[i * n2 + j][k * n2 + l] = m1.mult(i, k) * n2 + m2.mult(j, l);
  return MultiplicativeLattice::attach_mult(std::move(prod), table);
}

}  // namespace mullat
