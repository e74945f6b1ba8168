#pragma once

/*! \file
 * \brief Element ids, error codes and check reports shared by the whole library.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mullat {

/// Dense index of a lattice element. Valid only relative to the lattice that
/// produced it; mixing ids across lattices is a caller bug.
using ElementId = std::size_t;

enum class ErrorCode {
  // order / lattice construction
  NotAPoset,
  NotALattice,
  NoBounds,
  // multiplication attachment
  NotCommutative,
  NotAssociative,
  NoIdentity,
  NotMonotone,
  ProductAboveMeet,
  DegenerateLattice,
  // classifier preconditions
  NotProper,
  WrongClass,
  // multiplicatively closed subsets
  MissingTop,
  ContainsBottom,
  NotClosed,
  EmptySubset,
  NotAscending,
  // decomposition
  SaturationIsTop,
  MalformedDecomposition,
  NoDecomposition,
  // ring-side multiplicative sets
  RingSetNotClosed,
  RingSetContainsZero,
  RingSetMissingOne,
  // io / plumbing
  SizeMismatch,
  UnknownLabel,
  ParseError,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::ProductAboveMeet: return "ProductAboveMeet";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::MissingTop: return "MissingTop";
    case ErrorCode::ContainsBottom: return "ContainsBottom";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotAscending: return "NotAscending";
    case ErrorCode::SaturationIsTop: return "SaturationIsTop";
    case ErrorCode::MalformedDecomposition: return "MalformedDecomposition";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::RingSetNotClosed: return "RingSetNotClosed";
    case ErrorCode::RingSetContainsZero: return "RingSetContainsZero";
    case ErrorCode::RingSetMissingOne: return "RingSetMissingOne";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Library error. `witness()` carries the offending element tuple when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<ElementId> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::vector<ElementId>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<ElementId> witness_;
};

enum class CheckStatus { Pass, Fail, Skip };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

/// Outcome of one axiom or theorem check. On failure `counterexample` holds the
/// first violating tuple in lexicographic element-index order, so snapshots of
/// reports are stable across runs.
struct PropertyReport {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::vector<ElementId> counterexample;
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
  bool failed() const { return status == CheckStatus::Fail; }
  bool skipped() const { return status == CheckStatus::Skip; }

  static PropertyReport pass(std::string name, std::string detail = {}) {
    return {std::move(name), CheckStatus::Pass, {}, std::move(detail)};
  }
  static PropertyReport fail(std::string name, std::vector<ElementId> cex,
                             std::string detail = {}) {
    return {std::move(name), CheckStatus::Fail, std::move(cex), std::move(detail)};
  }
  static PropertyReport skip(std::string name, std::string reason) {
    return {std::move(name), CheckStatus::Skip, {}, std::move(reason)};
  }
};

}  // namespace mullat
