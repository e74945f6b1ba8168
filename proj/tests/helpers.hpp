#pragma once

// Shared test fixtures plus the divisor-arithmetic oracle. The oracle works on
// generator divisors of Z_n only and never touches the lattice tables, so it
// is an independent route to every Id(Z_n) expectation used in the tests.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "mullat/mullat.hpp"

namespace helpers {

template <typename Fn>
mullat::ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const mullat::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a mullat::Error");
}

/// k-element chain c0 < c1 < ... with multiplication = meet (= min).
inline mullat::MultiplicativeLattice chain_with_meet(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::pair<mullat::ElementId, mullat::ElementId>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i + 1 < k) pairs.emplace_back(i, i + 1);
  }
  mullat::FiniteLattice L = mullat::FiniteLattice::build_from_leq(labels, pairs);
  mullat::MultTable t(k, std::vector<mullat::ElementId>(k));
  for (mullat::ElementId a = 0; a < k; ++a)
    for (mullat::ElementId b = 0; b < k; ++b) t[a][b] = L.meet(a, b);
  return mullat::MultiplicativeLattice::attach_mult(std::move(L), t);
}

inline mullat::FiniteLattice m2_lattice() {
  return mullat::FiniteLattice::build_from_leq({"0", "a", "b", "1"},
                                               {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

inline mullat::FiniteLattice n5_lattice() {
  return mullat::FiniteLattice::build_from_leq({"0", "a", "b", "c", "1"},
                                               {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
}

inline mullat::MultiplicativeLattice attach_meet(mullat::FiniteLattice L) {
  const std::size_t n = L.size();
  mullat::MultTable t(n, std::vector<mullat::ElementId>(n));
  for (mullat::ElementId a = 0; a < n; ++a)
    for (mullat::ElementId b = 0; b < n; ++b) t[a][b] = L.meet(a, b);
  return mullat::MultiplicativeLattice::attach_mult(std::move(L), t);
}

}  // namespace helpers

namespace oracle {

// Ideals of Z_n as generator divisors: (a) <= (b) iff b | a; d = n is (0).

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline bool leq(int a, int b) { return a % b == 0; }

inline int mult(int a, int b, int n) {
  return static_cast<int>(std::gcd(static_cast<long long>(a) * b, static_cast<long long>(n)));
}

inline int join(int a, int b) { return std::gcd(a, b); }

inline int meet(int a, int b, int n) {
  const long long l = static_cast<long long>(a) / std::gcd(a, b) * b;
  return static_cast<int>(std::gcd(l, static_cast<long long>(n)));
}

inline int residual(int a, int b, int n) {
  int r = n;
  for (int x : divisors(n))
    if (leq(mult(x, b, n), a)) r = join(r, x);
  return r;
}

inline int radical(int a, int n) {
  int r = n;
  for (int x : divisors(n)) {
    int p = x;
    for (int k = 0; k < n; ++k) {
      if (leq(p, a)) {
        r = join(r, x);
        break;
      }
      const int next = mult(p, x, n);
      if (next == p) break;
      p = next;
    }
  }
  return r;
}

inline int saturation(const std::vector<int>& s_divisors, int a, int n) {
  int r = n;
  for (int x : divisors(n))
    for (int s : s_divisors)
      if (leq(mult(s, x, n), a)) {
        r = join(r, x);
        break;
      }
  return r;
}

}  // namespace oracle
