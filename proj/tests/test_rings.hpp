#pragma once

// Rings shared by the unit tests.

#include <random>
#include <string>
#include <vector>

#include "f2coh/expression.hpp"
#include "f2coh/polynomial.hpp"
#include "f2coh/quotient_ring.hpp"
#include "f2coh/steenrod.hpp"

namespace f2coh::testing {

inline TablePtr r0_table() {
  static const TablePtr t = make_table({"w2'", "w2''", "w3'", "w3''", "w16"}, {2, 2, 3, 3, 16});
  return t;
}

inline TablePtr bso3_cubed_table() {
  static const TablePtr t = make_table({"w2'", "w2''", "w2'''", "w3'", "w3''", "w3'''"},
                                       {2, 2, 2, 3, 3, 3});
  return t;
}

inline TablePtr eta_target_table() {
  static const TablePtr t = make_table({"w2'", "w2''", "u", "w16"}, {2, 2, 1, 16});
  return t;
}

inline const char* const kF5 = "w2'*w3'' + w2''*w3'";
inline const char* const kF9 = "w3'^2*w3'' + w3''^2*w3'";
inline const char* const kG4 = "w2'*w2''";
inline const char* const kG7 = "w2'*w2''*(w3'+w3'')";
inline const char* const kG8 = "w3'*w3''*(w2'+w2'')";

inline Polynomial r0(const std::string& expr) { return parse_polynomial(expr, r0_table()); }

inline QuotientRing make_ring(const TablePtr& table, const std::vector<std::string>& relations,
                              int truncation = kDefaultTruncation) {
  RingPresentation p{table, {}, truncation};
  for (const auto& r : relations) p.relations.push_back(parse_polynomial(r, table));
  return QuotientRing(std::move(p));
}

inline QuotientRing ring_r0(int truncation = kDefaultTruncation) {
  return make_ring(r0_table(), {}, truncation);
}
inline QuotientRing ring_r1(int truncation = kDefaultTruncation) {
  return make_ring(r0_table(), {kF5}, truncation);
}
inline QuotientRing ring_r2(int truncation = kDefaultTruncation) {
  return make_ring(r0_table(), {kF5, kF9}, truncation);
}
inline QuotientRing ring_eta_target(int truncation = kDefaultTruncation) {
  return make_ring(eta_target_table(), {"u^3*w2'*w2''*(w2'+w2'')"}, truncation);
}

/// Wu-formula table on three copies of BSO(3).
inline SteenrodSpec bso3_spec() {
  const auto t = bso3_cubed_table();
  auto p = [&](const std::string& e) { return parse_polynomial(e, t); };
  const std::vector<std::string> primes{"'", "''", "'''"};
  std::vector<std::vector<Polynomial>> squares;
  for (const auto& s : primes) squares.push_back({p("w2" + s), p("w3" + s), p("w2" + s + "^2")});
  for (const auto& s : primes)
    squares.push_back({p("w3" + s), p("0"), p("w2" + s + "*w3" + s), p("w3" + s + "^2")});
  return SteenrodSpec(t, std::move(squares));
}

/// Q0 on R0, with Q0(w16) = 0.
inline Derivation r0_q0() {
  return Derivation(r0_table(), 1, {r0("w3'"), r0("w3''"), r0("0"), r0("0"), r0("0")});
}

/// Generating function prod 1/(1 - t^deg) by power-series multiplication.
inline std::vector<long long> free_series(const std::vector<int>& degrees, int up_to) {
  std::vector<long long> c(static_cast<std::size_t>(up_to) + 1, 0);
  c[0] = 1;
  for (int g : degrees) {
    std::vector<long long> next(c.size(), 0);
    for (int i = 0; i <= up_to; ++i)
      for (int j = i; j <= up_to; j += g) next[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(i)];
    c = std::move(next);
  }
  return c;
}

/// Expansion of prod(1 + t^p) prod(1 - t^m) / prod(1 - t^b).
inline std::vector<long long> expand(const std::vector<int>& plus, const std::vector<int>& minus,
                                     const std::vector<int>& denominator, int up_to) {
  auto c = free_series(denominator, up_to);
  auto times = [&](int e, int sign) {
    for (int d = up_to; d >= e; --d)
      c[static_cast<std::size_t>(d)] += sign * c[static_cast<std::size_t>(d - e)];
  };
  for (int e : plus) times(e, 1);
  for (int e : minus) times(e, -1);
  return c;
}

/// Random homogeneous polynomial of degree d: each monomial kept with
/// probability 1/2.
inline Polynomial random_homogeneous(const TablePtr& table, int d, std::mt19937& rng) {
  std::vector<Monomial> terms;
  for (const auto& m : monomial_basis(*table, d))
    if (rng() & 1u) terms.push_back(m);
  return Polynomial::from_sorted_terms(table, std::move(terms));
}

/// Random polynomial mixing several degrees up to max_degree.
inline Polynomial random_polynomial(const TablePtr& table, int max_degree, std::mt19937& rng) {
  Polynomial p(table);
  for (int d = 0; d <= max_degree; ++d)
    if (rng() % 3 == 0) p += random_homogeneous(table, d, rng);
  return p;
}

}  // namespace f2coh::testing
