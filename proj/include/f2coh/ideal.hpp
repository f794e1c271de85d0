#pragma once

// Per-degree linear algebra on top of QuotientRing: multiplication maps,
// non-zero-divisor certificates, nilpotency and nilradical slices.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/gf2.hpp"
#include "f2coh/parallel.hpp"
#include "f2coh/polynomial.hpp"
#include "f2coh/quotient_ring.hpp"

namespace f2coh {

/// Matrix whose row i holds the coordinates in target.basis(target_degree)
/// of map(source.basis(source_degree)[i]).
inline gf2::BitMatrix map_matrix(
    const QuotientRing& source, int source_degree, const QuotientRing& target,
    int target_degree, const std::function<Polynomial(const Polynomial&)>& map) {
  const auto& basis = source.basis(source_degree);
  gf2::BitMatrix m(0, target.dimension(target_degree));
  for (const auto& b : basis)
    m.append_row(target.coordinates(map(Polynomial(source.table(), b)), target_degree));
  return m;
}

/// A subspace of the degree-d component of a quotient ring, in coordinates
/// of QuotientRing::basis(d).
struct DegreeSlice {
  int degree = 0;
  gf2::EchelonBasis basis;
  /// False when the computation was cut short by the truncation bound.
  bool within_bound = true;
  /// For nilradical slices: largest k with degree * 2^k <= truncation.
  int frobenius_steps = 0;

  std::size_t dimension() const noexcept { return basis.rank(); }

  std::vector<Polynomial> elements(const QuotientRing& q) const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis.rank(); ++i)
      out.push_back(q.from_coordinates(degree, basis.matrix.row_vector(i)));
    return out;
  }

  bool contains(const QuotientRing& q, const Polynomial& p) const {
    return gf2::member(q.coordinates(p, degree), basis).member;
  }
};

inline bool same_subspace(const DegreeSlice& a, const DegreeSlice& b) {
  return a.degree == b.degree && gf2::same_row_space(a.basis, b.basis);
}

/// Degree-d part of the ideal of q generated by `generators`.
inline DegreeSlice generated_slice(const QuotientRing& q,
                                   const std::vector<Polynomial>& generators, int d) {
  gf2::BitMatrix rows(0, q.dimension(d));
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    auto e = g.homogeneous_degree();
    if (!e) throw HomogeneityError("ideal generators must be homogeneous");
    if (*e > d) continue;
    for (const auto& m : q.basis(d - *e)) rows.append_row(q.coordinates(g.times(m), d));
  }
  return {d, gf2::rref(std::move(rows))};
}

struct NzdVerdict {
  /// per_degree[d]: multiplication Q_d -> Q_{d+deg f} is injective.
  std::vector<bool> per_degree;
  bool by_domain = false;
  std::optional<int> first_failure;
  bool all() const { return !first_failure.has_value(); }
};

enum class NzdMethod {
  kAuto,  // polynomial rings are domains: any nonzero f qualifies
  kRank,  // always compute the rank of every multiplication map
};

inline NzdVerdict is_nonzerodivisor(const Polynomial& f, const QuotientRing& q,
                                    NzdMethod method = NzdMethod::kAuto) {
  if (!same_table(f.table(), q.table())) throw TableMismatchError();
  if (f.is_zero()) {
    NzdVerdict v;
    v.per_degree.assign(static_cast<std::size_t>(q.truncation()) + 1, false);
    v.first_failure = 0;
    return v;
  }
  auto e = f.homogeneous_degree();
  if (!e) throw HomogeneityError("non-zero-divisor test needs a homogeneous element");
  if (*e > q.truncation()) throw TruncationError("element degree exceeds truncation");
  const int last = q.truncation() - *e;
  NzdVerdict v;
  v.per_degree.assign(static_cast<std::size_t>(last) + 1, true);
  if (method == NzdMethod::kAuto && q.is_polynomial_ring()) {
    v.by_domain = true;
    if (q.is_zero(f)) {
      v.per_degree.assign(v.per_degree.size(), false);
      v.first_failure = 0;
    }
    return v;
  }
  std::vector<char> ok(v.per_degree.size(), 1);
  parallel_for(ok.size(), [&](std::size_t i) {
    const int d = static_cast<int>(i);
    auto m = map_matrix(q, d, q, d + *e, [&](const Polynomial& b) { return b * f; });
    ok[i] = gf2::rank(m) == q.dimension(d);
  });
  for (std::size_t i = 0; i < ok.size(); ++i) {
    v.per_degree[i] = ok[i];
    if (!ok[i] && !v.first_failure) v.first_failure = static_cast<int>(i);
  }
  return v;
}

struct NilpotencyResult {
  /// 2^k for the smallest k with p^(2^k) = 0, when witnessed.
  std::optional<unsigned> order;
  /// Largest k examined (degree * 2^k <= truncation).
  int max_steps_checked = 0;
  bool witnessed() const { return order.has_value(); }
};

inline NilpotencyResult nilpotency_order(const Polynomial& p, const QuotientRing& q) {
  if (!same_table(p.table(), q.table())) throw TableMismatchError();
  NilpotencyResult r;
  if (q.is_zero(p)) {
    r.order = 1;
    return r;
  }
  const auto d = p.homogeneous_degree();
  if (!d) throw HomogeneityError("nilpotency needs a homogeneous element");
  if (*d == 0) throw DegenerateInputError("degree-0 elements are units, never nilpotent");
  Polynomial power = q.normal_form(p);
  long degree = *d;
  for (int k = 1; degree * 2 <= q.truncation(); ++k) {
    degree *= 2;
    power = q.normal_form(power.frobenius());
    r.max_steps_checked = k;
    if (power.is_zero()) {
      r.order = 1u << k;
      return r;
    }
  }
  return r;
}

/// Degree-d elements x with x^(2^K) = 0, K the largest exponent the bound
/// allows. Squaring is F2-linear, so this is the kernel of one linear map.
inline DegreeSlice nilradical_slice(const QuotientRing& q, int d) {
  if (d < 1) throw PreconditionError("nilradical slices start in degree 1");
  if (2 * d > q.truncation())
    throw TruncationError("nilradical slice in degree " + std::to_string(d) +
                          " needs truncation >= " + std::to_string(2 * d));
  int steps = 0;
  long top = d;
  while (top * 2 <= q.truncation()) {
    top *= 2;
    ++steps;
  }
  auto m = map_matrix(q, d, q, static_cast<int>(top), [&](const Polynomial& b) {
    Polynomial x = b;
    for (int k = 0; k < steps; ++k) x = q.normal_form(x.frobenius());
    return x;
  });
  DegreeSlice s{d, gf2::left_kernel(m)};
  s.frobenius_steps = steps;
  return s;
}

}  // namespace f2coh
