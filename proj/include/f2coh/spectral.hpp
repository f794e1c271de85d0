#pragma once

// Two spectral-sequence drivers:
//  * the transgression chain of a fibration with fiber BZ/2 whose fiber class
//    u transgresses step by step (d_{2^k+1}(u^{2^k}) = v_k). Valid only while
//    every v_k is a non-zero-divisor on the current base, which is enforced;
//  * the mod 2 Bockstein sequence with d_1 = Q_0, reported up to the parity
//    collapse criterion (an E_2 page concentrated in even degrees).

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/expression.hpp"
#include "f2coh/ideal.hpp"
#include "f2coh/quotient_ring.hpp"
#include "f2coh/series.hpp"
#include "f2coh/steenrod.hpp"

namespace f2coh {

struct SerreState {
  std::shared_ptr<const QuotientRing> base;
  /// The surviving fiber class is u^(2^fiber_power).
  int fiber_power = 0;
  std::optional<Polynomial> transgression;
  bool permanent = false;

  int page() const { return (1 << fiber_power) + 1; }
  int fiber_degree() const { return 1 << fiber_power; }

  SerreState with_transgression(Polynomial v) const {
    SerreState s = *this;
    s.transgression = std::move(v);
    s.permanent = false;
    return s;
  }
  SerreState made_permanent() const {
    SerreState s = *this;
    s.transgression.reset();
    s.permanent = true;
    return s;
  }
};

inline SerreState serre_start(std::shared_ptr<const QuotientRing> base) {
  return SerreState{std::move(base), 0, std::nullopt, false};
}

/// Kills the transgression image: base -> base/(v), u^(2^k) -> u^(2^(k+1)).
inline SerreState serre_step(const SerreState& s) {
  if (s.permanent) throw PreconditionError("fiber class is already permanent");
  if (!s.transgression) throw PreconditionError("no transgression image supplied");
  const Polynomial& v = *s.transgression;
  if (!v.is_zero() && v.homogeneous_degree() != s.page())
    throw HomogeneityError("transgression image on page " + std::to_string(s.page()) +
                           " must be homogeneous of degree " + std::to_string(s.page()));
  const NzdVerdict nzd = is_nonzerodivisor(v, *s.base);
  if (!nzd.all())
    throw NzdViolationError("transgression image '" + to_string(v) +
                            "' is a zero divisor in degree " +
                            std::to_string(*nzd.first_failure));
  SerreState next;
  next.base = std::make_shared<const QuotientRing>(s.base->with_relation(v));
  next.fiber_power = s.fiber_power + 1;
  return next;
}

/// Series of base ⊗ F2[u^(2^k)] up to the base's truncation.
inline Coefficients page_series(const SerreState& s) {
  const int top = s.base->truncation();
  RationalForm fiber{{}, {s.fiber_degree()}};
  return multiply_series(hilbert(*s.base).coefficients, fiber.expand(top), top);
}

inline HilbertSeries serre_total(const SerreState& s) {
  if (!s.permanent) throw PreconditionError("total series needs a permanent fiber class");
  return {page_series(s), std::nullopt};
}

/// True when x is zero in the Q-cohomology, i.e. lies in the image of q0.
inline bool is_boundary(const QuotientRing& ring, const Derivation& q0, const Polynomial& x) {
  const Polynomial nf = ring.normal_form(x);
  if (nf.is_zero()) return true;
  const int deg = *nf.homogeneous_degree();
  if (deg < q0.shift()) return false;
  gf2::BitMatrix rows(0, ring.dimension(deg));
  for (const auto& b : ring.basis(deg - q0.shift()))
    rows.append_row(ring.coordinates(derive(q0, Polynomial(ring.table(), b)), deg));
  return gf2::member(ring.coordinates(nf, deg), gf2::rref(std::move(rows))).member;
}

struct GeneratorFate {
  std::string generator;
  std::string fate;  // "squared", "killed" or "survives"
};

struct BocksteinPage {
  int page = 1;
  Coefficients dims;  // -1 marks edge degrees
  std::vector<GeneratorFate> fates;
  std::string note;
};

struct BocksteinResult {
  std::vector<BocksteinPage> pages;
  bool collapsed = false;
  std::optional<int> first_odd_class;  // degree of a surviving odd class, if any
  QCohomology e2;
};

inline BocksteinResult bockstein_pages(const QuotientRing& ring, const Derivation& q0,
                                       int max_page) {
  if (max_page < 1) throw PreconditionError("max_page must be >= 1");
  BocksteinResult out;
  BocksteinPage first;
  first.page = 1;
  first.dims = hilbert(ring).coefficients;
  first.note = "mod 2 cohomology";
  out.pages.push_back(first);
  if (max_page == 1) return out;

  out.e2 = q_cohomology(ring, q0);
  BocksteinPage second;
  second.page = 2;
  second.dims = out.e2.dims();
  const auto& table = *ring.table();
  for (std::size_t g = 0; g < table.size(); ++g) {
    if (ring.is_eliminated(g)) continue;
    const int deg = table.degree(g);
    if (deg > ring.truncation() - q0.shift()) continue;
    const Polynomial gen = Polynomial::generator(ring.table(), g);
    std::string fate = "survives";
    if (!ring.is_zero(derive(q0, gen)))
      fate = "squared";
    else if (is_boundary(ring, q0, gen))
      fate = "killed";
    second.fates.push_back({table.name(g), fate});
  }
  for (int d = 1; d <= out.e2.last_evaluable(); d += 2) {
    if (out.e2.degrees[static_cast<std::size_t>(d)].cohomology != 0) {
      out.first_odd_class = d;
      break;
    }
  }
  out.collapsed = !out.first_odd_class.has_value();
  second.note = out.collapsed ? "no odd-degree classes up to degree " +
                                    std::to_string(out.e2.last_evaluable()) +
                                    ": all higher differentials vanish"
                              : "odd-degree class in degree " +
                                    std::to_string(*out.first_odd_class) +
                                    ": higher pages not determined";
  out.pages.push_back(second);
  if (!out.collapsed) return out;
  for (int r = 3; r <= max_page; ++r) {
    BocksteinPage p = second;
    p.page = r;
    p.note = "equal to page 2 by collapse";
    out.pages.push_back(std::move(p));
  }
  return out;
}

struct ClassNilpotence {
  Polynomial cls{nullptr};
  Polynomial square{nullptr};  // normal form in the ring
  bool square_zero_in_ring = false;
  bool square_zero_in_cohomology = false;
  /// Smallest 2^k with cls^(2^k) a boundary, if reached inside the bound.
  std::optional<unsigned> cohomology_order;
};

inline std::vector<ClassNilpotence> einfty_nilpotence_report(
    const QuotientRing& ring, const Derivation& q0, const std::vector<Polynomial>& classes) {
  std::vector<ClassNilpotence> out;
  for (const auto& c : classes) {
    if (!ring.is_zero(derive(q0, c)))
      throw PreconditionError("'" + to_string(c) + "' is not a cycle");
    ClassNilpotence r;
    r.cls = ring.normal_form(c);
    const auto d = c.homogeneous_degree();
    if (!d || 2 * *d > ring.truncation())
      throw TruncationError("square of '" + to_string(c) + "' exceeds the truncation bound");
    r.square = ring.normal_form(c.frobenius());
    r.square_zero_in_ring = r.square.is_zero();
    r.square_zero_in_cohomology = is_boundary(ring, q0, r.square);
    Polynomial power = c;
    long deg = *d;
    for (unsigned order = 2; deg * 2 <= ring.truncation(); order *= 2) {
      deg *= 2;
      power = ring.normal_form(power.frobenius());
      if (is_boundary(ring, q0, power)) {
        r.cohomology_order = order;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace f2coh
