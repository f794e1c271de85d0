#pragma once

// Steenrod squares from generator tables via the Cartan formula, Milnor
// primitives Q_i, derivations, and Q-cohomology of quotient rings.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/expression.hpp"
#include "f2coh/gf2.hpp"
#include "f2coh/ideal.hpp"
#include "f2coh/parallel.hpp"
#include "f2coh/polynomial.hpp"
#include "f2coh/quotient_ring.hpp"

namespace f2coh {

/// squares[g][i] = Sq^i(g) for i = 0..deg g.
class SteenrodSpec {
 public:
  SteenrodSpec(TablePtr table, std::vector<std::vector<Polynomial>> squares)
      : table_(std::move(table)), squares_(std::move(squares)) {
    if (squares_.size() != table_->size())
      throw ValidationError("Steenrod table needs an entry per generator");
    for (std::size_t g = 0; g < squares_.size(); ++g) {
      const int n = table_->degree(g);
      const auto& name = table_->name(g);
      if (squares_[g].size() != static_cast<std::size_t>(n) + 1)
        throw ValidationError("Steenrod entry for '" + name + "' needs Sq^0..Sq^" +
                              std::to_string(n));
      for (int i = 0; i <= n; ++i) {
        const auto& s = squares_[g][static_cast<std::size_t>(i)];
        if (!same_table(s.table(), table_)) throw TableMismatchError();
        if (!s.is_zero() && s.homogeneous_degree() != n + i)
          throw HomogeneityError("Sq^" + std::to_string(i) + "(" + name + ") must have degree " +
                                 std::to_string(n + i));
      }
      const Polynomial gen = Polynomial::generator(table_, g);
      if (!(squares_[g].front() == gen))
        throw ValidationError("Sq^0(" + name + ") must equal " + name);
      if (!(squares_[g].back() == gen.frobenius()))
        throw ValidationError("Sq^" + std::to_string(n) + "(" + name + ") must equal " + name + "^2");
    }
  }

  const TablePtr& table() const noexcept { return table_; }
  const Polynomial& square(std::size_t generator, int i) const {
    return squares_.at(generator).at(static_cast<std::size_t>(i));
  }

 private:
  TablePtr table_;
  std::vector<std::vector<Polynomial>> squares_;
};

namespace detail {

using Graded = std::vector<Polynomial>;  // index i holds the Sq^i component

inline Graded graded_product(const Graded& a, const Graded& b, int k, const TablePtr& table) {
  Graded c(static_cast<std::size_t>(k) + 1, Polynomial(table));
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(k); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(k); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace detail

/// Sq^k(p) via the total square, a ring homomorphism on generator tables.
inline Polynomial sq(int k, const Polynomial& p, const SteenrodSpec& spec) {
  if (!same_table(p.table(), spec.table())) throw TableMismatchError();
  if (k < 0) throw PreconditionError("negative Steenrod square index");
  if (!p.is_homogeneous()) throw HomogeneityError("Sq^k needs a homogeneous input");
  const auto& table = spec.table();
  Polynomial out(table);
  if (p.is_zero()) return out;
  if (k == 0) return p;
  if (k > *p.homogeneous_degree()) return out;
  std::vector<Monomial> collected;
  for (const auto& m : p.terms()) {
    detail::Graded total{Polynomial::one(table)};
    for (std::size_t g = 0; g < table->size(); ++g) {
      if (!m.exponents[g]) continue;
      detail::Graded gen;
      for (int i = 0; i <= std::min(k, table->degree(g)); ++i) gen.push_back(spec.square(g, i));
      for (unsigned e = 0; e < m.exponents[g]; ++e)
        total = detail::graded_product(total, gen, k, table);
    }
    if (total.size() > static_cast<std::size_t>(k)) {
      const auto& t = total[static_cast<std::size_t>(k)].terms();
      collected.insert(collected.end(), t.begin(), t.end());
    }
  }
  return Polynomial::from_terms(table, std::move(collected));
}

/// Milnor primitive by recursion: Q_0 = Sq^1,
/// Q_{i+1} = Sq^{2^{i+1}} Q_i + Q_i Sq^{2^{i+1}}.
inline Polynomial milnor_q(int i, const Polynomial& p, const SteenrodSpec& spec) {
  if (i < 0) throw PreconditionError("negative Milnor index");
  if (i == 0) return sq(1, p, spec);
  const int s = 1 << i;
  return sq(s, milnor_q(i - 1, p, spec), spec) + milnor_q(i - 1, sq(s, p, spec), spec);
}

/// F2-linear map raising degree by `shift`, extended by the Leibniz rule.
class Derivation {
 public:
  Derivation(TablePtr table, int shift, std::vector<Polynomial> values)
      : table_(std::move(table)), shift_(shift), values_(std::move(values)) {
    if (shift_ < 1) throw ValidationError("derivation shift must be positive");
    if (values_.size() != table_->size())
      throw ValidationError("derivation needs a value per generator");
    for (std::size_t g = 0; g < values_.size(); ++g) {
      if (!same_table(values_[g].table(), table_)) throw TableMismatchError();
      if (!values_[g].is_zero() && values_[g].homogeneous_degree() != table_->degree(g) + shift_)
        throw HomogeneityError("derivation value on '" + table_->name(g) + "' must have degree " +
                               std::to_string(table_->degree(g) + shift_));
    }
  }

  const TablePtr& table() const noexcept { return table_; }
  int shift() const noexcept { return shift_; }
  const std::vector<Polynomial>& values() const noexcept { return values_; }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  TablePtr table_;
  int shift_;
  std::vector<Polynomial> values_;
};

inline Derivation milnor_derivation(int i, const SteenrodSpec& spec) {
  std::vector<Polynomial> values;
  for (std::size_t g = 0; g < spec.table()->size(); ++g)
    values.push_back(milnor_q(i, Polynomial::generator(spec.table(), g), spec));
  return Derivation(spec.table(), (2 << i) - 1, std::move(values));
}

inline Polynomial derive(const Derivation& d, const Polynomial& p) {
  if (!same_table(p.table(), d.table())) throw TableMismatchError();
  std::vector<Monomial> collected;
  for (const auto& m : p.terms()) {
    for (std::size_t g = 0; g < d.table()->size(); ++g) {
      // d(g^e) = e g^(e-1) d(g): only odd exponents survive mod 2
      if (m.exponents[g] % 2 == 0 || d.values()[g].is_zero()) continue;
      Monomial rest = m;
      rest.exponents[g] -= 1;
      rest.degree -= d.table()->degree(g);
      for (const auto& t : d.values()[g].terms()) collected.push_back(t * rest);
    }
  }
  return Polynomial::from_terms(d.table(), std::move(collected));
}

/// Compares Q_k(x) with Sq^{2^k} ... Sq^2 Sq^1 (x) for x of degree 2.
inline bool composite_square_identity(const SteenrodSpec& spec, const Polynomial& x, int k) {
  if (k < 1) throw PreconditionError("composite-square check needs k >= 1");
  if (!x.is_zero() && x.homogeneous_degree() != 2)
    throw PreconditionError("composite-square check needs a degree-2 element");
  Polynomial composite = x;
  for (int j = 0; j <= k; ++j) composite = sq(1 << j, composite, spec);
  return composite == milnor_q(k, x, spec);
}

struct QCohomologyDegree {
  int degree = 0;
  std::size_t dimension = 0;  // of the quotient in this degree
  std::size_t kernel = 0;
  std::size_t image = 0;  // boundaries landing in this degree
  std::size_t cohomology = 0;
  bool edge = false;  // kernel not computable inside the truncation bound
  std::vector<Polynomial> representatives;
};

struct QCohomology {
  int shift = 0;
  int truncation = 0;
  std::vector<QCohomologyDegree> degrees;

  /// Cohomology dimensions with edge degrees set to -1.
  Coefficients dims() const {
    Coefficients c;
    for (const auto& d : degrees)
      c.push_back(d.edge ? -1 : static_cast<std::int64_t>(d.cohomology));
    return c;
  }
  int last_evaluable() const { return truncation - shift; }
};

/// Throws DescentError naming the first relation not mapped into the ideal.
/// Only relations whose image fits inside the bound are checked.
inline void check_descent(const QuotientRing& ring, const Derivation& d) {
  if (!same_table(ring.table(), d.table())) throw TableMismatchError();
  for (const auto& r : ring.presentation().relations) {
    // d(r) lands above the bound and cannot affect the truncated ring
    if (*r.homogeneous_degree() + d.shift() > ring.truncation()) continue;
    if (!ring.is_zero(derive(d, r)))
      throw DescentError("derivation does not descend: relation '" + to_string(r) +
                         "' maps to '" + to_string(ring.normal_form(derive(d, r))) + "'");
  }
}

inline QCohomology q_cohomology(const QuotientRing& ring, const Derivation& d) {
  check_descent(ring, d);
  const int top = ring.truncation();
  const int shift = d.shift();
  auto apply = [&](const Polynomial& b) { return ring.normal_form(derive(d, b)); };

  for (int deg = 0; deg + 2 * shift <= top; ++deg) {
    for (const auto& b : ring.basis(deg)) {
      Polynomial twice = apply(apply(Polynomial(ring.table(), b)));
      if (!twice.is_zero())
        throw DifferentialError("derivation does not square to zero: d(d(" +
                                to_string(Polynomial(ring.table(), b)) + ")) = " + to_string(twice));
    }
  }

  const std::size_t n = static_cast<std::size_t>(top) + 1;
  std::vector<gf2::BitMatrix> maps(n);
  std::vector<std::size_t> ranks(n, 0);
  parallel_for(n, [&](std::size_t i) {
    const int deg = static_cast<int>(i);
    if (deg + shift > top) return;
    maps[i] = map_matrix(ring, deg, ring, deg + shift, apply);
    ranks[i] = gf2::rank(maps[i]);
  });

  QCohomology out;
  out.shift = shift;
  out.truncation = top;
  out.degrees.resize(n);
  parallel_for(n, [&](std::size_t i) {
    const int deg = static_cast<int>(i);
    auto& entry = out.degrees[i];
    entry.degree = deg;
    entry.dimension = ring.dimension(deg);
    entry.image = deg >= shift ? ranks[i - static_cast<std::size_t>(shift)] : 0;
    if (deg + shift > top) {
      entry.edge = true;
      return;
    }
    entry.kernel = entry.dimension - ranks[i];
    entry.cohomology = entry.kernel - entry.image;
    // Representatives: kernel vectors reduced against the image's echelon
    // basis, so each class is shown by its least member.
    gf2::EchelonBasis boundaries =
        deg >= shift ? gf2::rref(maps[i - static_cast<std::size_t>(shift)])
                     : gf2::EchelonBasis{gf2::BitMatrix(0, entry.dimension), {}};
    const gf2::EchelonBasis cycles = gf2::left_kernel(maps[i]);
    gf2::BitMatrix reduced(0, entry.dimension);
    for (std::size_t r = 0; r < cycles.rank(); ++r) {
      auto v = cycles.matrix.row_vector(r);
      boundaries.reduce(v);
      if (v.any()) reduced.append_row(v);
    }
    const gf2::EchelonBasis classes = gf2::rref(std::move(reduced));
    if (classes.rank() != entry.cohomology)
      throw Error("cohomology representative count disagrees with ker - im");
    for (std::size_t r = 0; r < classes.rank(); ++r)
      entry.representatives.push_back(ring.from_coordinates(deg, classes.matrix.row_vector(r)));
  });
  return out;
}

}  // namespace f2coh
