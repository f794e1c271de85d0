#pragma once

// Degree-truncated quotients F2[generators]/(relations).
//
// The presentation is first simplified without changing the ring:
//   * a relation g + (terms without g) eliminates the generator g;
//   * generators left out of every remaining relation form a free
//     polynomial tensor factor.
// Ideal slices are then built only over the "core" generators (those still
// occurring in relations). For relations r_1..r_k,
//   I^(j)_d = I^(j-1)_d + r_j * N^(j-1)_{d - deg r_j},
// where N^(j-1) is spanned by standard monomials of the previous ideal,
// because r_j * I^(j-1) already lies in I^(j-1).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/expression.hpp"
#include "f2coh/gf2.hpp"
#include "f2coh/polynomial.hpp"
#include "f2coh/series.hpp"

namespace f2coh {

inline constexpr int kDefaultTruncation = 48;

struct RingPresentation {
  TablePtr generators;
  std::vector<Polynomial> relations;
  int truncation = kDefaultTruncation;
};

namespace detail {

inline std::ptrdiff_t find_descending(const std::vector<Monomial>& sorted,
                                      const Monomial& m) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m, std::greater<>{});
  if (it == sorted.end() || !(*it == m)) return -1;
  return it - sorted.begin();
}

inline Monomial mask_monomial(const Monomial& m, const std::vector<bool>& keep,
                              const GeneratorTable& table) {
  Monomial out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (keep[i]) {
      out.exponents[i] = m.exponents[i];
      out.degree += m.exponents[i] * table.degree(i);
    }
  }
  return out;
}

}  // namespace detail

class QuotientRing {
 public:
  explicit QuotientRing(RingPresentation presentation)
      : presentation_(std::move(presentation)) {
    validate();
    simplify();
    build_core_slices();
    build_bases();
  }

  const RingPresentation& presentation() const noexcept { return presentation_; }
  const TablePtr& table() const noexcept { return presentation_.generators; }
  int truncation() const noexcept { return presentation_.truncation; }

  /// True when the simplified presentation has no relations left, i.e. the
  /// ring is a polynomial ring and hence an integral domain.
  bool is_polynomial_ring() const noexcept { return core_relations_.empty(); }

  bool is_eliminated(std::size_t generator) const { return eliminated_.at(generator); }

  const std::vector<Monomial>& basis(int d) const {
    check_degree(d);
    return basis_[static_cast<std::size_t>(d)];
  }
  std::size_t dimension(int d) const { return basis(d).size(); }

  std::int64_t monomial_count(int d) const {
    check_degree(d);
    return monomial_counts_[static_cast<std::size_t>(d)];
  }
  std::int64_t ideal_dimension(int d) const {
    return monomial_count(d) - static_cast<std::int64_t>(dimension(d));
  }

  /// Canonical coset representative, a sum of standard monomials.
  Polynomial normal_form(const Polynomial& p) const {
    if (!same_table(p.table(), table())) throw TableMismatchError();
    if (p.is_zero()) return p;
    auto d = p.homogeneous_degree();
    if (!d) throw HomogeneityError("normal form requires a homogeneous polynomial");
    check_degree(*d);
    Polynomial q = has_elimination_ ? substitute(p, images_, table()) : p;
    if (core_relations_.empty() || q.is_zero()) return q;

    std::vector<std::pair<Monomial, Monomial>> split;  // (free part, core part)
    split.reserve(q.size());
    for (const auto& m : q.terms())
      split.emplace_back(detail::mask_monomial(m, free_mask_, *table()),
                         detail::mask_monomial(m, core_mask_, *table()));
    std::sort(split.begin(), split.end(), std::greater<>{});

    std::vector<Monomial> out;
    for (std::size_t i = 0; i < split.size();) {
      std::size_t j = i;
      while (j < split.size() && split[j].first == split[i].first) ++j;
      const Monomial& free_part = split[i].first;
      const auto& slice = core_[static_cast<std::size_t>(split[i].second.degree)];
      gf2::BitVector v(slice.monomials.size());
      for (std::size_t k = i; k < j; ++k)
        v.flip(static_cast<std::size_t>(
            detail::find_descending(slice.monomials, split[k].second)));
      slice.ideal.reduce(v);
      for (std::size_t c = v.first_set(); c < v.size();
           c = gf2::next_set_bit(v.words(), v.size(), c + 1))
        out.push_back(slice.monomials[c] * free_part);
      i = j;
    }
    return Polynomial::from_terms(table(), std::move(out));
  }

  bool is_zero(const Polynomial& p) const { return normal_form(p).is_zero(); }

  /// Coordinates of the class of p (homogeneous of degree d, or zero) in
  /// basis(d).
  gf2::BitVector coordinates(const Polynomial& p, int d) const {
    const auto& b = basis(d);
    gf2::BitVector v(b.size());
    const Polynomial nf = normal_form(p);
    if (!nf.is_zero() && nf.homogeneous_degree() != d)
      throw DimensionError("polynomial degree differs from requested degree");
    for (const auto& m : nf.terms()) {
      auto idx = detail::find_descending(b, m);
      if (idx < 0) throw Error("normal form left the standard basis");
      v.set(static_cast<std::size_t>(idx));
    }
    return v;
  }

  Polynomial from_coordinates(int d, const gf2::BitVector& v) const {
    const auto& b = basis(d);
    if (v.size() != b.size()) throw DimensionError("coordinate length mismatch");
    std::vector<Monomial> terms;
    for (std::size_t c = v.first_set(); c < v.size();
         c = gf2::next_set_bit(v.words(), v.size(), c + 1))
      terms.push_back(b[c]);
    return Polynomial::from_sorted_terms(table(), std::move(terms));
  }

  /// Same ring with one more relation.
  QuotientRing with_relation(const Polynomial& r) const {
    RingPresentation p = presentation_;
    p.relations.push_back(r);
    return QuotientRing(std::move(p));
  }

  QuotientRing with_truncation(int truncation) const {
    RingPresentation p = presentation_;
    p.truncation = truncation;
    return QuotientRing(std::move(p));
  }

 private:
  struct CoreSlice {
    std::vector<Monomial> monomials;  // descending
    gf2::SemiEchelon ideal;
  };

  void check_degree(int d) const {
    if (d < 0 || d > truncation())
      throw TruncationError("degree " + std::to_string(d) +
                            " outside truncation bound " +
                            std::to_string(truncation()));
  }

  void validate() {
    if (!presentation_.generators) throw ValidationError("missing generator table");
    if (presentation_.truncation < 1)
      throw ValidationError("truncation degree must be positive");
    std::vector<Polynomial> kept;
    for (const auto& r : presentation_.relations) {
      if (!same_table(r.table(), table())) throw TableMismatchError();
      if (r.is_zero()) continue;
      auto d = r.homogeneous_degree();
      if (!d)
        throw HomogeneityError("relation '" + to_string(r) + "' is not homogeneous");
      if (*d == 0)
        throw ValidationError("degree-0 relation '" + to_string(r) +
                              "' collapses the ring");
      kept.push_back(r);
    }
    presentation_.relations = std::move(kept);
  }

  void simplify() {
    const std::size_t n = table()->size();
    eliminated_.assign(n, false);
    images_.clear();
    for (std::size_t i = 0; i < n; ++i)
      images_.push_back(Polynomial::generator(table(), i));
    // relations above the bound cannot affect degrees <= D
    std::vector<Polynomial> rels;
    for (const auto& r : presentation_.relations)
      if (*r.homogeneous_degree() <= truncation()) rels.push_back(r);

    auto eliminable = [&](const Polynomial& r) -> std::optional<std::size_t> {
      for (std::size_t i = n; i-- > 0;) {
        if (eliminated_[i]) continue;
        const Monomial g = generator_monomial(*table(), i);
        bool linear = false;
        bool elsewhere = false;
        for (const auto& m : r.terms()) {
          if (m == g)
            linear = true;
          else if (m.exponents[i])
            elsewhere = true;
        }
        if (linear && !elsewhere) return i;
      }
      return std::nullopt;
    };

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j < rels.size(); ++j) {
        auto g = eliminable(rels[j]);
        if (!g) continue;
        Polynomial image = rels[j] + Polynomial::generator(table(), *g);
        std::vector<Polynomial> sub;
        for (std::size_t i = 0; i < n; ++i)
          sub.push_back(i == *g ? image : Polynomial::generator(table(), i));
        for (auto& img : images_) img = substitute(img, sub, table());
        eliminated_[*g] = true;
        std::vector<Polynomial> rest;
        for (std::size_t k = 0; k < rels.size(); ++k) {
          if (k == j) continue;
          Polynomial r = substitute(rels[k], sub, table());
          if (!r.is_zero()) rest.push_back(std::move(r));
        }
        rels = std::move(rest);
        has_elimination_ = true;
        changed = true;
        break;
      }
    }
    core_relations_ = std::move(rels);

    core_mask_.assign(n, false);
    free_mask_.assign(n, false);
    for (const auto& r : core_relations_)
      for (const auto& m : r.terms())
        for (std::size_t i = 0; i < n; ++i)
          if (m.exponents[i]) core_mask_[i] = true;
    for (std::size_t i = 0; i < n; ++i)
      free_mask_[i] = !eliminated_[i] && !core_mask_[i];
  }

  void build_core_slices() {
    const int top = truncation();
    core_.resize(static_cast<std::size_t>(top) + 1);
    if (core_relations_.empty()) return;
    for (int d = 0; d <= top; ++d) {
      auto& s = core_[static_cast<std::size_t>(d)];
      s.monomials = monomial_basis(*table(), d, &core_mask_);
      s.ideal = gf2::SemiEchelon(s.monomials.size());
    }
    for (const auto& r : core_relations_) {
      const int e = *r.homogeneous_degree();
      for (int d = top; d >= e; --d) {
        auto& target = core_[static_cast<std::size_t>(d)];
        const auto& lower = core_[static_cast<std::size_t>(d - e)];
        for (std::size_t c = 0; c < lower.monomials.size(); ++c) {
          if (lower.ideal.is_pivot(c)) continue;
          gf2::BitVector row(target.monomials.size());
          for (const auto& t : r.terms()) {
            auto idx = detail::find_descending(target.monomials,
                                               t * lower.monomials[c]);
            row.flip(static_cast<std::size_t>(idx));
          }
          target.ideal.insert(std::move(row));
        }
      }
    }
  }

  void build_bases() {
    const int top = truncation();
    const std::size_t n = table()->size();
    std::vector<std::vector<Monomial>> free_basis(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k)
      free_basis[static_cast<std::size_t>(k)] = monomial_basis(*table(), k, &free_mask_);

    std::vector<std::vector<Monomial>> standard(static_cast<std::size_t>(top) + 1);
    if (core_relations_.empty()) {
      standard[0].push_back(Monomial{});
    } else {
      for (int a = 0; a <= top; ++a) {
        const auto& s = core_[static_cast<std::size_t>(a)];
        for (std::size_t c = 0; c < s.monomials.size(); ++c)
          if (!s.ideal.is_pivot(c))
            standard[static_cast<std::size_t>(a)].push_back(s.monomials[c]);
      }
    }

    basis_.assign(static_cast<std::size_t>(top) + 1, {});
    for (int d = 0; d <= top; ++d) {
      auto& out = basis_[static_cast<std::size_t>(d)];
      for (int a = 0; a <= d; ++a)
        for (const auto& c : standard[static_cast<std::size_t>(a)])
          for (const auto& f : free_basis[static_cast<std::size_t>(d - a)])
            out.push_back(c * f);
      std::sort(out.begin(), out.end(), std::greater<>{});
    }

    monomial_counts_.assign(static_cast<std::size_t>(top) + 1, 0);
    monomial_counts_[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const int g = table()->degree(i);
      for (int d = g; d <= top; ++d)
        monomial_counts_[static_cast<std::size_t>(d)] +=
            monomial_counts_[static_cast<std::size_t>(d - g)];
    }
  }

  RingPresentation presentation_;
  std::vector<bool> eliminated_;
  std::vector<Polynomial> images_;
  bool has_elimination_ = false;
  std::vector<Polynomial> core_relations_;
  std::vector<bool> core_mask_;
  std::vector<bool> free_mask_;
  std::vector<CoreSlice> core_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::int64_t> monomial_counts_;
};

inline Polynomial normal_form(const Polynomial& p, const QuotientRing& q) {
  return q.normal_form(p);
}

inline HilbertSeries hilbert(const QuotientRing& q) {
  HilbertSeries h;
  for (int d = 0; d <= q.truncation(); ++d)
    h.coefficients.push_back(static_cast<std::int64_t>(q.dimension(d)));
  return h;
}

}  // namespace f2coh
