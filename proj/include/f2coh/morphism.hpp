#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/expression.hpp"
#include "f2coh/gf2.hpp"
#include "f2coh/ideal.hpp"
#include "f2coh/quotient_ring.hpp"

namespace f2coh {

/// Degree-preserving ring map given by the images of the source generators.
class RingMorphism {
 public:
  RingMorphism(std::shared_ptr<const QuotientRing> source,
               std::shared_ptr<const QuotientRing> target,
               std::vector<Polynomial> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    const auto& table = *source_->table();
    if (images_.size() != table.size())
      throw ValidationError("morphism needs one image per source generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!same_table(images_[i].table(), target_->table())) throw TableMismatchError();
      if (images_[i].is_zero()) continue;
      if (images_[i].homogeneous_degree() != table.degree(i))
        throw HomogeneityError("image of '" + table.name(i) + "' must be homogeneous of degree " +
                               std::to_string(table.degree(i)));
    }
  }

  const QuotientRing& source() const { return *source_; }
  const QuotientRing& target() const { return *target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  /// Image in normal form in the target.
  Polynomial operator()(const Polynomial& p) const {
    if (!same_table(p.table(), source_->table())) throw TableMismatchError();
    return target_->normal_form(substitute(p, images_, target_->table()));
  }

 private:
  std::shared_ptr<const QuotientRing> source_;
  std::shared_ptr<const QuotientRing> target_;
  std::vector<Polynomial> images_;
};

struct MorphismCheck {
  bool well_defined = true;
  std::optional<std::size_t> offending_relation;
  Polynomial residue{nullptr};  // image of the offending relation
  std::string message;
};

/// Relations above the target's bound are not checked.
inline MorphismCheck morphism_check(const RingMorphism& m) {
  const auto& relations = m.source().presentation().relations;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (*relations[i].homogeneous_degree() > m.target().truncation()) continue;
    Polynomial image = m(relations[i]);
    if (!image.is_zero())
      return {false, i, image,
              "relation '" + to_string(relations[i]) + "' maps to '" + to_string(image) + "'"};
  }
  return {};
}

struct MorphismRank {
  std::size_t rank = 0;
  std::size_t source_dimension = 0;
  bool injective() const { return rank == source_dimension; }
};

inline MorphismRank morphism_rank(const RingMorphism& m, int d) {
  if (d > std::min(m.source().truncation(), m.target().truncation()))
    throw TruncationError("morphism rank beyond truncation");
  auto mat = map_matrix(m.source(), d, m.target(), d, [&](const Polynomial& b) { return m(b); });
  return {gf2::rank(mat), m.source().dimension(d)};
}

/// Series of the image: coefficient d is the rank in degree d.
inline HilbertSeries image_series(const RingMorphism& m) {
  const int top = std::min(m.source().truncation(), m.target().truncation());
  HilbertSeries h;
  h.coefficients.assign(static_cast<std::size_t>(top) + 1, 0);
  parallel_for(h.coefficients.size(), [&](std::size_t d) {
    h.coefficients[d] = static_cast<std::int64_t>(morphism_rank(m, static_cast<int>(d)).rank);
  });
  return h;
}

}  // namespace f2coh
