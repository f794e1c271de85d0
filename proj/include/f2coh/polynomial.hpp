#pragma once

// Graded commutative polynomial arithmetic over F2.
//
// A monomial is a dense exponent vector; a polynomial is a sorted set of
// monomials (every coefficient is 1, so addition is symmetric difference).
// Canonical order is graded-lex: higher degree first, then the exponent
// vectors compared lexicographically, larger first.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "f2coh/error.hpp"

namespace f2coh {

inline constexpr std::size_t kMaxGenerators = 12;

class GeneratorTable {
 public:
  GeneratorTable(std::vector<std::string> names, std::vector<int> degrees)
      : names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size())
      throw ValidationError("generator names and degrees differ in length");
    if (names_.size() > kMaxGenerators)
      throw ValidationError("at most " + std::to_string(kMaxGenerators) +
                            " generators are supported");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw ValidationError("empty generator name");
      if (!seen.insert(names_[i]).second)
        throw ValidationError("duplicate generator name '" + names_[i] + "'");
      if (degrees_[i] < 1)
        throw ValidationError("generator '" + names_[i] +
                              "' must have degree >= 1");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const GeneratorTable&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

inline TablePtr make_table(std::vector<std::string> names,
                           std::vector<int> degrees) {
  return std::make_shared<const GeneratorTable>(std::move(names),
                                                std::move(degrees));
}

inline bool same_table(const TablePtr& a, const TablePtr& b) {
  return a == b || (a && b && *a == *b);
}

struct Monomial {
  std::array<std::uint16_t, kMaxGenerators> exponents{};
  int degree = 0;

  // Degree is consistent with the exponents under one table, so comparing it
  // first gives graded-lex order.
  std::strong_ordering operator<=>(const Monomial& other) const {
    if (auto c = degree <=> other.degree; c != 0) return c;
    return exponents <=> other.exponents;
  }
  bool operator==(const Monomial& other) const {
    return degree == other.degree && exponents == other.exponents;
  }

  bool is_one() const noexcept { return degree == 0; }

  Monomial operator*(const Monomial& other) const {
    Monomial out;
    out.degree = degree + other.degree;
    for (std::size_t i = 0; i < kMaxGenerators; ++i) {
      unsigned sum = unsigned{exponents[i]} + other.exponents[i];
      if (sum > std::numeric_limits<std::uint16_t>::max())
        throw Error("monomial exponent overflow");
      out.exponents[i] = static_cast<std::uint16_t>(sum);
    }
    return out;
  }

  Monomial squared() const { return *this * *this; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxGenerators; ++i)
      if (exponents[i] > other.exponents[i]) return false;
    return true;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

inline Monomial generator_monomial(const GeneratorTable& table, std::size_t i,
                                   std::uint16_t power = 1) {
  Monomial m;
  m.exponents.at(i) = power;
  m.degree = table.degree(i) * power;
  return m;
}

inline Monomial make_monomial(const GeneratorTable& table,
                              std::span<const int> exponents) {
  if (exponents.size() != table.size())
    throw DimensionError("exponent vector length differs from generator count");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw DimensionError("negative exponent");
    m.exponents[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree += exponents[i] * table.degree(i);
  }
  return m;
}

/// Monomials of weighted degree exactly `degree`, in descending canonical
/// order. Only generators with `mask[i]` set participate when a mask is given.
inline std::vector<Monomial> monomial_basis(
    const GeneratorTable& table, int degree,
    const std::vector<bool>* mask = nullptr) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const std::size_t n = table.size();
  Monomial current;
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == n) {
      if (remaining == 0) {
        current.degree = degree;
        out.push_back(current);
      }
      return;
    }
    if (mask && !(*mask)[i]) {
      current.exponents[i] = 0;
      self(self, i + 1, remaining);
      return;
    }
    const int g = table.degree(i);
    for (int e = remaining / g; e >= 0; --e) {
      current.exponents[i] = static_cast<std::uint16_t>(e);
      self(self, i + 1, remaining - e * g);
    }
    current.exponents[i] = 0;
  };
  recurse(recurse, 0, degree);
  return out;
}

class Polynomial {
 public:
  explicit Polynomial(TablePtr table) : table_(std::move(table)) {}

  Polynomial(TablePtr table, Monomial m) : table_(std::move(table)) {
    terms_.push_back(m);
  }

  /// Builds from arbitrary terms; repeated monomials cancel in pairs.
  static Polynomial from_terms(TablePtr table, std::vector<Monomial> terms) {
    Polynomial p(std::move(table));
    std::sort(terms.begin(), terms.end(), std::greater<>{});
    p.terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
      std::size_t j = i;
      while (j < terms.size() && terms[j] == terms[i]) ++j;
      if ((j - i) % 2 == 1) p.terms_.push_back(terms[i]);
      i = j;
    }
    return p;
  }

  /// Terms already strictly descending and distinct.
  static Polynomial from_sorted_terms(TablePtr table,
                                      std::vector<Monomial> terms) {
    Polynomial p(std::move(table));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial one(TablePtr table) {
    return Polynomial(std::move(table), Monomial{});
  }

  static Polynomial generator(TablePtr table, std::size_t i) {
    auto m = generator_monomial(*table, i);
    return Polynomial(std::move(table), m);
  }

  const TablePtr& table() const noexcept { return table_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// The common degree of all terms; empty for zero or inhomogeneous input.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.front().degree;
    if (terms_.back().degree != d) return std::nullopt;
    return d;
  }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.front().degree == terms_.back().degree;
  }

  Polynomial& operator+=(const Polynomial& other) {
    check_table(other);
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
      if (*a == *b) {
        ++a;
        ++b;
      } else if (*a > *b) {
        merged.push_back(*a++);
      } else {
        merged.push_back(*b++);
      }
    }
    merged.insert(merged.end(), a, terms_.end());
    merged.insert(merged.end(), b, other.terms_.end());
    terms_ = std::move(merged);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }

  /// Multiplication by a monomial is order preserving, so no re-sort.
  Polynomial times(const Monomial& m) const {
    Polynomial out(table_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(t * m);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_table(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.table_);
    if (b.size() == 1) return a.times(b.terms_.front());
    if (a.size() == 1) return b.times(a.terms_.front());
    std::vector<Monomial> products;
    products.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) products.push_back(x * y);
    return from_terms(a.table_, std::move(products));
  }

  Polynomial& operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
  }

  /// Squaring in characteristic 2: (sum m)^2 = sum m^2.
  Polynomial frobenius() const {
    Polynomial out(table_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(t.squared());
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(table_);
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e) base = base.frobenius();
    }
    return result;
  }

  bool operator==(const Polynomial& other) const {
    return same_table(table_, other.table_) && terms_ == other.terms_;
  }

 private:
  void check_table(const Polynomial& other) const {
    if (!same_table(table_, other.table_)) throw TableMismatchError();
  }

  TablePtr table_;
  std::vector<Monomial> terms_;
};

inline Polynomial frobenius(const Polynomial& p) { return p.frobenius(); }

/// Evaluates the ring homomorphism that sends generator i of `p`'s table to
/// `images[i]`. All images must share one target table.
inline Polynomial substitute(const Polynomial& p,
                             const std::vector<Polynomial>& images,
                             const TablePtr& target) {
  if (images.size() != p.table()->size())
    throw DimensionError("substitution needs one image per generator");
  for (const auto& img : images)
    if (!same_table(img.table(), target)) throw TableMismatchError();
  // powers[i][e] = images[i]^e, filled on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint16_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::one(target));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::vector<Monomial> collected;
  for (const auto& m : p.terms()) {
    Polynomial term = Polynomial::one(target);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m.exponents[i]) term *= power(i, m.exponents[i]);
    collected.insert(collected.end(), term.terms().begin(), term.terms().end());
  }
  return Polynomial::from_terms(target, std::move(collected));
}

}  // namespace f2coh
