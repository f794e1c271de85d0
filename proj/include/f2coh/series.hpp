#pragma once

// Truncated Hilbert–Poincaré series and products of (1 - t^a) factors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2coh/error.hpp"

namespace f2coh {

using Coefficients = std::vector<std::int64_t>;

/// prod(1 - t^a for a in numerator) / prod(1 - t^b for b in denominator).
/// Compared with computed series only through its expansion.
struct RationalForm {
  std::vector<int> numerator;
  std::vector<int> denominator;

  Coefficients expand(int up_to) const {
    if (up_to < 0) return {};
    Coefficients c(static_cast<std::size_t>(up_to) + 1, 0);
    c[0] = 1;
    for (int a : numerator) {
      if (a < 1) throw ValidationError("series factor exponents must be >= 1");
      for (int i = up_to; i >= a; --i) c[i] -= c[i - a];
    }
    for (int b : denominator) {
      if (b < 1) throw ValidationError("series factor exponents must be >= 1");
      for (int i = b; i <= up_to; ++i) c[i] += c[i - b];
    }
    return c;
  }

  std::string to_string() const {
    auto factors = [](const std::vector<int>& v) {
      std::string s;
      for (int a : v) s += "(1-t^" + std::to_string(a) + ")";
      return s.empty() ? std::string("1") : s;
    };
    return factors(numerator) + "/" + factors(denominator);
  }

  bool operator==(const RationalForm&) const = default;
};

struct HilbertSeries {
  Coefficients coefficients;
  std::optional<RationalForm> rational_form;

  int truncation() const { return static_cast<int>(coefficients.size()) - 1; }

  std::int64_t operator[](int d) const {
    return d >= 0 && d <= truncation() ? coefficients[static_cast<std::size_t>(d)]
                                       : 0;
  }

  bool matches_rational_form() const {
    return !rational_form ||
           rational_form->expand(truncation()) == coefficients;
  }
};

struct SeriesComparison {
  bool equal = true;
  std::optional<int> first_mismatch;
  explicit operator bool() const { return equal; }
};

inline SeriesComparison compare_coefficients(const Coefficients& a,
                                             const Coefficients& b, int up_to) {
  if (up_to >= static_cast<int>(a.size()) || up_to >= static_cast<int>(b.size()))
    throw TruncationError("series comparison beyond truncation");
  for (int d = 0; d <= up_to; ++d)
    if (a[d] != b[d]) return {false, d};
  return {};
}

inline SeriesComparison series_equal(const HilbertSeries& a,
                                     const HilbertSeries& b, int up_to) {
  return compare_coefficients(a.coefficients, b.coefficients, up_to);
}

/// Cauchy product truncated at `up_to`.
inline Coefficients multiply_series(const Coefficients& a, const Coefficients& b,
                                    int up_to) {
  Coefficients c(static_cast<std::size_t>(up_to) + 1, 0);
  for (int i = 0; i <= up_to && i < static_cast<int>(a.size()); ++i) {
    if (!a[i]) continue;
    for (int j = 0; i + j <= up_to && j < static_cast<int>(b.size()); ++j)
      c[i + j] += a[i] * b[j];
  }
  return c;
}

inline std::string to_string(const Coefficients& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s;
}

}  // namespace f2coh
