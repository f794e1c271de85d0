#include <gtest/gtest.h>

#include <random>

#include "f2coh/expression.hpp"
#include "f2coh/polynomial.hpp"
#include "test_rings.hpp"

namespace f2coh {
namespace {

using testing::r0;
using testing::r0_table;

TEST(GeneratorTable, RejectsBadTables) {
  EXPECT_THROW(make_table({"a", "a"}, {1, 2}), ValidationError);
  EXPECT_THROW(make_table({""}, {1}), ValidationError);
  EXPECT_THROW(make_table({"a"}, {0}), ValidationError);
  EXPECT_THROW(make_table({"a", "b"}, {1}), ValidationError);
}

TEST(Polynomial, MultiplyExamples) {
  EXPECT_EQ(r0("w2'+w2''") * r0("w2'+w2''"), r0("w2'^2 + w2''^2"));
  EXPECT_EQ(r0("w2'*w3''") * r0("1"), r0("w2'*w3''"));
  // Cross terms w3'^2*w3'' and w3'*w3''^2 each appear twice.
  EXPECT_EQ(r0("w3'+w3''") * r0("w3'^2 + w3'*w3'' + w3''^2"), r0("w3'^3 + w3''^3"));
}

TEST(Polynomial, TableMismatch) {
  auto other = make_table({"x"}, {1});
  EXPECT_THROW(r0("w2'") * parse_polynomial("x", other), TableMismatchError);
  EXPECT_THROW(r0("w2'") + parse_polynomial("x", other), TableMismatchError);
}

TEST(Polynomial, EqualTablesByValueInteroperate) {
  auto copy = make_table({"w2'", "w2''", "w3'", "w3''", "w16"}, {2, 2, 3, 3, 16});
  EXPECT_EQ(r0("w2'") * parse_polynomial("w3'", copy), r0("w2'*w3'"));
}

TEST(Polynomial, FrobeniusExamples) {
  EXPECT_EQ(frobenius(r0(testing::kG4)), r0("w2'^2*w2''^2"));
  EXPECT_TRUE(frobenius(r0("0")).is_zero());
  EXPECT_EQ(frobenius(r0(testing::kG7)),
            r0("w2'^2*w2''^2*w3'^2 + w2'^2*w2''^2*w3''^2"));
}

TEST(Polynomial, HomogeneousDegree) {
  EXPECT_EQ(r0(testing::kF5).homogeneous_degree(), 5);
  EXPECT_EQ(r0(testing::kF9).homogeneous_degree(), 9);
  EXPECT_FALSE(r0("w3'^2*w3'' + w3''*w3'").homogeneous_degree().has_value());
  EXPECT_FALSE(r0("0").homogeneous_degree().has_value());
  EXPECT_TRUE(r0("0").is_homogeneous());
}

TEST(MonomialBasis, Examples) {
  auto d2 = monomial_basis(*r0_table(), 2);
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(to_string(d2[0], *r0_table()), "w2'");
  EXPECT_EQ(to_string(d2[1], *r0_table()), "w2''");
  auto d0 = monomial_basis(*r0_table(), 0);
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_TRUE(d0[0].is_one());
  EXPECT_EQ(monomial_basis(*r0_table(), 6).size(), 7u);
}

TEST(MonomialBasis, CountMatchesGeneratingFunction) {
  auto series = testing::free_series(r0_table()->degrees(), 40);
  for (int d = 0; d <= 40; ++d)
    EXPECT_EQ(static_cast<long long>(monomial_basis(*r0_table(), d).size()), series[d]) << d;
  auto t = make_table({"a", "b", "c"}, {1, 4, 7});
  series = testing::free_series(t->degrees(), 30);
  for (int d = 0; d <= 30; ++d)
    EXPECT_EQ(static_cast<long long>(monomial_basis(*t, d).size()), series[d]) << d;
}

TEST(MonomialBasis, DescendingCanonicalOrder) {
  auto b = monomial_basis(*r0_table(), 12);
  for (std::size_t i = 1; i < b.size(); ++i) EXPECT_GT(b[i - 1], b[i]);
}

TEST(Parse, Examples) {
  EXPECT_EQ(to_string(r0("w2'*w3'' + w2''*w3'")), "w2'*w3'' + w2''*w3'");
  EXPECT_TRUE(r0("0").is_zero());
  EXPECT_EQ(r0("(w3'+w3'')^2"), r0("w3'^2 + w3''^2"));
  EXPECT_EQ(r0("w2' + w2'"), r0("0"));
  EXPECT_EQ(to_string(r0("1 + 1 + 1")), "1");
  EXPECT_EQ(to_string(r0(" w16 * w2'^3 ")), "w2'^3*w16");
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    r0("w2' + w4");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
    EXPECT_NE(std::string(e.what()).find("unknown identifier 'w4'"), std::string::npos);
  }
  EXPECT_THROW(r0("w2' +"), ParseError);
  EXPECT_THROW(r0("(w2'"), ParseError);
  EXPECT_THROW(r0("2*w2'"), ParseError);
  EXPECT_THROW(r0("w2'^"), ParseError);
  EXPECT_THROW(r0("w2' w3'"), ParseError);
}

class PolynomialProperties : public ::testing::Test {
 protected:
  TablePtr table = make_table({"a", "b", "c", "d", "e", "f"}, {1, 2, 2, 3, 3, 4});
  std::mt19937 rng{20240611};
  Polynomial random() { return testing::random_polynomial(table, 6, rng); }
};

TEST_F(PolynomialProperties, AdditionIsInvolution) {
  for (int i = 0; i < 200; ++i) {
    auto a = random();
    EXPECT_TRUE((a + a).is_zero());
  }
}

TEST_F(PolynomialProperties, MultiplicationAssociativeCommutative) {
  for (int i = 0; i < 200; ++i) {
    auto a = random(), b = random(), c = random();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST_F(PolynomialProperties, FrobeniusIsRingEndomorphism) {
  for (int i = 0; i < 200; ++i) {
    auto a = random(), b = random();
    EXPECT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
    EXPECT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
    EXPECT_EQ(frobenius(a), a * a);
  }
}

TEST_F(PolynomialProperties, PrintParseIdempotent) {
  for (int i = 0; i < 200; ++i) {
    auto a = random();
    auto text = to_string(a);
    EXPECT_EQ(parse_polynomial(text, table), a);
    EXPECT_EQ(to_string(parse_polynomial(text, table)), text);
  }
}

TEST_F(PolynomialProperties, SubstitutionIsRingHomomorphism) {
  auto target = make_table({"x", "y"}, {1, 1});
  for (int i = 0; i < 100; ++i) {
    std::vector<Polynomial> images;
    for (int g : table->degrees()) images.push_back(testing::random_homogeneous(target, g, rng));
    auto a = random(), b = random();
    EXPECT_EQ(substitute(a * b, images, target),
              substitute(a, images, target) * substitute(b, images, target));
  }
}

}  // namespace
}  // namespace f2coh
