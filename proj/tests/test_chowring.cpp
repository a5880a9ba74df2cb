#include <doctest.h>

#include <random>
#include <vector>

#include "scroll/chowring.hpp"

using namespace scroll;

namespace {

// Dense oracle: a class over g factors is an array of 4^g coefficients
// indexed by generator subsets; the product is a subset-indexed
// convolution with disjointness.
using Dense = std::vector<i64>;

Dense to_dense(const CycleClass& c) {
  Dense out(std::size_t(1) << (2 * c.ambient_g()), 0);
  for (const auto& [bits, coeff] : c.terms()) out[bits] = coeff;
  return out;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0 || (i & j)) continue;
      out[i | j] += a[i] * b[j];
    }
  }
  return out;
}

CycleClass random_class(int g, std::mt19937& rng, int max_terms = 8) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<MonomialBits> mono(
      0, (MonomialBits(1) << (2 * g)) - 1);
  std::uniform_int_distribution<i64> coeff(-5, 5);
  CycleClass c(g);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) c.add_term(mono(rng), coeff(rng));
  return c;
}

}  // namespace

TEST_CASE("hyperplane_class is the sum of the two rulings") {
  CHECK(hyperplane_class(1, 1) == CycleClass::generator(1, 1, 1) +
                                      CycleClass::generator(2, 1, 1));
  CHECK(hyperplane_class(2, 3) == CycleClass::generator(1, 2, 3) +
                                      CycleClass::generator(2, 2, 3));
  CHECK_THROWS_AS(hyperplane_class(4, 3), parameter_error);
  CHECK_THROWS_AS(hyperplane_class(0, 3), parameter_error);
}

TEST_CASE("generators square to zero") {
  for (int g = 1; g <= 4; ++g)
    for (int i = 1; i <= g; ++i)
      for (int j = 1; j <= 2; ++j) {
        auto r = CycleClass::generator(j, i, g);
        CHECK(mul(r, r).is_zero());
      }
}

TEST_CASE("product of two hyperplane classes has four unit monomials") {
  auto p = mul(hyperplane_class(1, 2), hyperplane_class(2, 2));
  REQUIRE(p.terms().size() == 4);
  for (const auto& [bits, coeff] : p.terms()) CHECK(coeff == 1);
}

TEST_CASE("product_H term counts and structure") {
  CHECK(product_H(1) == hyperplane_class(1, 1));
  CHECK(product_H(2).terms().size() == 4);
  CHECK(product_H(3).terms().size() == 8);
  for (int g = 1; g <= 12; ++g) {
    auto p = product_H(g);
    CHECK(mpz_class(static_cast<long>(p.terms().size())) ==
          product_H_term_count(g));
    for (const auto& [bits, coeff] : p.terms()) {
      CHECK(coeff == 1);
      // Exactly one ruling selected per factor.
      for (int i = 1; i <= g; ++i) {
        MonomialBits pair = (bits >> (2 * (i - 1))) & 3;
        CHECK((pair == 1 || pair == 2));
      }
    }
  }
  CHECK_THROWS_AS(product_H(0), parameter_error);
}

TEST_CASE("product_H(3) matches a brute-force iterated subset merge") {
  // Oracle expansion: merge {r_{1,i}, r_{2,i}} choices factor by factor.
  std::vector<MonomialBits> expansion{0};
  for (int i = 1; i <= 3; ++i) {
    std::vector<MonomialBits> next;
    for (MonomialBits m : expansion)
      for (int j = 1; j <= 2; ++j)
        next.push_back(m | (MonomialBits(1) << generator_slot(j, i)));
    expansion = next;
  }
  auto p = product_H(3);
  REQUIRE(expansion.size() == p.terms().size());
  for (MonomialBits m : expansion) {
    auto it = p.terms().find(m);
    REQUIRE(it != p.terms().end());
    CHECK(it->second == 1);
  }
}

TEST_CASE("count-only term counts agree up to g = 20") {
  mpz_class expected = 2;
  for (int g = 1; g <= 20; ++g) {
    CHECK(product_H_term_count(g) == expected);
    expected *= 2;
  }
}

TEST_CASE("pair_with_V0") {
  for (int g = 1; g <= 10; ++g) {
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, g);
    CHECK(mpz_class(static_cast<long>(pair_with_V0(product_H(g)))) ==
          expected);
  }

  // Single conforming monomial pairs to 1.
  auto r = mul(CycleClass::generator(1, 1, 2), CycleClass::generator(2, 2, 2));
  CHECK(pair_with_V0(r) == 1);

  // Linearity: 3R - R' = 2.
  CycleClass c(2);
  c.add_term((MonomialBits(1) << generator_slot(1, 1)) |
                 (MonomialBits(1) << generator_slot(1, 2)),
             3);
  c.add_term((MonomialBits(1) << generator_slot(2, 1)) |
                 (MonomialBits(1) << generator_slot(2, 2)),
             -1);
  CHECK(pair_with_V0(c) == 2);

  // Monomial missing a factor is a shape error naming the monomial.
  CHECK_THROWS_WITH_AS(pair_with_V0(CycleClass::generator(1, 1, 2)),
                       doctest::Contains("r[1,1]"), domain_error);
  // Both rulings of one factor is likewise non-conforming.
  auto both = mul(CycleClass::generator(1, 1, 1),
                  CycleClass::generator(2, 1, 1));
  CHECK_THROWS_AS(pair_with_V0(both), domain_error);
}

TEST_CASE("mul agrees with the dense oracle on random classes") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dg(1, 6);
  for (int t = 0; t < 1000; ++t) {
    int g = dg(rng);
    auto a = random_class(g, rng);
    auto b = random_class(g, rng);
    CHECK(to_dense(mul(a, b)) == dense_mul(to_dense(a), to_dense(b)));
  }
}

TEST_CASE("ring laws on random classes") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dg(1, 6);
  for (int t = 0; t < 300; ++t) {
    int g = dg(rng);
    auto a = random_class(g, rng, 5);
    auto b = random_class(g, rng, 5);
    auto c = random_class(g, rng, 5);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
  }
}

TEST_CASE("ambient mismatch is rejected") {
  CHECK_THROWS_AS(mul(CycleClass(2), CycleClass(3)), parameter_error);
  CHECK_THROWS_AS(CycleClass(2) + CycleClass(3), parameter_error);
}

TEST_CASE("deterministic text rendering") {
  CHECK(to_string(CycleClass(2)) == "0");
  CHECK(to_string(product_H(1)) == "r[1,1]+r[2,1]");
  CHECK(to_string(mul(hyperplane_class(1, 2), hyperplane_class(2, 2))) ==
        "r[1,1]r[1,2]+r[2,1]r[1,2]+r[1,1]r[2,2]+r[2,1]r[2,2]");
  CycleClass c(1);
  c.add_term(1, -3);
  CHECK(to_string(c) == "-3*r[1,1]");
}
