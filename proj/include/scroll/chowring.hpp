#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "scroll/checked.hpp"
#include "scroll/errors.hpp"

namespace scroll {

// Square-free quotient ring generated by r_{j,i}, j in {1,2}, i in 1..g,
// with every generator squaring to zero.  Monomials are bit sets over the
// 2g generator slots; slot(i, j) = 2(i-1) + (j-1), so the integer value of
// a bit set orders monomials lexicographically by (i, j).

constexpr int kMaxChowGenus = 32;

// More terms than this and we refuse to materialize.
constexpr std::size_t kTermCap = std::size_t(1) << 22;

using MonomialBits = std::uint64_t;

constexpr int generator_slot(int ruling_j, int factor_i) {
  return 2 * (factor_i - 1) + (ruling_j - 1);
}

class CycleClass {
 public:
  using TermMap = std::map<MonomialBits, i64>;

  explicit CycleClass(int ambient_g);

  static CycleClass generator(int ruling_j, int factor_i, int ambient_g);

  int ambient_g() const { return g_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Inserts c * monomial, dropping the term if the coefficient cancels.
  void add_term(MonomialBits bits, i64 coeff);

  CycleClass operator+(const CycleClass& rhs) const;
  CycleClass operator-(const CycleClass& rhs) const;
  CycleClass operator*(const CycleClass& rhs) const;

  bool operator==(const CycleClass& rhs) const = default;

 private:
  int g_;
  TermMap terms_;
};

// H_i = r_{1,i} + r_{2,i}.
CycleClass hyperplane_class(int factor_i, int ambient_g);

// Product with the square-free relation; repeated generators kill a term.
CycleClass mul(const CycleClass& a, const CycleClass& b);

// H_1 * ... * H_g: 2^g monomials, one ruling choice per factor.
CycleClass product_H(int g);

// Number of terms of product_H(g) computed without materializing them.
mpz_class product_H_term_count(int g);

// Pair a top-degree class against the cycle V_0: each monomial selecting
// exactly one ruling per factor pairs to 1, so the result is the sum of
// coefficients.  Non-conforming monomials are a shape error.
i64 pair_with_V0(const CycleClass& c);

std::string monomial_to_string(MonomialBits bits, int ambient_g);

// Sorted "+c*r[j,i]...r[j,i]" rendering, deterministic for equal classes.
std::string to_string(const CycleClass& c);

}  // namespace scroll
