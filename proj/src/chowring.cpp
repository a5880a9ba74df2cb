#include "scroll/chowring.hpp"

#include <bit>
#include <sstream>

namespace scroll {

namespace {

void check_g(int g) {
  if (g < 1) throw parameter_error("ambient genus must be >= 1");
  if (g > kMaxChowGenus)
    throw resource_error("ambient genus exceeds the 32-factor encoding");
}

void check_same_ambient(const CycleClass& a, const CycleClass& b) {
  if (a.ambient_g() != b.ambient_g())
    throw parameter_error("cycle classes live in different ambient rings");
}

}  // namespace

CycleClass::CycleClass(int ambient_g) : g_(ambient_g) { check_g(ambient_g); }

CycleClass CycleClass::generator(int ruling_j, int factor_i, int ambient_g) {
  check_g(ambient_g);
  if (ruling_j < 1 || ruling_j > 2)
    throw parameter_error("ruling index must be 1 or 2");
  if (factor_i < 1 || factor_i > ambient_g)
    throw parameter_error("factor index out of range");
  CycleClass c(ambient_g);
  c.add_term(MonomialBits(1) << generator_slot(ruling_j, factor_i), 1);
  return c;
}

void CycleClass::add_term(MonomialBits bits, i64 coeff) {
  if (coeff == 0) return;
  if (bits >> (2 * g_))
    throw parameter_error("monomial uses generators outside the ambient ring");
  auto it = terms_.find(bits);
  if (it == terms_.end()) {
    if (terms_.size() >= kTermCap)
      throw resource_error("cycle class exceeds the 2^22 term cap");
    terms_.emplace(bits, coeff);
  } else {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

CycleClass CycleClass::operator+(const CycleClass& rhs) const {
  check_same_ambient(*this, rhs);
  CycleClass out = *this;
  for (const auto& [bits, c] : rhs.terms_) out.add_term(bits, c);
  return out;
}

CycleClass CycleClass::operator-(const CycleClass& rhs) const {
  check_same_ambient(*this, rhs);
  CycleClass out = *this;
  for (const auto& [bits, c] : rhs.terms_) out.add_term(bits, checked_sub(0, c));
  return out;
}

CycleClass CycleClass::operator*(const CycleClass& rhs) const {
  return mul(*this, rhs);
}

CycleClass hyperplane_class(int factor_i, int ambient_g) {
  return CycleClass::generator(1, factor_i, ambient_g) +
         CycleClass::generator(2, factor_i, ambient_g);
}

CycleClass mul(const CycleClass& a, const CycleClass& b) {
  check_same_ambient(a, b);
  CycleClass out(a.ambient_g());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if (ba & bb) continue;  // repeated generator: square-free relation
      out.add_term(ba | bb, checked_mul(ca, cb));
    }
  }
  return out;
}

CycleClass product_H(int g) {
  check_g(g);
  CycleClass out = hyperplane_class(1, g);
  for (int i = 2; i <= g; ++i) out = mul(out, hyperplane_class(i, g));
  return out;
}

mpz_class product_H_term_count(int g) {
  if (g < 1) throw parameter_error("ambient genus must be >= 1");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(g));
  return out;
}

i64 pair_with_V0(const CycleClass& c) {
  const int g = c.ambient_g();
  i64 sum = 0;
  for (const auto& [bits, coeff] : c.terms()) {
    // Exactly one of r_{1,i}, r_{2,i} per factor i.
    for (int i = 1; i <= g; ++i) {
      MonomialBits pair = (bits >> (2 * (i - 1))) & MonomialBits(3);
      if (pair != 1 && pair != 2)
        throw domain_error("pair_with_V0: monomial " +
                           monomial_to_string(bits, g) +
                           " does not select one ruling per factor");
    }
    sum = checked_add(sum, coeff);
  }
  return sum;
}

std::string monomial_to_string(MonomialBits bits, int ambient_g) {
  if (bits == 0) return "1";
  std::ostringstream os;
  for (int i = 1; i <= ambient_g; ++i)
    for (int j = 1; j <= 2; ++j)
      if (bits & (MonomialBits(1) << generator_slot(j, i)))
        os << "r[" << j << "," << i << "]";
  return os.str();
}

std::string to_string(const CycleClass& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [bits, coeff] : c.terms()) {
    if (coeff > 0 && !first) os << "+";
    if (coeff == -1)
      os << "-";
    else if (coeff != 1)
      os << coeff << "*";
    os << monomial_to_string(bits, c.ambient_g());
    first = false;
  }
  return os.str();
}

}  // namespace scroll
