#include "scroll/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace scroll {

namespace {

void check_dg(i64 d, i64 g) {
  if (g < 0) throw parameter_error("genus must be >= 0");
  if (d < 1) throw parameter_error("degree must be >= 1");
}

}  // namespace

ScrollParams::ScrollParams(i64 d_, i64 g_, std::optional<i64> h1_,
                           std::optional<i64> m_)
    : d(d_), g(g_), h1(h1_), m(m_) {
  check_dg(d, g);
  if (h1 && *h1 < 0) throw parameter_error("speciality must be >= 0");
}

bool ScrollParams::in_Hdg() const {
  return d >= checked_add(checked_add(2 * g, 3), std::min<i64>(1, g - 1));
}

bool ScrollParams::smooth_range() const {
  if (g == 0) return true;
  if (g == 1) return d >= 5;
  return d >= 2 * g + 4;
}

void require_in_Hdg(i64 d, i64 g, const char* where) {
  check_dg(d, g);
  if (!ScrollParams(d, g).in_Hdg()) {
    std::ostringstream os;
    os << where << ": requires d >= 2g + 3 + min{1, g-1}, i.e. d >= "
       << 2 * g + 3 + std::min<i64>(1, g - 1) << " for g = " << g
       << " (got d = " << d << ")";
    throw domain_error(os.str());
  }
}

DecomposableBundle::DecomposableBundle(i64 deg1, i64 deg2,
                                       std::optional<std::array<i64, 2>> h1s)
    : summand_degrees{deg1, deg2}, summand_h1(h1s) {
  if (summand_h1 && ((*summand_h1)[0] < 0 || (*summand_h1)[1] < 0))
    throw parameter_error("summand speciality must be >= 0");
}

i64 expected_dim(i64 d, i64 g, i64 m) {
  check_dg(d, g);
  if (m < 0) throw parameter_error("unisecant degree must be >= 0");
  i64 v = checked_add(checked_sub(checked_mul(2, m), checked_add(d, g)), 1);
  return std::max<i64>(-1, v);
}

i64 ambient_dim(i64 d, i64 g, i64 h1) {
  check_dg(d, g);
  if (h1 < 0) throw parameter_error("speciality must be >= 0");
  return checked_add(checked_sub(d, 2 * g), checked_add(1, h1));
}

i64 hilbert_dim(i64 d, i64 g) {
  require_in_Hdg(d, g, "hilbert_dim");
  i64 r1 = checked_add(checked_sub(d, 2 * g), 2);  // R + 1, non-special
  return checked_add(checked_mul(7, g - 1), checked_mul(r1, r1));
}

std::vector<std::pair<std::string, i64>> parameter_count(i64 d, i64 g) {
  require_in_Hdg(d, g, "parameter_count");
  if (g == 0)
    throw parameter_error("parameter_count: no breakdown for g = 0");
  i64 r1 = d - 2 * g + 2;  // R + 1
  std::vector<std::pair<std::string, i64>> out;
  if (g >= 2) {
    out.emplace_back("curve moduli", 3 * g - 3);
    out.emplace_back("bundle moduli", 4 * g - 3);
    out.emplace_back("projectivities", checked_sub(checked_mul(r1, r1), 1));
  } else {
    // g = 1: the bundle count and the stabilizer dimension depend on the
    // parity of d; one parameter is absorbed by the curve action.
    bool even = (d % 2 == 0);
    i64 dim_gs = even ? 1 : 0;
    out.emplace_back("curve moduli", 1);
    out.emplace_back("bundle moduli", even ? 2 : 1);
    out.emplace_back("projectivities",
                     checked_sub(checked_mul(r1, r1), 1 + dim_gs));
    out.emplace_back("curve action", -1);
  }
  return out;
}

MinSections min_unisecant_degree(i64 d, i64 g, bool strict_hdg) {
  check_dg(d, g);
  if (strict_hdg) require_in_Hdg(d, g, "min_unisecant_degree");
  MinSections out;
  if ((d + g) % 2 != 0) {
    out.m_bar = (d + g - 1) / 2;
    out.finite = true;
    mpz_ui_pow_ui(out.count.get_mpz_t(), 2, static_cast<unsigned long>(g));
  } else {
    out.m_bar = (d + g) / 2;
    out.finite = false;
    out.count = 0;
  }
  return out;
}

mpz_class index(i64 d, i64 g, i64 m, bool strict_hdg) {
  if (strict_hdg) require_in_Hdg(d, g, "index");
  if (expected_dim(d, g, m) <= 0)
    throw parameter_error(
        "index defined only for positive-dimensional families (d_m > 0)");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(g));
  return out;
}

ProjectionResult projection_reduction(i64 d, i64 g, i64 m) {
  i64 dm = expected_dim(d, g, m);
  if (dm <= 0)
    throw parameter_error("projection_reduction requires d_m > 0");
  ProjectionResult out;
  out.d_prime = checked_sub(checked_add(checked_mul(2, d), g),
                            checked_add(checked_mul(2, m), 1));
  out.g_prime = g;
  out.m_prime = checked_sub(checked_add(d, g - 1), m);
  out.ambient = ambient_dim(out.d_prime, g, 0);
  out.hdg_warning = !ScrollParams(out.d_prime, g).in_Hdg();
  return out;
}

Rational slope(i64 degree, i64 rank) {
  if (rank < 1) throw parameter_error("rank must be >= 1");
  return Rational(degree, rank);
}

StabilityVerdict classify_decomposable(const DecomposableBundle& b) {
  i64 a = b.summand_degrees[0], c = b.summand_degrees[1];
  StabilityVerdict v;
  v.slope = Rational(checked_add(a, c), 2);
  if (a == c) {
    v.kind = StabilityKind::StrictlySemistable;
  } else {
    v.kind = StabilityKind::Unstable;
    v.destabilizer = a > c ? 0 : 1;
  }
  return v;
}

SublineVerdict classify_subline(i64 deg_N, i64 d) {
  Rational mu(d, 2);
  Rational n(deg_N);
  if (n > mu) return SublineVerdict::WitnessesUnstable;
  if (n == mu) return SublineVerdict::WitnessesStrictBound;
  return SublineVerdict::ConsistentWithStable;
}

i64 speciality_decomposable(const std::vector<i64>& h1_summands) {
  if (h1_summands.empty())
    throw parameter_error("speciality_decomposable: empty summand list");
  i64 sum = 0;
  for (i64 h : h1_summands) {
    if (h < 0) throw parameter_error("summand speciality must be >= 0");
    sum = checked_add(sum, h);
  }
  return sum;
}

ConeResult cone_test(i64 d, i64 g, i64 h1,
                     bool decomposable_with_trivial_summand) {
  if (g < 1) throw parameter_error("cone_test requires g >= 1");
  if (d < 2 * g + 2)
    throw domain_error("cone_test: the equality case needs d >= 2g + 2");
  if (h1 < 0) throw parameter_error("speciality must be >= 0");
  if (h1 > g) throw domain_error("cone_test: violates h1 <= g");
  ConeResult out;
  out.is_cone = (h1 == g);
  if (out.is_cone && !decomposable_with_trivial_summand)
    out.inconsistency =
        "h1 = g forces F = O_C + L, but the bundle was reported without a "
        "trivial summand";
  return out;
}

i64 self_intersection(i64 d, i64 m) {
  return checked_sub(checked_mul(2, m), d);
}

std::pair<i64, i64> canonical_class(i64 d, i64 g) {
  return {-2, checked_sub(checked_add(d, checked_mul(2, g)), 2)};
}

bool linearly_normal_threshold(i64 d, i64 g, i64 m) {
  if (g < 1) throw domain_error("linearly_normal_threshold requires g >= 1");
  if (d < 2 * g + 2)
    throw domain_error("linearly_normal_threshold requires d >= 2g + 2");
  return m <= d - 2 * g + 1;
}

NonspecialGuarantee nonspecial_thresholds(i64 d, i64 g) {
  if (g < 1) throw parameter_error("nonspecial_thresholds requires g >= 1");
  if (d >= 4 * g - 3) return NonspecialGuarantee::AllSemistableNonspecial;
  if (g >= 2 && d >= 2 * g) return NonspecialGuarantee::GenericNonspecial;
  return NonspecialGuarantee::NoGuarantee;
}

}  // namespace scroll
