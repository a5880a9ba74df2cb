#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

#include "scroll/checked.hpp"
#include "scroll/errors.hpp"

namespace scroll {

using Rational = boost::rational<i64>;

// Numerology of a linearly normal scroll of degree d and sectional genus g.
struct ScrollParams {
  i64 d = 0;
  i64 g = 0;
  std::optional<i64> h1;  // speciality, absent = 0 (non-special)
  std::optional<i64> m;   // unisecant degree of interest, if any

  ScrollParams() = default;
  ScrollParams(i64 d_, i64 g_, std::optional<i64> h1_ = std::nullopt,
               std::optional<i64> m_ = std::nullopt);

  i64 speciality() const { return h1.value_or(0); }

  // d >= 2g + 3 + min{1, g-1}: the hypothesis under which the Hilbert
  // scheme has its unique "good" component.
  bool in_Hdg() const;

  // Degree range in which the general such scroll is smooth.
  bool smooth_range() const;
};

// Throws domain_error naming the bound if (d, g) fails the in_Hdg test.
void require_in_Hdg(i64 d, i64 g, const char* where);

// Rank-two bundle given as a direct sum of two line bundles.
struct DecomposableBundle {
  std::array<i64, 2> summand_degrees{};
  std::optional<std::array<i64, 2>> summand_h1;

  DecomposableBundle(i64 deg1, i64 deg2,
                     std::optional<std::array<i64, 2>> h1s = std::nullopt);
};

enum class StabilityKind { Stable, StrictlySemistable, Unstable };

struct StabilityVerdict {
  StabilityKind kind;
  std::optional<int> destabilizer;  // summand index (0 or 1), iff Unstable
  Rational slope;
};

enum class SublineVerdict {
  WitnessesUnstable,
  WitnessesStrictBound,
  ConsistentWithStable,
};

enum class NonspecialGuarantee {
  AllSemistableNonspecial,
  GenericNonspecial,
  NoGuarantee,
};

// d_m = max{-1, 2m - d - g + 1}, the expected dimension of the scheme of
// degree-m unisecant curves.
i64 expected_dim(i64 d, i64 g, i64 m);

// R = d - 2g + 1 + h1.
i64 ambient_dim(i64 d, i64 g, i64 h1);

// dim H_{d,g} = 7(g-1) + (d-2g+2)^2.  Strict: requires in_Hdg.
i64 hilbert_dim(i64 d, i64 g);

// Labeled breakdown of hilbert_dim into moduli counts; g >= 1 only.
std::vector<std::pair<std::string, i64>> parameter_count(i64 d, i64 g);

struct MinSections {
  i64 m_bar = 0;
  bool finite = false;       // true: finitely many minimal sections
  mpz_class count;           // 2^g when finite, unset otherwise
};

// Minimal unisecant degree and the structure of the minimal family.
MinSections min_unisecant_degree(i64 d, i64 g, bool strict_hdg = false);

// Index of the family of degree-m unisecants: 2^g, as a big integer.
mpz_class index(i64 d, i64 g, i64 m, bool strict_hdg = false);

struct ProjectionResult {
  i64 d_prime = 0;
  i64 g_prime = 0;
  i64 m_prime = 0;
  i64 ambient = 0;       // R' = d' - 2g' + 1
  bool hdg_warning = false;  // image fails the in_Hdg bound
};

// Project away d_m general points: d' = 2d + g - 2m - 1, m' = d + g - 1 - m.
ProjectionResult projection_reduction(i64 d, i64 g, i64 m);

// deg/rank as an exact reduced rational.
Rational slope(i64 degree, i64 rank);

// Decomposables are strictly semistable when balanced, unstable otherwise.
StabilityVerdict classify_decomposable(const DecomposableBundle& b);

// Compare a sub-line bundle degree with the slope d/2 exactly.
SublineVerdict classify_subline(i64 deg_N, i64 d);

// Speciality of a direct sum is the sum of summand specialities.
i64 speciality_decomposable(const std::vector<i64>& h1_summands);

struct ConeResult {
  bool is_cone = false;
  // Set when h1 = g but the bundle was reported indecomposable: equality
  // forces F = O_C + L.
  std::optional<std::string> inconsistency;
};

// Speciality equality case: h1 = g iff the scroll is a cone (d >= 2g+2).
ConeResult cone_test(i64 d, i64 g, i64 h1,
                     bool decomposable_with_trivial_summand);

// B^2 = 2m - d for a degree-m section.
i64 self_intersection(i64 d, i64 m);

// K = -2H + (d + 2g - 2)f; returned as (coeff_H, coeff_f).
std::pair<i64, i64> canonical_class(i64 d, i64 g);

// Unisecants of degree m <= d - 2g + 1 are linearly normally embedded.
bool linearly_normal_threshold(i64 d, i64 g, i64 m);

// Degree thresholds guaranteeing vanishing speciality of the bundle.
NonspecialGuarantee nonspecial_thresholds(i64 d, i64 g);

}  // namespace scroll
