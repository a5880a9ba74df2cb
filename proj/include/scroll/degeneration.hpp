#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "scroll/checked.hpp"
#include "scroll/errors.hpp"

namespace scroll {

// Combinatorics of the degenerate scroll Y = W + Q_1 + ... + Q_g: a
// rational normal scroll W glued to g quadrics along pairs of rulings.

// Enumerations are materialized only up to this genus; beyond it callers
// should work with counts.
constexpr int kMaxEnumGenus = 20;

enum class ParityCase { Odd, Even };

// One choice of ruling (1 or 2) per quadric factor; a vertex of the
// g-dimensional hypercube.  Encoded as a g-bit word with factor 1 in the
// most significant position, so increasing word = lexicographic order
// with 1 < 2.
struct Labeling {
  int g = 0;
  std::uint32_t word = 0;

  int choice(int factor_i) const {  // 1-based factor, returns 1 or 2
    return ((word >> (g - factor_i)) & 1u) + 1;
  }
  std::string bits() const;  // e.g. "121" for g = 3

  bool operator==(const Labeling&) const = default;
  auto operator<=>(const Labeling&) const = default;
};

std::vector<Labeling> all_labelings(int g);

// Admissible conic counts k on the quadrics: {0} in the odd case,
// {0, 1} in the even case.
std::vector<i64> admissible_k(i64 d, i64 g, ParityCase parity);

// Degree of the W-part of a limit unisecant with k conics:
// odd case nu_k = (d-g-1)/2 - k, even case mu_k = (d-g)/2 - k.
i64 w_degree(i64 d, i64 g, i64 k, ParityCase parity);

// Dimension of the linear system of W-parts: g - 2k (odd), g+1 - 2k (even).
i64 lambda_dim(i64 g, i64 k, ParityCase parity);

struct LimitSection {
  Labeling label;
  i64 degree_on_W = 0;
};

// Odd case: the 2^g limit minimal sections, one per labeling, in
// lexicographic order.
std::vector<LimitSection> limit_unisecants_odd(i64 d, i64 g,
                                               bool strict_hdg = false);

mpz_class count_unisecants_odd(i64 d, i64 g);

struct LimitComponent {
  enum class Kind { PencilXi, ConicXiPrime };
  Kind kind = Kind::PencilXi;
  // PencilXi: full labeling over 1..g.  ConicXiPrime: conic at factor
  // conic_factor, labeling partial over the remaining g-1 factors (encoded
  // with g-1 bits, factors in increasing order).
  Labeling label;
  int conic_factor = 0;  // 0 for PencilXi
  i64 k = 0;
  i64 degree_on_W = 0;
  i64 family_dim = 0;

  std::string id() const;  // "xi_<bits>" or "xip_<l>_<bits>"
};

// Even case: 2^g pencil components then g*2^{g-1} conic components,
// each block in lexicographic order.
std::vector<LimitComponent> limit_components_even(i64 d, i64 g);

struct SplittingEntry {
  i64 m_X = 0;
  i64 dim_on_X = 0;      // d_{m_X} on the degree-(d-2) scroll X
  i64 dim_component = 0; // d_m on T = X + Q
};

// Ranges of the degree split m = m_X + m_Q over the model T = X + Q.
std::vector<SplittingEntry> splitting_range(i64 d, i64 g, i64 m);

}  // namespace scroll
