#include "scroll/degeneration.hpp"

#include <sstream>

#include "scroll/numerics.hpp"

namespace scroll {

namespace {

ParityCase parity_of(i64 d, i64 g) {
  return ((d + g) % 2 != 0) ? ParityCase::Odd : ParityCase::Even;
}

void require_parity(i64 d, i64 g, ParityCase parity, const char* where) {
  if (parity_of(d, g) != parity) {
    std::ostringstream os;
    os << where << ": d + g = " << d + g << " has the wrong parity";
    throw parameter_error(os.str());
  }
}

void require_enum_genus(i64 g, const char* where) {
  if (g < 0) throw parameter_error("genus must be >= 0");
  if (g > kMaxEnumGenus) {
    std::ostringstream os;
    os << where << ": materialized enumeration capped at g <= "
       << kMaxEnumGenus;
    throw resource_error(os.str());
  }
}

}  // namespace

std::string Labeling::bits() const {
  std::string out;
  out.reserve(g);
  for (int i = 1; i <= g; ++i) out += static_cast<char>('0' + choice(i));
  return out;
}

std::vector<Labeling> all_labelings(int g) {
  require_enum_genus(g, "all_labelings");
  std::vector<Labeling> out;
  out.reserve(std::size_t(1) << g);
  for (std::uint32_t w = 0; w < (std::uint32_t(1) << g); ++w)
    out.push_back(Labeling{g, w});
  return out;
}

std::vector<i64> admissible_k(i64 d, i64 g, ParityCase parity) {
  if (g < 0 || d < 1) throw parameter_error("invalid (d, g)");
  require_parity(d, g, parity, "admissible_k");
  // dim(V_k cut by the remaining hyperplanes) = max{-1, c - k} with c = 0
  // in the odd case and c = 1 in the even case; k is admissible when that
  // dimension is non-negative.
  i64 c = (parity == ParityCase::Odd) ? 0 : 1;
  std::vector<i64> out;
  for (i64 k = 0; k <= c; ++k) out.push_back(k);
  return out;
}

i64 w_degree(i64 d, i64 g, i64 k, ParityCase parity) {
  if (k < 0) throw parameter_error("conic count must be >= 0");
  require_parity(d, g, parity, "w_degree");
  if (parity == ParityCase::Odd) {
    if (2 * k > g)
      throw infeasibility_error(
          "w_degree: nu_k would drop below the minimal W-degree (needs g >= 2k)");
    return (d - g - 1) / 2 - k;
  }
  if (2 * k > g + 1)
    throw infeasibility_error(
        "w_degree: mu_k would drop below the minimal W-degree");
  return (d - g) / 2 - k;
}

i64 lambda_dim(i64 g, i64 k, ParityCase parity) {
  if (k < 0) throw parameter_error("conic count must be >= 0");
  i64 dim = (parity == ParityCase::Odd) ? g - 2 * k : g + 1 - 2 * k;
  if (dim < 0)
    throw infeasibility_error("lambda_dim: empty linear system (dim < 0)");
  return dim;
}

std::vector<LimitSection> limit_unisecants_odd(i64 d, i64 g, bool strict_hdg) {
  if (g < 0 || d < 1) throw parameter_error("invalid (d, g)");
  require_parity(d, g, ParityCase::Odd, "limit_unisecants_odd");
  require_enum_genus(g, "limit_unisecants_odd");
  if (strict_hdg) require_in_Hdg(d, g, "limit_unisecants_odd");
  i64 nu0 = (d - g - 1) / 2;
  std::vector<LimitSection> out;
  out.reserve(std::size_t(1) << g);
  for (const Labeling& l : all_labelings(static_cast<int>(g)))
    out.push_back(LimitSection{l, nu0});
  return out;
}

mpz_class count_unisecants_odd(i64 d, i64 g) {
  if (g < 0 || d < 1) throw parameter_error("invalid (d, g)");
  require_parity(d, g, ParityCase::Odd, "count_unisecants_odd");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(g));
  return out;
}

std::string LimitComponent::id() const {
  std::ostringstream os;
  if (kind == Kind::PencilXi)
    os << "xi_" << label.bits();
  else
    os << "xip_" << conic_factor << "_" << label.bits();
  return os.str();
}

std::vector<LimitComponent> limit_components_even(i64 d, i64 g) {
  if (g < 1) throw parameter_error("limit_components_even requires g >= 1");
  if (d < 1) throw parameter_error("invalid degree");
  require_parity(d, g, ParityCase::Even, "limit_components_even");
  require_enum_genus(g, "limit_components_even");

  i64 mu0 = w_degree(d, g, 0, ParityCase::Even);
  i64 mu1 = w_degree(d, g, 1, ParityCase::Even);
  std::vector<LimitComponent> out;
  out.reserve((std::size_t(1) << g) + g * (std::size_t(1) << (g - 1)));

  for (const Labeling& l : all_labelings(static_cast<int>(g))) {
    LimitComponent c;
    c.kind = LimitComponent::Kind::PencilXi;
    c.label = l;
    c.k = 0;
    c.degree_on_W = mu0;
    c.family_dim = lambda_dim(g, 0, ParityCase::Even);
    out.push_back(c);
  }
  for (int l = 1; l <= g; ++l) {
    for (const Labeling& partial : all_labelings(static_cast<int>(g) - 1)) {
      LimitComponent c;
      c.kind = LimitComponent::Kind::ConicXiPrime;
      c.label = partial;
      c.conic_factor = l;
      c.k = 1;
      c.degree_on_W = mu1;
      c.family_dim = lambda_dim(g, 1, ParityCase::Even);
      out.push_back(c);
    }
  }
  return out;
}

std::vector<SplittingEntry> splitting_range(i64 d, i64 g, i64 m) {
  if (g < 1) throw parameter_error("splitting_range requires g >= 1");
  i64 dm = expected_dim(d, g, m);
  if (dm < 0) return {};  // empty family, nothing to split

  // Lower bound for the X-part degree, parity-adjusted:
  // (d+g-3)/2 when d+g-3 is even, (d+g-4)/2 when odd.
  i64 lo = (d + g - 3 >= 0) ? (d + g - 3) / 2 : -((-(d + g - 3) + 1) / 2);
  std::vector<SplittingEntry> out;
  for (i64 mx = lo; mx <= m - 1; ++mx) {
    SplittingEntry e;
    e.m_X = mx;
    e.dim_on_X = expected_dim(d - 2, g - 1, mx);
    e.dim_component = dm;
    out.push_back(e);
  }
  return out;
}

}  // namespace scroll
