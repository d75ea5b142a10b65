#pragma once

// Linkage of codimension-two subschemes: residuals, the double-link test,
// the Noether sequence identity, lifting to a third hypersurface, the
// complete-intersection certificate, and self-linkage searches.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liaison/cohomology.hpp"
#include "liaison/resolution.hpp"

namespace liaison {

template <CoefficientField F>
struct LinkageData {
  Ideal<F> ambient;
  std::vector<int> ambient_degrees;
  int n = 3;
  Ideal<F> ix;
  Polynomial<F> f1, f2;
  int m1 = 0, m2 = 0;
  Ideal<F> iz;
  Ideal<F> iy;
  bool colon_was_saturated = true;
};

template <CoefficientField F>
std::vector<int> generator_degrees(const Ideal<F>& ideal) {
  std::vector<int> out;
  for (const auto& g : minimal_ideal_generators(ideal)) out.push_back(g.degree());
  std::sort(out.begin(), out.end());
  return out;
}

/// The residual of X in Z = ambient + (f1, f2). n defaults to nvars - 1.
template <CoefficientField F>
LinkageData<F> link(const Ideal<F>& ambient, const Ideal<F>& ix, const Polynomial<F>& f1, const Polynomial<F>& f2,
                    int n = -1) {
  if (n < 0) n = ix.nvars() - 1;
  if (!is_saturated(ix)) fail(ErrorKind::NotSaturated, "I_X is not saturated");
  if (!ix.contains(ambient)) fail(ErrorKind::NotContained, "I_X does not contain the ambient ideal");
  if (ix.hilbert_data().empty_scheme()) fail(ErrorKind::EmptyScheme, "X is empty");
  if (ix.codimension() != ambient.codimension() + 2)
    fail(ErrorKind::WrongCodim, "X does not have codimension 2 in the ambient");
  if (f1.is_zero() || f2.is_zero() || !ix.contains(f1) || !ix.contains(f2))
    fail(ErrorKind::NotContained, "f1 and f2 must be nonzero elements of I_X");
  auto status = cm_status(ix);
  if (status == CMStatus::Unknown) fail(ErrorKind::UnknownCMStatus, "CM status of X is unknown");
  if (status == CMStatus::NotCM) fail(ErrorKind::NotCM, "X is not Cohen-Macaulay of pure codimension 2");
  if (!is_regular_pair(f1, f2, ambient)) fail(ErrorKind::NotRegularPair, "f1, f2 do not cut a codimension-2 scheme");

  LinkageData<F> data;
  data.ambient = ambient;
  data.ambient_degrees = generator_degrees(ambient);
  data.n = n;
  data.ix = ix;
  data.f1 = f1;
  data.f2 = f2;
  data.m1 = f1.degree();
  data.m2 = f2.degree();
  data.iz = ambient.with({f1, f2});
  if (data.iz.saturation() == ix) fail(ErrorKind::NotProper, "X equals Z");
  auto raw = ideal_quotient(data.iz, ix);
  data.iy = raw.saturation();
  data.colon_was_saturated = raw == data.iy;
  return data;
}

/// (I_Z : I_Y) = I_X as saturated ideals.
template <CoefficientField F>
bool double_link_check(const LinkageData<F>& data) {
  return ideal_quotient(data.iz, data.iy).saturation() == data.ix;
}

template <CoefficientField F>
bool is_self_linked(const LinkageData<F>& data) {
  return ideal_equal_as_schemes(data.iy, data.ix);
}

struct NoetherRow {
  int d;
  long lhs;  // dim (I_Y)_e - dim (I_Z)_e with e = d + m1 + m2 - 4
  long rhs;  // dim (K_X)_d
};

/// Degree-by-degree check of dim(I_Y)_{d+m1+m2-4} - dim(I_Z)_{d+m1+m2-4} = dim(K_X)_d.
template <CoefficientField F>
std::vector<NoetherRow> noether_sequence_table(const LinkageData<F>& data, int window) {
  if (!data.ambient.is_zero() || data.ix.nvars() != 4)
    fail(ErrorKind::Unsupported, "the Noether identity is checked only for curves in P^3");
  if (data.ix.hilbert_data().projective_dimension() != 1) fail(ErrorKind::NotCurve, "X is not a curve");
  auto k = canonical_module(data.ix, 3);
  std::vector<NoetherRow> rows;
  for (int d = -window; d <= window; ++d) {
    int e = d + data.m1 + data.m2 - 4;
    rows.push_back({d, data.iy.dimension_in_degree(e) - data.iz.dimension_in_degree(e), k.dimension_in_degree(d)});
  }
  return rows;
}

template <CoefficientField F>
bool verify_noether_sequence(const LinkageData<F>& data, int window = 4) {
  for (const auto& r : noether_sequence_table(data, window))
    if (r.lhs != r.rhs) return false;
  return true;
}

namespace detail {

template <CoefficientField F>
Polynomial<F> combination(const std::vector<Polynomial<F>>& basis, const std::vector<typename F::Element>& coeffs,
                          const RingPtr<F>& ring) {
  Polynomial<F> out(ring);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!ring->field().is_zero(coeffs[i])) out += basis[i].scaled(coeffs[i]);
  return out;
}

template <CoefficientField F>
Polynomial<F> random_combination(const std::vector<Polynomial<F>>& basis, const RingPtr<F>& ring,
                                 std::mt19937_64& rng) {
  std::vector<typename F::Element> coeffs(basis.size());
  for (auto& c : coeffs) c = random_coefficient(ring->field(), rng);
  return combination(basis, coeffs, ring);
}

}  // namespace detail

enum class LiftStatus { Verified, HypothesesFail, NoLiftFound };

inline const char* to_string(LiftStatus s) {
  switch (s) {
    case LiftStatus::Verified: return "verified";
    case LiftStatus::HypothesesFail: return "hypotheses_fail";
    case LiftStatus::NoLiftFound: return "no_lift_found";
  }
  return "?";
}

template <CoefficientField F>
struct GherardelliResult {
  int alpha = 0;
  int m3 = 0;
  std::optional<Polynomial<F>> f3;
  bool verified = false;
  LiftStatus status = LiftStatus::NoLiftFound;
  // h^1(O_P(m3-m1)), h^1(O_P(m3-m2)), h^2(O_P(m3-m1-m2))
  std::vector<long> hypotheses;
  SearchMode search = SearchMode::None;
  long candidates_tried = 0;
  std::string diagnostic;
};

/// Searches (I_Y)_{m3} for f3 with Z + (f3) = Y as schemes, m3 = m1 + m2 - alpha.
template <CoefficientField F>
GherardelliResult<F> gherardelli_find_f3(const LinkageData<F>& data, std::uint64_t seed = 0,
                                         std::optional<SubcanonicalReport> sub = std::nullopt) {
  const auto& ring = data.ix.ring();
  const auto& field = ring->field();
  if (!sub) sub = subcanonical_twist(data.ix, data.ambient_degrees, data.n, seed);
  if (sub->verdict != Verdict::Yes)
    fail(ErrorKind::NotSubcanonical, sub->verdict == Verdict::Inconclusive
                                         ? "subcanonical test inconclusive: " + sub->reason
                                         : "X is not subcanonical: " + sub->reason);
  GherardelliResult<F> result;
  result.alpha = *sub->alpha_relative;
  result.m3 = data.m1 + data.m2 - result.alpha;
  if (result.m3 <= 0) fail(ErrorKind::NonPositiveDegree, "m3 = " + std::to_string(result.m3) + " is not positive");

  const int dim_p = data.n - static_cast<int>(data.ambient_degrees.size());
  auto h = [&](int q, long j) -> long {
    return q > dim_p ? 0 : ambient_cohomology_dim(data.ambient_degrees, data.n, q, j);
  };
  result.hypotheses = {h(1, result.m3 - data.m1), h(1, result.m3 - data.m2), h(2, result.m3 - data.m1 - data.m2)};
  if (std::any_of(result.hypotheses.begin(), result.hypotheses.end(), [](long v) { return v != 0; })) {
    result.status = LiftStatus::HypothesesFail;
    result.diagnostic = "ambient cohomology hypotheses fail";
    return result;
  }

  auto basis = data.iy.graded_piece_basis(result.m3);
  const auto& target = data.iy.hilbert_data().hilbert_polynomial;
  auto works = [&](const Polynomial<F>& f3) {
    ++result.candidates_tried;
    if (f3.is_zero()) return false;
    Ideal<F> candidate = data.iz.with({f3});
    if (!(candidate.hilbert_data().hilbert_polynomial == target)) return false;
    return candidate.saturation() == data.iy;
  };

  bool exhausted = false;
  if constexpr (std::is_same_v<F, PrimeField>) {
    const int dim = static_cast<int>(basis.size());
    long count = detail::projective_count(field.characteristic(), dim);
    if (dim <= kEnumerationDimension && count > 0) {
      result.search = SearchMode::Exhaustive;
      detail::enumerate_projective(field.characteristic(), dim, kEnumerationCap, [&](const auto& v) {
        std::vector<typename F::Element> coeffs(v.begin(), v.end());
        auto f3 = detail::combination(basis, coeffs, ring);
        if (works(f3)) {
          result.f3 = f3.monic();
          return true;
        }
        return false;
      });
      exhausted = !result.f3 && count <= kEnumerationCap;
    }
  }
  if (!result.f3 && !exhausted && !basis.empty()) {
    result.search = SearchMode::Sampled;
    for (const auto& b : basis)
      if (works(b)) {
        result.f3 = primitive_form(b);
        break;
      }
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < kRandomTrials && !result.f3; ++trial) {
      auto f3 = detail::random_combination(basis, ring, rng);
      if (works(f3)) result.f3 = primitive_form(f3);
    }
  }
  if (result.f3) {
    result.verified = true;
    result.status = LiftStatus::Verified;
  } else {
    result.diagnostic = exhausted ? "no lift in the enumerated graded piece" : "no lift among sampled candidates";
  }
  return result;
}

template <CoefficientField F>
struct CICertificate {
  bool valid = false;
  bool switched = false;
  std::optional<Polynomial<F>> f1, f3;
  int m3 = 0;
  bool x_eq_f1_cap_f3 = false;
  bool z_eq_f1_cap_2f3 = false;
  bool m2_eq_2m3 = false;
  bool characteristic_positive = false;  // the theorem's guarantee does not apply
  GherardelliResult<F> lift;
  std::vector<std::string> failed_checks;
};

template <CoefficientField F>
CICertificate<F> ci_certify(const LinkageData<F>& data, std::uint64_t seed = 0,
                            std::optional<SubcanonicalReport> sub = std::nullopt) {
  if (!data.ambient.is_zero()) fail(ErrorKind::Unsupported, "certificate needs P = P^n");
  if (data.n < 3) fail(ErrorKind::Unsupported, "certificate needs n >= 3");
  if (!is_self_linked(data)) fail(ErrorKind::NotSelfLinked, "X is not self-linked by f1, f2");
  CICertificate<F> cert;
  if constexpr (std::is_same_v<F, PrimeField>) cert.characteristic_positive = true;
  cert.lift = gherardelli_find_f3(data, seed, sub);
  cert.m3 = cert.lift.m3;
  if (!cert.lift.f3) {
    cert.failed_checks.push_back("no_f3");
    return cert;
  }
  const auto& f3 = *cert.lift.f3;
  auto attempt = [&](const Polynomial<F>& g1, const Polynomial<F>& g2) {
    CICertificate<F> c = cert;
    c.f1 = g1;
    c.f3 = f3;
    c.x_eq_f1_cap_f3 = ideal_equal_as_schemes(data.ambient.with({g1, f3}), data.ix);
    c.z_eq_f1_cap_2f3 = ideal_equal_as_schemes(data.ambient.with({g1, f3 * f3}), data.ambient.with({g1, g2}));
    c.m2_eq_2m3 = g2.degree() == 2 * f3.degree();
    c.valid = c.x_eq_f1_cap_f3 && c.z_eq_f1_cap_2f3 && c.m2_eq_2m3;
    return c;
  };
  auto plain = attempt(data.f1, data.f2);
  if (plain.valid) return plain;
  auto swapped = attempt(data.f2, data.f1);
  if (swapped.valid) {
    swapped.switched = true;
    return swapped;
  }
  if (!plain.x_eq_f1_cap_f3) plain.failed_checks.push_back("X_eq_F1capF3");
  if (!plain.z_eq_f1_cap_2f3) plain.failed_checks.push_back("Z_eq_F1cap2F3");
  if (!plain.m2_eq_2m3) plain.failed_checks.push_back("m2_eq_2m3");
  return plain;
}

template <CoefficientField F>
struct SelfLinkSearchResult {
  std::optional<std::pair<Polynomial<F>, Polynomial<F>>> pair;
  SearchMode search = SearchMode::None;
  bool exhaustive_negative = false;  // proof of absence over this field at these degrees
  long candidates_tried = 0;
};

/// Searches (I_X)_{m1} x (I_X)_{m2} for a pair that links X to itself.
template <CoefficientField F>
SelfLinkSearchResult<F> selflink_search(const Ideal<F>& ix, int m1, int m2, long budget = 200,
                                        std::uint64_t seed = 0) {
  const auto& ring = ix.ring();
  const auto& field = ring->field();
  if (ix.hilbert_data().projective_dimension() != 1) fail(ErrorKind::NotCurve, "X is not a curve");
  if (!is_saturated(ix)) fail(ErrorKind::NotSaturated, "I_X is not saturated");
  const long deg = ix.hilbert_data().degree.get_si();
  if (m1 < 1 || m2 < 1 || static_cast<long>(m1) * m2 != 2 * deg)
    fail(ErrorKind::OutOfRange, "degrees must satisfy m1*m2 = 2 deg X");

  SelfLinkSearchResult<F> result;
  auto b1 = ix.graded_piece_basis(m1);
  auto b2 = ix.graded_piece_basis(m2);
  auto square = minimal_ideal_generators(ix.power(2));
  Ideal<F> zero(ring);

  auto links = [&](const Polynomial<F>& f1, const Polynomial<F>& f2) {
    ++result.candidates_tried;
    if (f1.is_zero() || f2.is_zero()) return false;
    Ideal<F> iz(ring, {f1, f2});
    for (const auto& g : square)
      if (!iz.contains(g)) return false;
    if (!is_regular_pair(f1, f2, zero)) return false;
    return ideal_quotient(iz, ix).saturation() == ix;
  };

  if (b1.empty() || b2.empty()) {
    result.search = SearchMode::Exhaustive;
    result.exhaustive_negative = true;
    return result;
  }

  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::uint32_t p = field.characteristic();
    const int d1 = static_cast<int>(b1.size()), d2 = static_cast<int>(b2.size());
    if (d1 <= 6 && d2 <= 6) {
      result.search = SearchMode::Exhaustive;
      const long c1 = detail::projective_count(p, d1), c2 = detail::projective_count(p, d2);
      std::vector<Polynomial<F>> second;
      detail::enumerate_projective(p, d2, c2, [&](const auto& v) {
        second.push_back(detail::combination(b2, std::vector<typename F::Element>(v.begin(), v.end()), ring));
        return false;
      });
      detail::enumerate_projective(p, d1, c1, [&](const auto& v) {
        auto f1 = detail::combination(b1, std::vector<typename F::Element>(v.begin(), v.end()), ring);
        for (const auto& f2 : second)
          if (links(f1, f2)) {
            result.pair.emplace(f1, f2);
            return true;
          }
        return false;
      });
      result.exhaustive_negative = !result.pair;
      return result;
    }
  }

  // Sampling. For a sampled f1 the unmixed part J of I_X^2 + (f1) lies in any
  // self-linking Z, so J_{m2} modulo (f1) pins down f2 when it is a line.
  result.search = SearchMode::Sampled;
  std::mt19937_64 rng(seed);
  for (long trial = 0; trial < budget && !result.pair; ++trial) {
    auto f1 = detail::random_combination(b1, ring, rng);
    if (f1.is_zero()) continue;
    Ideal<F> principal(ring, {f1});
    Ideal<F> j = equidimensional_hull(Ideal<F>(ring, square).with({f1}));
    std::vector<Polynomial<F>> forced;
    for (const auto& g : j.graded_piece_basis(m2)) {
      auto r = principal.normal_form(g);
      if (!r.is_zero()) forced.push_back(r);
    }
    Polynomial<F> f2 = detail::random_combination(forced.empty() ? b2 : forced, ring, rng);
    if (links(f1, f2)) result.pair.emplace(primitive_form(f1), primitive_form(f2));
  }
  return result;
}

}  // namespace liaison
