#pragma once

// Cohomology of twists of the structure sheaf of a complete intersection
// P in P^n, by twisting sequences one hypersurface at a time.

#include <vector>

#include <gmpxx.h>

#include "liaison/errors.hpp"
#include "liaison/hilbert.hpp"

namespace liaison {

namespace detail {

struct SheafCohomology {
  int dim;
  std::vector<mpz_class> h;  // h[q] for q = 0..dim
};

inline SheafCohomology projective_space_cohomology(int n, long j) {
  SheafCohomology c{n, std::vector<mpz_class>(n + 1, 0)};
  if (j >= 0) c.h[0] = binomial(n + j, n);
  if (j <= -n - 1) c.h[n] += binomial(-j - 1, n);
  return c;
}

inline mpz_class euler_characteristic(const SheafCohomology& c) {
  mpz_class chi = 0;
  for (int q = 0; q <= c.dim; ++q) chi += (q % 2 ? -1 : 1) * c.h[q];
  return chi;
}

/// h^q(O_P(j)) for P cut out by degrees[0..k) in P^n.
inline SheafCohomology ci_cohomology(const std::vector<int>& degrees, std::size_t k, int n, long j) {
  if (k == 0) return projective_space_cohomology(n, j);
  const int e = degrees[k - 1];
  // 0 -> O_{P'}(j - e) -> O_{P'}(j) -> O_P(j) -> 0
  auto big = ci_cohomology(degrees, k - 1, n, j);
  auto sub = ci_cohomology(degrees, k - 1, n, j - e);
  const int dim = big.dim - 1;
  SheafCohomology c{dim, std::vector<mpz_class>(dim + 1, 0)};
  mpz_class chi = euler_characteristic(big) - euler_characteristic(sub);
  if (dim == 0) {
    c.h[0] = chi;
    return c;
  }
  // P' has dimension >= 2, so H^1(O_{P'}(j - e)) = 0 and H^0 is a cokernel of an injection
  c.h[0] = big.h[0] - sub.h[0];
  // intermediate cohomology vanishes; the top group is fixed by chi
  c.h[dim] = (dim % 2 ? -1 : 1) * (chi - c.h[0]);
  return c;
}

}  // namespace detail

/// dim H^q(P, O_P(j)) for P the complete intersection of hypersurfaces of
/// the given degrees in P^n (empty list: P = P^n).
inline long ambient_cohomology_dim(const std::vector<int>& ambient_degrees, int n, int q, long j) {
  const int dim = n - static_cast<int>(ambient_degrees.size());
  if (dim < 0) fail(ErrorKind::OutOfRange, "ambient is empty");
  if (q < 0 || q > dim) fail(ErrorKind::OutOfRange, "cohomological degree out of range");
  for (int e : ambient_degrees)
    if (e < 1) fail(ErrorKind::OutOfRange, "hypersurface degree must be positive");
  auto c = detail::ci_cohomology(ambient_degrees, ambient_degrees.size(), n, j);
  return c.h[q].get_si();
}

}  // namespace liaison
