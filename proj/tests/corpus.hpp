#pragma once

// Small ideals shared by the property suites.

#include <random>
#include <string>
#include <vector>

#include "liaison/constructions.hpp"
#include "oracles.hpp"

namespace corpus {

using namespace liaison;

template <CoefficientField F>
struct Entry {
  std::string name;
  Ideal<F> ideal;
};

template <CoefficientField F>
std::vector<Entry<F>> ideals(const F& field) {
  auto ring = projective_ring(field, 4);
  auto x = [&](int i) { return Polynomial<F>::variable(ring, i); };
  std::vector<Entry<F>> out;
  out.push_back({"line", Ideal<F>(ring, {x(0), x(1)})});
  out.push_back({"twisted_cubic", twisted_cubic(field).ideal});
  out.push_back({"ferrand_m1", ferrand_double_line(field, 1).ideal});
  out.push_back({"ferrand_m2", ferrand_double_line(field, 2).ideal});
  out.push_back({"ci_2_2", Ideal<F>(ring, {x(0) * x(1) - x(2) * x(3), x(0) * x(0) + x(1) * x(2) - x(3) * x(3)})});
  out.push_back({"ci_2_3", Ideal<F>(ring, {x(0) * x(3) - x(1) * x(2), x(0).pow(3) + x(1).pow(3) - x(2) * x(3) * x(3)})});
  out.push_back({"plane_and_line", Ideal<F>(ring, {x(0) * x(1), x(0) * x(2)})});
  out.push_back({"embedded_point", Ideal<F>(ring, {x(0) * x(0), x(0) * x(1), x(0) * x(2), x(1) * x(2)})});
  out.push_back({"two_skew_lines", intersect(Ideal<F>(ring, {x(0), x(1)}), Ideal<F>(ring, {x(2), x(3)}))});
  out.push_back({"points", Ideal<F>(ring, {x(0) * x(1), x(1) * x(2), x(2) * x(0), x(3) * x(3) - x(0) * x(0)})});
  out.push_back({"fat_point", Ideal<F>(ring, {x(0), x(1), x(2)}).power(2)});
  out.push_back({"rational_quartic", Ideal<F>(ring, {x(1) * x(2) - x(0) * x(3), x(2).pow(3) - x(1) * x(3) * x(3),
                                                     x(0) * x(2) * x(2) - x(1) * x(1) * x(3),
                                                     x(1).pow(3) - x(0) * x(0) * x(2)})});
  return out;
}

/// Random homogeneous ideal in k[x0, x1, x2] with a few sparse generators.
template <CoefficientField F>
Ideal<F> random_ideal(const RingPtr<F>& ring, std::mt19937_64& rng, int max_gens = 3, int max_degree = 3) {
  std::uniform_int_distribution<int> ngens(1, max_gens), deg(1, max_degree), terms(1, 3);
  std::vector<Polynomial<F>> gens;
  int k = ngens(rng);
  for (int i = 0; i < k; ++i) gens.push_back(oracle::random_poly(ring, deg(rng), rng, terms(rng)));
  return Ideal<F>(ring, gens);
}

}  // namespace corpus
