#pragma once

// The example schemes: complete intersections, the twisted cubic, Ferrand
// double lines, the line on a smooth quadric threefold, random linked curves.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liaison/linkage.hpp"

namespace liaison {

struct Expectation {
  std::string key;
  std::string value;
  std::string source;  // literature | computed
};

template <CoefficientField F>
struct ExampleDescriptor {
  std::string name;
  FieldSpec field;
  int n = 3;
  std::vector<int> ambient_degrees;
  Ideal<F> ambient;
  Ideal<F> ideal;
  std::optional<std::pair<Polynomial<F>, Polynomial<F>>> link;
  // for linked curves: the curve the residual was produced from, and the
  // form f3 with ideal = ambient + (f1, f2, f3)
  std::optional<Ideal<F>> start;
  std::optional<Polynomial<F>> f3;
  std::vector<Expectation> expected;

  const Expectation* find(const std::string& key) const {
    for (const auto& e : expected)
      if (e.key == key) return &e;
    return nullptr;
  }
};

inline constexpr int kRetryBudget = 10;

namespace detail {

/// A sparse random form: a few distinct monomials with small nonzero coefficients.
template <CoefficientField F>
Polynomial<F> random_form(const RingPtr<F>& ring, int degree, std::mt19937_64& rng, int terms = 4) {
  const auto& field = ring->field();
  auto monos = monomials_of_degree(ring->nvars(), degree);
  std::vector<typename Polynomial<F>::Term> out;
  std::uniform_int_distribution<int> coeff(1, 3), sign(0, 1);
  for (int t = 0; t < terms && !monos.empty(); ++t) {
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::size_t i = pick(rng);
    int c = coeff(rng) * (sign(rng) ? -1 : 1);
    auto e = field.from_int(c);
    if (!field.is_zero(e)) out.push_back({monos[i], e});
    monos.erase(monos.begin() + static_cast<long>(i));
  }
  return Polynomial<F>::from_terms(ring, std::move(out));
}

}  // namespace detail

template <CoefficientField F>
ExampleDescriptor<F> complete_intersection(const F& field, int m1, int m3, int n, std::uint64_t seed) {
  if (n < 3) fail(ErrorKind::OutOfRange, "complete intersections need n >= 3");
  if (m1 < 1 || m3 < 1) fail(ErrorKind::OutOfRange, "degrees must be positive");
  auto ring = projective_ring(field, n + 1);
  std::mt19937_64 rng(seed);
  Ideal<F> zero(ring);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    auto f1 = detail::random_form(ring, m1, rng, 3 + m1);
    auto f3 = detail::random_form(ring, m3, rng, 3 + m3);
    if (f1.is_zero() || f3.is_zero() || !is_regular_pair(f1, f3, zero)) continue;
    ExampleDescriptor<F> d;
    d.name = "ci_" + std::to_string(m1) + "_" + std::to_string(m3) + "_P" + std::to_string(n);
    d.field = field.spec();
    d.n = n;
    d.ambient = zero;
    d.ideal = Ideal<F>(ring, {f1, f3});
    d.link.emplace(f1, f3 * f3);
    d.f3 = f3;
    d.expected = {
        {"dimension", std::to_string(n - 2), "computed"},
        {"degree", std::to_string(m1 * m3), "computed"},
        {"subcanonical_a", std::to_string(m1 + m3 - n - 1), "literature"},
        {"self_linked", "true", "literature"},
        {"ci_m3", std::to_string(m3), "literature"},
    };
    return d;
  }
  fail(ErrorKind::RetryExhausted, "no regular pair drawn within the retry budget");
}

template <CoefficientField F>
ExampleDescriptor<F> twisted_cubic(const F& field) {
  auto ring = projective_ring(field, 4);
  auto x = [&](int i) { return Polynomial<F>::variable(ring, i); };
  ExampleDescriptor<F> d;
  d.name = "twisted_cubic";
  d.field = field.spec();
  d.ambient = Ideal<F>(ring);
  d.ideal = Ideal<F>(ring, {x(0) * x(2) - x(1) * x(1), x(0) * x(3) - x(1) * x(2), x(1) * x(3) - x(2) * x(2)});
  d.expected = {
      {"dimension", "1", "computed"},   {"degree", "3", "computed"},
      {"arithmetic_genus", "0", "computed"}, {"cm_status", "ACM", "computed"},
      {"subcanonical", "no", "literature"}, {"selflink_degrees", "2,3", "literature"},
      {"complete_intersection", "false", "literature"},
  };
  return d;
}

/// (x0^2, x0 x1, x1^2, x0 g - x1 f) with f, g forms of degree m in x2, x3.
template <CoefficientField F>
ExampleDescriptor<F> ferrand_double_line(int m, const Polynomial<F>& f, const Polynomial<F>& g) {
  const auto& ring = f.ring();
  if (ring->nvars() != 4) fail(ErrorKind::OutOfRange, "double lines live in P^3");
  if (m < 1) fail(ErrorKind::OutOfRange, "m must be positive");
  for (const auto* p : {&f, &g}) {
    if (p->is_zero() || p->is_homogeneous() != m)
      fail(ErrorKind::NotHomogeneous, "f and g must be forms of degree m");
    for (const auto& t : p->terms())
      if (t.mono[0] || t.mono[1]) fail(ErrorKind::OutOfRange, "f and g may only involve the last two variables");
  }
  auto x = [&](int i) { return Polynomial<F>::variable(ring, i); };
  if (!Ideal<F>(ring, {x(0), x(1), f, g}).hilbert_data().empty_scheme())
    fail(ErrorKind::OutOfRange, "f and g have a common zero");
  ExampleDescriptor<F> d;
  d.name = "ferrand_m" + std::to_string(m);
  d.field = ring->field().spec();
  d.ambient = Ideal<F>(ring);
  d.ideal = Ideal<F>(ring, {x(0) * x(0), x(0) * x(1), x(1) * x(1), x(0) * g - x(1) * f});
  d.expected = {
      {"dimension", "1", "computed"},
      {"degree", "2", "computed"},
      {"arithmetic_genus", std::to_string(-m), "computed"},
      {"cm_status", "LocallyCM_not_ACM", "computed"},
      {"subcanonical", "yes", "computed"},
  };
  if (m == 2) {
    bool char2 = d.field.characteristic == 2;
    d.expected.push_back({"self_linked_2_2", char2 ? "true" : "false", "literature"});
    if (char2) d.link.emplace(x(0) * x(0), x(1) * x(1));
  }
  return d;
}

template <CoefficientField F>
ExampleDescriptor<F> ferrand_double_line(const F& field, int m) {
  auto ring = projective_ring(field, 4);
  return ferrand_double_line(m, Polynomial<F>::variable(ring, 2).pow(m), Polynomial<F>::variable(ring, 3).pow(m));
}

/// The line x2 = x3 = x4 = 0 on the quadric x0 x4 - x1 x3 + x2^2 in P^4.
inline ExampleDescriptor<Rationals> quadric_line_example() {
  using F = Rationals;
  auto ring = projective_ring(Rationals{}, 5);
  auto x = [&](int i) { return Polynomial<F>::variable(ring, i); };
  auto q = x(0) * x(4) - x(1) * x(3) + x(2) * x(2);
  ExampleDescriptor<F> d;
  d.name = "quadric_line";
  d.field = FieldSpec::rationals();
  d.n = 4;
  d.ambient_degrees = {2};
  d.ambient = Ideal<F>(ring, {q});
  d.ideal = Ideal<F>(ring, {x(2), x(3), x(4), q});
  d.link.emplace(x(4), x(3));
  d.f3 = x(2);
  d.expected = {
      {"degree", "1", "computed"},
      {"self_linked", "true", "computed"},
      {"alpha", "1", "computed"},
      {"gherardelli_m3", "1", "computed"},
      {"gherardelli_f3", "x2", "computed"},
      {"parity", "odd degree 1; complete intersections in P have even degree", "literature"},
  };
  return d;
}

struct LinkedCurveShape {
  int a, b;    // start curve: complete intersection of degrees a <= b
  int d1, d2;  // linking complete intersection
};

inline const std::vector<LinkedCurveShape>& linked_curve_shapes() {
  static const std::vector<LinkedCurveShape> shapes = {
      {1, 1, 2, 2}, {1, 2, 2, 2}, {1, 1, 2, 3}, {1, 2, 2, 3}, {2, 2, 2, 3},
      {1, 1, 3, 3}, {1, 2, 3, 3}, {1, 3, 3, 3}, {2, 2, 3, 3},
  };
  return shapes;
}

/// Links a random complete-intersection curve X0 = V(g1, g2) in P^3 inside
/// Z = V(f1, f2), f_i = h_i1 g1 + h_i2 g2, and returns the residual Y, which
/// equals Z cut with det(h).
template <CoefficientField F>
ExampleDescriptor<F> random_linked_curve(const F& field, std::uint64_t seed, int max_ci_degree = 9) {
  auto ring = projective_ring(field, 4);
  std::mt19937_64 rng(seed);
  std::vector<LinkedCurveShape> shapes;
  for (const auto& s : linked_curve_shapes())
    if (s.d1 * s.d2 <= max_ci_degree) shapes.push_back(s);
  if (shapes.empty()) fail(ErrorKind::OutOfRange, "degree bound too small");
  const auto shape = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
  Ideal<F> zero(ring);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    auto g1 = detail::random_form(ring, shape.a, rng, 2 + shape.a);
    auto g2 = detail::random_form(ring, shape.b, rng, 2 + shape.b);
    if (g1.is_zero() || g2.is_zero() || !is_regular_pair(g1, g2, zero)) continue;
    auto form = [&](int deg) { return deg < 0 ? Polynomial<F>(ring) : detail::random_form(ring, deg, rng, 2 + deg); };
    auto h11 = form(shape.d1 - shape.a), h12 = form(shape.d1 - shape.b);
    auto h21 = form(shape.d2 - shape.a), h22 = form(shape.d2 - shape.b);
    auto f1 = h11 * g1 + h12 * g2;
    auto f2 = h21 * g1 + h22 * g2;
    if (f1.is_zero() || f2.is_zero() || f1.degree() != shape.d1 || f2.degree() != shape.d2) continue;
    if (!is_regular_pair(f1, f2, zero)) continue;
    auto det = h11 * h22 - h12 * h21;
    if (det.is_zero() || det.is_constant()) continue;
    Ideal<F> x0(ring, {g1, g2});
    auto data = link(zero, x0, f1, f2);
    if (data.iy.hilbert_data().empty_scheme()) continue;
    ExampleDescriptor<F> d;
    d.name = "linked_" + std::to_string(seed);
    d.field = field.spec();
    d.ambient = zero;
    d.ideal = data.iy;
    d.link.emplace(f1, f2);
    d.start = x0;
    d.f3 = det;
    long deg_y = static_cast<long>(shape.d1) * shape.d2 - static_cast<long>(shape.a) * shape.b;
    d.expected = {
        {"degree", std::to_string(deg_y), "computed"},
        {"double_link", "true", "literature"},
        {"start_alpha", std::to_string(shape.a + shape.b), "literature"},
    };
    return d;
  }
  fail(ErrorKind::RetryExhausted, "no linked curve drawn within the retry budget");
}

}  // namespace liaison
