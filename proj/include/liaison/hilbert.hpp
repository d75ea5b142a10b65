#pragma once

// Hilbert series of monomial ideals and the Hilbert data derived from them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liaison/monomial.hpp"

namespace liaison {

/// Integer polynomial in t, coefficient i at index i.
using SeriesNumerator = std::vector<mpz_class>;

namespace detail {

inline void trim(SeriesNumerator& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline SeriesNumerator series_add(const SeriesNumerator& a, const SeriesNumerator& b, int shift_b = 0,
                                  int sign = 1) {
  SeriesNumerator r(std::max(a.size(), b.size() + shift_b), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] += sign * b[i];
  trim(r);
  return r;
}

inline SeriesNumerator series_mul(const SeriesNumerator& a, const SeriesNumerator& b) {
  if (a.empty() || b.empty()) return {};
  SeriesNumerator r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

/// Drops monomials divisible by another one; result sorted for memo keys.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() != b.degree() ? a.degree() < b.degree() : a < b; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Numerator N(t) of HS(S/M) = N(t) / (1-t)^nvars, by pivoting on a variable:
/// N(M) = N(M + (x)) + t * N(M : x).
class MonomialSeries {
 public:
  SeriesNumerator numerator(const std::vector<Monomial>& gens) { return rec(minimalize(gens)); }

 private:
  SeriesNumerator rec(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    for (const auto& g : gens)
      if (g.is_one()) return {};
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;

    // pairwise coprime: product of (1 - t^deg)
    bool all_coprime = true;
    for (std::size_t i = 0; i < gens.size() && all_coprime; ++i)
      for (std::size_t j = i + 1; j < gens.size() && all_coprime; ++j)
        all_coprime = coprime(gens[i], gens[j]);
    SeriesNumerator result;
    if (all_coprime) {
      result = {1};
      for (const auto& g : gens) {
        SeriesNumerator f(g.degree() + 1, 0);
        f[0] = 1;
        f[g.degree()] = -1;
        result = series_mul(result, f);
      }
    } else {
      // pivot on the variable occurring in the most non-coprime generators
      std::vector<int> count(kMaxVariables, 0);
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (i != j && !coprime(gens[i], gens[j]))
            for (int v = 0; v < kMaxVariables; ++v)
              if (gens[i][v] && gens[j][v]) ++count[v];
      int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
      Monomial x = Monomial::variable(pivot);
      std::vector<Monomial> plus{x}, colon;
      for (const auto& g : gens) {
        if (!x.divides(g)) plus.push_back(g);
        colon.push_back(x.divides(g) ? x.quotient_of(g) : g);
      }
      result = series_add(rec(minimalize(plus)), rec(minimalize(colon)), 1);
    }
    memo_.emplace(gens, result);
    return result;
  }

  std::map<std::vector<Monomial>, SeriesNumerator> memo_;
};

/// C(x, r) for integer x >= 0 (zero when x < r).
inline mpz_class binomial(long x, long r) {
  if (r < 0 || x < r) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(r));
  return b;
}

}  // namespace detail

/// Univariate rational polynomial in d, coefficient i at index i.
struct RationalPolynomial {
  std::vector<mpq_class> coeffs;

  mpq_class operator()(const mpq_class& d) const {
    mpq_class v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * d + *it;
    return v;
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  std::string to_string(const std::string& var = "d") const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const auto& c = coeffs[i];
      if (c == 0) continue;
      mpq_class mag = abs(c);
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i > 0 && mag != 1) os << "*";
      if (i > 0) os << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

  static RationalPolynomial from(std::vector<mpq_class> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return {std::move(c)};
  }
};

/// Hilbert data of a graded module with HS = t^shift * numerator / (1-t)^nvars.
struct HilbertData {
  int nvars = 0;
  SeriesNumerator numerator;
  int shift = 0;
  int krull_dimension = -1;  // of the module; -1 for the zero module
  mpz_class degree = 0;
  RationalPolynomial hilbert_polynomial;
  int index_of_stability = 0;

  bool is_zero_module() const { return numerator.empty(); }
  /// Dimension of the projective support; -1 for an empty scheme.
  int projective_dimension() const { return krull_dimension - 1; }
  bool empty_scheme() const { return krull_dimension <= 0; }

  /// dim_k of the degree-d piece.
  mpz_class function(long d) const {
    mpz_class v = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i)
      v += numerator[i] * detail::binomial(d - shift - static_cast<long>(i) + nvars - 1, nvars - 1);
    return v;
  }
  mpq_class polynomial(long d) const { return hilbert_polynomial(mpq_class(d)); }

  static HilbertData from_numerator(SeriesNumerator num, int nvars, int shift = 0) {
    HilbertData h;
    h.nvars = nvars;
    h.shift = shift;
    detail::trim(num);
    h.numerator = num;
    if (num.empty()) return h;
    // divide by (1 - t) while the value at 1 vanishes
    SeriesNumerator q = num;
    int k = 0;
    auto value_at_one = [](const SeriesNumerator& p) {
      mpz_class s = 0;
      for (const auto& c : p) s += c;
      return s;
    };
    while (k < nvars && value_at_one(q) == 0) {
      SeriesNumerator r(q.size() - 1, 0);
      mpz_class acc = 0;
      for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        acc += q[i];
        r[i] = acc;
      }
      q = r;
      detail::trim(q);
      ++k;
    }
    int dim = nvars - k;
    h.krull_dimension = dim;
    h.degree = value_at_one(q);
    // P(d) = sum_i q_i C(d - i + dim - 1, dim - 1) as a polynomial in d
    std::vector<mpq_class> poly(std::max(dim, 1), 0);
    if (dim == 0) {
      poly.clear();
    } else {
      for (std::size_t i = 0; i < q.size(); ++i) {
        // C(d - i + dim - 1, dim - 1) = prod_{j=1}^{dim-1} (d - i + j) / j
        std::vector<mpq_class> b{1};
        for (int j = 1; j < dim; ++j) {
          std::vector<mpq_class> nb(b.size() + 1, 0);
          mpq_class offset(static_cast<long>(j) - static_cast<long>(i) - shift, j);
          mpq_class inv_j(1, j);
          offset.canonicalize();
          for (std::size_t e = 0; e < b.size(); ++e) {
            nb[e + 1] += b[e] * inv_j;
            nb[e] += b[e] * offset;
          }
          b = nb;
        }
        for (std::size_t e = 0; e < b.size(); ++e) poly[e] += q[i] * b[e];
      }
    }
    h.hilbert_polynomial = RationalPolynomial::from(poly);
    // equality is guaranteed for d >= deg(q) - dim + 1; walk down to the first disagreement
    long start = static_cast<long>(q.size()) - 1 - dim + 1 + shift;
    long lowest = start - static_cast<long>(nvars) - static_cast<long>(q.size()) - 2;
    long d = start;
    while (d - 1 >= lowest && h.function(d - 1) == h.polynomial(d - 1)) --d;
    h.index_of_stability = static_cast<int>(d);
    return h;
  }
};

}  // namespace liaison
