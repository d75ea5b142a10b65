#pragma once

// Brute-force oracles. Everything here works on dense coefficient vectors
// over the monomial basis of one degree and never touches a Groebner basis.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "liaison/resolution.hpp"

namespace oracle {

using namespace liaison;

template <CoefficientField F>
using Vec = std::vector<typename F::Element>;

/// Incremental row echelon form; insert() reports whether the rank grew.
template <CoefficientField F>
class Echelon {
 public:
  Echelon(F field, std::size_t width) : field_(std::move(field)), width_(width) {}

  bool insert(Vec<F> v) {
    reduce(v);
    auto p = pivot(v);
    if (p == width_) return false;
    auto inv = field_.inv(v[p]);
    for (auto& c : v) c = field_.mul(c, inv);
    rows_.push_back({p, std::move(v)});
    return true;
  }
  bool spans(Vec<F> v) const {
    reduce(v);
    return pivot(v) == width_;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t pivot(const Vec<F>& v) const {
    for (std::size_t i = 0; i < width_; ++i)
      if (!field_.is_zero(v[i])) return i;
    return width_;
  }
  void reduce(Vec<F>& v) const {
    for (const auto& [p, row] : rows_) {
      if (field_.is_zero(v[p])) continue;
      auto c = v[p];
      for (std::size_t i = 0; i < width_; ++i) v[i] = field_.sub(v[i], field_.mul(c, row[i]));
    }
  }
  F field_;
  std::size_t width_;
  std::vector<std::pair<std::size_t, Vec<F>>> rows_;
};

/// Monomials of degree d with a lookup table.
class DegreeBasis {
 public:
  DegreeBasis(int nvars, int d) : monos_(monomials_of_degree(nvars, d)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
  }
  std::size_t size() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t index(const Monomial& m) const { return index_.at(m); }

 private:
  struct Less {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return TermOrder::lex().compare(a, b) < 0;
    }
  };
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t, Less> index_;
};

template <CoefficientField F>
Vec<F> dense(const Polynomial<F>& p, const DegreeBasis& basis) {
  const auto& field = p.ring()->field();
  Vec<F> v(basis.size(), field.zero());
  for (const auto& t : p.terms()) v[basis.index(t.mono)] = t.coeff;
  return v;
}

/// Spanning set of I_d: monomial multiples of the generators.
template <CoefficientField F>
Echelon<F> graded_piece(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, int d) {
  DegreeBasis basis(ring->nvars(), d);
  Echelon<F> e(ring->field(), basis.size());
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), d - g.degree()))
      e.insert(dense(g.times_monomial(m), basis));
  }
  return e;
}

template <CoefficientField F>
long dim_ideal(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, int d) {
  if (d < 0) return 0;
  return static_cast<long>(graded_piece(ring, gens, d).rank());
}

inline long dim_ring(int nvars, int d) {
  return d < 0 ? 0 : static_cast<long>(monomials_of_degree(nvars, d).size());
}

/// dim (S/I)_d by linear algebra.
template <CoefficientField F>
long hilbert_function(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, int d) {
  return dim_ring(ring->nvars(), d) - dim_ideal(ring, gens, d);
}

/// Membership of a homogeneous f in the ideal generated by gens.
template <CoefficientField F>
bool member(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const Polynomial<F>& f) {
  if (f.is_zero()) return true;
  DegreeBasis basis(ring->nvars(), f.degree());
  return graded_piece(ring, gens, f.degree()).spans(dense(f, basis));
}

/// dim (I : f)_d = dim S_d - rank of S_d -> S_{d+e} / I_{d+e}.
template <CoefficientField F>
long dim_quotient(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const Polynomial<F>& f, int d) {
  if (d < 0) return 0;
  const int e = f.degree();
  DegreeBasis target(ring->nvars(), d + e);
  auto ech = graded_piece(ring, gens, d + e);
  const long base = static_cast<long>(ech.rank());
  for (const auto& m : monomials_of_degree(ring->nvars(), d)) ech.insert(dense(f.times_monomial(m), target));
  return dim_ring(ring->nvars(), d) - (static_cast<long>(ech.rank()) - base);
}

/// dim (I : (h_1, ..., h_r))_d: the kernel of S_d -> (+)_i S_{d+deg h_i} / I_{d+deg h_i}.
template <CoefficientField F>
long dim_colon(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const std::vector<Polynomial<F>>& by,
               int d) {
  if (d < 0) return 0;
  const int nv = ring->nvars();
  const auto& field = ring->field();
  std::vector<DegreeBasis> targets;
  std::vector<std::size_t> offset;
  std::size_t width = 0;
  for (const auto& h : by) {
    targets.emplace_back(nv, d + h.degree());
    offset.push_back(width);
    width += targets.back().size();
  }
  Echelon<F> image(field, width);
  for (std::size_t i = 0; i < by.size(); ++i) {
    const int top = d + by[i].degree();
    for (const auto& g : gens) {
      if (g.is_zero() || g.degree() > top) continue;
      for (const auto& m : monomials_of_degree(nv, top - g.degree())) {
        Vec<F> v(width, field.zero());
        auto product = g.times_monomial(m);
        for (const auto& t : product.terms()) v[offset[i] + targets[i].index(t.mono)] = t.coeff;
        image.insert(std::move(v));
      }
    }
  }
  long rank = 0;
  for (const auto& m : monomials_of_degree(nv, d)) {
    Vec<F> v(width, field.zero());
    for (std::size_t i = 0; i < by.size(); ++i) {
      auto product = by[i].times_monomial(m);
      for (const auto& t : product.terms()) v[offset[i] + targets[i].index(t.mono)] = t.coeff;
    }
    if (image.insert(std::move(v))) ++rank;
  }
  return dim_ring(nv, d) - rank;
}

/// dim (I : (x_0^k, ..., x_n^k))_d; for k large this is the saturation in degree d.
template <CoefficientField F>
long dim_colon_powers(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, int k, int d) {
  std::vector<Polynomial<F>> powers;
  for (int i = 0; i < ring->nvars(); ++i)
    powers.push_back(Polynomial<F>::term(ring, Monomial::variable(i, k), ring->field().one()));
  return dim_colon(ring, gens, powers, d);
}

/// Full division of f by an ordered list, returning the remainder.
template <CoefficientField F>
Polynomial<F> divide(Polynomial<F> f, const std::vector<Polynomial<F>>& by, const TermOrder& ord) {
  const auto& ring = f.ring();
  const auto& field = ring->field();
  Polynomial<F> rem(ring);
  while (!f.is_zero()) {
    const auto lt = f.leading_term(ord);
    bool divided = false;
    for (const auto& g : by) {
      const auto& lg = g.leading_term(ord);
      if (!lg.mono.divides(lt.mono)) continue;
      auto c = field.div(lt.coeff, lg.coeff);
      f = f - g.times_monomial(lg.mono.quotient_of(lt.mono)).scaled(c);
      divided = true;
      break;
    }
    if (!divided) {
      auto t = Polynomial<F>::term(ring, lt.mono, lt.coeff);
      rem = rem + t;
      f = f - t;
    }
  }
  return rem;
}

/// Every S-polynomial of gb reduces to zero by plain division.
template <CoefficientField F>
bool buchberger_criterion(const std::vector<Polynomial<F>>& gb, const TermOrder& ord) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const auto& a = gb[i].leading_term(ord);
      const auto& b = gb[j].leading_term(ord);
      auto l = lcm(a.mono, b.mono);
      const auto& field = gb[i].ring()->field();
      auto s = gb[i].times_monomial(a.mono.quotient_of(l)).scaled(field.inv(a.coeff)) -
               gb[j].times_monomial(b.mono.quotient_of(l)).scaled(field.inv(b.coeff));
      if (!divide(s, gb, ord).is_zero()) return false;
    }
  return true;
}

/// dim M_d for the cokernel of a graded map, by dense linear algebra.
template <CoefficientField F>
long module_dimension(const GradedMap<F>& m, int d) {
  const auto& ring = m.ring;
  const int nv = ring->nvars();
  std::vector<DegreeBasis> bases;
  std::size_t width = 0;
  std::vector<std::size_t> offset;
  for (int t : m.target_degrees) {
    bases.emplace_back(nv, d - t);
    offset.push_back(width);
    width += d - t >= 0 ? bases.back().size() : 0;
  }
  Echelon<F> ech(ring->field(), width);
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    const int s = m.source_degrees[j];
    if (s > d) continue;
    for (const auto& mono : monomials_of_degree(nv, d - s)) {
      Vec<F> v(width, ring->field().zero());
      for (std::size_t i = 0; i < m.columns[j].size(); ++i) {
        if (m.columns[j][i].is_zero()) continue;
        auto product = m.columns[j][i].times_monomial(mono);
        for (const auto& t : product.terms()) v[offset[i] + bases[i].index(t.mono)] = t.coeff;
      }
      ech.insert(std::move(v));
    }
  }
  return static_cast<long>(width) - static_cast<long>(ech.rank());
}

inline long free_dim(int nvars, const std::vector<int>& degrees, int d) {
  long s = 0;
  for (int t : degrees) s += dim_ring(nvars, d - t);
  return s;
}

template <CoefficientField F>
long rank_in_degree(const GradedMap<F>& m, int d) {
  return free_dim(m.ring->nvars(), m.target_degrees, d) - module_dimension(m, d);
}

/// Checks exactness of a resolution in degrees [0, top] by ranks of dense
/// matrices; returns an empty string on success.
template <CoefficientField F>
std::string exactness_failure(const FreeResolution<F>& res, int top) {
  const int nv = res.ring->nvars();
  std::vector<Polynomial<F>> generators;
  for (const auto& c : res.maps[0].columns) generators.push_back(c[0]);
  for (int d = 0; d <= top; ++d) {
    for (int i = 0; i + 1 < res.length(); ++i) {
      long kernel = free_dim(nv, res.degrees(i + 1), d) - rank_in_degree(res.maps[i], d);
      long image = rank_in_degree(res.maps[i + 1], d);
      if (kernel != image) return "not exact at F" + std::to_string(i + 1) + " in degree " + std::to_string(d);
    }
    const auto& last = res.maps.back();
    if (rank_in_degree(last, d) != free_dim(nv, last.source_degrees, d))
      return "last map not injective in degree " + std::to_string(d);
    if (module_dimension(res.maps[0], d) != hilbert_function(res.ring, generators, d))
      return "cokernel mismatch in degree " + std::to_string(d);
  }
  return "";
}

/// A random homogeneous polynomial of degree d with small coefficients.
template <CoefficientField F>
Polynomial<F> random_poly(const RingPtr<F>& ring, int d, std::mt19937_64& rng, int terms = 4) {
  auto monos = monomials_of_degree(ring->nvars(), d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  Polynomial<F> p(ring);
  for (int i = 0; i < terms; ++i)
    p = p + Polynomial<F>::term(ring, monos[pick(rng)], ring->field().from_int(coeff(rng)));
  return p;
}

}  // namespace oracle
