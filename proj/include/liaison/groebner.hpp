#pragma once

// Buchberger's algorithm for homogeneous submodules of graded free modules
// S(-d_0) + ... + S(-d_{r-1}). Ideals are the rank-one case.
//
// Pairs are processed by degree, pruned with the Gebauer-Moeller criteria
// (the coprime criterion only applies in rank one), and the result is the
// reduced basis: minimal, tail-reduced, monic, sorted by leading term.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

/// Degrees of the basis vectors of a graded free module, plus the
/// elimination block of each component (block 0 dominates block 1, ...).
struct ModuleLayout {
  std::vector<int> degrees;
  std::vector<int> blocks;

  static ModuleLayout free(std::vector<int> degrees) {
    ModuleLayout l;
    l.blocks.assign(degrees.size(), 0);
    l.degrees = std::move(degrees);
    return l;
  }
  static ModuleLayout ideal() { return free({0}); }
  int rank() const { return static_cast<int>(degrees.size()); }
};

/// Block, then (for grevlex) module degree, then the term order, then the
/// component index (lower index is larger).
struct ModuleOrder {
  TermOrder term;
  ModuleLayout layout;

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    if (layout.blocks[ca] != layout.blocks[cb]) return layout.blocks[ca] < layout.blocks[cb] ? 1 : -1;
    if (term.degree_compatible()) {
      int da = a.degree() + layout.degrees[ca], db = b.degree() + layout.degrees[cb];
      if (da != db) return da > db ? 1 : -1;
    }
    if (int c = term.compare(a, b)) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int degree(const Monomial& m, int comp) const { return m.degree() + layout.degrees[comp]; }
};

template <CoefficientField F>
struct VectorTerm {
  Monomial mono;
  int comp;
  typename F::Element coeff;
};

/// Element of a free module as a sorted term list (descending in its order).
template <CoefficientField F>
using SparseVector = std::vector<VectorTerm<F>>;

namespace detail {

template <CoefficientField F>
void sort_terms(SparseVector<F>& v, const ModuleOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    return ord.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
}

/// p[start..] - c * m * g, with the merge done in the module order.
template <CoefficientField F>
SparseVector<F> sub_multiple(const F& field, const SparseVector<F>& p, std::size_t start,
                             const typename F::Element& c, const Monomial& m,
                             const SparseVector<F>& g, const ModuleOrder& ord) {
  SparseVector<F> out;
  out.reserve(p.size() - start + g.size());
  std::size_t i = start, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == p.size() ? -1 : ord.compare(p[i].mono, p[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].comp, field.neg(field.mul(c, g[j].coeff))});
      ++j;
    } else {
      auto v = field.sub(p[i].coeff, field.mul(c, g[j].coeff));
      if (!field.is_zero(v)) out.push_back({gm, g[j].comp, std::move(v)});
      ++i, ++j;
    }
  }
  return out;
}

template <CoefficientField F>
void make_monic(const F& field, SparseVector<F>& v) {
  if (v.empty() || field.is_one(v.front().coeff)) return;
  auto inv = field.inv(v.front().coeff);
  for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
}

}  // namespace detail

/// Reduction of p by a list of monic vectors. With full = false only the
/// leading term is reduced.
template <CoefficientField F>
SparseVector<F> reduce(const F& field, SparseVector<F> p, const std::vector<SparseVector<F>>& basis,
                       const ModuleOrder& ord, bool full = true) {
  SparseVector<F> done;
  std::size_t start = 0;
  while (start < p.size()) {
    const auto& lead = p[start];
    const SparseVector<F>* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g.front().comp == lead.comp && g.front().mono.divides(lead.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Monomial m = divisor->front().mono.quotient_of(lead.mono);
      auto c = field.div(lead.coeff, divisor->front().coeff);
      p = detail::sub_multiple(field, p, start, c, m, *divisor, ord);
      start = 0;
    } else if (!full) {
      break;
    } else {
      done.push_back(std::move(p[start]));
      ++start;
    }
  }
  if (start < p.size()) done.insert(done.end(), p.begin() + start, p.end());
  return done;
}

template <CoefficientField F>
class GroebnerEngine {
 public:
  GroebnerEngine(F field, ModuleOrder ord) : field_(std::move(field)), ord_(std::move(ord)) {
    ideal_case_ = ord_.layout.rank() == 1;
  }

  std::vector<SparseVector<F>> compute(std::vector<SparseVector<F>> generators) {
    for (auto& g : generators) {
      detail::sort_terms(g, ord_);
      if (g.empty()) continue;
      inputs_.push_back(std::move(g));
      int idx = static_cast<int>(inputs_.size()) - 1;
      const auto& lt = inputs_.back().front();
      queue_.insert(Pair{ord_.degree(lt.mono, lt.comp), lt.mono, lt.comp, -1, idx});
    }
    while (!queue_.empty()) {
      Pair pr = *queue_.begin();
      queue_.erase(queue_.begin());
      SparseVector<F> s = pr.i < 0 ? inputs_[pr.j] : spoly(pr.i, pr.j);
      s = reduce(field_, std::move(s), active_basis(), ord_, false);
      if (s.empty()) continue;
      s = reduce(field_, std::move(s), active_basis(), ord_, true);
      detail::make_monic(field_, s);
      if (ideal_case_ && s.front().mono.is_one()) {
        // unit ideal
        return {SparseVector<F>{{Monomial{}, s.front().comp, field_.one()}}};
      }
      add(std::move(s));
    }
    return finish();
  }

 private:
  struct Pair {
    int degree;
    Monomial lcm;
    int comp;
    int i, j;  // i < 0 marks input generator j
  };
  struct PairLess {
    const ModuleOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (int c = ord->compare(a.lcm, a.comp, b.lcm, b.comp)) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  const std::vector<SparseVector<F>>& active_basis() {
    if (!active_dirty_) return active_cache_;
    active_cache_.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) active_cache_.push_back(basis_[k]);
    active_dirty_ = false;
    return active_cache_;
  }

  SparseVector<F> spoly(int i, int j) const {
    const auto& f = basis_[i];
    const auto& g = basis_[j];
    Monomial l = lcm(f.front().mono, g.front().mono);
    Monomial mf = f.front().mono.quotient_of(l);
    Monomial mg = g.front().mono.quotient_of(l);
    SparseVector<F> fs;
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back({t.mono * mf, t.comp, t.coeff});
    // both monic: fs - mg * g, leading terms cancel
    return detail::sub_multiple(field_, fs, 0, field_.one(), mg, g, ord_);
  }

  void add(SparseVector<F> h) {
    const int hi = static_cast<int>(basis_.size());
    const Monomial hm = h.front().mono;
    const int hc = h.front().comp;
    basis_.push_back(std::move(h));
    active_.push_back(true);
    active_dirty_ = true;

    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < hi; ++g) {
      if (!active_[g] || basis_[g].front().comp != hc) continue;
      const Monomial& gm = basis_[g].front().mono;
      cands.push_back({g, lcm(gm, hm), ideal_case_ && coprime(gm, hm)});
    }
    // chain criterion among the new pairs
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      if (!cands[a].coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
          drop = cands[b].lcm.divides(cands[a].lcm);
        for (std::size_t b = 0; b < kept.size() && !drop; ++b)
          drop = kept[b].lcm.divides(cands[a].lcm);
      }
      if (!drop) kept.push_back(cands[a]);
    }
    // old pairs made redundant by h
    for (auto it = queue_.begin(); it != queue_.end();) {
      if (it->i >= 0 && it->comp == hc && hm.divides(it->lcm)) {
        Monomial li = lcm(basis_[it->i].front().mono, hm);
        Monomial lj = lcm(basis_[it->j].front().mono, hm);
        if (!(li == it->lcm) && !(lj == it->lcm)) {
          it = queue_.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (const auto& c : kept) {
      if (c.coprime) continue;
      queue_.insert(Pair{ord_.degree(c.lcm, hc), c.lcm, hc, c.g, hi});
    }
    for (int g = 0; g < hi; ++g)
      if (active_[g] && basis_[g].front().comp == hc && hm.divides(basis_[g].front().mono))
        active_[g] = false;
  }

  std::vector<SparseVector<F>> finish() {
    std::vector<SparseVector<F>> gb;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) gb.push_back(basis_[k]);
    for (std::size_t k = 0; k < gb.size(); ++k) {
      auto lead = gb[k].front();
      SparseVector<F> tail(gb[k].begin() + 1, gb[k].end());
      std::vector<SparseVector<F>> others;
      for (std::size_t l = 0; l < gb.size(); ++l)
        if (l != k) others.push_back(gb[l]);
      tail = reduce(field_, std::move(tail), others, ord_, true);
      SparseVector<F> r;
      r.reserve(tail.size() + 1);
      r.push_back(std::move(lead));
      for (auto& t : tail) r.push_back(std::move(t));
      gb[k] = std::move(r);
    }
    std::sort(gb.begin(), gb.end(), [&](const auto& a, const auto& b) {
      return ord_.compare(a.front().mono, a.front().comp, b.front().mono, b.front().comp) < 0;
    });
    return gb;
  }

  F field_;
  ModuleOrder ord_;
  bool ideal_case_ = true;
  std::vector<SparseVector<F>> inputs_;
  std::vector<SparseVector<F>> basis_;
  std::vector<bool> active_;
  std::vector<SparseVector<F>> active_cache_;
  bool active_dirty_ = true;
  std::set<Pair, PairLess> queue_{PairLess{&ord_}};
};

template <CoefficientField F>
std::vector<SparseVector<F>> groebner_basis(const F& field, std::vector<SparseVector<F>> generators,
                                            const ModuleOrder& ord) {
  return GroebnerEngine<F>(field, ord).compute(std::move(generators));
}

/// True when every S-vector of the basis reduces to zero.
template <CoefficientField F>
bool satisfies_buchberger_criterion(const F& field, const std::vector<SparseVector<F>>& basis,
                                    const ModuleOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      if (f.front().comp != g.front().comp) continue;
      Monomial l = lcm(f.front().mono, g.front().mono);
      SparseVector<F> fs;
      auto cf = field.inv(f.front().coeff);
      for (const auto& t : f) fs.push_back({t.mono * f.front().mono.quotient_of(l), t.comp, field.mul(t.coeff, cf)});
      auto cg = field.inv(g.front().coeff);
      auto s = detail::sub_multiple(field, fs, 0, cg, g.front().mono.quotient_of(l), g, ord);
      if (!reduce(field, std::move(s), basis, ord, true).empty()) return false;
    }
  }
  return true;
}

// Conversions between polynomials / columns and sparse vectors.

template <CoefficientField F>
SparseVector<F> to_sparse(const Polynomial<F>& p, int comp, const ModuleOrder& ord) {
  SparseVector<F> v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, comp, t.coeff});
  if (!(ord.term == TermOrder::grevlex())) detail::sort_terms(v, ord);
  return v;
}

template <CoefficientField F>
SparseVector<F> to_sparse(const std::vector<Polynomial<F>>& column, const ModuleOrder& ord,
                          int offset = 0) {
  SparseVector<F> v;
  for (std::size_t i = 0; i < column.size(); ++i)
    for (const auto& t : column[i].terms()) v.push_back({t.mono, static_cast<int>(i) + offset, t.coeff});
  detail::sort_terms(v, ord);
  return v;
}

template <CoefficientField F>
Polynomial<F> to_polynomial(const RingPtr<F>& ring, const SparseVector<F>& v, int comp = 0) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.mono, t.coeff});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

/// Components [offset, offset + rank) as a dense column.
template <CoefficientField F>
std::vector<Polynomial<F>> to_column(const RingPtr<F>& ring, const SparseVector<F>& v, int rank,
                                     int offset = 0) {
  std::vector<std::vector<typename Polynomial<F>::Term>> parts(rank);
  for (const auto& t : v)
    if (t.comp >= offset && t.comp < offset + rank) parts[t.comp - offset].push_back({t.mono, t.coeff});
  std::vector<Polynomial<F>> col;
  col.reserve(rank);
  for (auto& p : parts) col.push_back(Polynomial<F>::from_terms(ring, std::move(p)));
  return col;
}

}  // namespace liaison
