#pragma once

// Graded free modules, maps between them, and submodule computations
// (membership, kernels by elimination, minimal generators, Hilbert series).

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/hilbert.hpp"

namespace liaison {

template <CoefficientField F>
using Column = std::vector<Polynomial<F>>;

template <CoefficientField F>
Column<F> zero_column(const RingPtr<F>& ring, int rank) {
  return Column<F>(rank, Polynomial<F>(ring));
}

template <CoefficientField F>
bool is_zero_column(const Column<F>& c) {
  return std::all_of(c.begin(), c.end(), [](const auto& p) { return p.is_zero(); });
}

/// Degree of a homogeneous column given the degrees of the target basis;
/// nullopt for the zero column.
template <CoefficientField F>
std::optional<int> column_degree(const Column<F>& c, const std::vector<int>& target_degrees) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return c[i].degree() + target_degrees[i];
  return std::nullopt;
}

/// Matrix of homogeneous polynomials between graded free modules. A basis
/// vector of degree d generates a copy of S(-d); entry (i, j) is homogeneous
/// of degree source_degrees[j] - target_degrees[i] or zero.
template <CoefficientField F>
struct GradedMap {
  RingPtr<F> ring;
  std::vector<int> target_degrees;
  std::vector<int> source_degrees;
  std::vector<Column<F>> columns;

  int rows() const { return static_cast<int>(target_degrees.size()); }
  int cols() const { return static_cast<int>(source_degrees.size()); }
  const Polynomial<F>& entry(int i, int j) const { return columns[j][i]; }

  static GradedMap from_polynomials(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& row) {
    GradedMap m{ring, {0}, {}, {}};
    for (const auto& p : row) {
      m.source_degrees.push_back(p.degree());
      m.columns.push_back({p});
    }
    return m;
  }

  bool is_homogeneous() const {
    for (int j = 0; j < cols(); ++j)
      for (int i = 0; i < rows(); ++i) {
        const auto& e = entry(i, j);
        auto h = e.is_homogeneous();
        if (!h) return false;
        if (!e.is_zero() && *h != source_degrees[j] - target_degrees[i]) return false;
      }
    return true;
  }

  bool is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return is_zero_column(c); });
  }

  /// True when some entry is a nonzero constant.
  bool has_unit_entry() const {
    for (const auto& c : columns)
      for (const auto& e : c)
        if (!e.is_zero() && e.is_constant()) return true;
    return false;
  }

  /// Hom(-, S) of this map: S(d)'s become S(-(-d)).
  GradedMap dual() const {
    GradedMap t{ring, {}, {}, {}};
    for (int d : source_degrees) t.target_degrees.push_back(-d);
    for (int d : target_degrees) t.source_degrees.push_back(-d);
    t.columns.assign(rows(), zero_column(ring, cols()));
    for (int j = 0; j < cols(); ++j)
      for (int i = 0; i < rows(); ++i) t.columns[i][j] = entry(i, j);
    return t;
  }

  Column<F> apply(const Column<F>& v) const {
    Column<F> out = zero_column(ring, rows());
    for (int j = 0; j < cols(); ++j) {
      if (v[j].is_zero()) continue;
      for (int i = 0; i < rows(); ++i)
        if (!entry(i, j).is_zero()) out[i] += entry(i, j) * v[j];
    }
    return out;
  }

  /// this * other (other applied first).
  GradedMap compose(const GradedMap& other) const {
    GradedMap r{ring, target_degrees, other.source_degrees, {}};
    for (const auto& c : other.columns) r.columns.push_back(apply(c));
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows(); ++i) {
      os << "[";
      for (int j = 0; j < cols(); ++j) os << (j ? ", " : "") << entry(i, j).to_string();
      os << "]\n";
    }
    return os.str();
  }
};

/// Submodule of a graded free module given by generating columns, with a
/// lazily computed Groebner basis under (module degree, grevlex, component).
template <CoefficientField F>
class Submodule {
 public:
  Submodule(RingPtr<F> ring, std::vector<int> degrees, std::vector<Column<F>> gens)
      : ring_(std::move(ring)),
        order_{TermOrder::grevlex(), ModuleLayout::free(std::move(degrees))},
        gens_(std::move(gens)),
        cache_(std::make_shared<Cache>()) {}

  const RingPtr<F>& ring() const { return ring_; }
  int rank() const { return order_.layout.rank(); }
  const std::vector<int>& degrees() const { return order_.layout.degrees; }
  const std::vector<Column<F>>& generators() const { return gens_; }
  const ModuleOrder& order() const { return order_; }

  const std::vector<SparseVector<F>>& groebner_basis() const {
    std::lock_guard lock(cache_->mu);
    return groebner_basis_unlocked();
  }

  SparseVector<F> normal_form(const Column<F>& v) const {
    return reduce(ring_->field(), to_sparse(v, order_), groebner_basis(), order_, true);
  }
  SparseVector<F> normal_form(SparseVector<F> v) const {
    detail::sort_terms(v, order_);
    return reduce(ring_->field(), std::move(v), groebner_basis(), order_, true);
  }
  bool contains(const Column<F>& v) const { return normal_form(v).empty(); }

  /// Hilbert data of the quotient F / this.
  const HilbertData& quotient_hilbert_data() const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->hilbert) {
      const auto& gb = groebner_basis_unlocked();
      std::vector<std::vector<Monomial>> leads(rank());
      for (const auto& g : gb) leads[g.front().comp].push_back(g.front().mono);
      int low = rank() ? *std::min_element(degrees().begin(), degrees().end()) : 0;
      SeriesNumerator total;
      detail::MonomialSeries series;
      for (int i = 0; i < rank(); ++i)
        total = detail::series_add(total, series.numerator(leads[i]), degrees()[i] - low);
      cache_->hilbert = HilbertData::from_numerator(total, ring_->nvars(), low);
    }
    return *cache_->hilbert;
  }

  /// Standard (non-leading) module monomials of module degree d, as
  /// (monomial, component), in descending order.
  std::vector<std::pair<Monomial, int>> standard_monomials(int d) const {
    const auto& gb = groebner_basis();
    std::vector<std::pair<Monomial, int>> out;
    for (int c = 0; c < rank(); ++c) {
      for (const auto& m : monomials_of_degree(ring_->nvars(), d - degrees()[c])) {
        bool leading = false;
        for (const auto& g : gb)
          if (g.front().comp == c && g.front().mono.divides(m)) {
            leading = true;
            break;
          }
        if (!leading) out.emplace_back(m, c);
      }
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return order_.compare(a.first, a.second, b.first, b.second) > 0;
    });
    return out;
  }

 private:
  struct Cache {
    std::recursive_mutex mu;
    std::optional<std::vector<SparseVector<F>>> gb;
    std::optional<HilbertData> hilbert;
  };
  const std::vector<SparseVector<F>>& groebner_basis_unlocked() const {
    if (!cache_->gb) {
      std::vector<SparseVector<F>> gens;
      for (const auto& c : gens_) gens.push_back(to_sparse(c, order_));
      cache_->gb = liaison::groebner_basis(ring_->field(), std::move(gens), order_);
    }
    return *cache_->gb;
  }

  RingPtr<F> ring_;
  ModuleOrder order_;
  std::vector<Column<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Given generators (top_k, tag_k) of a submodule of T + G (T of rank
/// top_degrees.size(), G of rank tag_degrees.size()), returns generators of
/// { tag part of v : v in the submodule, top part of v = 0 }, computed by
/// eliminating the T components.
template <CoefficientField F>
std::vector<Column<F>> kernel_projection(const RingPtr<F>& ring, const std::vector<int>& top_degrees,
                                         const std::vector<int>& tag_degrees,
                                         const std::vector<std::pair<Column<F>, Column<F>>>& gens) {
  ModuleLayout layout;
  layout.degrees = top_degrees;
  layout.degrees.insert(layout.degrees.end(), tag_degrees.begin(), tag_degrees.end());
  layout.blocks.assign(top_degrees.size(), 0);
  layout.blocks.resize(layout.degrees.size(), 1);
  const int top = static_cast<int>(top_degrees.size());
  const int tag = static_cast<int>(tag_degrees.size());
  ModuleOrder ord{TermOrder::grevlex(), std::move(layout)};

  std::vector<SparseVector<F>> vecs;
  for (const auto& [t, g] : gens) {
    Column<F> joined = t;
    joined.insert(joined.end(), g.begin(), g.end());
    vecs.push_back(to_sparse(joined, ord));
  }
  auto gb = liaison::groebner_basis(ring->field(), std::move(vecs), ord);
  std::vector<Column<F>> out;
  for (const auto& v : gb)
    if (v.front().comp >= top) out.push_back(to_column(ring, v, tag, top));
  return out;
}

/// A minimal homogeneous generating set of the submodule generated by the
/// given columns (degree by degree, dropping members of the span so far).
template <CoefficientField F>
std::vector<Column<F>> minimal_generators(const RingPtr<F>& ring, const std::vector<int>& degrees,
                                          std::vector<Column<F>> columns) {
  std::vector<std::pair<int, Column<F>>> keyed;
  for (auto& c : columns)
    if (auto d = column_degree(c, degrees)) keyed.emplace_back(*d, std::move(c));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Column<F>> kept;
  std::optional<Submodule<F>> span;
  for (auto& [d, c] : keyed) {
    if (span && span->contains(c)) continue;
    kept.push_back(std::move(c));
    span.emplace(ring, degrees, kept);
  }
  return kept;
}

/// Generators of the kernel of a graded map (syzygies of its columns).
template <CoefficientField F>
GradedMap<F> syzygies(const GradedMap<F>& m, bool minimize = true) {
  const int n = m.cols();
  std::vector<std::pair<Column<F>, Column<F>>> gens;
  for (int j = 0; j < n; ++j) {
    Column<F> tag = zero_column(m.ring, n);
    tag[j] = Polynomial<F>::one(m.ring);
    gens.emplace_back(m.columns[j], std::move(tag));
  }
  auto kernel = kernel_projection(m.ring, m.target_degrees, m.source_degrees, gens);
  if (minimize) kernel = minimal_generators(m.ring, m.source_degrees, std::move(kernel));
  GradedMap<F> s{m.ring, m.source_degrees, {}, {}};
  for (auto& c : kernel) {
    s.source_degrees.push_back(*column_degree(c, m.source_degrees));
    s.columns.push_back(std::move(c));
  }
  return s;
}

}  // namespace liaison
