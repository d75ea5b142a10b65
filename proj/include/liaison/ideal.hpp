#pragma once

// Homogeneous ideals and the ideal-theoretic calculus on them: Groebner
// bases, membership, quotients, intersections, saturation, Hilbert data.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liaison/module.hpp"

namespace liaison {

template <CoefficientField F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal() = default;
  Ideal(RingPtr<F> ring, std::vector<Poly> generators)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (g.is_zero()) continue;
      if (g.ring() != ring_ && !(*g.ring() == *ring_))
        fail(ErrorKind::RingMismatch, "generator from another ring");
      if (!g.is_homogeneous())
        fail(ErrorKind::NotHomogeneous, "generator " + g.to_string() + " is not homogeneous");
      gens_.push_back(std::move(g));
    }
  }
  explicit Ideal(RingPtr<F> ring) : Ideal(std::move(ring), {}) {}

  static Ideal unit(RingPtr<F> ring) {
    auto one = Poly::one(ring);
    return Ideal(std::move(ring), {one});
  }
  /// The irrelevant ideal (x0, ..., x_{n}).
  static Ideal irrelevant(RingPtr<F> ring) {
    std::vector<Poly> vars;
    for (int i = 0; i < ring->nvars(); ++i) vars.push_back(Poly::variable(ring, i));
    return Ideal(std::move(ring), std::move(vars));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  int nvars() const { return ring_->nvars(); }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced Groebner basis (monic, sorted by ascending leading term).
  const std::vector<Poly>& groebner_basis(const TermOrder& ord = TermOrder::grevlex()) const {
    std::lock_guard lock(cache_->mu);
    auto key = ord.name();
    auto it = cache_->gb.find(key);
    if (it != cache_->gb.end()) return it->second;
    ModuleOrder mord{ord, ModuleLayout::ideal()};
    std::vector<SparseVector<F>> vecs;
    for (const auto& g : gens_) vecs.push_back(to_sparse(g, 0, mord));
    auto basis = liaison::groebner_basis(field(), std::move(vecs), mord);
    std::vector<Poly> out;
    for (const auto& v : basis) out.push_back(to_polynomial(ring_, v));
    return cache_->gb.emplace(key, std::move(out)).first->second;
  }

  Poly normal_form(const Poly& p, const TermOrder& ord = TermOrder::grevlex()) const {
    ModuleOrder mord{ord, ModuleLayout::ideal()};
    std::vector<SparseVector<F>> basis;
    for (const auto& g : groebner_basis(ord)) basis.push_back(to_sparse(g, 0, mord));
    return to_polynomial(ring_, reduce(field(), to_sparse(p, 0, mord), basis, mord, true));
  }

  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }
  bool contains(const Ideal& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().is_constant();
  }

  /// Hilbert data of S/I.
  const HilbertData& hilbert_data() const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->hilbert) {
      std::vector<Monomial> leads;
      for (const auto& g : groebner_basis()) leads.push_back(g.terms().front().mono);
      detail::MonomialSeries series;
      cache_->hilbert = HilbertData::from_numerator(series.numerator(leads), nvars());
    }
    return *cache_->hilbert;
  }

  int krull_dimension() const { return hilbert_data().krull_dimension; }
  /// Codimension in S; nvars + 1 for the unit ideal.
  int codimension() const { return nvars() - krull_dimension(); }

  /// dim_k I_d.
  long dimension_in_degree(int d) const {
    mpz_class total = detail::binomial(d + nvars() - 1, nvars() - 1);
    mpz_class dim = total - hilbert_data().function(d);
    return dim.get_si();
  }

  /// Echelon basis {m - NF(m)} of I_d indexed by the leading monomials of
  /// degree d, in descending grevlex order of those monomials.
  std::vector<Poly> graded_piece_basis(int d) const {
    std::vector<Poly> out;
    const auto& gb = groebner_basis();
    for (const auto& m : monomials_of_degree(nvars(), d)) {
      bool leading = false;
      for (const auto& g : gb)
        if (g.terms().front().mono.divides(m)) {
          leading = true;
          break;
        }
      if (!leading) continue;
      auto mono = Poly::term(ring_, m, field().one());
      out.push_back(mono - normal_form(mono));
    }
    return out;
  }

  /// Saturation with respect to the irrelevant ideal, cached.
  const Ideal& saturation() const;

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    auto gens = a.gens_;
    gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(a.ring_, std::move(gens));
  }
  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    std::vector<Poly> gens;
    for (const auto& f : a.gens_)
      for (const auto& g : b.gens_) gens.push_back(f * g);
    return Ideal(a.ring_, std::move(gens));
  }
  Ideal power(int k) const {
    Ideal r = unit(ring_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  Ideal with(const std::vector<Poly>& extra) const {
    auto gens = gens_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal(ring_, std::move(gens));
  }

  /// Equality as ideals (identical reduced grevlex bases).
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.groebner_basis() == b.groebner_basis();
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
    os << ")";
    return os.str();
  }

 private:
  struct Cache {
    std::recursive_mutex mu;
    std::map<std::string, std::vector<Poly>> gb;
    std::optional<HilbertData> hilbert;
    std::shared_ptr<const Ideal> saturation;
  };

  RingPtr<F> ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// I : (f).
template <CoefficientField F>
Ideal<F> quotient(const Ideal<F>& ideal, const Polynomial<F>& f) {
  const auto& ring = ideal.ring();
  if (f.is_zero() || ideal.contains(f)) return Ideal<F>::unit(ring);
  if (ideal.is_zero()) return ideal;
  std::vector<std::pair<Column<F>, Column<F>>> gens;
  gens.emplace_back(Column<F>{f}, Column<F>{Polynomial<F>::one(ring)});
  for (const auto& g : ideal.groebner_basis())
    gens.emplace_back(Column<F>{g}, Column<F>{Polynomial<F>(ring)});
  auto tags = kernel_projection(ring, {0}, {f.degree()}, gens);
  std::vector<Polynomial<F>> out;
  for (auto& t : tags) out.push_back(std::move(t[0]));
  return Ideal<F>(ring, std::move(out));
}

template <CoefficientField F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  const auto& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<F>(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<std::pair<Column<F>, Column<F>>> gens;
  for (const auto& g : a.groebner_basis()) gens.emplace_back(Column<F>{g}, Column<F>{g});
  for (const auto& h : b.groebner_basis()) gens.emplace_back(Column<F>{h}, Column<F>{Polynomial<F>(ring)});
  auto tags = kernel_projection(ring, {0}, {0}, gens);
  std::vector<Polynomial<F>> out;
  for (auto& t : tags) out.push_back(std::move(t[0]));
  return Ideal<F>(ring, std::move(out));
}

/// I : J, intersecting the quotients by the generators of J. The quotient by
/// the zero ideal is the unit ideal.
template <CoefficientField F>
Ideal<F> ideal_quotient(const Ideal<F>& i, const Ideal<F>& j) {
  Ideal<F> result = Ideal<F>::unit(i.ring());
  for (const auto& g : j.groebner_basis()) {
    result = intersect(result, quotient(i, g));
  }
  return result;
}

namespace detail {

/// I : x_v^k (k < 0 means saturation), using that x_last divides a grevlex
/// leading term of a homogeneous element exactly when it divides the element.
template <CoefficientField F>
Ideal<F> colon_by_variable(const Ideal<F>& ideal, int v, int k) {
  const auto& ring = ideal.ring();
  const int last = ring->nvars() - 1;
  std::vector<Polynomial<F>> swapped;
  for (const auto& g : ideal.generators()) swapped.push_back(g.swap_variables(v, last));
  Ideal<F> s(ring, std::move(swapped));
  std::vector<Polynomial<F>> out;
  for (const auto& g : s.groebner_basis()) {
    int common = kMaxExponent;
    for (const auto& t : g.terms()) common = std::min(common, t.mono[last]);
    int strip = k < 0 ? common : std::min(common, k);
    Polynomial<F> h = g;
    if (strip > 0) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (const auto& t : g.terms()) {
        Monomial m = t.mono;
        m.set(last, m[last] - strip);
        terms.push_back({m, t.coeff});
      }
      h = Polynomial<F>::from_terms(ring, std::move(terms));
    }
    out.push_back(h.swap_variables(v, last));
  }
  return Ideal<F>(ring, std::move(out));
}

}  // namespace detail

/// Saturation I : m^infinity with m the irrelevant ideal, computed as the
/// intersection over the variables of I : x_i^infinity.
template <CoefficientField F>
Ideal<F> saturate(const Ideal<F>& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  std::vector<Ideal<F>> parts;
  bool changed = false;
  for (int v = 0; v < ideal.nvars(); ++v) {
    parts.push_back(detail::colon_by_variable(ideal, v, -1));
    if (!(parts.back() == ideal)) changed = true;
  }
  if (!changed) return ideal;
  Ideal<F> result = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) result = intersect(result, parts[k]);
  return Ideal<F>(ideal.ring(), result.groebner_basis());
}

inline constexpr int kSaturationBound = 50;

/// I : J^infinity by iterated quotients; errors after kSaturationBound steps.
template <CoefficientField F>
Ideal<F> saturate(const Ideal<F>& ideal, const Ideal<F>& j) {
  Ideal<F> current = ideal;
  for (int step = 0; step < kSaturationBound; ++step) {
    Ideal<F> next = ideal_quotient(current, j);
    if (next == current) return current;
    current = next;
  }
  fail(ErrorKind::SaturationDiverged, "saturation did not stabilize");
}

template <CoefficientField F>
const Ideal<F>& Ideal<F>::saturation() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->saturation) cache_->saturation = std::make_shared<const Ideal>(saturate(*this));
  return *cache_->saturation;
}

template <CoefficientField F>
bool is_saturated(const Ideal<F>& ideal) {
  return ideal.saturation() == ideal;
}

template <CoefficientField F>
const HilbertData& hilbert_data(const Ideal<F>& ideal) {
  return ideal.hilbert_data();
}

struct DimensionDegree {
  int dimension;  // of the projective scheme
  long degree;
  friend bool operator==(const DimensionDegree&, const DimensionDegree&) = default;
};

template <CoefficientField F>
DimensionDegree dimension_degree(const Ideal<F>& ideal) {
  const auto& h = ideal.hilbert_data();
  if (h.empty_scheme()) fail(ErrorKind::EmptyScheme, "ideal defines the empty scheme");
  return {h.projective_dimension(), h.degree.get_si()};
}

/// 1 - P(0) for a curve.
template <CoefficientField F>
long arithmetic_genus(const Ideal<F>& ideal) {
  const auto& h = ideal.hilbert_data();
  if (h.empty_scheme()) fail(ErrorKind::EmptyScheme, "ideal defines the empty scheme");
  if (h.projective_dimension() != 1)
    fail(ErrorKind::NotCurve, "scheme has dimension " + std::to_string(h.projective_dimension()));
  mpq_class p0 = h.polynomial(0);
  mpq_class pa = 1 - p0;
  return pa.get_num().get_si();
}

/// Whether V(ambient + (f1, f2)) has codimension two more than V(ambient).
template <CoefficientField F>
bool is_regular_pair(const Polynomial<F>& f1, const Polynomial<F>& f2, const Ideal<F>& ambient) {
  if (f1.is_zero() || f2.is_zero() || !f1.is_homogeneous() || !f2.is_homogeneous()) return false;
  Ideal<F> z = ambient.with({f1, f2});
  return z.codimension() == ambient.codimension() + 2;
}

template <CoefficientField F>
bool ideal_equal_as_schemes(const Ideal<F>& a, const Ideal<F>& b) {
  return a.saturation() == b.saturation();
}

}  // namespace liaison
