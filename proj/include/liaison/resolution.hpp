#pragma once

// Graded free resolutions, Ext modules over the ambient polynomial ring,
// canonical modules, annihilators, hulls, and the subcanonical test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/ideal.hpp"
#include "liaison/linalg.hpp"

namespace liaison {

/// maps[i] : F_{i+1} -> F_i, with F_0 = S and coker(maps[0]) = S/I.
template <CoefficientField F>
struct FreeResolution {
  RingPtr<F> ring;
  std::vector<GradedMap<F>> maps;
  bool minimal = true;
  bool truncated = false;

  int length() const { return static_cast<int>(maps.size()); }
  int rank(int i) const {
    if (i == 0) return 1;
    if (i > length()) return 0;
    return maps[i - 1].cols();
  }
  std::vector<int> betti() const {
    std::vector<int> b;
    for (int i = 0; i <= length(); ++i) b.push_back(rank(i));
    return b;
  }
  /// Degrees of the basis of F_i.
  std::vector<int> degrees(int i) const {
    if (i == 0) return {0};
    if (i > length()) return {};
    return maps[i - 1].source_degrees;
  }
};

template <CoefficientField F>
std::vector<Polynomial<F>> minimal_ideal_generators(const Ideal<F>& ideal) {
  std::vector<Column<F>> cols;
  for (const auto& g : ideal.groebner_basis()) cols.push_back({g});
  std::vector<Polynomial<F>> out;
  for (auto& c : minimal_generators(ideal.ring(), {0}, std::move(cols))) out.push_back(std::move(c[0]));
  return out;
}

template <CoefficientField F>
FreeResolution<F> minimal_resolution(const Ideal<F>& ideal, int max_length = -1) {
  const auto& ring = ideal.ring();
  if (max_length < 0) max_length = ring->nvars() + 1;
  FreeResolution<F> res{ring, {}, true, false};
  if (ideal.is_zero()) return res;
  if (ideal.is_unit()) {
    res.maps.push_back(GradedMap<F>::from_polynomials(ring, {Polynomial<F>::one(ring)}));
    res.minimal = false;
    return res;
  }
  res.maps.push_back(GradedMap<F>::from_polynomials(ring, minimal_ideal_generators(ideal)));
  while (true) {
    auto next = syzygies(res.maps.back());
    if (next.cols() == 0) break;
    if (res.length() >= max_length) {
      res.truncated = true;
      break;
    }
    res.maps.push_back(std::move(next));
  }
  return res;
}

/// Cokernel of a graded map: target / image.
template <CoefficientField F>
class GradedModulePresentation {
 public:
  GradedModulePresentation() = default;
  explicit GradedModulePresentation(GradedMap<F> presentation)
      : map_(std::move(presentation)),
        sub_(std::make_shared<Submodule<F>>(map_.ring, map_.target_degrees, map_.columns)) {}

  const GradedMap<F>& presentation() const { return map_; }
  const RingPtr<F>& ring() const { return map_.ring; }
  int num_generators() const { return map_.rows(); }
  const std::vector<int>& generator_degrees() const { return map_.target_degrees; }
  bool is_zero() const { return num_generators() == 0 || sub_->quotient_hilbert_data().is_zero_module(); }
  const Submodule<F>& relations() const { return *sub_; }

  std::optional<int> max_generator_degree() const {
    if (map_.target_degrees.empty()) return std::nullopt;
    return *std::max_element(map_.target_degrees.begin(), map_.target_degrees.end());
  }
  std::optional<int> min_generator_degree() const {
    if (map_.target_degrees.empty()) return std::nullopt;
    return *std::min_element(map_.target_degrees.begin(), map_.target_degrees.end());
  }

  const HilbertData& hilbert_data() const { return sub_->quotient_hilbert_data(); }

  long dimension_in_degree(int d) const {
    if (num_generators() == 0) return 0;
    return hilbert_data().function(d).get_si();
  }

  /// Standard monomial basis of M_d.
  std::vector<std::pair<Monomial, int>> basis(int d) const {
    if (num_generators() == 0) return {};
    return sub_->standard_monomials(d);
  }

  /// Coordinates of the class of a homogeneous column of degree d in basis(d).
  DenseRow<F> coordinates(const Column<F>& v, const std::vector<std::pair<Monomial, int>>& basis) const {
    const auto& field = ring()->field();
    DenseRow<F> row(basis.size(), field.zero());
    auto nf = sub_->normal_form(v);
    for (const auto& t : nf) {
      auto it = std::find_if(basis.begin(), basis.end(),
                             [&](const auto& b) { return b.second == t.comp && b.first == t.mono; });
      internal_check(it != basis.end(), "normal form term outside the standard basis");
      row[it - basis.begin()] = t.coeff;
    }
    return row;
  }

  /// M(k): the same module with degrees lowered by k.
  GradedModulePresentation shifted(int k) const {
    GradedMap<F> m = map_;
    for (auto& d : m.target_degrees) d -= k;
    for (auto& d : m.source_degrees) d -= k;
    return GradedModulePresentation(std::move(m));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "coker on generators of degrees [";
    for (int i = 0; i < num_generators(); ++i) os << (i ? ", " : "") << map_.target_degrees[i];
    os << "]\n" << map_.to_string();
    return os.str();
  }

 private:
  GradedMap<F> map_;
  std::shared_ptr<Submodule<F>> sub_;
};

/// Removes generators killed by relations with a unit entry until the
/// presentation is minimal; also drops zero relations.
template <CoefficientField F>
GradedMap<F> minimize_presentation(GradedMap<F> m) {
  const auto& field = m.ring->field();
  while (true) {
    int pivot_col = -1, pivot_row = -1;
    for (int j = 0; j < m.cols() && pivot_col < 0; ++j)
      for (int i = 0; i < m.rows(); ++i) {
        const auto& e = m.entry(i, j);
        if (!e.is_zero() && e.is_constant()) {
          pivot_col = j;
          pivot_row = i;
          break;
        }
      }
    if (pivot_col < 0) break;
    const Column<F> r = m.columns[pivot_col];
    auto u_inv = field.inv(r[pivot_row].terms().front().coeff);
    GradedMap<F> next{m.ring, {}, {}, {}};
    for (int i = 0; i < m.rows(); ++i)
      if (i != pivot_row) next.target_degrees.push_back(m.target_degrees[i]);
    for (int j = 0; j < m.cols(); ++j) {
      if (j == pivot_col) continue;
      Column<F> c = m.columns[j];
      if (!c[pivot_row].is_zero()) {
        auto factor = c[pivot_row].scaled(u_inv);
        for (int i = 0; i < m.rows(); ++i)
          if (!r[i].is_zero()) c[i] -= factor * r[i];
      }
      c.erase(c.begin() + pivot_row);
      next.source_degrees.push_back(m.source_degrees[j]);
      next.columns.push_back(std::move(c));
    }
    m = std::move(next);
  }
  GradedMap<F> out{m.ring, m.target_degrees, {}, {}};
  for (int j = 0; j < m.cols(); ++j)
    if (!is_zero_column(m.columns[j])) {
      out.source_degrees.push_back(m.source_degrees[j]);
      out.columns.push_back(m.columns[j]);
    }
  return out;
}

/// Presentation of ker / im where both are given by generating columns in
/// the same free module.
template <CoefficientField F>
GradedModulePresentation<F> subquotient(const RingPtr<F>& ring, const std::vector<int>& ambient_degrees,
                                        const GradedMap<F>& kernel, const std::vector<Column<F>>& image) {
  const int r = kernel.cols();
  GradedMap<F> joined{ring, ambient_degrees, kernel.source_degrees, kernel.columns};
  for (const auto& c : image) {
    auto d = column_degree(c, ambient_degrees);
    if (!d) continue;
    joined.source_degrees.push_back(*d);
    joined.columns.push_back(c);
  }
  auto syz = syzygies(joined, false);
  GradedMap<F> pres{ring, kernel.source_degrees, {}, {}};
  for (std::size_t j = 0; j < syz.columns.size(); ++j) {
    Column<F> c(syz.columns[j].begin(), syz.columns[j].begin() + r);
    if (is_zero_column(c)) continue;
    pres.source_degrees.push_back(syz.source_degrees[j]);
    pres.columns.push_back(std::move(c));
  }
  return GradedModulePresentation<F>(minimize_presentation(std::move(pres)));
}

template <CoefficientField F>
GradedModulePresentation<F> ext_module(const FreeResolution<F>& res, int c) {
  const auto& ring = res.ring;
  if (c < 0 || c > ring->nvars()) fail(ErrorKind::OutOfRange, "Ext index out of range");
  internal_check(!res.truncated || c < res.length(), "resolution too short for the requested Ext");
  if (c > res.length()) return GradedModulePresentation<F>(GradedMap<F>{ring, {}, {}, {}});
  std::vector<int> dual_degrees;
  for (int d : res.degrees(c)) dual_degrees.push_back(-d);
  // kernel of F_c^* -> F_{c+1}^*
  GradedMap<F> kernel;
  if (c < res.length()) {
    kernel = syzygies(res.maps[c].dual());
  } else {
    kernel = GradedMap<F>{ring, dual_degrees, dual_degrees, {}};
    for (int i = 0; i < static_cast<int>(dual_degrees.size()); ++i) {
      Column<F> e = zero_column(ring, static_cast<int>(dual_degrees.size()));
      e[i] = Polynomial<F>::one(ring);
      kernel.columns.push_back(std::move(e));
    }
  }
  // image of F_{c-1}^* -> F_c^*
  std::vector<Column<F>> image;
  if (c >= 1) image = res.maps[c - 1].dual().columns;
  return subquotient(ring, dual_degrees, kernel, image);
}

/// Ext^c(S/I, S) as a graded module.
template <CoefficientField F>
GradedModulePresentation<F> ext_module(const Ideal<F>& ideal, int c) {
  if (c < 0 || c > ideal.nvars()) fail(ErrorKind::OutOfRange, "Ext index out of range");
  return ext_module(minimal_resolution(ideal, c + 1), c);
}

/// K_X = Ext^c(S/I, S)(-n-1) with c the codimension of I.
template <CoefficientField F>
GradedModulePresentation<F> canonical_module(const FreeResolution<F>& res, int codim, int n) {
  return ext_module(res, codim).shifted(-(n + 1));
}

template <CoefficientField F>
GradedModulePresentation<F> canonical_module(const Ideal<F>& ideal, int n = -1) {
  if (n < 0) n = ideal.nvars() - 1;
  if (ideal.hilbert_data().empty_scheme()) fail(ErrorKind::EmptyScheme, "canonical module of the empty scheme");
  return canonical_module(minimal_resolution(ideal), ideal.codimension(), n);
}

/// Ann(M) as the intersection of (im : e_i) over the generators of M.
template <CoefficientField F>
Ideal<F> annihilator(const GradedModulePresentation<F>& m) {
  const auto& ring = m.ring();
  const auto& pres = m.presentation();
  const int r = pres.rows();
  Ideal<F> result = Ideal<F>::unit(ring);
  for (int i = 0; i < r; ++i) {
    std::vector<std::pair<Column<F>, Column<F>>> gens;
    for (const auto& c : pres.columns) gens.emplace_back(c, Column<F>{Polynomial<F>(ring)});
    Column<F> e = zero_column(ring, r);
    e[i] = Polynomial<F>::one(ring);
    gens.emplace_back(std::move(e), Column<F>{Polynomial<F>::one(ring)});
    auto tags = kernel_projection(ring, pres.target_degrees, {pres.target_degrees[i]}, gens);
    std::vector<Polynomial<F>> polys;
    for (auto& t : tags) polys.push_back(std::move(t[0]));
    result = intersect(result, Ideal<F>(ring, std::move(polys)));
    if (result.is_zero()) break;
  }
  return Ideal<F>(ring, result.groebner_basis());
}

template <CoefficientField F>
Ideal<F> equidimensional_hull(const Ideal<F>& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  return annihilator(ext_module(ideal, ideal.codimension()));
}

enum class CMStatus { ACM, LocallyCMNotACM, NotCM, Unknown };

inline const char* to_string(CMStatus s) {
  switch (s) {
    case CMStatus::ACM: return "ACM";
    case CMStatus::LocallyCMNotACM: return "LocallyCM_not_ACM";
    case CMStatus::NotCM: return "NotCM";
    case CMStatus::Unknown: return "Unknown";
  }
  return "?";
}

template <CoefficientField F>
CMStatus cm_status(const Ideal<F>& ideal, const FreeResolution<F>& res) {
  if (!is_saturated(ideal)) fail(ErrorKind::NotSaturated, "cm_status needs a saturated ideal");
  if (ideal.hilbert_data().empty_scheme()) fail(ErrorKind::EmptyScheme, "ideal defines the empty scheme");
  if (res.length() == ideal.codimension()) return CMStatus::ACM;
  bool unmixed = annihilator(ext_module(res, ideal.codimension())) == ideal;
  if (!unmixed) return CMStatus::NotCM;
  return ideal.hilbert_data().projective_dimension() == 1 ? CMStatus::LocallyCMNotACM : CMStatus::Unknown;
}

template <CoefficientField F>
CMStatus cm_status(const Ideal<F>& ideal) {
  return cm_status(ideal, minimal_resolution(ideal));
}

enum class Verdict { Yes, No, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

enum class SearchMode { None, Exhaustive, Sampled };

inline const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::None: return "none";
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::Sampled: return "sampled";
  }
  return "?";
}

struct SubcanonicalReport {
  Verdict verdict = Verdict::No;
  std::optional<int> twist_a;
  std::optional<int> alpha_relative;
  std::optional<std::string> witness;
  int window_low = 0;
  int truncation_bound = 0;
  SearchMode search = SearchMode::None;
  std::string reason;

  bool is_subcanonical() const { return verdict == Verdict::Yes; }
};

inline constexpr int kEnumerationDimension = 12;
inline constexpr long kEnumerationCap = 4096;
inline constexpr int kRandomTrials = 20;

namespace detail {

/// Small-integer random element of the field.
template <CoefficientField F>
typename F::Element random_coefficient(const F& field, std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  return field.from_int(dist(rng));
}

/// Projective enumeration of F_p^dim in lexicographic order of coefficient
/// vectors with first nonzero entry 1; calls visit until it returns true.
template <typename Visit>
bool enumerate_projective(std::uint32_t p, int dim, long cap, Visit&& visit) {
  long seen = 0;
  for (int lead = dim - 1; lead >= 0; --lead) {
    // vectors (0, ..., 0, 1, *, ..., *) with the 1 at position lead
    const int free = dim - 1 - lead;
    std::vector<std::uint32_t> tail(free, 0);
    while (true) {
      std::vector<std::uint32_t> v(dim, 0);
      v[lead] = 1;
      for (int k = 0; k < free; ++k) v[lead + 1 + k] = tail[k];
      if (++seen > cap) return false;
      if (visit(v)) return true;
      int k = free - 1;
      while (k >= 0 && ++tail[k] == p) tail[k--] = 0;
      if (k < 0) break;
    }
  }
  return false;
}

inline long projective_count(std::uint32_t p, int dim) {
  long total = 0, power = 1;
  for (int i = 0; i < dim; ++i) {
    total += power;
    if (power > (1L << 40)) return -1;
    power *= p;
  }
  return total;
}

}  // namespace detail

/// Sum of ambient degrees minus n + 1: the twist of the ambient dualizing sheaf.
inline int ambient_canonical_twist(const std::vector<int>& ambient_degrees, int n) {
  return std::accumulate(ambient_degrees.begin(), ambient_degrees.end(), 0) - n - 1;
}

/// Decides whether omega_X = O_X(a) for a (necessarily unique) integer a.
template <CoefficientField F>
SubcanonicalReport subcanonical_twist(const Ideal<F>& ideal, const std::vector<int>& ambient_degrees, int n,
                                      std::uint64_t seed = 0) {
  const auto& ring = ideal.ring();
  const auto& field = ring->field();
  auto res = minimal_resolution(ideal);
  auto status = cm_status(ideal, res);
  if (status == CMStatus::Unknown) fail(ErrorKind::UnknownCMStatus, "CM status unknown; subcanonical test refused");
  if (status == CMStatus::NotCM) fail(ErrorKind::NotCM, "scheme is not Cohen-Macaulay");

  SubcanonicalReport report;
  const auto& h = ideal.hilbert_data();
  auto k = canonical_module(res, ideal.codimension(), n);
  const auto& hk = k.hilbert_data();
  const int dim = h.projective_dimension();

  // candidate a from P_K(d) = P_X(d + a)
  const auto& p = h.hilbert_polynomial.coeffs;
  const auto& q = hk.hilbert_polynomial.coeffs;
  mpq_class a_q = 0;
  if (dim >= 1) {
    if (static_cast<int>(q.size()) != dim + 1) {
      report.reason = "canonical module has the wrong Hilbert polynomial degree";
      return report;
    }
    a_q = (q[dim - 1] - p[dim - 1]) / (mpq_class(dim) * p[dim]);
  }
  a_q.canonicalize();
  if (a_q.get_den() != 1) {
    report.reason = "candidate twist " + a_q.get_str() + " is not an integer";
    return report;
  }
  const int a = static_cast<int>(a_q.get_num().get_si());
  for (int d = -2; d <= dim + 2; ++d)
    if (hk.polynomial(d) != h.polynomial(d + a)) {
      report.reason = "Hilbert polynomial of K_X is not a shift of that of O_X";
      return report;
    }
  report.twist_a = a;
  report.alpha_relative = a - ambient_canonical_twist(ambient_degrees, n);

  // certificate window in K-degrees
  int low = *k.max_generator_degree();
  low = std::max(low, h.index_of_stability - a);
  low = std::max(low, hk.index_of_stability);
  low = std::max(low, -a);
  report.window_low = low;
  report.truncation_bound = low + n + 2;

  auto basis = k.basis(-a);
  if (basis.empty()) {
    report.reason = "K_X vanishes in degree " + std::to_string(-a);
    return report;
  }
  const int bdim = static_cast<int>(basis.size());
  const int rank = k.num_generators();

  std::vector<std::vector<std::pair<Monomial, int>>> window_bases;
  std::vector<std::vector<Monomial>> window_monomials;
  for (int t = low; t <= report.truncation_bound; ++t) {
    window_bases.push_back(k.basis(t));
    window_monomials.push_back(monomials_of_degree(ring->nvars(), t + a));
  }

  auto build = [&](const std::vector<typename F::Element>& coeffs) {
    Column<F> kappa = zero_column(ring, rank);
    for (int i = 0; i < bdim; ++i)
      if (!field.is_zero(coeffs[i]))
        kappa[basis[i].second] += Polynomial<F>::term(ring, basis[i].first, coeffs[i]);
    return kappa;
  };
  auto certifies = [&](const Column<F>& kappa) {
    for (std::size_t w = 0; w < window_bases.size(); ++w) {
      const auto& target = window_bases[w];
      if (target.empty()) continue;
      std::vector<DenseRow<F>> rows;
      for (const auto& m : window_monomials[w]) {
        Column<F> prod = kappa;
        for (auto& e : prod) e = e.times_monomial(m);
        rows.push_back(k.coordinates(prod, target));
      }
      if (liaison::rank(field, std::move(rows)) != static_cast<int>(target.size())) return false;
    }
    return true;
  };
  auto describe = [&](const Column<F>& kappa) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rank; ++i) os << (i ? ", " : "") << kappa[i].to_string();
    os << "]";
    return os.str();
  };

  std::optional<Column<F>> found;
  bool exhausted = false;
  if constexpr (std::is_same_v<F, PrimeField>) {
    long count = detail::projective_count(field.characteristic(), bdim);
    if (bdim <= kEnumerationDimension && count > 0) {
      report.search = SearchMode::Exhaustive;
      bool hit = detail::enumerate_projective(field.characteristic(), bdim, kEnumerationCap, [&](const auto& v) {
        std::vector<typename F::Element> coeffs(v.begin(), v.end());
        auto kappa = build(coeffs);
        if (certifies(kappa)) {
          found = kappa;
          return true;
        }
        return false;
      });
      exhausted = !hit && count <= kEnumerationCap;
    }
  }
  if (!found && !exhausted) {
    report.search = SearchMode::Sampled;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < kRandomTrials && !found; ++trial) {
      std::vector<typename F::Element> coeffs(bdim);
      for (auto& c : coeffs) c = detail::random_coefficient(field, rng);
      auto kappa = build(coeffs);
      if (is_zero_column(kappa)) continue;
      if (certifies(kappa)) found = kappa;
    }
  }
  if (found) {
    report.verdict = Verdict::Yes;
    report.witness = describe(*found);
  } else if (exhausted) {
    report.verdict = Verdict::No;
    report.reason = "no element of K_X in degree " + std::to_string(-a) + " generates it in high degree";
  } else {
    report.verdict = Verdict::Inconclusive;
    report.reason = "no witness found among sampled elements";
  }
  return report;
}

}  // namespace liaison
