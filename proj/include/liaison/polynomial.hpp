#pragma once

// Graded polynomial rings k[x0..x_{n}] and their elements.

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/field.hpp"
#include "liaison/monomial.hpp"

namespace liaison {

template <CoefficientField F>
class Ring {
 public:
  Ring(F field, std::vector<std::string> variables)
      : field_(std::move(field)), variables_(std::move(variables)) {
    if (variables_.size() > static_cast<std::size_t>(kMaxVariables))
      fail(ErrorKind::OutOfRange, "at most " + std::to_string(kMaxVariables) + " variables");
  }

  const F& field() const { return field_; }
  int nvars() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(int i) const { return variables_.at(i); }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    return it == variables_.end() ? -1 : static_cast<int>(it - variables_.begin());
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.variables_ == b.variables_;
  }

 private:
  F field_;
  std::vector<std::string> variables_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> variables) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(variables));
}

/// Ring k[x0, ..., x_{nvars-1}].
template <CoefficientField F>
RingPtr<F> projective_ring(F field, int nvars, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(field), std::move(names));
}

/// Returned by is_homogeneous for the zero polynomial.
inline constexpr int kEveryDegree = std::numeric_limits<int>::min();

template <CoefficientField F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial mono;
    Element coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Element& c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial one(RingPtr<F> ring) {
    auto c = ring->field().one();
    return constant(std::move(ring), c);
  }
  static Polynomial term(RingPtr<F> ring, const Monomial& m, const Element& c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, int i) {
    auto c = ring->field().one();
    return term(std::move(ring), Monomial::variable(i), c);
  }
  /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Common total degree of all terms, kEveryDegree for zero, nullopt otherwise.
  std::optional<int> is_homogeneous() const {
    if (terms_.empty()) return kEveryDegree;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return std::nullopt;
    return d;
  }

  /// Maximal term under ord.
  const Term& leading_term(const TermOrder& ord = TermOrder::grevlex()) const {
    if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading term of zero polynomial");
    if (ord == TermOrder::grevlex()) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
      if (ord.compare(t.mono, best->mono) > 0) best = &t;
    return *best;
  }

  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return field().zero();
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    return combine(p, q, false);
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return combine(p, q, true);
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    check_same_ring(p, q);
    const F& f = p.field();
    std::vector<Term> out;
    out.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
      for (const auto& b : q.terms_) out.push_back({a.mono * b.mono, f.mul(a.coeff, b.coeff)});
    return from_terms(p.ring_, std::move(out));
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial scaled(const Element& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto v = field().mul(t.coeff, c);
      if (!field().is_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
    }
    return r;
  }
  /// Multiplication by a monomial keeps the term order.
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
    return r;
  }

  Polynomial pow(int e) const {
    Polynomial result = one(ring_), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      if (e > 1) base *= base;
    }
    return result;
  }

  /// Scaled so that the grevlex-leading coefficient is 1.
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(field().inv(terms_.front().coeff));
  }

  /// Image under the variable swap x_i <-> x_j.
  Polynomial swap_variables(int i, int j) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono.swapped(i, j), t.coeff});
    return from_terms(ring_, std::move(out));
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (!(p.terms_[i].mono == q.terms_[i].mono) ||
          !p.field().equal(p.terms_[i].coeff, q.terms_[i].coeff))
        return false;
    return true;
  }

  /// Canonical text form, e.g. "x0^2*x3 - 3*x1*x2^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const F& f = field();
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = f.is_negative(t.coeff);
      Element mag = neg ? f.neg(t.coeff) : t.coeff;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::string mono = monomial_string(t.mono);
      if (mono.empty()) {
        os << f.to_string(mag);
      } else {
        if (!f.is_one(mag)) os << f.to_string(mag) << "*";
        os << mono;
      }
    }
    return os.str();
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->variable(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  static void check_same_ring(const Polynomial& p, const Polynomial& q) {
    if (p.ring_ == q.ring_) return;
    if (!p.ring_ || !q.ring_ || !(*p.ring_ == *q.ring_))
      fail(ErrorKind::RingMismatch, "operands live in different rings");
  }

 private:
  static Polynomial combine(const Polynomial& p, const Polynomial& q, bool subtract) {
    check_same_ring(p, q);
    const F& f = p.field();
    TermOrder ord;
    Polynomial r(p.ring_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() || j < q.terms_.size()) {
      int c = i == p.terms_.size()   ? -1
              : j == q.terms_.size() ? 1
                                     : ord.compare(p.terms_[i].mono, q.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(p.terms_[i++]);
      } else if (c < 0) {
        const auto& t = q.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? f.neg(t.coeff) : t.coeff});
      } else {
        auto v = subtract ? f.sub(p.terms_[i].coeff, q.terms_[j].coeff)
                          : f.add(p.terms_[i].coeff, q.terms_[j].coeff);
        if (!f.is_zero(v)) r.terms_.push_back({p.terms_[i].mono, std::move(v)});
        ++i, ++j;
      }
    }
    return r;
  }

  void normalize() {
    TermOrder ord;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono)
        merged.back().coeff = field().add(merged.back().coeff, t.coeff);
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [&](const Term& t) { return field().is_zero(t.coeff); });
    terms_ = std::move(merged);
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;  // strictly descending grevlex, nonzero coefficients
};

/// Integer-coefficient multiple with coprime coefficients and positive
/// leading coefficient; the identity over F_p.
template <CoefficientField F>
Polynomial<F> primitive_form(const Polynomial<F>& p) {
  if constexpr (std::is_same_v<F, Rationals>) {
    if (p.is_zero()) return p;
    mpz_class den = 1, num = 0;
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const auto& t : p.terms()) {
      mpz_class v = t.coeff.get_num() * (den / t.coeff.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    if (sgn(p.terms().front().coeff) < 0) scale = -scale;
    return p.scaled(scale);
  } else {
    return p;
  }
}

}  // namespace liaison
