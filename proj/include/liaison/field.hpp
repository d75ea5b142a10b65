#pragma once

// Coefficient fields: the rationals (GMP) and prime fields F_p with p < 2^31.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace liaison {

/// Runtime description of a coefficient field; characteristic 0 means Q.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) { return FieldSpec{p}; }
  bool is_rationals() const { return characteristic == 0; }
  std::string to_string() const {
    return is_rationals() ? "Q" : "GF " + std::to_string(characteristic);
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Rationals {
 public:
  using Element = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return Element(z);
  }
  Element from_mpz(const mpz_class& v) const { return Element(v); }
  Element from_rational(const mpq_class& v) const { return v; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                  std::to_string(p));
  }

  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_mpz(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return static_cast<Element>(r.get_ui());
  }
  Element from_rational(const mpq_class& v) const {
    return div(from_mpz(v.get_num()), from_mpz(v.get_den()));
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<Element>(result);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  std::string to_string(Element a) const { return std::to_string(a); }
  bool is_negative(Element) const { return false; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class F>
concept CoefficientField = requires(const F f, const typename F::Element a) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

/// Calls fn(Rationals{}) or fn(PrimeField{p}) according to the runtime spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rationals()) return fn(Rationals{});
  return fn(PrimeField{spec.characteristic});
}

}  // namespace liaison
