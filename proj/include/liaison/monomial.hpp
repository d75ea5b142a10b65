#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liaison {

inline constexpr int kMaxVariables = 12;
inline constexpr int kMaxExponent = 0xffff;

/// Exponent vector with cached total degree. Unused trailing slots are zero.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }
  static Monomial from_exponents(const std::vector<int>& exps) {
    if (exps.size() > kMaxVariables) throw std::length_error("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
    return m;
  }

  int operator[](int i) const { return exps_[i]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(int i, int power) {
    if (power < 0 || power > kMaxExponent) throw std::overflow_error("exponent out of range");
    degree_ += power - exps_[i];
    exps_[i] = static_cast<std::uint16_t>(power);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) {
      int e = a.exps_[i] + b.exps_[i];
      if (e > kMaxExponent) throw std::overflow_error("exponent out of range");
      r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (int i = 0; i < kMaxVariables; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i)
      r.exps_[i] = static_cast<std::uint16_t>(other.exps_[i] - exps_[i]);
    r.degree_ = other.degree_ - degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVariables; ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Plain lexicographic comparison of exponent vectors, for containers only.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

  /// Swaps the exponents of two variables.
  Monomial swapped(int i, int j) const {
    Monomial r = *this;
    std::swap(r.exps_[i], r.exps_[j]);
    return r;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_;
  int degree_ = 0;
};

/// Monomial orders. Elimination(k) compares the degree in the first k
/// variables, then breaks ties by grevlex.
struct TermOrder {
  enum class Kind { GrevLex, Lex, Elimination };
  Kind kind = Kind::GrevLex;
  int block = 0;

  static TermOrder grevlex() { return {}; }
  static TermOrder lex() { return {Kind::Lex, 0}; }
  static TermOrder elimination(int k) { return {Kind::Elimination, k}; }

  bool degree_compatible() const { return kind == Kind::GrevLex; }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::GrevLex:
        return compare_grevlex(a, b);
      case Kind::Lex:
        for (int i = 0; i < kMaxVariables; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::Elimination: {
        int da = 0, db = 0;
        for (int i = 0; i < block; ++i) da += a[i], db += b[i];
        if (da != db) return da > db ? 1 : -1;
        return compare_grevlex(a, b);
      }
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::GrevLex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Elimination: return "elim" + std::to_string(block);
    }
    return "?";
  }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  static int compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = kMaxVariables - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
};

/// All monomials of total degree d in nvars variables, descending grevlex.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || nvars <= 0) {
    if (d == 0 && nvars == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      rec(var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(0, d);
  TermOrder ord;
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
  return out;
}

}  // namespace liaison

template <>
struct std::hash<liaison::Monomial> {
  std::size_t operator()(const liaison::Monomial& m) const noexcept { return m.hash(); }
};
