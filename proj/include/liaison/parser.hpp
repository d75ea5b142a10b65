#pragma once

// The ideal-file format:
//
//   field Q | field GF <p>
//   ring <v1> <v2> ...
//   ambient: <poly>; <poly>; ...     (optional)
//   ideal: <poly>; <poly>; ...
//   link: <poly>; <poly>             (optional)
//
// Polynomials use integer coefficients, explicit '*', '^' exponents and
// '+'/'-'. '#' starts a comment.

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "liaison/ideal.hpp"

namespace liaison {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct RawTerm {
  mpz_class coeff;
  std::vector<int> exponents;
};

/// Integer polynomial with like terms combined, in first-seen order.
struct RawPolynomial {
  std::vector<RawTerm> terms;
  std::string text;
  int line = 0, column = 0;
};

struct IdealFile {
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<RawPolynomial> ambient;
  std::vector<RawPolynomial> ideal;
  std::optional<std::pair<RawPolynomial, RawPolynomial>> link;
};

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, int line, int column, const std::vector<std::string>& vars)
      : s_(text), line_(line), col0_(column), vars_(vars) {}

  RawPolynomial parse() {
    RawPolynomial p;
    p.line = line_;
    skip();
    p.column = col0_ + static_cast<int>(pos_);
    if (pos_ >= s_.size()) error("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      RawTerm t = term();
      t.coeff *= sign;
      add(p, std::move(t));
    }
    std::vector<RawTerm> kept;
    for (auto& t : p.terms)
      if (t.coeff != 0) kept.push_back(std::move(t));
    p.terms = std::move(kept);
    p.text = trimmed(s_);
    return p;
  }

 private:
  RawTerm term() {
    RawTerm t{1, std::vector<int>(vars_.size(), 0)};
    factor(t);
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        factor(t);
      } else {
        break;
      }
    }
    return t;
  }

  void factor(RawTerm& t) {
    skip();
    if (pos_ >= s_.size()) error("expected a coefficient or variable");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff *= integer();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') error("exponents apply to variables only");
    } else if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int index = -1;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) index = static_cast<int>(i);
      if (index < 0) error_at(start, "unknown variable '" + name + "'");
      long e = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        mpz_class v = integer();
        if (v > kMaxExponent) error_at(at, "exponent too large");
        e = v.get_si();
      }
      long total = t.exponents[index] + e;
      if (total > kMaxExponent) error_at(start, "exponent too large");
      t.exponents[index] = static_cast<int>(total);
    } else {
      error(std::string("unexpected character '") + c + "'");
    }
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    return mpz_class(s_.substr(start, pos_ - start), 10);
  }

  static void add(RawPolynomial& p, RawTerm t) {
    for (auto& u : p.terms)
      if (u.exponents == t.exponents) {
        u.coeff += t.coeff;
        return;
      }
    p.terms.push_back(std::move(t));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const { error_at(pos_, msg); }
  [[noreturn]] void error_at(std::size_t at, const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(at), msg);
  }
  static std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_, col0_;
  const std::vector<std::string>& vars_;
};

inline std::vector<RawPolynomial> parse_poly_list(const std::string& body, int line, int column,
                                                  const std::vector<std::string>& vars) {
  std::vector<RawPolynomial> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string::npos) end = body.size();
    std::string piece = body.substr(start, end - start);
    bool blank = piece.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) {
      out.push_back(PolynomialParser(piece, line, column + static_cast<int>(start), vars).parse());
    } else if (end != body.size()) {
      throw ParseError(line, column + static_cast<int>(start), "empty polynomial");
    }
    start = end + 1;
  }
  return out;
}

inline std::optional<int> raw_degree(const RawPolynomial& p, bool& homogeneous) {
  homogeneous = true;
  std::optional<int> deg;
  for (const auto& t : p.terms) {
    int d = 0;
    for (int e : t.exponents) d += e;
    if (deg && *deg != d) homogeneous = false;
    if (!deg) deg = d;
  }
  return deg;
}

}  // namespace detail

inline IdealFile parse_ideal_file(const std::string& text) {
  IdealFile file;
  bool have_field = false, have_ring = false, have_ideal = false, have_ambient = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = b;
    while (e < line.size() && detail::is_ident_char(line[e])) ++e;
    std::string keyword = line.substr(b, e - b);
    const int col = static_cast<int>(b) + 1;

    if (keyword == "field") {
      if (have_field) throw ParseError(line_no, col, "duplicate field declaration");
      std::istringstream words(line.substr(e));
      std::string kind, p, extra;
      words >> kind >> p >> extra;
      if (kind == "Q" && p.empty()) {
        file.field = FieldSpec::rationals();
      } else if (kind == "GF" && !p.empty() && extra.empty()) {
        if (p.size() > 10 || p.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError(line_no, col, "field characteristic must be a positive integer");
        unsigned long long v = std::stoull(p);
        if (v >= (1ULL << 31) || !is_prime(v))
          throw ParseError(line_no, col, "field characteristic must be a prime below 2^31");
        file.field = FieldSpec::prime(static_cast<std::uint32_t>(v));
      } else {
        throw ParseError(line_no, col, "expected 'field Q' or 'field GF <p>'");
      }
      have_field = true;
    } else if (keyword == "ring") {
      if (!have_field) throw ParseError(line_no, col, "ring declared before field");
      if (have_ring) throw ParseError(line_no, col, "duplicate ring declaration");
      std::size_t pos = e;
      while (true) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size()) break;
        if (!detail::is_ident_start(line[pos]))
          throw ParseError(line_no, static_cast<int>(pos) + 1, "invalid variable name");
        std::size_t s = pos;
        while (pos < line.size() && detail::is_ident_char(line[pos])) ++pos;
        if (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
          throw ParseError(line_no, static_cast<int>(pos) + 1, "invalid variable name");
        std::string name = line.substr(s, pos - s);
        for (const auto& v : file.variables)
          if (v == name) throw ParseError(line_no, static_cast<int>(s) + 1, "duplicate variable '" + name + "'");
        file.variables.push_back(name);
      }
      if (file.variables.empty()) throw ParseError(line_no, col, "ring needs at least one variable");
      if (static_cast<int>(file.variables.size()) > kMaxVariables)
        throw ParseError(line_no, col, "at most " + std::to_string(kMaxVariables) + " variables are supported");
      have_ring = true;
    } else if (keyword == "ambient" || keyword == "ideal" || keyword == "link") {
      if (!have_ring) throw ParseError(line_no, col, keyword + " block before ring declaration");
      if (e >= line.size() || line[e] != ':') throw ParseError(line_no, static_cast<int>(e) + 1, "expected ':'");
      auto polys = detail::parse_poly_list(line.substr(e + 1), line_no, static_cast<int>(e) + 2, file.variables);
      for (const auto& p : polys) {
        bool homogeneous = true;
        detail::raw_degree(p, homogeneous);
        if (!homogeneous)
          throw ParseError(p.line, p.column, "inhomogeneous generator '" + p.text + "'");
      }
      if (keyword == "ambient") {
        if (have_ambient) throw ParseError(line_no, col, "duplicate ambient block");
        file.ambient = std::move(polys);
        have_ambient = true;
      } else if (keyword == "ideal") {
        if (have_ideal) throw ParseError(line_no, col, "duplicate ideal block");
        file.ideal = std::move(polys);
        have_ideal = true;
      } else {
        if (file.link) throw ParseError(line_no, col, "duplicate link block");
        if (polys.size() != 2) throw ParseError(line_no, col, "link block needs exactly two polynomials");
        file.link.emplace(std::move(polys[0]), std::move(polys[1]));
      }
    } else {
      throw ParseError(line_no, col, keyword.empty() ? "expected a declaration" : "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_field) throw ParseError(line_no + 1, 1, "missing field declaration");
  if (!have_ring) throw ParseError(line_no + 1, 1, "missing ring declaration");
  if (!have_ideal) throw ParseError(line_no + 1, 1, "missing ideal block");
  return file;
}

inline std::string raw_to_string(const RawPolynomial& p, const std::vector<std::string>& vars) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms) {
    mpz_class mag = abs(t.coeff);
    os << (first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    bool constant = true;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i]) {
        constant = false;
        factors.push_back(vars[i] + (t.exponents[i] > 1 ? "^" + std::to_string(t.exponents[i]) : ""));
      }
    if (constant || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

/// Canonical text of a file; parses back to an equivalent file.
inline std::string to_text(const IdealFile& file) {
  std::ostringstream os;
  os << "field " << (file.field.characteristic ? "GF " + std::to_string(file.field.characteristic) : "Q") << "\n";
  os << "ring";
  for (const auto& v : file.variables) os << " " << v;
  os << "\n";
  auto block = [&](const char* name, const std::vector<RawPolynomial>& polys) {
    os << name << ":";
    for (std::size_t i = 0; i < polys.size(); ++i) os << (i ? "; " : " ") << raw_to_string(polys[i], file.variables);
    os << "\n";
  };
  if (!file.ambient.empty()) block("ambient", file.ambient);
  block("ideal", file.ideal);
  if (file.link) block("link", {file.link->first, file.link->second});
  return os.str();
}

template <CoefficientField F>
struct ParsedInput {
  RingPtr<F> ring;
  Ideal<F> ambient;
  Ideal<F> ideal;
  std::optional<std::pair<Polynomial<F>, Polynomial<F>>> link;
};

template <CoefficientField F>
Polynomial<F> instantiate(const RingPtr<F>& ring, const RawPolynomial& p) {
  const auto& field = ring->field();
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& t : p.terms) terms.push_back({Monomial::from_exponents(t.exponents), field.from_mpz(t.coeff)});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <CoefficientField F>
ParsedInput<F> instantiate(const IdealFile& file, const F& field) {
  ParsedInput<F> in;
  in.ring = make_ring(field, file.variables);
  auto list = [&](const std::vector<RawPolynomial>& raw) {
    std::vector<Polynomial<F>> out;
    for (const auto& p : raw) out.push_back(instantiate(in.ring, p));
    return out;
  };
  in.ambient = Ideal<F>(in.ring, list(file.ambient));
  in.ideal = Ideal<F>(in.ring, list(file.ideal)) + in.ambient;
  if (file.link) in.link.emplace(instantiate(in.ring, file.link->first), instantiate(in.ring, file.link->second));
  return in;
}

template <CoefficientField F>
RawPolynomial to_raw(const Polynomial<F>& p) {
  RawPolynomial r;
  const int nv = p.ring()->nvars();
  for (const auto& t : p.terms()) {
    RawTerm rt;
    if constexpr (std::is_same_v<F, Rationals>) {
      internal_check(t.coeff.get_den() == 1, "non-integral coefficient in an ideal file");
      rt.coeff = t.coeff.get_num();
    } else {
      rt.coeff = t.coeff;
    }
    for (int i = 0; i < nv; ++i) rt.exponents.push_back(t.mono[i]);
    r.terms.push_back(std::move(rt));
  }
  return r;
}

}  // namespace liaison
