#pragma once

// Analysis reports and their JSON form.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace liaison {

inline constexpr const char* kEngineVersion = "0.3.0";

struct SubcanonicalSection {
  std::string verdict;  // yes | no | inconclusive
  std::optional<int> a;
  std::optional<int> alpha;
  std::optional<std::string> witness;
  int window_low = 0;
  int truncation_bound = 0;
  std::string search;  // none | exhaustive | sampled
  std::string reason;
  friend bool operator==(const SubcanonicalSection&, const SubcanonicalSection&) = default;
};

struct NoetherSection {
  int window = 0;
  bool holds = false;
  std::vector<std::vector<long>> rows;  // [d, lhs, rhs]
  friend bool operator==(const NoetherSection&, const NoetherSection&) = default;
};

struct LinkageSection {
  std::string f1, f2;
  int m1 = 0, m2 = 0;
  std::vector<std::string> residual;
  long residual_degree = 0;
  bool degree_additivity = false;
  bool self_linked = false;
  bool double_link = false;
  bool colon_was_saturated = true;
  std::optional<NoetherSection> noether;
  friend bool operator==(const LinkageSection&, const LinkageSection&) = default;
};

struct GherardelliSection {
  std::string status;  // verified | hypotheses_fail | no_lift_found
  int alpha = 0;
  int m3 = 0;
  std::optional<std::string> f3;
  std::vector<long> hypotheses;
  std::string search;
  long candidates_tried = 0;
  std::string diagnostic;
  friend bool operator==(const GherardelliSection&, const GherardelliSection&) = default;
};

struct CertificateSection {
  bool valid = false;
  bool switched = false;
  std::optional<std::string> f1, f3;
  int m3 = 0;
  bool x_eq_f1_cap_f3 = false;
  bool z_eq_f1_cap_2f3 = false;
  bool m2_eq_2m3 = false;
  bool characteristic_positive = false;
  std::vector<std::string> failed_checks;
  friend bool operator==(const CertificateSection&, const CertificateSection&) = default;
};

struct SelfLinkSection {
  int m1 = 0, m2 = 0;
  bool found = false;
  std::optional<std::string> f1, f2;
  std::string search;
  bool proves_absence = false;
  long candidates_tried = 0;
  friend bool operator==(const SelfLinkSection&, const SelfLinkSection&) = default;
};

/// Every complete intersection of two hypersurface sections of a complete
/// intersection ambient P has degree divisible by deg P.
struct ParitySection {
  long ambient_degree = 1;
  long scheme_degree = 0;
  bool ci_degrees_even = false;
  bool obstructs_ci = false;
  friend bool operator==(const ParitySection&, const ParitySection&) = default;
};

struct StageError {
  std::string stage;
  std::string kind;
  std::string message;
  friend bool operator==(const StageError&, const StageError&) = default;
};

struct AnalysisReport {
  std::string engine_version = kEngineVersion;
  std::uint64_t seed = 0;
  std::string command;
  std::string field;
  std::vector<std::string> variables;
  int n = 0;
  std::vector<int> ambient_degrees;
  std::vector<std::string> ideal;

  std::optional<int> dimension;
  std::optional<long> degree;
  std::optional<std::string> hilbert_polynomial;
  std::optional<long> arithmetic_genus;
  std::optional<bool> saturated;
  std::optional<ParitySection> parity;
  std::optional<std::string> cm_status;
  std::optional<SubcanonicalSection> subcanonical;
  std::optional<LinkageSection> linkage;
  std::optional<GherardelliSection> gherardelli;
  std::optional<CertificateSection> ci_certificate;
  std::vector<SelfLinkSection> selflink_search;
  std::vector<std::string> flags;
  std::vector<StageError> errors;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

namespace detail {

template <typename T>
void put(nlohmann::ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <typename T>
void get(const nlohmann::ordered_json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null()) {
    v.reset();
  } else {
    v = j.at(key).get<T>();
  }
}

}  // namespace detail

inline void to_json(nlohmann::ordered_json& j, const SubcanonicalSection& s) {
  j = nlohmann::ordered_json::object();
  j["verdict"] = s.verdict;
  detail::put(j, "a", s.a);
  detail::put(j, "alpha", s.alpha);
  detail::put(j, "witness", s.witness);
  j["window"] = {s.window_low, s.truncation_bound};
  j["search"] = s.search;
  j["reason"] = s.reason;
}
inline void from_json(const nlohmann::ordered_json& j, SubcanonicalSection& s) {
  j.at("verdict").get_to(s.verdict);
  detail::get(j, "a", s.a);
  detail::get(j, "alpha", s.alpha);
  detail::get(j, "witness", s.witness);
  s.window_low = j.at("window").at(0).get<int>();
  s.truncation_bound = j.at("window").at(1).get<int>();
  j.at("search").get_to(s.search);
  j.at("reason").get_to(s.reason);
}

inline void to_json(nlohmann::ordered_json& j, const NoetherSection& s) {
  j = nlohmann::ordered_json::object();
  j["window"] = s.window;
  j["holds"] = s.holds;
  j["rows"] = s.rows;
}
inline void from_json(const nlohmann::ordered_json& j, NoetherSection& s) {
  j.at("window").get_to(s.window);
  j.at("holds").get_to(s.holds);
  j.at("rows").get_to(s.rows);
}

inline void to_json(nlohmann::ordered_json& j, const LinkageSection& s) {
  j = nlohmann::ordered_json::object();
  j["f1"] = s.f1;
  j["f2"] = s.f2;
  j["m1"] = s.m1;
  j["m2"] = s.m2;
  j["residual"] = s.residual;
  j["residual_degree"] = s.residual_degree;
  j["degree_additivity"] = s.degree_additivity;
  j["self_linked"] = s.self_linked;
  j["double_link"] = s.double_link;
  j["colon_was_saturated"] = s.colon_was_saturated;
  detail::put(j, "noether", s.noether);
}
inline void from_json(const nlohmann::ordered_json& j, LinkageSection& s) {
  j.at("f1").get_to(s.f1);
  j.at("f2").get_to(s.f2);
  j.at("m1").get_to(s.m1);
  j.at("m2").get_to(s.m2);
  j.at("residual").get_to(s.residual);
  j.at("residual_degree").get_to(s.residual_degree);
  j.at("degree_additivity").get_to(s.degree_additivity);
  j.at("self_linked").get_to(s.self_linked);
  j.at("double_link").get_to(s.double_link);
  j.at("colon_was_saturated").get_to(s.colon_was_saturated);
  detail::get(j, "noether", s.noether);
}

inline void to_json(nlohmann::ordered_json& j, const GherardelliSection& s) {
  j = nlohmann::ordered_json::object();
  j["status"] = s.status;
  j["alpha"] = s.alpha;
  j["m3"] = s.m3;
  detail::put(j, "f3", s.f3);
  j["hypotheses"] = s.hypotheses;
  j["search"] = s.search;
  j["candidates_tried"] = s.candidates_tried;
  j["diagnostic"] = s.diagnostic;
}
inline void from_json(const nlohmann::ordered_json& j, GherardelliSection& s) {
  j.at("status").get_to(s.status);
  j.at("alpha").get_to(s.alpha);
  j.at("m3").get_to(s.m3);
  detail::get(j, "f3", s.f3);
  j.at("hypotheses").get_to(s.hypotheses);
  j.at("search").get_to(s.search);
  j.at("candidates_tried").get_to(s.candidates_tried);
  j.at("diagnostic").get_to(s.diagnostic);
}

inline void to_json(nlohmann::ordered_json& j, const CertificateSection& s) {
  j = nlohmann::ordered_json::object();
  j["valid"] = s.valid;
  j["switched"] = s.switched;
  detail::put(j, "f1", s.f1);
  detail::put(j, "f3", s.f3);
  j["m3"] = s.m3;
  j["checks"] = {{"X_eq_F1capF3", s.x_eq_f1_cap_f3}, {"Z_eq_F1cap2F3", s.z_eq_f1_cap_2f3}, {"m2_eq_2m3", s.m2_eq_2m3}};
  j["characteristic_positive"] = s.characteristic_positive;
  j["failed_checks"] = s.failed_checks;
}
inline void from_json(const nlohmann::ordered_json& j, CertificateSection& s) {
  j.at("valid").get_to(s.valid);
  j.at("switched").get_to(s.switched);
  detail::get(j, "f1", s.f1);
  detail::get(j, "f3", s.f3);
  j.at("m3").get_to(s.m3);
  j.at("checks").at("X_eq_F1capF3").get_to(s.x_eq_f1_cap_f3);
  j.at("checks").at("Z_eq_F1cap2F3").get_to(s.z_eq_f1_cap_2f3);
  j.at("checks").at("m2_eq_2m3").get_to(s.m2_eq_2m3);
  j.at("characteristic_positive").get_to(s.characteristic_positive);
  j.at("failed_checks").get_to(s.failed_checks);
}

inline void to_json(nlohmann::ordered_json& j, const SelfLinkSection& s) {
  j = nlohmann::ordered_json::object();
  j["degrees"] = {s.m1, s.m2};
  j["found"] = s.found;
  detail::put(j, "f1", s.f1);
  detail::put(j, "f2", s.f2);
  j["search"] = s.search;
  j["proves_absence"] = s.proves_absence;
  j["candidates_tried"] = s.candidates_tried;
}
inline void from_json(const nlohmann::ordered_json& j, SelfLinkSection& s) {
  s.m1 = j.at("degrees").at(0).get<int>();
  s.m2 = j.at("degrees").at(1).get<int>();
  j.at("found").get_to(s.found);
  detail::get(j, "f1", s.f1);
  detail::get(j, "f2", s.f2);
  j.at("search").get_to(s.search);
  j.at("proves_absence").get_to(s.proves_absence);
  j.at("candidates_tried").get_to(s.candidates_tried);
}

inline void to_json(nlohmann::ordered_json& j, const ParitySection& s) {
  j = nlohmann::ordered_json::object();
  j["ambient_degree"] = s.ambient_degree;
  j["scheme_degree"] = s.scheme_degree;
  j["ci_degrees_even"] = s.ci_degrees_even;
  j["obstructs_ci"] = s.obstructs_ci;
}
inline void from_json(const nlohmann::ordered_json& j, ParitySection& s) {
  j.at("ambient_degree").get_to(s.ambient_degree);
  j.at("scheme_degree").get_to(s.scheme_degree);
  j.at("ci_degrees_even").get_to(s.ci_degrees_even);
  j.at("obstructs_ci").get_to(s.obstructs_ci);
}

inline void to_json(nlohmann::ordered_json& j, const StageError& e) {
  j = {{"stage", e.stage}, {"kind", e.kind}, {"message", e.message}};
}
inline void from_json(const nlohmann::ordered_json& j, StageError& e) {
  j.at("stage").get_to(e.stage);
  j.at("kind").get_to(e.kind);
  j.at("message").get_to(e.message);
}

inline void to_json(nlohmann::ordered_json& j, const AnalysisReport& r) {
  j = nlohmann::ordered_json::object();
  j["engine_version"] = r.engine_version;
  j["seed"] = r.seed;
  j["command"] = r.command;
  j["input"] = {{"field", r.field}, {"variables", r.variables}, {"n", r.n}, {"ambient_degrees", r.ambient_degrees},
                {"ideal", r.ideal}};
  detail::put(j, "dimension", r.dimension);
  detail::put(j, "degree", r.degree);
  detail::put(j, "hilbert_polynomial", r.hilbert_polynomial);
  detail::put(j, "arithmetic_genus", r.arithmetic_genus);
  detail::put(j, "saturated", r.saturated);
  detail::put(j, "parity", r.parity);
  detail::put(j, "cm_status", r.cm_status);
  detail::put(j, "subcanonical", r.subcanonical);
  detail::put(j, "linkage", r.linkage);
  detail::put(j, "gherardelli", r.gherardelli);
  detail::put(j, "ci_certificate", r.ci_certificate);
  j["selflink_search"] = r.selflink_search;
  j["flags"] = r.flags;
  j["errors"] = r.errors;
}
inline void from_json(const nlohmann::ordered_json& j, AnalysisReport& r) {
  j.at("engine_version").get_to(r.engine_version);
  j.at("seed").get_to(r.seed);
  j.at("command").get_to(r.command);
  const auto& in = j.at("input");
  in.at("field").get_to(r.field);
  in.at("variables").get_to(r.variables);
  in.at("n").get_to(r.n);
  in.at("ambient_degrees").get_to(r.ambient_degrees);
  in.at("ideal").get_to(r.ideal);
  detail::get(j, "dimension", r.dimension);
  detail::get(j, "degree", r.degree);
  detail::get(j, "hilbert_polynomial", r.hilbert_polynomial);
  detail::get(j, "arithmetic_genus", r.arithmetic_genus);
  detail::get(j, "saturated", r.saturated);
  detail::get(j, "parity", r.parity);
  detail::get(j, "cm_status", r.cm_status);
  detail::get(j, "subcanonical", r.subcanonical);
  detail::get(j, "linkage", r.linkage);
  detail::get(j, "gherardelli", r.gherardelli);
  detail::get(j, "ci_certificate", r.ci_certificate);
  j.at("selflink_search").get_to(r.selflink_search);
  j.at("flags").get_to(r.flags);
  j.at("errors").get_to(r.errors);
}

inline std::string to_json_string(const AnalysisReport& r) {
  nlohmann::ordered_json j = r;
  return j.dump(2) + "\n";
}

inline AnalysisReport report_from_json(const std::string& text) {
  return nlohmann::ordered_json::parse(text).get<AnalysisReport>();
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  auto opt = [](const auto& v) -> std::string {
    if (!v) return "n/a";
    std::ostringstream s;
    s << *v;
    return s.str();
  };
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "field: " << r.field << "\n";
  os << "ideal: ";
  for (std::size_t i = 0; i < r.ideal.size(); ++i) os << (i ? "; " : "") << r.ideal[i];
  os << "\n";
  if (r.dimension) os << "dimension: " << *r.dimension << "\n";
  if (r.degree) os << "degree: " << *r.degree << "\n";
  if (r.hilbert_polynomial) os << "hilbert polynomial: " << *r.hilbert_polynomial << "\n";
  if (r.arithmetic_genus) os << "arithmetic genus: " << *r.arithmetic_genus << "\n";
  if (r.parity) {
    os << "parity: degree " << r.parity->scheme_degree << " ("
       << (r.parity->scheme_degree % 2 ? "odd" : "even") << "); complete intersections in the ambient have degree divisible by "
       << r.parity->ambient_degree << (r.parity->obstructs_ci ? ", so X is not one" : "") << "\n";
  }
  if (r.cm_status) os << "cm status: " << *r.cm_status << "\n";
  if (r.subcanonical) {
    const auto& s = *r.subcanonical;
    os << "subcanonical: " << s.verdict;
    if (s.a) os << " (a = " << *s.a << ", alpha = " << opt(s.alpha) << ")";
    if (!s.reason.empty()) os << " [" << s.reason << "]";
    os << "\n";
  }
  if (r.linkage) {
    const auto& l = *r.linkage;
    os << "link: " << l.f1 << "; " << l.f2 << "\n";
    os << "residual: ";
    for (std::size_t i = 0; i < l.residual.size(); ++i) os << (i ? "; " : "") << l.residual[i];
    os << "\n";
    os << "residual degree: " << l.residual_degree << "\n";
    os << "self-linked: " << yes(l.self_linked) << "\n";
    os << "double link: " << yes(l.double_link) << "\n";
    if (l.noether) os << "noether identity (window " << l.noether->window << "): " << yes(l.noether->holds) << "\n";
  }
  if (r.gherardelli) {
    const auto& g = *r.gherardelli;
    os << "gherardelli: " << g.status << " (m3 = " << g.m3 << ", f3 = " << opt(g.f3) << ", " << g.search << ")\n";
  }
  if (r.ci_certificate) {
    const auto& c = *r.ci_certificate;
    os << "ci certificate: " << (c.valid ? "valid" : "failed");
    if (c.f3) os << " (f1 = " << opt(c.f1) << ", f3 = " << *c.f3 << ", m3 = " << c.m3 << ")";
    for (const auto& f : c.failed_checks) os << " !" << f;
    if (c.characteristic_positive) os << " [positive characteristic]";
    os << "\n";
  }
  for (const auto& s : r.selflink_search) {
    os << "self-link search at (" << s.m1 << ", " << s.m2 << "): ";
    if (s.found) {
      os << "found " << *s.f1 << "; " << *s.f2;
    } else {
      os << (s.proves_absence ? "none (exhaustive)" : "none (inconclusive)");
    }
    os << " [" << s.search << ", " << s.candidates_tried << " candidates]\n";
  }
  for (const auto& f : r.flags) os << "note: " << f << "\n";
  for (const auto& e : r.errors) os << "error in " << e.stage << ": " << e.kind << ": " << e.message << "\n";
  return os.str();
}

}  // namespace liaison
