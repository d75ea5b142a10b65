#pragma once

// Runs the engine on a parsed input and fills an AnalysisReport.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liaison/constructions.hpp"
#include "liaison/parser.hpp"
#include "liaison/report.hpp"

namespace liaison {

struct AnalysisOptions {
  std::uint64_t seed = 0;
  int window = 4;
  int max_degree = 6;
  long budget = 200;
  std::optional<std::pair<int, int>> degrees;
};

enum class Command { Analyze, SelfLinkSearch, Gherardelli, Link };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::SelfLinkSearch: return "selflink-search";
    case Command::Gherardelli: return "gherardelli";
    case Command::Link: return "link";
  }
  return "?";
}

template <CoefficientField F>
std::string show(const Polynomial<F>& p) {
  return primitive_form(p).to_string();
}

template <CoefficientField F>
std::vector<std::string> show_generators(const Ideal<F>& ideal) {
  std::vector<std::string> out;
  auto gens = minimal_ideal_generators(ideal);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) out.push_back(show(*it));
  return out;
}

namespace detail {

/// Runs an optional stage; precondition failures are recorded, not raised.
inline bool stage(AnalysisReport& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
    return true;
  } catch (const Error& e) {
    if (!e.is_precondition()) throw;
    report.errors.push_back({name, to_string(e.kind()), e.detail()});
    return false;
  }
}

}  // namespace detail

template <CoefficientField F>
AnalysisReport run_analysis(const ParsedInput<F>& in, Command command, const AnalysisOptions& opt) {
  const auto& ring = in.ring;
  const auto& ideal = in.ideal;
  AnalysisReport r;
  r.seed = opt.seed;
  r.command = to_string(command);
  r.field = ring->field().spec().to_string();
  r.variables = ring->variables();
  r.n = ring->nvars() - 1;
  r.ambient_degrees = generator_degrees(in.ambient);
  r.ideal = show_generators(ideal);

  const auto& h = ideal.hilbert_data();
  if (h.empty_scheme()) fail(ErrorKind::EmptyScheme, "the ideal defines the empty scheme");
  r.dimension = h.projective_dimension();
  r.degree = h.degree.get_si();
  r.hilbert_polynomial = h.hilbert_polynomial.to_string();
  if (*r.dimension == 1) r.arithmetic_genus = arithmetic_genus(ideal);
  r.saturated = is_saturated(ideal);
  if (!r.ambient_degrees.empty()) {
    ParitySection p;
    p.ambient_degree = in.ambient.hilbert_data().degree.get_si();
    p.scheme_degree = *r.degree;
    p.ci_degrees_even = p.ambient_degree % 2 == 0;
    p.obstructs_ci = p.ci_degrees_even && p.scheme_degree % 2 != 0;
    r.parity = p;
  }
  if constexpr (std::is_same_v<F, PrimeField>)
    r.flags.push_back("positive characteristic: existence searches certify existence over this field only");
  else
    r.flags.push_back("searches over Q certify existence; failures to find are inconclusive over the closure");

  std::optional<SubcanonicalReport> sub;
  const bool wants_structure = command == Command::Analyze || command == Command::Gherardelli;
  if (wants_structure) {
    std::optional<CMStatus> status;
    detail::stage(r, "cm_status", [&] { status = cm_status(ideal); });
    if (status) r.cm_status = to_string(*status);
    detail::stage(r, "subcanonical", [&] {
      sub = subcanonical_twist(ideal, r.ambient_degrees, r.n, opt.seed);
      SubcanonicalSection s;
      s.verdict = to_string(sub->verdict);
      s.a = sub->twist_a;
      s.alpha = sub->alpha_relative;
      s.witness = sub->witness;
      s.window_low = sub->window_low;
      s.truncation_bound = sub->truncation_bound;
      s.search = to_string(sub->search);
      s.reason = sub->reason;
      r.subcanonical = s;
      if (sub->verdict == Verdict::Inconclusive) r.flags.push_back("subcanonical verdict inconclusive");
    });
  }

  if (command == Command::SelfLinkSearch) {
    std::vector<std::pair<int, int>> splits;
    if (opt.degrees) {
      splits.push_back(*opt.degrees);
    } else {
      const long target = 2 * *r.degree;
      for (int m1 = 1; m1 <= opt.max_degree; ++m1)
        for (int m2 = m1; m2 <= opt.max_degree; ++m2)
          if (static_cast<long>(m1) * m2 == target) splits.emplace_back(m1, m2);
    }
    for (const auto& [m1, m2] : splits) {
      auto res = selflink_search(ideal, m1, m2, opt.budget, opt.seed);
      SelfLinkSection s;
      s.m1 = m1;
      s.m2 = m2;
      s.found = res.pair.has_value();
      if (res.pair) {
        s.f1 = show(res.pair->first);
        s.f2 = show(res.pair->second);
      }
      s.search = to_string(res.search);
      s.proves_absence = res.exhaustive_negative;
      s.candidates_tried = res.candidates_tried;
      if (!s.found && !s.proves_absence) r.flags.push_back("self-link search inconclusive");
      r.selflink_search.push_back(std::move(s));
    }
    return r;
  }

  if (!in.link) {
    if (command != Command::Analyze) fail(ErrorKind::NotContained, "this command needs a link block");
    return r;
  }

  auto data = link(in.ambient, ideal, in.link->first, in.link->second);
  LinkageSection l;
  l.f1 = show(data.f1);
  l.f2 = show(data.f2);
  l.m1 = data.m1;
  l.m2 = data.m2;
  l.residual = show_generators(data.iy);
  l.residual_degree = data.iy.hilbert_data().degree.get_si();
  const long ambient_degree = in.ambient.hilbert_data().degree.get_si();
  l.degree_additivity = *r.degree + l.residual_degree == static_cast<long>(data.m1) * data.m2 * ambient_degree;
  l.self_linked = is_self_linked(data);
  l.double_link = double_link_check(data);
  l.colon_was_saturated = data.colon_was_saturated;
  if (command != Command::Gherardelli && in.ambient.is_zero() && ring->nvars() == 4 && *r.dimension == 1) {
    NoetherSection ns;
    ns.window = opt.window;
    ns.holds = true;
    for (const auto& row : noether_sequence_table(data, opt.window)) {
      ns.rows.push_back({row.d, row.lhs, row.rhs});
      if (row.lhs != row.rhs) ns.holds = false;
    }
    l.noether = ns;
  }
  r.linkage = l;
  if (command == Command::Link) return r;

  auto lift_section = [&] {
    auto lift = gherardelli_find_f3(data, opt.seed, sub);
    GherardelliSection g;
    g.status = to_string(lift.status);
    g.alpha = lift.alpha;
    g.m3 = lift.m3;
    if (lift.f3) g.f3 = show(*lift.f3);
    g.hypotheses = lift.hypotheses;
    g.search = to_string(lift.search);
    g.candidates_tried = lift.candidates_tried;
    g.diagnostic = lift.diagnostic;
    if (lift.status == LiftStatus::NoLiftFound) r.flags.push_back("no lift found (inconclusive)");
    r.gherardelli = g;
  };
  if (command == Command::Gherardelli) {
    lift_section();
    return r;
  }
  if (sub && sub->verdict == Verdict::Yes)
    detail::stage(r, "gherardelli", lift_section);
  else
    r.errors.push_back({"gherardelli", to_string(ErrorKind::NotSubcanonical), "X is not known to be subcanonical"});

  if (command == Command::Analyze) {
    if (!l.self_linked) {
      r.errors.push_back({"ci_certificate", to_string(ErrorKind::NotSelfLinked), "X is not self-linked by f1, f2"});
    } else if (sub && sub->verdict == Verdict::Yes) {
      detail::stage(r, "ci_certificate", [&] {
        auto cert = ci_certify(data, opt.seed, sub);
        CertificateSection c;
        c.valid = cert.valid;
        c.switched = cert.switched;
        if (cert.f1) c.f1 = show(*cert.f1);
        if (cert.f3) c.f3 = show(*cert.f3);
        c.m3 = cert.m3;
        c.x_eq_f1_cap_f3 = cert.x_eq_f1_cap_f3;
        c.z_eq_f1_cap_2f3 = cert.z_eq_f1_cap_2f3;
        c.m2_eq_2m3 = cert.m2_eq_2m3;
        c.characteristic_positive = cert.characteristic_positive;
        c.failed_checks = cert.failed_checks;
        r.ci_certificate = c;
      });
    }
  }
  return r;
}

inline AnalysisReport run_analysis(const IdealFile& file, Command command, const AnalysisOptions& opt) {
  return with_field(file.field, [&](const auto& field) {
    return run_analysis(instantiate(file, field), command, opt);
  });
}

/// Ideal-file form of an example, for golden tests and the samples directory.
template <CoefficientField F>
IdealFile to_ideal_file(const ExampleDescriptor<F>& d) {
  IdealFile file;
  file.field = d.field;
  file.variables = d.ideal.ring()->variables();
  for (const auto& g : d.ambient.generators()) file.ambient.push_back(to_raw(primitive_form(g)));
  for (const auto& g : minimal_ideal_generators(d.ideal)) file.ideal.push_back(to_raw(primitive_form(g)));
  if (d.link) file.link.emplace(to_raw(primitive_form(d.link->first)), to_raw(primitive_form(d.link->second)));
  return file;
}

}  // namespace liaison
