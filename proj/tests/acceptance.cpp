// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
//   acceptance [ARTIFACT.json]

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>

#include "corpus.hpp"
#include "json.hpp"
#include "liaison/analysis.hpp"

using namespace liaison;
using json = nlohmann::ordered_json;
using Q = Rationals;

namespace {

/// Counts checks and keeps the first few failure messages.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  bool pass() const { return failures == 0 && checks > 0; }
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks, " + std::to_string(failures) + " failed";
    for (const auto& n : notes) s += "; " + n;
    return s;
  }
};

template <CoefficientField F>
json gens(const Ideal<F>& ideal) {
  return show_generators(ideal);
}

const PrimeField kLarge(32003);

void ci_law(Tally& t, json& art, bool certify) {
  for (int n : {3, 4})
    for (int m1 = 1; m1 <= 3; ++m1)
      for (int m3 = m1; m3 <= 3; ++m3)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          auto d = complete_intersection(Q{}, m1, m3, n, 1000 * n + 100 * m1 + 10 * m3 + seed);
          std::string tag = d.name + "/" + std::to_string(seed);
          auto data = link(d.ambient, d.ideal, d.link->first, d.link->second);
          auto sub = subcanonical_twist(d.ideal, {}, n, seed);
          json row = {{"name", tag}, {"ideal", gens(d.ideal)}};
          if (!certify) {
            t.expect(is_self_linked(data), tag + " not self-linked");
            t.expect(sub.verdict == Verdict::Yes && sub.twist_a == m1 + m3 - n - 1, tag + " wrong twist");
            row["a"] = sub.twist_a ? json(*sub.twist_a) : json(nullptr);
          } else {
            auto cert = ci_certify(data, seed, sub);
            t.expect(cert.valid, tag + " certificate invalid");
            t.expect(data.m2 == 2 * cert.m3, tag + " m2 != 2 m3");
            t.expect(cert.x_eq_f1_cap_f3 && cert.z_eq_f1_cap_2f3, tag + " scheme equalities");
            row["m3"] = cert.m3;
            row["f3"] = cert.f3 ? show(*cert.f3) : "";
          }
          art.push_back(row);
        }
}

void twisted_cubic_criterion(Tally& t, json& art) {
  auto tc = twisted_cubic(Q{}).ideal;
  auto dd = dimension_degree(tc);
  t.expect(dd.degree == 3, "degree");
  t.expect(arithmetic_genus(tc) == 0, "genus");
  t.expect(cm_status(tc) == CMStatus::ACM, "not ACM");
  auto sub = subcanonical_twist(tc, {}, 3, 0);
  t.expect(sub.verdict == Verdict::No, "reported subcanonical");
  auto tc5 = twisted_cubic(PrimeField(5)).ideal;
  auto search = selflink_search(tc5, 2, 3, 200, 0);
  t.expect(search.pair.has_value(), "no self-link over F5 at (2,3)");
  if (search.pair) {
    auto data = link(Ideal<PrimeField>(tc5.ring()), tc5, search.pair->first, search.pair->second);
    t.expect(is_self_linked(data), "found pair does not self-link");
    art["pair"] = {show(search.pair->first), show(search.pair->second)};
  }
  art["subcanonical"] = to_string(sub.verdict);
}

template <CoefficientField F>
void noether_and_additivity(Tally& t, const LinkageData<F>& data, const std::string& tag) {
  t.expect(verify_noether_sequence(data, 4), tag + " Noether identity");
  long sum = mpz_class(data.ix.hilbert_data().degree + data.iy.hilbert_data().degree).get_si();
  t.expect(sum == static_cast<long>(data.m1) * data.m2, tag + " degree additivity");
}

void involution(Tally& t, json& art) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto d = random_linked_curve(kLarge, seed);
    auto data = link(d.ambient, d.ideal, d.link->first, d.link->second);
    t.expect(double_link_check(data), d.name + " double link");
    t.expect(ideal_equal_as_schemes(data.iy, *d.start), d.name + " residual is not the start curve");
    art.push_back({{"name", d.name}, {"ideal", gens(d.ideal)}, {"residual", gens(data.iy)}});
  }
}

void noether(Tally& t, json& art) {
  auto tc = twisted_cubic(Q{}).ideal;
  auto ring = tc.ring();
  auto x = [&](int i) { return Polynomial<Q>::variable(ring, i); };
  auto tcdata = link(Ideal<Q>(ring), tc, x(0) * x(2) - x(1) * x(1), x(1) * x(3) - x(2) * x(2));
  noether_and_additivity(t, tcdata, "twisted cubic");
  auto back = link(Ideal<Q>(ring), tcdata.iy, tcdata.f1, tcdata.f2);
  noether_and_additivity(t, back, "line back to twisted cubic");
  auto line = link(Ideal<Q>(ring), Ideal<Q>(ring, {x(0), x(1)}), x(0), x(1).pow(2));
  noether_and_additivity(t, line, "line self-link");
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto d = random_linked_curve(kLarge, seed);
    auto data = link(d.ambient, d.ideal, d.link->first, d.link->second);
    noether_and_additivity(t, data, d.name);
    json rows = json::array();
    for (const auto& r : noether_sequence_table(data, 4)) rows.push_back({r.d, r.lhs, r.rhs});
    art.push_back({{"name", d.name}, {"rows", rows}});
  }
}

void gherardelli(Tally& t, json& art) {
  int data_count = 0;
  for (std::uint64_t seed = 200; data_count < 20 && seed < 260; ++seed) {
    auto d = random_linked_curve(kLarge, seed);
    auto start = link(d.ambient, *d.start, d.link->first, d.link->second);
    auto sub = subcanonical_twist(*d.start, {}, 3, seed);
    if (sub.verdict != Verdict::Yes) {
      t.expect(false, d.name + " start curve not subcanonical");
      continue;
    }
    ++data_count;
    // forward: Y = Z cap F3 by construction
    t.expect(ideal_equal_as_schemes(start.iz.with({*d.f3}), start.iy), d.name + " Y != Z cap F3");
    t.expect(*sub.alpha_relative == start.m1 + start.m2 - d.f3->degree(), d.name + " alpha != m1 + m2 - m3");
    // converse
    auto lift = gherardelli_find_f3(start, seed, sub);
    bool ok = lift.status == LiftStatus::Verified && lift.f3 &&
              ideal_equal_as_schemes(start.iz.with({*lift.f3}), start.iy);
    t.expect(ok, d.name + " no verified lift");
    art.push_back({{"name", d.name}, {"alpha", *sub.alpha_relative}, {"m3", lift.m3},
                   {"f3", lift.f3 ? show(*lift.f3) : ""}});
  }
  t.expect(data_count >= 20, "fewer than 20 subcanonical data");
}

void ferrand(Tally& t, json& art) {
  auto invariants = [&](const auto& field, const std::string& tag) {
    auto d = ferrand_double_line(field, 2);
    t.expect(arithmetic_genus(d.ideal) == -2, tag + " genus");
    t.expect(cm_status(d.ideal) == CMStatus::LocallyCMNotACM, tag + " CM status");
  };
  invariants(Q{}, "Q");
  for (std::uint32_t p : {2u, 3u, 5u}) invariants(PrimeField(p), "F" + std::to_string(p));

  auto f2 = ferrand_double_line(PrimeField(2), 2).ideal;
  auto found = selflink_search(f2, 2, 2);
  t.expect(found.pair.has_value() && found.search == SearchMode::Exhaustive, "no exhaustive self-link over F2");
  if (found.pair) {
    auto data = link(Ideal<PrimeField>(f2.ring()), f2, found.pair->first, found.pair->second);
    t.expect(is_self_linked(data), "F2 pair does not self-link");
    auto cert = ci_certify(data);
    t.expect(!cert.valid, "F2 certificate should fail");
    art["F2"] = {{"pair", {show(found.pair->first), show(found.pair->second)}},
                 {"failed_checks", cert.failed_checks}};
  }
  for (std::uint32_t p : {3u, 5u}) {
    auto r = selflink_search(ferrand_double_line(PrimeField(p), 2).ideal, 2, 2);
    t.expect(!r.pair && r.exhaustive_negative, "self-link found over F" + std::to_string(p));
    art["F" + std::to_string(p)] = {{"candidates", r.candidates_tried}, {"exhaustive", r.exhaustive_negative}};
  }
}

void quadric(Tally& t, json& art) {
  auto d = quadric_line_example();
  auto data = link(d.ambient, d.ideal, d.link->first, d.link->second);
  t.expect(is_self_linked(data), "not self-linked");
  auto sub = subcanonical_twist(d.ideal, d.ambient_degrees, d.n, 0);
  t.expect(sub.verdict == Verdict::Yes && sub.alpha_relative == 1, "alpha != 1");
  auto lift = gherardelli_find_f3(data, 0, sub);
  t.expect(lift.status == LiftStatus::Verified && lift.f3 && lift.f3->degree() == 1, "no degree-1 lift");
  auto report = run_analysis(to_ideal_file(d), Command::Analyze, {});
  bool parity = report.parity && report.parity->scheme_degree == 1 && report.parity->ambient_degree == 2 &&
                report.parity->obstructs_ci;
  t.expect(parity, "parity section missing or wrong");
  art = json::parse(to_json_string(report));
}

template <CoefficientField F>
void engine_properties(Tally& t, const F& field, std::mt19937_64& rng) {
  for (const auto& e : corpus::ideals(field)) {
    const auto& ring = e.ideal.ring();
    for (const auto& ord : {TermOrder::grevlex(), TermOrder::lex()})
      t.expect(oracle::buchberger_criterion(e.ideal.groebner_basis(ord), ord), e.name + " S-pairs");
    for (int d = 0; d <= 5; ++d)
      t.expect(e.ideal.hilbert_data().function(d) == oracle::hilbert_function(ring, e.ideal.generators(), d),
               e.name + " Hilbert function");
    auto failure = oracle::exactness_failure(minimal_resolution(e.ideal), 5);
    t.expect(failure.empty(), e.name + " " + failure);
    if (e.ideal.hilbert_data().empty_scheme()) continue;
    auto h = equidimensional_hull(e.ideal);
    t.expect(equidimensional_hull(h) == h, e.name + " hull not idempotent");
  }
  auto ring = projective_ring(field, 3);
  for (int trial = 0; trial < 15; ++trial) {
    auto i = corpus::random_ideal(ring, rng);
    auto j = corpus::random_ideal(ring, rng, 2, 2);
    auto k = corpus::random_ideal(ring, rng, 2, 2);
    t.expect(ideal_quotient(i, j).contains(i), "I not in I:J");
    t.expect(ideal_quotient(ideal_quotient(i, j), k) == ideal_quotient(i, j * k), "(I:J):K != I:JK");
    t.expect(ideal_quotient(i + j, j).is_unit(), "(I+J):J != 1");
    for (const auto& f : j.generators())
      for (int d = 0; d <= 3; ++d)
        t.expect(quotient(i, f).dimension_in_degree(d) == oracle::dim_quotient(ring, i.generators(), f, d),
                 "I:f dimension");
  }
}

struct Criterion {
  int number;
  std::string title;
  std::function<void(Tally&, json&)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "complete intersection law", [](Tally& t, json& a) { ci_law(t, a, false); }},
      {2, "main theorem round trip", [](Tally& t, json& a) { ci_law(t, a, true); }},
      {3, "twisted cubic", twisted_cubic_criterion},
      {4, "double link involution", involution},
      {5, "Noether identity and degree additivity", noether},
      {6, "Gherardelli converse and forward direction", gherardelli},
      {7, "characteristic-2 dichotomy", ferrand},
      {8, "quadric ambient counterexample", quadric},
      {9, "engine property suites",
       [](Tally& t, json&) {
         std::mt19937_64 rng(9);
         engine_properties(t, Q{}, rng);
         engine_properties(t, PrimeField(3), rng);
       }},
  };
}

struct Result {
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Result> run_all(json& artifact) {
  std::vector<Result> out;
  for (const auto& c : criteria()) {
    auto start = std::chrono::steady_clock::now();
    Tally t;
    json part;
    try {
      c.run(t, part);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    artifact[std::to_string(c.number)] = {{"title", c.title}, {"pass", t.pass()}, {"data", part}};
    out.push_back({t.pass(), c.title + ": " + t.summary(), secs});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  json first, second;
  auto results = run_all(first);
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    all = all && r.pass;
    std::printf("criterion %zu: %s  %s (%.1fs)\n", i + 1, r.pass ? "PASS" : "FAIL", r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  }

  run_all(second);
  std::string a = first.dump(2), b = second.dump(2);
  bool same = a == b;
  all = all && same;
  std::printf("criterion 10: %s  determinism: two runs of criteria 1-9 give %s JSON artifacts (%zu bytes)\n",
              same ? "PASS" : "FAIL", same ? "byte-identical" : "different", a.size());
  if (argc > 1) std::ofstream(argv[1]) << a << "\n";
  return all ? 0 : 1;
}
