// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pencil/cli.hpp"

using namespace pencil;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<bool(std::string &)> body;
};

bool criterion_wreath(std::string &note) {
  auto elements = enumerate_group(wreath_3_2());
  const std::size_t expected[] = {8, 12, 6};
  bool ok = elements.size() == 48;
  for (int w = 0; w <= 2; ++w) {
    auto dec = orbit_decomposition(cube_strata_action(w));
    ok = ok && dec.transitive() && dec.orbits.front().size() == expected[w];
  }
  note = std::to_string(elements.size()) + " elements, orbits 8/12/6";
  return ok;
}

bool criterion_enriques(std::string &note) {
  auto m = enriques_pencil_model();
  auto r = index_and_degree_report(m);
  auto realized = r.realized;
  std::sort(realized.begin(), realized.end());
  note = "min " + std::to_string(r.min_degree_lower) + ", index " +
         std::to_string(r.index_upper);
  return m.divisors() == std::vector<std::int64_t>{4, 6, 3} &&
         realized == std::vector<std::int64_t>{3, 4} && r.exact_min == 3 &&
         r.exact_index == 1;
}

bool criterion_hypersurface_orbits(std::string &note) {
  int cases = 0;
  for (int d = 2; d <= 8; ++d)
    for (int n = 1; n <= 8; ++n)
      for (int i = 1; i <= std::min(d, n); ++i) {
        auto dec = orbit_decomposition(induced_subset_action(
            static_cast<std::size_t>(d), static_cast<std::size_t>(i)));
        if (!dec.transitive() ||
            static_cast<std::int64_t>(dec.orbits.front().size()) != binomial(d, i))
          return false;
        ++cases;
      }
  note = std::to_string(cases) + " (d,n,i) cases";
  return true;
}

bool criterion_semigroup(std::string &note) {
  int checks = 0;
  for (int d = 1; d <= 8; ++d)
    for (int n = 1; n <= 8; ++n) {
      auto s = sdn_generators(d, n);
      auto naive = oracle::naive_semigroup(s.generators(), 200);
      for (int x = 0; x <= 200; ++x, ++checks)
        if (semigroup_contains(s, x) != naive[static_cast<std::size_t>(x)])
          return false;
    }
  using MG = std::pair<std::int64_t, std::int64_t>;
  bool ok = semigroup_min_and_gcd(sdn_generators(5, 2)) == MG{5, 5} &&
            semigroup_min_and_gcd(sdn_generators(4, 2)) == MG{4, 2} &&
            semigroup_min_and_gcd(sdn_generators(7, 3)) == MG{7, 7};
  note = std::to_string(checks) + " membership checks";
  return ok;
}

bool criterion_pullback_table(std::string &note) {
  auto table = quadratic_pullback_table(fixtures::load(fixtures::corrected_jprime()));
  const auto &expected = fixtures::printed_pullback_table();
  if (table.rows.size() != expected.size())
    return false;
  std::size_t equal = 0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    equal += table.rows[i].left == expected[i].left &&
             table.rows[i].right == expected[i].right &&
             table.rows[i].image.str() == expected[i].image;
  note = std::to_string(equal) + "/12 rows, rank " + std::to_string(table.rank);
  return equal == 12 && table.rows.front().image.str() == "1/1*T1^5" &&
         table.rows.back().image.str() == "1/1*T0^5" && table.rank == 6;
}

bool criterion_jprime_oracle(std::string &note) {
  auto j = fixtures::load(fixtures::corrected_j());
  auto jp = fixtures::load(fixtures::corrected_jprime());
  auto cmp = derive_jprime_and_compare(j, jp, {1, 2, 3, 5, 7});
  note = std::to_string(cmp.matches()) + "/" + std::to_string(cmp.checks.size()) +
         " fibre points";
  return cmp.checks.size() == 30 && cmp.all_match() && normalized_map_degree(jp) == 5;
}

bool criterion_equivariance(std::string &note) {
  auto j = check_weighted_equivariance(fixtures::load(fixtures::corrected_j()),
                                       {6, fixtures::j_weights()});
  auto printed = check_weighted_equivariance(fixtures::load(fixtures::printed_j()),
                                             {6, fixtures::j_weights()});
  auto jp = check_weighted_equivariance(fixtures::load(fixtures::corrected_jprime()),
                                        {6, fixtures::jprime_weights()});
  note = "printed j: " + printed.failure;
  return j.equivariant && !printed.equivariant && printed.failure == "NotHomogeneous" &&
         jp.equivariant;
}

bool criterion_norm(std::string &note) {
  std::mt19937 rng(8);
  for (int pair = 0; pair < 100; ++pair) {
    std::uint32_t d = 1 + rng() % 4;
    auto p = oracle::random_form(rng, rng() % 5, conic_vars());
    auto q = oracle::random_form(rng, rng() % 5, conic_vars());
    auto np = monomial_norm(p, d);
    if (np.homogeneous_degree() != p.homogeneous_degree())
      return false;
    if (!(monomial_norm(p * q, d) == np * monomial_norm(q, d)))
      return false;
    if (np.evaluate({Rational(3, 2), Rational(1)}) != oracle::norm_at(p, d, Rational(3, 2)))
      return false;
  }
  auto linear = monomial_norm(parse_poly("T0 + T1", conic_vars()), 3);
  note = "100 random pairs; T0+T1 -> " + linear.str();
  return linear == parse_poly("U0 + U1", base_vars());
}

bool criterion_splitting(std::string &note) {
  bool ok = pushforward_splitting_type(3, 5) == std::vector<std::int64_t>{1, 1, 1};
  for (int d = 1; d <= 6; ++d)
    for (int m = 0; m <= 12; ++m) {
      std::int64_t total = 0;
      for (auto t : pushforward_splitting_type(d, m))
        total += t + 1;
      ok = ok && total == m + 1;
    }
  note = "f_* O(5) = O(1)^3, rank sums for d <= 6, m <= 12";
  return ok;
}

bool criterion_witness(std::string &note) {
  for (int ap = 1; ap <= 3; ++ap)
    for (int bp = 1; bp <= 3; ++bp)
      for (int e = 1; e <= 100; ++e) {
        auto w = choose_ab_and_certify(ap, bp, e);
        if (!(4 * w.a * w.b > e + 1) || !(e < 4 * w.a * w.b - 1))
          return false;
      }
  for (int a = 1; a <= 20; ++a)
    for (int b = 1; b <= 20; ++b)
      if (!span_and_basepoint(a, b).basepoint_ok)
        return false;
  note = "900 (a',b',e) triples, 400 (a,b) spans";
  return true;
}

bool criterion_determinism(std::string &note) {
  const std::vector<std::vector<std::string>> commands{
      {"hypersurface", "--d", "5", "--n", "2", "--json"},
      {"enriques", "--json"},
      {"semigroup", "--d", "3", "--n", "2", "--query", "7", "--json"},
      {"verify-construction", "--json"},
      {"witness", "--a", "2", "--b", "3", "--json"}};
  for (const auto &c : commands) {
    auto first = cli::run_cli(c), second = cli::run_cli(c);
    if (first.out.empty() || first.out != second.out || first.exit_code != second.exit_code)
      return false;
  }
  note = "5 subcommands";
  return true;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "wreath product order and cube orbits", 1.0, criterion_wreath},
      {2, "Enriques index and minimal degree", 1.0, criterion_enriques},
      {3, "hypersurface orbit sizes equal binomials", 10.0, criterion_hypersurface_orbits},
      {4, "semigroup membership against enumeration", 5.0, criterion_semigroup},
      {5, "quadratic pullback table and rank", 1.0, criterion_pullback_table},
      {6, "dual-point oracle for j'", 5.0, criterion_jprime_oracle},
      {7, "equivariance diagnostics", 1.0, criterion_equivariance},
      {8, "norm map degree and multiplicativity", 5.0, criterion_norm},
      {9, "pushforward splitting type", 1.0, criterion_splitting},
      {10, "witness arithmetic", 1.0, criterion_witness},
      {11, "deterministic JSON output", 5.0, criterion_determinism}};
  int failures = 0;
  for (const auto &c : criteria) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.body(note);
    } catch (const std::exception &e) {
      note = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    if (!in_time)
      note += " (over time limit)";
    const bool pass = ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d: %s [%.3f s / %.0f s] %s\n", pass ? "PASS" : "FAIL",
                c.id, c.title.c_str(), seconds, c.limit_seconds, note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
