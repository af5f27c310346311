// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [CENSUS.csv]
//
// The optional census file (degree,group,abs_disc) drives the last
// criterion; without it that line reports SKIP. That line never affects the status.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "galcount/galcount.hpp"
#include "oracles/oracles.hpp"

using namespace galcount;

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Result {
  Outcome outcome;
  std::string detail;
};

Result pass_if(bool ok, std::string detail) { return {ok ? Outcome::Pass : Outcome::Fail, std::move(detail)}; }

std::string fmt(double v, int prec = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_of(const std::map<std::uint64_t, std::uint64_t>& m) {
  return {m.begin(), m.end()};
}

// 1. exponent tables
Result table_reproduction() {
  auto t0 = std::chrono::steady_clock::now();
  std::map<std::string, Fraction> want{
      {"deg6/Nr4", Fraction(1, 2)},  {"deg6/Nr5", Fraction(1, 2)},  {"deg6/Nr7", Fraction(1, 2)},
      {"deg8/Nr6", Fraction(1, 3)},  {"deg8/Nr12", Fraction(1, 4)}, {"deg8/Nr13", Fraction(1, 4)},
      {"deg8/Nr14", Fraction(1, 4)}, {"deg8/Nr17", Fraction(1, 2)}, {"deg8/Nr18", Fraction(1, 2)},
      {"deg8/Nr24", Fraction(1, 2)}, {"deg8/Nr38", Fraction(1)},    {"deg8/Nr44", Fraction(1)},
  };
  std::size_t ok = 0;
  std::string bad;
  for (const char* which : {"deg6", "deg8"})
    for (const auto& r : evaluate_table(which)) {
      auto it = want.find(r.row->row_id);
      if (it == want.end()) continue;
      if (r.status == RowStatus::Pass && r.computed == it->second)
        ++ok;
      else
        bad += " " + r.row->row_id;
    }
  double secs = seconds_since(t0);
  return pass_if(ok == want.size() && secs < 5.0,
                 std::to_string(ok) + "/" + std::to_string(want.size()) + " rows exact, " + fmt(secs, 3) + " s" +
                     (bad.empty() ? "" : ", failing:" + bad));
}

// 2. regular representations: a = l / ((l-1)|G|)
Result regular_formula() {
  std::size_t ok = 0, total = 0;
  std::string bad;
  for (const auto& [name, g] : catalog::regular_groups()) {
    ++total;
    auto n = static_cast<std::int64_t>(g.order());
    std::int64_t l = 2;
    while (n % l) ++l;
    if (g.degree() == g.order() && a_invariant(g) == Fraction(l, (l - 1) * n))
      ++ok;
    else
      bad += " " + name;
  }
  return pass_if(ok == total, std::to_string(ok) + "/" + std::to_string(total) + " regular groups" +
                                  (bad.empty() ? "" : ", failing:" + bad));
}

// 3. direct products: a(H x Z) = max(a(H)/m, a(Z)/n), n = deg H, m = deg Z
Result direct_product_formula() {
  auto cat = catalog::transitive_groups();
  std::size_t ok = 0, total = 0;
  std::string bad;
  for (const auto& [hn, h] : cat)
    for (const auto& [zn, z] : cat) {
      auto m = static_cast<std::int64_t>(h.degree()), n = static_cast<std::int64_t>(z.degree());
      if (m * n > 64) continue;
      ++total;
      Fraction expected = std::max(a_invariant(h) / Fraction(n), a_invariant(z) / Fraction(m));
      if (a_invariant(direct_product(h, z)) == expected)
        ++ok;
      else
        bad += " " + hn + "x" + zn;
    }
  return pass_if(ok == total, std::to_string(ok) + "/" + std::to_string(total) + " pairs with degree product <= 64" +
                                  (bad.empty() ? "" : ", failing:" + bad));
}

// 4. index domination for l-groups, and the Heisenberg x C2 counterexample
Result domination() {
  std::size_t ok = 0, total = 0;
  std::string bad;
  for (const auto& [name, ell, g] : catalog::l_groups()) {
    ++total;
    if (check_index_domination(regular_vs(g)).holds)
      ++ok;
    else
      bad += " " + name;
  }
  auto rep = check_index_domination(heisenberg_c2_dual());
  bool counter = !rep.holds && rep.witness && rep.witness->ind1 == 36 && rep.witness->ind2 == 8 &&
                 rep.witness->a1 == Fraction(1, 27) && rep.witness->a2 == Fraction(1, 8);
  std::string detail = std::to_string(ok) + "/" + std::to_string(total) + " l-group pairs HOLD";
  if (!bad.empty()) detail += " (failing:" + bad + ")";
  detail += "; Heis27xC2 ";
  if (rep.witness)
    detail += std::string(rep.holds ? "HOLDS" : "FAILS") + " ind1=" + std::to_string(rep.witness->ind1) +
              " ind2=" + std::to_string(rep.witness->ind2) + " a1=" + rep.a1.to_string() + " a2=" + rep.a2.to_string();
  else
    detail += "HOLDS (expected a witness)";
  return pass_if(ok == total && counter, detail);
}

// 5. counting functions against independent oracles
Result counting_oracles() {
  const std::uint64_t x = 100000;
  bool quad = quadratic_tally(x).entries() == entries_of(oracle::quadratic_scan(static_cast<std::int64_t>(x)));
  bool cubic = cyclic_tally(3, x).entries() == entries_of(oracle::cyclic_by_characters(3, x));
  bool biq = biquadratic_tally(x).entries() == entries_of(oracle::biquadratic_pairs(static_cast<std::int64_t>(x)));
  bool spots = count_quadratic(10) == 6 && count_cyclic_ell(3, 3969) == 10 && count_biquadratic(256) == 3;
  auto yn = [](bool b) { return b ? "ok" : "MISMATCH"; };
  return pass_if(quad && cubic && biq && spots, std::string("x <= 1e5: quadratic ") + yn(quad) + ", cyclic cubic " +
                                                    yn(cubic) + ", biquadratic " + yn(biq) + "; spot values " +
                                                    yn(spots));
}

// 6. fitted growth exponents against a(G)
Result empirical_exponents() {
  struct Case {
    std::string name;
    std::function<DiscriminantTally(std::uint64_t)> tally;
    std::vector<std::uint64_t> grid;
    std::optional<double> log_power;
    double target, tol;
  };
  std::vector<Case> cases{
      {"quadratic", quadratic_tally, geometric_grid(100, 10'000'000, 12), 0.0, 1.0, 0.05},
      {"cubic", [](std::uint64_t y) { return cyclic_tally(3, y); }, geometric_grid(1000, 1'000'000'000'000ULL, 10),
       0.0, 0.5, 0.05},
      {"quintic", [](std::uint64_t y) { return cyclic_tally(5, y); },
       geometric_grid(10'000, 10'000'000'000'000'000ULL, 10), 0.0, 0.25, 0.07},
      {"biquadratic", biquadratic_tally, geometric_grid(1000, 100'000'000, 12), std::nullopt, 0.5, 0.1},
  };
  bool all = true;
  std::string detail;
  for (const auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    auto samples = tally_samples(c.tally(c.grid.back()), c.grid);
    auto fit = fit_exponent(samples, c.log_power);
    double secs = seconds_since(t0);
    bool ok = std::fabs(fit.a_hat - c.target) <= c.tol && secs < 60.0;
    all = all && ok;
    if (!detail.empty()) detail += "; ";
    detail += c.name + " a_hat=" + fmt(fit.a_hat) + (fit.b_fitted ? " (b=" + fmt(fit.b, 2) + ")" : "") + " vs " +
              fmt(c.target, 2) + " " + fmt(secs, 1) + "s";
  }
  return pass_if(all, detail);
}

// 7. powerful numbers and the divisor bound
Result sieve_properties() {
  const std::uint64_t limit = 1'000'000;
  auto brute = oracle::powerful_by_factoring(2, limit);
  bool exact = true;
  std::uint64_t running = 0;
  for (std::uint64_t n = 1; n <= limit && exact; ++n) {
    if (!brute[n]) continue;
    if (n > 1 && powerful_count(2, n - 1) != running) exact = false;
    ++running;
    if (powerful_count(2, n) != running) exact = false;
  }
  exact = exact && powerful_count(2, limit) == running;
  double v8 = powerful_count(2, 100'000'000) / 1e4;
  double v9 = powerful_count(2, 1'000'000'000) / std::sqrt(1e9);
  double drift = std::fabs(v9 - v8) / v8;
  bool divisor = true;
  for (double eps : {1.0, 0.5, 0.25}) divisor = divisor && divisor_bound_check(limit, eps).holds;
  return pass_if(exact && drift < 0.05 && divisor,
                 std::string("powerful_count ") + (exact ? "matches" : "DIFFERS FROM") + " brute force to 1e6, drift " +
                     fmt(100 * drift, 3) + "%, divisor bound " + (divisor ? "holds" : "FAILS"));
}

// 8. estimator on synthetic data
Result estimator_exactness() {
  auto grid = geometric_grid(1'000'000'000'000ULL, 1'000'000'000'000'000'000ULL, 15);
  // c is chosen so Z(1e12) = 1e12: large enough that integer rounding is negligible, small enough for 64 bits
  auto make = [&](double a, double b) {
    double c = std::pow(1e12, 1 - a) / std::pow(std::log(1e12), b);
    std::vector<Sample> s;
    for (auto x : grid) {
      long double lx = std::log(static_cast<long double>(x));
      s.push_back({x, static_cast<std::uint64_t>(std::llround(c * std::exp(a * lx) * std::pow(lx, b)))});
    }
    return s;
  };
  double err_plain = 0, err_log = 0;
  for (double a : {0.25, 0.5, 0.7, 1.0}) {
    err_plain = std::max(err_plain, std::fabs(fit_exponent(make(a, 0.0), 0.0).a_hat - a));
    for (double b : {1.0, 2.0}) err_log = std::max(err_log, std::fabs(fit_exponent(make(a, b), b).a_hat - a));
  }
  std::ostringstream os;
  os << std::scientific << std::setprecision(1) << "max |a_hat - a| = " << err_plain << " (no log), " << err_log
     << " (log power fixed)";
  return pass_if(err_plain <= 1e-9 && err_log <= 1e-6, os.str());
}

// 9. external cubic census: growth should be linear
Result census_fit(const char* path) {
  if (!path) return {Outcome::Skip, "no census file given (pass one as the first argument)"};
  std::ifstream in(path);
  if (!in) return {Outcome::Fail, std::string("cannot open ") + path};
  try {
    auto tallies = ingest_census(in);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> all;
    for (const auto& [label, t] : tallies) all.insert(all.end(), t.entries().begin(), t.entries().end());
    if (all.empty()) return {Outcome::Fail, "census has no records"};
    DiscriminantTally merged("all", all);
    std::uint64_t lo = std::max<std::uint64_t>(merged.entries().front().first, 2);
    std::uint64_t hi = merged.entries().back().first;
    if (lo >= hi) return {Outcome::Fail, "census spans a single discriminant"};
    auto grid = geometric_grid(lo, hi, 12);
    auto fit = fit_exponent(tally_samples(merged, grid), 0.0);
    // a file of cyclic cubics alone grows like x^(1/2); linear growth needs the S3 fields too
    bool cyclic_only = tallies.size() == 1 && tallies.begin()->first == "C3";
    if (cyclic_only)
      return {Outcome::Skip, "cyclic cubics only, not a full cubic census: " + std::to_string(merged.total()) +
                                 " fields, a_hat=" + fmt(fit.a_hat) + " (a(C3)=1/2)"};
    return pass_if(std::fabs(fit.a_hat - 1.0) <= 0.1,
                   std::to_string(merged.total()) + " fields in " + std::to_string(tallies.size()) +
                       " labels, a_hat=" + fmt(fit.a_hat) + " vs 1 (tolerance 0.1)");
  } catch (const std::exception& e) {
    return {Outcome::Fail, e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  const char* census = argc > 1 ? argv[1] : nullptr;
  std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"table reproduction", table_reproduction},
      {"regular representation formula", regular_formula},
      {"direct product formula", direct_product_formula},
      {"index domination", domination},
      {"counting oracles", counting_oracles},
      {"empirical exponents", empirical_exponents},
      {"sieve properties", sieve_properties},
      {"estimator exactness", estimator_exactness},
      {"census fit (optional)", [census] { return census_fit(census); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {Outcome::Fail, std::string("exception: ") + e.what()};
    }
    const char* tag = r.outcome == Outcome::Pass ? "PASS" : r.outcome == Outcome::Fail ? "FAIL" : "SKIP";
    bool optional = i + 1 == criteria.size();  // depends on external data, never blocks
    failures += r.outcome == Outcome::Fail && !optional;
    std::cout << tag << " [" << i + 1 << "] " << criteria[i].first << ": " << r.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
