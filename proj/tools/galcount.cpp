// galcount: a-invariants of permutation groups, exponent tables, and
// discriminant counts for quadratic, cyclic and biquadratic fields.
//
// Exit codes:
//   0 success, every check passed
//   1 a check failed (table row FAIL, verdict outside tolerance, domination FAILS)
//   2 bad arguments or unparsable group specification
//   3 group order exceeds the enumeration cap
//   4 group is not transitive
//   5 census file missing or malformed
//   6 not enough usable samples to fit
//   7 paired representations are inconsistent

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galcount/galcount.hpp"

namespace {

using namespace galcount;

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kCap = 3,
  kIntransitive = 4,
  kCensus = 5,
  kSamples = 6,
  kInconsistent = 7,
};

/// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_real(double v) {
  std::ostringstream os;
  os << std::setprecision(8) << v;
  return os.str();
}

std::uint64_t parse_count_token(const std::string& tok) {
  std::size_t used = 0;
  long double v = 0;
  try {
    v = std::stold(tok, &used);
  } catch (const std::logic_error&) {
    throw UsageError("not a number: '" + tok + "'");
  }
  if (used != tok.size() || !(v >= 0) || v > 1.8e19L || v != std::floor(v))
    throw UsageError("not a nonnegative integer: '" + tok + "'");
  return static_cast<std::uint64_t>(v);
}

/// "min:max:points", numbers may use exponent notation (1e5).
std::vector<std::uint64_t> parse_grid(const std::string& text) {
  auto first = text.find(':');
  auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw UsageError("grid must look like MIN:MAX:POINTS, got '" + text + "'");
  std::uint64_t lo = parse_count_token(text.substr(0, first));
  std::uint64_t hi = parse_count_token(text.substr(first + 1, second - first - 1));
  std::uint64_t pts = parse_count_token(text.substr(second + 1));
  try {
    return geometric_grid(lo, hi, pts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_odd_prime(std::uint64_t ell) {
  if (ell < 3 || !is_prime_small(ell)) throw UsageError("--ell must be an odd prime, got " + std::to_string(ell));
}

/// Default sampling grid for a family when --grid is not given.
std::vector<std::uint64_t> default_grid(const std::string& family, std::uint64_t ell) {
  if (family == "quadratic") return geometric_grid(100, 10'000'000, 12);
  if (family == "biquadratic") return geometric_grid(1'000, 100'000'000, 12);
  if (family == "cyclic") {
    if (ell == 3) return geometric_grid(1'000, 1'000'000'000'000, 10);
    std::uint64_t fmax = std::min<std::uint64_t>(10'000, integer_root(UINT64_MAX, static_cast<unsigned>(ell - 1)));
    std::uint64_t hi = 1, lo = 1;
    for (std::uint64_t i = 0; i + 1 < ell; ++i) {
      hi *= fmax;
      lo *= 10;
    }
    return geometric_grid(lo, hi, 10);
  }
  throw UsageError("family '" + family + "' needs an explicit --grid");
}

struct CountOptions {
  std::string family;
  std::uint64_t ell = 0;
  unsigned k = 2;
  std::string label;
  std::string file;
  std::string grid;
};

// Sieve sizes beyond these take minutes and gigabytes; refuse them up front.
constexpr std::uint64_t kMaxQuadratic = 2'000'000'000;
constexpr std::uint64_t kMaxBiquadratic = 1'000'000'000'000;
constexpr std::uint64_t kMaxConductor = 200'000'000;

void require_at_most(std::uint64_t value, std::uint64_t limit, const std::string& what) {
  if (value > limit)
    throw UsageError(what + " " + std::to_string(value) + " exceeds the supported limit " + std::to_string(limit));
}

std::vector<Sample> run_count(const CountOptions& o) {
  std::vector<std::uint64_t> grid = o.grid.empty() ? default_grid(o.family, o.ell) : parse_grid(o.grid);
  std::uint64_t top = grid.back();
  if (o.family == "quadratic") {
    require_at_most(top, kMaxQuadratic, "grid maximum");
    return tally_samples(quadratic_tally(top), grid);
  }
  if (o.family == "biquadratic") {
    require_at_most(top, kMaxBiquadratic, "grid maximum");
    return tally_samples(biquadratic_tally(top), grid);
  }
  if (o.family == "cyclic") {
    require_odd_prime(o.ell);
    require_at_most(integer_root(top, static_cast<unsigned>(o.ell - 1)), kMaxConductor, "conductor bound");
    return tally_samples(cyclic_tally(o.ell, top), grid);
  }
  if (o.family == "powerful") {
    if (o.k < 1) throw UsageError("--k must be at least 1");
    std::vector<Sample> out;
    for (auto x : grid) out.push_back({x, powerful_count(o.k, x)});
    return out;
  }
  if (o.family == "census") {
    if (o.label.empty() || o.file.empty()) throw UsageError("census needs --label and --file");
    std::ifstream in(o.file);
    if (!in) throw CensusError(0, "cannot open '" + o.file + "'");
    auto tallies = ingest_census(in);
    auto it = tallies.find(o.label);
    if (it == tallies.end()) throw CensusError(0, "label '" + o.label + "' not present in '" + o.file + "'");
    return tally_samples(it->second, grid);
  }
  throw UsageError("unknown family '" + o.family + "'");
}

PermGroup load_spec(const std::string& expr, const std::string& file, std::size_t cap) {
  if (!file.empty() && !expr.empty()) throw UsageError("give either an expression or --file, not both");
  if (file.empty() && expr.empty()) throw UsageError("missing group expression or --file");
  try {
    return file.empty() ? parse_group_spec(expr, cap) : load_group_file(file);
  } catch (const GroupFileError& e) {
    throw UsageError(e.what());
  }
}

int cmd_aval(const std::string& expr, const std::string& file, std::size_t cap) {
  PermGroup g = load_spec(expr, file, cap);
  std::size_t order = g.order(cap);
  if (!is_transitive(g)) {
    std::cerr << "error: group of degree " << g.degree() << " is not transitive\n";
    return kIntransitive;
  }
  std::cout << "degree: " << g.degree() << '\n' << "order: " << order << '\n';
  std::cout << "a(G): " << a_invariant(g, cap) << '\n';
  if (order > 1) {
    auto w = min_index_witness(g, cap);
    std::cout << "min index: " << w.index << '\n' << "witness: " << w.element.to_string() << '\n';
  } else {
    std::cout << "min index: none\nwitness: none\n";
  }
  return kOk;
}

int cmd_table(const std::string& which, const std::string& format, std::size_t cap) {
  std::vector<RowResult> results;
  try {
    results = evaluate_table(which, cap);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool any_fail = false;
  if (format == "csv") {
    std::cout << "row_id,group,order,expected_a,computed_a,status\n";
    for (const auto& r : results) {
      std::cout << r.row->row_id << ',' << r.row->name << ',' << r.row->order << ',' << r.row->expected_a << ','
                << (r.computed ? r.computed->to_string() : "") << ',' << to_string(r.status) << '\n';
      any_fail |= r.status == RowStatus::Fail;
    }
  } else {
    std::cout << std::left << std::setw(12) << "row" << std::setw(10) << "group" << std::setw(7) << "|G|"
              << std::setw(10) << "expected" << std::setw(10) << "computed" << "status\n";
    for (const auto& r : results) {
      std::cout << std::setw(12) << r.row->row_id << std::setw(10) << (r.row->name.empty() ? "-" : r.row->name)
                << std::setw(7) << r.row->order << std::setw(10) << r.row->expected_a.to_string() << std::setw(10)
                << (r.computed ? r.computed->to_string() : "-") << to_string(r.status);
      if (!r.message.empty()) std::cout << "  (" << r.message << ')';
      std::cout << '\n';
      any_fail |= r.status == RowStatus::Fail;
    }
  }
  return any_fail ? kCheckFailed : kOk;
}

std::optional<double> parse_log_power(const std::string& text) {
  if (text == "fit") return std::nullopt;
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("--log-power must be 'fit' or a number, got '" + text + "'");
  }
}

int cmd_fit(const std::string& path, const CountOptions& family, const std::string& log_power_text,
            const std::string& predict, double tolerance, std::size_t cap) {
  std::optional<double> log_power = parse_log_power(log_power_text);
  std::vector<Sample> samples;
  if (!path.empty() && !family.family.empty()) throw UsageError("give either a samples file or --family, not both");
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
      samples = read_samples(in);
    } catch (const SampleFormatError& e) {
      throw UsageError(e.what());
    }
  } else if (!family.family.empty()) {
    samples = run_count(family);
  } else {
    throw UsageError("fit needs a samples file or --family");
  }

  std::optional<PermGroup> group;
  if (!predict.empty()) {
    group = load_spec(predict, "", cap);
    if (!is_transitive(*group)) {
      std::cerr << "error: predicted group is not transitive\n";
      return kIntransitive;
    }
  }
  FitResult fit = fit_exponent(samples, log_power);
  std::cout << "samples: " << fit.sample_count << " (dropped " << fit.dropped << ")\n"
            << "a_hat: " << fmt_real(fit.a_hat) << '\n'
            << "c_hat: " << fmt_real(fit.c_hat) << '\n'
            << "b: " << fmt_real(fit.b) << (fit.b_fitted ? " (fitted)" : " (fixed)") << '\n'
            << "rms_residual: " << fmt_real(fit.rms_residual) << '\n'
            << "loo_sensitivity: " << fmt_real(fit.loo_sensitivity) << '\n';
  if (!group) return kOk;
  Verdict v = conjecture_verdict(*group, samples, tolerance, log_power, cap);
  std::cout << "predicted a(G): " << v.predicted << '\n'
            << "deviation: " << fmt_real(std::fabs(v.fitted.a_hat - v.predicted.to_double())) << '\n'
            << "verdict: " << (v.within_tolerance ? "CONSISTENT" : "INCONSISTENT") << " at tolerance "
            << fmt_real(v.tolerance) << " (empirical evidence, not a proof)\n";
  return v.within_tolerance ? kOk : kCheckFailed;
}

int cmd_compare(const std::string& path, const std::string& example, std::size_t cap) {
  DualRep dual;
  if (!path.empty() && !example.empty()) throw UsageError("give either a paired file or --example, not both");
  if (example == "heisenberg-c2") {
    dual = heisenberg_c2_dual();
  } else if (example == "dihedral8") {
    dual = regular_vs(natural_dihedral(4), cap);
  } else if (!example.empty()) {
    throw UsageError("unknown example '" + example + "' (heisenberg-c2, dihedral8)");
  } else if (!path.empty()) {
    try {
      dual = load_dual_rep(path);
    } catch (const GroupFileError& e) {
      throw UsageError(e.what());
    }
  } else {
    throw UsageError("compare-reps needs a paired file or --example");
  }
  DominationReport rep = check_index_domination(dual, cap);
  std::cout << "order: " << rep.order << '\n'
            << "degree1: " << dual.gens1[0].degree() << "  a1: " << rep.a1 << '\n'
            << "degree2: " << dual.gens2[0].degree() << "  a2: " << rep.a2 << '\n'
            << "result: " << (rep.holds ? "HOLDS" : "FAILS") << '\n';
  if (rep.witness) {
    const auto& w = *rep.witness;
    auto i1 = Fraction(static_cast<std::int64_t>(w.ind1));
    auto i2 = Fraction(static_cast<std::int64_t>(w.ind2));
    std::cout << "witness word: " << word_to_string(w.word) << '\n'
              << "witness order: " << element_order(w.image1) << '\n'
              << "ind1: " << w.ind1 << "  ind2: " << w.ind2 << '\n'
              << "a1*ind1: " << w.a1 * i1 << "  a2*ind2: " << w.a2 * i2 << '\n';
  }
  return rep.holds ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"a-invariants of permutation groups and discriminant counts of number fields"};
  app.require_subcommand(1);
  std::size_t cap = kDefaultCap;
  app.add_option("--cap", cap, "Maximum group order for exhaustive enumeration")->check(CLI::PositiveNumber);

  auto* aval = app.add_subcommand("aval", "Compute a(G) for a transitive group");
  std::string aval_expr, aval_file;
  aval->add_option("expr", aval_expr, "Construction expression, e.g. \"wreath(natural(C 2), natural(A 4))\"");
  aval->add_option("--file", aval_file, "Group file (degree=N, gen=... lines)");

  auto* table = app.add_subcommand("table", "Recompute the degree-6 or degree-8 exponent table");
  std::string table_which, table_format = "text";
  table->add_option("which", table_which, "deg6 or deg8")->required();
  table->add_option("--format", table_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* count = app.add_subcommand("count", "Stream x,count samples of a discriminant counting function");
  CountOptions count_opts;
  count->add_option("family", count_opts.family, "quadratic | cyclic | biquadratic | powerful | census")
      ->required()
      ->check(CLI::IsMember({"quadratic", "cyclic", "biquadratic", "powerful", "census"}));
  count->add_option("--ell", count_opts.ell, "Odd prime degree for the cyclic family");
  count->add_option("--k", count_opts.k, "Exponent for the powerful family");
  count->add_option("--label", count_opts.label, "Group label for the census family");
  count->add_option("--file", count_opts.file, "Census file for the census family");
  count->add_option("--grid", count_opts.grid, "MIN:MAX:POINTS geometric grid");

  auto* fit = app.add_subcommand("fit", "Fit Z(x) ~ c x^a (log x)^b and optionally compare a with a(G)");
  std::string fit_path, fit_log_power = "fit", fit_predict;
  double fit_tolerance = 0.05;
  CountOptions fit_family;
  fit->add_option("samples", fit_path, "File in x,count format");
  fit->add_option("--family", fit_family.family, "Generate samples instead of reading a file")
      ->check(CLI::IsMember({"quadratic", "cyclic", "biquadratic", "powerful", "census"}));
  fit->add_option("--ell", fit_family.ell, "Odd prime degree for --family cyclic");
  fit->add_option("--k", fit_family.k, "Exponent for --family powerful");
  fit->add_option("--label", fit_family.label, "Group label for --family census");
  fit->add_option("--file", fit_family.file, "Census file for --family census");
  fit->add_option("--grid", fit_family.grid, "MIN:MAX:POINTS geometric grid");
  fit->add_option("--log-power", fit_log_power, "'fit' or a fixed exponent b of log x");
  fit->add_option("--predict", fit_predict, "Group expression whose a(G) is the predicted exponent");
  fit->add_option("--tolerance", fit_tolerance, "Allowed |a_hat - a(G)|")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare-reps", "Check a2 ind2 >= a1 ind1 for two representations");
  std::string compare_path, compare_example;
  compare->add_option("pairfile", compare_path, "Two group blocks separated by ---");
  compare->add_option("--example", compare_example, "Built-in pair: heisenberg-c2 or dihedral8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*aval) return cmd_aval(aval_expr, aval_file, cap);
    if (*table) return cmd_table(table_which, table_format, cap);
    if (*count) {
      auto samples = run_count(count_opts);
      write_samples(std::cout, samples);
      return kOk;
    }
    if (*fit) return cmd_fit(fit_path, fit_family, fit_log_power, fit_predict, fit_tolerance, cap);
    if (*compare) return cmd_compare(compare_path, compare_example, cap);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const CensusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCensus;
  } catch (const InsufficientSamples& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSamples;
  } catch (const DegenerateDesign& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSamples;
  } catch (const InconsistentRepresentation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {  // domain and overflow errors from bad numeric arguments
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory; use a smaller grid or --cap\n";
    return kUsage;
  }
  return kUsage;
}
