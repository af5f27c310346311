#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "galcount/fraction.hpp"
#include "galcount/groupspec.hpp"

namespace galcount {

/// One row of the published degree-6 / degree-8 exponent tables.
struct TableRow {
  std::string row_id;      // "deg8/Nr14"
  std::string name;        // structural name, empty when the table gives none
  std::size_t order;       // |G| column
  std::string group_expr;  // construction expression; empty when only external data can supply the group
  Fraction expected_a;
};

inline const std::vector<TableRow>& table_rows(std::string_view which) {
  static const std::vector<TableRow> deg6 = {
      {"deg6/Nr4", "A4", 12, R"x(cosets(natural(A 4), "(1 2)(3 4)"))x", Fraction(1, 2)},
      {"deg6/Nr5", "3 wr 2", 18, "wreath(natural(C 3), natural(C 2))", Fraction(1, 2)},
      // one of the two faithful degree-6 actions of S4; both have a = 1/2
      {"deg6/Nr7", "S4", 24, R"x(cosets(natural(S 4), "(1 2 3 4)"))x", Fraction(1, 2)},
  };
  static const std::vector<TableRow> deg8 = {
      {"deg8/Nr6", "D8", 16, "natural(D 8)", Fraction(1, 3)},
      {"deg8/Nr7", "", 16, "", Fraction(1, 2)},
      {"deg8/Nr8", "", 16, "", Fraction(1, 3)},
      {"deg8/Nr10", "", 16, "", Fraction(1, 2)},
      {"deg8/Nr11", "", 16, "", Fraction(1, 2)},
      {"deg8/Nr12", "SL2(3)", 24, "sl2(3)", Fraction(1, 4)},
      {"deg8/Nr13", "A4 x 2", 24, "product(natural(A 4), natural(C 2))", Fraction(1, 4)},
      {"deg8/Nr14", "S4", 24, R"x(cosets(natural(S 4), "(1 2 3)"))x", Fraction(1, 4)},
      {"deg8/Nr15", "", 32, "", Fraction(1, 2)},
      {"deg8/Nr16", "", 32, "", Fraction(1, 2)},
      {"deg8/Nr17", "4 wr 2", 32, "wreath(natural(C 4), natural(C 2))", Fraction(1, 2)},
      {"deg8/Nr18", "2^2 wr 2", 32, "wreath(product(natural(C 2), natural(C 2)), natural(C 2))", Fraction(1, 2)},
      {"deg8/Nr19", "", 32, "", Fraction(1, 2)},
      {"deg8/Nr20", "", 32, "", Fraction(1, 2)},
      {"deg8/Nr21", "", 32, "", Fraction(1, 2)},
      {"deg8/Nr22", "", 32, "", Fraction(1, 2)},
      {"deg8/Nr24", "S4 x 2", 48, "product(natural(S 4), natural(C 2))", Fraction(1, 2)},
      {"deg8/Nr26", "", 64, "", Fraction(1, 2)},
      {"deg8/Nr29", "", 64, "", Fraction(1, 2)},
      {"deg8/Nr30", "", 64, "", Fraction(1, 2)},
      {"deg8/Nr38", "2 wr A4", 192, "wreath(natural(C 2), natural(A 4))", Fraction(1)},
      {"deg8/Nr44", "2 wr S4", 384, "wreath(natural(C 2), natural(S 4))", Fraction(1)},
  };
  if (which == "deg6") return deg6;
  if (which == "deg8") return deg8;
  throw std::invalid_argument("unknown table '" + std::string(which) + "' (expected deg6 or deg8)");
}

enum class RowStatus { Pass, Fail, Skipped };

inline std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skipped: return "SKIPPED(external)";
  }
  return "?";
}

struct RowResult {
  const TableRow* row;
  RowStatus status;
  std::optional<Fraction> computed;
  std::size_t degree = 0;
  std::size_t order = 0;
  std::string message;
};

/// A row passes when its construction is transitive with the tabulated degree, order and a-value.
inline RowResult evaluate_row(const TableRow& row, std::size_t expected_degree, std::size_t cap = kDefaultCap) {
  RowResult r{&row, RowStatus::Skipped, std::nullopt, 0, 0, {}};
  if (row.group_expr.empty()) return r;
  try {
    PermGroup g = parse_group_spec(row.group_expr, cap);
    r.degree = g.degree();
    r.order = g.order(cap);
    r.computed = a_invariant(g, cap);
    bool ok = *r.computed == row.expected_a && r.degree == expected_degree && r.order == row.order &&
              is_transitive(g);
    if (!ok) r.message = "mismatch";
    r.status = ok ? RowStatus::Pass : RowStatus::Fail;
  } catch (const std::exception& e) {
    r.status = RowStatus::Fail;
    r.message = e.what();
  }
  return r;
}

inline std::vector<RowResult> evaluate_table(std::string_view which, std::size_t cap = kDefaultCap) {
  std::size_t degree = which == "deg6" ? 6 : 8;
  std::vector<RowResult> out;
  for (const auto& row : table_rows(which)) out.push_back(evaluate_row(row, degree, cap));
  return out;
}

}  // namespace galcount
