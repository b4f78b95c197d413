// cubetile: exact colored tiling counts for 2x2xn boards.
//
// Subcommands: count (sequence values from any backend), charpoly (system
// characteristic polynomials), verify (cross-check suites), oeis (b-file
// export), tilings (debug dump of enumerated tilings).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubetile/geometry.hpp"
#include "cubetile/identities.hpp"
#include "cubetile/layer_dp.hpp"
#include "cubetile/recurrences.hpp"
#include "json.hpp"

namespace {

using namespace cubetile;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// count

struct CountRequest {
  std::string family = "full";
  int defect_j = 0;
  std::optional<int> n;
  std::string range;
  std::optional<std::int64_t> a, b;
  std::string backend = "dp";
  std::string format = "table";
};

std::pair<int, int> resolve_range(const CountRequest& req) {
  if (req.n && !req.range.empty())
    throw UsageError("give either --n or --range, not both");
  if (req.n) return {*req.n, *req.n};
  if (req.range.empty()) throw UsageError("one of --n or --range is required");
  const auto sep = req.range.find("..");
  if (sep == std::string::npos)
    throw UsageError("--range expects LO..HI, got '" + req.range + "'");
  try {
    const int lo = std::stoi(req.range.substr(0, sep));
    const int hi = std::stoi(req.range.substr(sep + 2));
    if (lo > hi) throw UsageError("--range expects LO <= HI");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--range expects LO..HI, got '" + req.range + "'");
  }
}

std::vector<Poly2> family_counts(const CountRequest& req, int lo, int hi) {
  const std::string& family = req.family;
  const std::string& backend = req.backend;
  if (family == "defect") {
    if (req.defect_j < 1 || req.defect_j > 5)
      throw UsageError("--family defect requires --j in 1..5");
    if (lo < 1) throw UsageError("defect boards start at n=1");
  } else if (req.defect_j != 0) {
    throw UsageError("--j applies to --family defect only");
  }
  if (lo < 0) throw UsageError("n must be nonnegative");

  std::vector<Poly2> values;
  values.reserve(hi - lo + 1);
  const auto from_recurrence = [&](const RecurrenceSpec& spec) {
    const auto all = recurrence_values(spec, hi);
    for (int n = lo; n <= hi; ++n) values.push_back(all[n]);
  };

  if (family == "full") {
    if (backend == "exhaustive")
      for (int n = lo; n <= hi; ++n)
        values.push_back(count_exhaustive(Board::full(n)));
    else if (backend == "dp")
      for (int n = lo; n <= hi; ++n) values.push_back(count_dp(n));
    else
      from_recurrence(recurrence_full());
  } else if (family == "unbreakable") {
    if (backend == "exhaustive")
      for (int n = lo; n <= hi; ++n)
        values.push_back(count_unbreakable_exhaustive(n));
    else if (backend == "dp")
      for (int n = lo; n <= hi; ++n) values.push_back(count_unbreakable_dp(n));
    else
      from_recurrence(recurrence_unbreakable());
  } else if (family == "bricks") {
    if (backend == "exhaustive")
      for (int n = lo; n <= hi; ++n)
        values.push_back(count_exhaustive(Board::full(n))
                             .substitute(Rational(0), std::nullopt));
    else if (backend == "dp")
      for (int n = lo; n <= hi; ++n)
        values.push_back(count_with_piece_weights(n, Poly2(), Poly2::var_b()));
    else
      from_recurrence(recurrence_bricks());
  } else if (family == "defect") {
    if (backend == "exhaustive")
      for (int n = lo; n <= hi; ++n)
        values.push_back(count_defect_exhaustive(req.defect_j, n));
    else if (backend == "dp")
      for (int n = lo; n <= hi; ++n)
        values.push_back(count_defect_dp(req.defect_j, n));
    else
      for (int n = lo; n <= hi; ++n)
        values.push_back(iterate_system(matrix_full_system(),
                                        full_system_initial_vector(),
                                        n)[req.defect_j]);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  return values;
}

int run_count(const CountRequest& req) {
  const auto [lo, hi] = resolve_range(req);
  std::vector<Poly2> values = family_counts(req, lo, hi);

  const std::optional<Rational> a_value =
      req.a ? std::optional<Rational>(Rational(static_cast<long>(*req.a)))
            : std::nullopt;
  const std::optional<Rational> b_value =
      req.b ? std::optional<Rational>(Rational(static_cast<long>(*req.b)))
            : std::nullopt;
  if (a_value || b_value)
    for (Poly2& v : values) v = v.substitute(a_value, b_value);

  if (req.format == "bfile") {
    for (const Poly2& v : values)
      if (!v.is_constant() || !v.is_integer())
        throw UsageError(
            "bfile format requires integer values; bind --a and --b");
    for (int n = lo; n <= hi; ++n)
      std::cout << n << ' ' << values[n - lo].constant_term().get_str() << '\n';
    return kExitSuccess;
  }

  if (req.format == "json") {
    ordered_json params;
    params["family"] = req.family;
    if (req.defect_j != 0) params["j"] = req.defect_j;
    params["range"] = std::to_string(lo) + ".." + std::to_string(hi);
    if (req.a) params["a"] = std::to_string(*req.a);
    if (req.b) params["b"] = std::to_string(*req.b);

    ordered_json results = ordered_json::array();
    for (int n = lo; n <= hi; ++n)
      results.push_back({{"n", n}, {"value", values[n - lo].str()}});

    ordered_json record{{"command", "count"},
                        {"params", params},
                        {"backend", req.backend},
                        {"results", results}};
    std::cout << record.dump(2) << '\n';
    return kExitSuccess;
  }

  if (req.format != "table")
    throw UsageError("unknown format '" + req.format + "'");
  for (int n = lo; n <= hi; ++n)
    std::cout << n << '\t' << values[n - lo].str() << '\n';
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// charpoly

int run_charpoly(const std::string& matrix, const std::string& format) {
  PolyMatrix m;
  if (matrix == "M")
    m = matrix_full_system();
  else if (matrix == "U")
    m = matrix_unbreakable_system();
  else if (matrix == "bricks")
    m = matrix_bricks_system();
  else
    throw UsageError("unknown matrix '" + matrix + "' (expected M, U, bricks)");

  const CharPoly c = charpoly(m);
  if (format == "json") {
    ordered_json results = ordered_json::array();
    for (int k = c.degree(); k >= 0; --k)
      results.push_back({{"n", k}, {"value", c.coeffs[k].str()}});
    ordered_json record{{"command", "charpoly"},
                        {"params", {{"matrix", matrix}}},
                        {"backend", "recurrence"},
                        {"results", results}};
    std::cout << record.dump(2) << '\n';
    return kExitSuccess;
  }
  if (format != "table") throw UsageError("unknown format '" + format + "'");
  for (int k = c.degree(); k >= 0; --k)
    std::cout << "x^" << k << ": " << c.coeffs[k].str() << '\n';
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyContext {
  bool as_json = false;
  bool all_passed = true;
  ordered_json checks = ordered_json::array();

  void record(const std::string& name, bool passed, const std::string& detail = {}) {
    all_passed = all_passed && passed;
    if (as_json) {
      ordered_json check{{"name", name}, {"status", passed ? "pass" : "fail"}};
      if (!detail.empty()) check["detail"] = detail;
      checks.push_back(check);
    } else {
      std::cout << (passed ? "ok   " : "FAIL ") << name;
      if (!passed && !detail.empty()) std::cout << " -- " << detail;
      std::cout << '\n';
    }
  }

  void equal(const std::string& name, const Poly2& lhs, const Poly2& rhs) {
    record(name, lhs == rhs,
           lhs == rhs ? "" : lhs.str() + " != " + rhs.str());
  }
};

void verify_oracle(VerifyContext& ctx, int n_max) {
  const int exhaustive_max = std::min(n_max, 5);
  for (int n = 0; n <= exhaustive_max; ++n)
    ctx.equal("full n=" + std::to_string(n) + " exhaustive == dp",
              count_exhaustive(Board::full(n)), count_dp(n));
  const auto full = recurrence_values(recurrence_full(), n_max);
  for (int n = 0; n <= n_max; ++n)
    ctx.equal("full n=" + std::to_string(n) + " dp == recurrence", count_dp(n),
              full[n]);

  for (int n = 0; n <= exhaustive_max; ++n)
    ctx.equal("unbreakable n=" + std::to_string(n) + " exhaustive == dp",
              count_unbreakable_exhaustive(n), count_unbreakable_dp(n));
  const auto unb = recurrence_values(recurrence_unbreakable(), n_max);
  for (int n = 0; n <= n_max; ++n)
    ctx.equal("unbreakable n=" + std::to_string(n) + " dp == recurrence",
              count_unbreakable_dp(n), unb[n]);

  const auto bricks = recurrence_values(recurrence_bricks(), n_max);
  const auto full_a0 =
      recurrence_values(specialize(recurrence_full(), Rational(0), std::nullopt),
                        n_max);
  for (int n = 0; n <= n_max; ++n) {
    const Poly2 dp = count_with_piece_weights(n, Poly2(), Poly2::var_b());
    ctx.equal("bricks n=" + std::to_string(n) + " dp == recurrence", dp, bricks[n]);
    ctx.equal("bricks n=" + std::to_string(n) + " recurrence == full at a=0",
              bricks[n], full_a0[n]);
  }

  for (int j = 1; j <= 5; ++j)
    for (int n = 1; n <= std::min(n_max, 3); ++n) {
      const std::string tag = "defect j=" + std::to_string(j) +
                              " n=" + std::to_string(n);
      const Poly2 exhaustive = count_defect_exhaustive(j, n);
      ctx.equal(tag + " exhaustive == dp", exhaustive, count_defect_dp(j, n));
      ctx.equal(tag + " exhaustive == system", exhaustive,
                iterate_system(matrix_full_system(), full_system_initial_vector(),
                               n)[j]);
    }
}

void verify_theorems(VerifyContext& ctx) {
  const auto P = [](const char* s) { return Poly2::parse(s); };

  // Displayed characteristic polynomial of the full system, x^0 first.
  const std::vector<Poly2> expected_full = {
      P("b^12"),
      P("-a^4*b^8+a^2*b^9-2*b^10"),
      P("-a^6*b^5-2*a^4*b^6-6*a^2*b^7-9*b^8"),
      P("2*a^6*b^3+10*a^4*b^4+26*a^2*b^5+8*b^6"),
      P("-a^6*b-6*a^4*b^2-6*a^2*b^3+7*b^4"),
      P("-a^4-7*a^2*b-6*b^2"),
      P("1")};
  const CharPoly full_char = charpoly(matrix_full_system());
  for (int k = 0; k <= 6; ++k)
    ctx.equal("charpoly(M) coefficient of x^" + std::to_string(k),
              full_char.coeffs[k], expected_full[k]);

  const RecurrenceSpec full = recurrence_full();
  const RecurrenceSpec derived =
      recurrence_from_charpoly(full_char, full.initial, full.valid_from);
  for (int i = 0; i < 6; ++i)
    ctx.equal("extracted coefficient " + std::to_string(i + 1), derived.coeffs[i],
              full.coeffs[i]);

  // x * (x^4 - (3a^2b+4b^2)x^3 + 4b^4x^2 + 3a^2b^5x - b^8)
  const std::vector<Poly2> expected_unb = {
      Poly2(),          P("-b^8"), P("3*a^2*b^5"), P("4*b^4"),
      P("-3*a^2*b-4*b^2"), P("1")};
  const CharPoly unb_char = charpoly(matrix_unbreakable_system());
  for (int k = 0; k <= 5; ++k)
    ctx.equal("charpoly(U) coefficient of x^" + std::to_string(k),
              unb_char.coeffs[k], expected_unb[k]);

  const CharPoly bricks_char = charpoly(matrix_bricks_system());
  const RecurrenceSpec bricks = recurrence_bricks();
  const RecurrenceSpec bricks_derived =
      recurrence_from_charpoly(bricks_char, bricks.initial, bricks.valid_from);
  for (int i = 0; i < 3; ++i)
    ctx.equal("bricks coefficient " + std::to_string(i + 1),
              bricks_derived.coeffs[i], bricks.coeffs[i]);

  for (int n = 2; n <= 5; ++n)
    ctx.equal("system-iterated full value n=" + std::to_string(n),
              iterate_system(matrix_full_system(), full_system_initial_vector(),
                             n)[0],
              full.initial[n]);
  ctx.equal("full relation already holds at n=6",
            iterate_system(matrix_full_system(), full_system_initial_vector(),
                           6)[0],
            eval_recurrence(full, 6));

  const RecurrenceSpec unb = recurrence_unbreakable();
  for (int n = 2; n <= 6; ++n) {
    Poly2 value = iterate_system(matrix_unbreakable_system(),
                                 unbreakable_system_initial_vector(), n)[0];
    if (n == 2) value += P("b^4");
    ctx.equal("restricted-system unbreakable value n=" + std::to_string(n),
              value, unb.initial[n]);
  }

  Poly2 combo;
  for (int i = 1; i <= 4; ++i) combo += unb.coeffs[i - 1] * unb.initial[6 - i];
  const Rational at_ones = combo.eval(1, 1);
  ctx.record("unbreakable relation does not hold at n=6 (85211 != 85210)",
             combo != unb.initial[6] && at_ones == 85211 &&
                 at_ones - unb.initial[6].eval(1, 1) == 1);

  bool closed_form = count_unbreakable_dp(1).substitute(Rational(0), std::nullopt) ==
                         P("2*b^2") &&
                     count_unbreakable_dp(2).substitute(Rational(0), std::nullopt) ==
                         P("5*b^4");
  for (int n = 3; n <= 20 && closed_form; ++n)
    closed_form = count_unbreakable_dp(n).substitute(Rational(0), std::nullopt) ==
                  Rational(4) * Poly2::var_b().pow(2 * n);
  ctx.record("bricks-only unbreakable closed form (n <= 20)", closed_form);
}

void verify_identities(VerifyContext& ctx, int n_max) {
  const auto describe = [](const IdentityReport& report) {
    return "identity " + std::to_string(report.identity_id) + " (" +
           report.params + ")";
  };
  const auto detail = [](const IdentityReport& report) {
    if (!report.first_failure) return std::string();
    return "at " + report.first_failure->params + ": " +
           report.first_failure->lhs.str() +
           " != " + report.first_failure->rhs.str();
  };

  IdentityOptions options;
  options.n_max = n_max;
  for (const IdentityReport& report : run_all_identities(options))
    ctx.record(describe(report), report.passed, detail(report));

  // Five reproducible integer specializations.
  std::mt19937 rng(8626);
  std::uniform_int_distribution<int> draw(-10, 10);
  for (int round = 0; round < 5; ++round) {
    int a = draw(rng);
    int b = draw(rng);
    while (b == 0) b = draw(rng);
    options.specialization = {{Rational(a), Rational(b)}};
    for (const IdentityReport& report : run_all_identities(options))
      ctx.record(describe(report), report.passed, detail(report));
  }
}

int run_verify(const std::string& scope, int n_max, bool as_json) {
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  VerifyContext ctx;
  ctx.as_json = as_json;

  if (scope == "oracle")
    verify_oracle(ctx, n_max);
  else if (scope == "theorems")
    verify_theorems(ctx);
  else if (scope == "identities")
    verify_identities(ctx, n_max);
  else
    throw UsageError("unknown scope '" + scope +
                     "' (expected identities, oracle, theorems)");

  if (as_json) {
    ordered_json record{{"command", "verify"},
                        {"params",
                         {{"scope", scope}, {"n_max", n_max}}},
                        {"checks", ctx.checks},
                        {"passed", ctx.all_passed}};
    std::cout << record.dump(2) << '\n';
  } else {
    std::cout << (ctx.all_passed ? "all checks passed" : "CHECKS FAILED")
              << '\n';
  }
  return ctx.all_passed ? kExitSuccess : kExitVerifyFailure;
}

// ---------------------------------------------------------------------------
// oeis

int run_oeis(const std::string& id, int count) {
  if (count < 1) throw UsageError("--count must be >= 1");

  std::vector<Integer> values;
  values.reserve(count);
  const auto from_spec = [&](const RecurrenceSpec& spec, const Rational& a,
                             const Rational& b) {
    for (const Poly2& v : recurrence_values(spec, count - 1))
      values.push_back(v.eval(a, b).get_num());
  };

  if (id == "A000045") {
    for (int n = 0; n < count; ++n)
      values.push_back(weighted_fibonacci(n - 1).eval(1, 1).get_num());
  } else if (id == "A030186") {
    from_spec(recurrence_2xn(), 1, 1);
  } else if (id == "A033516") {
    from_spec(recurrence_full(), 1, 1);
  } else if (id == "A006253") {
    from_spec(recurrence_bricks(), 0, 1);
  } else if (id == "unbreakable") {
    from_spec(recurrence_unbreakable(), 1, 1);
  } else {
    throw UsageError("unknown sequence id '" + id + "'");
  }

  for (int n = 0; n < count; ++n)
    std::cout << n << ' ' << values[n].get_str() << '\n';
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// tilings (debug dump)

int run_tilings(int n, int defect_j, int pos, int max_cells) {
  const Board board =
      defect_j == 0 ? Board::full(n) : Board::with_defect(defect_j, n, pos);
  const EnumerationLimit limit{max_cells};
  int total = 0;
  for_each_tiling(board, [&](const Tiling&) { ++total; }, limit);
  std::cout << "# " << total << " tilings\n";
  bool first = true;
  for_each_tiling(
      board,
      [&](const Tiling& t) {
        if (!first) std::cout << '\n';
        first = false;
        std::cout << format_tiling(t);
      },
      limit);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact colored cube-and-brick tiling counts for 2x2xn boards"};
  app.require_subcommand(1);

  CountRequest count_req;
  CLI::App* count = app.add_subcommand(
      "count", "Print counts for a family of boards");
  count->add_option("--family", count_req.family,
                    "full, unbreakable, bricks, or defect")
      ->check(CLI::IsMember({"full", "unbreakable", "bricks", "defect"}));
  count->add_option("--j", count_req.defect_j, "defect index 1..5");
  count->add_option("--n", count_req.n, "single board length");
  count->add_option("--range", count_req.range, "board lengths LO..HI");
  count->add_option("--a", count_req.a, "number of cube colors (integer)");
  count->add_option("--b", count_req.b, "number of brick colors (integer)");
  count->add_option("--backend", count_req.backend,
                    "exhaustive, dp, or recurrence")
      ->check(CLI::IsMember({"exhaustive", "dp", "recurrence"}));
  count->add_option("--format", count_req.format, "table, json, or bfile")
      ->check(CLI::IsMember({"table", "json", "bfile"}));

  std::string matrix_name = "M";
  std::string charpoly_format = "table";
  CLI::App* charpoly_cmd = app.add_subcommand(
      "charpoly", "Print the characteristic polynomial of a system matrix");
  charpoly_cmd->add_option("--matrix", matrix_name,
                           "M (full 6x6), U (unbreakable 5x5), or bricks (3x3)");
  charpoly_cmd->add_option("--format", charpoly_format, "table or json");

  std::string scope = "oracle";
  int n_max = 12;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a cross-check suite; exit 0 iff everything passes");
  verify->add_option("--scope", scope, "identities, oracle, or theorems");
  verify->add_option("--n-max", n_max, "largest index checked (default 12)");
  verify->add_flag("--json", verify_json, "structured JSON report");

  std::string oeis_id;
  int oeis_count = 10;
  CLI::App* oeis = app.add_subcommand(
      "oeis", "Emit b-file lines 'n a(n)' starting at offset 0");
  oeis->add_option("--id", oeis_id,
                   "A000045, A030186, A033516, A006253, or unbreakable")
      ->required();
  oeis->add_option("--count", oeis_count, "number of terms");

  int tilings_n = 1;
  int tilings_j = 0;
  int tilings_pos = 0;
  int tilings_max_cells = 20;
  CLI::App* tilings = app.add_subcommand(
      "tilings", "Dump every tiling of a small board, one piece per line");
  tilings->add_option("--n", tilings_n, "board length")->required();
  tilings->add_option("--j", tilings_j, "optional defect index 1..5");
  tilings->add_option("--pos", tilings_pos, "defect position");
  tilings->add_option("--max-cells", tilings_max_cells,
                      "exhaustive enumeration limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_req);
    if (charpoly_cmd->parsed()) return run_charpoly(matrix_name, charpoly_format);
    if (verify->parsed()) return run_verify(scope, n_max, verify_json);
    if (oeis->parsed()) return run_oeis(oeis_id, oeis_count);
    if (tilings->parsed())
      return run_tilings(tilings_n, tilings_j, tilings_pos, tilings_max_cells);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
