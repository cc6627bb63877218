// tricover: exact fractional/integer hyperplane k-covers of the triangular grid.
// Subcommands: fstar, fint, construct, certify, verify, sweep.
// Exit codes: 0 success, 1 invalid arguments, 2 verification failed,
//             3 node budget exhausted (result unproven).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tricover/constructions.hpp"
#include "tricover/json_io.hpp"
#include "tricover/lp.hpp"
#include "tricover/search.hpp"
#include "tricover/verify.hpp"

namespace {

using namespace tricover;

struct Args {
  int n = 0, d = 0, k = 0;
  int nmin = 1, nmax = 0;
  long long nodes = 0;  // 0: library default
  bool decimal = false;
  std::string family, in_path, conjecture;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

SearchConfig search_config(const Args& a) {
  SearchConfig config;
  if (a.nodes > 0) config.node_limit = a.nodes;
  return config;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Json& j) { std::cout << to_text(j); }

int run_fstar(const Args& a) {
  JsonOptions opts{a.decimal};
  emit(to_json(f_star(GridShape(a.n, a.d)), opts));
  return 0;
}

int run_fint(const Args& a) {
  JsonOptions opts{a.decimal};
  SearchResult result = f_int(GridShape(a.n, a.d), a.k, search_config(a));
  emit(to_json(result, opts));
  return result.proven ? 0 : 3;
}

int run_construct(const Args& a) {
  JsonOptions opts{a.decimal};
  const std::string& f = a.family;
  auto need = [&](bool n, bool d, bool k) {
    if (n) require(a.n >= 1, "construct --family " + f + " needs --n >= 1");
    if (d) require(a.d >= 1, "construct --family " + f + " needs --d >= 1");
    if (k) require(a.k >= 1, "construct --family " + f + " needs --k >= 1");
  };
  if (f == "kcover2d") {
    need(true, false, true);
    emit(to_json(kcover_2d(a.n, a.k), opts));
  } else if (f == "block") {
    need(true, true, true);
    emit(to_json(block_cover(GridShape(a.n, a.d), a.k), opts));
  } else if (f == "lift") {
    need(true, false, true);
    emit(to_json(lifted_cover_2d(a.n, a.k), opts));
  } else if (f == "k1") {
    need(true, true, false);
    emit(to_json(cover_k1_general(GridShape(a.n, a.d)), opts));
  } else if (f == "k2") {
    need(true, true, false);
    emit(to_json(cover_k2_general(GridShape(a.n, a.d)), opts));
  } else if (f == "k3") {
    need(true, true, false);
    emit(to_json(cover_k3_general(GridShape(a.n, a.d)), opts));
  } else if (f == "simplex") {
    need(false, true, false);
    emit(to_json(simplex_fractional_cover(a.d), opts));
  } else if (f == "cover333") {
    emit(to_json(cover_333(), opts));
  } else if (f == "frac2d") {
    need(true, false, false);
    emit(to_json(fractional_cover_2d(a.n), opts));
  } else if (f == "mass2d") {
    need(true, false, false);
    emit(to_json(mass_certificate_2d(a.n), opts));
  } else {
    throw std::invalid_argument("unknown construct family '" + f + "'");
  }
  return 0;
}

int run_certify(const Args& a) {
  JsonOptions opts{a.decimal};
  MassCertificate cert = mass_certificate_from_json(read_json_file(a.in_path));
  VerificationReport report = verify_mass_certificate(cert);
  emit(to_json(report, opts));
  return report.valid ? 0 : 2;
}

int run_verify(const Args& a, bool k_given) {
  JsonOptions opts{a.decimal};
  Json j = read_json_file(a.in_path);
  VerificationReport report;
  if (j.contains("weights")) {
    report = verify_fractional_cover(fractional_cover_from_json(j));
  } else if (j.contains("multiplicities")) {
    IntegerCover cover = integer_cover_from_json(j);
    report = verify_cover(cover, k_given ? a.k : cover.k);
  } else {
    throw std::invalid_argument(
        "'" + a.in_path +
        "' is neither a fractional cover (weights) nor an integer cover "
        "(multiplicities); for mass certificates use `certify`");
  }
  emit(to_json(report, opts));
  return report.valid ? 0 : 2;
}

int run_sweep(const Args& a) {
  require(a.k >= 1, "sweep needs --k >= 1");
  require(a.nmax >= a.nmin && a.nmin >= 1, "sweep needs 1 <= --nmin <= --nmax");
  SearchConfig config = search_config(a);
  std::vector<ConjectureRow> rows;
  if (a.conjecture == "duality") {
    rows = check_duality_conjecture(a.k, a.nmin, a.nmax, config);
  } else if (a.conjecture == "d3") {
    rows = check_d3_conjecture(a.k, a.nmin, a.nmax, config);
  } else if (a.conjecture == "mega") {
    require(a.d >= 1, "sweep --conjecture mega needs --d >= 1");
    Rational slope = slope_constant(a.d, a.k);
    for (int n = a.nmin; n <= a.nmax; ++n) {
      SearchResult r = f_int(GridShape(n, a.d), a.k, config);
      ConjectureRow row;
      row.n = n;
      row.d = a.d;
      row.k = a.k;
      row.value = r.optimum;
      row.proven = r.proven;
      row.slope = slope;
      row.residual = Rational(row.value) - slope * n;
      rows.push_back(row);
    }
  } else {
    throw std::invalid_argument("unknown conjecture '" + a.conjecture +
                                "' (expected duality, d3 or mega)");
  }
  std::cout << conjecture_csv(rows);

  bool all_proven = true, first = true;
  Rational lo, hi;
  for (const auto& row : rows) {
    all_proven = all_proven && row.proven;
    if (first || row.residual < lo) lo = row.residual;
    if (first || row.residual > hi) hi = row.residual;
    first = false;
  }
  if (!rows.empty())
    std::cerr << "residual range: [" << rational_to_string(lo) << ", " << rational_to_string(hi)
              << "]" << (all_proven ? "" : " (some rows unproven)") << "\n";
  return all_proven ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperplane k-covers of the triangular grid T_d(n)"};
  app.require_subcommand(1);
  Args a;

  auto add_decimal = [&](CLI::App* sub) {
    sub->add_flag("--decimal", a.decimal, "render rationals as decimal approximations");
  };

  CLI::App* fstar = app.add_subcommand("fstar", "minimum fractional cover weight (exact LP)");
  fstar->add_option("--n", a.n, "points per edge")->required();
  fstar->add_option("--d", a.d, "dimension")->required();
  add_decimal(fstar);

  CLI::App* fint = app.add_subcommand("fint", "minimum integer k-cover size (branch and bound)");
  fint->add_option("--n", a.n, "points per edge")->required();
  fint->add_option("--d", a.d, "dimension")->required();
  fint->add_option("--k", a.k, "cover multiplicity")->required();
  fint->add_option("--nodes", a.nodes, "node budget (default 10^7)");
  add_decimal(fint);

  CLI::App* construct = app.add_subcommand("construct", "emit a named cover/certificate as JSON");
  construct
      ->add_option("--family", a.family,
                   "kcover2d | block | lift | k1 | k2 | k3 | simplex | cover333 | frac2d | mass2d")
      ->required();
  construct->add_option("--n", a.n, "points per edge");
  construct->add_option("--d", a.d, "dimension");
  construct->add_option("--k", a.k, "cover multiplicity");
  add_decimal(construct);

  CLI::App* certify = app.add_subcommand("certify", "check a mass certificate lower bound");
  certify->add_option("--in", a.in_path, "MassCertificate JSON file")->required();
  add_decimal(certify);

  CLI::App* verify = app.add_subcommand("verify", "check a fractional or integer cover");
  verify->add_option("--in", a.in_path, "cover JSON file")->required();
  verify->add_option("--k", a.k, "coverage demand (default: the file's k)");
  add_decimal(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "conjecture residual table as CSV");
  sweep->add_option("--conjecture", a.conjecture, "duality | d3 | mega")->required();
  sweep->add_option("--k", a.k, "cover multiplicity")->required();
  sweep->add_option("--nmax", a.nmax, "largest n")->required();
  sweep->add_option("--nmin", a.nmin, "smallest n (default 1)");
  sweep->add_option("--d", a.d, "dimension (mega only)");
  sweep->add_option("--nodes", a.nodes, "node budget per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 0 covers --help and friends
  }

  try {
    if (*fstar) return run_fstar(a);
    if (*fint) return run_fint(a);
    if (*construct) return run_construct(a);
    if (*certify) return run_certify(a);
    if (*verify) return run_verify(a, verify->count("--k") > 0);
    if (*sweep) return run_sweep(a);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
