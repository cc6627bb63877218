// Python bindings. Structured values (covers, certificates, reports) cross the
// boundary as plain dicts/lists mirroring the JSON schemas, rationals as
// fractions.Fraction, so results compare exactly and round-trip through the CLI
// file formats unchanged.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tricover/constructions.hpp"
#include "tricover/json_io.hpp"
#include "tricover/lp.hpp"
#include "tricover/search.hpp"
#include "tricover/verify.hpp"

namespace py = pybind11;
using namespace tricover;

namespace {

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(to_text(j));
}

Json py_to_json(const py::object& obj) {
  auto dumped = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return Json::parse(dumped);
}

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(rational_to_string(r));
}

SearchConfig config_from(long long node_limit) {
  SearchConfig config;
  if (node_limit > 0) config.node_limit = node_limit;
  return config;
}

}  // namespace

PYBIND11_MODULE(_tricover, m) {
  m.doc() = "Exact fractional and integer hyperplane k-covers of the triangular grid T_d(n)";

  m.def(
      "point_count", [](int n, int d) { return point_count(GridShape(n, d)); }, py::arg("n"),
      py::arg("d"), "Number of grid points of T_d(n): C(n-1+d, d).");
  m.def(
      "enumerate_points",
      [](int n, int d) { return enumerate_points(GridShape(n, d)); }, py::arg("n"),
      py::arg("d"), "All grid points in ascending lexicographic order.");
  m.def(
      "candidate_hyperplanes",
      [](int n, int d, bool pruned) {
        Json j = Json::array();
        for (const auto& h : enumerate_candidate_hyperplanes(GridShape(n, d), pruned))
          j.push_back(to_json(h));
        return json_to_py(j);
      },
      py::arg("n"), py::arg("d"), py::arg("pruned") = true,
      "Canonical hyperplanes spanned by d affinely independent grid points; pruned "
      "drops hyperplanes whose covered set is dominated by another's.");

  m.def(
      "f_star",
      [](int n, int d) { return to_fraction(f_star(GridShape(n, d)).optimum); }, py::arg("n"),
      py::arg("d"), "Minimum total weight of a fractional cover, as an exact Fraction.");
  m.def(
      "f_star_solution",
      [](int n, int d) { return json_to_py(to_json(f_star(GridShape(n, d)))); }, py::arg("n"),
      py::arg("d"),
      "Full LP solution: optimum with an optimal fractional cover (primal) and a "
      "matching mass certificate (dual).");
  m.def(
      "f_star_closed_form_2d", [](int n) { return to_fraction(f_star_closed_form_2d(n)); },
      py::arg("n"), "Closed-form optimal fractional cover weight for T_2(n).");
  m.def(
      "slope_constant", [](int d, int k) { return to_fraction(slope_constant(d, k)); },
      py::arg("d"), py::arg("k"),
      "Leading coefficient C_{d,k} of the block construction's cardinality.");

  m.def(
      "f_int",
      [](int n, int d, int k, long long node_limit) {
        return json_to_py(to_json(f_int(GridShape(n, d), k, config_from(node_limit))));
      },
      py::arg("n"), py::arg("d"), py::arg("k"), py::arg("node_limit") = 0,
      "Minimum cardinality of an integer k-cover by branch and bound; 'proven' is "
      "false when the node budget ran out first.");
  m.def(
      "brute_force_cover",
      [](int n, int d, int k, long max_cardinality) -> py::object {
        auto cover = brute_force_cover(GridShape(n, d), k, max_cardinality);
        if (!cover) return py::none();
        return json_to_py(to_json(*cover));
      },
      py::arg("n"), py::arg("d"), py::arg("k"), py::arg("max_cardinality"),
      "Independent oracle: smallest k-cover of cardinality <= max_cardinality by "
      "exhaustive multiset enumeration, or None.");
  m.def(
      "greedy_cover",
      [](int n, int d, int k) { return json_to_py(to_json(greedy_cover(GridShape(n, d), k))); },
      py::arg("n"), py::arg("d"), py::arg("k"), "Deterministic greedy k-cover (upper bound).");

  m.def(
      "kcover_2d", [](int n, int k) { return json_to_py(to_json(kcover_2d(n, k))); },
      py::arg("n"), py::arg("k"), "Optimal integer k-cover of T_2(n) for k <= 4.");
  m.def(
      "block_cover",
      [](int n, int d, int k) { return json_to_py(to_json(block_cover(GridShape(n, d), k))); },
      py::arg("n"), py::arg("d"), py::arg("k"),
      "Block k-cover with cardinality slope_constant(d,k)*n + O(1).");
  m.def(
      "lifted_cover_2d", [](int n, int k) { return json_to_py(to_json(lifted_cover_2d(n, k))); },
      py::arg("n"), py::arg("k"), "Lifted k-cover of T_2(n).");
  m.def(
      "cover_k1", [](int n, int d) { return json_to_py(to_json(cover_k1_general(GridShape(n, d)))); },
      py::arg("n"), py::arg("d"), "Cardinality-n 1-cover.");
  m.def(
      "cover_k2", [](int n, int d) { return json_to_py(to_json(cover_k2_general(GridShape(n, d)))); },
      py::arg("n"), py::arg("d"), "2-cover of cardinality n + ceil(n/d).");
  m.def(
      "cover_k3", [](int n, int d) { return json_to_py(to_json(cover_k3_general(GridShape(n, d)))); },
      py::arg("n"), py::arg("d"), "3-cover of cardinality (d+1)*ceil(n/(d-1)), d >= 3.");
  m.def(
      "simplex_fractional_cover",
      [](int d) { return json_to_py(to_json(simplex_fractional_cover(d))); }, py::arg("d"),
      "The d+1 facets of T_d(2) at weight 1/d each (optimal).");
  m.def(
      "cover_333", [] { return json_to_py(to_json(cover_333())); },
      "Seven-plane fractional cover of T_3(3) of total weight 11/6.");
  m.def(
      "fractional_cover_2d", [](int n) { return json_to_py(to_json(fractional_cover_2d(n))); },
      py::arg("n"), "Optimal fractional line cover of T_2(n).");
  m.def(
      "mass_certificate_2d", [](int n) { return json_to_py(to_json(mass_certificate_2d(n))); },
      py::arg("n"), "Matching dual witness: total mass equals the optimum for T_2(n).");

  m.def(
      "verify_cover",
      [](const py::object& cover, int k) {
        return json_to_py(to_json(verify_cover(integer_cover_from_json(py_to_json(cover)), k)));
      },
      py::arg("cover"), py::arg("k"),
      "Check that every grid point lies on hyperplanes of total multiplicity >= k.");
  m.def(
      "verify_fractional_cover",
      [](const py::object& cover) {
        return json_to_py(
            to_json(verify_fractional_cover(fractional_cover_from_json(py_to_json(cover)))));
      },
      py::arg("cover"), "Check that every grid point collects total weight >= 1.");
  m.def(
      "verify_mass_certificate",
      [](const py::object& cert) {
        return json_to_py(
            to_json(verify_mass_certificate(mass_certificate_from_json(py_to_json(cert)))));
      },
      py::arg("certificate"),
      "Check single-point and per-hyperplane mass loads; a valid certificate's total "
      "is a certified lower bound on the fractional optimum.");

  m.def(
      "solve_restricted_ip",
      [](int n, int k) {
        auto r = solve_restricted_ip(n, k);
        py::dict out;
        out["optimum"] = r.optimum;
        out["alpha"] = r.alpha;
        out["beta"] = r.beta;
        out["gamma"] = r.gamma;
        return out;
      },
      py::arg("n"), py::arg("k"),
      "Restricted integer program over standard-line covers of T_2(n) with "
      "non-increasing multiplicities.");
  m.def(
      "scaled_dual_from_ip",
      [](const std::vector<long long>& alpha, const std::vector<long long>& beta,
         const std::vector<long long>& gamma, int n, int k) {
        return json_to_py(to_json(scaled_dual_from_ip(alpha, beta, gamma, n, k)));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("n"), py::arg("k"),
      "Scale a feasible restricted-IP point by 1/n into a fractional cover of T_2(k).");

  m.def(
      "check_duality_conjecture",
      [](int k, int n_min, int n_max, long long node_limit) {
        Json rows = Json::array();
        for (const auto& row : check_duality_conjecture(k, n_min, n_max, config_from(node_limit))) {
          rows.push_back(Json{{"n", row.n},
                              {"d", row.d},
                              {"k", row.k},
                              {"value", row.value},
                              {"proven", row.proven},
                              {"slope", rational_to_string(row.slope)},
                              {"residual", rational_to_string(row.residual)}});
        }
        return json_to_py(rows);
      },
      py::arg("k"), py::arg("n_min"), py::arg("n_max"), py::arg("node_limit") = 0,
      "Residual rows of f_int(n,2,k) against slope f*(k,2).");
  m.def(
      "check_d3_conjecture",
      [](int k, int n_min, int n_max, long long node_limit) {
        Json rows = Json::array();
        for (const auto& row : check_d3_conjecture(k, n_min, n_max, config_from(node_limit))) {
          rows.push_back(Json{{"n", row.n},
                              {"d", row.d},
                              {"k", row.k},
                              {"value", row.value},
                              {"proven", row.proven},
                              {"slope", rational_to_string(row.slope)},
                              {"residual", rational_to_string(row.residual)}});
        }
        return json_to_py(rows);
      },
      py::arg("k"), py::arg("n_min"), py::arg("n_max"), py::arg("node_limit") = 0,
      "Residual rows of f_int(n,3,k) against the dimension-3 slopes.");

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
}
