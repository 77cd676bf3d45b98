#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multlab/classical.hpp"
#include "multlab/extension.hpp"
#include "multlab/lacunary.hpp"
#include "multlab/szego.hpp"

namespace py = pybind11;
using namespace multlab;

namespace {

using Coeffs = std::map<std::int64_t, Complex>;

groupalg::GroupModel make_group(std::int64_t cyclic_n) {
  // cyclic_n = 0 selects the integer lattice
  return cyclic_n > 0 ? groupalg::GroupModel::cyclic(cyclic_n)
                      : groupalg::GroupModel::lattice(1, 1);
}

groupalg::FourierSeriesElement make_element(const Coeffs& coeffs, std::int64_t cyclic_n) {
  std::map<groupalg::Element, Complex> c;
  for (const auto& [k, v] : coeffs) c[{k}] = v;
  return groupalg::FourierSeriesElement(make_group(cyclic_n), std::move(c));
}

multiplier::FourierSymbol make_symbol(const Coeffs& values, std::int64_t cyclic_n) {
  std::map<groupalg::Element, Complex> c;
  for (const auto& [k, v] : values) c[{k}] = v;
  return multiplier::FourierSymbol(make_group(cyclic_n), std::move(c));
}

multiplier::SchurSymbol symbol_from_dense(const Eigen::MatrixXcd& dense,
                                          const std::vector<std::pair<int, int>>& support) {
  const int rows = static_cast<int>(dense.rows());
  const int cols = static_cast<int>(dense.cols());
  std::vector<std::tuple<int, int, Complex>> entries;
  if (support.empty()) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) entries.emplace_back(r, c, dense(r, c));
  } else {
    for (const auto& [r, c] : support) entries.emplace_back(r, c, dense(r, c));
  }
  return multiplier::SchurSymbol::from_entries(rows, cols, entries);
}

py::dict estimate_to_dict(const normest::NormEstimate& est) {
  py::dict d;
  d["lower"] = est.lower;
  d["upper"] = est.upper ? py::object(py::float_(*est.upper)) : py::object(py::none());
  d["method"] = est.method;
  d["iterations"] = est.iterations;
  d["restarts"] = est.restarts;
  d["witness"] = est.witness;
  return d;
}

normest::AscentOptions make_opts(int restarts, std::uint64_t seed, int max_iters) {
  normest::AscentOptions o;
  o.restarts = restarts;
  o.seed = seed;
  o.max_iters = max_iters;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schur/Fourier multiplier transfer laboratory (C++ core)";
  m.attr("__version__") = kVersion;

  // --- singular values and norms ---------------------------------------
  m.def(
      "singular_values",
      [](const Eigen::MatrixXcd& a) {
        return schatten::singular_values_of(a);
      },
      py::arg("a"), "Singular values, nonincreasing.");

  m.def(
      "schatten_norm",
      [](const Eigen::MatrixXcd& a, double p, const std::string& convention) {
        auto conv = convention == "paper_f" ? schatten::PNormConvention::paper_f
                                            : schatten::PNormConvention::standard;
        return schatten::schatten_norm_of(a, schatten::Exponent::power(p), conv);
      },
      py::arg("a"), py::arg("p"), py::arg("convention") = "standard");

  m.def(
      "orlicz_norm",
      [](const Eigen::MatrixXcd& a, const std::function<double(double)>& psi, bool convex) {
        return schatten::schatten_norm_of(a, schatten::Exponent::orlicz(psi, convex));
      },
      py::arg("a"), py::arg("psi"), py::arg("convex") = true);

  m.def(
      "orlicz_trace",
      [](const Eigen::MatrixXcd& a, const std::function<double(double)>& psi, double scale) {
        return schatten::orlicz_trace(schatten::CMatrix(a), psi, scale);
      },
      py::arg("a"), py::arg("psi"), py::arg("scale"));

  // --- group algebra ----------------------------------------------------
  m.def(
      "lp_group_norm",
      [](const Coeffs& coeffs, std::int64_t cyclic_n, double p) {
        return groupalg::lp_group_norm(make_element(coeffs, cyclic_n),
                                       schatten::Exponent::power(p), std::nullopt);
      },
      py::arg("coeffs"), py::arg("cyclic_n"), py::arg("p"),
      "Exact circulant-realization norm on a cyclic group.");

  m.def(
      "lp_group_norm_windowed",
      [](const Coeffs& coeffs, double p, std::int64_t lo, std::int64_t hi) {
        return groupalg::lp_group_norm(make_element(coeffs, 0), schatten::Exponent::power(p),
                                       groupalg::interval(lo, hi));
      },
      py::arg("coeffs"), py::arg("p"), py::arg("lo"), py::arg("hi"));

  m.def(
      "regular_representation",
      [](std::int64_t cyclic_n, std::int64_t gamma) {
        auto g = groupalg::GroupModel::cyclic(cyclic_n);
        return groupalg::regular_representation(g, {gamma}, g.elements()).mat();
      },
      py::arg("cyclic_n"), py::arg("gamma"));

  m.def(
      "reiter_defect",
      [](std::int64_t support, std::int64_t gamma) {
        auto g = groupalg::GroupModel::lattice(1, 1);
        return groupalg::reiter_defect(
            groupalg::uniform_mean(g, groupalg::interval(0, support - 1)), {gamma});
      },
      py::arg("support"), py::arg("gamma"));

  // --- multipliers and transfers ----------------------------------------
  m.def(
      "toeplitz_transfer",
      [](const Coeffs& values, std::int64_t cyclic_n) {
        auto phi = make_symbol(values, cyclic_n);
        return multiplier::toeplitz_transfer(phi, phi.group.elements()).dense();
      },
      py::arg("values"), py::arg("cyclic_n"),
      "Dense Toeplitz symbol phi(r - c) over the full cyclic window.");

  m.def(
      "grid_transfer",
      [](const Coeffs& values, const std::vector<std::int64_t>& rows,
         const std::vector<std::int64_t>& cols) {
        auto phi = make_symbol(values, 0);
        std::vector<groupalg::Element> r, c;
        for (auto v : rows) r.push_back({v});
        for (auto v : cols) c.push_back({v});
        return multiplier::grid_transfer(phi, r, c).dense();
      },
      py::arg("values"), py::arg("rows"), py::arg("cols"));

  m.def(
      "amplify",
      [](const Eigen::MatrixXcd& dense, int mfold) {
        return multiplier::amplify(symbol_from_dense(dense, {}), mfold).dense();
      },
      py::arg("symbol"), py::arg("m"));

  m.def(
      "atomic_symbol",
      [](const std::vector<std::pair<double, Complex>>& atoms, std::int64_t lo,
         std::int64_t hi) {
        auto phi = multiplier::atomic_symbol(multiplier::AtomicMeasure(atoms),
                                             groupalg::GroupModel::lattice(1, 1),
                                             groupalg::interval(lo, hi));
        Coeffs out;
        for (const auto& [el, v] : phi.values) out[el[0]] = v;
        return out;
      },
      py::arg("atoms"), py::arg("lo"), py::arg("hi"));

  m.def(
      "atomic_lp_mass",
      [](const std::vector<std::pair<double, Complex>>& atoms, double p) {
        return multiplier::atomic_lp_mass(multiplier::AtomicMeasure(atoms), p);
      },
      py::arg("atoms"), py::arg("p"));

  // --- norm estimation ----------------------------------------------------
  m.def(
      "schur_multiplier_norm",
      [](const Eigen::MatrixXcd& dense, const std::vector<std::pair<int, int>>& support,
         double p, int restarts, std::uint64_t seed, int max_iters) {
        return estimate_to_dict(normest::schur_multiplier_norm(
            symbol_from_dense(dense, support), schatten::Exponent::power(p),
            make_opts(restarts, seed, max_iters)));
      },
      py::arg("symbol"), py::arg("support") = std::vector<std::pair<int, int>>{},
      py::arg("p") = 4.0, py::arg("restarts") = 20, py::arg("seed") = 0,
      py::arg("max_iters") = 5000);

  m.def(
      "fourier_multiplier_norm",
      [](const Coeffs& values, std::int64_t cyclic_n, double p, int restarts,
         std::uint64_t seed, int max_iters) {
        return estimate_to_dict(normest::fourier_multiplier_norm(
            make_symbol(values, cyclic_n), schatten::Exponent::power(p), std::nullopt,
            make_opts(restarts, seed, max_iters)));
      },
      py::arg("values"), py::arg("cyclic_n"), py::arg("p") = 4.0, py::arg("restarts") = 20,
      py::arg("seed") = 0, py::arg("max_iters") = 5000);

  m.def(
      "brute_oracle_norm",
      [](const Eigen::MatrixXcd& dense, const std::vector<std::pair<int, int>>& support,
         double p, int resolution) {
        return estimate_to_dict(normest::brute_oracle_norm(
            symbol_from_dense(dense, support), schatten::Exponent::power(p), resolution));
      },
      py::arg("symbol"), py::arg("support"), py::arg("p") = 4.0, py::arg("resolution") = 4);

  m.def(
      "unconditional_constant",
      [](int rows, int cols, double p, const std::string& mode, int restarts,
         std::uint64_t seed) {
        return estimate_to_dict(normest::unconditional_constant(
            multiplier::Support::full(rows, cols), schatten::Exponent::power(p),
            mode == "real_signs" ? normest::SignMode::real_signs
                                 : normest::SignMode::unimodular,
            make_opts(restarts, seed, 5000)));
      },
      py::arg("rows"), py::arg("cols"), py::arg("p") = 4.0, py::arg("mode") = "unimodular",
      py::arg("restarts") = 20, py::arg("seed") = 0);

  m.def(
      "transfer_inequality_check",
      [](const Coeffs& values, std::int64_t cyclic_n, double p, int restarts,
         std::uint64_t seed) {
        auto rep = normest::transfer_inequality_check(
            make_symbol(values, cyclic_n), schatten::Exponent::power(p), std::nullopt,
            make_opts(restarts, seed, 2000));
        py::dict d;
        d["fourier_lower"] = rep.fourier_lower;
        d["schur_lower"] = rep.schur_lower;
        d["inequality_ok"] = rep.inequality_ok;
        d["p2_equal"] = rep.p2_equal;
        return d;
      },
      py::arg("values"), py::arg("cyclic_n"), py::arg("p") = 4.0, py::arg("restarts") = 8,
      py::arg("seed") = 0);

  // --- Hilbert / Riesz ----------------------------------------------------
  m.def("hilbert_symbol",
        [](int n) { return classical::hilbert_symbol(n).dense(); }, py::arg("n"));
  m.def("riesz_symbol", [](int n) { return classical::riesz_symbol(n).dense(); },
        py::arg("n"));
  m.def(
      "hilbert_norm_formula",
      [](double p) {
        auto v = classical::hilbert_norm_formula(p);
        return py::make_tuple(v.value, v.certified);
      },
      py::arg("p"));
  m.def("cotlar_recursion", &classical::cotlar_recursion, py::arg("k"));
  m.def("riesz_l4_formula", &classical::riesz_l4_formula);
  m.def("riesz_lp_target", &classical::riesz_lp_target, py::arg("p"));
  m.def(
      "convergence_scan",
      [](const std::string& kind, double p, const std::vector<int>& sizes, int restarts,
         std::uint64_t seed) {
        auto rows = classical::convergence_scan(
            kind == "riesz" ? classical::ScanKind::riesz : classical::ScanKind::hilbert, p,
            sizes, make_opts(restarts, seed, 5000));
        py::list out;
        for (const auto& r : rows)
          out.append(py::dict(py::arg("n") = r.n, py::arg("lower") = r.lower,
                              py::arg("target") = r.target, py::arg("gap") = r.gap,
                              py::arg("seconds") = r.seconds));
        return out;
      },
      py::arg("kind"), py::arg("p"), py::arg("sizes"), py::arg("restarts") = 20,
      py::arg("seed") = 0);

  // --- truncation moments ---------------------------------------------
  m.def(
      "spectral_moment",
      [](const Coeffs& coeffs, int k) {
        return szego::spectral_moment(make_element(coeffs, 0), k)(0, 0);
      },
      py::arg("coeffs"), py::arg("k"), "Exact moment by walk sums on the integer lattice.");

  m.def(
      "szego_report",
      [](const Coeffs& coeffs, const std::vector<int>& windows, const std::vector<int>& orders) {
        auto y = make_element(coeffs, 0);
        groupalg::FolnerNet net{y.group, {}};
        for (int n : windows) net.sets.push_back(groupalg::interval(0, n - 1));
        auto rows = szego::szego_convergence_report(y, net, orders);
        py::list out;
        for (const auto& r : rows)
          out.append(py::dict(py::arg("window") = r.window, py::arg("k") = r.k,
                              py::arg("empirical") = r.empirical, py::arg("exact") = r.exact,
                              py::arg("abs_error") = r.abs_error, py::arg("bound") = r.bound));
        return out;
      },
      py::arg("coeffs"), py::arg("windows"), py::arg("orders"));

  m.def(
      "reiter_embedding_norm",
      [](const Coeffs& coeffs, int support, double p) {
        auto x = make_element(coeffs, 0);
        return szego::reiter_embedding_norm(
            x, groupalg::uniform_mean(x.group, groupalg::interval(0, support - 1)), p);
      },
      py::arg("coeffs"), py::arg("support"), py::arg("p"));

  // --- rank-one extension ----------------------------------------------
  m.def(
      "extend_rank_one",
      [](const std::vector<Complex>& x, const std::vector<Complex>& y,
         const std::vector<std::pair<int, int>>& support) {
        multiplier::Support supp(static_cast<int>(x.size()), static_cast<int>(y.size()),
                                 support);
        auto cert = extension::extend_rank_one(extension::RankOneSpec(x, y, supp));
        py::dict d;
        d["rho_tilde"] = cert.product.dense();
        d["bound"] = cert.bound;
        d["corrections"] = cert.corrections.size();
        return d;
      },
      py::arg("x"), py::arg("y"), py::arg("support"));

  m.def(
      "verify_extension",
      [](const std::vector<Complex>& x, const std::vector<Complex>& y,
         const std::vector<std::pair<int, int>>& support, int trials, std::uint64_t seed) {
        multiplier::Support supp(static_cast<int>(x.size()), static_cast<int>(y.size()),
                                 support);
        auto cert = extension::extend_rank_one(extension::RankOneSpec(x, y, supp));
        auto rep = extension::verify_certificate(cert, trials, seed);
        py::dict d;
        d["pass"] = rep.passed();
        d["bound"] = cert.bound;
        d["max_support_dev"] = rep.max_support_dev;
        d["worst_action_excess"] = rep.worst_action_excess;
        d["ascent_lower"] = rep.ascent_lower;
        return d;
      },
      py::arg("x"), py::arg("y"), py::arg("support"), py::arg("trials") = 50,
      py::arg("seed") = 0);

  // --- lacunary gadgets ---------------------------------------------------
  m.def(
      "greedy_sumset_select",
      [](const std::vector<std::int64_t>& R, const std::vector<std::int64_t>& C, int n) {
        std::vector<groupalg::Element> re, ce;
        for (auto v : R) re.push_back({v});
        for (auto v : C) ce.push_back({v});
        auto sel = lacunary::greedy_sumset_select(groupalg::GroupModel::lattice(1, 1), re, ce, n);
        std::vector<std::int64_t> rows, cols;
        for (const auto& e : sel.rows) rows.push_back(e[0]);
        for (const auto& e : sel.cols) cols.push_back(e[0]);
        return py::make_tuple(rows, cols, sel.candidates_inspected);
      },
      py::arg("rows"), py::arg("cols"), py::arg("n"));

  m.def(
      "skipped_block_sums",
      [](int n, double eps, const std::string& seq) {
        auto s = seq == "truncation" ? lacunary::ApproximatingSequence::truncation()
                                     : lacunary::ApproximatingSequence::fejer();
        auto res = lacunary::skipped_block_sums(s, lacunary::Stream::geometric(100, 100),
                                                lacunary::Stream::geometric(100, 100), n, eps);
        py::dict d;
        d["rows"] = res.rows;
        d["cols"] = res.cols;
        d["l_indices"] = res.l_indices;
        d["k_indices"] = res.k_indices;
        d["residuals"] = res.residuals;
        d["pass"] = res.all_pass;
        return d;
      },
      py::arg("n"), py::arg("eps") = 0.1, py::arg("seq") = "fejer");
}
