#include "multlab/classical.hpp"

#include <chrono>
#include <cmath>

namespace multlab::classical {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

SchurSymbol TriangularSymbol::to_schur() const {
  if (n < 1) throw std::invalid_argument("TriangularSymbol: size must be >= 1");
  std::vector<std::tuple<int, int, Complex>> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.emplace_back(i, j, i <= j ? z : w);
  return SchurSymbol::from_entries(n, n, entries);
}

SchurSymbol hilbert_symbol(int n) {
  if (n < 1) throw std::invalid_argument("hilbert_symbol: size must be >= 1");
  std::vector<std::tuple<int, int, Complex>> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.emplace_back(i, j, i >= j ? 1.0 : -1.0);
  return SchurSymbol::from_entries(n, n, entries);
}

SchurSymbol riesz_symbol(int n) {
  if (n < 1) throw std::invalid_argument("riesz_symbol: size must be >= 1");
  std::vector<std::tuple<int, int, Complex>> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.emplace_back(i, j, i >= j ? 1.0 : 0.0);
  return SchurSymbol::from_entries(n, n, entries);
}

AnalyticValue hilbert_norm_formula(double p) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("hilbert_norm_formula: need 1 < p < infinity");
  double q = std::max(p, p / (p - 1.0));
  AnalyticValue v;
  v.effective_p = q;
  v.value = 1.0 / std::tan(kPi / (2.0 * q));
  double l = std::log2(q);
  v.certified = std::abs(l - std::round(l)) < 1e-12;
  return v;
}

double cotlar_recursion(int k) {
  if (k < 1) throw std::invalid_argument("cotlar_recursion: k must be >= 1");
  if (k > 60) throw std::invalid_argument("cotlar_recursion: k too large");
  double u = 1.0;  // the exponent-2 value
  for (int i = 1; i < k; ++i) u = u + std::sqrt(u * u + 1.0);
  // Half-angle identity cross-check: cot(t/2) = cot t + sqrt(cot^2 t + 1).
  double target = 1.0 / std::tan(kPi / std::pow(2.0, k + 1));
  if (std::abs(u - target) > 1e-12 * std::max(1.0, std::abs(target)))
    throw std::runtime_error("cotlar_recursion: half-angle identity check failed");
  return u;
}

double riesz_l4_formula() { return std::sqrt(2.0); }

double riesz_lp_target(double p) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("riesz_lp_target: need 1 < p < infinity");
  return 1.0 / std::sin(kPi / p);
}

namespace {

/// Toeplitz witnesses that gradient ascent rarely finds from random
/// starts: boundary values of the sector maps ((1+z)/(1-z))^alpha, whose
/// transforms are pointwise proportional to them, plus signed power
/// kernels. Both have slowly decaying diagonals.
std::vector<Eigen::MatrixXcd> structured_toeplitz_starts(int n) {
  constexpr double pi = 3.14159265358979323846;
  std::vector<Eigen::MatrixXcd> starts;
  const int samples = 16 * n;
  for (double alpha : {0.10, 0.18, 0.2499}) {
    std::vector<Complex> coeff(2 * n - 1, Complex(0, 0));
    for (int j = 0; j < samples; ++j) {
      double th = 2.0 * pi * (j + 0.5) / samples - pi;
      double v = std::pow(std::abs(std::tan(th / 2.0)), -alpha) * (th >= 0 ? 1.0 : -1.0);
      for (int k = -(n - 1); k <= n - 1; ++k)
        coeff[k + n - 1] += v * std::exp(Complex(0, -k * th)) / static_cast<double>(samples);
    }
    Eigen::MatrixXcd x(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) x(r, c) = coeff[r - c + n - 1];
    starts.push_back(std::move(x));
  }
  for (double beta : {0.6, 0.8}) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (r != c)
          x(r, c) = (r > c ? 1.0 : -1.0) * std::pow(std::abs(r - c), -beta);
    starts.push_back(std::move(x));
  }
  return starts;
}

}  // namespace

std::vector<ScanRow> convergence_scan(ScanKind kind, double p, const std::vector<int>& sizes,
                                      const AscentOptions& opts) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw std::invalid_argument("convergence_scan: sizes must be increasing");
  const double target =
      kind == ScanKind::hilbert ? hilbert_norm_formula(p).value : riesz_lp_target(p);
  std::vector<ScanRow> rows;
  AscentOptions local = opts;
  if (local.hops == 0) local.hops = 2;
  Eigen::MatrixXcd prev_witness;
  for (int n : sizes) {
    auto t0 = std::chrono::steady_clock::now();
    SchurSymbol sym = kind == ScanKind::hilbert ? hilbert_symbol(n) : riesz_symbol(n);
    local.extra_starts = opts.extra_starts;
    for (auto& x : structured_toeplitz_starts(n)) local.extra_starts.push_back(std::move(x));
    if (prev_witness.size() != 0) {
      // The previous witness embeds top-left: the symbol restricts, so the
      // scan lower bounds are nondecreasing by construction.
      Eigen::MatrixXcd pad = Eigen::MatrixXcd::Zero(n, n);
      pad.block(0, 0, prev_witness.rows(), prev_witness.cols()) = prev_witness;
      local.extra_starts.push_back(std::move(pad));
    }
    normest::NormEstimate est =
        normest::schur_multiplier_norm(sym, schatten::Exponent::power(p), local);
    prev_witness = est.witness;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back({n, est.lower, target, target - est.lower, secs});
  }
  return rows;
}

}  // namespace multlab::classical
