#include "multlab/extension.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace multlab::extension {

namespace {
constexpr double kTol = 1e-12;

Complex phase_root(Complex z) {
  // principal square root of the phase: z = |z| t^2
  if (std::abs(z) == 0.0) return Complex(1, 0);
  return std::exp(Complex(0, std::arg(z) / 2.0));
}
}  // namespace

RankOneSpec::RankOneSpec(std::vector<Complex> xs, std::vector<Complex> ys, Support supp)
    : x(std::move(xs)), y(std::move(ys)), support(std::move(supp)) {
  if (support.pairs.empty()) throw std::invalid_argument("RankOneSpec: empty support");
  if (support.rows != static_cast<int>(x.size()) ||
      support.cols != static_cast<int>(y.size()))
    throw std::invalid_argument("RankOneSpec: universe sizes do not match x/y lengths");
}

Eigen::Matrix2cd Lemma82::reconstructed() const {
  return weight_plus * (col_plus * row_plus) + weight_minus * (col_minus * row_minus);
}

Lemma82 lemma82_decompose(Complex z, Complex w) {
  Lemma82 d;
  d.t = phase_root(z);
  d.u = phase_root(w);
  d.weight_plus = (std::abs(z) + std::abs(w)) / 2.0;
  d.weight_minus = (std::abs(z) - std::abs(w)) / 2.0;
  const Complex tc = std::conj(d.t), uc = std::conj(d.u);
  d.col_plus << tc * d.u, d.t * uc;
  d.col_minus << tc * d.u, -d.t * uc;
  d.row_plus << tc * uc, d.t * d.u;
  d.row_minus << tc * uc, -d.t * d.u;
  d.norm = std::max(std::abs(z), std::abs(w));

  Eigen::Matrix2cd expected;
  expected << std::conj(z), w, std::conj(w), z;
  if ((d.reconstructed() - expected).cwiseAbs().maxCoeff() > kTol * std::max(1.0, d.norm))
    throw std::runtime_error("lemma82_decompose: reconstruction check failed");
  return d;
}

ExtensionCertificate extend_rank_one(const RankOneSpec& spec) {
  const int nrows = spec.support.rows;
  const int ncols = spec.support.cols;

  // Column pruning: zero y_c columns carry only zero target values, and the
  // extension is zero there. Rows with no support pair in a retained column
  // are carried through the construction with an inherited column index.
  std::vector<int> retained_cols;
  for (int c = 0; c < ncols; ++c)
    if (std::abs(spec.y[c]) > 0.0) retained_cols.push_back(c);

  ExtensionCertificate cert{spec,
                            SchurSymbol(),
                            {},
                            {},
                            SchurSymbol(),
                            0.0,
                            {},
                            {},
                            {},
                            {}};
  for (const auto& [r, c] : spec.support.pairs)
    cert.bound = std::max(cert.bound, std::abs(spec.x[r] * spec.y[c]));

  // Sort rows by |x| and retained columns by |y|, nonincreasing, stable.
  std::vector<int> row_order(nrows);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::stable_sort(row_order.begin(), row_order.end(), [&](int a, int b) {
    return std::abs(spec.x[a]) > std::abs(spec.x[b]);
  });
  std::vector<int> col_order = retained_cols;
  std::stable_sort(col_order.begin(), col_order.end(), [&](int a, int b) {
    return std::abs(spec.y[a]) > std::abs(spec.y[b]);
  });
  cert.row_order = row_order;
  cert.col_order = col_order;

  const int n = nrows;
  const int m = static_cast<int>(col_order.size());

  if (m == 0) {
    // Everything prunes away: the zero matrix extends the zero data.
    cert.base = SchurSymbol::constant(nrows, ncols, 0.0);
    cert.product = cert.base;
    return cert;
  }

  std::vector<int> col_pos(ncols, -1);  // original col -> sorted position
  for (int j = 0; j < m; ++j) col_pos[col_order[j]] = j;
  std::vector<int> row_pos(nrows, -1);
  for (int i = 0; i < n; ++i) row_pos[row_order[i]] = i;

  // Minimal sorted column index of a support pair in each sorted row.
  constexpr int kNone = std::numeric_limits<int>::max();
  std::vector<int> min_col(n, kNone);
  for (const auto& [r, c] : spec.support.pairs) {
    if (col_pos[c] < 0) continue;
    int i = row_pos[r];
    min_col[i] = std::min(min_col[i], col_pos[c]);
  }

  // c_r = min over rows at or above r; rows above the first supported row
  // inherit the first supported row's column and x value, which keeps
  // every base entry below the bound.
  int first_supported = 0;
  while (first_supported < n && min_col[first_supported] == kNone) ++first_supported;
  if (first_supported == n)
    throw std::logic_error("extend_rank_one: no supported rows after pruning");

  std::vector<int> c_of_row(n, 0);
  std::vector<Complex> x_eff(n);
  int running = kNone;
  for (int i = 0; i < n; ++i) {
    if (min_col[i] != kNone) running = std::min(running == kNone ? min_col[i] : running,
                                                min_col[i]);
    if (i < first_supported) {
      c_of_row[i] = min_col[first_supported];
      x_eff[i] = spec.x[row_order[first_supported]];
    } else {
      c_of_row[i] = running;
      x_eff[i] = spec.x[row_order[i]];
    }
  }
  // Rows above the first supported one share its c_r, so c_of_row stays
  // nonincreasing across the seam.
  for (int i = 1; i < n; ++i)
    if (c_of_row[i] > c_of_row[i - 1])
      throw std::logic_error("extend_rank_one: c_r is not nonincreasing");

  // r_c = least sorted row with c_r <= c.
  std::vector<int> r_of_col(m, n);
  for (int c = 0; c < m; ++c)
    for (int i = 0; i < n; ++i)
      if (c_of_row[i] <= c) {
        r_of_col[c] = i;
        break;
      }
  cert.col_of_row = c_of_row;
  cert.row_of_col = r_of_col;

  auto sorted_y = [&](int j) { return spec.y[col_order[j]]; };

  // Base: pairwise equal columns x_r y_{c_r} on the full rectangle
  // (original indices; pruned columns are zero).
  Eigen::MatrixXcd base_m = Eigen::MatrixXcd::Zero(nrows, ncols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      base_m(row_order[i], col_order[j]) = x_eff[i] * sorted_y(c_of_row[i]);

  // Corrections: for each adjacent sorted column pair (c, c+1), the ratio
  // y_{c+1}/y_c on rows >= r_c x cols > c, its conjugate on rows < r_c x
  // cols <= c, and 1 elsewhere. Each has norm max(|ratio|, 1) = 1.
  Eigen::MatrixXcd prod_m = base_m;
  for (int c = 0; c + 1 < m; ++c) {
    Complex ratio = sorted_y(c + 1) / sorted_y(c);
    cert.correction_zw.emplace_back(ratio, Complex(1, 0));
    Eigen::MatrixXcd corr = Eigen::MatrixXcd::Ones(nrows, ncols);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        if (i < r_of_col[c] && j <= c)
          corr(row_order[i], col_order[j]) = std::conj(ratio);
        else if (i >= r_of_col[c] && j > c)
          corr(row_order[i], col_order[j]) = ratio;
      }
    prod_m.array() *= corr.array();
    std::vector<std::tuple<int, int, Complex>> entries;
    for (int r = 0; r < nrows; ++r)
      for (int cc = 0; cc < ncols; ++cc) entries.emplace_back(r, cc, corr(r, cc));
    cert.corrections.push_back(SchurSymbol::from_entries(nrows, ncols, entries));
  }

  auto to_symbol = [&](const Eigen::MatrixXcd& mm) {
    std::vector<std::tuple<int, int, Complex>> entries;
    for (int r = 0; r < nrows; ++r)
      for (int cc = 0; cc < ncols; ++cc) entries.emplace_back(r, cc, mm(r, cc));
    return SchurSymbol::from_entries(nrows, ncols, entries);
  };
  cert.base = to_symbol(base_m);
  cert.product = to_symbol(prod_m);

  // Construction invariants, checked before returning the certificate.
  for (const auto& [r, c] : spec.support.pairs) {
    Complex want = spec.x[r] * spec.y[c];
    Complex got = prod_m(r, c);
    if (std::abs(want - got) > kTol * std::max(1.0, cert.bound))
      throw std::logic_error("extend_rank_one: extension does not agree on the support");
  }
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c) {
      bool lhs = r_of_col[c] <= i;
      bool rhs = c_of_row[i] <= c;
      if (lhs != rhs)
        throw std::logic_error("extend_rank_one: index inversion equivalence failed");
    }
  for (const auto& [zz, ww] : cert.correction_zw)
    if (std::abs(zz) > 1.0 + kTol)
      throw std::logic_error("extend_rank_one: correction ratio exceeds 1");
  return cert;
}

VerifyReport verify_certificate(const ExtensionCertificate& cert, int trials,
                                std::uint64_t seed, const AscentOptions& opts) {
  VerifyReport rep;
  const RankOneSpec& spec = cert.spec;
  const Eigen::MatrixXcd prod = cert.product.dense();

  // (i) agreement with the specified values on the support
  rep.max_support_dev = 0.0;
  for (const auto& [r, c] : spec.support.pairs)
    rep.max_support_dev =
        std::max(rep.max_support_dev, std::abs(prod(r, c) - spec.x[r] * spec.y[c]));
  rep.support_ok = rep.max_support_dev <= 1e-12 * std::max(1.0, cert.bound);

  // (ii) each correction is a two-value pattern of norm <= 1
  rep.max_correction_norm = 0.0;
  for (const auto& [z, w] : cert.correction_zw)
    rep.max_correction_norm = std::max(rep.max_correction_norm, lemma82_decompose(z, w).norm);
  rep.corrections_ok = rep.max_correction_norm <= 1.0 + 1e-12;

  // entrywise product identity: base composed with the corrections
  Eigen::MatrixXcd recomposed = cert.base.dense();
  for (const auto& corr : cert.corrections) recomposed.array() *= corr.dense().array();
  rep.max_product_dev = (recomposed - prod).cwiseAbs().maxCoeff();
  rep.product_ok = rep.max_product_dev <= 1e-12 * std::max(1.0, cert.bound);

  // (iii) random-trial operator-norm ceiling
  Rng rng(hash_mix(seed ? seed : 0x657874ull, cert.product.hash()));
  rep.worst_action_excess = -1e300;
  const schatten::Exponent op = schatten::Exponent::infinity();
  for (int t = 0; t < trials; ++t) {
    Eigen::MatrixXcd a(spec.support.rows, spec.support.cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.cgauss();
    double na = schatten::singular_values_of(a)[0];
    double nact = schatten::singular_values_of(prod.cwiseProduct(a))[0];
    rep.worst_action_excess = std::max(rep.worst_action_excess, nact - cert.bound * na);
  }
  rep.action_ok = trials == 0 || rep.worst_action_excess <= 1e-8;

  // (iv) the restriction to the support attains the bound (an elementary
  // matrix at the largest specified entry witnesses it).
  std::vector<std::tuple<int, int, Complex>> restricted;
  for (const auto& [r, c] : spec.support.pairs)
    restricted.emplace_back(r, c, prod(r, c));
  SchurSymbol restriction =
      SchurSymbol::from_entries(spec.support.rows, spec.support.cols, restricted);
  AscentOptions ascent_opts = opts;
  if (ascent_opts.restarts > 8) ascent_opts.restarts = 8;
  if (ascent_opts.max_iters > 800) ascent_opts.max_iters = 800;
  ascent_opts.hops = 0;
  normest::NormEstimate est = normest::schur_multiplier_norm(restriction, op, ascent_opts);
  rep.ascent_lower = est.lower;
  rep.lower_ok = est.lower >= cert.bound - 1e-6;
  return rep;
}

}  // namespace multlab::extension
