#include "multlab/normest.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace multlab::normest {

namespace {

using schatten::norm_from_spectrum;
using schatten::singular_values_fast;
using schatten::singular_values_of;

constexpr std::uint64_t kDefaultSeed = 0x6d756c746c6162ull;

/// One input coordinate of the maximization problem: a matrix position, a
/// symbol value, and the free coefficient group the position belongs to.
/// Toeplitz-constrained problems put a whole diagonal into one group.
struct ProblemEntry {
  int r = 0, c = 0;
  Complex rho{0, 0};
  std::size_t group = 0;
};

struct AscentProblem {
  int rows = 0, cols = 0;
  std::size_t ngroups = 0;
  std::vector<ProblemEntry> entries;
  bool free_phases = false;  // optimize e^{i theta} factors per entry
};

struct EngineStart {
  Eigen::MatrixXcd x;           // may be empty: random start
  std::vector<double> theta;    // empty: zeros
};

struct EngineResult {
  double value = 0.0;
  Eigen::MatrixXcd witness;
  std::vector<double> theta;
  long iters = 0;
};

Eigen::MatrixXcd build_input(const AscentProblem& p, const std::vector<Complex>& coeff) {
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(p.rows, p.cols);
  for (const auto& e : p.entries) x(e.r, e.c) = coeff[e.group];
  return x;
}

Eigen::MatrixXcd build_output(const AscentProblem& p, const std::vector<Complex>& coeff,
                              const std::vector<double>& theta) {
  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(p.rows, p.cols);
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    const auto& e = p.entries[i];
    Complex factor = e.rho;
    if (p.free_phases) factor *= std::exp(Complex(0, theta[i]));
    y(e.r, e.c) = factor * coeff[e.group];
  }
  return y;
}

double spectrum_norm(const Eigen::MatrixXcd& m, const Exponent& e, PNormConvention conv,
                     bool accurate) {
  return norm_from_spectrum(accurate ? singular_values_of(m) : singular_values_fast(m), e,
                            conv, 1.0);
}

struct ThinSVD {
  Eigen::MatrixXcd u, v;
  Eigen::VectorXd s;
};

/// Thin SVD via the Gram matrix of the smaller side; much faster than
/// Jacobi for the sizes the ascent loop sees. Directions with negligible
/// singular values are zeroed, which the gradient weights tolerate.
ThinSVD thin_svd(const Eigen::MatrixXcd& y) {
  ThinSVD out;
  if (std::min(y.rows(), y.cols()) <= 6) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.u = svd.matrixU();
    out.v = svd.matrixV();
    out.s = svd.singularValues();
    return out;
  }
  const bool tall = y.rows() >= y.cols();
  Eigen::MatrixXcd gram = tall ? (y.adjoint() * y).eval() : (y * y.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const Eigen::Index k = gram.rows();
  out.s.resize(k);
  Eigen::MatrixXcd w(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {  // eigenvalues come ascending
    out.s[i] = std::sqrt(std::max(0.0, es.eigenvalues()[k - 1 - i]));
    w.col(i) = es.eigenvectors().col(k - 1 - i);
  }
  const double cutoff = out.s.size() ? 1e-12 * out.s[0] : 0.0;
  if (tall) {
    out.v = w;
    out.u = y * w;
    for (Eigen::Index i = 0; i < k; ++i)
      out.u.col(i) = out.s[i] > cutoff ? (out.u.col(i) / out.s[i]).eval()
                                       : Eigen::VectorXcd::Zero(y.rows()).eval();
  } else {
    out.u = w;
    out.v = y.adjoint() * w;
    for (Eigen::Index i = 0; i < k; ++i)
      out.v.col(i) = out.s[i] > cutoff ? (out.v.col(i) / out.s[i]).eval()
                                       : Eigen::VectorXcd::Zero(y.cols()).eval();
  }
  return out;
}

/// True gradient (or a subgradient at nonsmooth points) of the norm at y:
/// U diag(w) V^H. The weights are exact so that gradients of different
/// norms can be combined on a consistent scale.
Eigen::MatrixXcd norm_gradient(const Eigen::MatrixXcd& y, const Exponent& e,
                               double current_norm) {
  ThinSVD svd = thin_svd(y);
  const Eigen::MatrixXcd& u = svd.u;
  const Eigen::MatrixXcd& v = svd.v;
  const Eigen::VectorXd& sv = svd.s;
  const double top = sv.size() ? sv[0] : 0.0;
  if (top <= 0.0) return Eigen::MatrixXcd::Zero(y.rows(), y.cols());

  Eigen::VectorXd w = Eigen::VectorXd::Zero(sv.size());
  if (e.is_power()) {
    const double p = e.p();
    if (std::isinf(p)) {
      // Average the dyads of the near-maximal cluster; smooths crossings.
      int k = 0;
      while (k < sv.size() && sv[k] >= top * (1.0 - 1e-8)) ++k;
      for (int i = 0; i < k; ++i) w[i] = 1.0 / k;
    } else {
      const double norm = current_norm > 0 ? current_norm : top;
      for (Eigen::Index i = 0; i < sv.size(); ++i) {
        double s = sv[i] / norm;
        if (s <= 1e-13)
          w[i] = (p < 1.0) ? 1e6 : 0.0;
        else
          w[i] = std::min(std::pow(s, p - 1.0), 1e6);
      }
    }
  } else {
    // Implicit differentiation of the feasibility condition defining the
    // Orlicz norm a: d a / d sigma_i = psi'(s_i) / (sum_j psi'(s_j) s_j
    // [+ a in the F-norm case]), with s_i = sigma_i / a.
    const auto& psi = e.psi();
    const double a = current_norm > 0 ? current_norm : top;
    Eigen::VectorXd dpsi(sv.size());
    double denom = e.orlicz_convex() ? 0.0 : a;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      double s = sv[i] / a;
      double h = 1e-6 * std::max(1.0, s);
      dpsi[i] = std::max(0.0, (psi(s + h) - psi(std::max(0.0, s - h))) / (2 * h));
      denom += dpsi[i] * s;
    }
    if (denom <= 0) denom = 1.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) w[i] = dpsi[i] / denom;
  }
  return u * w.asDiagonal() * v.adjoint();
}

EngineResult ascend_one(const AscentProblem& prob, const Exponent& e,
                        const AscentOptions& opts, std::uint64_t restart_seed,
                        const EngineStart& start) {
  const std::size_t n = prob.ngroups;
  Rng rng(restart_seed);
  std::vector<Complex> coeff(n);
  std::vector<double> theta(prob.free_phases ? prob.entries.size() : 0, 0.0);

  if (start.x.size() != 0) {
    // Project the start onto the free-coefficient structure (group means).
    std::vector<double> count(n, 0.0);
    for (const auto& en : prob.entries) {
      coeff[en.group] += start.x(en.r, en.c);
      count[en.group] += 1.0;
    }
    for (std::size_t g = 0; g < n; ++g)
      if (count[g] > 0) coeff[g] /= count[g];
    if (prob.free_phases && !start.theta.empty()) theta = start.theta;
  } else {
    for (std::size_t g = 0; g < n; ++g) coeff[g] = rng.cgauss();
    if (prob.free_phases)
      for (auto& t : theta) t = 6.283185307179586 * rng.uniform();
  }

  const PNormConvention conv = opts.convention;
  auto input_norm = [&](const std::vector<Complex>& c) {
    return spectrum_norm(build_input(prob, c), e, conv, false);
  };

  double nx = input_norm(coeff);
  if (!(nx > 0)) {
    for (std::size_t g = 0; g < n; ++g) coeff[g] = rng.cgauss();
    nx = input_norm(coeff);
    if (!(nx > 0)) return {};
  }
  for (auto& c : coeff) c /= nx;

  long iters = 0;

  // Projected gradient climb on the unit sphere of inputs; mutates the
  // coefficients in place and returns the reached objective value.
  auto climb = [&](std::vector<Complex>& c, std::vector<double>& th) {
    Eigen::MatrixXcd y = build_output(prob, c, th);
    double f = spectrum_norm(y, e, conv, false);
    double eta = 0.3;
    int stall = 0;
    for (long it = 0; it < opts.max_iters; ++it, ++iters) {
      // Gradient of the ratio ||rho o X|| / ||X||: the numerator part
      // minus f times the input-norm part. Ascending the numerator alone
      // stalls where its gradient is mostly radial.
      Eigen::MatrixXcd dy = norm_gradient(y, e, f);
      Eigen::MatrixXcd dx = norm_gradient(build_input(prob, c), e, 1.0);
      std::vector<Complex> gc(n, Complex(0, 0));
      std::vector<double> gt(th.size(), 0.0);
      for (std::size_t i = 0; i < prob.entries.size(); ++i) {
        const auto& en = prob.entries[i];
        Complex factor = en.rho;
        if (prob.free_phases) factor *= std::exp(Complex(0, th[i]));
        Complex dval = dy(en.r, en.c);
        gc[en.group] += std::conj(factor) * dval - f * dx(en.r, en.c);
        if (prob.free_phases)
          gt[i] = (std::conj(dval) * Complex(0, 1) * factor * c[en.group]).real();
      }
      double gnorm = 0.0;
      for (const auto& g : gc) gnorm += std::norm(g);
      for (double g : gt) gnorm += g * g;
      if (gnorm < 1e-300) break;

      bool accepted = false;
      for (int ls = 0; ls < 30; ++ls) {
        std::vector<Complex> c2 = c;
        std::vector<double> t2 = th;
        for (std::size_t g = 0; g < n; ++g) c2[g] += eta * gc[g];
        for (std::size_t i = 0; i < t2.size(); ++i) t2[i] += eta * gt[i];
        double nx2 = input_norm(c2);
        if (nx2 > 0) {
          for (auto& cc : c2) cc /= nx2;
          Eigen::MatrixXcd y2 = build_output(prob, c2, t2);
          double f2 = spectrum_norm(y2, e, conv, false);
          if (f2 > f) {
            double gain = (f2 - f) / std::max(f2, 1e-300);
            c = std::move(c2);
            th = std::move(t2);
            y = std::move(y2);
            f = f2;
            eta = std::min(eta * 1.3, 1e3);
            accepted = true;
            if (gain < opts.rel_tol) {
              if (++stall >= 3) it = opts.max_iters;
            } else {
              stall = 0;
            }
            break;
          }
        }
        eta *= 0.5;
        if (eta < 1e-14) break;
      }
      if (!accepted) break;
    }
    return f;
  };

  double best_f = climb(coeff, theta);
  std::vector<Complex> best_c = coeff;
  std::vector<double> best_t = theta;

  // Basin hops: perturb the best point and re-climb.
  for (int hop = 0; hop < opts.hops; ++hop) {
    std::vector<Complex> c = best_c;
    std::vector<double> th = best_t;
    for (auto& cc : c) cc += 0.35 * rng.cgauss();
    for (auto& t : th) t += 0.5 * rng.gauss();
    double nx2 = input_norm(c);
    if (!(nx2 > 0)) continue;
    for (auto& cc : c) cc /= nx2;
    double f = climb(c, th);
    if (f > best_f) {
      best_f = f;
      best_c = c;
      best_t = th;
    }
  }

  EngineResult res;
  res.witness = build_input(prob, best_c);
  res.theta = best_t;
  res.iters = iters;
  res.value = best_f;
  return res;
}

struct EngineOutput {
  EngineResult best;
  long total_iters = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
};

EngineOutput run_engine(const AscentProblem& prob, const Exponent& e,
                        const AscentOptions& opts, std::uint64_t problem_hash,
                        std::vector<EngineStart> structured) {
  for (const auto& x : opts.extra_starts)
    if (x.rows() == prob.rows && x.cols() == prob.cols)
      structured.push_back(EngineStart{x, {}});

  const std::uint64_t seed0 =
      hash_mix(opts.seed ? opts.seed : kDefaultSeed, problem_hash);
  const int total = static_cast<int>(structured.size()) + std::max(0, opts.restarts);
  std::vector<EngineResult> slots(total);
  parallel_for(total, opts.threads, [&](int i) {
    EngineStart start;
    if (i < static_cast<int>(structured.size())) start = structured[i];
    slots[i] = ascend_one(prob, e, opts, hash_mix(seed0, static_cast<std::uint64_t>(i) + 1),
                          start);
  });

  EngineOutput out;
  out.seed = seed0;
  out.restarts = total;
  for (const auto& r : slots) {
    out.total_iters += r.iters;
    if (r.value > out.best.value) out.best = r;
  }
  return out;
}

/// Accurate final evaluation: normalized witness and its reproducible
/// objective value.
void finalize(NormEstimate& est, const AscentProblem& prob, const Exponent& e,
              const AscentOptions& opts, const EngineResult& best) {
  if (best.witness.size() == 0) return;
  Eigen::MatrixXcd x = best.witness;
  double nx = spectrum_norm(x, e, opts.convention, true);
  if (!(nx > 0)) return;
  x /= nx;
  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(prob.rows, prob.cols);
  for (std::size_t i = 0; i < prob.entries.size(); ++i) {
    const auto& en = prob.entries[i];
    Complex factor = en.rho;
    if (prob.free_phases) factor *= std::exp(Complex(0, best.theta[i]));
    y(en.r, en.c) = factor * x(en.r, en.c);
  }
  est.lower = spectrum_norm(y, e, opts.convention, true);
  est.witness = std::move(x);
}

AscentProblem schur_problem(const SchurSymbol& rho, bool free_phases = false) {
  AscentProblem p;
  p.rows = rho.rows();
  p.cols = rho.cols();
  p.free_phases = free_phases;
  const auto& pairs = rho.support().pairs;
  const auto& vals = rho.values();
  p.ngroups = pairs.size();
  p.entries.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    p.entries.push_back({pairs[i].first, pairs[i].second, vals[i], i});
  return p;
}

}  // namespace

NormEstimate schur_multiplier_norm(const SchurSymbol& rho, const Exponent& e,
                                   const AscentOptions& opts) {
  NormEstimate est;
  est.seed = hash_mix(opts.seed ? opts.seed : kDefaultSeed, rho.hash());
  if (rho.support().size() == 0) {
    est.method = "empty";
    est.upper = 0.0;
    return est;
  }

  // Exact on the Hilbert-Schmidt class: the symbol acts diagonally on the
  // elementary-matrix basis.
  if (e.is_power() && e.p() == 2.0) {
    const auto& vals = rho.values();
    std::size_t arg = 0;
    for (std::size_t i = 1; i < vals.size(); ++i)
      if (std::abs(vals[i]) > std::abs(vals[arg])) arg = i;
    est.lower = std::abs(vals[arg]);
    est.upper = est.lower;
    est.method = "exact-hs";
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    w(rho.support().pairs[arg].first, rho.support().pairs[arg].second) = 1.0;
    est.witness = std::move(w);
    return est;
  }

  // Positive semidefinite symbols on the operator norm: exact value is the
  // largest diagonal entry, attained on the matching diagonal unit when the
  // support contains it.
  std::optional<double> psd_upper;
  if (e.is_power() && e.is_infinite() && rho.rows() == rho.cols()) {
    Eigen::MatrixXcd b = rho.dense();
    if ((b - b.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, rho.max_abs())) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b, Eigen::EigenvaluesOnly);
      if (es.info() == Eigen::Success &&
          es.eigenvalues().minCoeff() >= -1e-10 * std::max(1.0, rho.max_abs())) {
        int arg = 0;
        for (int i = 1; i < rho.rows(); ++i)
          if (b(i, i).real() > b(arg, arg).real()) arg = i;
        psd_upper = b(arg, arg).real();
        if (rho.support().contains(arg, arg)) {
          est.lower = *psd_upper;
          est.upper = psd_upper;
          est.method = "exact-psd";
          Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
          w(arg, arg) = 1.0;
          est.witness = std::move(w);
          return est;
        }
      }
    }
  }

  AscentProblem prob = schur_problem(rho);
  // An elementary matrix at the largest symbol value is always a valid
  // input, so max |rho_q| is a structural floor for the estimate.
  std::vector<EngineStart> structured;
  {
    const auto& vals = rho.values();
    std::size_t arg = 0;
    for (std::size_t i = 1; i < vals.size(); ++i)
      if (std::abs(vals[i]) > std::abs(vals[arg])) arg = i;
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    w(rho.support().pairs[arg].first, rho.support().pairs[arg].second) = 1.0;
    structured.push_back(EngineStart{std::move(w), {}});
  }
  EngineOutput out = run_engine(prob, e, opts, rho.hash(), std::move(structured));
  est.method = "ascent";
  est.iterations = out.total_iters;
  est.restarts = out.restarts;
  est.upper = psd_upper;
  finalize(est, prob, e, opts, out.best);
  return est;
}

NormEstimate fourier_multiplier_norm(const FourierSymbol& phi, const Exponent& e,
                                     const std::optional<std::vector<Element>>& window,
                                     const AscentOptions& opts) {
  std::vector<Element> w;
  if (!window.has_value()) {
    if (phi.group.kind() != groupalg::GroupModel::Kind::cyclic)
      throw std::invalid_argument("fourier_multiplier_norm: full domain needs a cyclic group");
    w = phi.group.elements();
  } else {
    w = *window;
  }
  if (w.empty()) throw std::invalid_argument("fourier_multiplier_norm: empty window");

  NormEstimate est;
  est.seed = hash_mix(opts.seed ? opts.seed : kDefaultSeed, phi.hash());

  if (e.is_power() && e.p() == 2.0) {
    // Parseval: the norm is the largest |phi_gamma|.
    double m = 0.0;
    for (const auto& [g, v] : phi.values) m = std::max(m, std::abs(v));
    est.lower = m;
    est.upper = m;
    est.method = "exact-parseval";
    return est;
  }

  // Group the window positions by the diagonal w_i w_j^{-1}; each diagonal
  // carries one free Fourier coefficient. The normalized traces on both
  // sides of the ratio cancel, so the plain Schatten ratio is ascended.
  AscentProblem prob;
  prob.rows = prob.cols = static_cast<int>(w.size());
  std::map<Element, std::size_t> group_of;
  for (int i = 0; i < prob.rows; ++i)
    for (int j = 0; j < prob.cols; ++j) {
      Element g = phi.group.compose(w[i], phi.group.inverse(w[j]));
      if (!phi.has(g)) continue;
      auto [it, inserted] = group_of.emplace(g, group_of.size());
      prob.entries.push_back({i, j, phi.at(g), it->second});
    }
  prob.ngroups = group_of.size();
  if (prob.entries.empty()) {
    est.method = "empty";
    est.upper = 0.0;
    return est;
  }

  EngineOutput out = run_engine(prob, e, opts, phi.hash(), {});
  est.method = window.has_value() ? "ascent-windowed" : "ascent-cyclic";
  est.iterations = out.total_iters;
  est.restarts = out.restarts;
  finalize(est, prob, e, opts, out.best);
  return est;
}

NormEstimate brute_oracle_norm(const SchurSymbol& rho, const Exponent& e, int resolution) {
  const std::size_t k = rho.support().size();
  if (k > 4) throw std::invalid_argument("brute_oracle_norm: support too large (max 4 entries)");
  if (resolution < 1) throw std::invalid_argument("brute_oracle_norm: resolution must be >= 1");
  NormEstimate est;
  est.method = "grid-oracle";
  if (k == 0) {
    est.upper = 0.0;
    return est;
  }

  const int nmag = resolution + 1;          // magnitudes 0..resolution over [0,1]
  const int nph = 4 * resolution;           // phases, full circle
  const auto& pairs = rho.support().pairs;

  std::vector<int> mag(k, 0), ph(k, 0);
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  Eigen::MatrixXcd best_x;
  double best = 0.0;

  // Global phase invariance: the first entry's phase stays 0.
  std::vector<int> ph_count(k, nph);
  ph_count[0] = 1;

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == k) {
      bool all_zero = true;
      for (std::size_t i = 0; i < k; ++i)
        if (mag[i] != 0) all_zero = false;
      if (all_zero) return;
      for (std::size_t i = 0; i < k; ++i) {
        double m = static_cast<double>(mag[i]) / resolution;
        double a = 6.283185307179586 * ph[i] / nph;
        x(pairs[i].first, pairs[i].second) = m * std::exp(Complex(0, a));
      }
      double nx = norm_from_spectrum(singular_values_of(x), e, PNormConvention::standard, 1.0);
      if (nx <= 0) return;
      double ny = norm_from_spectrum(
          singular_values_of(multiplier::schur_apply_dense(rho, x)), e,
          PNormConvention::standard, 1.0);
      if (ny / nx > best) {
        best = ny / nx;
        best_x = x / nx;
      }
      return;
    }
    for (mag[idx] = 0; mag[idx] < nmag; ++mag[idx]) {
      const int phases = mag[idx] == 0 ? 1 : ph_count[idx];
      for (ph[idx] = 0; ph[idx] < phases; ++ph[idx]) rec(idx + 1);
    }
  };
  rec(0);

  est.lower = best;
  est.witness = std::move(best_x);
  return est;
}

NormEstimate amplified_norm(const SchurSymbol& rho, const Exponent& e, int m,
                            const AscentOptions& opts) {
  if (m < 1) throw std::invalid_argument("amplified_norm: m must be >= 1");
  if (m == 1) return schur_multiplier_norm(rho, e, opts);
  SchurSymbol amp = multiplier::amplify(rho, m);
  AscentOptions inner = opts;

  // Base witness, replicated block-diagonally: the amplified symbol acts
  // on each diagonal block separately, so the base ratio is preserved and
  // the estimate cannot drop below the scalar one.
  AscentOptions base_opts = opts;
  base_opts.restarts = std::max(2, opts.restarts / 2);
  NormEstimate base = schur_multiplier_norm(rho, e, base_opts);
  if (base.witness.size() != 0) {
    Eigen::MatrixXcd rep = Eigen::MatrixXcd::Zero(amp.rows(), amp.cols());
    for (int b = 0; b < m; ++b)
      rep.block(b * rho.rows(), b * rho.cols(), rho.rows(), rho.cols()) = base.witness;
    inner.extra_starts.push_back(std::move(rep));
    Eigen::MatrixXcd pad = Eigen::MatrixXcd::Zero(amp.rows(), amp.cols());
    pad.block(0, 0, rho.rows(), rho.cols()) = base.witness;
    inner.extra_starts.push_back(std::move(pad));
  }
  NormEstimate est = schur_multiplier_norm(amp, e, inner);
  est.method = "ascent-amplified";
  return est;
}

NormEstimate unconditional_constant(const Support& pattern, const Exponent& e, SignMode mode,
                                    const AscentOptions& opts) {
  if (pattern.size() == 0) throw std::invalid_argument("unconditional_constant: empty pattern");

  if (mode == SignMode::real_signs) {
    if (pattern.size() > 16)
      throw std::invalid_argument("unconditional_constant: pattern too large for enumeration");
    const std::size_t k = pattern.size();
    NormEstimate best;
    std::vector<double> best_phases;
    // Global sign flip leaves the norm unchanged: first sign stays +1.
    const std::uint64_t count = std::uint64_t{1} << (k - 1);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      std::vector<Complex> vals(k);
      std::vector<double> ph(k, 0.0);
      for (std::size_t i = 0; i < k; ++i) {
        bool flip = i > 0 && ((bits >> (i - 1)) & 1);
        vals[i] = flip ? -1.0 : 1.0;
        ph[i] = flip ? 3.14159265358979323846 : 0.0;
      }
      NormEstimate est = schur_multiplier_norm(SchurSymbol(pattern, vals), e, opts);
      if (est.lower > best.lower) {
        best = est;
        best_phases = ph;
      }
    }
    best.method = "sign-enumeration";
    best.upper.reset();
    best.phases = std::move(best_phases);
    return best;
  }

  SchurSymbol ones(pattern, std::vector<Complex>(pattern.size(), Complex(1, 0)));
  AscentProblem prob = schur_problem(ones, /*free_phases=*/true);

  std::vector<EngineStart> structured;
  // Discrete-Fourier phase patterns are the classical extremal candidates
  // on a full square grid; seed them with their matching inputs.
  if (pattern.rows == pattern.cols &&
      pattern.size() == static_cast<std::size_t>(pattern.rows) * pattern.cols) {
    const int n = pattern.rows;
    Eigen::MatrixXcd dft(n, n), ones_m = Eigen::MatrixXcd::Ones(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dft(i, j) = std::exp(Complex(0, 6.283185307179586 * i * j / n));
    std::vector<double> th_pos(pattern.size()), th_neg(pattern.size());
    for (std::size_t q = 0; q < pattern.pairs.size(); ++q) {
      auto [i, j] = pattern.pairs[q];
      th_pos[q] = 6.283185307179586 * ((static_cast<long long>(i) * j) % n) / n;
      th_neg[q] = -th_pos[q];
    }
    structured.push_back(EngineStart{ones_m, th_pos});
    structured.push_back(EngineStart{dft, th_neg});
  }

  EngineOutput out = run_engine(prob, e, opts, ones.hash() ^ 0x756e69ull, std::move(structured));
  NormEstimate est;
  est.method = "phase-ascent";
  est.iterations = out.total_iters;
  est.restarts = out.restarts;
  est.seed = out.seed;
  finalize(est, prob, e, opts, out.best);
  est.phases = out.best.theta;
  return est;
}

TransferReport transfer_inequality_check(const FourierSymbol& phi, const Exponent& e,
                                         const std::optional<std::vector<Element>>& window,
                                         const AscentOptions& opts,
                                         const std::vector<int>& amplifications) {
  TransferReport rep;
  NormEstimate f = fourier_multiplier_norm(phi, e, window, opts);
  rep.fourier_lower = f.lower;

  std::vector<Element> w = window.has_value() ? *window : phi.group.elements();
  SchurSymbol transferred = multiplier::toeplitz_transfer(phi, w);
  AscentOptions schur_opts = opts;
  if (f.witness.size() != 0) schur_opts.extra_starts.push_back(f.witness);
  NormEstimate s = schur_multiplier_norm(transferred, e, schur_opts);
  rep.schur_lower = s.lower;

  for (int m : amplifications)
    rep.amplified_lowers.push_back(amplified_norm(transferred, e, m, schur_opts).lower);

  rep.inequality_ok = rep.fourier_lower <= rep.schur_lower + rep.tolerance;
  if (e.is_power() && e.p() == 2.0)
    rep.p2_equal = std::abs(rep.fourier_lower - rep.schur_lower) <= 1e-10;
  return rep;
}

}  // namespace multlab::normest
