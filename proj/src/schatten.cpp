#include "multlab/schatten.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace multlab::schatten {

namespace {

constexpr double kSingularClamp = 1e-13;

std::vector<std::int64_t> iota_labels(Eigen::Index n) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Eigen::VectorXd clamp_spectrum(Eigen::VectorXd sv) {
  std::sort(sv.data(), sv.data() + sv.size(), std::greater<double>());
  if (sv.size() == 0) return sv;
  const double cutoff = kSingularClamp * sv[0];
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] < cutoff) sv[i] = 0.0;
  return sv;
}

}  // namespace

CMatrix::CMatrix(Eigen::MatrixXcd m)
    : m_(std::move(m)), row_labels_(iota_labels(m_.rows())), col_labels_(iota_labels(m_.cols())) {
  validate();
}

CMatrix::CMatrix(Eigen::MatrixXcd m, std::vector<std::int64_t> row_labels,
                 std::vector<std::int64_t> col_labels)
    : m_(std::move(m)), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (static_cast<Eigen::Index>(row_labels_.size()) != m_.rows() ||
      static_cast<Eigen::Index>(col_labels_.size()) != m_.cols())
    throw std::invalid_argument("CMatrix: label lengths do not match dimensions");
  validate();
}

CMatrix CMatrix::zero(Eigen::Index rows, Eigen::Index cols) {
  return CMatrix(Eigen::MatrixXcd::Zero(rows, cols));
}

void CMatrix::validate() const {
  if (!m_.allFinite()) throw std::invalid_argument("CMatrix: non-finite entry");
}

Exponent Exponent::power(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("Exponent: p must be positive");
  Exponent e;
  e.p_ = p;
  return e;
}

Exponent Exponent::orlicz(std::function<double(double)> psi, bool convex) {
  if (!psi) throw std::invalid_argument("Exponent: null gauge");
  // Spot-check the gauge axioms on a sample grid.
  if (std::abs(psi(0.0)) > 1e-14)
    throw std::invalid_argument("Exponent: psi(0) != 0");
  double prev = 0.0;
  for (double t : {1e-6, 1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 1e3, 1e6}) {
    double v = psi(t);
    if (!(v > 0.0)) throw std::invalid_argument("Exponent: psi must be positive for t > 0");
    if (v < prev - 1e-12 * std::max(1.0, prev))
      throw std::invalid_argument("Exponent: psi must be nondecreasing");
    prev = v;
  }
  Exponent e;
  e.psi_ = std::move(psi);
  e.convex_ = convex;
  return e;
}

double Exponent::p() const {
  if (!is_power()) throw std::logic_error("Exponent: not a power exponent");
  return p_;
}

const std::function<double(double)>& Exponent::psi() const {
  if (is_power()) throw std::logic_error("Exponent: not an Orlicz exponent");
  return psi_;
}

Eigen::VectorXd singular_values_of(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  Eigen::VectorXd sv;
  if (std::min(m.rows(), m.cols()) <= 32) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    if (svd.info() != Eigen::Success)
      throw std::runtime_error("singular_values: decomposition failed");
    sv = svd.singularValues();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    if (svd.info() != Eigen::Success)
      throw std::runtime_error("singular_values: decomposition failed");
    sv = svd.singularValues();
  }
  return clamp_spectrum(std::move(sv));
}

Eigen::VectorXd singular_values_fast(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  // Hermitian eigenvalues of the Gram matrix on the smaller side.
  Eigen::MatrixXcd gram;
  if (m.rows() <= m.cols())
    gram = m * m.adjoint();
  else
    gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("singular_values_fast: eigensolver failed");
  Eigen::VectorXd sv = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return clamp_spectrum(std::move(sv));
}

SingularSpectrum singular_values(const CMatrix& a) {
  Eigen::VectorXd sv = singular_values_of(a.mat());
  return SingularSpectrum{std::vector<double>(sv.data(), sv.data() + sv.size())};
}

namespace {

double orlicz_norm_from_sv(const Eigen::VectorXd& sv, const std::function<double(double)>& psi,
                           bool convex, double trace_weight) {
  double top = sv.size() ? sv[0] : 0.0;
  if (top == 0.0) return 0.0;
  auto feasible = [&](double a) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv[i] > 0.0) s += psi(sv[i] / a);
    s *= trace_weight;
    return convex ? (s <= 1.0) : (s <= a);
  };
  // Monotone bracket: grow/shrink geometrically until feasibility flips.
  double hi = top * std::max<double>(1.0, static_cast<double>(sv.size()) * trace_weight);
  for (int i = 0; i < 500 && !feasible(hi); ++i) hi *= 2.0;
  if (!feasible(hi)) throw std::runtime_error("orlicz norm: no feasible bracket");
  double lo = hi;
  for (int i = 0; i < 500 && feasible(lo / 2.0); ++i) lo /= 2.0;
  lo /= 2.0;  // infeasible (or underflowed)
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

double norm_from_spectrum(const Eigen::VectorXd& sv, const Exponent& e,
                          PNormConvention convention, double trace_weight) {
  if (sv.size() == 0) return 0.0;
  if (!e.is_power())
    return orlicz_norm_from_sv(sv, e.psi(), e.orlicz_convex(), trace_weight);
  const double p = e.p();
  if (std::isinf(p)) return sv[0];
  double s = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > 0.0) s += std::pow(sv[i], p);
  s *= trace_weight;
  if (p >= 1.0 || convention == PNormConvention::standard) return std::pow(s, 1.0 / p);
  return std::pow(s, 1.0 / (1.0 + p));
}

double schatten_norm(const CMatrix& a, const Exponent& e, PNormConvention convention) {
  return norm_from_spectrum(singular_values_of(a.mat()), e, convention, 1.0);
}

double schatten_norm_of(const Eigen::MatrixXcd& m, const Exponent& e,
                        PNormConvention convention, double trace_weight) {
  return norm_from_spectrum(singular_values_of(m), e, convention, trace_weight);
}

double orlicz_trace(const CMatrix& a, const std::function<double(double)>& psi, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("orlicz_trace: scale must be positive");
  Eigen::VectorXd sv = singular_values_of(a.mat());
  double s = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) s += psi(sv[i] / scale);
  return s;
}

}  // namespace multlab::schatten
