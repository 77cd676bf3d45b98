#pragma once

#include <Eigen/Dense>
#include <optional>

#include "multlab/common.hpp"

namespace multlab::schatten {

/// Dense complex matrix with explicit row/column index labels.
/// Entries are validated to be finite at construction; labels default to
/// 0..n-1 when not supplied.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(Eigen::MatrixXcd m);
  CMatrix(Eigen::MatrixXcd m, std::vector<std::int64_t> row_labels,
          std::vector<std::int64_t> col_labels);

  static CMatrix zero(Eigen::Index rows, Eigen::Index cols);

  const Eigen::MatrixXcd& mat() const { return m_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }
  const std::vector<std::int64_t>& row_labels() const { return row_labels_; }
  const std::vector<std::int64_t>& col_labels() const { return col_labels_; }

 private:
  void validate() const;

  Eigen::MatrixXcd m_;
  std::vector<std::int64_t> row_labels_, col_labels_;
};

/// p < 1 quasi-norm exponent choice: (tr|x|^p)^{1/p} (standard) or the
/// F-norm exponent (tr|x|^p)^{1/(1+p)}.
enum class PNormConvention { standard, paper_f };

/// A Schatten exponent: either a power p in (0, inf] or an Orlicz gauge
/// psi (continuous, nondecreasing, psi(0)=0, psi(t)>0 for t>0) with a
/// convexity flag deciding the norm/F-norm feasibility condition.
class Exponent {
 public:
  static Exponent power(double p);
  static Exponent infinity() { return power(std::numeric_limits<double>::infinity()); }
  static Exponent orlicz(std::function<double(double)> psi, bool convex);

  bool is_power() const { return !psi_; }
  bool is_infinite() const { return is_power() && std::isinf(p_); }
  double p() const;
  bool orlicz_convex() const { return convex_; }
  const std::function<double(double)>& psi() const;

 private:
  Exponent() = default;
  double p_ = 2.0;
  std::function<double(double)> psi_;
  bool convex_ = true;
};

struct SingularSpectrum {
  std::vector<double> values;  // nonincreasing, >= 0
};

/// Singular values, nonincreasing. Values below 1e-13 * sigma_1 are
/// clamped to zero to keep p < 1 sums stable.
SingularSpectrum singular_values(const CMatrix& a);

/// Raw helper on Eigen storage (same clamping).
Eigen::VectorXd singular_values_of(const Eigen::MatrixXcd& m);

/// Singular values only, via the Gram matrix of the smaller side. Faster
/// than a full SVD; used in inner optimization loops.
Eigen::VectorXd singular_values_fast(const Eigen::MatrixXcd& m);

/// Norm from a singular value list. trace_weight scales the trace (1/N for
/// normalized traces on group algebras).
double norm_from_spectrum(const Eigen::VectorXd& sv, const Exponent& e,
                          PNormConvention convention = PNormConvention::standard,
                          double trace_weight = 1.0);

double schatten_norm(const CMatrix& a, const Exponent& e,
                     PNormConvention convention = PNormConvention::standard);
double schatten_norm_of(const Eigen::MatrixXcd& m, const Exponent& e,
                        PNormConvention convention = PNormConvention::standard,
                        double trace_weight = 1.0);

/// sum_i psi(sigma_i / a), the feasibility functional of the Orlicz norm.
double orlicz_trace(const CMatrix& a, const std::function<double(double)>& psi,
                    double scale);

}  // namespace multlab::schatten
