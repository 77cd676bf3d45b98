#pragma once

#include "multlab/groupalg.hpp"

namespace multlab::multiplier {

using groupalg::BlockFourierElement;
using groupalg::Element;
using groupalg::FourierSeriesElement;
using groupalg::GroupModel;
using schatten::CMatrix;

/// A pattern I inside a rows x cols index rectangle.
struct Support {
  int rows = 0, cols = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted, unique

  Support() = default;
  Support(int r, int c, std::vector<std::pair<int, int>> p);
  static Support full(int r, int c);
  bool contains(int r, int c) const;
  std::size_t size() const { return pairs.size(); }
};

/// Complex coefficients on a support pattern; entrywise multiplication
/// symbol for matrices supported in the pattern.
class SchurSymbol {
 public:
  SchurSymbol() = default;
  SchurSymbol(Support supp, std::vector<Complex> values);
  static SchurSymbol from_entries(
      int rows, int cols, const std::vector<std::tuple<int, int, Complex>>& entries);
  static SchurSymbol constant(int rows, int cols, Complex value);

  const Support& support() const { return supp_; }
  const std::vector<Complex>& values() const { return vals_; }
  int rows() const { return supp_.rows; }
  int cols() const { return supp_.cols; }
  std::optional<Complex> at(int r, int c) const;
  Eigen::MatrixXcd dense() const;  // zeros off support
  SchurSymbol transpose() const;
  SchurSymbol scaled(Complex c) const;
  double max_abs() const;
  std::uint64_t hash() const;

 private:
  Support supp_;
  std::vector<Complex> vals_;
};

/// Coefficients phi_gamma on a spectrum domain Lambda inside a group.
/// Domain membership is explicit: a gamma may be in the domain with value
/// zero (indicator-style symbols need the distinction).
struct FourierSymbol {
  GroupModel group;
  std::map<Element, Complex> values;

  FourierSymbol(GroupModel g, std::map<Element, Complex> v);
  bool has(const Element& g) const;
  Complex at(const Element& g) const;
  std::uint64_t hash() const;
};

/// Finite atomic measure sum a_g delta_{theta_g} on the circle.
struct AtomicMeasure {
  std::vector<std::pair<double, Complex>> atoms;  // (angle in radians, weight)

  explicit AtomicMeasure(std::vector<std::pair<double, Complex>> a);
};

/// Entrywise product on the support. Rejects inputs with nonzero entries
/// off the support: relative multipliers are only defined there.
CMatrix schur_apply(const SchurSymbol& rho, const CMatrix& a);

/// Convenience variant that silently zeroes off-support input entries.
CMatrix schur_apply_truncating(const SchurSymbol& rho, const CMatrix& a);
Eigen::MatrixXcd schur_apply_dense(const SchurSymbol& rho, const Eigen::MatrixXcd& a);

FourierSeriesElement fourier_apply(const FourierSymbol& phi, const FourierSeriesElement& x);
BlockFourierElement fourier_apply(const FourierSymbol& phi, const BlockFourierElement& x);

/// phi -> Toeplitz Schur symbol on window^2: support {(i,j) : w_i w_j^{-1}
/// in Lambda}, value phi(w_i w_j^{-1}).
SchurSymbol toeplitz_transfer(const FourierSymbol& phi, const std::vector<Element>& window);

/// phi -> grid symbol: support {(i,j) : r_i c_j in Lambda}, value
/// phi(r_i c_j). Pairs with products outside Lambda are excluded.
SchurSymbol grid_transfer(const FourierSymbol& phi, const std::vector<Element>& rows,
                          const std::vector<Element>& cols);

/// Block-constant amplification: value at ((a,r),(b,c)) = rho(r,c), index
/// layout (a,r) -> a*rows + r. Finite truncation of the complete norm.
SchurSymbol amplify(const SchurSymbol& rho, int m);

/// phi_k = sum_g a_g e^{-i k theta_g} on the given integer domain.
FourierSymbol atomic_symbol(const AtomicMeasure& mu, const GroupModel& group,
                            const std::vector<Element>& domain);

/// sum_g |a_g|^p for 0 < p < 1.
double atomic_lp_mass(const AtomicMeasure& mu, double p);

}  // namespace multlab::multiplier
