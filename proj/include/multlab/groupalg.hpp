#pragma once

#include <map>
#include <optional>

#include "multlab/schatten.hpp"

namespace multlab::groupalg {

using schatten::CMatrix;
using schatten::Exponent;
using schatten::PNormConvention;

/// A group element as a coordinate vector: one coordinate for cyclic
/// groups and Z, d coordinates for Z^d windows.
using Element = std::vector<std::int64_t>;

inline Element zel(std::int64_t v) { return Element{v}; }

/// Concrete discrete group realizations. `cyclic(N)` is Z_N with exact
/// arithmetic mod N. `lattice(d, radius)` is Z^d: arithmetic is exact in
/// the ambient group, while `elements()` enumerates only the finite box
/// window [-radius, radius]^d used for truncations.
class GroupModel {
 public:
  enum class Kind { cyclic, lattice };

  static GroupModel cyclic(std::int64_t n);
  static GroupModel lattice(int dim, std::int64_t radius);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t radius() const { return radius_; }

  Element identity() const { return Element(rank_, 0); }
  Element normal(Element g) const;
  Element compose(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool contains(const Element& a) const { return static_cast<int>(a.size()) == rank_; }
  std::vector<Element> elements() const;

  /// Injective packing of elements into int64 labels (for matrix index
  /// labels); inverse of unkey.
  std::int64_t key(const Element& a) const;
  Element unkey(std::int64_t k) const;

  bool operator==(const GroupModel& o) const {
    return kind_ == o.kind_ && rank_ == o.rank_ && modulus_ == o.modulus_ &&
           radius_ == o.radius_;
  }

 private:
  Kind kind_ = Kind::cyclic;
  int rank_ = 1;
  std::int64_t modulus_ = 1;  // cyclic only
  std::int64_t radius_ = 0;   // lattice only
};

/// Finitely supported Fourier series sum_gamma x_gamma lambda_gamma.
struct FourierSeriesElement {
  GroupModel group;
  std::map<Element, Complex> coeffs;

  FourierSeriesElement(GroupModel g, std::map<Element, Complex> c);
  Complex at(const Element& g) const;
  bool selfadjoint(double tol = 1e-12) const;
};

/// Fourier series with matrix coefficients (all dim x dim).
struct BlockFourierElement {
  GroupModel group;
  Eigen::Index dim = 1;
  std::map<Element, Eigen::MatrixXcd> coeffs;

  BlockFourierElement(GroupModel g, Eigen::Index d,
                      std::map<Element, Eigen::MatrixXcd> c);
  Eigen::MatrixXcd at(const Element& g) const;
  bool selfadjoint(double tol = 1e-12) const;
};

/// Increasing finite sets that are asymptotically translation invariant.
struct FolnerNet {
  GroupModel group;
  std::vector<std::vector<Element>> sets;
};

/// Probability weights with finite support.
struct ReiterMean {
  GroupModel group;
  std::map<Element, double> weights;

  ReiterMean(GroupModel g, std::map<Element, double> w);
};

ReiterMean uniform_mean(const GroupModel& g, const std::vector<Element>& support);

/// Matrix of the left translation by gamma on the window: entry (r,c) = 1
/// iff r = gamma * c; compositions that leave the window give zero rows.
CMatrix regular_representation(const GroupModel& g, const Element& gamma,
                               const std::vector<Element>& window);

/// Truncated Toeplitz matrix (x_{r c^{-1}}) over window x window.
Eigen::MatrixXcd toeplitz_window_matrix(const FourierSeriesElement& x,
                                        const std::vector<Element>& window);
Eigen::MatrixXcd toeplitz_window_matrix(const BlockFourierElement& x,
                                        const std::vector<Element>& window);

/// Noncommutative L^psi norm under the normalized trace. For cyclic groups
/// with window = nullopt the full circulant realization is used and the
/// value is exact; otherwise the supplied window gives a truncation
/// approximation.
double lp_group_norm(const FourierSeriesElement& x, const Exponent& e,
                     const std::optional<std::vector<Element>>& window,
                     PNormConvention convention = PNormConvention::standard);

FolnerNet folner_intervals(const GroupModel& g, int count);

/// sum_beta |mu(gamma^{-1} beta) - mu(beta)|.
double reiter_defect(const ReiterMean& mu, const Element& gamma);

/// {lo, ..., hi} as elements of a rank-1 group.
std::vector<Element> interval(std::int64_t lo, std::int64_t hi);

}  // namespace multlab::groupalg
