#pragma once

#include "multlab/groupalg.hpp"

namespace multlab::szego {

using groupalg::BlockFourierElement;
using groupalg::Element;
using groupalg::FolnerNet;
using groupalg::FourierSeriesElement;
using groupalg::GroupModel;
using groupalg::ReiterMean;
using schatten::CMatrix;

/// Compression p y p of the (block) Toeplitz operator of y to a finite
/// window: entry (r,c) = y_{r c^{-1}}. Blocks are laid out window-major.
CMatrix truncate(const FourierSeriesElement& y, const std::vector<Element>& window);
CMatrix truncate(const BlockFourierElement& y, const std::vector<Element>& window);

/// Moments of the truncation eigenvalue counting measures. value[i][j] is
/// the (dim x dim, 1x1 in the scalar case) moment of order orders[j] on
/// net set i: Id (x) (tr / |set|) of the k-th power of the truncation.
struct MomentTable {
  std::vector<int> orders;
  std::vector<std::size_t> window_sizes;
  std::vector<std::vector<Eigen::MatrixXcd>> values;
};

MomentTable empirical_moments(const FourierSeriesElement& y, const FolnerNet& net,
                              const std::vector<int>& orders);
MomentTable empirical_moments(const BlockFourierElement& y, const FolnerNet& net,
                              const std::vector<int>& orders);

/// Exact moment Id (x) tau(y^k) by k-fold coefficient convolution (walk
/// sums over the spectrum); 1x1 in the scalar case.
Eigen::MatrixXcd spectral_moment(const FourierSeriesElement& y, int k);
Eigen::MatrixXcd spectral_moment(const BlockFourierElement& y, int k);

struct SzegoRow {
  std::size_t window = 0;
  int k = 0;
  double empirical = 0.0;  // real part of the normalized moment trace
  double exact = 0.0;
  double abs_error = 0.0;  // trace-norm distance in the block case
  double bound = 0.0;      // (k-1) B^{k-1} * boundary defect / |window|
};

/// Empirical vs exact moments with the rigorous boundary bound; asserts
/// error <= bound on every row.
std::vector<SzegoRow> szego_convergence_report(const FourierSeriesElement& y,
                                               const FolnerNet& net,
                                               const std::vector<int>& orders);
std::vector<SzegoRow> szego_convergence_report(const BlockFourierElement& y,
                                               const FolnerNet& net,
                                               const std::vector<int>& orders);

/// The compression x -> p X p and the embedding e_{r,c} ->
/// (1/|window|) lambda_r lambda_{c^{-1}}, as concrete maps on a cyclic
/// group. Their composition multiplies lambda_gamma by the window overlap
/// ratio |W cap gamma^{-1} W| / |W|.
struct CompressionEmbedding {
  GroupModel group;
  std::vector<Element> window;

  CMatrix compress(const FourierSeriesElement& x) const;
  FourierSeriesElement embed(const CMatrix& a) const;
  double composition_coefficient(const Element& gamma) const;
};

CompressionEmbedding compression_embedding_pair(const GroupModel& g,
                                                const std::vector<Element>& window);

/// || X diag(mu^{1/p}) ||_{S^p} with X the Toeplitz matrix of x over a
/// window covering spectrum * supp(mu); unnormalized trace.
double reiter_embedding_norm(const FourierSeriesElement& x, const ReiterMean& mu, double p);
double reiter_embedding_norm(const BlockFourierElement& x, const ReiterMean& mu, double p);

}  // namespace multlab::szego
