#pragma once

#include "multlab/normest.hpp"

namespace multlab::lacunary {

using groupalg::Element;
using groupalg::GroupModel;
using multiplier::FourierSymbol;
using multiplier::SchurSymbol;
using normest::AscentOptions;
using normest::NormEstimate;

/// Rows r_1..r_n and columns c_1..c_n whose n^2 products r_i c_j are
/// pairwise distinct.
struct SumsetSelection {
  GroupModel group;
  std::vector<Element> rows, cols;
  long candidates_inspected = 0;
};

bool products_pairwise_distinct(const GroupModel& g, const std::vector<Element>& rows,
                                const std::vector<Element>& cols);

/// Takes the first n distinct rows of R, then greedily picks columns
/// avoiding the exclusion sets {r_i^{-1} r_k c_l}. Needs |R| >= n and
/// |C| >= n^3 to be guaranteed to succeed.
SumsetSelection greedy_sumset_select(const GroupModel& g, const std::vector<Element>& R,
                                     const std::vector<Element>& C, int n);

struct SumsetBound {
  double analytic = 1.0;  // n^{|1/2 - 1/p|}
  NormEstimate grid_estimate;
  SchurSymbol transferred;
};

/// Worst unimodular grid symbol on the selection, transferred through the
/// grid map, against the analytic lower bound n^{|1/2 - 1/p|}.
SumsetBound sumset_lower_bound(const SumsetSelection& sel, double p,
                               const AscentOptions& opts = {});

/// Lazily evaluated Fourier-multiplier approximating sequences on Z:
/// triangular (Fejer) means and sharp truncation projections. Both
/// converge pointwise to 1.
class ApproximatingSequence {
 public:
  enum class Kind { fejer, truncation };

  static ApproximatingSequence fejer() { return ApproximatingSequence(Kind::fejer); }
  static ApproximatingSequence truncation() {
    return ApproximatingSequence(Kind::truncation);
  }

  Kind kind() const { return kind_; }
  double value(std::int64_t index, std::int64_t freq) const;
  std::int64_t support_radius(std::int64_t index) const { return index; }
  FourierSymbol materialize(std::int64_t index, std::int64_t domain_radius) const;

 private:
  explicit ApproximatingSequence(Kind k) : kind_(k) {}
  Kind kind_;
};

/// An increasing element stream on Z; get(i) is nullopt when exhausted.
struct Stream {
  std::function<std::optional<std::int64_t>(std::size_t)> get;

  static Stream of(std::vector<std::int64_t> values);
  /// 0, scale, scale*base, scale*base^2, ... until int64 overflow.
  static Stream geometric(std::int64_t scale, std::int64_t base);
};

/// A skipped block sum sigma_{l_1} + (sigma_{l_2} - sigma_{k_2}) + ... and
/// the selected rows/columns for which it acts like the triangular
/// projection on the sumset grid, up to eps.
struct SkippedBlockResult {
  std::vector<std::int64_t> l_indices;         // l_1..l_n
  std::vector<std::int64_t> k_indices;         // k_2..k_n
  std::vector<std::int64_t> rows, cols;        // r_1..r_n, c_1..c_n
  std::vector<std::pair<int, std::int64_t>> terms;  // (+-1, sequence index)
  Eigen::MatrixXd residuals;                   // recheck values, n x n
  double eps = 0.0;
  bool all_pass = false;
  ApproximatingSequence::Kind sequence_kind = ApproximatingSequence::Kind::fejer;

  double symbol_value(std::int64_t freq) const;  // the sum evaluated at freq
};

/// Four-step induction with delta = eps/4 per round; every one of the
/// 2 n^2 conditions is rechecked exactly before returning.
SkippedBlockResult skipped_block_sums(const ApproximatingSequence& seq, const Stream& R,
                                      const Stream& C, int n, double eps);

struct ObstructionReport {
  SkippedBlockResult construction;
  SchurSymbol grid_symbol;       // values of the sum on the selection grid
  double pattern_deviation = 0;  // entrywise distance to the triangular indicator
  NormEstimate lower;
  double target = 1.0;  // csc(pi/p)
};

/// Exhibits a near-triangular multiplier from a skipped block sum and
/// reports its ascent lower bound against csc(pi/p).
ObstructionReport riesz_obstruction_demo(int n, double p, double eps,
                                         const AscentOptions& opts = {});

}  // namespace multlab::lacunary
