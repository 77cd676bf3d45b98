#pragma once

#include "multlab/normest.hpp"

namespace multlab::extension {

using multiplier::SchurSymbol;
using multiplier::Support;
using normest::AscentOptions;

/// A rank-one symbol x_r y_c specified only on a support pattern.
struct RankOneSpec {
  std::vector<Complex> x;  // one value per row of the universe
  std::vector<Complex> y;  // one value per column
  Support support;

  RankOneSpec(std::vector<Complex> xs, std::vector<Complex> ys, Support supp);
};

/// Decomposition of the 2x2 symbol [[conj z, w], [conj w, z]] into two
/// rank-one dyads with unimodular entries; the weights sum to
/// max(|z|, |w|), which is the multiplier norm.
struct Lemma82 {
  Complex t{1, 0}, u{1, 0};  // z = |z| t^2, w = |w| u^2 (principal roots)
  double weight_plus = 0.0, weight_minus = 0.0;
  Eigen::Vector2cd col_plus, col_minus;
  Eigen::RowVector2cd row_plus, row_minus;
  double norm = 0.0;

  Eigen::Matrix2cd reconstructed() const;
};

Lemma82 lemma82_decompose(Complex z, Complex w);

/// The constructive extension: a rank-one base with pairwise equal
/// columns composed with rank-two triangular-block corrections of norm 1.
/// The entrywise product agrees with x_r y_c on the support and has
/// multiplier norm sup_{(r,c) in I} |x_r y_c| on the full rectangle.
struct ExtensionCertificate {
  RankOneSpec spec;
  SchurSymbol base;                       // full rectangle, original indices
  std::vector<SchurSymbol> corrections;   // full rectangle, original indices
  std::vector<std::pair<Complex, Complex>> correction_zw;  // (z, w) generators
  SchurSymbol product;                    // the extension rho~
  double bound = 0.0;                     // sup_{(r,c) in I} |x_r y_c|
  std::vector<int> row_order, col_order;  // sorted position -> original index
  std::vector<int> col_of_row;            // c_r in sorted coordinates
  std::vector<int> row_of_col;            // r_c in sorted coordinates
};

ExtensionCertificate extend_rank_one(const RankOneSpec& spec);

struct VerifyReport {
  bool support_ok = false;
  bool corrections_ok = false;
  bool product_ok = false;
  bool action_ok = false;
  bool lower_ok = false;
  double max_support_dev = 0.0;
  double max_correction_norm = 0.0;
  double max_product_dev = 0.0;
  double worst_action_excess = 0.0;  // max ||rho o A|| - bound ||A|| over trials
  double ascent_lower = 0.0;

  bool passed() const {
    return support_ok && corrections_ok && product_ok && action_ok && lower_ok;
  }
};

/// (i) support agreement, (ii) correction norms <= 1, (iii) random-trial
/// operator-norm ceiling, (iv) ascent on the restriction reaches the bound.
VerifyReport verify_certificate(const ExtensionCertificate& cert, int trials,
                                std::uint64_t seed, const AscentOptions& opts = {});

}  // namespace multlab::extension
