#pragma once

#include "multlab/normest.hpp"

namespace multlab::classical {

using multiplier::SchurSymbol;
using normest::AscentOptions;

/// Two-value triangular pattern: z on i <= j, w on i > j.
struct TriangularSymbol {
  int n = 1;
  Complex z{1.0, 0.0};
  Complex w{1.0, 0.0};

  SchurSymbol to_schur() const;
};

/// sgn(i - j) with sgn(0) = 1: +1 on and below the diagonal, -1 above.
SchurSymbol hilbert_symbol(int n);

/// Indicator of i >= j (diagonal included).
SchurSymbol riesz_symbol(int n);

struct AnalyticValue {
  double value = 0.0;
  bool certified = false;  // certified only when max(p, p') is a power of 2
  double effective_p = 2.0;
};

/// cot(pi / (2 max(p, p'))). Certified when that exponent is a power of
/// two; otherwise an analytic target only.
AnalyticValue hilbert_norm_formula(double p);

/// u_{2} = 1, u_{2p} = u_p + sqrt(u_p^2 + 1); returns u_{2^k}. Checked
/// against cot(pi / 2^{k+1}) via the half-angle identity.
double cotlar_recursion(int k);

/// sqrt(2): the S^4 value of the triangular projection.
double riesz_l4_formula();

/// csc(pi / p): the scalar-function analytic target for 1 < p < infinity.
double riesz_lp_target(double p);

enum class ScanKind { hilbert, riesz };

struct ScanRow {
  int n = 0;
  double lower = 0.0;
  double target = 0.0;
  double gap = 0.0;
  double seconds = 0.0;
};

/// Ascent lower bounds for growing sizes against the analytic target.
/// Each size is warm-started with the previous witness embedded top-left,
/// so the lower bounds are nondecreasing.
std::vector<ScanRow> convergence_scan(ScanKind kind, double p, const std::vector<int>& sizes,
                                      const AscentOptions& opts = {});

}  // namespace multlab::classical
