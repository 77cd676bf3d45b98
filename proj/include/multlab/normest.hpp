#pragma once

#include "multlab/multiplier.hpp"

namespace multlab::normest {

using groupalg::Element;
using multiplier::FourierSymbol;
using multiplier::SchurSymbol;
using multiplier::Support;
using schatten::Exponent;
using schatten::PNormConvention;

struct AscentOptions {
  int restarts = 20;
  int max_iters = 5000;
  int hops = 0;            // basin hops per restart (perturb best, re-climb)
  double rel_tol = 1e-10;
  std::uint64_t seed = 0;  // mixed with the symbol hash per restart
  int threads = 0;         // 0: MULTLAB_THREADS or hardware
  PNormConvention convention = PNormConvention::standard;
  std::vector<Eigen::MatrixXcd> extra_starts;  // structured warm starts
};

/// A certified lower bound (with witness) plus a closed-form upper bound
/// when one applies. `lower` is always reproducible from the witness.
struct NormEstimate {
  double lower = 0.0;
  std::optional<double> upper;
  Eigen::MatrixXcd witness;
  std::vector<double> phases;  // per support pair, phase-ascent mode only
  std::string method;
  long iterations = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
};

/// Multiplier norm of rho on the Schatten class of exponent e, restricted
/// to matrices supported in rho's pattern. Exact at p = 2 and for
/// positive semidefinite symbols at p = infinity; otherwise a multi-start
/// projected gradient ascent lower bound.
NormEstimate schur_multiplier_norm(const SchurSymbol& rho, const Exponent& e,
                                   const AscentOptions& opts = {});

/// Fourier multiplier norm on the group Lebesgue space. Exact domain for
/// cyclic groups (window = nullopt, circulant realization); windowed
/// approximation otherwise. The ascent runs over Toeplitz-constrained
/// inputs, whose normalized-trace norms coincide with the group norms.
NormEstimate fourier_multiplier_norm(const FourierSymbol& phi, const Exponent& e,
                                     const std::optional<std::vector<Element>>& window,
                                     const AscentOptions& opts = {});

/// Exhaustive magnitude/phase grid search over inputs; supports of at most
/// 4 entries. Certified-to-grid lower bound, independent of the ascent
/// path; used to validate the ascent engine.
NormEstimate brute_oracle_norm(const SchurSymbol& rho, const Exponent& e, int resolution);

/// Norm of the m-fold amplification (finite truncation of the complete
/// norm); nondecreasing in m when chained through extra_starts.
NormEstimate amplified_norm(const SchurSymbol& rho, const Exponent& e, int m,
                            const AscentOptions& opts = {});

enum class SignMode { real_signs, unimodular };

/// sup over sign patterns epsilon on I of the multiplier norm: exhaustive
/// +-1 enumeration (|I| <= 16) or joint phase/input gradient ascent.
NormEstimate unconditional_constant(const Support& pattern, const Exponent& e,
                                    SignMode mode, const AscentOptions& opts = {});

struct TransferReport {
  double fourier_lower = 0.0;
  double schur_lower = 0.0;
  std::vector<double> amplified_lowers;  // per requested amplification order
  double tolerance = 1e-6;
  bool inequality_ok = false;  // fourier_lower <= schur_lower + tolerance
  bool p2_equal = true;        // at p=2: both equal max |phi| to 1e-10
};

/// Computes the Fourier-side and Toeplitz-Schur-side lower bounds on a
/// cyclic group and checks fourier <= schur + tol (the Schur ascent is
/// seeded with the Fourier witness, which makes the inequality structural).
TransferReport transfer_inequality_check(const FourierSymbol& phi, const Exponent& e,
                                         const std::optional<std::vector<Element>>& window,
                                         const AscentOptions& opts = {},
                                         const std::vector<int>& amplifications = {});

}  // namespace multlab::normest
