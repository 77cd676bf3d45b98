#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multlab/classical.hpp"
#include "multlab/normest.hpp"

using namespace multlab;
using namespace multlab::normest;
using groupalg::Element;
using groupalg::GroupModel;
using multiplier::FourierSymbol;
using multiplier::SchurSymbol;
using multiplier::Support;
using schatten::Exponent;

namespace {

AscentOptions quick(int restarts = 10, std::uint64_t seed = 1) {
  AscentOptions o;
  o.restarts = restarts;
  o.seed = seed;
  o.max_iters = 2000;
  return o;
}

}  // namespace

TEST_CASE("constant symbols have exact norm |c|") {
  for (double p : {1.0, 2.0, 4.0}) {
    SchurSymbol rho = SchurSymbol::constant(3, 3, Complex(0, -2.5));
    auto est = schur_multiplier_norm(rho, Exponent::power(p), quick(4));
    CHECK(est.lower == doctest::Approx(2.5).epsilon(1e-6));
    if (est.upper) CHECK(*est.upper == doctest::Approx(2.5));
  }
}

TEST_CASE("conjugate-sign 2x2 symbol at the operator norm") {
  // [[conj z, w], [conj w, z]] with z=2, w=1 has norm max(|z|,|w|) = 2;
  // the zero-completed matrix is PSD, so the closed form applies.
  SchurSymbol rho = SchurSymbol::from_entries(
      2, 2, {{0, 0, 2.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 2.0}});
  auto est = schur_multiplier_norm(rho, Exponent::infinity(), quick());
  CHECK(est.lower == doctest::Approx(2.0));
  REQUIRE(est.upper.has_value());
  CHECK(*est.upper == doctest::Approx(2.0));
}

TEST_CASE("worst unimodular 2x2 at p=4") {
  SchurSymbol rho = SchurSymbol::from_entries(
      2, 2, {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, -1.0}});
  auto est = schur_multiplier_norm(rho, Exponent::power(4), quick());
  double target = std::pow(2.0, 0.25);
  CHECK(est.lower >= target - 1e-2);
  CHECK(est.lower <= target + 1e-6);
}

TEST_CASE("hilbert-schmidt closed form") {
  Rng rng(3);
  SchurSymbol rho = SchurSymbol::from_entries(
      3, 3, {{0, 1, rng.cgauss()}, {1, 2, rng.cgauss()}, {2, 0, 3.0}});
  auto est = schur_multiplier_norm(rho, Exponent::power(2), quick(0));
  CHECK(est.lower == doctest::Approx(3.0));
  CHECK(est.method == "exact-hs");
}

TEST_CASE("fourier norms") {
  auto g = GroupModel::cyclic(8);
  std::map<Element, Complex> ones;
  for (std::int64_t k = 0; k < 8; ++k) ones[{k}] = 1.0;
  auto est = fourier_multiplier_norm(FourierSymbol(g, ones), Exponent::power(4),
                                     std::nullopt, quick(4));
  CHECK(est.lower == doctest::Approx(1.0).epsilon(1e-8));

  Rng rng(9);
  std::map<Element, Complex> vals;
  double maxabs = 0;
  for (std::int64_t k = 0; k < 8; ++k) {
    vals[{k}] = rng.cgauss();
    maxabs = std::max(maxabs, std::abs(vals[{k}]));
  }
  auto p2 = fourier_multiplier_norm(FourierSymbol(g, vals), Exponent::power(2),
                                    std::nullopt, quick(0));
  CHECK(p2.lower == doctest::Approx(maxabs));
  CHECK(*p2.upper == doctest::Approx(maxabs));
}

TEST_CASE("windowed sign symbol stays under the analytic ceiling") {
  auto z = GroupModel::lattice(1, 1);
  std::map<Element, Complex> sgn;
  for (std::int64_t k = -16; k <= 16; ++k) sgn[{k}] = k >= 0 ? 1.0 : -1.0;
  auto est = fourier_multiplier_norm(FourierSymbol(z, sgn), Exponent::power(4),
                                     groupalg::interval(0, 15), quick(4));
  CHECK(est.lower > 1.3);  // well above the trivial bound 1
  CHECK(est.lower <= 1.0 + std::sqrt(2.0) + 1e-6);
}

TEST_CASE("oracle examples") {
  SchurSymbol w = SchurSymbol::from_entries(1, 1, {{0, 0, Complex(0.6, -0.8)}});
  CHECK(brute_oracle_norm(w, Exponent::power(1), 4).lower == doctest::Approx(1.0));

  SchurSymbol diag = SchurSymbol::from_entries(2, 2, {{0, 0, 1.0}, {1, 1, 1.0}});
  CHECK(brute_oracle_norm(diag, Exponent::power(1), 4).lower ==
        doctest::Approx(1.0).epsilon(1e-9));

  SchurSymbol off = SchurSymbol::from_entries(2, 2, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK(brute_oracle_norm(off, Exponent::power(1), 4).lower ==
        doctest::Approx(1.0).epsilon(1e-9));

  SchurSymbol big = SchurSymbol::constant(3, 2, 1.0);
  CHECK_THROWS_AS(brute_oracle_norm(big, Exponent::power(1), 3), std::invalid_argument);
}

TEST_CASE("ascent agrees with the oracle on tiny supports") {
  Rng rng(12);
  std::vector<std::vector<std::pair<int, int>>> shapes = {
      {{0, 0}, {1, 1}},          // diagonal
      {{0, 0}, {0, 1}, {0, 2}},  // one row
      {{0, 0}, {0, 1}, {1, 0}},  // corner
      {{0, 1}, {1, 0}},          // antidiagonal
  };
  for (const auto& shape : shapes) {
    std::vector<std::tuple<int, int, Complex>> entries;
    for (auto [r, c] : shape) entries.emplace_back(r, c, rng.cgauss());
    SchurSymbol rho = SchurSymbol::from_entries(3, 3, entries);
    for (double p : {1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()}) {
      auto oracle = brute_oracle_norm(rho, Exponent::power(p), 4);
      auto ascent = schur_multiplier_norm(rho, Exponent::power(p), quick(8));
      CHECK(ascent.lower >= oracle.lower - 1e-9);
      CHECK(ascent.lower <= oracle.lower + 0.05);
    }
  }
}

TEST_CASE("amplified norms never fall below the base and grow monotonically") {
  SchurSymbol h = classical::hilbert_symbol(3);
  Exponent p4 = Exponent::power(4);
  AscentOptions o = quick(6);
  auto base = schur_multiplier_norm(h, p4, o);
  double prev = base.lower;
  for (int m : {2, 3}) {
    auto amp = amplified_norm(h, p4, m, o);
    CHECK(amp.lower >= prev - 1e-8);
    prev = amp.lower;
  }
  // amplification of the sign pattern cannot beat the two-sided ceiling
  CHECK(prev <= 1.0 + std::sqrt(2.0) + 1e-6);
}

TEST_CASE("unconditional constants") {
  Exponent p4 = Exponent::power(4);
  auto single = unconditional_constant(Support(1, 1, {{0, 0}}), p4,
                                       SignMode::real_signs, quick(2));
  CHECK(single.lower == doctest::Approx(1.0).epsilon(1e-8));

  auto row = unconditional_constant(Support(1, 3, {{0, 0}, {0, 1}, {0, 2}}), p4,
                                    SignMode::unimodular, quick(6));
  CHECK(row.lower == doctest::Approx(1.0).epsilon(1e-6));

  auto full = unconditional_constant(Support::full(2, 2), p4, SignMode::unimodular, quick(6));
  double target = std::pow(2.0, 0.25);
  CHECK(full.lower >= target - 1e-2);
  CHECK(full.lower <= target + 1e-6);

  // the same value is already witnessed by real signs on a 2x2 grid
  auto real2 = unconditional_constant(Support::full(2, 2), p4, SignMode::real_signs, quick(6));
  CHECK(real2.lower >= target - 1e-2);
  CHECK(real2.lower <= target + 1e-6);

  CHECK_THROWS(unconditional_constant(Support::full(5, 4), p4, SignMode::real_signs, quick(1)));
}

TEST_CASE("transfer inequality on cyclic groups") {
  Rng rng(77);
  auto g = GroupModel::cyclic(8);
  for (double p : {1.0, 2.0, 4.0}) {
    for (int trial = 0; trial < 3; ++trial) {
      std::map<Element, Complex> vals;
      for (std::int64_t k = 0; k < 8; ++k)
        if (rng.uniform() < 0.8) vals[{k}] = rng.cgauss();
      if (vals.empty()) vals[{0}] = 1.0;
      auto rep = transfer_inequality_check(FourierSymbol(g, vals), Exponent::power(p),
                                           std::nullopt, quick(4));
      CHECK(rep.inequality_ok);
      if (p == 2.0) CHECK(rep.p2_equal);
    }
  }
}

TEST_CASE("transfer with amplification stays ordered") {
  auto g = GroupModel::cyclic(6);
  std::map<Element, Complex> vals{{{0}, 1.0}, {{1}, Complex(0, 1)}, {{3}, -0.5}};
  auto rep = transfer_inequality_check(FourierSymbol(g, vals), Exponent::power(4),
                                       std::nullopt, quick(4), {2});
  CHECK(rep.inequality_ok);
  REQUIRE(rep.amplified_lowers.size() == 1);
  CHECK(rep.amplified_lowers[0] >= rep.schur_lower - 1e-8);
}

TEST_CASE("transposition invariance and scaling") {
  Rng rng(55);
  SchurSymbol rho = SchurSymbol::from_entries(
      3, 2, {{0, 0, rng.cgauss()}, {1, 1, rng.cgauss()}, {2, 0, rng.cgauss()},
             {0, 1, rng.cgauss()}});
  Exponent p4 = Exponent::power(4);
  auto a = schur_multiplier_norm(rho, p4, quick(8));
  auto b = schur_multiplier_norm(rho.transpose(), p4, quick(8));
  CHECK(a.lower == doctest::Approx(b.lower).epsilon(2e-6));

  auto scaled = schur_multiplier_norm(rho.scaled(Complex(0, -3)), p4, quick(8));
  CHECK(scaled.lower == doctest::Approx(3.0 * a.lower).epsilon(2e-6));
}

TEST_CASE("witness reproduces the reported lower bound") {
  SchurSymbol h = classical::hilbert_symbol(4);
  Exponent p4 = Exponent::power(4);
  auto est = schur_multiplier_norm(h, p4, quick(4));
  REQUIRE(est.witness.size() > 0);
  double nx = schatten::schatten_norm_of(est.witness, p4);
  double ny = schatten::schatten_norm_of(multiplier::schur_apply_dense(h, est.witness), p4);
  CHECK(ny / nx == doctest::Approx(est.lower).epsilon(1e-8));
}

TEST_CASE("orlicz ascent is consistent with the power norm") {
  SchurSymbol h = classical::hilbert_symbol(3);
  auto psi = [](double t) { return t * t * t * t; };
  auto via_orlicz = schur_multiplier_norm(h, Exponent::orlicz(psi, true), quick(6));
  auto via_power = schur_multiplier_norm(h, Exponent::power(4), quick(6));
  CHECK(via_orlicz.lower == doctest::Approx(via_power.lower).epsilon(1e-4));
}

TEST_CASE("deterministic restarts") {
  SchurSymbol h = classical::hilbert_symbol(4);
  auto a = schur_multiplier_norm(h, Exponent::power(4), quick(5, 42));
  auto b = schur_multiplier_norm(h, Exponent::power(4), quick(5, 42));
  CHECK(a.lower == b.lower);
  CHECK((a.witness - b.witness).norm() == 0.0);
}
