#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <set>

#include "multlab/extension.hpp"

using namespace multlab;
using namespace multlab::extension;
using multiplier::Support;

namespace {

RankOneSpec random_spec(std::uint64_t seed, int rows, int cols, int supp_size) {
  Rng rng(seed);
  std::vector<Complex> x(rows), y(cols);
  for (auto& v : x) v = rng.cgauss();
  for (auto& v : y) v = rng.cgauss();
  std::set<std::pair<int, int>> pairs;
  // one pair in every row and column keeps the construction hypotheses
  for (int r = 0; r < rows; ++r)
    pairs.emplace(r, static_cast<int>(rng.uniform() * cols));
  for (int c = 0; c < cols; ++c)
    pairs.emplace(static_cast<int>(rng.uniform() * rows), c);
  supp_size = std::min(supp_size, rows * cols);
  while (static_cast<int>(pairs.size()) < supp_size)
    pairs.emplace(static_cast<int>(rng.uniform() * rows),
                  static_cast<int>(rng.uniform() * cols));
  return RankOneSpec(std::move(x), std::move(y),
                     Support(rows, cols, {pairs.begin(), pairs.end()}));
}

}  // namespace

TEST_CASE("two-by-two decomposition") {
  auto d1 = lemma82_decompose(1.0, 0.0);
  CHECK(d1.norm == doctest::Approx(1.0));
  Eigen::Matrix2cd expect;
  expect << 1.0, 0.0, 0.0, 1.0;
  CHECK((d1.reconstructed() - expect).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(lemma82_decompose(2.0, 1.0).norm == doctest::Approx(2.0));

  auto d3 = lemma82_decompose(0.0, Complex(0, 1));
  CHECK(d3.norm == doctest::Approx(1.0));
  CHECK(d3.t == Complex(1, 0));
  CHECK(std::abs(d3.u - std::exp(Complex(0, 3.14159265358979323846 / 4))) < 1e-12);
  expect << 0.0, Complex(0, 1), Complex(0, -1), 0.0;
  CHECK((d3.reconstructed() - expect).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(lemma82_decompose(0.0, 0.0).norm == doctest::Approx(0.0));

  // dyad entries are unimodular, so each dyad's multiplier norm is its weight
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    auto d = lemma82_decompose(rng.cgauss(), rng.cgauss());
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(std::abs(d.col_plus(i)) - 1.0) < 1e-12);
      CHECK(std::abs(std::abs(d.row_plus(i)) - 1.0) < 1e-12);
    }
    CHECK(d.weight_plus + std::abs(d.weight_minus) == doctest::Approx(d.norm));
  }
}

TEST_CASE("full-rectangle support needs no correction work") {
  Rng rng(19);
  std::vector<Complex> x{rng.cgauss(), rng.cgauss()}, y{rng.cgauss(), rng.cgauss(),
                                                        rng.cgauss()};
  auto cert = extend_rank_one(RankOneSpec(x, y, Support::full(2, 3)));
  double mx = std::max(std::abs(x[0]), std::abs(x[1]));
  double my = std::max({std::abs(y[0]), std::abs(y[1]), std::abs(y[2])});
  CHECK(cert.bound == doctest::Approx(mx * my));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(*cert.product.at(r, c) - x[r] * y[c]) < 1e-12);
}

TEST_CASE("ratio-family extension") {
  // increasing a, x_r = a_r, y_c = 1/a_c, upper-triangular support: the
  // extension is min(a_r/a_c, a_c/a_r) with bound exactly 1
  std::vector<double> a{1.0, 2.0, 4.0};
  std::vector<Complex> x(a.begin(), a.end());
  std::vector<Complex> y{1.0, 0.5, 0.25};
  std::vector<std::pair<int, int>> tri;
  for (int r = 0; r < 3; ++r)
    for (int c = r; c < 3; ++c) tri.emplace_back(r, c);
  auto cert = extend_rank_one(RankOneSpec(x, y, Support(3, 3, tri)));
  CHECK(cert.bound == doctest::Approx(1.0));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      double expect = std::min(a[r] / a[c], a[c] / a[r]);
      CHECK(std::abs(*cert.product.at(r, c) - expect) < 1e-12);
    }
  auto rep = verify_certificate(cert, 50, 7);
  CHECK(rep.passed());
}

TEST_CASE("ratio-family matrices are positive semidefinite") {
  Rng rng(29);
  for (int n : {4, 8, 12}) {
    std::vector<double> a(n);
    double acc = 0.3;
    for (int i = 0; i < n; ++i) {
      acc += 0.1 + rng.uniform();
      a[i] = acc;
    }
    std::vector<Complex> x(a.begin(), a.end()), y(n);
    for (int i = 0; i < n; ++i) y[i] = 1.0 / a[i];
    std::vector<std::pair<int, int>> tri;
    for (int r = 0; r < n; ++r)
      for (int c = r; c < n; ++c) tri.emplace_back(r, c);
    auto cert = extend_rank_one(RankOneSpec(x, y, Support(n, n, tri)));
    CHECK(cert.bound == doctest::Approx(1.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(cert.product.dense(),
                                                       Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  }
}

TEST_CASE("single support pair") {
  std::vector<Complex> x{Complex(2, 1), Complex(0.5, 0)};
  std::vector<Complex> y{Complex(0, 1), Complex(1, 1)};
  auto cert = extend_rank_one(RankOneSpec(x, y, Support(2, 2, {{1, 0}})));
  CHECK(cert.bound == doctest::Approx(std::abs(x[1] * y[0])));
  CHECK(std::abs(*cert.product.at(1, 0) - x[1] * y[0]) < 1e-12);
  auto rep = verify_certificate(cert, 40, 11);
  CHECK(rep.passed());
}

TEST_CASE("zero columns are pruned to zero") {
  std::vector<Complex> x{1.0, 2.0};
  std::vector<Complex> y{0.0, 1.0};
  auto cert = extend_rank_one(RankOneSpec(x, y, Support(2, 2, {{0, 0}, {1, 1}})));
  CHECK(cert.bound == doctest::Approx(2.0));
  CHECK(std::abs(*cert.product.at(0, 0)) == doctest::Approx(0.0));
  CHECK(std::abs(*cert.product.at(1, 0)) == doctest::Approx(0.0));
  CHECK(std::abs(*cert.product.at(1, 1) - Complex(2, 0)) < 1e-12);
  CHECK(verify_certificate(cert, 30, 3).passed());
}

TEST_CASE("rows without support entries stay under the bound") {
  // the largest |x| row carries no constraint; its fill must not raise
  // the certified bound
  std::vector<Complex> x{10.0, 1.0};
  std::vector<Complex> y{1.0};
  auto cert = extend_rank_one(RankOneSpec(x, y, Support(2, 1, {{1, 0}})));
  CHECK(cert.bound == doctest::Approx(1.0));
  auto rep = verify_certificate(cert, 60, 13);
  CHECK(rep.passed());
}

TEST_CASE("construction invariants on random specs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto spec = random_spec(1000 + seed, 2 + seed % 5, 2 + (seed / 2) % 5,
                            4 + static_cast<int>(seed % 7));
    auto cert = extend_rank_one(spec);
    // c_r nonincreasing and the defining equivalence r_c <= r <=> c_r <= c
    for (std::size_t i = 1; i < cert.col_of_row.size(); ++i)
      CHECK(cert.col_of_row[i] <= cert.col_of_row[i - 1]);
    for (std::size_t r = 0; r < cert.col_of_row.size(); ++r)
      for (std::size_t c = 0; c < cert.row_of_col.size(); ++c)
        CHECK((cert.row_of_col[c] <= static_cast<int>(r)) ==
              (cert.col_of_row[r] <= static_cast<int>(c)));
    for (const auto& [z, w] : cert.correction_zw) CHECK(std::abs(z) <= 1.0 + 1e-12);
    // corrections multiply back to the product
    Eigen::MatrixXcd recomposed = cert.base.dense();
    for (const auto& corr : cert.corrections) recomposed.array() *= corr.dense().array();
    CHECK((recomposed - cert.product.dense()).cwiseAbs().maxCoeff() <
          1e-12 * std::max(1.0, cert.bound));
    auto rep = verify_certificate(cert, 25, seed);
    CHECK(rep.passed());
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS(RankOneSpec({1.0}, {1.0}, Support(1, 1, {})));  // empty support
  CHECK_THROWS(RankOneSpec({1.0}, {1.0, 2.0}, Support(1, 1, {{0, 0}})));  // size mismatch
  CHECK_THROWS(Support(1, 1, {{0, 1}}));  // outside the universe
}
