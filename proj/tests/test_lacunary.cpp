#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multlab/lacunary.hpp"

using namespace multlab;
using namespace multlab::lacunary;
using groupalg::Element;
using groupalg::GroupModel;
using groupalg::interval;

namespace {
GroupModel zline() { return GroupModel::lattice(1, 1); }
}

TEST_CASE("greedy selection traces the exclusion sets") {
  auto sel = greedy_sumset_select(zline(), interval(0, 2), interval(0, 26), 3);
  REQUIRE(sel.cols.size() == 3);
  CHECK(sel.cols[0] == Element{0});
  CHECK(sel.cols[1] == Element{3});
  CHECK(sel.cols[2] == Element{6});
  CHECK(products_pairwise_distinct(zline(), sel.rows, sel.cols));

  auto tiny = greedy_sumset_select(zline(), {Element{4}}, {Element{9}}, 1);
  CHECK(tiny.rows[0] == Element{4});
  CHECK(tiny.cols[0] == Element{9});

  auto sparse = greedy_sumset_select(zline(), {Element{0}, Element{10}}, interval(0, 7), 2);
  CHECK(sparse.cols[0] == Element{0});
  CHECK(sparse.cols[1] == Element{1});
}

TEST_CASE("selection respects the counting budget") {
  for (int n : {2, 3, 4}) {
    auto sel = greedy_sumset_select(zline(), interval(0, n - 1),
                                    interval(0, n * n * n), n);
    CHECK(products_pairwise_distinct(zline(), sel.rows, sel.cols));
    CHECK(sel.candidates_inspected <= static_cast<long>(n) * n * n);
  }
  CHECK_THROWS(greedy_sumset_select(zline(), interval(0, 0), interval(0, 100), 2));
  CHECK_THROWS(greedy_sumset_select(zline(), interval(0, 3), interval(0, 1), 3));
}

TEST_CASE("distinctness detects collisions") {
  CHECK(!products_pairwise_distinct(zline(), {Element{0}, Element{1}},
                                    {Element{0}, Element{1}}));  // 0+1 = 1+0
}

TEST_CASE("sumset grid bound") {
  normest::AscentOptions o;
  o.restarts = 8;
  o.seed = 4;
  o.max_iters = 1500;
  {
    auto sel = greedy_sumset_select(zline(), interval(0, 1), interval(0, 8), 2);
    auto b = sumset_lower_bound(sel, 4.0, o);
    CHECK(b.analytic == doctest::Approx(std::pow(2.0, 0.25)));
    CHECK(b.grid_estimate.lower <= b.analytic + 1e-6);
    CHECK(b.grid_estimate.lower >= b.analytic - 0.05);
    CHECK(b.transferred.support().size() == 4);
  }
  {
    auto sel = greedy_sumset_select(zline(), interval(0, 2), interval(0, 27), 3);
    auto b2 = sumset_lower_bound(sel, 2.0, o);
    CHECK(b2.analytic == doctest::Approx(1.0));
    auto b1 = sumset_lower_bound(sel, 1.0, o);
    CHECK(b1.analytic == doctest::Approx(std::sqrt(3.0)));
    CHECK(b1.grid_estimate.lower <= b1.analytic + 1e-6);
    CHECK(b1.grid_estimate.lower >= b1.analytic - 0.05);
  }
}

TEST_CASE("approximating sequences converge pointwise") {
  auto fejer = ApproximatingSequence::fejer();
  CHECK(fejer.value(5, 0) == doctest::Approx(1.0));
  CHECK(fejer.value(5, 3) == doctest::Approx(1.0 - 3.0 / 6.0));
  CHECK(fejer.value(5, 7) == doctest::Approx(0.0));
  auto trunc = ApproximatingSequence::truncation();
  CHECK(trunc.value(5, 5) == doctest::Approx(1.0));
  CHECK(trunc.value(5, 6) == doctest::Approx(0.0));
  for (std::int64_t f : {1, 10, 1000}) {
    CHECK(std::abs(fejer.value(100000, f) - 1.0) < 0.011);
    CHECK(trunc.value(100000, f) == doctest::Approx(1.0));
  }
  auto sym = fejer.materialize(3, 5);
  CHECK(sym.at({2}) == Complex(0.5, 0));
  CHECK(sym.at({5}) == Complex(0, 0));
}

TEST_CASE("skipped block sums, single step") {
  auto res = skipped_block_sums(ApproximatingSequence::fejer(), Stream::geometric(100, 100),
                                Stream::geometric(100, 100), 1, 0.1);
  REQUIRE(res.l_indices.size() == 1);
  CHECK(res.all_pass);
  // first admissible index for frequency r1 + c1 = 0 is the first index
  CHECK(res.l_indices[0] == 1);
  CHECK(res.residuals(0, 0) < 0.1);
}

TEST_CASE("skipped block sums at size two") {
  auto res = skipped_block_sums(ApproximatingSequence::fejer(), Stream::geometric(100, 100),
                                Stream::geometric(100, 100), 2, 0.1);
  CHECK(res.all_pass);
  REQUIRE(res.rows.size() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(res.residuals(i, j) < 0.1);
  // the sum is exactly 1 at the first product and vanishes below it
  CHECK(res.symbol_value(res.rows[0] + res.cols[0]) == doctest::Approx(1.0));
}

TEST_CASE("skipped block sums at size three rechecks all conditions") {
  auto res = skipped_block_sums(ApproximatingSequence::fejer(), Stream::geometric(100, 100),
                                Stream::geometric(100, 100), 3, 0.1);
  CHECK(res.all_pass);
  CHECK(res.residuals.rows() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(res.residuals(i, j) < 0.1);
  // indices interlace: l1 < k2 < l2 < k3 < l3
  CHECK(res.l_indices[0] < res.k_indices[0]);
  CHECK(res.k_indices[0] < res.l_indices[1]);
  CHECK(res.l_indices[1] < res.k_indices[1]);
  CHECK(res.k_indices[1] < res.l_indices[2]);
}

TEST_CASE("sharp truncation sequences give exact residuals") {
  auto res = skipped_block_sums(ApproximatingSequence::truncation(),
                                Stream::geometric(100, 9), Stream::geometric(300, 11), 4,
                                0.05);
  CHECK(res.all_pass);
  CHECK(res.residuals.maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("stream exhaustion is reported") {
  auto shortstream = Stream::of({0, 1, 2});
  CHECK_THROWS_AS(skipped_block_sums(ApproximatingSequence::fejer(), shortstream,
                                     shortstream, 3, 0.1),
                  std::runtime_error);
}

TEST_CASE("triangular obstruction demo") {
  normest::AscentOptions o;
  o.restarts = 6;
  o.seed = 10;
  o.max_iters = 1500;
  auto rep = riesz_obstruction_demo(4, 4.0, 0.05, o);
  CHECK(rep.construction.all_pass);
  CHECK(rep.pattern_deviation <= 0.05);
  CHECK(rep.target == doctest::Approx(std::sqrt(2.0)));
  CHECK(rep.lower.lower > 1.0);          // beyond the trivial bound
  CHECK(rep.lower.lower <= rep.target + 1e-6);

  auto trivial = riesz_obstruction_demo(1, 4.0, 0.05, o);
  CHECK(trivial.lower.lower == doctest::Approx(1.0));
}
