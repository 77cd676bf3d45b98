#include "multlab/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <set>

#include "multlab/classical.hpp"

namespace multlab::lacunary {

namespace {
std::vector<Element> to_elements(const std::vector<std::int64_t>& v) {
  std::vector<Element> out;
  out.reserve(v.size());
  for (std::int64_t x : v) out.push_back({x});
  return out;
}
}  // namespace

bool products_pairwise_distinct(const GroupModel& g, const std::vector<Element>& rows,
                                const std::vector<Element>& cols) {
  std::set<Element> seen;
  for (const auto& r : rows)
    for (const auto& c : cols)
      if (!seen.insert(g.compose(r, c)).second) return false;
  return true;
}

SumsetSelection greedy_sumset_select(const GroupModel& g, const std::vector<Element>& R,
                                     const std::vector<Element>& C, int n) {
  if (n < 1) throw std::invalid_argument("greedy_sumset_select: n must be >= 1");
  SumsetSelection sel{g, {}, {}, 0};

  std::set<Element> row_set;
  for (const auto& r : R) {
    if (row_set.insert(g.normal(r)).second) sel.rows.push_back(g.normal(r));
    if (static_cast<int>(sel.rows.size()) == n) break;
  }
  if (static_cast<int>(sel.rows.size()) < n)
    throw std::invalid_argument("greedy_sumset_select: row pool exhausted");

  for (const auto& cand : C) {
    if (static_cast<int>(sel.cols.size()) == n) break;
    ++sel.candidates_inspected;
    // Exclusion set {r_i^{-1} r_k c_l}: picking outside it keeps all
    // products r_i c distinct from the earlier r_k c_l.
    bool excluded = false;
    for (const auto& ri : sel.rows) {
      for (const auto& rk : sel.rows) {
        for (const auto& cl : sel.cols) {
          if (g.normal(cand) ==
              g.compose(g.inverse(ri), g.compose(rk, cl))) {
            excluded = true;
            break;
          }
        }
        if (excluded) break;
      }
      if (excluded) break;
    }
    if (!excluded) sel.cols.push_back(g.normal(cand));
  }
  if (static_cast<int>(sel.cols.size()) < n)
    throw std::invalid_argument("greedy_sumset_select: column pool exhausted");

  if (!products_pairwise_distinct(g, sel.rows, sel.cols))
    throw std::logic_error("greedy_sumset_select: products collide");
  return sel;
}

SumsetBound sumset_lower_bound(const SumsetSelection& sel, double p,
                               const AscentOptions& opts) {
  if (!(p >= 1.0)) throw std::invalid_argument("sumset_lower_bound: need p >= 1");
  const int n = static_cast<int>(sel.rows.size());
  SumsetBound out;
  out.analytic = std::pow(static_cast<double>(n), std::abs(0.5 - 1.0 / p));

  multiplier::Support full = multiplier::Support::full(n, n);
  normest::NormEstimate worst = normest::unconditional_constant(
      full, schatten::Exponent::power(p), normest::SignMode::unimodular, opts);
  out.grid_estimate = worst;

  // Transfer the witnessed worst phases onto the sumset: products are
  // pairwise distinct, so the grid symbol reproduces the phase pattern.
  std::map<Element, Complex> phi_vals;
  for (std::size_t q = 0; q < full.pairs.size(); ++q) {
    auto [i, j] = full.pairs[q];
    Complex eps = worst.phases.size() == full.pairs.size()
                      ? std::exp(Complex(0, worst.phases[q]))
                      : Complex(1, 0);
    Element prod = sel.group.compose(sel.rows[i], sel.cols[j]);
    phi_vals[sel.group.normal(prod)] = eps;
  }
  multiplier::FourierSymbol phi(sel.group, std::move(phi_vals));
  out.transferred = multiplier::grid_transfer(phi, sel.rows, sel.cols);
  return out;
}

double ApproximatingSequence::value(std::int64_t index, std::int64_t freq) const {
  if (index < 0) throw std::invalid_argument("ApproximatingSequence: negative index");
  const std::int64_t a = std::llabs(freq);
  if (kind_ == Kind::truncation) return a <= index ? 1.0 : 0.0;
  // triangular (Fejer) weights: 1 - |freq| / (index + 1) inside the support
  if (a > index) return 0.0;
  return 1.0 - static_cast<double>(a) / static_cast<double>(index + 1);
}

FourierSymbol ApproximatingSequence::materialize(std::int64_t index,
                                                 std::int64_t domain_radius) const {
  GroupModel z = GroupModel::lattice(1, std::max(domain_radius, index));
  std::map<Element, Complex> vals;
  for (std::int64_t f = -domain_radius; f <= domain_radius; ++f)
    vals[{f}] = value(index, f);
  return FourierSymbol(z, std::move(vals));
}

Stream Stream::of(std::vector<std::int64_t> values) {
  auto data = std::make_shared<std::vector<std::int64_t>>(std::move(values));
  Stream s;
  s.get = [data](std::size_t i) -> std::optional<std::int64_t> {
    if (i >= data->size()) return std::nullopt;
    return (*data)[i];
  };
  return s;
}

Stream Stream::geometric(std::int64_t scale, std::int64_t base) {
  if (scale < 1 || base < 2) throw std::invalid_argument("Stream::geometric: bad parameters");
  Stream s;
  s.get = [scale, base](std::size_t i) -> std::optional<std::int64_t> {
    if (i == 0) return 0;
    std::int64_t v = scale;
    for (std::size_t k = 1; k < i; ++k) {
      if (v > std::numeric_limits<std::int64_t>::max() / base) return std::nullopt;
      v *= base;
    }
    return v;
  };
  return s;
}

double SkippedBlockResult::symbol_value(std::int64_t freq) const {
  ApproximatingSequence seq = sequence_kind == ApproximatingSequence::Kind::fejer
                                  ? ApproximatingSequence::fejer()
                                  : ApproximatingSequence::truncation();
  double v = 0.0;
  for (const auto& [sign, index] : terms) v += sign * seq.value(index, freq);
  return v;
}

SkippedBlockResult skipped_block_sums(const ApproximatingSequence& seq, const Stream& R,
                                      const Stream& C, int n, double eps) {
  if (n < 1) throw std::invalid_argument("skipped_block_sums: n must be >= 1");
  if (!(eps > 0)) throw std::invalid_argument("skipped_block_sums: eps must be positive");
  const double delta = eps / 4.0;

  SkippedBlockResult res;
  res.eps = eps;
  res.sequence_kind = seq.kind();

  std::size_t r_cursor = 0, c_cursor = 0;
  auto next_from = [](const Stream& s, std::size_t& cursor,
                      const std::function<bool(std::int64_t)>& ok) {
    for (;; ++cursor) {
      auto v = s.get(cursor);
      if (!v.has_value())
        throw std::runtime_error("skipped_block_sums: stream exhausted");
      if (ok(*v)) {
        ++cursor;
        return *v;
      }
    }
  };

  auto u_value = [&res](std::int64_t freq) { return res.symbol_value(freq); };
  auto u_radius = [&res]() {
    std::int64_t r = 0;
    for (const auto& [sign, index] : res.terms) r = std::max(r, index);
    return r;
  };

  // First index above `above` with the symbol within tol of 1 on every
  // listed frequency. The per-frequency residual is nonincreasing in the
  // index for both shipped families, so a short upward scan from a
  // closed-form starting point finds the first admissible index.
  auto first_index_covering = [&seq](std::int64_t above, const std::vector<std::int64_t>& freqs,
                                     double tol) {
    std::int64_t worst = 0;
    for (std::int64_t f : freqs) worst = std::max<std::int64_t>(worst, std::llabs(f));
    std::int64_t start = above + 1;
    if (seq.kind() == ApproximatingSequence::Kind::truncation)
      start = std::max(start, worst);
    else
      start = std::max(start,
                       static_cast<std::int64_t>(std::floor(worst / tol)) - 2);
    for (std::int64_t k = start;; ++k) {
      bool ok = true;
      for (std::int64_t f : freqs)
        if (std::abs(seq.value(k, f) - 1.0) >= tol) {
          ok = false;
          break;
        }
      if (ok) return k;
    }
  };

  // n = 1: a row, a column, and one index approximating their product.
  res.rows.push_back(next_from(R, r_cursor, [](std::int64_t) { return true; }));
  res.cols.push_back(next_from(C, c_cursor, [](std::int64_t) { return true; }));
  std::int64_t l1 = first_index_covering(0, {res.rows[0] + res.cols[0]}, delta);
  res.l_indices.push_back(l1);
  res.terms.emplace_back(+1, l1);

  for (int round = 1; round < n; ++round) {
    // new row: every product with an existing column lies beyond the
    // support of the current sum, so the sum sends it to 0 exactly
    std::int64_t radius = u_radius();
    std::int64_t r_new = next_from(R, r_cursor, [&](std::int64_t v) {
      for (std::int64_t c : res.cols)
        if (std::llabs(v + c) <= radius) return false;
      return true;
    });
    res.rows.push_back(r_new);

    // k: the tail projection is near 1 on all products seen so far
    std::vector<std::int64_t> freqs;
    for (std::int64_t r : res.rows)
      for (std::int64_t c : res.cols) freqs.push_back(r + c);
    std::int64_t k_new = first_index_covering(res.l_indices.back(), freqs, delta);
    res.k_indices.push_back(k_new);

    // new column: beyond both supports, so (u - T_k) vanishes there exactly
    std::int64_t reach = std::max(u_radius(), k_new);
    std::int64_t c_new = next_from(C, c_cursor, [&](std::int64_t v) {
      for (std::int64_t r : res.rows)
        if (std::llabs(r + v) <= reach) return false;
      return true;
    });
    res.cols.push_back(c_new);

    // l: near 1 on every product including the new column
    freqs.clear();
    for (std::int64_t r : res.rows)
      for (std::int64_t c : res.cols) freqs.push_back(r + c);
    std::int64_t l_new = first_index_covering(k_new, freqs, delta);
    res.l_indices.push_back(l_new);

    res.terms.emplace_back(-1, k_new);
    res.terms.emplace_back(+1, l_new);
  }

  // Exact recheck of all 2 n^2 conditions.
  res.residuals.resize(n, n);
  res.all_pass = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double u = u_value(res.rows[i] + res.cols[j]);
      double target = i <= j ? 1.0 : 0.0;
      res.residuals(i, j) = std::abs(u - target);
      if (!(res.residuals(i, j) < eps)) res.all_pass = false;
    }
  return res;
}

ObstructionReport riesz_obstruction_demo(int n, double p, double eps,
                                         const AscentOptions& opts) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("riesz_obstruction_demo: need 1 < p < infinity");
  ObstructionReport rep;
  // Sharp truncation projections keep the index growth polynomial, so the
  // stream stays inside int64 even for n ~ 8.
  ApproximatingSequence seq = ApproximatingSequence::truncation();
  Stream rows = Stream::geometric(100, 9);
  Stream cols = Stream::geometric(300, 11);
  rep.construction = skipped_block_sums(seq, rows, cols, n, eps);
  if (!rep.construction.all_pass)
    throw std::runtime_error("riesz_obstruction_demo: residual recheck failed");

  GroupModel z = GroupModel::lattice(1, 1);
  if (!products_pairwise_distinct(z, to_elements(rep.construction.rows),
                                  to_elements(rep.construction.cols)))
    throw std::runtime_error("riesz_obstruction_demo: selection products collide");

  std::vector<std::tuple<int, int, Complex>> entries;
  rep.pattern_deviation = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double u = rep.construction.symbol_value(rep.construction.rows[i] +
                                               rep.construction.cols[j]);
      entries.emplace_back(i, j, Complex(u, 0));
      double target = i <= j ? 1.0 : 0.0;
      rep.pattern_deviation = std::max(rep.pattern_deviation, std::abs(u - target));
    }
  rep.grid_symbol = multiplier::SchurSymbol::from_entries(n, n, entries);
  rep.lower = normest::schur_multiplier_norm(rep.grid_symbol, schatten::Exponent::power(p), opts);
  rep.target = classical::riesz_lp_target(p);
  return rep;
}

}  // namespace multlab::lacunary
