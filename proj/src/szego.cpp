#include "multlab/szego.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

namespace multlab::szego {

namespace {

Eigen::MatrixXcd coefficient_matrix(const Complex& v) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = v;
  return m;
}

const Eigen::MatrixXcd& coefficient_matrix(const Eigen::MatrixXcd& m) { return m; }

void put_block(Eigen::MatrixXcd& m, std::size_t r, std::size_t c, Eigen::Index,
               const FourierSeriesElement& x, const Element& diff, double w) {
  m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = x.at(diff) * w;
}

void put_block(Eigen::MatrixXcd& m, std::size_t r, std::size_t c, Eigen::Index dim,
               const BlockFourierElement& x, const Element& diff, double w) {
  m.block(static_cast<Eigen::Index>(r) * dim, static_cast<Eigen::Index>(c) * dim, dim, dim) =
      x.at(diff) * w;
}

std::vector<std::int64_t> window_labels(const GroupModel& g, const std::vector<Element>& w) {
  std::vector<std::int64_t> labels(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) labels[i] = g.key(w[i]);
  return labels;
}

/// #(window \ gamma^{-1} window): how much mass the translation by gamma
/// pushes out of the window.
std::size_t escape_count(const GroupModel& g, const std::vector<Element>& w,
                         const Element& gamma) {
  std::set<Element> inside(w.begin(), w.end());
  std::size_t count = 0;
  for (const auto& b : w)
    if (!inside.count(g.compose(gamma, b))) ++count;
  return count;
}

}  // namespace

CMatrix truncate(const FourierSeriesElement& y, const std::vector<Element>& window) {
  auto labels = window_labels(y.group, window);
  return CMatrix(groupalg::toeplitz_window_matrix(y, window), labels, labels);
}

CMatrix truncate(const BlockFourierElement& y, const std::vector<Element>& window) {
  Eigen::MatrixXcd m = groupalg::toeplitz_window_matrix(y, window);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(m.rows()));
  for (std::size_t i = 0; i < window.size(); ++i)
    for (Eigen::Index d = 0; d < y.dim; ++d)
      labels[i * y.dim + d] = y.group.key(window[i]) * y.dim + d;
  return CMatrix(std::move(m), labels, labels);
}

namespace {

/// Id (x) (tr/|window|) of powers of the truncation, for all requested
/// orders at once. dim = 1 recovers the scalar case.
std::vector<Eigen::MatrixXcd> truncation_moments(const Eigen::MatrixXcd& t, Eigen::Index dim,
                                                 std::size_t window_size,
                                                 const std::vector<int>& orders) {
  int kmax = 0;
  for (int k : orders) {
    if (k < 0) throw std::invalid_argument("moments: negative order");
    kmax = std::max(kmax, k);
  }
  std::vector<Eigen::MatrixXcd> powers(static_cast<std::size_t>(kmax) + 1);
  powers[0] = Eigen::MatrixXcd::Identity(t.rows(), t.cols());
  for (int k = 1; k <= kmax; ++k) powers[k] = powers[k - 1] * t;

  std::vector<Eigen::MatrixXcd> out;
  out.reserve(orders.size());
  for (int k : orders) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t b = 0; b < window_size; ++b)
      m += powers[k].block(static_cast<Eigen::Index>(b) * dim,
                           static_cast<Eigen::Index>(b) * dim, dim, dim);
    out.push_back(m / static_cast<double>(window_size));
  }
  return out;
}

template <typename Y>
MomentTable empirical_moments_impl(const Y& y, const FolnerNet& net,
                                   const std::vector<int>& orders, Eigen::Index dim) {
  if (!y.selfadjoint())
    throw std::invalid_argument("empirical_moments: element is not selfadjoint");
  MomentTable table;
  table.orders = orders;
  for (const auto& w : net.sets) {
    table.window_sizes.push_back(w.size());
    table.values.push_back(
        truncation_moments(groupalg::toeplitz_window_matrix(y, w), dim, w.size(), orders));
  }
  return table;
}

}  // namespace

MomentTable empirical_moments(const FourierSeriesElement& y, const FolnerNet& net,
                              const std::vector<int>& orders) {
  return empirical_moments_impl(y, net, orders, 1);
}

MomentTable empirical_moments(const BlockFourierElement& y, const FolnerNet& net,
                              const std::vector<int>& orders) {
  return empirical_moments_impl(y, net, orders, y.dim);
}

Eigen::MatrixXcd spectral_moment(const FourierSeriesElement& y, int k) {
  std::map<Element, Eigen::MatrixXcd> coeffs;
  for (const auto& [g, v] : y.coeffs) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = v;
    coeffs.emplace(g, std::move(m));
  }
  return spectral_moment(BlockFourierElement(y.group, 1, std::move(coeffs)), k);
}

Eigen::MatrixXcd spectral_moment(const BlockFourierElement& y, int k) {
  if (k < 0) throw std::invalid_argument("spectral_moment: negative order");
  const Eigen::Index d = y.dim;
  // k-fold convolution of the coefficient map; the moment is the
  // coefficient at the identity (the walk sum returning to the origin).
  std::map<Element, Eigen::MatrixXcd> acc;
  acc.emplace(y.group.identity(), Eigen::MatrixXcd::Identity(d, d));
  for (int step = 0; step < k; ++step) {
    std::map<Element, Eigen::MatrixXcd> next;
    for (const auto& [g1, m1] : acc)
      for (const auto& [g2, m2] : y.coeffs) {
        Element g = y.group.compose(g1, g2);
        auto it = next.find(g);
        if (it == next.end())
          next.emplace(std::move(g), m1 * m2);
        else
          it->second += m1 * m2;
      }
    acc = std::move(next);
  }
  auto it = acc.find(y.group.identity());
  return it == acc.end() ? Eigen::MatrixXcd::Zero(d, d).eval() : it->second;
}

namespace {

template <typename Y>
std::vector<SzegoRow> report_impl(const Y& y, const FolnerNet& net,
                                  const std::vector<int>& orders, Eigen::Index dim) {
  MomentTable emp = empirical_moments_impl(y, net, orders, dim);

  // Norm data for the boundary bound: B >= operator norm, via the
  // triangle inequality over coefficients; S^1 sizes of the coefficients.
  double op_bound = 0.0;
  std::vector<std::pair<Element, double>> trace_norms;
  for (const auto& [g, v] : y.coeffs) {
    Eigen::MatrixXcd m = coefficient_matrix(v);
    op_bound += schatten::singular_values_of(m)[0];
    trace_norms.emplace_back(g, schatten::singular_values_of(m).sum());
  }

  std::vector<SzegoRow> rows;
  for (std::size_t wi = 0; wi < net.sets.size(); ++wi) {
    const auto& w = net.sets[wi];
    double defect = 0.0;
    for (const auto& [g, tn] : trace_norms)
      defect += static_cast<double>(escape_count(y.group, w, g)) * tn;
    for (std::size_t oi = 0; oi < orders.size(); ++oi) {
      const int k = orders[oi];
      Eigen::MatrixXcd exact = spectral_moment(y, k);
      Eigen::MatrixXcd diff = emp.values[wi][oi] - exact;
      SzegoRow row;
      row.window = w.size();
      row.k = k;
      row.empirical = emp.values[wi][oi].real().trace() / static_cast<double>(dim);
      row.exact = exact.real().trace() / static_cast<double>(dim);
      row.abs_error = schatten::singular_values_of(diff).sum();  // trace norm
      row.bound = k <= 1 ? 0.0
                         : (k - 1) * std::pow(op_bound, k - 1) * defect /
                               static_cast<double>(w.size());
      if (row.abs_error > row.bound + 1e-9 * std::max(1.0, std::abs(row.exact)))
        throw std::runtime_error("szego_convergence_report: error exceeds the boundary bound");
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace

std::vector<SzegoRow> szego_convergence_report(const FourierSeriesElement& y,
                                               const FolnerNet& net,
                                               const std::vector<int>& orders) {
  return report_impl(y, net, orders, 1);
}

std::vector<SzegoRow> szego_convergence_report(const BlockFourierElement& y,
                                               const FolnerNet& net,
                                               const std::vector<int>& orders) {
  return report_impl(y, net, orders, y.dim);
}

CMatrix CompressionEmbedding::compress(const FourierSeriesElement& x) const {
  return truncate(x, window);
}

FourierSeriesElement CompressionEmbedding::embed(const CMatrix& a) const {
  if (a.rows() != static_cast<Eigen::Index>(window.size()) || a.rows() != a.cols())
    throw std::invalid_argument("embed: matrix does not match the window");
  std::map<Element, Complex> coeffs;
  for (std::size_t r = 0; r < window.size(); ++r)
    for (std::size_t c = 0; c < window.size(); ++c) {
      Element g = group.compose(window[r], group.inverse(window[c]));
      coeffs[group.normal(g)] +=
          a.mat()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) /
          static_cast<double>(window.size());
    }
  return FourierSeriesElement(group, std::move(coeffs));
}

double CompressionEmbedding::composition_coefficient(const Element& gamma) const {
  std::set<Element> inside;
  for (const auto& w : window) inside.insert(group.normal(w));
  std::size_t overlap = 0;
  for (const auto& w : window)
    if (inside.count(group.compose(group.inverse(gamma), w))) ++overlap;
  return static_cast<double>(overlap) / static_cast<double>(window.size());
}

CompressionEmbedding compression_embedding_pair(const GroupModel& g,
                                                const std::vector<Element>& window) {
  if (g.kind() != GroupModel::Kind::cyclic)
    throw std::invalid_argument("compression_embedding_pair: cyclic model required");
  if (window.empty()) throw std::invalid_argument("compression_embedding_pair: empty window");
  return CompressionEmbedding{g, window};
}

namespace {

template <typename Y>
double reiter_embedding_norm_impl(const Y& x, const ReiterMean& mu, double p, Eigen::Index dim) {
  if (!(p >= 1.0)) throw std::invalid_argument("reiter_embedding_norm: need p >= 1");
  if (x.coeffs.empty()) return 0.0;
  std::vector<Element> cols;
  cols.reserve(mu.weights.size());
  for (const auto& [c, wgt] : mu.weights) cols.push_back(c);
  // Rows extended to cover spectrum * supp(mu).
  std::set<Element> row_set;
  for (const auto& [g, v] : x.coeffs)
    for (const auto& c : cols) row_set.insert(x.group.compose(g, c));
  std::vector<Element> rows(row_set.begin(), row_set.end());

  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()) * dim,
                             static_cast<Eigen::Index>(cols.size()) * dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Element diff = x.group.compose(rows[r], x.group.inverse(cols[c]));
      double wgt = mu.weights.at(cols[c]);
      put_block(m, r, c, dim, x, diff, std::pow(wgt, 1.0 / p));
    }
  return schatten::schatten_norm_of(m, schatten::Exponent::power(p));
}

}  // namespace

double reiter_embedding_norm(const FourierSeriesElement& x, const ReiterMean& mu, double p) {
  return reiter_embedding_norm_impl(x, mu, p, 1);
}

double reiter_embedding_norm(const BlockFourierElement& x, const ReiterMean& mu, double p) {
  return reiter_embedding_norm_impl(x, mu, p, x.dim);
}

}  // namespace multlab::szego
