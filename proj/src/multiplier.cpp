#include "multlab/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace multlab::multiplier {

Support::Support(int r, int c, std::vector<std::pair<int, int>> p)
    : rows(r), cols(c), pairs(std::move(p)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Support: negative universe");
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw std::invalid_argument("Support: duplicate pair");
  for (const auto& [pr, pc] : pairs)
    if (pr < 0 || pr >= rows || pc < 0 || pc >= cols)
      throw std::invalid_argument("Support: pair outside universe");
}

Support Support::full(int r, int c) {
  std::vector<std::pair<int, int>> p;
  p.reserve(static_cast<std::size_t>(r) * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) p.emplace_back(i, j);
  return Support(r, c, std::move(p));
}

bool Support::contains(int r, int c) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(r, c));
}

SchurSymbol::SchurSymbol(Support supp, std::vector<Complex> values)
    : supp_(std::move(supp)), vals_(std::move(values)) {
  if (vals_.size() != supp_.pairs.size())
    throw std::invalid_argument("SchurSymbol: value count mismatch");
  for (const Complex& v : vals_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("SchurSymbol: non-finite value");
}

SchurSymbol SchurSymbol::from_entries(
    int rows, int cols, const std::vector<std::tuple<int, int, Complex>>& entries) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(entries.size());
  for (const auto& [r, c, v] : entries) pairs.emplace_back(r, c);
  Support supp(rows, cols, pairs);  // sorted inside
  std::vector<Complex> vals(supp.pairs.size());
  for (const auto& [r, c, v] : entries) {
    auto it = std::lower_bound(supp.pairs.begin(), supp.pairs.end(), std::make_pair(r, c));
    vals[static_cast<std::size_t>(it - supp.pairs.begin())] = v;
  }
  return SchurSymbol(std::move(supp), std::move(vals));
}

SchurSymbol SchurSymbol::constant(int rows, int cols, Complex value) {
  Support supp = Support::full(rows, cols);
  std::vector<Complex> vals(supp.pairs.size(), value);
  return SchurSymbol(std::move(supp), std::move(vals));
}

std::optional<Complex> SchurSymbol::at(int r, int c) const {
  auto it = std::lower_bound(supp_.pairs.begin(), supp_.pairs.end(), std::make_pair(r, c));
  if (it == supp_.pairs.end() || *it != std::make_pair(r, c)) return std::nullopt;
  return vals_[static_cast<std::size_t>(it - supp_.pairs.begin())];
}

Eigen::MatrixXcd SchurSymbol::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(supp_.rows, supp_.cols);
  for (std::size_t i = 0; i < vals_.size(); ++i)
    m(supp_.pairs[i].first, supp_.pairs[i].second) = vals_[i];
  return m;
}

SchurSymbol SchurSymbol::transpose() const {
  std::vector<std::tuple<int, int, Complex>> entries;
  entries.reserve(vals_.size());
  for (std::size_t i = 0; i < vals_.size(); ++i)
    entries.emplace_back(supp_.pairs[i].second, supp_.pairs[i].first, vals_[i]);
  return from_entries(supp_.cols, supp_.rows, entries);
}

SchurSymbol SchurSymbol::scaled(Complex c) const {
  std::vector<Complex> vals = vals_;
  for (Complex& v : vals) v *= c;
  return SchurSymbol(supp_, std::move(vals));
}

double SchurSymbol::max_abs() const {
  double m = 0.0;
  for (const Complex& v : vals_) m = std::max(m, std::abs(v));
  return m;
}

std::uint64_t SchurSymbol::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mixin = [&h](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mixin(static_cast<std::uint64_t>(supp_.rows));
  mixin(static_cast<std::uint64_t>(supp_.cols));
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    mixin(static_cast<std::uint64_t>(supp_.pairs[i].first));
    mixin(static_cast<std::uint64_t>(supp_.pairs[i].second));
    std::uint64_t re, im;
    double dre = vals_[i].real(), dim = vals_[i].imag();
    std::memcpy(&re, &dre, 8);
    std::memcpy(&im, &dim, 8);
    mixin(re);
    mixin(im);
  }
  return h;
}

FourierSymbol::FourierSymbol(GroupModel g, std::map<Element, Complex> v) : group(std::move(g)) {
  for (auto& [el, val] : v) {
    if (!group.contains(el))
      throw std::invalid_argument("FourierSymbol: domain element rank mismatch");
    values.emplace(group.normal(el), val);
  }
}

bool FourierSymbol::has(const Element& g) const {
  return values.count(group.normal(g)) != 0;
}

Complex FourierSymbol::at(const Element& g) const {
  auto it = values.find(group.normal(g));
  if (it == values.end()) throw std::invalid_argument("FourierSymbol: element outside domain");
  return it->second;
}

std::uint64_t FourierSymbol::hash() const {
  std::uint64_t h = 0x84222325cbf29ce4ull;
  auto mixin = [&h](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  for (const auto& [el, val] : values) {
    for (std::int64_t c : el) mixin(static_cast<std::uint64_t>(c));
    std::uint64_t re, im;
    double dre = val.real(), dim = val.imag();
    std::memcpy(&re, &dre, 8);
    std::memcpy(&im, &dim, 8);
    mixin(re);
    mixin(im);
  }
  return h;
}

AtomicMeasure::AtomicMeasure(std::vector<std::pair<double, Complex>> a) : atoms(std::move(a)) {
  constexpr double two_pi = 6.283185307179586476925287;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      double d = std::fmod(std::abs(atoms[i].first - atoms[j].first), two_pi);
      d = std::min(d, two_pi - d);
      if (d < 1e-12) throw std::invalid_argument("AtomicMeasure: coincident atoms");
    }
  }
}

CMatrix schur_apply(const SchurSymbol& rho, const CMatrix& a) {
  if (a.rows() != rho.rows() || a.cols() != rho.cols())
    throw std::invalid_argument("schur_apply: dimension mismatch");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(a.rows(), a.cols());
  Eigen::MatrixXcd mask = a.mat();
  const auto& pairs = rho.support().pairs;
  const auto& vals = rho.values();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out(pairs[i].first, pairs[i].second) = vals[i] * mask(pairs[i].first, pairs[i].second);
    mask(pairs[i].first, pairs[i].second) = 0.0;
  }
  if (mask.size() != 0 && mask.cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("schur_apply: input has nonzero entries off the support");
  return CMatrix(std::move(out), a.row_labels(), a.col_labels());
}

CMatrix schur_apply_truncating(const SchurSymbol& rho, const CMatrix& a) {
  if (a.rows() != rho.rows() || a.cols() != rho.cols())
    throw std::invalid_argument("schur_apply_truncating: dimension mismatch");
  return CMatrix(schur_apply_dense(rho, a.mat()), a.row_labels(), a.col_labels());
}

Eigen::MatrixXcd schur_apply_dense(const SchurSymbol& rho, const Eigen::MatrixXcd& a) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(a.rows(), a.cols());
  const auto& pairs = rho.support().pairs;
  const auto& vals = rho.values();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out(pairs[i].first, pairs[i].second) = vals[i] * a(pairs[i].first, pairs[i].second);
  return out;
}

FourierSeriesElement fourier_apply(const FourierSymbol& phi, const FourierSeriesElement& x) {
  if (!(phi.group == x.group)) throw std::invalid_argument("fourier_apply: group mismatch");
  std::map<Element, Complex> out;
  for (const auto& [g, v] : x.coeffs) {
    if (!phi.has(g))
      throw std::invalid_argument("fourier_apply: spectrum escapes the symbol domain");
    out[g] = phi.at(g) * v;
  }
  return FourierSeriesElement(x.group, std::move(out));
}

BlockFourierElement fourier_apply(const FourierSymbol& phi, const BlockFourierElement& x) {
  if (!(phi.group == x.group)) throw std::invalid_argument("fourier_apply: group mismatch");
  std::map<Element, Eigen::MatrixXcd> out;
  for (const auto& [g, m] : x.coeffs) {
    if (!phi.has(g))
      throw std::invalid_argument("fourier_apply: spectrum escapes the symbol domain");
    out[g] = phi.at(g) * m;
  }
  return BlockFourierElement(x.group, x.dim, std::move(out));
}

SchurSymbol toeplitz_transfer(const FourierSymbol& phi, const std::vector<Element>& window) {
  const int n = static_cast<int>(window.size());
  std::vector<std::tuple<int, int, Complex>> entries;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Element g = phi.group.compose(window[r], phi.group.inverse(window[c]));
      if (phi.has(g)) entries.emplace_back(r, c, phi.at(g));
    }
  return SchurSymbol::from_entries(n, n, entries);
}

SchurSymbol grid_transfer(const FourierSymbol& phi, const std::vector<Element>& rows,
                          const std::vector<Element>& cols) {
  std::vector<std::tuple<int, int, Complex>> entries;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
      Element g = phi.group.compose(rows[i], cols[j]);
      if (phi.has(g)) entries.emplace_back(i, j, phi.at(g));
    }
  return SchurSymbol::from_entries(static_cast<int>(rows.size()),
                                   static_cast<int>(cols.size()), entries);
}

SchurSymbol amplify(const SchurSymbol& rho, int m) {
  if (m < 1) throw std::invalid_argument("amplify: m must be >= 1");
  if (m == 1) return rho;
  const int r = rho.rows(), c = rho.cols();
  std::vector<std::tuple<int, int, Complex>> entries;
  entries.reserve(rho.values().size() * static_cast<std::size_t>(m) * m);
  const auto& pairs = rho.support().pairs;
  const auto& vals = rho.values();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (std::size_t i = 0; i < pairs.size(); ++i)
        entries.emplace_back(a * r + pairs[i].first, b * c + pairs[i].second, vals[i]);
  return SchurSymbol::from_entries(m * r, m * c, entries);
}

FourierSymbol atomic_symbol(const AtomicMeasure& mu, const GroupModel& group,
                            const std::vector<Element>& domain) {
  if (group.rank() != 1)
    throw std::invalid_argument("atomic_symbol: integer frequencies required");
  std::map<Element, Complex> vals;
  for (const auto& el : domain) {
    const double k = static_cast<double>(el[0]);
    Complex s(0, 0);
    for (const auto& [theta, a] : mu.atoms) s += a * std::exp(Complex(0, -k * theta));
    vals[group.normal(el)] = s;
  }
  return FourierSymbol(group, std::move(vals));
}

double atomic_lp_mass(const AtomicMeasure& mu, double p) {
  if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("atomic_lp_mass: need 0 < p < 1");
  double s = 0.0;
  for (const auto& [theta, a] : mu.atoms) s += std::pow(std::abs(a), p);
  return s;
}

}  // namespace multlab::multiplier
