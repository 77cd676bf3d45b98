#include "multlab/groupalg.hpp"

#include <algorithm>
#include <cmath>

namespace multlab::groupalg {

namespace {
// Coordinate packing base for lattice labels; coordinates must stay below
// it in magnitude, which desk-scale windows always do.
constexpr std::int64_t kPackBase = (std::int64_t{1} << 21);
}  // namespace

GroupModel GroupModel::cyclic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("GroupModel: cyclic order must be >= 1");
  GroupModel g;
  g.kind_ = Kind::cyclic;
  g.rank_ = 1;
  g.modulus_ = n;
  return g;
}

GroupModel GroupModel::lattice(int dim, std::int64_t radius) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("GroupModel: lattice rank must be 1..3");
  if (radius < 0) throw std::invalid_argument("GroupModel: negative radius");
  GroupModel g;
  g.kind_ = Kind::lattice;
  g.rank_ = dim;
  g.radius_ = radius;
  return g;
}

Element GroupModel::normal(Element g) const {
  if (!contains(g)) throw std::invalid_argument("GroupModel: element rank mismatch");
  if (kind_ == Kind::cyclic) {
    g[0] %= modulus_;
    if (g[0] < 0) g[0] += modulus_;
  }
  return g;
}

Element GroupModel::compose(const Element& a, const Element& b) const {
  if (!contains(a) || !contains(b))
    throw std::invalid_argument("GroupModel: element rank mismatch");
  Element r(rank_);
  for (int i = 0; i < rank_; ++i) r[i] = a[i] + b[i];
  return normal(std::move(r));
}

Element GroupModel::inverse(const Element& a) const {
  if (!contains(a)) throw std::invalid_argument("GroupModel: element rank mismatch");
  Element r(rank_);
  for (int i = 0; i < rank_; ++i) r[i] = -a[i];
  return normal(std::move(r));
}

std::vector<Element> GroupModel::elements() const {
  std::vector<Element> out;
  if (kind_ == Kind::cyclic) {
    out.reserve(static_cast<std::size_t>(modulus_));
    for (std::int64_t v = 0; v < modulus_; ++v) out.push_back({v});
    return out;
  }
  std::vector<Element> acc{{}};
  for (int d = 0; d < rank_; ++d) {
    std::vector<Element> next;
    for (const auto& prefix : acc)
      for (std::int64_t v = -radius_; v <= radius_; ++v) {
        Element e = prefix;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    acc = std::move(next);
  }
  return acc;
}

std::int64_t GroupModel::key(const Element& a) const {
  Element g = normal(a);
  std::int64_t k = 0;
  for (int i = rank_ - 1; i >= 0; --i) {
    if (kind_ == Kind::lattice && std::llabs(g[i]) >= kPackBase)
      throw std::invalid_argument("GroupModel: coordinate too large to pack");
    k = k * (kind_ == Kind::lattice ? 2 * kPackBase : modulus_) + g[i] +
        (kind_ == Kind::lattice ? kPackBase : 0);
  }
  return k;
}

Element GroupModel::unkey(std::int64_t k) const {
  Element g(rank_);
  const std::int64_t base = kind_ == Kind::lattice ? 2 * kPackBase : modulus_;
  for (int i = 0; i < rank_; ++i) {
    std::int64_t digit = k % base;
    k /= base;
    g[i] = digit - (kind_ == Kind::lattice ? kPackBase : 0);
  }
  return g;
}

FourierSeriesElement::FourierSeriesElement(GroupModel g, std::map<Element, Complex> c)
    : group(std::move(g)) {
  for (auto& [el, v] : c) {
    if (!group.contains(el))
      throw std::invalid_argument("FourierSeriesElement: spectrum element rank mismatch");
    coeffs[group.normal(el)] += v;
  }
  std::erase_if(coeffs, [](const auto& kv) { return std::abs(kv.second) == 0.0; });
}

Complex FourierSeriesElement::at(const Element& g) const {
  auto it = coeffs.find(group.normal(g));
  return it == coeffs.end() ? Complex(0, 0) : it->second;
}

bool FourierSeriesElement::selfadjoint(double tol) const {
  for (const auto& [g, v] : coeffs)
    if (std::abs(at(group.inverse(g)) - std::conj(v)) > tol) return false;
  return true;
}

BlockFourierElement::BlockFourierElement(GroupModel g, Eigen::Index d,
                                         std::map<Element, Eigen::MatrixXcd> c)
    : group(std::move(g)), dim(d) {
  if (dim < 1) throw std::invalid_argument("BlockFourierElement: dim must be >= 1");
  for (auto& [el, m] : c) {
    if (!group.contains(el))
      throw std::invalid_argument("BlockFourierElement: spectrum element rank mismatch");
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("BlockFourierElement: coefficient block size mismatch");
    Element key = group.normal(el);
    auto it = coeffs.find(key);
    if (it == coeffs.end())
      coeffs.emplace(std::move(key), std::move(m));
    else
      it->second += m;
  }
  std::erase_if(coeffs, [](const auto& kv) { return kv.second.norm() == 0.0; });
}

Eigen::MatrixXcd BlockFourierElement::at(const Element& g) const {
  auto it = coeffs.find(group.normal(g));
  return it == coeffs.end() ? Eigen::MatrixXcd::Zero(dim, dim).eval() : it->second;
}

bool BlockFourierElement::selfadjoint(double tol) const {
  for (const auto& [g, m] : coeffs)
    if ((at(group.inverse(g)) - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

ReiterMean::ReiterMean(GroupModel g, std::map<Element, double> w)
    : group(std::move(g)), weights(std::move(w)) {
  double total = 0.0;
  for (const auto& [el, v] : weights) {
    if (!group.contains(el)) throw std::invalid_argument("ReiterMean: element rank mismatch");
    if (!(v > 0.0)) throw std::invalid_argument("ReiterMean: weights must be positive");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("ReiterMean: weights must sum to 1");
}

ReiterMean uniform_mean(const GroupModel& g, const std::vector<Element>& support) {
  if (support.empty()) throw std::invalid_argument("uniform_mean: empty support");
  std::map<Element, double> w;
  const double v = 1.0 / static_cast<double>(support.size());
  for (const auto& el : support) w[g.normal(el)] = v;
  if (w.size() != support.size())
    throw std::invalid_argument("uniform_mean: duplicate support elements");
  return ReiterMean(g, std::move(w));
}

CMatrix regular_representation(const GroupModel& g, const Element& gamma,
                               const std::vector<Element>& window) {
  if (!g.contains(gamma)) throw std::invalid_argument("regular_representation: not a group element");
  const std::size_t n = window.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[g.normal(window[i])] = i;
  for (std::size_t j = 0; j < n; ++j) {
    auto it = pos.find(g.compose(gamma, window[j]));
    if (it != pos.end()) m(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(j)) = 1.0;
  }
  std::vector<std::int64_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = g.key(window[i]);
  return CMatrix(std::move(m), labels, labels);
}

Eigen::MatrixXcd toeplitz_window_matrix(const FourierSeriesElement& x,
                                        const std::vector<Element>& window) {
  const auto n = static_cast<Eigen::Index>(window.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = x.at(x.group.compose(window[r], x.group.inverse(window[c])));
  return m;
}

Eigen::MatrixXcd toeplitz_window_matrix(const BlockFourierElement& x,
                                        const std::vector<Element>& window) {
  const auto n = static_cast<Eigen::Index>(window.size());
  const Eigen::Index d = x.dim;
  Eigen::MatrixXcd m(n * d, n * d);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m.block(r * d, c * d, d, d) =
          x.at(x.group.compose(window[r], x.group.inverse(window[c])));
  return m;
}

double lp_group_norm(const FourierSeriesElement& x, const Exponent& e,
                     const std::optional<std::vector<Element>>& window,
                     PNormConvention convention) {
  std::vector<Element> w;
  if (!window.has_value()) {
    if (x.group.kind() != GroupModel::Kind::cyclic)
      throw std::invalid_argument("lp_group_norm: full realization needs a cyclic group");
    w = x.group.elements();
  } else {
    w = *window;
  }
  if (w.empty()) throw std::invalid_argument("lp_group_norm: empty window");
  Eigen::MatrixXcd m = toeplitz_window_matrix(x, w);
  return schatten::schatten_norm_of(m, e, convention, 1.0 / static_cast<double>(w.size()));
}

FolnerNet folner_intervals(const GroupModel& g, int count) {
  if (count < 1) throw std::invalid_argument("folner_intervals: count must be >= 1");
  FolnerNet net{g, {}};
  if (g.kind() == GroupModel::Kind::cyclic) {
    // Nested initial segments ending at the full group.
    const std::int64_t n = g.modulus();
    for (int i = 1; i <= count; ++i) {
      std::int64_t len = (n * i + count - 1) / count;
      std::vector<Element> s;
      for (std::int64_t v = 0; v < len; ++v) s.push_back({v});
      net.sets.push_back(std::move(s));
    }
    return net;
  }
  // Boxes {-r..r}^d with doubling radius.
  std::int64_t r = 1;
  for (int i = 0; i < count; ++i, r *= 2) {
    GroupModel box = GroupModel::lattice(g.rank(), r);
    net.sets.push_back(box.elements());
  }
  return net;
}

double reiter_defect(const ReiterMean& mu, const Element& gamma) {
  if (!mu.group.contains(gamma)) throw std::invalid_argument("reiter_defect: element rank mismatch");
  auto weight = [&](const Element& el) {
    auto it = mu.weights.find(el);
    return it == mu.weights.end() ? 0.0 : it->second;
  };
  const Element inv = mu.group.inverse(gamma);
  double total = 0.0;
  // beta runs over supp(mu) union gamma.supp(mu).
  std::map<Element, bool> seen;
  for (const auto& [beta, v] : mu.weights) seen[beta] = true;
  for (const auto& [beta, v] : mu.weights) seen[mu.group.compose(gamma, beta)] = true;
  for (const auto& [beta, flag] : seen)
    total += std::abs(weight(mu.group.compose(inv, beta)) - weight(beta));
  return total;
}

std::vector<Element> interval(std::int64_t lo, std::int64_t hi) {
  std::vector<Element> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back({v});
  return out;
}

}  // namespace multlab::groupalg
