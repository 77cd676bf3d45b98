#include "multlab/serialize.hpp"

namespace multlab::serialize {

json to_json(const multiplier::SchurSymbol& s) {
  json entries = json::array();
  const auto& pairs = s.support().pairs;
  const auto& vals = s.values();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    entries.push_back({pairs[i].first, pairs[i].second, vals[i].real(), vals[i].imag()});
  return json{{"rows", s.rows()}, {"cols", s.cols()}, {"entries", entries}};
}

multiplier::SchurSymbol schur_symbol_from_json(const json& j) {
  std::vector<std::tuple<int, int, Complex>> entries;
  for (const auto& e : j.at("entries"))
    entries.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(),
                         Complex(e.at(2).get<double>(), e.at(3).get<double>()));
  return multiplier::SchurSymbol::from_entries(j.at("rows").get<int>(),
                                               j.at("cols").get<int>(), entries);
}

json to_json(const groupalg::GroupModel& g) {
  if (g.kind() == groupalg::GroupModel::Kind::cyclic)
    return json{{"kind", "cyclic"}, {"n", g.modulus()}};
  return json{{"kind", "lattice"}, {"dim", g.rank()}, {"radius", g.radius()}};
}

groupalg::GroupModel group_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return groupalg::GroupModel::cyclic(j.at("n").get<std::int64_t>());
  if (kind == "lattice")
    return groupalg::GroupModel::lattice(j.at("dim").get<int>(),
                                         j.at("radius").get<std::int64_t>());
  throw std::invalid_argument("group_from_json: unknown kind");
}

json to_json(const multiplier::FourierSymbol& s) {
  json entries = json::array();
  for (const auto& [el, v] : s.values) {
    json row = json::array();
    for (std::int64_t c : el) row.push_back(c);
    row.push_back(v.real());
    row.push_back(v.imag());
    entries.push_back(row);
  }
  return json{{"group", to_json(s.group)}, {"entries", entries}};
}

multiplier::FourierSymbol fourier_symbol_from_json(const json& j) {
  groupalg::GroupModel g = group_from_json(j.at("group"));
  std::map<groupalg::Element, Complex> vals;
  for (const auto& e : j.at("entries")) {
    if (static_cast<int>(e.size()) != g.rank() + 2)
      throw std::invalid_argument("fourier_symbol_from_json: entry arity mismatch");
    groupalg::Element el;
    for (int i = 0; i < g.rank(); ++i) el.push_back(e.at(i).get<std::int64_t>());
    vals[g.normal(el)] = Complex(e.at(g.rank()).get<double>(),
                                 e.at(g.rank() + 1).get<double>());
  }
  return multiplier::FourierSymbol(g, std::move(vals));
}

json to_json(const normest::NormEstimate& e) {
  json j{{"lower", e.lower},
         {"method", e.method},
         {"restarts", e.restarts},
         {"iterations", e.iterations},
         {"seed", e.seed}};
  if (e.upper.has_value())
    j["upper"] = *e.upper;
  else
    j["upper"] = nullptr;
  return j;
}

namespace {
Complex scalar_from_json(const json& v) {
  if (v.is_array()) return Complex(v.at(0).get<double>(), v.at(1).get<double>());
  return Complex(v.get<double>(), 0.0);
}
}  // namespace

extension::RankOneSpec rank_one_spec_from_json(const json& j) {
  std::vector<Complex> x, y;
  for (const auto& v : j.at("x")) x.push_back(scalar_from_json(v));
  for (const auto& v : j.at("y")) y.push_back(scalar_from_json(v));
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("support"))
    pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  multiplier::Support supp(static_cast<int>(x.size()), static_cast<int>(y.size()), pairs);
  return extension::RankOneSpec(std::move(x), std::move(y), std::move(supp));
}

json to_json(const extension::RankOneSpec& spec) {
  json x = json::array(), y = json::array(), support = json::array();
  for (const auto& v : spec.x) x.push_back({v.real(), v.imag()});
  for (const auto& v : spec.y) y.push_back({v.real(), v.imag()});
  for (const auto& [r, c] : spec.support.pairs) support.push_back({r, c});
  return json{{"x", x}, {"y", y}, {"support", support}};
}

json certificate_to_json(const extension::ExtensionCertificate& cert,
                         const extension::VerifyReport* report) {
  Eigen::MatrixXcd m = cert.product.dense();
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  json j{{"rho_tilde", rows},
         {"bound", cert.bound},
         {"corrections", cert.corrections.size()}};
  if (report) {
    j["checks"] = json{{"support", report->support_ok},
                       {"corrections", report->corrections_ok},
                       {"product", report->product_ok},
                       {"action", report->action_ok},
                       {"lower", report->lower_ok},
                       {"max_support_dev", report->max_support_dev},
                       {"worst_action_excess", report->worst_action_excess},
                       {"ascent_lower", report->ascent_lower}};
  }
  return j;
}

}  // namespace multlab::serialize
