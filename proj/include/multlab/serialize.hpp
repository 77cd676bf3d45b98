#pragma once

#include <json.hpp>

#include "multlab/extension.hpp"
#include "multlab/normest.hpp"

namespace multlab::serialize {

using nlohmann::json;

/// {"rows": R, "cols": C, "entries": [[r, c, re, im], ...]}
json to_json(const multiplier::SchurSymbol& s);
multiplier::SchurSymbol schur_symbol_from_json(const json& j);

/// {"group": {...}, "entries": [[coords..., re, im], ...]}
json to_json(const multiplier::FourierSymbol& s);
multiplier::FourierSymbol fourier_symbol_from_json(const json& j);

json to_json(const groupalg::GroupModel& g);
groupalg::GroupModel group_from_json(const json& j);

/// {"lower", "upper" (null when unknown), "method", "restarts",
///  "iterations", "seed"}
json to_json(const normest::NormEstimate& e);

/// {"x": [...], "y": [...], "support": [[r, c], ...]}; scalars may be
/// numbers or [re, im] pairs.
extension::RankOneSpec rank_one_spec_from_json(const json& j);
json to_json(const extension::RankOneSpec& spec);

/// {"rho_tilde": dense matrix as [re, im] pairs, "bound",
///  "corrections": count, "checks": {...}}
json certificate_to_json(const extension::ExtensionCertificate& cert,
                         const extension::VerifyReport* report = nullptr);

}  // namespace multlab::serialize
