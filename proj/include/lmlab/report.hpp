#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lmlab/bounds.hpp"
#include "lmlab/lattice.hpp"

namespace lmlab {

// Every number is written as a decimal string so that large volumes and
// rationals survive the round trip.

nlohmann::json to_json(const CriterionOutcome& outcome);
nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const VerificationResult& result);

CriterionOutcome criterion_from_json(const nlohmann::json& j);
ClassificationReport classification_from_json(const nlohmann::json& j);
VerificationResult verification_from_json(const nlohmann::json& j);

std::string csv_header();
/// n,e,s,verdict,lattice_excluded,excluded_by (criterion names joined by ';').
std::string csv_row(const ClassificationReport& report);

}  // namespace lmlab
