#pragma once

// JSON rendering of certificates, verdicts and survey tables.

#include <string>

#include "k3lat/checker.hpp"

namespace k3lat {

std::string certificate_to_json(const CaseCertificate& cert, int indent = 2);

// Throws std::invalid_argument when a field is missing or has the wrong type.
CaseCertificate certificate_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& v, int indent = 2);

// One row per (p, sigma): p,sigma,answer,reason,d,residue_rule,arth_on_ns
std::string survey_to_csv(const SurveyReport& report);

// Human-readable grid: one line per prime, one column per sigma.
std::string survey_summary(const SurveyReport& report);

}  // namespace k3lat
