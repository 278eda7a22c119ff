#pragma once

#include <json.hpp>

#include "average.hpp"
#include "fastest.hpp"
#include "girth.hpp"
#include "lyapunov.hpp"
#include "report.hpp"

// JSON builders shared by the C API and the CLI. Conventions: rationals as
// "p/q" strings, words as plain letter strings, reals snapped to 12
// significant digits, absent optionals as null.
namespace matgrowth::report {

nlohmann::json json_of(const Rational& r);
nlohmann::json json_of(const Mat2& m);
nlohmann::json json_of(const Word& w);
nlohmann::json json_of(const PairSpec& p);
nlohmann::json json_of(const fastest::MaximizerRecord& rec);
nlohmann::json json_of(const fastest::JsrEstimate& est);
nlohmann::json json_of(const fastest::PeriodProbe& probe);
nlohmann::json json_of(const fastest::AlternationReport& rep);
nlohmann::json json_of(const fastest::CandidateRate& cr);
nlohmann::json json_of(const average::RecurrenceSpec& spec);
nlohmann::json json_of(const average::MeanCheck& check);
nlohmann::json json_of(const lyapunov::Estimate& est);
nlohmann::json json_of(const lyapunov::BoundsReport& rep);
nlohmann::json json_of(const girth::BfsResult& res);
nlohmann::json json_of(const GrowthReport& rep);
nlohmann::json json_of(const std::vector<GrowthReport>& reports);

}  // namespace matgrowth::report
