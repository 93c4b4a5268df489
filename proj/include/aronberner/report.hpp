#ifndef ARONBERNER_REPORT_HPP
#define ARONBERNER_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aronberner/battery.hpp"
#include "aronberner/limits.hpp"

namespace aronberner {

/// Structured limit report: one JSON document with a fixed key order.
///
///   example, construction, params {truncation, horizon, tol}, functionals,
///   probes [{nets, orders [{order, greek, word, values, status,
///   stabilization, failure?}]}], classification, witness,
///   extension_triples_consistent
///
/// `values` is null when the limit failed; `witness` is null unless the
/// classification is irregular; `extension_triples_consistent` is null when a
/// limit failed.
std::string render_report_structured(const ExtensionReport& report, const std::string& construction);

/// Human-readable table derived from the structured document.
std::string render_report_human(const ExtensionReport& report, const std::string& construction);

std::string render_battery(const BatteryResult& result);

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

/// The full acceptance battery run by `report --all`.
std::vector<CriterionOutcome> run_acceptance_battery(std::uint64_t seed = 20241016);

std::string render_acceptance(const std::vector<CriterionOutcome>& outcomes);

}  // namespace aronberner

#endif  // ARONBERNER_REPORT_HPP
