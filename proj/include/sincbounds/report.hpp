#pragma once

// Report assembly: runs the selected verification suites and renders the
// result as human-readable text or as a deterministic, diffable
// key/value machine document that parses back losslessly.

#include <string>
#include <vector>

#include "sincbounds/constants.hpp"
#include "sincbounds/verifier.hpp"

namespace sincbounds {

enum class Suite { all, core, applications, sharpness };

Suite parse_suite(const std::string& name);

struct CaseRecord {
    std::string id;
    std::string claim;
    std::string status; // verified | violated | inconclusive
    double min_margin = 0;
    double argmin = 0;
    double witness = std::numeric_limits<double>::quiet_NaN();
    long evaluations = 0;
    bool expected_met = false;
};

struct ReportDocument {
    std::string tool_version;
    std::string precision_mode;
    std::vector<CaseRecord> cases;
    ConstantCatalogue constants;
    long timing_ms = 0;

    bool all_expectations_met() const;
};

/// Runs the selected suite(s) with the given verifier grid.
ReportDocument run_report(Suite suite, int grid,
                          const PrecisionConfig& cfg = {});

std::string emit_text(const ReportDocument& doc);

/// Fixed field order, one key=value per line, doubles at 17 significant
/// digits. Byte-identical across runs with the same inputs and version
/// (timing is reported as 0 here; the text format carries the real one).
std::string emit_machine(const ReportDocument& doc);

ReportDocument parse_machine(const std::string& text);

} // namespace sincbounds
