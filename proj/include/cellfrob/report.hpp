#ifndef CELLFROB_REPORT_HPP
#define CELLFROB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "cellfrob/spec_file.hpp"

namespace cellfrob {

using Json = nlohmann::ordered_json;

struct ReportOptions {
    /// When false, stop after the validation sections (the `validate`
    /// subcommand); verdicts, oracles and identity suites are skipped.
    bool full = true;
};

struct ReportResult {
    Json doc;
    int exit_code = 0; // 0 ok, 1 validation failure, 3 unexplained disagreement
};

/// Runs the whole pipeline: validate -> duals -> cellular -> Phi/Psi ->
/// section-4 checks -> k -> verdicts -> oracles -> identity suites.
/// Determinstic: identical input yields byte-identical machine output.
/// Stops at the first failed validation stage with a partial report.
ReportResult run_report(const ParsedInput& input, const ReportOptions& opts = {});

/// Both oracles on one cell module.
Json oracle_report(const ParsedInput& input, const std::string& cell_label,
                   const std::string& flavor);

/// Text rendering of the same values the machine document carries.
std::string render_human(const Json& doc);

} // namespace cellfrob

#endif
