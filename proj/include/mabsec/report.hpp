#pragma once

#include <filesystem>
#include <string>

#include "mabsec/experiment.hpp"

namespace mabsec {

inline constexpr const char* kCsvHeader =
    "cell_id,trial,seed,delta_1k,realized_delta0_1k,target_pulls,pulls_before_detection,cost,fire_time,learner,"
    "attacker";

// Raw rows, header first, LF line endings, shortest round-trip numbers.
std::string rows_csv(const ExperimentReport& report);

// Config echo plus per-cell aggregates.
std::string summary_json(const ExperimentReport& report);

struct ReportPaths {
    std::filesystem::path csv;
    std::filesystem::path json;
};

// Writes <dir>/rows.csv and <dir>/summary.json, creating dir. Throws IoError.
ReportPaths write_report(const ExperimentReport& report, const std::filesystem::path& dir);

}  // namespace mabsec
