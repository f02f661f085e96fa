#pragma once

#include <ostream>
#include <span>
#include <string>

#include "closure/dataset.hpp"
#include "closure/evaluation.hpp"

namespace closure {

inline constexpr const char* kReportCsvHeader =
    "dataset,k,train_frac,method,pr_auc,baseline,performance,candidates,positives";

/// %.6g formatting used by every report writer.
std::string format_real(double value);

void write_csv(std::ostream& out, std::span<const EvalReport> reports);
void write_json(std::ostream& out, std::span<const EvalReport> reports);

void write_stats_csv(std::ostream& out, const StatsRecord& stats);
void write_stats_json(std::ostream& out, const std::string& dataset, const StatsRecord& stats);

}  // namespace closure
