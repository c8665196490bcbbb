#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qmb {

/// One experiment metric. For |value - expected| <= tolerance checks both
/// optional fields are set; upper-bound checks (value <= expected +
/// tolerance) are built through check_upper; informational records carry
/// neither and always pass. `params` echoes the experiment configuration
/// so records are auditable on their own.
struct ResultRecord {
    std::string experiment;
    std::string metric;
    double value = 0.0;
    std::optional<double> expected;
    std::optional<double> tolerance;
    bool pass = true;
    std::map<std::string, std::string> params;

    bool operator==(const ResultRecord&) const = default;
};

using ParamsEcho = std::map<std::string, std::string>;

ResultRecord check_close(std::string experiment, std::string metric, double value,
                         double expected, double tolerance, ParamsEcho params = {});
ResultRecord check_upper(std::string experiment, std::string metric, double value,
                         double bound, double tolerance, ParamsEcho params = {});
ResultRecord info_record(std::string experiment, std::string metric, double value,
                         ParamsEcho params = {});

bool all_pass(const std::vector<ResultRecord>& records);

/// One JSON object per line, keys in the fixed order experiment, metric,
/// value, expected, tolerance, pass, params (absent optionals omitted).
/// Values survive a round-trip exactly.
std::string to_jsonl(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> from_jsonl(const std::string& text);

/// Flat summary with a header row; params flattened to k=v pairs joined
/// by ';' inside a quoted field.
std::string to_csv(const std::vector<ResultRecord>& records);

}  // namespace qmb
