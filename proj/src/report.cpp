#include "qmb/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qmb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ResultRecord check_close(std::string experiment, std::string metric, double value,
                         double expected, double tolerance, ParamsEcho params) {
    ResultRecord rec{std::move(experiment), std::move(metric), value,   expected,
                     tolerance,             true,              std::move(params)};
    rec.pass = std::isfinite(value) && std::abs(value - expected) <= tolerance;
    return rec;
}

ResultRecord check_upper(std::string experiment, std::string metric, double value, double bound,
                         double tolerance, ParamsEcho params) {
    ResultRecord rec{std::move(experiment), std::move(metric), value,   bound,
                     tolerance,             true,              std::move(params)};
    rec.pass = std::isfinite(value) && value <= bound + tolerance;
    return rec;
}

ResultRecord info_record(std::string experiment, std::string metric, double value,
                         ParamsEcho params) {
    return {std::move(experiment), std::move(metric), value, std::nullopt, std::nullopt, true,
            std::move(params)};
}

bool all_pass(const std::vector<ResultRecord>& records) {
    for (const ResultRecord& rec : records) {
        if (!rec.pass) return false;
    }
    return true;
}

std::string to_jsonl(const std::vector<ResultRecord>& records) {
    std::string out;
    for (const ResultRecord& rec : records) {
        ordered_json j;
        j["experiment"] = rec.experiment;
        j["metric"] = rec.metric;
        j["value"] = rec.value;
        if (rec.expected) j["expected"] = *rec.expected;
        if (rec.tolerance) j["tolerance"] = *rec.tolerance;
        j["pass"] = rec.pass;
        j["params"] = rec.params;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<ResultRecord> from_jsonl(const std::string& text) {
    std::vector<ResultRecord> records;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(start, end - start);
        start = end + 1;
        if (line.empty()) continue;
        const ordered_json j = ordered_json::parse(line);
        ResultRecord rec;
        rec.experiment = j.at("experiment").get<std::string>();
        rec.metric = j.at("metric").get<std::string>();
        rec.value = j.at("value").get<double>();
        if (j.contains("expected")) rec.expected = j.at("expected").get<double>();
        if (j.contains("tolerance")) rec.tolerance = j.at("tolerance").get<double>();
        rec.pass = j.at("pass").get<bool>();
        rec.params = j.at("params").get<std::map<std::string, std::string>>();
        records.push_back(std::move(rec));
    }
    return records;
}

std::string to_csv(const std::vector<ResultRecord>& records) {
    std::string out = "experiment,metric,value,expected,tolerance,pass,params\n";
    for (const ResultRecord& rec : records) {
        out += rec.experiment;
        out += ',';
        out += rec.metric;
        out += ',';
        out += format_double(rec.value);
        out += ',';
        if (rec.expected) out += format_double(*rec.expected);
        out += ',';
        if (rec.tolerance) out += format_double(*rec.tolerance);
        out += ',';
        out += rec.pass ? "true" : "false";
        out += ",\"";
        bool first = true;
        for (const auto& [key, value] : rec.params) {
            if (key.find_first_of(",;\"=") != std::string::npos ||
                value.find_first_of(",;\"") != std::string::npos) {
                throw std::invalid_argument("to_csv: params must not contain , ; \" or =");
            }
            if (!first) out += ';';
            out += key;
            out += '=';
            out += value;
            first = false;
        }
        out += "\"\n";
    }
    return out;
}

}  // namespace qmb
