#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace starlike {

// One output row per (class-parameters, region) pair. Optional fields print
// empty in CSV and null in JSON.
struct OutputRecord {
    std::string cls;
    std::optional<double> b, c;
    double p1 = 0.0;
    std::optional<double> p2;
    std::string region;
    std::optional<double> alpha;
    double rho = 0.0;
    double residual = 0.0;
    std::string method;
    std::optional<bool> sharp;
};

// 9 significant digits, round-half-even, '.' decimal separator.
std::string format_g9(double value);

std::string csv_header();  // class,b,c,p1,p2,region,alpha,rho,residual,method,sharp
std::string to_csv_row(const OutputRecord& rec);
OutputRecord parse_csv_row(const std::string& line);
nlohmann::json to_json(const OutputRecord& rec);

// Stable output order: (class, b, c, region, alpha).
void sort_records(std::vector<OutputRecord>& records);

}  // namespace starlike
