#include "starlike/records.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "starlike/errors.hpp"

namespace starlike {

std::string format_g9(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string csv_header() {
    return "class,b,c,p1,p2,region,alpha,rho,residual,method,sharp";
}

namespace {

std::string opt_field(const std::optional<double>& v) {
    return v ? format_g9(*v) : std::string{};
}

}  // namespace

std::string to_csv_row(const OutputRecord& rec) {
    std::ostringstream os;
    os << rec.cls << ',' << opt_field(rec.b) << ',' << opt_field(rec.c) << ','
       << format_g9(rec.p1) << ',' << opt_field(rec.p2) << ',' << rec.region << ','
       << opt_field(rec.alpha) << ',' << format_g9(rec.rho) << ','
       << format_g9(rec.residual) << ',' << rec.method << ','
       << (rec.sharp ? (*rec.sharp ? "yes" : "no") : "");
    return os.str();
}

OutputRecord parse_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string token;
    std::istringstream is(line);
    while (std::getline(is, token, ',')) fields.push_back(token);
    while (fields.size() < 11) fields.emplace_back();
    if (fields.size() != 11) throw ParameterError("CSV row has wrong field count: " + line);

    auto opt_double = [](const std::string& s) -> std::optional<double> {
        if (s.empty()) return std::nullopt;
        return std::stod(s);
    };
    OutputRecord rec;
    rec.cls = fields[0];
    rec.b = opt_double(fields[1]);
    rec.c = opt_double(fields[2]);
    rec.p1 = std::stod(fields[3]);
    rec.p2 = opt_double(fields[4]);
    rec.region = fields[5];
    rec.alpha = opt_double(fields[6]);
    rec.rho = std::stod(fields[7]);
    rec.residual = std::stod(fields[8]);
    rec.method = fields[9];
    if (fields[10] == "yes") rec.sharp = true;
    else if (fields[10] == "no") rec.sharp = false;
    return rec;
}

nlohmann::json to_json(const OutputRecord& rec) {
    nlohmann::json j;
    j["class"] = rec.cls;
    j["b"] = rec.b ? nlohmann::json(*rec.b) : nlohmann::json(nullptr);
    j["c"] = rec.c ? nlohmann::json(*rec.c) : nlohmann::json(nullptr);
    j["p1"] = rec.p1;
    j["p2"] = rec.p2 ? nlohmann::json(*rec.p2) : nlohmann::json(nullptr);
    j["region"] = rec.region;
    j["alpha"] = rec.alpha ? nlohmann::json(*rec.alpha) : nlohmann::json(nullptr);
    j["rho"] = rec.rho;
    j["residual"] = rec.residual;
    j["method"] = rec.method;
    j["sharp"] = rec.sharp ? nlohmann::json(*rec.sharp) : nlohmann::json(nullptr);
    return j;
}

void sort_records(std::vector<OutputRecord>& records) {
    auto key = [](const OutputRecord& r) {
        return std::make_tuple(r.cls, r.b.value_or(-1e300), r.c.value_or(-1e300),
                               r.region, r.alpha.value_or(-1e300));
    };
    std::stable_sort(records.begin(), records.end(),
                     [&key](const OutputRecord& a, const OutputRecord& b) {
                         return key(a) < key(b);
                     });
}

}  // namespace starlike
