#include "cigf/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace cigf {

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_number(double v)
{
    return std::isfinite(v) ? fmt17(v) : "\"" + fmt17(v) + "\"";
}

std::string to_json(const MeasureReport& r)
{
    std::string out = "{\"value\":" + json_number(r.value) + ",\"err_est\":" + json_number(r.err_est) + ",\"method\":" +
                      nlohmann::json(method_name(r.method)).dump() + ",\"meta\":{";
    bool first = true;
    for (const auto& [k, v] : r.meta) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(k).dump() + ':' + nlohmann::json(v).dump();
    }
    return out + "}}";
}

std::string csv_line(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") == std::string::npos) {
            out += f;
            continue;
        }
        out += '"';
        for (char c : f) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
    }
    return out;
}

}  // namespace cigf
