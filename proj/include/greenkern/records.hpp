#pragma once

// Output records shared by the CLI subcommands: bit-stable CSV (17
// significant digits) and JSON-lines serializations.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace greenkern {

inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

struct OutputRecord {
    std::string model;
    std::map<std::string, double> params;  // ordered => stable serialization
    double zeta_re = 0.0, zeta_im = 0.0;
    std::vector<double> coords;
    double value_re = 0.0, value_im = 0.0;
    double abs_error = 0.0;
    std::string method;
};

inline std::string record_csv_header() {
    return "model,params,zeta_re,zeta_im,coords,value_re,value_im,abs_error,method";
}

inline std::string to_csv(const OutputRecord& r) {
    std::string params;
    for (const auto& [k, v] : r.params) {
        if (!params.empty()) params += ';';
        params += k + "=" + format_g17(v);
    }
    std::string coords;
    for (double c : r.coords) {
        if (!coords.empty()) coords += ';';
        coords += format_g17(c);
    }
    return r.model + "," + params + "," + format_g17(r.zeta_re) + "," + format_g17(r.zeta_im) +
           "," + coords + "," + format_g17(r.value_re) + "," + format_g17(r.value_im) + "," +
           format_g17(r.abs_error) + "," + r.method;
}

inline nlohmann::json to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["model"] = r.model;
    j["params"] = r.params;
    j["zeta_re"] = r.zeta_re;
    j["zeta_im"] = r.zeta_im;
    j["coords"] = r.coords;
    j["value_re"] = r.value_re;
    j["value_im"] = r.value_im;
    j["abs_error"] = r.abs_error;
    j["method"] = r.method;
    return j;
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord r;
    r.model = j.at("model").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, double>>();
    r.zeta_re = j.at("zeta_re").get<double>();
    r.zeta_im = j.at("zeta_im").get<double>();
    r.coords = j.at("coords").get<std::vector<double>>();
    r.value_re = j.at("value_re").get<double>();
    r.value_im = j.at("value_im").get<double>();
    r.abs_error = j.at("abs_error").get<double>();
    r.method = j.at("method").get<std::string>();
    return r;
}

}  // namespace greenkern
