#pragma once

// JSON and CSV rendering of results. Floating-point values are written with
// 17 significant digits so that output round-trips.

#include <string>
#include <vector>

#include "cigf/cigf.hpp"

namespace cigf {

/// %.17g
std::string fmt17(double v);

/// JSON has no inf/nan literals; those are written as quoted strings.
std::string json_number(double v);

/// {"value":..,"err_est":..,"method":"..","meta":{..}} on one line.
std::string to_json(const MeasureReport& r);

/// One CSV line; fields are quoted when they contain a comma or a quote.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace cigf
