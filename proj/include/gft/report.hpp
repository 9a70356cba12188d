#pragma once

// Deterministic text output: shortest round-trip decimals, '.' separator,
// '\n' endings.

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace gft::report {

std::string format_double(double v);

// header + rows, comma separated, header row first
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

} // namespace gft::report
