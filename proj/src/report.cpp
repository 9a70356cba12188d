#include "gft/report.hpp"

#include <charconv>
#include <cmath>

namespace gft::report {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

} // namespace gft::report
