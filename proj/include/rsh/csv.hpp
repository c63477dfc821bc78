#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include "rsh/errors.hpp"
#include "rsh/indicatrix.hpp"
#include "rsh/samples.hpp"

namespace rsh {

// Shortest decimal string that parses back to exactly the same double.
// Keeps CSV and JSON output byte-stable across runs and platforms.
inline std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw invalid_params("csv: malformed number '" + std::string(text) + "'");
    if (!std::isfinite(value)) throw invalid_params("csv: non-finite number");
    return value;
}

namespace csv_detail {

inline void write_rows(std::ostream& os, const char* header, const std::vector<double>& s,
                       const std::vector<Vec3>& p) {
    os << header << "\n";
    for (size_t i = 0; i < s.size(); ++i) {
        os << format_double(s[i]) << ',' << format_double(p[i].x) << ','
           << format_double(p[i].y) << ',' << format_double(p[i].z) << "\n";
    }
}

// Split one data line into exactly four numeric fields.
inline void parse_row(std::string_view line, size_t line_no, double out[4]) {
    for (int field = 0; field < 4; ++field) {
        const size_t comma = line.find(',');
        const bool last = field == 3;
        if (last != (comma == std::string_view::npos))
            throw invalid_params("csv: line " + std::to_string(line_no) +
                                 ": expected 4 comma-separated fields");
        out[field] = parse_double(last ? line : line.substr(0, comma));
        if (!last) line.remove_prefix(comma + 1);
    }
}

}  // namespace csv_detail

inline void write_curve_csv(std::ostream& os, const CurveSamples& samples) {
    csv_detail::write_rows(os, "s,x,y,z", samples.s, samples.p);
}

inline void write_trace_csv(std::ostream& os, const SphericalTrace& trace) {
    csv_detail::write_rows(os, "s,ux,uy,uz", trace.s, trace.points);
}

// Reads `s,x,y,z` rows. Requires the exact header and strictly increasing s;
// tolerates a trailing newline and CR line endings on input (output is
// always LF).
inline CurveSamples read_curve_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw invalid_params("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "s,x,y,z")
        throw invalid_params("csv: expected header 's,x,y,z', got '" + line + "'");

    CurveSamples samples;
    size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double v[4];
        csv_detail::parse_row(line, line_no, v);
        if (!samples.s.empty() && !(v[0] > samples.s.back()))
            throw invalid_params("csv: line " + std::to_string(line_no) +
                                 ": s must be strictly increasing");
        samples.s.push_back(v[0]);
        samples.p.push_back({v[1], v[2], v[3]});
    }
    return samples;
}

}  // namespace rsh
