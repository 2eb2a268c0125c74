#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fmgl {

/// Shortest decimal string that parses back to exactly v (std::to_chars).
std::string format_double(double v);

/// Minimal RFC-4180-style writer: header row, LF line endings, numeric
/// fields in round-trip form. Deterministic byte-for-byte.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);

private:
    std::ostream& os_;
};

} // namespace fmgl
