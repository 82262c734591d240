#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infobridge {

/// Formats a double with 17 significant digits ('.' decimal separator,
/// locale-independent) so that written values round-trip exactly.
std::string format_double(double v);

/// Minimal CSV emitter: header row first, then one row per call.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& cells);
    void row_values(const std::vector<double>& values);

private:
    std::ostream& os_;
    std::size_t columns_;
};

}  // namespace infobridge
