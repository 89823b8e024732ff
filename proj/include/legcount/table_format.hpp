#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace legcount {

enum class OutputFormat { plain, csv, json, markdown };

// Accepts "plain", "csv", "json", "markdown"; throws std::invalid_argument
// otherwise.
OutputFormat parse_format(std::string_view name);
std::string format_name(OutputFormat format);

struct TableRow {
    std::vector<long> conditions;
    std::string count;  // decimal integer; kept as a string so consumers
                        // never truncate
};

// csv and json are byte-stable: rendering the parse of a rendering
// reproduces it exactly. LF line endings, UTF-8.
std::string render_rows(const std::vector<TableRow>& rows, OutputFormat format);
std::vector<TableRow> parse_rows(const std::string& text, OutputFormat format);

}  // namespace legcount
