#include "legcount/table_format.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace legcount {

OutputFormat parse_format(std::string_view name) {
    if (name == "plain")
        return OutputFormat::plain;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    if (name == "markdown" || name == "md")
        return OutputFormat::markdown;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string format_name(OutputFormat format) {
    switch (format) {
    case OutputFormat::plain:
        return "plain";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::json:
        return "json";
    case OutputFormat::markdown:
        return "markdown";
    }
    return "?";
}

namespace {

std::string conditions_tuple(const std::vector<long>& conditions) {
    std::string s = "(";
    for (std::size_t i = 0; i < conditions.size(); ++i)
        s += (i ? "," : "") + std::to_string(conditions[i]);
    return s + ")";
}

std::string render_csv(const std::vector<TableRow>& rows) {
    std::string out = "conditions,count\n";
    for (const TableRow& row : rows) {
        out += "\"";
        for (std::size_t i = 0; i < row.conditions.size(); ++i)
            out += (i ? "," : "") + std::to_string(row.conditions[i]);
        out += "\"," + row.count + "\n";
    }
    return out;
}

std::vector<TableRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "conditions,count")
        throw std::invalid_argument("csv: missing 'conditions,count' header");
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.size() < 4 || line.front() != '"')
            throw std::invalid_argument("csv: malformed row: " + line);
        const auto close = line.find('"', 1);
        if (close == std::string::npos || close + 1 >= line.size() ||
            line[close + 1] != ',')
            throw std::invalid_argument("csv: malformed row: " + line);
        TableRow row;
        std::istringstream cs(line.substr(1, close - 1));
        std::string tok;
        while (std::getline(cs, tok, ','))
            row.conditions.push_back(std::stol(tok));
        row.count = line.substr(close + 2);
        if (row.count.empty())
            throw std::invalid_argument("csv: empty count: " + line);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& row : rows) {
        nlohmann::json obj;
        obj["conditions"] = row.conditions;
        obj["count"] = row.count;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<TableRow> parse_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array())
        throw std::invalid_argument("json: expected an array of rows");
    std::vector<TableRow> rows;
    for (const auto& obj : arr) {
        TableRow row;
        row.conditions = obj.at("conditions").get<std::vector<long>>();
        row.count = obj.at("count").get<std::string>();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_markdown(const std::vector<TableRow>& rows) {
    const std::size_t k = rows.empty() ? 0 : rows.front().conditions.size();
    std::string header = "(a_2";
    for (std::size_t i = 1; i < k; ++i)
        header += ",a_" + std::to_string(i + 2);
    header += ")";
    std::string out = "| " + header + " | count |\n| --- | --- |\n";
    for (const TableRow& row : rows)
        out += "| " + conditions_tuple(row.conditions) + " | " + row.count +
               " |\n";
    return out;
}

std::string render_plain(const std::vector<TableRow>& rows) {
    std::string out;
    for (const TableRow& row : rows)
        out += conditions_tuple(row.conditions) + "  " + row.count + "\n";
    return out;
}

}  // namespace

std::string render_rows(const std::vector<TableRow>& rows, OutputFormat format) {
    switch (format) {
    case OutputFormat::csv:
        return render_csv(rows);
    case OutputFormat::json:
        return render_json(rows);
    case OutputFormat::markdown:
        return render_markdown(rows);
    case OutputFormat::plain:
        return render_plain(rows);
    }
    throw std::logic_error("unreachable");
}

std::vector<TableRow> parse_rows(const std::string& text, OutputFormat format) {
    switch (format) {
    case OutputFormat::csv:
        return parse_csv(text);
    case OutputFormat::json:
        return parse_json(text);
    default:
        throw std::invalid_argument(
            "only csv and json tables can be parsed back");
    }
}

}  // namespace legcount
