#include "rio/wom_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rio/errors.hpp"

namespace rio {

namespace {

std::string bit_string(std::uint32_t value, int width) {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        out[static_cast<std::size_t>(i)] = (value >> (width - 1 - i) & 1) ? '1' : '0';
    return out;
}

std::uint32_t parse_bit_string(const std::string& text, int width, const char* what) {
    if (static_cast<int>(text.size()) != width)
        throw FormatError(std::string(what) + " '" + text + "' must have exactly " +
                          std::to_string(width) + " bits");
    std::uint32_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw FormatError(std::string(what) + " '" + text + "' may contain only '0' and '1'");
        value = (value << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return value;
}

int get_int_field(const nlohmann::json& doc, const char* name) {
    if (!doc.contains(name) || !doc[name].is_number_integer())
        throw FormatError(std::string("code spec is missing integer field '") + name + "'");
    return doc[name].get<int>();
}

} // namespace

std::string wom_code_to_json(const WomCodeSpec& code) {
    const WomCodeSpec full = with_materialized_tables(code);
    nlohmann::json doc;
    doc["n"] = full.n();
    doc["k"] = full.k();
    doc["t"] = full.t();

    nlohmann::json decode = nlohmann::json::array();
    for (std::uint32_t value : full.decode_map())
        decode.push_back(bit_string(value, full.k()));
    doc["decode"] = std::move(decode);

    nlohmann::json tables = nlohmann::json::array();
    for (const WriteTable& table : full.write_tables()) {
        nlohmann::json rows = nlohmann::json::object();
        for (const auto& [prior, row] : table) {
            nlohmann::json cells = nlohmann::json::object();
            for (const auto& [info, succ] : row)
                cells[bit_string(info, full.k())] = bit_string(succ, full.n());
            rows[bit_string(prior, full.n())] = std::move(cells);
        }
        tables.push_back(std::move(rows));
    }
    doc["write_tables"] = std::move(tables);

    return doc.dump(2) + "\n";
}

WomCodeSpec wom_code_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("code spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw FormatError("code spec must be a JSON object");

    int n = get_int_field(doc, "n");
    int k = get_int_field(doc, "k");
    int t = get_int_field(doc, "t");
    if (n < 1 || n > BinaryCellState::kMaxCells || k < 1 || t < 1)
        throw FormatError("code spec parameters out of range");

    if (!doc.contains("decode") || !doc["decode"].is_array())
        throw FormatError("code spec is missing the 'decode' array");
    const auto& decode_json = doc["decode"];
    if (decode_json.size() != (1ull << n))
        throw FormatError("decode table must have exactly 2^n entries");
    std::vector<std::uint32_t> decode;
    decode.reserve(decode_json.size());
    for (const auto& entry : decode_json) {
        if (!entry.is_string())
            throw FormatError("decode table entries must be bit strings");
        decode.push_back(parse_bit_string(entry.get<std::string>(), k, "decode entry"));
    }

    if (!doc.contains("write_tables") || !doc["write_tables"].is_array())
        throw FormatError("code spec is missing the 'write_tables' array");
    const auto& tables_json = doc["write_tables"];
    if (tables_json.size() != static_cast<std::size_t>(t))
        throw FormatError("expected one write table per write");
    std::vector<WriteTable> tables;
    tables.reserve(tables_json.size());
    for (const auto& rows : tables_json) {
        if (!rows.is_object())
            throw FormatError("write tables must be objects keyed by prior state");
        WriteTable table;
        for (const auto& [prior_text, row] : rows.items()) {
            std::uint32_t prior = parse_bit_string(prior_text, n, "prior state");
            if (!row.is_object())
                throw FormatError("write table rows must map info words to successors");
            for (const auto& [info_text, succ_json] : row.items()) {
                std::uint32_t info = parse_bit_string(info_text, k, "info word");
                if (!succ_json.is_string())
                    throw FormatError("write table successors must be bit strings");
                table[prior][info] =
                    parse_bit_string(succ_json.get<std::string>(), n, "successor state");
            }
        }
        tables.push_back(std::move(table));
    }

    try {
        return WomCodeSpec(n, k, t, std::move(decode), std::move(tables));
    } catch (const DimensionMismatch& e) {
        throw FormatError(e.what());
    }
}

void save_wom_code(const WomCodeSpec& code, const std::filesystem::path& path) {
    std::string text = wom_code_to_json(code);
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out.flush())
        throw IoError("failed to write '" + path.string() + "'");
}

WomCodeSpec load_wom_code(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("failed to read '" + path.string() + "'");
    return wom_code_from_json(buffer.str());
}

} // namespace rio
