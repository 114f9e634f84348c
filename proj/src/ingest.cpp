#include "cointerest/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "cointerest/errors.hpp"

namespace cointerest {

namespace {

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

// Splits RFC-4180 text into rows. Quoted fields may span lines; `line` is
// the physical line on which the row starts. Blank lines are dropped.
std::vector<CsvRow> split_csv(std::string_view text)
{
    std::vector<CsvRow> rows;
    std::size_t line = 1;
    std::size_t pos = 0;

    while (pos < text.size()) {
        CsvRow row;
        row.line = line;
        bool row_done = false;
        while (!row_done) {
            std::string field;
            std::size_t p = pos;
            while (p < text.size() && (text[p] == ' ' || text[p] == '\t'))
                ++p;
            if (p < text.size() && text[p] == '"') {
                const std::size_t quote_line = line;
                ++p;
                bool closed = false;
                while (p < text.size()) {
                    const char c = text[p];
                    if (c == '"') {
                        if (p + 1 < text.size() && text[p + 1] == '"') {
                            field.push_back('"');
                            p += 2;
                            continue;
                        }
                        ++p;
                        closed = true;
                        break;
                    }
                    if (c == '\n')
                        ++line;
                    field.push_back(c);
                    ++p;
                }
                if (!closed)
                    throw FormatError(quote_line, "unterminated quoted field");
                while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\r'))
                    ++p;
                if (p < text.size() && text[p] != ',' && text[p] != '\n')
                    throw FormatError(line, "unexpected character after closing quote");
            } else {
                while (p < text.size() && text[p] != ',' && text[p] != '\n') {
                    if (text[p] == '"')
                        throw FormatError(line, "quote character inside unquoted field");
                    field.push_back(text[p]);
                    ++p;
                }
            }
            row.fields.emplace_back(trim(field));
            if (p >= text.size()) {
                row_done = true;
                pos = p;
            } else if (text[p] == ',') {
                pos = p + 1;
            } else {
                ++line;
                pos = p + 1;
                row_done = true;
            }
        }
        const bool blank = row.fields.size() == 1 && row.fields.front().empty();
        if (!blank)
            rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t parse_frequency(std::string_view s, std::size_t line)
{
    if (s.empty())
        throw FormatError(line, "missing frequency");
    if (s.front() == '-')
        throw FormatError(line, "negative frequency '" + std::string(s) + "'");
    if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw FormatError(line, "frequency '" + std::string(s) + "' is not a non-negative integer");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FormatError(line, "frequency '" + std::string(s) + "' is out of range");
    return value;
}

} // namespace

InterestIndex::InterestIndex(const std::vector<InterestRecord>& records)
{
    for (const auto& r : records)
        add(r);
}

void InterestIndex::add(const InterestRecord& record)
{
    if (record.frequency == 0)
        return;
    auto [it, inserted] = by_entity_.try_emplace(record.entity);
    if (inserted)
        order_.push_back(record.entity);
    auto [topic, fresh] = it->second.try_emplace(record.topic, 0);
    if (fresh)
        ++pairs_;
    topic->second += record.frequency;
}

std::uint64_t InterestIndex::frequency(std::string_view entity, std::string_view topic) const
{
    auto e = by_entity_.find(entity);
    if (e == by_entity_.end())
        return 0;
    auto t = e->second.find(topic);
    return t == e->second.end() ? 0 : t->second;
}

const std::map<std::string, std::uint64_t, std::less<>>& InterestIndex::topics(std::string_view entity) const
{
    auto e = by_entity_.find(entity);
    if (e == by_entity_.end())
        throw LookupError("unknown entity '" + std::string(entity) + "'");
    return e->second;
}

std::vector<InterestRecord> parse_records(std::string_view text)
{
    if (text.substr(0, 3) == "\xEF\xBB\xBF")
        text.remove_prefix(3);

    const auto rows = split_csv(text);
    const std::string expected(kCsvHeader);
    if (rows.empty())
        throw FormatError(1, "missing header, expected '" + expected + "'");
    const auto& header = rows.front();
    if (header.fields != std::vector<std::string>{"country", "topic", "frequency"})
        throw FormatError(header.line, "bad header, expected columns '" + expected + "'");

    std::vector<InterestRecord> records;
    records.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.fields.size() != 3)
            throw FormatError(row.line, "expected 3 fields, found " + std::to_string(row.fields.size()));
        if (row.fields[0].empty())
            throw FormatError(row.line, "empty country");
        if (row.fields[1].empty())
            throw FormatError(row.line, "empty topic");
        records.push_back({row.fields[0], row.fields[1], parse_frequency(row.fields[2], row.line)});
    }
    return records;
}

std::vector<InterestRecord> parse_records(std::istream& source)
{
    std::ostringstream buffer;
    buffer << source.rdbuf();
    return parse_records(buffer.str());
}

std::vector<InterestRecord> parse_records_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw FormatError(0, "expected a JSON array of records");

    std::vector<InterestRecord> records;
    records.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        const std::string where = "record " + std::to_string(i) + ": ";
        if (!item.is_object())
            throw FormatError(0, where + "not an object");
        for (const char* key : {"country", "topic", "frequency"})
            if (!item.contains(key))
                throw FormatError(0, where + "missing '" + key + "'");
        if (!item["country"].is_string() || !item["topic"].is_string())
            throw FormatError(0, where + "country and topic must be strings");
        const auto& f = item["frequency"];
        if (f.is_number_integer() && !f.is_number_unsigned() && f.get<std::int64_t>() < 0)
            throw FormatError(0, where + "negative frequency");
        if (!f.is_number_integer())
            throw FormatError(0, where + "frequency must be a non-negative integer");
        InterestRecord r{std::string(trim(item["country"].get<std::string>())),
                         std::string(trim(item["topic"].get<std::string>())),
                         f.get<std::uint64_t>()};
        if (r.entity.empty())
            throw FormatError(0, where + "empty country");
        if (r.topic.empty())
            throw FormatError(0, where + "empty topic");
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<InterestRecord> read_records_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = std::find_if_not(text.begin(), text.end(), is_space);
    if (first != text.end() && *first == '[')
        return parse_records_json(text);
    return parse_records(text);
}

WeightedGraph build_cointerest_graph(const InterestIndex& index)
{
    const auto& entities = index.entities();

    // Inverted index: topic -> (entity position, frequency), then accumulate
    // integer pair weights so the result does not depend on record order.
    std::map<std::string_view, std::vector<std::pair<std::size_t, std::uint64_t>>> by_topic;
    for (std::size_t e = 0; e < entities.size(); ++e)
        for (const auto& [topic, f] : index.topics(entities[e]))
            by_topic[topic].emplace_back(e, f);

    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> pair_weight;
    for (const auto& [topic, holders] : by_topic) {
        for (std::size_t i = 0; i < holders.size(); ++i) {
            for (std::size_t j = i + 1; j < holders.size(); ++j) {
                auto [a, fa] = holders[i];
                auto [b, fb] = holders[j];
                if (a > b)
                    std::swap(a, b);
                pair_weight[{a, b}] += fa + fb;
            }
        }
    }

    WeightedGraph g;
    for (const auto& e : entities)
        g.add_node(e);
    for (const auto& [pair, w] : pair_weight)
        g.add_edge(pair.first, pair.second, static_cast<double>(w));
    return g;
}

WeightedGraph build_cointerest_graph(const std::vector<InterestRecord>& records)
{
    return build_cointerest_graph(InterestIndex(records));
}

NormalizedGraph normalize_weights(const WeightedGraph& graph)
{
    const auto edges = graph.edges();
    if (edges.empty())
        return {graph, 0.0, true};
    double total = 0.0;
    for (const auto& e : edges)
        total += e.weight;
    return {graph.map_weights([total](double w) { return w / total; }), total, false};
}

} // namespace cointerest
