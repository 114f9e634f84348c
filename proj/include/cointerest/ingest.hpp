#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cointerest/graph.hpp"

namespace cointerest {

/// One (entity, topic, frequency) observation.
struct InterestRecord {
    std::string entity;
    std::string topic;
    std::uint64_t frequency = 0;

    bool operator==(const InterestRecord&) const = default;
};

/// Merged view of a record set: entity -> topic -> summed frequency.
///
/// Only strictly positive frequencies are stored, so the key set of each
/// entity is exactly its interest set. `entities()` lists entities in order
/// of their first positive-frequency record.
class InterestIndex {
public:
    InterestIndex() = default;
    explicit InterestIndex(const std::vector<InterestRecord>& records);

    void add(const InterestRecord& record);

    /// g(entity, topic); 0 when the entity has no such interest.
    std::uint64_t frequency(std::string_view entity, std::string_view topic) const;

    const std::vector<std::string>& entities() const noexcept { return order_; }
    const std::map<std::string, std::uint64_t, std::less<>>& topics(std::string_view entity) const;

    std::size_t pair_count() const noexcept { return pairs_; }

private:
    std::map<std::string, std::map<std::string, std::uint64_t, std::less<>>, std::less<>> by_entity_;
    std::vector<std::string> order_;
    std::size_t pairs_ = 0;
};

inline constexpr std::string_view kCsvHeader = "country,topic,frequency";

/// Reads the CSV record format (header `country,topic,frequency`, RFC-4180
/// quoting). Throws FormatError carrying the offending line number.
std::vector<InterestRecord> parse_records(std::istream& source);
std::vector<InterestRecord> parse_records(std::string_view text);

/// Reads a JSON array of {"country", "topic", "frequency"} objects.
std::vector<InterestRecord> parse_records_json(std::string_view text);

/// Dispatches on the first non-blank character: '[' is JSON, anything else CSV.
std::vector<InterestRecord> read_records_file(const std::string& path);

/// Co-interest graph with raw (unnormalised) weights. Two entities are joined
/// when they share a topic; the weight sums both entities' frequencies over
/// all shared topics.
WeightedGraph build_cointerest_graph(const InterestIndex& index);
WeightedGraph build_cointerest_graph(const std::vector<InterestRecord>& records);

struct NormalizedGraph {
    WeightedGraph graph;
    /// Sum of the raw weights that every edge was divided by.
    double raw_total = 0.0;
    /// Set when the input had no edges and was returned unchanged.
    bool edgeless = false;
};

/// Divides every weight by the sum of all weights.
NormalizedGraph normalize_weights(const WeightedGraph& graph);

} // namespace cointerest
