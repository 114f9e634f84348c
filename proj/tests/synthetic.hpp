// Synthetic record set shaped like the country/topic dataset: 172 entities in
// 12 blocs, 520 distinct co-interest pairs, mostly within a bloc.
#pragma once

#include <cstdio>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cointerest/ingest.hpp"
#include "cointerest/random.hpp"

namespace cointerest::fixtures {

inline std::vector<InterestRecord> synthetic_records(std::uint64_t seed = 2024, std::size_t entities = 172,
                                                     std::size_t pairs = 520, std::size_t blocs = 12)
{
    SplitMix64 rng(seed);
    auto name = [](std::size_t i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "Country %03zu", i);
        return std::string(buf);
    };

    std::set<std::pair<std::size_t, std::size_t>> chosen;
    std::vector<InterestRecord> records;
    std::size_t topic = 0;
    while (chosen.size() < pairs) {
        const std::size_t a = rng.below(entities);
        std::size_t b = 0;
        if (rng.uniform() < 0.85) {
            // Same bloc: entities are assigned round-robin to blocs.
            const std::size_t members = (entities - a % blocs + blocs - 1) / blocs;
            b = a % blocs + blocs * rng.below(members);
        } else {
            b = rng.below(entities);
        }
        if (a == b || !chosen.insert({std::min(a, b), std::max(a, b)}).second)
            continue;
        const std::string t = "topic " + std::to_string(topic++);
        records.push_back({name(a), t, 1 + rng.below(20)});
        records.push_back({name(b), t, 1 + rng.below(20)});
    }
    // Every entity appears even if it drew no pair.
    for (std::size_t i = 0; i < entities; ++i)
        records.push_back({name(i), "own " + std::to_string(i), 1});
    return records;
}

inline std::string to_csv(const std::vector<InterestRecord>& records)
{
    std::string out = "country,topic,frequency\n";
    for (const auto& r : records)
        out += r.entity + "," + r.topic + "," + std::to_string(r.frequency) + "\n";
    return out;
}

} // namespace cointerest::fixtures
