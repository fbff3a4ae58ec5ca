#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "sck/knowledge_base.hpp"

namespace sck::testing {

struct RandomKbOptions {
    std::size_t max_entities = 12;
    std::size_t max_facts = 30;
    std::int64_t max_tick = 6;
};

/// Well-sorted random knowledge base described by names, so the same
/// content can feed both the engine and the oracle.
struct RandomKb {
    std::vector<std::pair<std::string, Sort>> entities;
    std::vector<std::pair<Predicate, std::vector<std::string>>> facts;  // intervals as "[a,b]"

    KnowledgeBase build(SortMode mode = SortMode::Strict) const;
    OracleInput oracle_input() const;
    std::string text() const;  // .sck document
};

RandomKb random_kb(std::uint64_t seed, const RandomKbOptions& options = {});

/// Every fact in `kb` (asserted and derived) as name tuples.
FactSet fact_set(const KnowledgeBase& kb);

}  // namespace sck::testing
