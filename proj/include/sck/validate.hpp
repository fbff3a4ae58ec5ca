#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sck/knowledge_base.hpp"

namespace sck {

enum class Severity { Error, Warning };

struct Violation {
    enum class Kind { SortViolation, ObligationUnmet };

    Kind kind = Kind::SortViolation;
    Severity severity = Severity::Error;
    std::string id;         // "sort" or the obligation id ("O7")
    std::string axiom_ref;  // e.g. "Ax2", "Ax23"
    std::string scope;      // offending fact, or the entity an obligation is about
    std::optional<std::size_t> position;  // 0-based argument, sort violations only
    std::string missing;    // unmet witness pattern, obligations only
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// One violation per (asserted fact, argument position) whose sort breaks
/// the predicate signature.
std::vector<Violation> check_sorts(const KnowledgeBase& kb);

/// Closed-world check of the existential obligations over a saturated KB.
/// Warnings only, ordered by obligation then canonically by scope.
std::vector<Violation> check_obligations(const KnowledgeBase& kb);

std::string format_violation(const Violation& v);

}  // namespace sck
