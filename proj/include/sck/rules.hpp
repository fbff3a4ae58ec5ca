#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sck/vocabulary.hpp"

namespace sck {

using VarIndex = std::uint8_t;

/// Atom whose arguments are all rule variables (the catalog has no
/// constants). Repeated variables within one pattern must bind equal terms.
struct Pattern {
    Predicate pred = Predicate::InsC;
    std::vector<VarIndex> vars;
};

/// Side condition checked during matching; never stored as a fact.
struct Condition {
    enum class Kind : std::uint8_t {
        IntervalWithin,  // a ≺ b
        IntervalsMeet,   // a and b share a subinterval
        LocationWithin,  // a ⊆ b through containsL
        SortIs,          // variable a names an entity of `sort`
    };
    Kind kind = Kind::IntervalWithin;
    VarIndex a = 0;
    VarIndex b = 0;
    Sort sort = Sort::Player;
};

/// Positive, range-restricted Horn rule. A variable that occurs in no
/// premise must be fixed by a SortIs condition, which then ranges over the
/// declared entities of that sort.
struct Rule {
    std::string id;
    std::string axiom_ref;
    std::vector<Pattern> premises;
    std::vector<Condition> conditions;
    std::vector<Pattern> conclusions;
    std::vector<std::string> var_names;

    std::size_t var_count() const { return var_names.size(); }
};

/// The fixed derivation catalog, ordered by rule id, one rule per id. Rules
/// over intrinsic information are instantiated once per kind (suffix ".E",
/// ".N", ".G", ".D").
const std::vector<Rule>& catalog();
const Rule* find_rule(std::string_view id);

/// A variable that appears in a conclusion but is bound neither by a
/// premise nor by a sort condition; empty when the rule is range restricted.
std::optional<std::string> unrestricted_variable(const Rule& rule);

std::string describe(const Pattern& pattern, const Rule& rule);
std::string describe(const Condition& condition, const Rule& rule);

struct ObligationSpec {
    std::string id;
    std::string axiom_ref;
    std::string scope;    // facts that trigger the check
    std::string witness;  // what must exist in the saturated KB
    std::string note;
};

/// Closed-world existential checks; never add facts. Severity is always
/// "warning".
const std::vector<ObligationSpec>& obligations();

}  // namespace sck
