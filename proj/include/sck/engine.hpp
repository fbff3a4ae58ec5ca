#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sck/knowledge_base.hpp"
#include "sck/parser.hpp"
#include "sck/rules.hpp"

namespace sck {

inline constexpr std::size_t kDefaultFactCap = 1'000'000;

struct SaturationOptions {
    std::size_t fact_cap = kDefaultFactCap;
    // Rule ids to leave out; used to show a rule is not redundant.
    std::set<std::string> disabled_rules;
};

struct SaturationStats {
    std::size_t rounds = 0;
    std::size_t facts_asserted = 0;
    std::size_t facts_derived = 0;
    std::map<std::string, std::size_t> rule_fire_counts;  // new facts first derived by each rule
};

/// Semi-naive forward chaining to the least fixpoint of the catalog.
/// Derived facts get the provenance of their first derivation. Throws
/// Error(ResourceLimit) when the KB would grow beyond `fact_cap` facts.
SaturationStats saturate(KnowledgeBase& kb, const SaturationOptions& options = {});

/// Every conclusion of `rule` whose premises, in the rule's premise order,
/// are exactly `premises`. Empty when they do not fit the rule.
std::vector<Fact> apply_rule(const KnowledgeBase& kb, const Rule& rule, std::span<const Fact> premises);

enum class QueryMode { Stored, Virtual };

struct Variable {
    std::string name;
};

using QueryArg = std::variant<Variable, TermId, Interval>;

struct QueryPattern {
    Predicate pred = Predicate::InsC;
    std::vector<QueryArg> args;
};

/// Variable assignments in order of first occurrence in the pattern.
struct Binding {
    std::vector<std::pair<std::string, TermId>> values;

    bool operator==(const Binding&) const = default;
};

/// Bindings for `pattern` over stored facts, canonically sorted and without
/// duplicates. In virtual mode play/coPlay patterns with a literal interval
/// also match stored facts whose interval covers it; an interval variable
/// in that position throws Error(UnboundIntervalVariable).
std::vector<Binding> query(const KnowledgeBase& kb, const QueryPattern& pattern, QueryMode mode = QueryMode::Stored);

/// Resolves names against the KB; a name the KB does not know matches
/// nothing.
std::vector<Binding> query(const KnowledgeBase& kb, const Atom& pattern, QueryMode mode = QueryMode::Stored);

/// Ground fact for a parsed atom, if every name and interval is known.
/// Throws Error(InvalidArgument) if the atom has variables.
std::optional<Fact> resolve_fact(const KnowledgeBase& kb, const Atom& atom);

struct DerivationTree {
    FactId fact = 0;
    std::string rule_id;  // empty for asserted leaves
    std::vector<DerivationTree> children;
};

/// Derivation of `fact` along first-derivation provenance. Throws
/// Error(NotPresent) if the fact is not stored.
DerivationTree explain(const KnowledgeBase& kb, const Fact& fact);

enum class HarvestLevel { RoleContext, CoRoleContext, Role, CoRole, Context };

std::optional<HarvestLevel> harvest_level_from_name(std::string_view name);
std::string_view harvest_level_name(HarvestLevel level);
/// Number of target names the level expects (rc: role, context; ...).
std::size_t harvest_target_arity(HarvestLevel level);

struct HarvestEntry {
    std::string item;
    std::vector<std::string> players;   // "p@c" or "p1+p2@c"
    std::vector<std::string> contexts;  // other contexts the item was lifted through
};

struct HarvestReport {
    HarvestLevel level = HarvestLevel::RoleContext;
    std::vector<std::string> target;
    std::array<std::vector<HarvestEntry>, 4> items;  // indexed by InfoKind
};

/// Intrinsic information stored for `target` at `level`, per kind, with
/// the players and contexts its first derivation passes through. A view of
/// the fixpoint; adds nothing. Throws Error(UnknownTarget) when a target
/// name is undeclared or of the wrong sort.
HarvestReport harvest(const KnowledgeBase& kb, HarvestLevel level, std::span<const std::string> target);

}  // namespace sck
