#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sck/interval.hpp"
#include "sck/vocabulary.hpp"

namespace sck {

using TermId = std::uint32_t;
using FactId = std::uint32_t;

/// 1-based line and column range within one source document.
struct Span {
    std::uint32_t line = 0;
    std::uint32_t column_begin = 0;
    std::uint32_t column_end = 0;

    auto operator<=>(const Span&) const = default;
};

/// A named constant or an interned interval literal.
struct Term {
    std::string name;  // intervals carry their rendered literal, e.g. "[0,9]"
    Sort sort = Sort::Player;
    Interval interval{};  // meaningful only when sort == Sort::Interval
};

/// Ground atom. Slots past the predicate's arity are zero.
struct Fact {
    Predicate pred = Predicate::InsC;
    std::array<TermId, kMaxArity> args{};

    Fact() = default;
    Fact(Predicate p, std::initializer_list<TermId> values);
    Fact(Predicate p, std::span<const TermId> values);

    std::uint8_t arity() const { return predicate_info(pred).arity; }
    std::span<const TermId> arguments() const { return {args.data(), arity()}; }

    bool operator==(const Fact&) const = default;
};

struct FactHash {
    std::size_t operator()(const Fact& f) const noexcept;
};

struct Asserted {
    std::uint32_t source = 0;  // index into KnowledgeBase::source_name
    Span span;
};

struct Derived {
    std::string rule_id;
    std::vector<FactId> premises;  // in the rule's premise order
};

using Provenance = std::variant<Asserted, Derived>;

enum class SortMode { Strict, Lenient };

/// Indexed set of ground facts over a sorted constant table.
///
/// Mutated single-threaded while loading and saturating; afterwards every
/// const member is safe to call from concurrent readers.
class KnowledgeBase {
public:
    explicit KnowledgeBase(SortMode mode = SortMode::Strict);

    SortMode mode() const { return mode_; }

    /// Declares `name` with `sort`; idempotent for an identical sort.
    /// Throws Error(SortConflict) when the name already has another sort.
    TermId declare_entity(std::string_view name, Sort sort);
    std::optional<TermId> find_entity(std::string_view name) const;
    TermId intern_interval(const Interval& interval);
    std::optional<TermId> find_interval(const Interval& interval) const;

    const Term& term(TermId id) const { return terms_.at(id); }
    Sort sort_of(TermId id) const { return terms_.at(id).sort; }
    std::size_t term_count() const { return terms_.size(); }
    /// Declared entities (no intervals) of the given sort, in declaration order.
    std::span<const TermId> entities_of(Sort sort) const;
    /// All declared entity names, sorted.
    std::vector<TermId> entities_sorted() const;

    std::uint32_t add_source(std::string name);
    const std::string& source_name(std::uint32_t index) const { return sources_.at(index); }

    /// Argument positions whose sort breaks the predicate signature.
    std::vector<std::size_t> sort_breaches(const Fact& fact) const;

    /// Inserts `fact`; returns false (and keeps the first provenance) when it
    /// is already present. In strict mode a sort breach throws
    /// Error(SortViolation) and nothing is stored.
    bool assert_fact(const Fact& fact, Provenance provenance);

    std::optional<FactId> find(const Fact& fact) const;
    bool contains(const Fact& fact) const { return find(fact).has_value(); }

    /// Membership with play/coPlay evaluated under temporal downward
    /// closure: a query interval within a stored interval holds.
    bool holds(const Fact& fact) const;
    /// Same test for a play/coPlay fact at an interval that need not be
    /// interned; the fact's own interval slot is ignored.
    bool holds_during(const Fact& fact, const Interval& at) const;

    /// l1 = l2, or l1 reaches l2 through asserted containsL edges.
    bool location_contained(TermId inner, TermId outer) const;

    std::size_t size() const { return facts_.size(); }
    std::size_t asserted_count() const { return asserted_count_; }
    const Fact& fact(FactId id) const { return facts_.at(id); }
    const Provenance& provenance(FactId id) const { return provenance_.at(id); }
    bool is_asserted(FactId id) const { return std::holds_alternative<Asserted>(provenance_.at(id)); }

    /// Fact ids with the given predicate, ascending.
    std::span<const FactId> facts_with(Predicate pred) const;
    /// Fact ids with `term` at argument `position`, ascending.
    std::span<const FactId> facts_with(Predicate pred, std::size_t position, TermId term) const;

    std::string render(TermId id) const;
    std::string render(const Fact& fact) const;

    /// Canonical order: names lexicographically, entities before intervals,
    /// intervals by (start, end).
    int compare_terms(TermId a, TermId b) const;
    /// Canonical fact order: predicate name, then arguments.
    bool fact_less(const Fact& a, const Fact& b) const;
    /// Fact ids sorted canonically.
    std::vector<FactId> sorted_facts(bool include_derived) const;

private:
    static std::uint64_t arg_key(Predicate pred, std::size_t position, TermId term);

    SortMode mode_;
    std::vector<Term> terms_;
    std::unordered_map<std::string, TermId> names_;
    std::map<Interval, TermId> intervals_;
    std::array<std::vector<TermId>, kSortCount> by_sort_;
    std::vector<std::string> sources_;

    std::vector<Fact> facts_;
    std::vector<Provenance> provenance_;
    std::unordered_map<Fact, FactId, FactHash> index_;
    std::array<std::vector<FactId>, kPredicateCount> by_pred_;
    std::unordered_map<std::uint64_t, std::vector<FactId>> by_arg_;
    std::size_t asserted_count_ = 0;
};

}  // namespace sck
