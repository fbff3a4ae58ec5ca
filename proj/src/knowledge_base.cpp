#include "sck/knowledge_base.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "sck/error.hpp"

namespace sck {

Fact::Fact(Predicate p, std::initializer_list<TermId> values) : Fact(p, std::span<const TermId>(values.begin(), values.size())) {}

Fact::Fact(Predicate p, std::span<const TermId> values) : pred(p) {
    if (values.size() != predicate_info(p).arity) {
        throw Error(ErrorKind::InvalidArgument, std::string(predicate_name(p)) + " expects " +
                                                    std::to_string(predicate_info(p).arity) + " arguments, got " +
                                                    std::to_string(values.size()));
    }
    std::copy(values.begin(), values.end(), args.begin());
}

std::size_t FactHash::operator()(const Fact& f) const noexcept {
    std::size_t h = static_cast<std::size_t>(f.pred) * 0x9e3779b97f4a7c15ULL;
    for (TermId a : f.args) h = (h ^ a) * 0x100000001b3ULL + (h >> 29);
    return h;
}

KnowledgeBase::KnowledgeBase(SortMode mode) : mode_(mode) {}

TermId KnowledgeBase::declare_entity(std::string_view name, Sort sort) {
    if (name.empty()) throw Error(ErrorKind::InvalidArgument, "entity name must be nonempty");
    if (sort == Sort::Interval) throw Error(ErrorKind::InvalidArgument, "intervals are literals, not declared names");
    if (auto it = names_.find(std::string(name)); it != names_.end()) {
        const Term& existing = terms_[it->second];
        if (existing.sort != sort) {
            throw Error(ErrorKind::SortConflict, "'" + std::string(name) + "' is already declared as " +
                                                     std::string(sort_keyword(existing.sort)) + ", not " +
                                                     std::string(sort_keyword(sort)));
        }
        return it->second;
    }
    const auto id = static_cast<TermId>(terms_.size());
    terms_.push_back(Term{std::string(name), sort, {}});
    names_.emplace(std::string(name), id);
    by_sort_[static_cast<std::size_t>(sort)].push_back(id);
    return id;
}

std::optional<TermId> KnowledgeBase::find_entity(std::string_view name) const {
    if (auto it = names_.find(std::string(name)); it != names_.end()) return it->second;
    return std::nullopt;
}

TermId KnowledgeBase::intern_interval(const Interval& interval) {
    if (!interval.valid()) {
        throw Error(ErrorKind::InvalidArgument, "interval " + to_string(interval) + " has start after end");
    }
    if (auto it = intervals_.find(interval); it != intervals_.end()) return it->second;
    const auto id = static_cast<TermId>(terms_.size());
    terms_.push_back(Term{to_string(interval), Sort::Interval, interval});
    intervals_.emplace(interval, id);
    return id;
}

std::optional<TermId> KnowledgeBase::find_interval(const Interval& interval) const {
    if (auto it = intervals_.find(interval); it != intervals_.end()) return it->second;
    return std::nullopt;
}

std::span<const TermId> KnowledgeBase::entities_of(Sort sort) const { return by_sort_[static_cast<std::size_t>(sort)]; }

std::vector<TermId> KnowledgeBase::entities_sorted() const {
    std::vector<TermId> out;
    out.reserve(names_.size());
    for (const auto& [name, id] : names_) out.push_back(id);
    std::sort(out.begin(), out.end(), [&](TermId a, TermId b) { return terms_[a].name < terms_[b].name; });
    return out;
}

std::uint32_t KnowledgeBase::add_source(std::string name) {
    sources_.push_back(std::move(name));
    return static_cast<std::uint32_t>(sources_.size() - 1);
}

std::vector<std::size_t> KnowledgeBase::sort_breaches(const Fact& fact) const {
    std::vector<std::size_t> out;
    const PredicateInfo& info = predicate_info(fact.pred);
    for (std::size_t i = 0; i < info.arity; ++i) {
        if (!mask_has(info.signature[i], terms_.at(fact.args[i]).sort)) out.push_back(i);
    }
    return out;
}

std::uint64_t KnowledgeBase::arg_key(Predicate pred, std::size_t position, TermId term) {
    return (static_cast<std::uint64_t>(pred) << 40) | (static_cast<std::uint64_t>(position) << 32) | term;
}

bool KnowledgeBase::assert_fact(const Fact& fact, Provenance provenance) {
    for (TermId a : fact.arguments()) {
        if (a >= terms_.size()) throw Error(ErrorKind::UnknownEntity, "fact argument refers to an unknown term");
    }
    if (mode_ == SortMode::Strict) {
        if (auto breaches = sort_breaches(fact); !breaches.empty()) {
            const std::size_t pos = breaches.front();
            throw Error(ErrorKind::SortViolation,
                        render(fact) + ": argument " + std::to_string(pos + 1) + " '" + terms_[fact.args[pos]].name +
                            "' is " + std::string(sort_keyword(terms_[fact.args[pos]].sort)) + " (" +
                            std::string(predicate_info(fact.pred).axiom_ref) + ")");
        }
    }
    if (index_.contains(fact)) return false;
    const auto id = static_cast<FactId>(facts_.size());
    facts_.push_back(fact);
    if (std::holds_alternative<Asserted>(provenance)) ++asserted_count_;
    provenance_.push_back(std::move(provenance));
    index_.emplace(fact, id);
    by_pred_[static_cast<std::size_t>(fact.pred)].push_back(id);
    for (std::size_t i = 0; i < fact.arity(); ++i) by_arg_[arg_key(fact.pred, i, fact.args[i])].push_back(id);
    return true;
}

std::optional<FactId> KnowledgeBase::find(const Fact& fact) const {
    if (auto it = index_.find(fact); it != index_.end()) return it->second;
    return std::nullopt;
}

bool KnowledgeBase::holds(const Fact& fact) const {
    if (contains(fact)) return true;
    const auto enduring = predicate_info(fact.pred).enduring_interval;
    if (!enduring) return false;
    const TermId query_t = fact.args[*enduring];
    if (query_t >= terms_.size() || terms_[query_t].sort != Sort::Interval) return false;
    return holds_during(fact, terms_[query_t].interval);
}

bool KnowledgeBase::holds_during(const Fact& fact, const Interval& at) const {
    const auto enduring = predicate_info(fact.pred).enduring_interval;
    if (!enduring) return false;
    // A stored fact agreeing on every non-interval position whose interval
    // covers the query interval.
    for (FactId id : facts_with(fact.pred, 0, fact.args[0])) {
        const Fact& stored = facts_[id];
        bool same = true;
        for (std::size_t i = 0; i < fact.arity() && same; ++i) {
            if (i != *enduring) same = stored.args[i] == fact.args[i];
        }
        if (same && interval_contains(at, terms_[stored.args[*enduring]].interval)) return true;
    }
    return false;
}

bool KnowledgeBase::location_contained(TermId inner, TermId outer) const {
    if (inner == outer) return true;
    std::unordered_set<TermId> seen{inner};
    std::deque<TermId> frontier{inner};
    while (!frontier.empty()) {
        const TermId at = frontier.front();
        frontier.pop_front();
        for (FactId id : facts_with(Predicate::ContainsL, 0, at)) {
            const TermId next = facts_[id].args[1];
            if (next == outer) return true;
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return false;
}

std::span<const FactId> KnowledgeBase::facts_with(Predicate pred) const {
    return by_pred_[static_cast<std::size_t>(pred)];
}

std::span<const FactId> KnowledgeBase::facts_with(Predicate pred, std::size_t position, TermId term) const {
    if (auto it = by_arg_.find(arg_key(pred, position, term)); it != by_arg_.end()) return it->second;
    return {};
}

std::string KnowledgeBase::render(TermId id) const { return terms_.at(id).name; }

std::string KnowledgeBase::render(const Fact& fact) const {
    std::string out(predicate_name(fact.pred));
    out += '(';
    for (std::size_t i = 0; i < fact.arity(); ++i) {
        if (i) out += ", ";
        out += terms_.at(fact.args[i]).name;
    }
    out += ')';
    return out;
}

int KnowledgeBase::compare_terms(TermId a, TermId b) const {
    if (a == b) return 0;
    const Term& x = terms_.at(a);
    const Term& y = terms_.at(b);
    const bool xi = x.sort == Sort::Interval;
    const bool yi = y.sort == Sort::Interval;
    if (xi != yi) return xi ? 1 : -1;
    if (xi) {
        if (x.interval == y.interval) return 0;
        return x.interval < y.interval ? -1 : 1;
    }
    const int c = x.name.compare(y.name);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool KnowledgeBase::fact_less(const Fact& a, const Fact& b) const {
    if (a.pred != b.pred) return predicate_name(a.pred) < predicate_name(b.pred);
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (const int c = compare_terms(a.args[i], b.args[i]); c != 0) return c < 0;
    }
    return false;
}

std::vector<FactId> KnowledgeBase::sorted_facts(bool include_derived) const {
    std::vector<FactId> out;
    out.reserve(facts_.size());
    for (FactId id = 0; id < facts_.size(); ++id) {
        if (include_derived || is_asserted(id)) out.push_back(id);
    }
    std::sort(out.begin(), out.end(), [&](FactId a, FactId b) { return fact_less(facts_[a], facts_[b]); });
    return out;
}

}  // namespace sck
