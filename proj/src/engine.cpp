#include "sck/engine.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "sck/error.hpp"

namespace sck {

namespace {

constexpr TermId kUnbound = std::numeric_limits<TermId>::max();

// Enumerates matches of one rule against the KB. Premise `delta` (if any)
// ranges over fact ids [delta_begin, limit); all other premises over
// [0, limit).
class RuleMatcher {
public:
    using Emit = std::function<void(const std::vector<TermId>&, const std::vector<FactId>&)>;

    RuleMatcher(const KnowledgeBase& kb, const Rule& rule) : kb_(kb), rule_(rule) {}

    void run(std::optional<std::size_t> delta, FactId delta_begin, FactId limit, const Emit& emit) {
        order_.clear();
        if (delta) order_.push_back(*delta);
        for (std::size_t i = 0; i < rule_.premises.size(); ++i) {
            if (!delta || i != *delta) order_.push_back(i);
        }
        binding_.assign(rule_.var_count(), kUnbound);
        used_.assign(rule_.premises.size(), 0);
        delta_ = delta;
        delta_begin_ = delta_begin;
        limit_ = limit;
        emit_ = &emit;
        step(0);
    }

private:
    void step(std::size_t k) {
        if (k == order_.size()) {
            finish(0);
            return;
        }
        const std::size_t premise_index = order_[k];
        const Pattern& pattern = rule_.premises[premise_index];
        const bool is_delta = delta_ && k == 0;

        std::span<const FactId> candidates = kb_.facts_with(pattern.pred);
        if (!is_delta) {
            for (std::size_t pos = 0; pos < pattern.vars.size(); ++pos) {
                if (binding_[pattern.vars[pos]] != kUnbound) {
                    candidates = kb_.facts_with(pattern.pred, pos, binding_[pattern.vars[pos]]);
                    break;
                }
            }
        }
        auto it = candidates.begin();
        if (is_delta) it = std::lower_bound(candidates.begin(), candidates.end(), delta_begin_);
        for (; it != candidates.end() && *it < limit_; ++it) {
            const Fact& fact = kb_.fact(*it);
            std::array<VarIndex, kMaxArity> newly{};
            std::size_t bound_now = 0;
            bool ok = true;
            for (std::size_t pos = 0; pos < pattern.vars.size(); ++pos) {
                TermId& slot = binding_[pattern.vars[pos]];
                if (slot == kUnbound) {
                    slot = fact.args[pos];
                    newly[bound_now++] = pattern.vars[pos];
                } else if (slot != fact.args[pos]) {
                    ok = false;
                    break;
                }
            }
            if (ok && conditions_hold()) {
                used_[premise_index] = *it;
                step(k + 1);
            }
            for (std::size_t i = 0; i < bound_now; ++i) binding_[newly[i]] = kUnbound;
        }
    }

    // Binds variables fixed only by sort conditions, then emits.
    void finish(std::size_t condition_index) {
        for (std::size_t i = condition_index; i < rule_.conditions.size(); ++i) {
            const Condition& c = rule_.conditions[i];
            if (c.kind != Condition::Kind::SortIs || binding_[c.a] != kUnbound) continue;
            for (TermId entity : kb_.entities_of(c.sort)) {
                binding_[c.a] = entity;
                if (conditions_hold()) finish(i + 1);
            }
            binding_[c.a] = kUnbound;
            return;
        }
        (*emit_)(binding_, used_);
    }

    bool conditions_hold() const {
        for (const Condition& c : rule_.conditions) {
            const TermId a = binding_[c.a];
            if (a == kUnbound) continue;
            if (c.kind == Condition::Kind::SortIs) {
                if (kb_.sort_of(a) != c.sort) return false;
                continue;
            }
            const TermId b = binding_[c.b];
            if (b == kUnbound) continue;
            if (!condition_holds(kb_, c, a, b)) return false;
        }
        return true;
    }

public:
    static bool condition_holds(const KnowledgeBase& kb, const Condition& c, TermId a, TermId b) {
        switch (c.kind) {
            case Condition::Kind::IntervalWithin:
                return kb.sort_of(a) == Sort::Interval && kb.sort_of(b) == Sort::Interval &&
                       interval_contains(kb.term(a).interval, kb.term(b).interval);
            case Condition::Kind::IntervalsMeet:
                return kb.sort_of(a) == Sort::Interval && kb.sort_of(b) == Sort::Interval &&
                       interval_meet(kb.term(a).interval, kb.term(b).interval).has_value();
            case Condition::Kind::LocationWithin: return kb.location_contained(a, b);
            case Condition::Kind::SortIs: return kb.sort_of(a) == c.sort;
        }
        return false;
    }

private:
    const KnowledgeBase& kb_;
    const Rule& rule_;
    std::vector<std::size_t> order_;
    std::vector<TermId> binding_;
    std::vector<FactId> used_;
    std::optional<std::size_t> delta_;
    FactId delta_begin_ = 0;
    FactId limit_ = 0;
    const Emit* emit_ = nullptr;
};

Fact instantiate(const Pattern& pattern, const std::vector<TermId>& binding) {
    std::array<TermId, kMaxArity> args{};
    for (std::size_t i = 0; i < pattern.vars.size(); ++i) args[i] = binding[pattern.vars[i]];
    return Fact(pattern.pred, std::span<const TermId>(args.data(), pattern.vars.size()));
}

struct Pending {
    Fact fact;
    const Rule* rule;
    std::vector<FactId> premises;
};

}  // namespace

SaturationStats saturate(KnowledgeBase& kb, const SaturationOptions& options) {
    SaturationStats stats;
    if (kb.size() > options.fact_cap) {
        throw Error(ErrorKind::ResourceLimit, "knowledge base already holds " + std::to_string(kb.size()) +
                                                  " facts, above the cap of " + std::to_string(options.fact_cap));
    }
    std::vector<const Rule*> active;
    for (const Rule& r : catalog()) {
        if (!options.disabled_rules.contains(r.id)) active.push_back(&r);
    }

    std::vector<Pending> pending;
    auto collect = [&](const Rule& rule) {
        return [&pending, &rule](const std::vector<TermId>& binding, const std::vector<FactId>& used) {
            for (const Pattern& c : rule.conclusions) pending.push_back(Pending{instantiate(c, binding), &rule, used});
        };
    };
    auto commit = [&]() {
        std::size_t added = 0;
        for (Pending& p : pending) {
            if (kb.contains(p.fact)) continue;
            if (kb.size() >= options.fact_cap) {
                throw Error(ErrorKind::ResourceLimit,
                            "saturation exceeded the fact cap of " + std::to_string(options.fact_cap));
            }
            kb.assert_fact(p.fact, Derived{p.rule->id, std::move(p.premises)});
            ++stats.rule_fire_counts[p.rule->id];
            ++added;
        }
        pending.clear();
        return added;
    };

    // First round: every rule against everything.
    FactId limit = static_cast<FactId>(kb.size());
    for (const Rule* rule : active) {
        RuleMatcher m(kb, *rule);
        m.run(std::nullopt, 0, limit, collect(*rule));
    }
    stats.rounds = 1;
    FactId delta_begin = limit;
    std::size_t added = commit();

    // Later rounds: at least one premise from the previous round's facts.
    while (added > 0) {
        ++stats.rounds;
        limit = static_cast<FactId>(kb.size());
        for (const Rule* rule : active) {
            RuleMatcher m(kb, *rule);
            for (std::size_t i = 0; i < rule->premises.size(); ++i) m.run(i, delta_begin, limit, collect(*rule));
        }
        delta_begin = limit;
        added = commit();
    }

    stats.facts_asserted = kb.asserted_count();
    stats.facts_derived = kb.size() - kb.asserted_count();
    return stats;
}

std::vector<Fact> apply_rule(const KnowledgeBase& kb, const Rule& rule, std::span<const Fact> premises) {
    std::vector<Fact> out;
    if (premises.size() != rule.premises.size()) return out;
    std::vector<TermId> binding(rule.var_count(), kUnbound);
    for (std::size_t i = 0; i < premises.size(); ++i) {
        const Pattern& p = rule.premises[i];
        if (premises[i].pred != p.pred) return out;
        for (std::size_t pos = 0; pos < p.vars.size(); ++pos) {
            TermId& slot = binding[p.vars[pos]];
            if (slot == kUnbound) {
                slot = premises[i].args[pos];
            } else if (slot != premises[i].args[pos]) {
                return out;
            }
        }
    }
    // Remaining sort-only variables range over the declared entities.
    std::function<void(std::size_t)> enumerate = [&](std::size_t ci) {
        for (std::size_t i = ci; i < rule.conditions.size(); ++i) {
            const Condition& c = rule.conditions[i];
            if (c.kind == Condition::Kind::SortIs && binding[c.a] == kUnbound) {
                for (TermId e : kb.entities_of(c.sort)) {
                    binding[c.a] = e;
                    enumerate(i + 1);
                }
                binding[c.a] = kUnbound;
                return;
            }
        }
        for (const Condition& c : rule.conditions) {
            if (!RuleMatcher::condition_holds(kb, c, binding[c.a], c.kind == Condition::Kind::SortIs ? 0 : binding[c.b])) {
                return;
            }
        }
        for (const Pattern& c : rule.conclusions) out.push_back(instantiate(c, binding));
    };
    enumerate(0);
    return out;
}

namespace {

bool arg_matches(const KnowledgeBase& kb, const QueryArg& arg, TermId value) {
    if (const auto* t = std::get_if<TermId>(&arg)) return *t == value;
    if (const auto* iv = std::get_if<Interval>(&arg)) {
        return kb.sort_of(value) == Sort::Interval && kb.term(value).interval == *iv;
    }
    return true;
}

}  // namespace

std::vector<Binding> query(const KnowledgeBase& kb, const QueryPattern& pattern, QueryMode mode) {
    const PredicateInfo& info = predicate_info(pattern.pred);
    if (pattern.args.size() != info.arity) {
        throw Error(ErrorKind::InvalidArgument, std::string(info.name) + " takes " + std::to_string(info.arity) +
                                                    " arguments, got " + std::to_string(pattern.args.size()));
    }
    std::optional<std::size_t> covered;  // interval position matched by containment
    if (mode == QueryMode::Virtual && info.enduring_interval) {
        const auto& slot = pattern.args[*info.enduring_interval];
        if (const auto* v = std::get_if<Variable>(&slot)) {
            throw Error(ErrorKind::UnboundIntervalVariable,
                        "virtual queries need a literal interval in " + std::string(info.name) + "; '?" + v->name +
                            "' would range over infinitely many subintervals");
        }
        if (std::holds_alternative<Interval>(slot)) covered = *info.enduring_interval;
    }

    // Narrow by the first constant entity argument if there is one.
    std::span<const FactId> candidates = kb.facts_with(pattern.pred);
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        if (const auto* t = std::get_if<TermId>(&pattern.args[i])) {
            candidates = kb.facts_with(pattern.pred, i, *t);
            break;
        }
    }

    std::vector<std::string> var_order;
    for (const QueryArg& a : pattern.args) {
        if (const auto* v = std::get_if<Variable>(&a)) {
            if (std::find(var_order.begin(), var_order.end(), v->name) == var_order.end()) var_order.push_back(v->name);
        }
    }

    std::vector<Binding> out;
    std::vector<TermId> values(var_order.size());
    for (FactId id : candidates) {
        const Fact& f = kb.fact(id);
        std::vector<bool> set(var_order.size(), false);
        bool ok = true;
        for (std::size_t i = 0; i < pattern.args.size() && ok; ++i) {
            const QueryArg& a = pattern.args[i];
            if (covered && i == *covered) {
                const TermId stored = f.args[i];
                ok = interval_contains(std::get<Interval>(a), kb.term(stored).interval);
            } else if (const auto* v = std::get_if<Variable>(&a)) {
                const auto slot = static_cast<std::size_t>(
                    std::find(var_order.begin(), var_order.end(), v->name) - var_order.begin());
                if (!set[slot]) {
                    values[slot] = f.args[i];
                    set[slot] = true;
                } else {
                    ok = values[slot] == f.args[i];
                }
            } else {
                ok = arg_matches(kb, a, f.args[i]);
            }
        }
        if (!ok) continue;
        Binding b;
        for (std::size_t s = 0; s < var_order.size(); ++s) b.values.emplace_back(var_order[s], values[s]);
        out.push_back(std::move(b));
    }

    std::sort(out.begin(), out.end(), [&](const Binding& x, const Binding& y) {
        for (std::size_t i = 0; i < x.values.size(); ++i) {
            if (const int c = kb.compare_terms(x.values[i].second, y.values[i].second); c != 0) return c < 0;
        }
        return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Binding> query(const KnowledgeBase& kb, const Atom& atom, QueryMode mode) {
    QueryPattern pattern{atom.pred, {}};
    bool unknown = false;
    for (const Arg& a : atom.args) {
        if (const auto* n = std::get_if<NameArg>(&a)) {
            if (auto id = kb.find_entity(n->text)) {
                pattern.args.emplace_back(*id);
            } else {
                unknown = true;
                pattern.args.emplace_back(Variable{""});
            }
        } else if (const auto* iv = std::get_if<IntervalArg>(&a)) {
            pattern.args.emplace_back(iv->value);
        } else {
            pattern.args.emplace_back(Variable{std::get<VariableArg>(a).name});
        }
    }
    // Still validate the pattern shape (e.g. an unbound virtual interval)
    // before reporting that nothing can match.
    std::vector<Binding> result = query(kb, pattern, mode);
    if (unknown) return {};
    return result;
}

std::optional<Fact> resolve_fact(const KnowledgeBase& kb, const Atom& atom) {
    if (!atom.ground()) throw Error(ErrorKind::InvalidArgument, "expected a ground fact, found variables");
    std::vector<TermId> args;
    for (const Arg& a : atom.args) {
        std::optional<TermId> id;
        if (const auto* n = std::get_if<NameArg>(&a)) id = kb.find_entity(n->text);
        if (const auto* iv = std::get_if<IntervalArg>(&a)) id = kb.find_interval(iv->value);
        if (!id) return std::nullopt;
        args.push_back(*id);
    }
    return Fact(atom.pred, args);
}

namespace {

DerivationTree build_tree(const KnowledgeBase& kb, FactId id) {
    DerivationTree node;
    node.fact = id;
    if (const auto* d = std::get_if<Derived>(&kb.provenance(id))) {
        node.rule_id = d->rule_id;
        for (FactId premise : d->premises) node.children.push_back(build_tree(kb, premise));
    }
    return node;
}

}  // namespace

DerivationTree explain(const KnowledgeBase& kb, const Fact& fact) {
    auto id = kb.find(fact);
    if (!id) throw Error(ErrorKind::NotPresent, kb.render(fact) + " is not in the knowledge base");
    return build_tree(kb, *id);
}

std::optional<HarvestLevel> harvest_level_from_name(std::string_view name) {
    if (name == "rc") return HarvestLevel::RoleContext;
    if (name == "corc") return HarvestLevel::CoRoleContext;
    if (name == "role") return HarvestLevel::Role;
    if (name == "cor") return HarvestLevel::CoRole;
    if (name == "context") return HarvestLevel::Context;
    return std::nullopt;
}

std::string_view harvest_level_name(HarvestLevel level) {
    switch (level) {
        case HarvestLevel::RoleContext: return "rc";
        case HarvestLevel::CoRoleContext: return "corc";
        case HarvestLevel::Role: return "role";
        case HarvestLevel::CoRole: return "cor";
        case HarvestLevel::Context: return "context";
    }
    return "";
}

std::size_t harvest_target_arity(HarvestLevel level) {
    switch (level) {
        case HarvestLevel::RoleContext: return 2;
        case HarvestLevel::CoRoleContext: return 3;
        case HarvestLevel::Role: return 1;
        case HarvestLevel::CoRole: return 2;
        case HarvestLevel::Context: return 1;
    }
    return 0;
}

namespace {

InfoLevel info_level_for(HarvestLevel level) {
    switch (level) {
        case HarvestLevel::RoleContext: return InfoLevel::RoleContext;
        case HarvestLevel::CoRoleContext: return InfoLevel::CoRoleContext;
        case HarvestLevel::Role: return InfoLevel::Role;
        case HarvestLevel::CoRole: return InfoLevel::CoRole;
        case HarvestLevel::Context: return InfoLevel::Context;
    }
    return InfoLevel::Context;
}

// Position of the context argument in an intrinsic-information fact.
std::optional<std::size_t> context_position(InfoLevel level) {
    switch (level) {
        case InfoLevel::Context: return 0;
        case InfoLevel::RoleContext: return 1;
        case InfoLevel::CoRoleContext: return 2;
        case InfoLevel::Player: return 2;
        case InfoLevel::CoPlayer: return 4;
        default: return std::nullopt;
    }
}

void collect_witnesses(const KnowledgeBase& kb, FactId id, std::optional<TermId> own_context, std::set<FactId>& seen,
                       std::set<std::string>& players, std::set<std::string>& contexts) {
    if (!seen.insert(id).second) return;
    const Fact& f = kb.fact(id);
    if (auto parts = info_parts(f.pred)) {
        if (parts->level == InfoLevel::Player) {
            players.insert(kb.render(f.args[0]) + "@" + kb.render(f.args[2]));
        } else if (parts->level == InfoLevel::CoPlayer) {
            players.insert(kb.render(f.args[0]) + "+" + kb.render(f.args[1]) + "@" + kb.render(f.args[4]));
        }
        if (auto pos = context_position(parts->level); pos && f.args[*pos] != own_context) {
            contexts.insert(kb.render(f.args[*pos]));
        }
    }
    if (const auto* d = std::get_if<Derived>(&kb.provenance(id))) {
        for (FactId p : d->premises) collect_witnesses(kb, p, own_context, seen, players, contexts);
    }
}

}  // namespace

HarvestReport harvest(const KnowledgeBase& kb, HarvestLevel level, std::span<const std::string> target) {
    const std::size_t want = harvest_target_arity(level);
    if (target.size() != want) {
        throw Error(ErrorKind::UnknownTarget, "level " + std::string(harvest_level_name(level)) + " takes " +
                                                  std::to_string(want) + " target name(s), got " +
                                                  std::to_string(target.size()));
    }
    std::vector<TermId> ids;
    for (std::size_t i = 0; i < target.size(); ++i) {
        auto id = kb.find_entity(target[i]);
        if (!id) throw Error(ErrorKind::UnknownTarget, "unknown target '" + target[i] + "'");
        const bool is_context_slot = level == HarvestLevel::Context || (level == HarvestLevel::RoleContext && i == 1) ||
                                     (level == HarvestLevel::CoRoleContext && i == 2);
        const bool fits = is_context_slot ? is_context(kb.sort_of(*id)) : kb.sort_of(*id) == Sort::Role;
        if (!fits) {
            throw Error(ErrorKind::UnknownTarget, "'" + target[i] + "' is " + std::string(sort_keyword(kb.sort_of(*id))) +
                                                      ", expected " + (is_context_slot ? "a context" : "a role"));
        }
        ids.push_back(*id);
    }

    HarvestReport report;
    report.level = level;
    report.target.assign(target.begin(), target.end());
    const InfoLevel info_level = info_level_for(level);
    std::optional<TermId> own_context;
    if (auto pos = context_position(info_level)) own_context = ids[*pos];

    for (InfoKind kind : kInfoKinds) {
        const Predicate pred = info_predicate(kind, info_level);
        std::vector<HarvestEntry>& entries = report.items[static_cast<std::size_t>(kind)];
        for (FactId id : kb.facts_with(pred, 0, ids[0])) {
            const Fact& f = kb.fact(id);
            if (!std::equal(ids.begin(), ids.end(), f.args.begin())) continue;
            std::set<FactId> seen;
            std::set<std::string> players;
            std::set<std::string> contexts;
            collect_witnesses(kb, id, own_context, seen, players, contexts);
            entries.push_back(HarvestEntry{kb.render(f.args[ids.size()]), {players.begin(), players.end()},
                                           {contexts.begin(), contexts.end()}});
        }
        std::sort(entries.begin(), entries.end(),
                  [](const HarvestEntry& a, const HarvestEntry& b) { return a.item < b.item; });
    }
    return report;
}

}  // namespace sck
