#include "sck/validate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace sck {

std::vector<Violation> check_sorts(const KnowledgeBase& kb) {
    std::vector<Violation> out;
    for (FactId id : kb.sorted_facts(/*include_derived=*/false)) {
        const Fact& f = kb.fact(id);
        for (std::size_t pos : kb.sort_breaches(f)) {
            const Term& t = kb.term(f.args[pos]);
            Violation v;
            v.kind = Violation::Kind::SortViolation;
            v.severity = Severity::Error;
            v.id = "sort";
            v.axiom_ref = std::string(predicate_info(f.pred).axiom_ref);
            v.scope = kb.render(f);
            v.position = pos;
            v.message = "argument " + std::to_string(pos + 1) + " '" + t.name + "' is " +
                        std::string(sort_keyword(t.sort));
            out.push_back(std::move(v));
        }
    }
    return out;
}

namespace {

class ObligationChecker {
public:
    explicit ObligationChecker(const KnowledgeBase& kb) : kb_(kb), facts_(kb.sorted_facts(true)) {
        entities_ = kb.entities_sorted();
    }

    std::vector<Violation> run() {
        having_roles();
        playing();
        abstract_witnesses();
        instance_witnesses();
        player_information();
        role_context_information();
        lifted_information();
        role_information();
        context_information();
        space_time();
        embedded_information();
        return std::move(out_);
    }

private:
    void warn(std::string id, std::string axiom, std::string scope, std::string missing) {
        Violation v;
        v.kind = Violation::Kind::ObligationUnmet;
        v.severity = Severity::Warning;
        v.id = std::move(id);
        v.axiom_ref = std::move(axiom);
        v.scope = std::move(scope);
        v.missing = std::move(missing);
        v.message = "missing " + v.missing;
        out_.push_back(std::move(v));
    }

    std::string name(TermId t) const { return kb_.render(t); }
    std::string entity_scope(TermId t) const {
        return std::string(sort_keyword(kb_.sort_of(t))) + " " + kb_.render(t);
    }

    template <typename F>
    void each_entity(F&& f) const {
        for (TermId e : entities_) f(e);
    }

    template <typename F>
    void each_fact(Predicate pred, F&& f) const {
        for (FactId id : facts_) {
            if (kb_.fact(id).pred == pred) f(kb_.fact(id));
        }
    }

    // Some fact with `pred` has `term` at `pos` and satisfies `also`.
    bool any(Predicate pred, std::size_t pos, TermId term,
             const std::function<bool(const Fact&)>& also = nullptr) const {
        for (FactId id : kb_.facts_with(pred, pos, term)) {
            if (!also || also(kb_.fact(id))) return true;
        }
        return false;
    }

    bool within(TermId inner, TermId outer) const {
        return interval_contains(kb_.term(inner).interval, kb_.term(outer).interval);
    }

    bool is_sort(TermId t, Sort s) const { return kb_.sort_of(t) == s; }

    static std::string has(InfoKind kind, InfoLevel level) {
        return std::string(predicate_name(info_predicate(kind, level)));
    }

    // O1-O3
    void having_roles() {
        each_entity([&](TermId e) {
            if (is_context(kb_.sort_of(e)) && kb_.facts_with(Predicate::HasR, 0, e).empty()) {
                warn("O1", "Ax6", entity_scope(e), "hasR(" + name(e) + ", ?r)");
            }
        });
        each_entity([&](TermId e) {
            if (is_sort(e, Sort::Role) && kb_.facts_with(Predicate::HasR, 1, e).empty()) {
                warn("O2", "Ax7", entity_scope(e), "hasR(?c, " + name(e) + ")");
            }
        });
        each_entity([&](TermId e) {
            if (is_context(kb_.sort_of(e)) && kb_.facts_with(Predicate::HasCoR, 0, e).empty()) {
                warn("O3", "Ax8", entity_scope(e), "hasCoR(" + name(e) + ", ?r1, ?r2)");
            }
        });
    }

    // O4
    void playing() {
        each_entity([&](TermId p) {
            if (!is_sort(p, Sort::Player)) return;
            if (kb_.facts_with(Predicate::Play, 0, p).empty()) {
                warn("O4", "Ax11", entity_scope(p), "play(" + name(p) + ", ?r, ?c, ?t)");
            }
            if (kb_.facts_with(Predicate::CoPlay, 0, p).empty() && kb_.facts_with(Predicate::CoPlay, 1, p).empty()) {
                warn("O4", "Ax11", entity_scope(p), "coPlay(" + name(p) + ", ?p2, ?r1, ?r2, ?c, ?t)");
            }
        });
    }

    // O5: abstract having witnessed by an instance.
    void abstract_witnesses() {
        each_fact(Predicate::HasR, [&](const Fact& f) {
            const TermId C = f.args[0], r = f.args[1];
            if (!is_sort(C, Sort::AbstractContext)) return;
            const bool ok = any(Predicate::InsC, 1, C, [&](const Fact& ins) {
                return kb_.contains(Fact(Predicate::HasR, {ins.args[0], r}));
            });
            if (!ok) warn("O5", "Ax9->", kb_.render(f), "insC(?c, " + name(C) + ") with hasR(?c, " + name(r) + ")");
        });
        each_fact(Predicate::HasCoR, [&](const Fact& f) {
            const TermId C = f.args[0], r1 = f.args[1], r2 = f.args[2];
            if (!is_sort(C, Sort::AbstractContext)) return;
            const bool ok = any(Predicate::InsC, 1, C, [&](const Fact& ins) {
                return kb_.contains(Fact(Predicate::HasCoR, {ins.args[0], r1, r2}));
            });
            if (!ok) {
                warn("O5", "Ax10->", kb_.render(f),
                     "insC(?c, " + name(C) + ") with hasCoR(?c, " + name(r1) + ", " + name(r2) + ")");
            }
        });
    }

    // O6: instance having witnessed by players.
    void instance_witnesses() {
        each_fact(Predicate::HasR, [&](const Fact& f) {
            const TermId c = f.args[0], r = f.args[1];
            if (!is_sort(c, Sort::InstanceContext)) return;
            if (!any(Predicate::Play, 2, c, [&](const Fact& p) { return p.args[1] == r; })) {
                warn("O6", "Ax12->", kb_.render(f), "play(?p, " + name(r) + ", " + name(c) + ", ?t)");
            }
        });
        each_fact(Predicate::HasCoR, [&](const Fact& f) {
            const TermId c = f.args[0], r1 = f.args[1], r2 = f.args[2];
            if (!is_sort(c, Sort::InstanceContext)) return;
            if (!any(Predicate::CoPlay, 4, c, [&](const Fact& p) { return p.args[2] == r1 && p.args[3] == r2; })) {
                warn("O6", "Ax13->", kb_.render(f),
                     "coPlay(?p1, ?p2, " + name(r1) + ", " + name(r2) + ", " + name(c) + ", ?t)");
            }
        });
    }

    // O7: every (co)play exhibits each kind of information on a subinterval.
    void player_information() {
        each_fact(Predicate::Play, [&](const Fact& f) {
            const TermId p = f.args[0], r = f.args[1], c = f.args[2], t = f.args[3];
            for (InfoKind kind : kInfoKinds) {
                const bool ok = any(info_predicate(kind, InfoLevel::Player), 0, p, [&](const Fact& h) {
                    return h.args[1] == r && h.args[2] == c && within(h.args[4], t);
                });
                if (!ok) {
                    warn("O7", "Ax23", kb_.render(f),
                         has(kind, InfoLevel::Player) + "(" + name(p) + ", " + name(r) + ", " + name(c) +
                             ", ?x, ?t1) with ?t1 within " + name(t));
                }
            }
        });
        each_fact(Predicate::CoPlay, [&](const Fact& f) {
            const TermId t = f.args[5];
            for (InfoKind kind : kInfoKinds) {
                const bool ok = any(info_predicate(kind, InfoLevel::CoPlayer), 0, f.args[0], [&](const Fact& h) {
                    return std::equal(f.args.begin(), f.args.begin() + 5, h.args.begin()) && within(h.args[6], t);
                });
                if (!ok) {
                    warn("O7", "Ax24", kb_.render(f),
                         has(kind, InfoLevel::CoPlayer) + "(" + name(f.args[0]) + ", " + name(f.args[1]) + ", " +
                             name(f.args[2]) + ", " + name(f.args[3]) + ", " + name(f.args[4]) +
                             ", ?x, ?t1) with ?t1 within " + name(t));
                }
            }
        });
    }

    // O8: roles and relations in a context have each kind of information.
    void role_context_information() {
        each_fact(Predicate::HasR, [&](const Fact& f) {
            const TermId c = f.args[0], r = f.args[1];
            for (InfoKind kind : kInfoKinds) {
                if (!any(info_predicate(kind, InfoLevel::RoleContext), 0, r, [&](const Fact& h) { return h.args[1] == c; })) {
                    warn("O8", "Ax25", kb_.render(f),
                         has(kind, InfoLevel::RoleContext) + "(" + name(r) + ", " + name(c) + ", ?x)");
                }
            }
        });
        each_fact(Predicate::HasCoR, [&](const Fact& f) {
            const TermId c = f.args[0], r1 = f.args[1], r2 = f.args[2];
            for (InfoKind kind : kInfoKinds) {
                const bool ok = any(info_predicate(kind, InfoLevel::CoRoleContext), 0, r1,
                                    [&](const Fact& h) { return h.args[1] == r2 && h.args[2] == c; });
                if (!ok) {
                    warn("O8", "Ax26", kb_.render(f),
                         has(kind, InfoLevel::CoRoleContext) + "(" + name(r1) + ", " + name(r2) + ", " + name(c) +
                             ", ?x)");
                }
            }
        });
    }

    // O9: each lifted fact is witnessed one level below.
    void lifted_information() {
        for (InfoKind kind : kInfoKinds) {
            const Predicate rc = info_predicate(kind, InfoLevel::RoleContext);
            const Predicate corc = info_predicate(kind, InfoLevel::CoRoleContext);
            const Predicate player = info_predicate(kind, InfoLevel::Player);
            const Predicate coplayer = info_predicate(kind, InfoLevel::CoPlayer);

            each_fact(rc, [&](const Fact& f) {
                const TermId r = f.args[0], c = f.args[1], x = f.args[2];
                if (is_sort(c, Sort::InstanceContext)) {
                    if (!any(player, 3, x, [&](const Fact& h) { return h.args[1] == r && h.args[2] == c; })) {
                        warn("O9", "Ax27->", kb_.render(f),
                             has(kind, InfoLevel::Player) + "(?p, " + name(r) + ", " + name(c) + ", " + name(x) + ", ?t)");
                    }
                } else if (is_sort(c, Sort::AbstractContext)) {
                    const bool ok = any(Predicate::InsC, 1, c, [&](const Fact& ins) {
                        return kb_.contains(Fact(rc, {r, ins.args[0], x}));
                    });
                    if (!ok) {
                        warn("O9", "Ax29->", kb_.render(f),
                             "insC(?c, " + name(c) + ") with " + has(kind, InfoLevel::RoleContext) + "(" + name(r) +
                                 ", ?c, " + name(x) + ")");
                    }
                }
            });
            each_fact(corc, [&](const Fact& f) {
                const TermId r1 = f.args[0], r2 = f.args[1], c = f.args[2], x = f.args[3];
                if (is_sort(c, Sort::InstanceContext)) {
                    const bool ok = any(coplayer, 5, x, [&](const Fact& h) {
                        return h.args[2] == r1 && h.args[3] == r2 && h.args[4] == c;
                    });
                    if (!ok) {
                        warn("O9", "Ax28->", kb_.render(f),
                             has(kind, InfoLevel::CoPlayer) + "(?p1, ?p2, " + name(r1) + ", " + name(r2) + ", " +
                                 name(c) + ", " + name(x) + ", ?t)");
                    }
                } else if (is_sort(c, Sort::AbstractContext)) {
                    const bool ok = any(Predicate::InsC, 1, c, [&](const Fact& ins) {
                        return kb_.contains(Fact(corc, {r1, r2, ins.args[0], x}));
                    });
                    if (!ok) {
                        warn("O9", "Ax30->", kb_.render(f),
                             "insC(?c, " + name(c) + ") with " + has(kind, InfoLevel::CoRoleContext) + "(" + name(r1) +
                                 ", " + name(r2) + ", ?c, " + name(x) + ")");
                    }
                }
            });
            each_fact(info_predicate(kind, InfoLevel::Role), [&](const Fact& f) {
                const TermId r = f.args[0], x = f.args[1];
                if (!any(rc, 0, r, [&](const Fact& h) { return h.args[2] == x && is_sort(h.args[1], Sort::AbstractContext); })) {
                    warn("O9", "Ax33->", kb_.render(f),
                         has(kind, InfoLevel::RoleContext) + "(" + name(r) + ", ?C, " + name(x) + ") with ?C abstract");
                }
            });
            each_fact(info_predicate(kind, InfoLevel::CoRole), [&](const Fact& f) {
                const TermId r1 = f.args[0], r2 = f.args[1], x = f.args[2];
                const bool ok = any(corc, 0, r1, [&](const Fact& h) {
                    return h.args[1] == r2 && h.args[3] == x && is_sort(h.args[2], Sort::AbstractContext);
                });
                if (!ok) {
                    warn("O9", "Ax34->", kb_.render(f),
                         has(kind, InfoLevel::CoRoleContext) + "(" + name(r1) + ", " + name(r2) + ", ?C, " + name(x) +
                             ") with ?C abstract");
                }
            });
            each_fact(info_predicate(kind, InfoLevel::Context), [&](const Fact& f) {
                const TermId c = f.args[0], x = f.args[1];
                const bool ok = any(rc, 1, c, [&](const Fact& h) { return h.args[2] == x; }) ||
                                any(corc, 2, c, [&](const Fact& h) { return h.args[3] == x; });
                if (!ok) {
                    warn("O9", "Ax36->", kb_.render(f),
                         has(kind, InfoLevel::RoleContext) + "(?r, " + name(c) + ", " + name(x) + ") or " +
                             has(kind, InfoLevel::CoRoleContext) + "(?r1, ?r2, " + name(c) + ", " + name(x) + ")");
                }
            });
        }
    }

    // O10: roles and social relations have each kind of information.
    void role_information() {
        each_entity([&](TermId r) {
            if (!is_sort(r, Sort::Role)) return;
            for (InfoKind kind : kInfoKinds) {
                if (kb_.facts_with(info_predicate(kind, InfoLevel::Role), 0, r).empty()) {
                    warn("O10", "Ax31", entity_scope(r), has(kind, InfoLevel::Role) + "(" + name(r) + ", ?x)");
                }
            }
        });
        // Social relations: role pairs occurring in some hasCoR.
        std::vector<std::pair<TermId, TermId>> relations;
        each_fact(Predicate::HasCoR, [&](const Fact& f) {
            const std::pair<TermId, TermId> rel{f.args[1], f.args[2]};
            if (std::find(relations.begin(), relations.end(), rel) == relations.end()) relations.push_back(rel);
        });
        std::stable_sort(relations.begin(), relations.end(), [&](const auto& a, const auto& b) {
            if (const int c = kb_.compare_terms(a.first, b.first); c != 0) return c < 0;
            return kb_.compare_terms(a.second, b.second) < 0;
        });
        for (const auto& [r1, r2] : relations) {
            for (InfoKind kind : kInfoKinds) {
                if (!any(info_predicate(kind, InfoLevel::CoRole), 0, r1, [&](const Fact& h) { return h.args[1] == r2; })) {
                    warn("O10", "Ax32", "relation (" + name(r1) + ", " + name(r2) + ")",
                         has(kind, InfoLevel::CoRole) + "(" + name(r1) + ", " + name(r2) + ", ?x)");
                }
            }
        }
    }

    // O11
    void context_information() {
        each_entity([&](TermId c) {
            if (!is_context(kb_.sort_of(c))) return;
            for (InfoKind kind : kInfoKinds) {
                if (kb_.facts_with(info_predicate(kind, InfoLevel::Context), 0, c).empty()) {
                    warn("O11", "Ax35", entity_scope(c), has(kind, InfoLevel::Context) + "(" + name(c) + ", ?x)");
                }
            }
        });
    }

    // O12
    void space_time() {
        each_entity([&](TermId c) {
            if (!is_sort(c, Sort::InstanceContext)) return;
            if (kb_.facts_with(Predicate::HasL, 0, c).empty()) warn("O12", "Ax39", entity_scope(c), "hasL(" + name(c) + ", ?l)");
            if (kb_.facts_with(Predicate::HasT, 0, c).empty()) warn("O12", "Ax39", entity_scope(c), "hasT(" + name(c) + ", ?t)");
        });
    }

    // O13: player-level information shows up in some embedded context.
    // EIC(c, c) makes every stored fact its own witness once saturated.
    void embedded_information() {
        for (InfoKind kind : kInfoKinds) {
            const Predicate player = info_predicate(kind, InfoLevel::Player);
            each_fact(player, [&](const Fact& f) {
                const TermId p = f.args[0], c = f.args[2], x = f.args[3], t = f.args[4];
                const bool ok = any(Predicate::EIC, 1, c, [&](const Fact& e) {
                    return any(player, 0, p, [&](const Fact& h) {
                        return h.args[2] == e.args[0] && h.args[3] == x && within(h.args[4], t);
                    });
                });
                if (!ok) {
                    warn("O13", "Ax40->", kb_.render(f),
                         "EIC(?c2, " + name(c) + ") with " + has(kind, InfoLevel::Player) + "(" + name(p) +
                             ", ?r2, ?c2, " + name(x) + ", ?t2) and ?t2 within " + name(t));
                }
            });
            const Predicate coplayer = info_predicate(kind, InfoLevel::CoPlayer);
            each_fact(coplayer, [&](const Fact& f) {
                const TermId c = f.args[4], x = f.args[5], t = f.args[6];
                const bool ok = any(Predicate::EIC, 1, c, [&](const Fact& e) {
                    return any(coplayer, 0, f.args[0], [&](const Fact& h) {
                        return h.args[1] == f.args[1] && h.args[4] == e.args[0] && h.args[5] == x &&
                               within(h.args[6], t);
                    });
                });
                if (!ok) {
                    warn("O13", "Ax41->", kb_.render(f),
                         "EIC(?c2, " + name(c) + ") with " + has(kind, InfoLevel::CoPlayer) + "(" + name(f.args[0]) +
                             ", " + name(f.args[1]) + ", ?q1, ?q2, ?c2, " + name(x) + ", ?t2) and ?t2 within " + name(t));
                }
            });
        }
    }

    const KnowledgeBase& kb_;
    std::vector<FactId> facts_;
    std::vector<TermId> entities_;
    std::vector<Violation> out_;
};

int obligation_ordinal(const std::string& id) { return std::stoi(id.substr(1)); }

}  // namespace

std::vector<Violation> check_obligations(const KnowledgeBase& kb) {
    std::vector<Violation> out = ObligationChecker(kb).run();
    std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return obligation_ordinal(a.id) < obligation_ordinal(b.id);
    });
    return out;
}

std::string format_violation(const Violation& v) {
    std::string out = v.severity == Severity::Error ? "error " : "warning ";
    out += v.id + " (" + v.axiom_ref + ") " + v.scope + ": " + v.message;
    return out;
}

}  // namespace sck
