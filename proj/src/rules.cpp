#include "sck/rules.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sck {

namespace {

class RuleBuilder {
public:
    RuleBuilder(std::string id, std::string axiom_ref) {
        rule_.id = std::move(id);
        rule_.axiom_ref = std::move(axiom_ref);
    }

    RuleBuilder& when(Predicate pred, std::initializer_list<std::string_view> vars) {
        rule_.premises.push_back(pattern(pred, vars));
        return *this;
    }

    RuleBuilder& is(Sort sort, std::string_view var) {
        rule_.conditions.push_back(Condition{Condition::Kind::SortIs, var_index(var), 0, sort});
        return *this;
    }

    RuleBuilder& within(std::string_view inner, std::string_view outer) {
        rule_.conditions.push_back(Condition{Condition::Kind::IntervalWithin, var_index(inner), var_index(outer), {}});
        return *this;
    }

    RuleBuilder& meets(std::string_view a, std::string_view b) {
        rule_.conditions.push_back(Condition{Condition::Kind::IntervalsMeet, var_index(a), var_index(b), {}});
        return *this;
    }

    RuleBuilder& located_within(std::string_view inner, std::string_view outer) {
        rule_.conditions.push_back(Condition{Condition::Kind::LocationWithin, var_index(inner), var_index(outer), {}});
        return *this;
    }

    RuleBuilder& then(Predicate pred, std::initializer_list<std::string_view> vars) {
        rule_.conclusions.push_back(pattern(pred, vars));
        return *this;
    }

    Rule build() { return std::move(rule_); }

private:
    VarIndex var_index(std::string_view name) {
        auto it = std::find(rule_.var_names.begin(), rule_.var_names.end(), name);
        if (it != rule_.var_names.end()) return static_cast<VarIndex>(it - rule_.var_names.begin());
        rule_.var_names.emplace_back(name);
        return static_cast<VarIndex>(rule_.var_names.size() - 1);
    }

    Pattern pattern(Predicate pred, std::initializer_list<std::string_view> vars) {
        Pattern p{pred, {}};
        for (std::string_view v : vars) p.vars.push_back(var_index(v));
        return p;
    }

    Rule rule_;
};

using P = Predicate;

std::vector<Rule> build_catalog() {
    std::vector<Rule> rules;
    auto add = [&](RuleBuilder b) { rules.push_back(b.build()); };
    // Per-kind family: one rule for each X in E, N, G, D.
    auto each_kind = [&](const std::string& id, const std::string& ref,
                         const std::function<void(RuleBuilder&, std::function<Predicate(InfoLevel)>)>& body) {
        for (InfoKind kind : kInfoKinds) {
            RuleBuilder b(id + "." + info_letter(kind), ref);
            body(b, [kind](InfoLevel level) { return info_predicate(kind, level); });
            add(std::move(b));
        }
    };
    using L = InfoLevel;

    // Having and playing.
    add(RuleBuilder("D1", "Ax3").when(P::HasCoR, {"c", "r1", "r2"}).then(P::HasR, {"c", "r1"}).then(P::HasR, {"c", "r2"}));
    add(RuleBuilder("D2", "Ax5")
            .when(P::CoPlay, {"p1", "p2", "r1", "r2", "c", "t"})
            .then(P::Play, {"p1", "r1", "c", "t"})
            .then(P::Play, {"p2", "r2", "c", "t"}));
    add(RuleBuilder("D3", "Ax9<-").when(P::InsC, {"c", "C"}).when(P::HasR, {"c", "r"}).then(P::HasR, {"C", "r"}));
    add(RuleBuilder("D4", "Ax10<-")
            .when(P::InsC, {"c", "C"})
            .when(P::HasCoR, {"c", "r1", "r2"})
            .then(P::HasCoR, {"C", "r1", "r2"}));
    add(RuleBuilder("D5", "Ax12<-").when(P::Play, {"p", "r", "c", "t"}).then(P::HasR, {"c", "r"}));
    add(RuleBuilder("D6", "Ax13<-")
            .when(P::CoPlay, {"p1", "p2", "r1", "r2", "c", "t"})
            .then(P::HasCoR, {"c", "r1", "r2"}));

    // Sub-contexts and sub-roles.
    add(RuleBuilder("D7", "d1").when(P::InsC, {"c", "C1"}).when(P::IsAC, {"C1", "C2"}).then(P::InsC, {"c", "C2"}));
    add(RuleBuilder("D8", "d2")
            .when(P::Play, {"p", "r1", "c", "t"})
            .when(P::IsAR, {"r1", "r2"})
            .then(P::Play, {"p", "r2", "c", "t"}));
    add(RuleBuilder("D9", "c3").when(P::IsAC, {"C1", "C2"}).when(P::IsAC, {"C2", "C3"}).then(P::IsAC, {"C1", "C3"}));
    add(RuleBuilder("D10", "c4").when(P::IsAR, {"r1", "r2"}).when(P::IsAR, {"r2", "r3"}).then(P::IsAR, {"r1", "r3"}));
    add(RuleBuilder("D11", "c5").when(P::HasR, {"c", "r1"}).when(P::IsAR, {"r1", "r2"}).then(P::HasR, {"c", "r2"}));
    add(RuleBuilder("D12", "c6").when(P::HasR, {"C1", "r"}).when(P::IsAC, {"C1", "C2"}).then(P::HasR, {"C2", "r"}));

    // Four-level intrinsic information.
    each_kind("D13", "Ax19", [](RuleBuilder& b, auto has) {
        b.when(has(L::RoleContext), {"r", "c", "x"}).then(P::HasR, {"c", "r"});
    });
    each_kind("D14", "Ax20", [](RuleBuilder& b, auto has) {
        b.when(has(L::CoRoleContext), {"r1", "r2", "c", "x"}).then(P::HasCoR, {"c", "r1", "r2"});
    });
    each_kind("D15", "Ax21", [](RuleBuilder& b, auto has) {
        b.when(has(L::Player), {"p", "r", "c", "x", "t"}).then(P::Play, {"p", "r", "c", "t"});
    });
    each_kind("D16", "Ax22", [](RuleBuilder& b, auto has) {
        b.when(has(L::CoPlayer), {"p1", "p2", "r1", "r2", "c", "x", "t"})
            .then(P::CoPlay, {"p1", "p2", "r1", "r2", "c", "t"});
    });
    each_kind("D17", "Ax27<-", [](RuleBuilder& b, auto has) {
        b.when(has(L::Player), {"p", "r", "c", "x", "t"})
            .is(Sort::InstanceContext, "c")
            .then(has(L::RoleContext), {"r", "c", "x"});
    });
    each_kind("D18", "Ax28<-", [](RuleBuilder& b, auto has) {
        b.when(has(L::CoPlayer), {"p1", "p2", "r1", "r2", "c", "x", "t"})
            .is(Sort::InstanceContext, "c")
            .then(has(L::CoRoleContext), {"r1", "r2", "c", "x"});
    });
    each_kind("D19", "Ax29<-", [](RuleBuilder& b, auto has) {
        b.when(P::InsC, {"c", "C"}).when(has(L::RoleContext), {"r", "c", "x"}).then(has(L::RoleContext), {"r", "C", "x"});
    });
    each_kind("D20", "Ax30<-", [](RuleBuilder& b, auto has) {
        b.when(P::InsC, {"c", "C"})
            .when(has(L::CoRoleContext), {"r1", "r2", "c", "x"})
            .then(has(L::CoRoleContext), {"r1", "r2", "C", "x"});
    });
    each_kind("D21", "Ax33<-", [](RuleBuilder& b, auto has) {
        b.when(has(L::RoleContext), {"r", "C", "x"}).is(Sort::AbstractContext, "C").then(has(L::Role), {"r", "x"});
    });
    each_kind("D22", "Ax34<-", [](RuleBuilder& b, auto has) {
        b.when(has(L::CoRoleContext), {"r1", "r2", "C", "x"})
            .is(Sort::AbstractContext, "C")
            .then(has(L::CoRole), {"r1", "r2", "x"});
    });
    each_kind("D23a", "Ax36<-", [](RuleBuilder& b, auto has) {
        b.when(has(L::RoleContext), {"r", "c", "x"}).then(has(L::Context), {"c", "x"});
    });
    each_kind("D23b", "Ax36<-", [](RuleBuilder& b, auto has) {
        b.when(has(L::CoRoleContext), {"r1", "r2", "c", "x"}).then(has(L::Context), {"c", "x"});
    });
    each_kind("D24", "c7<-", [](RuleBuilder& b, auto has) {
        b.when(P::InsC, {"c", "C"}).when(has(L::Context), {"c", "x"}).then(has(L::Context), {"C", "x"});
    });
    each_kind("D25", "c8", [](RuleBuilder& b, auto has) {
        b.when(has(L::Context), {"C1", "x"}).when(P::IsAC, {"C1", "C2"}).then(has(L::Context), {"C2", "x"});
    });

    // Instance context embedding.
    add(RuleBuilder("D26", "d3")
            .when(P::HasL, {"c1", "l1"})
            .when(P::HasL, {"c2", "l2"})
            .when(P::HasT, {"c1", "t1"})
            .when(P::HasT, {"c2", "t2"})
            .located_within("l1", "l2")
            .within("t1", "t2")
            .then(P::EIC, {"c1", "c2"}));
    add(RuleBuilder("D27", "c10").is(Sort::InstanceContext, "c").then(P::EIC, {"c", "c"}));
    add(RuleBuilder("D28", "c11").when(P::EIC, {"c1", "c2"}).when(P::EIC, {"c2", "c3"}).then(P::EIC, {"c1", "c3"}));
    add(RuleBuilder("D29", "d4")
            .when(P::EIC, {"c1", "c2"})
            .when(P::Play, {"p", "r1", "c1", "t1"})
            .when(P::Play, {"p", "r2", "c2", "t2"})
            .meets("t1", "t2")
            .then(P::REIC, {"c1", "r1", "c2", "r2"}));
    add(RuleBuilder("D30", "c12")
            .when(P::HasR, {"c", "r"})
            .is(Sort::InstanceContext, "c")
            .then(P::REIC, {"c", "r", "c", "r"}));
    each_kind("D31", "Ax40<-", [](RuleBuilder& b, auto has) {
        b.when(P::Play, {"p", "r", "c", "t"})
            .when(P::EIC, {"c2", "c"})
            .when(has(L::Player), {"p", "r2", "c2", "x", "t2"})
            .within("t2", "t")
            .then(has(L::Player), {"p", "r", "c", "x", "t"});
    });
    each_kind("D32", "Ax41<-", [](RuleBuilder& b, auto has) {
        b.when(P::CoPlay, {"p1", "p2", "r1", "r2", "c", "t"})
            .when(P::EIC, {"c2", "c"})
            .when(has(L::CoPlayer), {"p1", "p2", "q1", "q2", "c2", "x", "t2"})
            .within("t2", "t")
            .then(has(L::CoPlayer), {"p1", "p2", "r1", "r2", "c", "x", "t"});
    });
    each_kind("D33", "c13<-", [](RuleBuilder& b, auto has) {
        b.when(P::REIC, {"c2", "r2", "c", "r"})
            .when(has(L::RoleContext), {"r2", "c2", "x"})
            .is(Sort::InstanceContext, "c")
            .then(has(L::RoleContext), {"r", "c", "x"});
    });
    each_kind("D34", "c14<-", [](RuleBuilder& b, auto has) {
        b.when(P::REIC, {"c2", "q1", "c", "r1"})
            .when(P::REIC, {"c2", "q2", "c", "r2"})
            .when(has(L::CoRoleContext), {"q1", "q2", "c2", "x"})
            .is(Sort::InstanceContext, "c")
            .then(has(L::CoRoleContext), {"r1", "r2", "c", "x"});
    });

    // Abstract context embedding.
    add(RuleBuilder("D35", "d5")
            .when(P::InsC, {"c1", "C1"})
            .when(P::InsC, {"c2", "C2"})
            .when(P::EIC, {"c1", "c2"})
            .then(P::ESC, {"C1", "C2"}));
    add(RuleBuilder("D36", "c15").is(Sort::AbstractContext, "C").then(P::ESC, {"C", "C"}));
    add(RuleBuilder("D37", "c16").when(P::ESC, {"C1", "C2"}).when(P::IsAC, {"C2", "C3"}).then(P::ESC, {"C1", "C3"}));
    add(RuleBuilder("D38", "c17").when(P::ESC, {"C1", "C2"}).when(P::IsAC, {"C1", "C3"}).then(P::ESC, {"C3", "C2"}));
    add(RuleBuilder("D39", "d6")
            .when(P::InsC, {"c1", "C1"})
            .when(P::InsC, {"c2", "C2"})
            .when(P::REIC, {"c1", "r1", "c2", "r2"})
            .then(P::RESC, {"C1", "r1", "C2", "r2"}));
    add(RuleBuilder("D40a", "c18")
            .when(P::HasR, {"C", "r"})
            .is(Sort::AbstractContext, "C")
            .then(P::RESC, {"C", "r", "C", "r"}));
    add(RuleBuilder("D40b", "c19")
            .when(P::RESC, {"C1", "r1", "C2", "r2"})
            .when(P::IsAR, {"r2", "r3"})
            .then(P::RESC, {"C1", "r1", "C2", "r3"}));
    add(RuleBuilder("D40c", "c20")
            .when(P::RESC, {"C1", "r1", "C2", "r2"})
            .when(P::IsAR, {"r1", "r3"})
            .then(P::RESC, {"C1", "r3", "C2", "r2"}));
    each_kind("D41", "c21<-", [](RuleBuilder& b, auto has) {
        b.when(P::RESC, {"C2", "r2", "C", "r"})
            .when(has(L::RoleContext), {"r2", "C2", "x"})
            .is(Sort::AbstractContext, "C")
            .then(has(L::RoleContext), {"r", "C", "x"});
    });
    each_kind("D42", "c22<-", [](RuleBuilder& b, auto has) {
        b.when(P::RESC, {"C2", "q1", "C", "r1"})
            .when(P::RESC, {"C2", "q2", "C", "r2"})
            .when(has(L::CoRoleContext), {"q1", "q2", "C2", "x"})
            .is(Sort::AbstractContext, "C")
            .then(has(L::CoRoleContext), {"r1", "r2", "C", "x"});
    });

    // Reflexivity of the sub-context and sub-role relations over declared
    // entities.
    add(RuleBuilder("D43a", "c1").is(Sort::AbstractContext, "C").then(P::IsAC, {"C", "C"}));
    add(RuleBuilder("D43b", "c2").is(Sort::Role, "r").then(P::IsAR, {"r", "r"}));

    // What p1 does for p2 as r1 in c is something p1 does as r1 in c.
    each_kind("D44", "cop->p", [](RuleBuilder& b, auto has) {
        b.when(has(L::CoPlayer), {"p1", "p2", "r1", "r2", "c", "x", "t"}).then(has(L::Player), {"p1", "r1", "c", "x", "t"});
    });

    return rules;
}

std::vector<ObligationSpec> build_obligations() {
    return {
        {"O1", "Ax6", "every abstract or instance context c", "hasR(c, ?r)", ""},
        {"O2", "Ax7", "every role r", "hasR(?c, r)", ""},
        {"O3", "Ax8", "every abstract or instance context c", "hasCoR(c, ?r1, ?r2)", ""},
        {"O4", "Ax11", "every player p", "play(p, ?r, ?c, ?t) and a coPlay with p in either player position", ""},
        {"O5", "Ax9->,Ax10->", "hasR(C, r) / hasCoR(C, r1, r2) with C abstract",
         "insC(?c, C) with hasR(?c, r) / hasCoR(?c, r1, r2)", ""},
        {"O6", "Ax12->,Ax13->", "hasR(c, r) / hasCoR(c, r1, r2) with c an instance",
         "play(?p, r, c, ?t) / coPlay(?p1, ?p2, r1, r2, c, ?t)", ""},
        {"O7", "Ax23,Ax24", "play(p, r, c, t) / coPlay(p1, p2, r1, r2, c, t), for each X",
         "hasX_p(p, r, c, ?x, ?t1) / hasX_cop(p1, p2, r1, r2, c, ?x, ?t1) with ?t1 within t", ""},
        {"O8", "Ax25,Ax26", "hasR(c, r) / hasCoR(c, r1, r2), for each X",
         "hasX_rc(r, c, ?x) / hasX_corc(r1, r2, c, ?x)", ""},
        {"O9", "Ax27->,Ax28->,Ax29->,Ax30->,Ax33->,Ax34->,Ax36->", "every lifted hasX fact",
         "the same information one level below", ""},
        {"O10", "Ax31,Ax32", "every role r and every pair (r1, r2) with some hasCoR(?c, r1, r2), for each X",
         "hasX_r(r, ?x) / hasX_cor(r1, r2, ?x)", ""},
        {"O11", "Ax35", "every abstract or instance context c, for each X", "hasX_c(c, ?x)", ""},
        {"O12", "Ax39", "every instance context c", "hasL(c, ?l) and hasT(c, ?t)", ""},
        {"O13", "Ax40->,Ax41->", "hasX_p(p, r, c, x, t) / hasX_cop(...)",
         "the same information in some context embedded in c within t",
         "always met through EIC(c, c) for instance contexts"},
    };
}

}  // namespace

const std::vector<Rule>& catalog() {
    static const std::vector<Rule> rules = build_catalog();
    return rules;
}

const Rule* find_rule(std::string_view id) {
    for (const Rule& r : catalog()) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

std::optional<std::string> unrestricted_variable(const Rule& rule) {
    std::vector<bool> bound(rule.var_count(), false);
    for (const Pattern& p : rule.premises) {
        for (VarIndex v : p.vars) bound[v] = true;
    }
    for (const Condition& c : rule.conditions) {
        if (c.kind == Condition::Kind::SortIs) bound[c.a] = true;
    }
    for (const Pattern& p : rule.conclusions) {
        for (VarIndex v : p.vars) {
            if (!bound[v]) return rule.var_names[v];
        }
    }
    return std::nullopt;
}

std::string describe(const Pattern& pattern, const Rule& rule) {
    std::string out(predicate_name(pattern.pred));
    out += '(';
    for (std::size_t i = 0; i < pattern.vars.size(); ++i) {
        if (i) out += ", ";
        out += rule.var_names[pattern.vars[i]];
    }
    return out + ')';
}

std::string describe(const Condition& condition, const Rule& rule) {
    const std::string& a = rule.var_names[condition.a];
    const std::string& b = rule.var_names[condition.b];
    switch (condition.kind) {
        case Condition::Kind::IntervalWithin: return a + " within " + b;
        case Condition::Kind::IntervalsMeet: return a + " meets " + b;
        case Condition::Kind::LocationWithin: return a + " located within " + b;
        case Condition::Kind::SortIs: return std::string(sort_keyword(condition.sort)) + "(" + a + ")";
    }
    return "";
}

const std::vector<ObligationSpec>& obligations() {
    static const std::vector<ObligationSpec> specs = build_obligations();
    return specs;
}

}  // namespace sck
