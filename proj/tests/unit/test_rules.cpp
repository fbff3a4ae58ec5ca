#include <gtest/gtest.h>

#include <set>

#include "sck/engine.hpp"
#include "sck/rules.hpp"

namespace sck {
namespace {

TEST(Rules, CatalogSize) {
    // 27 kind-independent rules plus 21 rules instantiated per kind.
    EXPECT_EQ(catalog().size(), 27u + 21u * 4u);
}

TEST(Rules, IdsAreUniqueAndFindable) {
    std::set<std::string> ids;
    for (const Rule& r : catalog()) {
        EXPECT_TRUE(ids.insert(r.id).second) << r.id;
        EXPECT_EQ(find_rule(r.id), &r);
        EXPECT_FALSE(r.axiom_ref.empty()) << r.id;
        EXPECT_FALSE(r.conclusions.empty()) << r.id;
    }
    EXPECT_EQ(find_rule("D99"), nullptr);
    for (const char* id : {"D1", "D13.E", "D23a.G", "D23b.D", "D31.N", "D41.D", "D43a", "D43b", "D44.E"}) {
        EXPECT_NE(find_rule(id), nullptr) << id;
    }
}

TEST(Rules, EveryRuleIsRangeRestricted) {
    for (const Rule& r : catalog()) EXPECT_FALSE(unrestricted_variable(r).has_value()) << r.id;
}

TEST(Rules, UnrestrictedVariableIsDetected) {
    Rule r;
    r.id = "bad";
    r.var_names = {"c", "r"};
    r.premises.push_back(Pattern{Predicate::InsC, {0, 0}});
    r.conclusions.push_back(Pattern{Predicate::HasR, {0, 1}});
    EXPECT_EQ(unrestricted_variable(r), "r");
}

TEST(Rules, PatternsMatchPredicateArity) {
    for (const Rule& r : catalog()) {
        for (const Pattern& p : r.premises) EXPECT_EQ(p.vars.size(), predicate_info(p.pred).arity) << r.id;
        for (const Pattern& p : r.conclusions) EXPECT_EQ(p.vars.size(), predicate_info(p.pred).arity) << r.id;
    }
}

TEST(Rules, Describe) {
    const Rule& d3 = *find_rule("D3");
    EXPECT_EQ(d3.axiom_ref, "Ax9<-");
    EXPECT_EQ(describe(d3.premises[0], d3), "insC(c, C)");
    EXPECT_EQ(describe(d3.conclusions[0], d3), "hasR(C, r)");
    const Rule& d31 = *find_rule("D31.E");
    ASSERT_EQ(d31.conditions.size(), 1u);
    EXPECT_EQ(describe(d31.conditions[0], d31), "t2 within t");
}

TEST(Rules, InheritanceFromInstanceToAbstract) {
    KnowledgeBase kb;
    const TermId u = kb.declare_entity("u", Sort::InstanceContext);
    const TermId uni = kb.declare_entity("University", Sort::AbstractContext);
    const TermId teacher = kb.declare_entity("teacher", Sort::Role);
    const std::vector<Fact> premises = {Fact(Predicate::InsC, {u, uni}), Fact(Predicate::HasR, {u, teacher})};
    const std::vector<Fact> out = apply_rule(kb, *find_rule("D3"), premises);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], Fact(Predicate::HasR, {uni, teacher}));
    // Premises in the wrong order do not fit.
    const std::vector<Fact> swapped = {premises[1], premises[0]};
    EXPECT_TRUE(apply_rule(kb, *find_rule("D3"), swapped).empty());
}

TEST(Rules, SortGuardBlocksWrongSort) {
    KnowledgeBase kb;
    const TermId C = kb.declare_entity("School", Sort::AbstractContext);
    const TermId p = kb.declare_entity("p", Sort::Player);
    const TermId r = kb.declare_entity("r", Sort::Role);
    const TermId x = kb.declare_entity("x", Sort::Event);
    const TermId t = kb.intern_interval({0, 1});
    // D17 lifts only from instance contexts.
    const Predicate hp = info_predicate(InfoKind::Event, InfoLevel::Player);
    const std::vector<Fact> fact = {Fact(hp, {p, r, C, x, t})};
    EXPECT_TRUE(apply_rule(kb, *find_rule("D17.E"), fact).empty());
}

TEST(Rules, ZeroPremiseRulesRangeOverDeclaredEntities) {
    KnowledgeBase kb;
    kb.declare_entity("a", Sort::Role);
    kb.declare_entity("b", Sort::Role);
    EXPECT_EQ(apply_rule(kb, *find_rule("D43b"), {}).size(), 2u);
    EXPECT_TRUE(apply_rule(kb, *find_rule("D43a"), {}).empty());
}

TEST(Rules, ObligationsCoverOneToThirteen) {
    const auto& obs = obligations();
    ASSERT_EQ(obs.size(), 13u);
    for (std::size_t i = 0; i < obs.size(); ++i) {
        EXPECT_EQ(obs[i].id, "O" + std::to_string(i + 1));
        EXPECT_FALSE(obs[i].axiom_ref.empty());
        EXPECT_FALSE(obs[i].witness.empty());
    }
}

}  // namespace
}  // namespace sck
