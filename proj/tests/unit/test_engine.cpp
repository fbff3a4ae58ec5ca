#include <gtest/gtest.h>

#include "paths.hpp"
#include "sck/engine.hpp"
#include "sck/error.hpp"

namespace sck {
namespace {

KnowledgeBase load_fixture(const std::string& name) {
    const std::vector<SourceText> docs = {{name, testing::read_file(testing::fixture_path(name))}};
    LoadResult r = load_documents(docs);
    if (!r.ok()) throw std::runtime_error(format_diagnostic(r.errors.front()));
    return std::move(*r.kb);
}

KnowledgeBase saturated_fixture(const std::string& name) {
    KnowledgeBase kb = load_fixture(name);
    saturate(kb);
    return kb;
}

Atom atom(const std::string& text) { return std::get<Atom>(parse_atom(text)); }

bool has(const KnowledgeBase& kb, const std::string& text) {
    const auto f = resolve_fact(kb, atom(text));
    return f && kb.contains(*f);
}

std::vector<std::string> rows(const KnowledgeBase& kb, const std::vector<Binding>& bindings) {
    std::vector<std::string> out;
    for (const Binding& b : bindings) {
        std::string row;
        for (const auto& [var, term] : b.values) row += (row.empty() ? "" : " ") + var + "=" + kb.render(term);
        out.push_back(row);
    }
    return out;
}

TEST(Saturate, EmptyKb) {
    KnowledgeBase kb;
    const SaturationStats s = saturate(kb);
    EXPECT_EQ(s.facts_derived, 0u);
    EXPECT_EQ(s.rounds, 1u);
    EXPECT_TRUE(s.rule_fire_counts.empty());
}

TEST(Saturate, ExampleOne) {
    KnowledgeBase kb = load_fixture("example1.sck");
    const SaturationStats s = saturate(kb);
    EXPECT_EQ(s.facts_asserted, 7u);
    EXPECT_EQ(s.facts_derived, kb.size() - 7);
    for (const char* f : {"play(Lucy, teacher, u, [0,9])", "play(Bob, student, u, [0,9])", "play(Lucy, staff, u, [0,9])",
                          "hasR(u, teacher)", "hasR(u, student)", "hasR(u, staff)", "hasR(University, teacher)",
                          "hasR(University, student)", "hasR(University, staff)", "hasCoR(u, teacher, student)",
                          "hasCoR(University, teacher, student)", "hasR(Hospital, doctor)"}) {
        EXPECT_TRUE(has(kb, f)) << f;
    }
    EXPECT_FALSE(has(kb, "play(Lucy, staff, h, [0,9])"));
    EXPECT_FALSE(has(kb, "hasR(Hospital, staff)"));
}

TEST(Saturate, ExampleTwo) {
    const KnowledgeBase kb = saturated_fixture("example2.sck");
    for (const char* f : {"play(Lucy, doctor, h, [0,20])", "play(Lucy, doctor, h, [0,9])", "play(Bob, patient, h, [0,9])",
                          "hasN_rc(doctor, h, no_bride)", "hasE_corc(doctor, patient, h, treating)",
                          "hasE_rc(doctor, h, treating)", "hasE_rc(doctor, hospital, treating)",
                          "hasE_r(doctor, treating)", "hasE_c(hospital, treating)", "hasN_c(hospital, no_bride)"}) {
        EXPECT_TRUE(has(kb, f)) << f;
    }
}

TEST(Saturate, FireCountsSumToDerived) {
    KnowledgeBase kb = load_fixture("example2.sck");
    const SaturationStats s = saturate(kb);
    std::size_t sum = 0;
    for (const auto& [rule, n] : s.rule_fire_counts) sum += n;
    EXPECT_EQ(sum, s.facts_derived);
}

TEST(Saturate, IsIdempotent) {
    KnowledgeBase kb = saturated_fixture("example1.sck");
    const std::size_t size = kb.size();
    const SaturationStats again = saturate(kb);
    EXPECT_EQ(kb.size(), size);
    EXPECT_EQ(again.rounds, 1u);
}

TEST(Saturate, FactCap) {
    KnowledgeBase kb = load_fixture("example1.sck");
    SaturationOptions o;
    o.fact_cap = 10;
    try {
        saturate(kb, o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
    }
    KnowledgeBase small = load_fixture("example1.sck");
    o.fact_cap = 3;
    EXPECT_THROW(saturate(small, o), Error);
}

TEST(Saturate, DisabledRuleIsSkipped) {
    KnowledgeBase kb = load_fixture("example1.sck");
    SaturationOptions o;
    o.disabled_rules = {"D8"};
    saturate(kb, o);
    EXPECT_FALSE(has(kb, "play(Lucy, staff, u, [0,9])"));
    EXPECT_TRUE(has(kb, "hasR(u, staff)"));  // still via c5
}

TEST(Query, PlayOfLucyInU) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    EXPECT_EQ(rows(kb, query(kb, atom("play(Lucy, ?r, u, ?t)"))),
              (std::vector<std::string>{"r=staff t=[0,9]", "r=teacher t=[0,9]"}));
}

TEST(Query, RolesOfUniversity) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    EXPECT_EQ(rows(kb, query(kb, atom("hasR(University, ?r)"))),
              (std::vector<std::string>{"r=staff", "r=student", "r=teacher"}));
}

TEST(Query, NoMatchesAndUnknownNames) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    EXPECT_TRUE(query(kb, atom("hasR(h, teacher)")).empty());
    EXPECT_TRUE(query(kb, atom("hasR(Nowhere, ?r)")).empty());
    EXPECT_TRUE(query(kb, atom("play(Lucy, ?r, u, [0,3])")).empty());
}

TEST(Query, GroundQueryYieldsOneEmptyBinding) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    const auto b = query(kb, atom("hasR(u, teacher)"));
    ASSERT_EQ(b.size(), 1u);
    EXPECT_TRUE(b[0].values.empty());
}

TEST(Query, RepeatedVariableMustAgree) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    EXPECT_EQ(rows(kb, query(kb, atom("isAR(?r, ?r)"))).size(), 4u);
    EXPECT_EQ(rows(kb, query(kb, atom("isAR(?a, ?b)"))).size(), 5u);
}

TEST(Query, VirtualModeUsesContainment) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    EXPECT_EQ(rows(kb, query(kb, atom("play(Lucy, ?r, u, [2,3])"), QueryMode::Virtual)),
              (std::vector<std::string>{"r=staff", "r=teacher"}));
    EXPECT_TRUE(query(kb, atom("play(Lucy, ?r, u, [5,10])"), QueryMode::Virtual).empty());
    EXPECT_EQ(query(kb, atom("coPlay(Lucy, Bob, teacher, student, u, [9,9])"), QueryMode::Virtual).size(), 1u);
    try {
        query(kb, atom("play(Lucy, ?r, u, ?t)"), QueryMode::Virtual);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnboundIntervalVariable);
    }
    // Other predicates are unaffected by the mode.
    EXPECT_EQ(query(kb, atom("hasR(u, ?r)"), QueryMode::Virtual).size(), 3u);
}

TEST(Explain, SubRolePlay) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    const DerivationTree t = explain(kb, *resolve_fact(kb, atom("play(Lucy, staff, u, [0,9])")));
    EXPECT_EQ(t.rule_id, "D8");
    ASSERT_EQ(t.children.size(), 2u);
    EXPECT_EQ(t.children[0].rule_id, "D2");
    EXPECT_EQ(kb.render(kb.fact(t.children[0].children[0].fact)), "coPlay(Lucy, Bob, teacher, student, u, [0,9])");
    EXPECT_TRUE(t.children[1].rule_id.empty());
    EXPECT_EQ(kb.render(kb.fact(t.children[1].fact)), "isAR(teacher, staff)");
}

TEST(Explain, AssertedLeaf) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    const DerivationTree t = explain(kb, *resolve_fact(kb, atom("isAR(teacher, staff)")));
    EXPECT_TRUE(t.rule_id.empty());
    EXPECT_TRUE(t.children.empty());
}

TEST(Explain, ContextInformationChain) {
    const KnowledgeBase kb = saturated_fixture("example2.sck");
    const DerivationTree t = explain(kb, *resolve_fact(kb, atom("hasE_c(hospital, treating)")));
    EXPECT_EQ(t.rule_id, "D23b.E");
    ASSERT_EQ(t.children.size(), 1u);
    EXPECT_EQ(t.children[0].rule_id, "D20.E");
    EXPECT_EQ(t.children[0].children[1].rule_id, "D18.E");
}

TEST(Explain, MissingFact) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    try {
        explain(kb, *resolve_fact(kb, atom("hasR(h, teacher)")));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPresent);
    }
    EXPECT_FALSE(resolve_fact(kb, atom("hasR(nowhere, teacher)")).has_value());
    EXPECT_THROW(resolve_fact(kb, atom("hasR(?c, teacher)")), Error);
}

std::vector<std::string> items(const HarvestReport& r, InfoKind k) {
    std::vector<std::string> out;
    for (const HarvestEntry& e : r.items[static_cast<std::size_t>(k)]) out.push_back(e.item);
    return out;
}

TEST(Harvest, RoleInAbstractContext) {
    const KnowledgeBase kb = saturated_fixture("example2.sck");
    const std::vector<std::string> target = {"doctor", "hospital"};
    const HarvestReport r = harvest(kb, HarvestLevel::RoleContext, target);
    EXPECT_EQ(items(r, InfoKind::Event), std::vector<std::string>{"treating"});
    EXPECT_EQ(items(r, InfoKind::Norm), std::vector<std::string>{"no_bride"});
    EXPECT_TRUE(items(r, InfoKind::Goal).empty());
    const HarvestEntry& norm = r.items[static_cast<std::size_t>(InfoKind::Norm)][0];
    EXPECT_EQ(norm.players, std::vector<std::string>{"Lucy@h"});
}

TEST(Harvest, RoleLevel) {
    const KnowledgeBase kb = saturated_fixture("example2.sck");
    const std::vector<std::string> target = {"doctor"};
    const HarvestReport r = harvest(kb, HarvestLevel::Role, target);
    EXPECT_EQ(items(r, InfoKind::Event), std::vector<std::string>{"treating"});
}

TEST(Harvest, EmptyReportIsNotAnError) {
    const KnowledgeBase kb = saturated_fixture("example1.sck");
    const std::vector<std::string> target = {"teacher"};
    const HarvestReport r = harvest(kb, HarvestLevel::Role, target);
    for (const auto& list : r.items) EXPECT_TRUE(list.empty());
}

TEST(Harvest, BadTargets) {
    const KnowledgeBase kb = saturated_fixture("example2.sck");
    auto kind_of = [&](HarvestLevel level, std::vector<std::string> target) {
        try {
            harvest(kb, level, target);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind_of(HarvestLevel::Role, {"nobody"}), ErrorKind::UnknownTarget);
    EXPECT_EQ(kind_of(HarvestLevel::Role, {"Lucy"}), ErrorKind::UnknownTarget);
    EXPECT_EQ(kind_of(HarvestLevel::RoleContext, {"doctor"}), ErrorKind::UnknownTarget);
    EXPECT_EQ(kind_of(HarvestLevel::Context, {"doctor"}), ErrorKind::UnknownTarget);
}

TEST(Harvest, LevelNames) {
    for (const char* n : {"rc", "corc", "role", "cor", "context"}) {
        const auto level = harvest_level_from_name(n);
        ASSERT_TRUE(level.has_value());
        EXPECT_EQ(harvest_level_name(*level), n);
    }
    EXPECT_FALSE(harvest_level_from_name("player").has_value());
    EXPECT_EQ(harvest_target_arity(HarvestLevel::CoRoleContext), 3u);
}

}  // namespace
}  // namespace sck
