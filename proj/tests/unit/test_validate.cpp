#include <gtest/gtest.h>

#include <algorithm>

#include "paths.hpp"
#include "sck/engine.hpp"
#include "sck/validate.hpp"

namespace sck {
namespace {

KnowledgeBase load(const std::string& text, SortMode mode = SortMode::Strict) {
    const std::vector<SourceText> docs = {{"t.sck", text}};
    LoadResult r = load_documents(docs, mode);
    if (!r.ok()) throw std::runtime_error(format_diagnostic(r.errors.front()));
    return std::move(*r.kb);
}

KnowledgeBase fixture(const std::string& name) {
    KnowledgeBase kb = load(testing::read_file(testing::fixture_path(name)));
    saturate(kb);
    return kb;
}

std::vector<std::string> lines(const std::vector<Violation>& vs) {
    std::vector<std::string> out;
    for (const Violation& v : vs) out.push_back(format_violation(v));
    return out;
}

bool contains(const std::vector<std::string>& ls, const std::string& line) {
    return std::find(ls.begin(), ls.end(), line) != ls.end();
}

TEST(CheckSorts, PlayerAsContext) {
    const KnowledgeBase kb = load("player Lucy.\nrole teacher.\nhasR(Lucy, teacher).\n", SortMode::Lenient);
    const auto vs = check_sorts(kb);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].axiom_ref, "Ax2");
    EXPECT_EQ(vs[0].position, 0u);
    EXPECT_EQ(vs[0].severity, Severity::Error);
    EXPECT_EQ(format_violation(vs[0]), "error sort (Ax2) hasR(Lucy, teacher): argument 1 'Lucy' is player");
}

TEST(CheckSorts, LocationOfAbstractContext) {
    const KnowledgeBase kb = load("abstract_context School.\nlocation campus.\nhasL(School, campus).\n", SortMode::Lenient);
    const auto vs = check_sorts(kb);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].axiom_ref, "Ax37");
}

TEST(CheckSorts, OnePerBreachedPosition) {
    const KnowledgeBase kb = load("player p.\nrole r.\nplay(r, p, p, [0,1]).\n", SortMode::Lenient);
    EXPECT_EQ(check_sorts(kb).size(), 3u);
}

TEST(CheckSorts, ExamplesAreWellSorted) {
    for (const char* name : {"example1.sck", "example2.sck", "embedding.sck", "complete_school.sck"}) {
        EXPECT_TRUE(check_sorts(fixture(name)).empty()) << name;
    }
}

TEST(CheckObligations, EmptyKbIsVacuous) {
    KnowledgeBase kb;
    saturate(kb);
    EXPECT_TRUE(check_obligations(kb).empty());
}

TEST(CheckObligations, ExampleOne) {
    const auto ls = lines(check_obligations(fixture("example1.sck")));
    for (const char* x : {"hasE_p", "hasN_p", "hasG_p", "hasD_p"}) {
        EXPECT_TRUE(contains(ls, std::string("warning O7 (Ax23) play(Lucy, teacher, u, [0,9]): missing ") + x +
                                     "(Lucy, teacher, u, ?x, ?t1) with ?t1 within [0,9]"));
        EXPECT_TRUE(contains(ls, std::string("warning O7 (Ax23) play(Bob, student, u, [0,9]): missing ") + x +
                                     "(Bob, student, u, ?x, ?t1) with ?t1 within [0,9]"));
    }
    EXPECT_TRUE(contains(ls, "warning O12 (Ax39) instance_context u: missing hasL(u, ?l)"));
    EXPECT_TRUE(contains(ls, "warning O12 (Ax39) instance_context u: missing hasT(u, ?t)"));
}

TEST(CheckObligations, ExampleTwoCoPlay) {
    const auto ls = lines(check_obligations(fixture("example2.sck")));
    const std::string scope = "warning O7 (Ax24) coPlay(Lucy, Bob, doctor, patient, h, [0,9]): missing ";
    const std::string tail = "(Lucy, Bob, doctor, patient, h, ?x, ?t1) with ?t1 within [0,9]";
    EXPECT_FALSE(contains(ls, scope + "hasE_cop" + tail));
    EXPECT_TRUE(contains(ls, scope + "hasG_cop" + tail));
    EXPECT_TRUE(contains(ls, scope + "hasD_cop" + tail));
    EXPECT_TRUE(contains(ls, "warning O12 (Ax39) instance_context h: missing hasL(h, ?l)"));
}

TEST(CheckObligations, OrderedByObligation) {
    const auto vs = check_obligations(fixture("example1.sck"));
    ASSERT_FALSE(vs.empty());
    for (std::size_t i = 1; i < vs.size(); ++i) {
        EXPECT_LE(std::stoi(vs[i - 1].id.substr(1)), std::stoi(vs[i].id.substr(1)));
    }
    for (const Violation& v : vs) {
        EXPECT_EQ(v.severity, Severity::Warning);
        EXPECT_FALSE(v.missing.empty());
    }
}

TEST(CheckObligations, CompleteSchoolHasNoWarnings) {
    EXPECT_TRUE(check_obligations(fixture("complete_school.sck")).empty());
}

TEST(CheckObligations, LonePlayerMissesCoPlay) {
    KnowledgeBase kb = load("player p.\nrole r.\ninstance_context c.\nplay(p, r, c, [0,1]).\n");
    saturate(kb);
    EXPECT_TRUE(contains(lines(check_obligations(kb)),
                         "warning O4 (Ax11) player p: missing coPlay(p, ?p2, ?r1, ?r2, ?c, ?t)"));
}

TEST(CheckObligations, AbstractRoleWithoutInstance) {
    KnowledgeBase kb = load("abstract_context School.\nrole r.\nhasR(School, r).\n");
    saturate(kb);
    EXPECT_TRUE(contains(lines(check_obligations(kb)),
                         "warning O5 (Ax9->) hasR(School, r): missing insC(?c, School) with hasR(?c, r)"));
}

TEST(CheckObligations, InstanceRoleWithoutPlayer) {
    KnowledgeBase kb = load("instance_context c.\nrole r.\nhasR(c, r).\n");
    saturate(kb);
    EXPECT_TRUE(contains(lines(check_obligations(kb)), "warning O6 (Ax12->) hasR(c, r): missing play(?p, r, c, ?t)"));
}

TEST(CheckObligations, LiftedFactsWithoutWitness) {
    KnowledgeBase kb = load("instance_context c.\nrole r.\nevent e.\nhasE_rc(r, c, e).\n");
    saturate(kb);
    EXPECT_TRUE(contains(lines(check_obligations(kb)),
                         "warning O9 (Ax27->) hasE_rc(r, c, e): missing hasE_p(?p, r, c, e, ?t)"));
}

TEST(CheckObligations, EmbeddedWitnessIsReflexive) {
    for (const char* name : {"example1.sck", "example2.sck", "embedding.sck"}) {
        for (const Violation& v : check_obligations(fixture(name))) EXPECT_NE(v.id, "O13") << name;
    }
}

TEST(CheckObligations, Deterministic) {
    EXPECT_EQ(check_obligations(fixture("example1.sck")), check_obligations(fixture("example1.sck")));
}

}  // namespace
}  // namespace sck
