#include <gtest/gtest.h>

#include <set>

#include "sck/vocabulary.hpp"

namespace sck {
namespace {

TEST(Vocabulary, SortKeywordsRoundTrip) {
    for (std::size_t i = 0; i < kSortCount; ++i) {
        const Sort s = static_cast<Sort>(i);
        if (s == Sort::Interval) continue;
        EXPECT_EQ(sort_from_keyword(sort_keyword(s)), s);
    }
    EXPECT_FALSE(sort_from_keyword("context").has_value());
}

TEST(Vocabulary, ContextAndInfoSorts) {
    EXPECT_TRUE(is_context(Sort::AbstractContext));
    EXPECT_TRUE(is_context(Sort::InstanceContext));
    EXPECT_FALSE(is_context(Sort::Role));
    EXPECT_TRUE(is_info_item(Sort::Desire));
    EXPECT_FALSE(is_info_item(Sort::Location));
}

TEST(Vocabulary, FortyTwoPredicatesWithUniqueNames) {
    std::set<std::string_view> names;
    for (std::size_t i = 0; i < kPredicateCount; ++i) {
        const Predicate p = predicate_at(i);
        EXPECT_EQ(predicate_index(p), i);
        EXPECT_EQ(predicate_from_name(predicate_name(p)), p);
        names.insert(predicate_name(p));
    }
    EXPECT_EQ(names.size(), 42u);
    EXPECT_FALSE(predicate_from_name("hasX_c").has_value());
}

TEST(Vocabulary, InfoPredicatesDecompose) {
    for (InfoKind k : kInfoKinds) {
        for (std::size_t l = 0; l < kInfoLevelCount; ++l) {
            const InfoLevel level = static_cast<InfoLevel>(l);
            const auto parts = info_parts(info_predicate(k, level));
            ASSERT_TRUE(parts.has_value());
            EXPECT_EQ(parts->kind, k);
            EXPECT_EQ(parts->level, level);
        }
    }
    EXPECT_FALSE(info_parts(Predicate::Play).has_value());
    EXPECT_EQ(predicate_name(info_predicate(InfoKind::Norm, InfoLevel::RoleContext)), "hasN_rc");
    EXPECT_EQ(predicate_name(info_predicate(InfoKind::Desire, InfoLevel::CoPlayer)), "hasD_cop");
}

TEST(Vocabulary, PlaySignature) {
    const PredicateInfo& play = predicate_info(Predicate::Play);
    EXPECT_EQ(play.arity, 4);
    EXPECT_EQ(play.signature[0], mask_of(Sort::Player));
    EXPECT_EQ(play.signature[1], mask_of(Sort::Role));
    EXPECT_EQ(play.signature[2], mask_of(Sort::InstanceContext));
    EXPECT_EQ(play.signature[3], mask_of(Sort::Interval));
    EXPECT_EQ(play.enduring_interval, 3);
    EXPECT_EQ(predicate_info(Predicate::CoPlay).enduring_interval, 5);
    EXPECT_FALSE(predicate_info(Predicate::HasT).enduring_interval.has_value());
}

TEST(Vocabulary, CoPlayerInformationOrder) {
    const PredicateInfo& cop = predicate_info(info_predicate(InfoKind::Event, InfoLevel::CoPlayer));
    ASSERT_EQ(cop.arity, 7);
    EXPECT_EQ(cop.signature[0], mask_of(Sort::Player));
    EXPECT_EQ(cop.signature[1], mask_of(Sort::Player));
    EXPECT_EQ(cop.signature[2], mask_of(Sort::Role));
    EXPECT_EQ(cop.signature[3], mask_of(Sort::Role));
    EXPECT_EQ(cop.signature[4], mask_of(Sort::InstanceContext));
    EXPECT_EQ(cop.signature[5], mask_of(Sort::Event));
    EXPECT_EQ(cop.signature[6], mask_of(Sort::Interval));
}

TEST(Vocabulary, ContextPositionsAdmitBothSorts) {
    EXPECT_EQ(predicate_info(Predicate::HasR).signature[0], kAnyContext);
    EXPECT_EQ(predicate_info(info_predicate(InfoKind::Goal, InfoLevel::RoleContext)).signature[1], kAnyContext);
    EXPECT_EQ(predicate_info(Predicate::HasL).signature[0], mask_of(Sort::InstanceContext));
    EXPECT_EQ(predicate_info(Predicate::HasL).axiom_ref, "Ax37");
}

}  // namespace
}  // namespace sck
