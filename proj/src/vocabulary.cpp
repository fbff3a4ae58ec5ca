#include "sck/vocabulary.hpp"

#include <string>
#include <vector>

#include "sck/error.hpp"

namespace sck {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SortConflict: return "SortConflict";
        case ErrorKind::SortViolation: return "SortViolation";
        case ErrorKind::UnknownEntity: return "UnknownEntity";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::NotPresent: return "NotPresent";
        case ErrorKind::UnknownTarget: return "UnknownTarget";
        case ErrorKind::UnboundIntervalVariable: return "UnboundIntervalVariable";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

namespace {

constexpr std::array<std::string_view, kSortCount> kSortKeywords{
    "abstract_context", "instance_context", "role", "player", "interval",
    "location",         "event",            "norm", "goal",   "desire",
};

constexpr SortMask SC = mask_of(Sort::AbstractContext);
constexpr SortMask IC = mask_of(Sort::InstanceContext);
constexpr SortMask SR = mask_of(Sort::Role);
constexpr SortMask PL = mask_of(Sort::Player);
constexpr SortMask TI = mask_of(Sort::Interval);
constexpr SortMask LC = mask_of(Sort::Location);
constexpr SortMask CTX = kAnyContext;

constexpr std::array<std::string_view, kInfoLevelCount> kLevelSuffix{"c", "r", "cor", "rc", "corc", "p", "cop"};

struct Table {
    std::vector<std::string> names;  // owns the hasX_* spellings
    std::array<PredicateInfo, kPredicateCount> info{};

    Table() {
        names.reserve(kPredicateCount);
        auto add = [&](Predicate p, std::string name, std::initializer_list<SortMask> sig,
                       std::string_view axiom, std::optional<std::uint8_t> enduring = std::nullopt) {
            names.push_back(std::move(name));
            PredicateInfo& pi = info[static_cast<std::size_t>(p)];
            pi.arity = static_cast<std::uint8_t>(sig.size());
            std::size_t i = 0;
            for (SortMask m : sig) pi.signature[i++] = m;
            pi.axiom_ref = axiom;
            pi.enduring_interval = enduring;
        };
        add(Predicate::InsC, "insC", {IC, SC}, "Ax1");
        add(Predicate::HasR, "hasR", {CTX, SR}, "Ax2");
        add(Predicate::HasCoR, "hasCoR", {CTX, SR, SR}, "Ax3");
        add(Predicate::Play, "play", {PL, SR, IC, TI}, "Ax4", 3);
        add(Predicate::CoPlay, "coPlay", {PL, PL, SR, SR, IC, TI}, "Ax5", 5);
        add(Predicate::IsAC, "isAC", {SC, SC}, "d1");
        add(Predicate::IsAR, "isAR", {SR, SR}, "d2");
        add(Predicate::HasL, "hasL", {IC, LC}, "Ax37");
        add(Predicate::HasT, "hasT", {IC, TI}, "Ax38");
        add(Predicate::ContainsL, "containsL", {LC, LC}, "containsL");
        add(Predicate::EIC, "EIC", {IC, IC}, "d3");
        add(Predicate::REIC, "REIC", {IC, SR, IC, SR}, "d4");
        add(Predicate::ESC, "ESC", {SC, SC}, "d5");
        add(Predicate::RESC, "RESC", {SC, SR, SC, SR}, "d6");
        for (InfoKind kind : kInfoKinds) {
            const SortMask X = mask_of(sort_of(kind));
            const std::string stem = std::string("has") + info_letter(kind) + "_";
            auto name = [&](InfoLevel level) { return stem + std::string(kLevelSuffix[static_cast<std::size_t>(level)]); };
            add(info_predicate(kind, InfoLevel::Context), name(InfoLevel::Context), {CTX, X}, "Ax16");
            add(info_predicate(kind, InfoLevel::Role), name(InfoLevel::Role), {SR, X}, "Ax17");
            add(info_predicate(kind, InfoLevel::CoRole), name(InfoLevel::CoRole), {SR, SR, X}, "Ax18");
            add(info_predicate(kind, InfoLevel::RoleContext), name(InfoLevel::RoleContext), {SR, CTX, X}, "Ax19");
            add(info_predicate(kind, InfoLevel::CoRoleContext), name(InfoLevel::CoRoleContext), {SR, SR, CTX, X},
                "Ax20");
            add(info_predicate(kind, InfoLevel::Player), name(InfoLevel::Player), {PL, SR, IC, X, TI}, "Ax21");
            add(info_predicate(kind, InfoLevel::CoPlayer), name(InfoLevel::CoPlayer), {PL, PL, SR, SR, IC, X, TI},
                "Ax22");
        }
        for (std::size_t i = 0; i < kPredicateCount; ++i) info[i].name = names[i];
    }
};

const Table& table() {
    static const Table t;
    return t;
}

}  // namespace

std::string_view sort_keyword(Sort sort) { return kSortKeywords[static_cast<std::size_t>(sort)]; }

std::optional<Sort> sort_from_keyword(std::string_view keyword) {
    for (std::size_t i = 0; i < kSortCount; ++i) {
        if (kSortKeywords[i] == keyword) return static_cast<Sort>(i);
    }
    return std::nullopt;
}

bool is_info_item(Sort sort) {
    return sort == Sort::Event || sort == Sort::Norm || sort == Sort::Goal || sort == Sort::Desire;
}

bool is_context(Sort sort) { return sort == Sort::AbstractContext || sort == Sort::InstanceContext; }

Sort sort_of(InfoKind kind) {
    switch (kind) {
        case InfoKind::Event: return Sort::Event;
        case InfoKind::Norm: return Sort::Norm;
        case InfoKind::Goal: return Sort::Goal;
        case InfoKind::Desire: return Sort::Desire;
    }
    return Sort::Event;
}

char info_letter(InfoKind kind) { return "ENGD"[static_cast<std::size_t>(kind)]; }

std::string_view info_plural(InfoKind kind) {
    static constexpr std::array<std::string_view, 4> plural{"events", "norms", "goals", "desires"};
    return plural[static_cast<std::size_t>(kind)];
}

Predicate info_predicate(InfoKind kind, InfoLevel level) {
    return static_cast<Predicate>(kStructuralPredicateCount + static_cast<std::size_t>(kind) * kInfoLevelCount +
                                  static_cast<std::size_t>(level));
}

std::optional<InfoParts> info_parts(Predicate pred) {
    const auto index = static_cast<std::size_t>(pred);
    if (index < kStructuralPredicateCount) return std::nullopt;
    const std::size_t offset = index - kStructuralPredicateCount;
    return InfoParts{static_cast<InfoKind>(offset / kInfoLevelCount), static_cast<InfoLevel>(offset % kInfoLevelCount)};
}

const PredicateInfo& predicate_info(Predicate pred) { return table().info[static_cast<std::size_t>(pred)]; }

std::string_view predicate_name(Predicate pred) { return predicate_info(pred).name; }

std::optional<Predicate> predicate_from_name(std::string_view name) {
    const Table& t = table();
    for (std::size_t i = 0; i < kPredicateCount; ++i) {
        if (t.info[i].name == name) return static_cast<Predicate>(i);
    }
    return std::nullopt;
}

std::size_t predicate_index(Predicate pred) { return static_cast<std::size_t>(pred); }

Predicate predicate_at(std::size_t index) { return static_cast<Predicate>(index); }

}  // namespace sck
