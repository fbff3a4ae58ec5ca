#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace sck {

enum class Sort : std::uint8_t {
    AbstractContext,
    InstanceContext,
    Role,
    Player,
    Interval,
    Location,
    Event,
    Norm,
    Goal,
    Desire,
};

inline constexpr std::size_t kSortCount = 10;

/// DSL keyword for a sort ("abstract_context", "event", ...). Intervals have
/// no declaration keyword and render as "interval".
std::string_view sort_keyword(Sort sort);
std::optional<Sort> sort_from_keyword(std::string_view keyword);
bool is_info_item(Sort sort);
bool is_context(Sort sort);

using SortMask = std::uint16_t;

constexpr SortMask mask_of(Sort sort) { return static_cast<SortMask>(1u << static_cast<unsigned>(sort)); }
constexpr bool mask_has(SortMask mask, Sort sort) { return (mask & mask_of(sort)) != 0; }

inline constexpr SortMask kAnyContext = mask_of(Sort::AbstractContext) | mask_of(Sort::InstanceContext);

/// The four kinds of intrinsic information (the X in hasX).
enum class InfoKind : std::uint8_t { Event, Norm, Goal, Desire };

inline constexpr std::array<InfoKind, 4> kInfoKinds{InfoKind::Event, InfoKind::Norm, InfoKind::Goal,
                                                    InfoKind::Desire};

Sort sort_of(InfoKind kind);
char info_letter(InfoKind kind);
std::string_view info_plural(InfoKind kind);  // "events", "norms", ...

/// Granularity of an intrinsic-information fact, from context down to a
/// pair of players.
enum class InfoLevel : std::uint8_t {
    Context,        // hasX_c(ctx, x)
    Role,           // hasX_r(r, x)
    CoRole,         // hasX_cor(r1, r2, x)
    RoleContext,    // hasX_rc(r, ctx, x)
    CoRoleContext,  // hasX_corc(r1, r2, ctx, x)
    Player,         // hasX_p(p, r, ic, x, t)
    CoPlayer,       // hasX_cop(p1, p2, r1, r2, ic, x, t)
};

inline constexpr std::size_t kInfoLevelCount = 7;

enum class Predicate : std::uint8_t {
    InsC,
    HasR,
    HasCoR,
    Play,
    CoPlay,
    IsAC,
    IsAR,
    HasL,
    HasT,
    ContainsL,
    EIC,
    REIC,
    ESC,
    RESC,
    FirstInfo,  // followed by 4 kinds x 7 levels
};

inline constexpr std::size_t kStructuralPredicateCount = static_cast<std::size_t>(Predicate::FirstInfo);
inline constexpr std::size_t kPredicateCount = kStructuralPredicateCount + 4 * kInfoLevelCount;
inline constexpr std::size_t kMaxArity = 7;

Predicate info_predicate(InfoKind kind, InfoLevel level);

struct InfoParts {
    InfoKind kind;
    InfoLevel level;
};
std::optional<InfoParts> info_parts(Predicate pred);

struct PredicateInfo {
    std::string_view name;
    std::uint8_t arity = 0;
    std::array<SortMask, kMaxArity> signature{};
    // Axiom whose domain restriction the signature encodes.
    std::string_view axiom_ref;
    // Argument position holding the validity interval, if the predicate is
    // downward closed in time (play and coPlay only).
    std::optional<std::uint8_t> enduring_interval;
};

const PredicateInfo& predicate_info(Predicate pred);
std::string_view predicate_name(Predicate pred);
std::optional<Predicate> predicate_from_name(std::string_view name);
std::size_t predicate_index(Predicate pred);
Predicate predicate_at(std::size_t index);

}  // namespace sck
