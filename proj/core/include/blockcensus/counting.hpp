#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcensus/constraints.hpp"
#include "blockcensus/instance.hpp"

namespace blockcensus {

/// How the central character under the block is treated. Exact counts exist
/// only in trivial mode; symbolic mode carries declared bounds and defers to
/// the constraint engine.
struct LambdaContext {
    enum class Mode { trivial, symbolic };
    Mode mode = Mode::trivial;
    std::optional<u64> declared_irr_count;  // e.g. an l(B) target
};

/// The pair (k, l) for a block of the affine group V x| K with normal Sylow
/// subgroup V, plus the per-orbit contributions the count decomposes into.
struct BlockCount {
    u64 k = 0;
    u64 l = 0;
    std::vector<std::pair<Vec, u64>> contributions;  // (orbit rep on the dual side, stabilizer class count)
};

/// Exact character count in trivial mode: k is the sum over dual-orbit
/// representatives of the class count of the representative's stabilizer,
/// and l is the class count of the whole complement. Valid because the
/// normal subgroup is abelian of coprime order, so every invariant character
/// of it extends to its stabilizer. Throws SymbolicModeError in symbolic
/// mode and propagates CapExceededError from enumeration.
BlockCount count_block(const InstanceRecord& inst, const LambdaContext& ctx,
                       u64 cap = kDefaultElementCap);

/// Independent oracle: builds the affine group {v -> v*g + t} as
/// permutations of V, enumerates it, and counts conjugacy classes directly.
/// Requires p^d * |K| <= cap (CapExceededError) and p not dividing |K|
/// (InvalidInstanceError).
u64 brute_force_k(const InstanceRecord& inst, u64 cap = 100000);

/// Bundled character degree lists; validated against sum-of-squares = order
/// and size = class count.
struct DegreeTable {
    std::string group_tag;
    std::vector<u32> degrees;
};

const DegreeTable& sl23_degree_table();
const DegreeTable& sl25_degree_table();

bool degree_table_valid(const DegreeTable& table, u64 order, u64 classes);

/// Number of distinct degrees in the table. After an extension of the
/// invariant character, characters of distinct degrees lie in distinct
/// orbits, so this bounds the character count above from below.
u64 gallagher_min_count(const DegreeTable& table, bool quotient_cyclic);

/// Compares the orbit size multisets of the point and dual actions.
Verdict orbit_correspondence_check(const InstanceRecord& inst);

}  // namespace blockcensus
