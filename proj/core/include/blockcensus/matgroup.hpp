#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "blockcensus/field.hpp"

namespace blockcensus {

inline constexpr u64 kDefaultElementCap = 1u << 20;
/// Largest supported permutation domain (71^2, the biggest degree any of the
/// classified families reaches).
inline constexpr u64 kMaxDomain = 5041;

enum class ActionSide { points, dual };

/// A matrix group given by generators, together with its permutation images
/// on the point space V = F_p^d and on the dual space. Immutable after
/// construction; safe to share across threads.
class GroupHandle {
public:
    static GroupHandle from_generators(u32 p, u32 d, std::vector<Mat> generators);

    u32 p() const { return p_; }
    u32 d() const { return d_; }
    u64 domain() const { return domain_; }
    const std::vector<Mat>& generators() const { return gens_; }

    /// Permutation images of the generators, as index maps of size p^d.
    const std::vector<std::vector<u32>>& images(ActionSide side) const {
        return side == ActionSide::points ? point_images_ : dual_images_;
    }

private:
    GroupHandle() = default;
    u32 p_ = 0, d_ = 0;
    u64 domain_ = 0;
    std::vector<Mat> gens_;
    std::vector<std::vector<u32>> point_images_;
    std::vector<std::vector<u32>> dual_images_;
};

struct Orbit {
    Vec rep;   // lexicographically smallest member
    u64 size;
};

struct OrbitDecomposition {
    ActionSide side = ActionSide::points;
    std::vector<Orbit> orbits;  // sorted by representative, zero orbit first
    u32 rank = 0;               // number of orbits

    std::vector<u64> sizes() const;
    std::vector<u64> sorted_sizes() const;
};

OrbitDecomposition orbit_decomposition(const GroupHandle& g, ActionSide side);

/// Exact group order through a stabilizer chain on the point action.
/// Works well beyond the element-enumeration cap.
u64 group_order(const GroupHandle& g);

struct StabilizerRecord {
    Vec rep;
    u64 orbit_size = 0;
    u64 stab_order = 0;  // group_order / orbit_size
    std::vector<Mat> stab_generators;  // optional, may be empty
};

/// One record per orbit of the chosen action, in orbit order. When the full
/// element list is supplied, each record also carries generators of the
/// representative's stabilizer.
std::vector<StabilizerRecord> stabilizer_records(const GroupHandle& g, ActionSide side,
                                                 const std::vector<Mat>* elements = nullptr);

/// Full element list by closure, or CapExceededError (carrying the count
/// reached, a lower bound for the order) when the closure passes the cap.
std::vector<Mat> enumerate_elements(const GroupHandle& g, u64 cap = kDefaultElementCap);

/// Number of conjugacy classes of a closed element list.
/// Throws NotClosedError when the list is not a subgroup.
u64 class_count(const std::vector<Mat>& elements);

struct SylowInfo {
    u64 order = 1;
    bool cyclic = false;  // an element of full Sylow order exists
};

struct StructureProfile {
    u64 order = 0;
    std::map<u64, u64> order_multiset;  // element order -> count
    bool abelian = false;
    bool unique_involution = false;
    u64 derived_order = 1;
    std::map<u64, SylowInfo> sylow;  // prime -> info
};

StructureProfile structure_profile(const std::vector<Mat>& elements);

/// Partial fingerprint matched against a StructureProfile; unset fields
/// match anything.
struct GroupFingerprint {
    std::optional<std::map<u64, u64>> order_multiset;
    std::optional<u64> derived_order;
    std::optional<bool> unique_involution;

    bool matches(const StructureProfile& profile) const;

    static GroupFingerprint any();
    static GroupFingerprint q8();
    static GroupFingerprint d8();
    static GroupFingerprint sl23();
    static GroupFingerprint sl25();
};

/// Deterministic brute-force search for a subgroup of GL(d,p): generator
/// pairs are scanned in lexicographic matrix order and the first pair whose
/// closure has exactly target_order and matches the fingerprint wins.
/// Throws NotFoundError when no pair matches.
GroupHandle realize_small_group(u32 p, u32 d, u64 target_order, const GroupFingerprint& fp);

/// All normal cyclic subgroups <x>, plus (when order_filter is nonempty) any
/// normal closures of single elements whose order is in the filter.
/// Deduplicated; sorted by (size, elements).
std::vector<std::vector<Mat>> normal_subgroup_scan(const std::vector<Mat>& elements,
                                                   const std::vector<u64>& order_filter = {});

namespace detail {
/// Minimal generating subset discovered greedily from a closed element list.
/// Throws NotClosedError if the list is not a subgroup.
std::vector<Mat> greedy_generators(const std::vector<Mat>& elements);
u64 element_order(const Mat& m, u64 group_order_hint);
}  // namespace detail

}  // namespace blockcensus
