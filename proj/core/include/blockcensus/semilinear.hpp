#pragma once

#include <string>
#include <vector>

#include "blockcensus/matgroup.hpp"

namespace blockcensus {

enum class GammaKind { full, gamma0 };

/// The semilinear group of F_{p^k} as an explicit subgroup of GL(k,p):
/// multiplication by a fixed primitive element together with (for the full
/// group) the Frobenius. Order k(p^k - 1), or p^k - 1 for the
/// multiplication-only subgroup.
GroupHandle gamma_group(u32 p, u32 k, GammaKind kind);

/// Parameters of a semilinear-subgroup situation: a cyclic subgroup of order
/// s dividing p^d - 1, field-automorphism index t dividing d, m nontrivial
/// orbits and l irreducible Brauer characters.
struct GammaParams {
    u32 p = 0, d = 0;
    u64 s = 0;
    u32 t = 0;
    u32 m = 0, l = 0;

    GammaParams() = default;
    GammaParams(u32 p, u32 d, u64 s, u32 t, u32 m, u32 l);

    friend bool operator==(const GammaParams&, const GammaParams&) = default;
};

struct ScanTuple {
    GammaParams params;
    int eliminated_stage = 0;  // 0 = survivor, 1 = order inequality, 2 = character-count bound
};

/// One (p, d) cell of the scan.
struct ScanCell {
    u32 p = 0, d = 0;
    std::vector<ScanTuple> tuples;       // every enumerated tuple, deterministic order
    std::vector<GammaParams> survivors;  // tuples passing both stages
    u64 max_stage1_value = 0;            // largest m*s*t seen (stage-1 witness)

    bool survives() const { return !survivors.empty(); }
    /// Every surviving tuple has m + l equal to the character-count target,
    /// which forces a single Brauer character on each nontrivial subsection.
    /// Only meaningful (and only set) for d = 2, where it contradicts the
    /// rank-3/4 subsection requirement (case rule P4.1).
    bool forces_l1_subsections = false;
    /// Stage-1 passers that stage 2 rejected, as (m, l) pairs (deduplicated).
    std::vector<std::pair<u32, u32>> stage2_rejections;
};

struct ScanReport {
    u32 k_target = 5;
    std::vector<ScanCell> cells;  // sorted by (d, p)

    std::vector<std::pair<u32, u32>> survivor_pds() const;
};

/// Enumerates all (p, d, m, l, s, t) with p >= 5 prime, s | p^d - 1, t | d,
/// s <= l*t, m in [1,3], l in [2,4]. Stage 1 keeps tuples with
/// p^d - 1 <= m*s*t; stage 2 keeps tuples with m + l <= k_target. The space
/// is finite since p^d - 1 <= m*l*d^2 bounds p for each d (d capped at 8).
ScanReport semilinear_scan(u32 k_target = 5);

}  // namespace blockcensus
