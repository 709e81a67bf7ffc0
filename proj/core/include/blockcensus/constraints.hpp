#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcensus/matgroup.hpp"

namespace blockcensus {

enum class VerdictStatus { consistent, contradiction, inapplicable };

std::string to_string(VerdictStatus s);

/// Outcome of a single constraint check. Contradictions always carry a
/// witness.
struct Verdict {
    std::string check_id;
    VerdictStatus status = VerdictStatus::inapplicable;
    std::string witness;
    std::vector<u64> payload;

    static Verdict ok(std::string id, std::string witness = {});
    static Verdict bad(std::string id, std::string witness);
    static Verdict na(std::string id, std::string witness = {});
};

/// Largest power of the prime q dividing n.
u64 q_part(u64 n, u64 q);

bool is_square(u64 n);

/// True exactly for n = 2^e with e odd.
bool is_odd_power_of_two(u64 n);

/// Constraint on an index carrying exactly two characters over an invariant
/// linear character: every odd q-part must be a square and the 2-part an odd
/// power of 2. Equivalently, consistent iff n = 2^(2a+1) * (odd square).
Verdict higgs_check(u64 index);

/// Constraint on an index carrying exactly one character over an invariant
/// linear character: the index must be a perfect square, and (when a profile
/// of the quotient is available) no nontrivial Sylow subgroup may be cyclic.
Verdict fully_ramified_check(u64 index, const StructureProfile* profile = nullptr);

/// Direct integer test that p^m - 1 is not a perfect square (m >= 2); the
/// contradiction verdict refutes any branch that forces it to be one.
/// Throws InvalidParamsError for m = 1, where p - 1 may genuinely be square.
Verdict mordell_check(u64 p, u32 m);

struct DefectGroupDesc {
    u64 order = 0;
    std::string tag;

    friend bool operator==(const DefectGroupDesc&, const DefectGroupDesc&) = default;
    friend auto operator<=>(const DefectGroupDesc& a, const DefectGroupDesc& b) {
        if (auto c = a.order <=> b.order; c != 0) return c;
        return a.tag <=> b.tag;
    }
};

/// A row of the character-count classification table: the defect groups
/// compatible with k ordinary characters (optionally refined by l).
struct ClassificationEntry {
    u32 k = 0;
    std::optional<u32> l;
    std::vector<DefectGroupDesc> defect_groups;  // sorted by (order, tag)
};

/// Exact table lookup for 1 <= k <= 5; the l = 1 refinement applies at
/// k = 5. Throws OutOfTableError for k > 5.
ClassificationEntry classify_kb(u32 k, std::optional<u32> l = {});

/// Distinguishes the five groups of order 8 from a structure profile:
/// "Q8", "D8", "abelian-C8", "abelian-C4xC2" or "abelian-C2xC2xC2".
std::string classify_group8(const StructureProfile& profile);

/// Whitelist for the extension flag: every Sylow subgroup cyclic or (for the
/// prime 2) generalized quaternion, detected via the unique involution.
bool schur_multiplier_whitelist(const StructureProfile& profile);

}  // namespace blockcensus
