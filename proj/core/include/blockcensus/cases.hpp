#pragma once

#include <string>
#include <vector>

#include "blockcensus/counting.hpp"
#include "blockcensus/semilinear.hpp"

namespace blockcensus {

enum class CaseConclusion { excluded, surviving, data_missing };

std::string to_string(CaseConclusion c);

/// Replay of one case of the census. A case is excluded only on the strength
/// of at least one contradiction verdict, so every exclusion is self-auditing.
struct CaseResult {
    std::string case_id;
    std::vector<Verdict> verdicts;
    CaseConclusion conclusion = CaseConclusion::data_missing;
    std::string note;

    const Verdict* first_contradiction() const;
};

/// Rank-3 case on p^2 points with a solvable complement of order
/// (2/3)(p^2 - 1): the two-character constraint must hold on that order, and
/// the two-space imprimitive branch must meet the same class equation.
/// Both branches contradict for every p >= 5, matching the census.
CaseResult verify_rank3_p2(u32 p);

/// Battery for the exceptional degrees 5^4, 7^3, 7^4 at rank 3 or 4.
/// Rules run in a fixed order (a)-(f) with first-hit short-circuit:
///  (a) a nontrivial dual-orbit stabilizer order with a non-square odd
///      q-part (rank 3) or not a full square (rank 4),
///  (b) rank 3 with no square stabilizer order among the nontrivial orbits,
///  (c) all Sylow subgroups on the extension whitelist and class count above
///      the rank's character budget,
///  (d) a normal cyclic subgroup of order > 12 and index 4,
///  (e) rank 4 with two nontrivial orbits forcing two characters each,
///  (f) a central Sylow 3-subgroup of order 3 with a non-square 5-part.
CaseResult verify_exceptional(const InstanceRecord& inst, u64 cap = kDefaultElementCap);

/// Two-transitive d = 2 case: a normal subgroup with the SL(2,3) or SL(2,5)
/// fingerprint forces more characters than the census budget allows, for
/// every quotient shape the classification admits (trivial, cyclic, or twice
/// an odd prime). Throws NoNormalSLFoundError when no such subgroup exists.
CaseResult verify_passman_case(const InstanceRecord& inst, u64 cap = kDefaultElementCap);

/// Arithmetic replay of the imprimitive cases: rank 3 on two blocks (orbit
/// sizes 1, 2(p^m-1), (p^m-1)^2), rank 4 on two blocks (symbolic), and
/// rank 4 on three blocks (the orbit of size 3(p^m-1)^2).
CaseResult verify_imprimitive(u32 p, u32 m, u32 rank, u32 blocks);

/// Inventory of the exceptional-family cases the census expects generator
/// data for, keyed by (degree, database index).
struct ExceptionalCaseKey {
    u32 p = 0;
    u32 d = 0;
    u32 index = 0;
    u32 rank = 0;  // 3 or 4

    std::string degree_label() const;  // "5^4"
    std::string database_key() const;  // "5^4:487"
    std::string case_id() const;       // "P4.8/5^4:487"
};

const std::vector<ExceptionalCaseKey>& expected_exceptional_cases();

/// The assembled conclusion of a full census run.
struct ReducedVerdict {
    ClassificationEntry entry;                       // classify_kb(5)
    std::vector<std::pair<u32, u32>> survivor_pds;   // {(5,1), (7,1)}
    bool conditional = false;                        // some case family ran without data
};

/// Intersects the survivors of the parameter scan with the case families and
/// joins the result with the classification table. Throws IncompleteRunError
/// when a required family is absent from the results, and Error when a case
/// family reports a survivor or the survivor set differs from {5, 7}.
ReducedVerdict theorem_reduced_verdict(const ScanReport& scan, const std::vector<CaseResult>& results);

}  // namespace blockcensus
