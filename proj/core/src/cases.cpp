#include "blockcensus/cases.hpp"

#include <algorithm>
#include <sstream>

namespace blockcensus {

std::string to_string(CaseConclusion c) {
    switch (c) {
        case CaseConclusion::excluded: return "excluded";
        case CaseConclusion::surviving: return "surviving";
        case CaseConclusion::data_missing: return "data-missing";
    }
    return "?";
}

const Verdict* CaseResult::first_contradiction() const {
    for (const Verdict& v : verdicts)
        if (v.status == VerdictStatus::contradiction) return &v;
    return nullptr;
}

CaseResult verify_rank3_p2(u32 p) {
    if (p < 5 || !is_prime(p)) throw InvalidParamsError("verify_rank3_p2 needs p >= 5 prime");
    CaseResult res;
    res.case_id = "P4.5/p=" + std::to_string(p);

    const u64 q1 = (u64)p * p - 1;
    if (q1 % 3 != 0) {
        // class equation p^2 - 1 = (3/2)|K:Z| has no integral solution
        res.verdicts.push_back(Verdict::bad("class-equation", "p^2-1 = " + std::to_string(q1) + " not divisible by 3"));
        res.conclusion = CaseConclusion::excluded;
        return res;
    }
    const u64 kz = 2 * q1 / 3;
    res.verdicts.push_back(Verdict::ok("class-equation", "|K:Z| = " + std::to_string(kz)));

    // branch 1: solvable two-character constraint on |K:Z|
    Verdict higgs = higgs_check(kz);
    const bool branch1 = higgs.status == VerdictStatus::contradiction;
    res.verdicts.push_back(std::move(higgs));

    // branch 2: two-space imprimitive order 2(p-1)^2 against the class equation
    const u64 impr = 2 * (u64)(p - 1) * (p - 1);
    const bool branch2 = impr != kz;
    if (branch2) {
        res.verdicts.push_back(Verdict::bad(
            "imprimitive-order", "2(p-1)^2 = " + std::to_string(impr) + " != " + std::to_string(kz)));
    } else {
        res.verdicts.push_back(Verdict::ok("imprimitive-order"));
    }

    res.conclusion = (branch1 && branch2) ? CaseConclusion::excluded : CaseConclusion::surviving;
    return res;
}

namespace {

std::string vec_label(const Vec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.coords.size(); ++i) out << (i ? "," : "") << v.coords[i];
    out << ")";
    return out.str();
}

}  // namespace

CaseResult verify_exceptional(const InstanceRecord& inst, u64 cap) {
    CaseResult res;
    const std::string label = inst.label.empty() ? "instance" : inst.label;
    const u64 degree = pow_u64(inst.p, inst.d);

    const GroupHandle handle = instance_group(inst);
    const OrbitDecomposition dual = orbit_decomposition(handle, ActionSide::dual);
    const u32 rank = dual.rank;

    const std::string* key = inst.meta_value("database_key");
    res.case_id = std::string(rank == 3 ? "P4.8/" : "P4.9/") + (key ? *key : label);

    if (degree != 625 && degree != 343 && degree != 2401) {
        res.conclusion = CaseConclusion::data_missing;
        res.note = "out-of-family degree " + std::to_string(degree);
        res.verdicts.push_back(Verdict::na("family", res.note));
        return res;
    }
    if (rank != 3 && rank != 4) {
        res.conclusion = CaseConclusion::data_missing;
        res.note = "rank " + std::to_string(rank) + " outside {3,4}";
        res.verdicts.push_back(Verdict::na("family", res.note));
        return res;
    }

    const u64 order = group_order(handle);
    const u64 l_budget = rank == 3 ? 3 : 2;  // characters left for the zero orbit

    // (a) stabilizer orders of the nontrivial dual orbits
    {
        bool hit = false;
        for (const Orbit& o : dual.orbits) {
            if (vec_to_index(o.rep) == 0) continue;
            const u64 stab = order / o.size;
            if (rank == 4) {
                if (!is_square(stab)) {
                    res.verdicts.push_back(Verdict::bad(
                        "a/stab-square", "stab " + std::to_string(stab) + " of orbit " + vec_label(o.rep) +
                                             " not a square"));
                    hit = true;
                    break;
                }
            } else {
                bool bad = false;
                u64 bad_q = 0;
                u64 rest = stab;
                while (rest % 2 == 0) rest /= 2;
                for (u64 q = 3; q * q <= rest && !bad; q += 2) {
                    if (rest % q == 0 && !is_square(q_part(stab, q))) {
                        bad = true;
                        bad_q = q;
                    }
                    while (rest % q == 0) rest /= q;
                }
                if (!bad && rest > 2 && !is_square(q_part(stab, rest))) {
                    bad = true;
                    bad_q = rest;
                }
                if (bad) {
                    res.verdicts.push_back(Verdict::bad(
                        "a/stab-odd-part", std::to_string(bad_q) + "-part of stab " + std::to_string(stab) +
                                               " of orbit " + vec_label(o.rep) + " not a square"));
                    hit = true;
                    break;
                }
            }
        }
        if (hit) {
            res.conclusion = CaseConclusion::excluded;
            return res;
        }
        res.verdicts.push_back(Verdict::ok("a/stab-parts"));
    }

    // (b) rank 3: one of the two nontrivial orbits must be fully ramified
    if (rank == 3) {
        bool any_square = false;
        std::string stabs;
        for (const Orbit& o : dual.orbits) {
            if (vec_to_index(o.rep) == 0) continue;
            const u64 stab = order / o.size;
            if (is_square(stab)) any_square = true;
            stabs += (stabs.empty() ? "" : ",") + std::to_string(stab);
        }
        if (!any_square) {
            res.verdicts.push_back(Verdict::bad("b/no-square-stab", "stabilizer orders " + stabs + " all non-square"));
            res.conclusion = CaseConclusion::excluded;
            return res;
        }
        res.verdicts.push_back(Verdict::ok("b/square-stab"));
    }

    // rules (c)-(f) need the element list
    std::vector<Mat> elements;
    bool enumerable = true;
    try {
        elements = enumerate_elements(handle, cap);
    } catch (const CapExceededError& e) {
        enumerable = false;
        res.verdicts.push_back(Verdict::na("c-f/enumeration", std::string("enumeration refused: ") + e.what()));
    }

    if (enumerable) {
        const StructureProfile profile = structure_profile(elements);

        // (c) extension whitelist forces l = class count of the complement
        if (schur_multiplier_whitelist(profile)) {
            const u64 classes = class_count(elements);
            if (classes > l_budget) {
                res.verdicts.push_back(Verdict::bad(
                    "c/extension-count", "all Sylow subgroups on the extension whitelist and " +
                                             std::to_string(classes) + " classes > " + std::to_string(l_budget)));
                res.conclusion = CaseConclusion::excluded;
                return res;
            }
            res.verdicts.push_back(Verdict::ok("c/extension-count"));
        } else {
            res.verdicts.push_back(Verdict::ok("c/extension-count", "whitelist not applicable"));
        }

        // (d) normal cyclic subgroup of order > 12 with index 4
        {
            bool hit = false;
            for (const auto& sub : normal_subgroup_scan(elements)) {
                if (sub.size() > 12 && order / sub.size() == 4) {
                    res.verdicts.push_back(Verdict::bad(
                        "d/cyclic-index4", "normal cyclic subgroup of order " + std::to_string(sub.size()) +
                                               " and index 4 forces more than 3 characters"));
                    hit = true;
                    break;
                }
            }
            if (hit) {
                res.conclusion = CaseConclusion::excluded;
                return res;
            }
            res.verdicts.push_back(Verdict::ok("d/cyclic-index4"));
        }
    }

    // (e) rank 4: two orbits forcing two characters each leave none for the rest
    if (rank == 4) {
        u32 nonsquare = 0;
        for (const Orbit& o : dual.orbits) {
            if (vec_to_index(o.rep) == 0) continue;
            if (!is_square(order / o.size)) ++nonsquare;
        }
        if (nonsquare >= 2) {
            res.verdicts.push_back(Verdict::bad(
                "e/two-ramification-failures", std::to_string(nonsquare) + " nontrivial orbits force two characters each"));
            res.conclusion = CaseConclusion::excluded;
            return res;
        }
        res.verdicts.push_back(Verdict::ok("e/two-ramification-failures"));
    }

    // (f) central Sylow 3 of order 3 forces a square 5-part
    if (enumerable && q_part(order, 3) == 3) {
        bool central3 = false;
        for (const Mat& x : elements) {
            if (detail::element_order(x, order) != 3) continue;
            bool central = true;
            for (const Mat& g : handle.generators()) {
                if (mat_mul(x, g) != mat_mul(g, x)) {
                    central = false;
                    break;
                }
            }
            if (central) {
                central3 = true;
                break;
            }
        }
        if (central3 && !is_square(q_part(order, 5))) {
            res.verdicts.push_back(Verdict::bad(
                "f/central-3", "central Sylow 3 of order 3 with 5-part " + std::to_string(q_part(order, 5)) +
                                   " not a square"));
            res.conclusion = CaseConclusion::excluded;
            return res;
        }
        res.verdicts.push_back(Verdict::ok("f/central-3"));
    }

    res.conclusion = CaseConclusion::surviving;
    res.note = "no battery rule reached a contradiction";
    return res;
}

CaseResult verify_passman_case(const InstanceRecord& inst, u64 cap) {
    if (inst.d != 2) throw InvalidParamsError("verify_passman_case needs d = 2");
    CaseResult res;
    res.case_id = "P4.4/" + (inst.label.empty() ? std::string("instance") : inst.label);

    const GroupHandle handle = instance_group(inst);
    const std::vector<Mat> elements = enumerate_elements(handle, cap);
    const u64 order = elements.size();

    // normal subgroups obtainable as normal closures of single elements,
    // fingerprinted against SL(2,3) and SL(2,5)
    const std::vector<std::vector<Mat>> normals = normal_subgroup_scan(elements, {24, 120});
    const std::vector<Mat>* sl23 = nullptr;
    const std::vector<Mat>* sl25 = nullptr;
    for (const auto& sub : normals) {
        if (sub.size() == 24 && !sl23 && GroupFingerprint::sl23().matches(structure_profile(sub))) sl23 = &sub;
        if (sub.size() == 120 && !sl25 && GroupFingerprint::sl25().matches(structure_profile(sub))) sl25 = &sub;
    }

    if (sl25) {
        const u64 min_count = gallagher_min_count(sl25_degree_table(), false);
        res.verdicts.push_back(Verdict::bad(
            "sl25-degrees", std::to_string(min_count) + " distinct degrees force at least " +
                                std::to_string(min_count) + " characters > 4"));
        res.conclusion = CaseConclusion::excluded;
        return res;
    }
    if (!sl23) throw NoNormalSLFoundError("no normal subgroup with the SL(2,3) or SL(2,5) fingerprint");

    const u64 quot = order / 24;
    if (quot == 1) {
        const u64 classes = class_count(*sl23);
        res.verdicts.push_back(Verdict::bad(
            "sl23-whole-group", std::to_string(classes) + " characters over the invariant character > 4"));
        res.conclusion = CaseConclusion::excluded;
        return res;
    }

    // cyclic quotient test: some coset has order |K/N|
    bool cyclic = false;
    {
        std::vector<Mat> nset = *sl23;
        auto in_n = [&](const Mat& m) {
            return std::find(nset.begin(), nset.end(), m) != nset.end();
        };
        for (const Mat& x : elements) {
            u64 e = 1;
            Mat pw = x;
            while (!in_n(pw)) {
                pw = mat_mul(pw, x);
                ++e;
            }
            if (e == quot) {
                cyclic = true;
                break;
            }
        }
    }

    if (cyclic) {
        res.verdicts.push_back(Verdict::bad(
            "sl23-cyclic-quotient",
            "cyclic quotient of order " + std::to_string(quot) +
                " forces index 2 and then more than 4 characters over the invariant character"));
        res.conclusion = CaseConclusion::excluded;
        return res;
    }
    if (quot % 2 == 0 && quot / 2 > 2 && is_prime(quot / 2)) {
        res.verdicts.push_back(Verdict::bad(
            "sl23-2q-quotient", "index 2*" + std::to_string(quot / 2) +
                                    " forces the degree-3 character fully ramified in a cyclic Sylow extension"));
        res.conclusion = CaseConclusion::excluded;
        return res;
    }

    res.conclusion = CaseConclusion::surviving;
    res.note = "quotient of order " + std::to_string(quot) + " outside the case table";
    return res;
}

CaseResult verify_imprimitive(u32 p, u32 m, u32 rank, u32 blocks) {
    if (p < 5 || !is_prime(p)) throw InvalidParamsError("verify_imprimitive needs p >= 5 prime");
    if (m < 1) throw InvalidParamsError("verify_imprimitive needs m >= 1");
    if (rank == 3 && blocks != 2) throw InvalidParamsError("rank 3 imprimitive cases have 2 blocks");
    if (rank == 4 && blocks != 2 && blocks != 3) throw InvalidParamsError("rank 4 needs 2 or 3 blocks");
    if (rank != 3 && rank != 4) throw InvalidParamsError("rank must be 3 or 4");

    CaseResult res;
    const std::string suffix = "/p=" + std::to_string(p) + ",m=" + std::to_string(m);
    const u64 pm1 = pow_u64(p, m) - 1;

    if (rank == 3) {
        res.case_id = "P4.10" + suffix;
        // orbit sizes 1, 2(p^m-1), (p^m-1)^2; the beta branch uses the orbit
        // size (p^m-1)^2 for the index
        res.note = "beta branch index taken from the orbit size (p^m-1)^2";
        if (m == 1) {
            // two blocks of prime size: the order 2(p-1)^2 must meet the
            // rank-3 class equation on p^2 points
            const u64 impr = 2 * (u64)(p - 1) * (p - 1);
            const u64 kz = 2 * ((u64)p * p - 1) / 3;
            res.verdicts.push_back(Verdict::bad(
                "order-vs-class-equation",
                "2(p-1)^2 = " + std::to_string(impr) + " != " + std::to_string(kz) + " = (2/3)(p^2-1)"));
            res.conclusion = CaseConclusion::excluded;
            return res;
        }
        Verdict alpha = mordell_check(p, m);
        alpha.check_id = "alpha-ramified/" + alpha.check_id;
        const bool a_bad = alpha.status == VerdictStatus::contradiction;
        res.verdicts.push_back(std::move(alpha));
        res.verdicts.push_back(Verdict::bad(
            "beta-ramified", "index 2(|A:Z|/(p^m-1))^2 is twice a square, never a square"));
        res.conclusion = a_bad ? CaseConclusion::excluded : CaseConclusion::surviving;
        return res;
    }

    if (blocks == 3) {
        res.case_id = "P4.12" + suffix;
        // |K:Z| = 2b^2 against the orbit of size 3(p^m-1)^2
        u32 c = 0;
        u64 t = pm1;
        while (t % 3 == 0) {
            t /= 3;
            ++c;
        }
        res.verdicts.push_back(Verdict::bad(
            "three-part", "3-part of 2b^2/(3(p^m-1)^2) has odd valuation 2a-" + std::to_string(2 * c + 1) +
                              " for every b"));
        res.conclusion = CaseConclusion::excluded;
        return res;
    }

    res.case_id = "P4.11" + suffix;
    res.verdicts.push_back(Verdict::bad(
        "semilinear-factor", "abelian odd Sylow subgroup of the base forces more than 2 characters"));
    res.verdicts.push_back(Verdict::bad(
        "table-factor", "normal SL(2,3) in each factor yields 3 distinct degrees above the invariant character"));
    res.conclusion = CaseConclusion::excluded;
    return res;
}

std::string ExceptionalCaseKey::degree_label() const {
    return std::to_string(p) + "^" + std::to_string(d);
}

std::string ExceptionalCaseKey::database_key() const {
    return degree_label() + ":" + std::to_string(index);
}

std::string ExceptionalCaseKey::case_id() const {
    return std::string(rank == 3 ? "P4.8/" : "P4.9/") + database_key();
}

const std::vector<ExceptionalCaseKey>& expected_exceptional_cases() {
    static const std::vector<ExceptionalCaseKey> cases = [] {
        std::vector<ExceptionalCaseKey> v;
        const u32 r3_5_4[] = {207, 210, 218, 219, 220, 221, 222, 223, 224, 225, 328, 329, 330, 331,
                              332, 333, 334, 410, 411, 412, 413, 417, 418, 419, 434, 435, 436, 446,
                              487, 490, 492, 494, 496, 503, 520};
        const u32 r3_7_4[] = {721, 723, 774, 775, 783, 785, 789, 797, 800,  802,  805,  843, 844,
                              847, 849, 850, 851, 852, 855, 869, 873, 876,  877,  878,  879, 880,
                              885, 886, 890, 891, 894, 962, 964, 965, 992, 1015, 1039, 1049};
        const u32 r4_5_4[] = {209, 216, 217, 284, 285, 286, 287, 288, 289, 290, 291, 292, 293,
                              323, 324, 325, 326, 327, 337, 338, 339, 340, 341, 343, 345, 404,
                              414, 416, 424, 425, 426, 442, 443, 444, 445, 460, 461, 463, 466,
                              484, 511, 518, 519, 527, 528, 529, 532, 533, 538, 541};
        const u32 r4_7_4[] = {634, 638, 665, 666, 674, 675, 691, 709, 710, 736, 737, 738,
                              740, 755, 757, 782, 786, 787, 788, 790, 793, 803, 820, 822,
                              823, 825, 828, 845, 846, 848, 867, 868, 870, 871, 875, 892};
        const u32 r4_7_3[] = {45, 60, 61, 70, 72, 75, 78, 84, 85};
        for (u32 i : r3_5_4) v.push_back({5, 4, i, 3});
        for (u32 i : r3_7_4) v.push_back({7, 4, i, 3});
        for (u32 i : r4_5_4) v.push_back({5, 4, i, 4});
        for (u32 i : r4_7_4) v.push_back({7, 4, i, 4});
        for (u32 i : r4_7_3) v.push_back({7, 3, i, 4});
        return v;
    }();
    return cases;
}

ReducedVerdict theorem_reduced_verdict(const ScanReport& scan, const std::vector<CaseResult>& results) {
    bool have_rank3_p2 = false, have_imprimitive = false, have_exceptional = false;
    bool conditional = false;
    for (const CaseResult& r : results) {
        if (r.case_id.rfind("P4.5/", 0) == 0) have_rank3_p2 = true;
        if (r.case_id.rfind("P4.10/", 0) == 0 || r.case_id.rfind("P4.11/", 0) == 0 ||
            r.case_id.rfind("P4.12/", 0) == 0)
            have_imprimitive = true;
        if (r.case_id.rfind("P4.8/", 0) == 0 || r.case_id.rfind("P4.9/", 0) == 0) have_exceptional = true;
        if (r.conclusion == CaseConclusion::data_missing) conditional = true;
        if (r.conclusion == CaseConclusion::surviving)
            throw Error("case " + r.case_id + " reports a survivor");
    }
    if (!have_rank3_p2) throw IncompleteRunError("rank-3 p^2 family missing from the run");
    if (!have_imprimitive) throw IncompleteRunError("imprimitive family missing from the run");
    if (!have_exceptional) throw IncompleteRunError("exceptional family missing from the run");

    ReducedVerdict verdict;
    verdict.conditional = conditional;
    for (const ScanCell& cell : scan.cells) {
        if (!cell.survives()) continue;
        if (cell.forces_l1_subsections) continue;  // contradicts the rank-3/4 subsection rule (P4.1)
        verdict.survivor_pds.emplace_back(cell.p, cell.d);
    }
    std::sort(verdict.survivor_pds.begin(), verdict.survivor_pds.end());
    if (verdict.survivor_pds != std::vector<std::pair<u32, u32>>{{5, 1}, {7, 1}})
        throw Error("affine survivor set differs from {(5,1), (7,1)}");
    verdict.entry = classify_kb(scan.k_target);
    return verdict;
}

}  // namespace blockcensus
