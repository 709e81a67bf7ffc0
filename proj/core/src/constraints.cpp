#include "blockcensus/constraints.hpp"

#include <cmath>

namespace blockcensus {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::consistent: return "consistent";
        case VerdictStatus::contradiction: return "contradiction";
        case VerdictStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

Verdict Verdict::ok(std::string id, std::string witness) {
    return Verdict{std::move(id), VerdictStatus::consistent, std::move(witness), {}};
}

Verdict Verdict::bad(std::string id, std::string witness) {
    if (witness.empty()) throw InvalidParamsError("contradiction verdicts require a witness");
    return Verdict{std::move(id), VerdictStatus::contradiction, std::move(witness), {}};
}

Verdict Verdict::na(std::string id, std::string witness) {
    return Verdict{std::move(id), VerdictStatus::inapplicable, std::move(witness), {}};
}

u64 q_part(u64 n, u64 q) {
    if (n < 1) throw InvalidParamsError("q_part needs n >= 1");
    if (!is_prime(q)) throw InvalidParamsError("q_part needs q prime");
    u64 part = 1;
    while (n % q == 0) {
        n /= q;
        part *= q;
    }
    return part;
}

bool is_square(u64 n) {
    const u64 r = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(n))));
    for (u64 c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c)
        if (c * c == n) return true;
    return false;
}

bool is_odd_power_of_two(u64 n) {
    if (n == 0 || (n & (n - 1)) != 0) return false;  // not a power of two
    u32 e = 0;
    while (n > 1) {
        n >>= 1;
        ++e;
    }
    return e % 2 == 1;
}

namespace {

std::vector<u64> odd_prime_divisors(u64 n) {
    while (n % 2 == 0) n /= 2;
    std::vector<u64> ps;
    for (u64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 2) ps.push_back(n);
    return ps;
}

}  // namespace

Verdict higgs_check(u64 index) {
    if (index < 1) throw InvalidParamsError("higgs_check needs index >= 1");
    const std::string id = "higgs:" + std::to_string(index);
    for (u64 q : odd_prime_divisors(index)) {
        const u64 qp = q_part(index, q);
        if (!is_square(qp)) {
            Verdict v = Verdict::bad(id, std::to_string(q) + "-part " + std::to_string(qp) + " not a square");
            v.payload = {q, qp};
            return v;
        }
    }
    const u64 two = q_part(index, 2);
    if (!is_odd_power_of_two(two)) {
        Verdict v = Verdict::bad(id, "2-part " + std::to_string(two) + " not an odd power of 2");
        v.payload = {2, two};
        return v;
    }
    return Verdict::ok(id);
}

Verdict fully_ramified_check(u64 index, const StructureProfile* profile) {
    if (index < 1) throw InvalidParamsError("fully_ramified_check needs index >= 1");
    const std::string id = "fully-ramified:" + std::to_string(index);
    if (!is_square(index)) {
        Verdict v = Verdict::bad(id, std::to_string(index) + " not a square");
        v.payload = {index};
        return v;
    }
    if (profile) {
        for (const auto& [q, info] : profile->sylow) {
            if (info.order > 1 && info.cyclic) {
                Verdict v = Verdict::bad(id, "cyclic Sylow " + std::to_string(q) + "-subgroup of order " +
                                                 std::to_string(info.order));
                v.payload = {q, info.order};
                return v;
            }
        }
    }
    return Verdict::ok(id);
}

Verdict mordell_check(u64 p, u32 m) {
    if (m < 2) throw InvalidParamsError("mordell_check needs m >= 2");
    if (p < 5 || !is_prime(p)) throw InvalidParamsError("mordell_check needs p >= 5 prime");
    u64 n = 1;
    for (u32 i = 0; i < m; ++i) n *= p;
    n -= 1;
    const std::string id = "mordell:" + std::to_string(p) + "^" + std::to_string(m);
    if (is_square(n)) return Verdict::ok(id, std::to_string(n) + " is a square");
    Verdict v = Verdict::bad(id, std::to_string(n) + " not a square");
    v.payload = {n};
    return v;
}

ClassificationEntry classify_kb(u32 k, std::optional<u32> l) {
    if (k < 1) throw InvalidParamsError("classify_kb needs k >= 1");
    if (k > 5) throw OutOfTableError("no classification table row for k = " + std::to_string(k));
    ClassificationEntry e;
    e.k = k;
    e.l = l;
    switch (k) {
        case 1: e.defect_groups = {{1, "C1"}}; break;
        case 2: e.defect_groups = {{2, "C2"}}; break;
        case 3: e.defect_groups = {{3, "C3"}}; break;
        case 4: e.defect_groups = {{4, "C2xC2"}, {4, "C4"}, {5, "C5"}}; break;
        case 5:
            if (l && *l == 1)
                e.defect_groups = {{5, "C5"}, {8, "D8"}, {8, "Q8"}};
            else
                e.defect_groups = {{5, "C5"}, {7, "C7"}, {8, "D8"}, {8, "Q8"}};
            break;
    }
    return e;
}

std::string classify_group8(const StructureProfile& profile) {
    if (profile.order != 8) throw InvalidOrderError("classify_group8 needs order 8");
    if (profile.abelian) {
        if (profile.order_multiset.count(8)) return "abelian-C8";
        if (profile.order_multiset.count(4)) return "abelian-C4xC2";
        return "abelian-C2xC2xC2";
    }
    return profile.unique_involution ? "Q8" : "D8";
}

bool schur_multiplier_whitelist(const StructureProfile& profile) {
    for (const auto& [q, info] : profile.sylow) {
        if (info.order == 1 || info.cyclic) continue;
        if (q == 2 && profile.unique_involution) continue;  // cyclic or generalized quaternion
        return false;
    }
    return true;
}

}  // namespace blockcensus
