#include "blockcensus/semilinear.hpp"

#include <algorithm>

namespace blockcensus {

GroupHandle gamma_group(u32 p, u32 k, GammaKind kind) {
    if (p < 5) throw InvalidParamsError("gamma groups are built for p >= 5");
    if (k < 1 || k > 4) throw InvalidParamsError("extension degree must be in [1,4]");
    const FieldExt field = ext_field_build(p, k);
    std::vector<Mat> gens{field.multiplication_matrix()};
    if (kind == GammaKind::full && k > 1) gens.push_back(field.frobenius_matrix());
    return GroupHandle::from_generators(p, k, std::move(gens));
}

GammaParams::GammaParams(u32 p_in, u32 d_in, u64 s_in, u32 t_in, u32 m_in, u32 l_in)
    : p(p_in), d(d_in), s(s_in), t(t_in), m(m_in), l(l_in) {
    const u64 q = pow_u64(p, d);
    if (s == 0 || (q - 1) % s != 0) throw InvalidParamsError("s must divide p^d - 1");
    if (t == 0 || d % t != 0) throw InvalidParamsError("t must divide d");
    if (m < 1 || m > 3) throw InvalidParamsError("m must be in [1,3]");
    if (l < 2 || l > 4) throw InvalidParamsError("l must be in [2,4]");
}

std::vector<std::pair<u32, u32>> ScanReport::survivor_pds() const {
    std::vector<std::pair<u32, u32>> out;
    for (const ScanCell& c : cells)
        if (c.survives()) out.emplace_back(c.p, c.d);
    return out;
}

namespace {

std::vector<u64> divisors(u64 n) {
    std::vector<u64> ds;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace

ScanReport semilinear_scan(u32 k_target) {
    constexpr u32 kMaxM = 3, kMaxL = 4, kDimCap = 8;

    ScanReport report;
    report.k_target = k_target;

    for (u32 d = 1; d <= kDimCap; ++d) {
        // p^d - 1 <= m*l*d^2 makes the prime range finite for each dimension
        const u64 bound = (u64)kMaxM * kMaxL * d * d + 1;
        for (u32 p = 5;; ++p) {
            if (pow_u64(p, d) > bound) break;
            if (!is_prime(p)) continue;

            ScanCell cell;
            cell.p = p;
            cell.d = d;
            const u64 q1 = pow_u64(p, d) - 1;
            const std::vector<u64> s_divs = divisors(q1);
            const std::vector<u64> t_divs = divisors(d);

            for (u32 m = 1; m <= kMaxM; ++m) {
                for (u32 l = 2; l <= kMaxL; ++l) {
                    for (u64 t : t_divs) {
                        for (u64 s : s_divs) {
                            if (s > (u64)l * t) continue;  // |Irr(H|.)| = s <= l*t
                            ScanTuple tuple;
                            tuple.params = GammaParams(p, d, s, (u32)t, m, l);
                            const u64 mst = m * s * t;
                            cell.max_stage1_value = std::max(cell.max_stage1_value, mst);
                            if (q1 > mst) {
                                tuple.eliminated_stage = 1;
                            } else if (m + l > k_target) {
                                tuple.eliminated_stage = 2;
                                const auto ml = std::make_pair(m, l);
                                if (std::find(cell.stage2_rejections.begin(), cell.stage2_rejections.end(), ml) ==
                                    cell.stage2_rejections.end())
                                    cell.stage2_rejections.push_back(ml);
                            } else {
                                tuple.eliminated_stage = 0;
                                cell.survivors.push_back(tuple.params);
                            }
                            cell.tuples.push_back(std::move(tuple));
                        }
                    }
                }
            }

            if (cell.d == 2 && cell.survives()) {
                cell.forces_l1_subsections =
                    std::all_of(cell.survivors.begin(), cell.survivors.end(),
                                [&](const GammaParams& g) { return g.m + g.l == k_target; });
            }
            report.cells.push_back(std::move(cell));
        }
    }

    std::sort(report.cells.begin(), report.cells.end(), [](const ScanCell& a, const ScanCell& b) {
        if (a.d != b.d) return a.d < b.d;
        return a.p < b.p;
    });
    return report;
}

}  // namespace blockcensus
