#include "blockcensus/counting.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace blockcensus {

BlockCount count_block(const InstanceRecord& inst, const LambdaContext& ctx, u64 cap) {
    if (ctx.mode == LambdaContext::Mode::symbolic)
        throw SymbolicModeError("count_block has no exact counts in symbolic mode; use the constraint engine");

    const GroupHandle handle = instance_group(inst);
    const std::vector<Mat> elements = enumerate_elements(handle, cap);
    if (elements.size() % inst.p == 0)
        throw InvalidInstanceError("p divides the complement order; not a p'-complement");
    const OrbitDecomposition dual = orbit_decomposition(handle, ActionSide::dual);

    // dual action of each element, computed once
    std::vector<Mat> duals;
    duals.reserve(elements.size());
    for (const Mat& g : elements) duals.push_back(dual_matrix(g));

    BlockCount count;
    for (const Orbit& orbit : dual.orbits) {
        std::vector<Mat> stab;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (apply(orbit.rep, duals[i]) == orbit.rep) stab.push_back(elements[i]);
        }
        if (stab.size() * orbit.size != elements.size())
            throw Error("orbit-stabilizer mismatch in count_block");
        const u64 contrib = class_count(stab);
        count.contributions.emplace_back(orbit.rep, contrib);
        count.k += contrib;
        if (vec_to_index(orbit.rep) == 0) count.l = contrib;
    }

    const u64 m = dual.rank - 1;
    if (count.k < count.l + m) throw Error("character count below the subsection bound");
    return count;
}

namespace {

struct PermHash {
    std::size_t operator()(const std::vector<u32>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (u32 x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

u64 brute_force_k(const InstanceRecord& inst, u64 cap) {
    const GroupHandle handle = instance_group(inst);
    const u64 complement_order = group_order(handle);
    if (complement_order % inst.p == 0)
        throw InvalidInstanceError("p divides the complement order; not a p'-complement");
    const u64 total = complement_order * handle.domain();
    if (total > cap)
        throw CapExceededError(total, "affine group order " + std::to_string(total) + " passes cap");

    // generators of the affine group as permutations of V: the matrix
    // generators plus the translations by basis vectors
    std::vector<std::vector<u32>> gens = handle.images(ActionSide::points);
    const u64 n = handle.domain();
    for (u32 j = 0; j < inst.d; ++j) {
        std::vector<u32> t(n);
        Vec e = zero_vec(inst.p, inst.d);
        e.coords[j] = 1;
        for (u64 i = 0; i < n; ++i) {
            Vec v = vec_from_index(i, inst.p, inst.d);
            for (u32 c = 0; c < inst.d; ++c) {
                v.coords[c] += e.coords[c];
                if (v.coords[c] >= inst.p) v.coords[c] -= inst.p;
            }
            t[i] = static_cast<u32>(vec_to_index(v));
        }
        gens.push_back(std::move(t));
    }

    std::vector<u32> id(n);
    for (u64 i = 0; i < n; ++i) id[i] = static_cast<u32>(i);

    std::vector<std::vector<u32>> elements{id};
    std::unordered_map<std::vector<u32>, u32, PermHash> index;
    index.emplace(id, 0);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : gens) {
            std::vector<u32> prod(n);
            for (u64 x = 0; x < n; ++x) prod[x] = g[elements[i][x]];
            if (index.emplace(prod, static_cast<u32>(elements.size())).second)
                elements.push_back(std::move(prod));
        }
    }
    if (elements.size() != total) throw Error("affine closure size mismatch");

    std::vector<std::vector<u32>> gens_inv;
    for (const auto& g : gens) {
        std::vector<u32> inv(n);
        for (u64 x = 0; x < n; ++x) inv[g[x]] = static_cast<u32>(x);
        gens_inv.push_back(std::move(inv));
    }

    std::vector<bool> visited(elements.size(), false);
    u64 classes = 0;
    std::vector<u32> stack;
    for (u32 start = 0; start < elements.size(); ++start) {
        if (visited[start]) continue;
        ++classes;
        visited[start] = true;
        stack.assign(1, start);
        while (!stack.empty()) {
            const u32 xi = stack.back();
            stack.pop_back();
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                std::vector<u32> conj(n);
                const auto& x = elements[xi];
                const auto& g = gens[gi];
                const auto& ginv = gens_inv[gi];
                for (u64 pt = 0; pt < n; ++pt) conj[pt] = g[x[ginv[pt]]];
                const u32 ci = index.at(conj);
                if (!visited[ci]) {
                    visited[ci] = true;
                    stack.push_back(ci);
                }
            }
        }
    }
    return classes;
}

const DegreeTable& sl23_degree_table() {
    static const DegreeTable t{"SL(2,3)", {1, 1, 1, 2, 2, 2, 3}};
    return t;
}

const DegreeTable& sl25_degree_table() {
    static const DegreeTable t{"SL(2,5)", {1, 2, 2, 3, 3, 4, 4, 5, 6}};
    return t;
}

bool degree_table_valid(const DegreeTable& table, u64 order, u64 classes) {
    u64 sum = 0;
    for (u32 d : table.degrees) sum += (u64)d * d;
    return sum == order && table.degrees.size() == classes;
}

u64 gallagher_min_count(const DegreeTable& table, bool /*quotient_cyclic*/) {
    std::set<u32> distinct(table.degrees.begin(), table.degrees.end());
    return distinct.size();
}

Verdict orbit_correspondence_check(const InstanceRecord& inst) {
    const GroupHandle handle = instance_group(inst);
    const auto points = orbit_decomposition(handle, ActionSide::points).sorted_sizes();
    const auto dual = orbit_decomposition(handle, ActionSide::dual).sorted_sizes();

    auto fmt = [](const std::vector<u64>& v) {
        std::ostringstream out;
        out << "{";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << "}";
        return out.str();
    };
    const std::string id = "orbit-correspondence:" + (inst.label.empty() ? "instance" : inst.label);
    const std::string witness = fmt(points) + (points == dual ? "=" : "!=") + fmt(dual);
    return points == dual ? Verdict::ok(id, witness) : Verdict::bad(id, witness);
}

}  // namespace blockcensus
