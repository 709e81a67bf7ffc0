#include "blockcensus/suite.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace blockcensus {

namespace {

namespace fs = std::filesystem;

constexpr int kFamilyScan = 1;
constexpr int kFamilyRank3 = 2;
constexpr int kFamilyImprimitive = 3;
constexpr int kFamilyCorrespondence = 4;
constexpr int kFamilyCounts = 5;
constexpr int kFamilyPassman = 6;
constexpr int kFamilyExceptional = 7;

const char* family_name(int order) {
    switch (order) {
        case kFamilyScan: return "semilinear parameter scan";
        case kFamilyRank3: return "rank-3 p^2 family";
        case kFamilyImprimitive: return "imprimitive families";
        case kFamilyCorrespondence: return "orbit correspondence";
        case kFamilyCounts: return "exact character counts";
        case kFamilyPassman: return "two-transitive d=2 instances";
        case kFamilyExceptional: return "exceptional degrees";
    }
    return "census";
}

CheckLine make_line(int family, std::string case_id, CheckStatus status, std::string witness) {
    return CheckLine{family_name(family), std::move(case_id), status, std::move(witness)};
}

/// Case result -> report line, for families where the census expects every
/// case excluded (or reported missing).
CheckLine case_line(int family, const CaseResult& res, const std::string& case_id_override = {}) {
    const std::string id = case_id_override.empty() ? res.case_id : case_id_override;
    switch (res.conclusion) {
        case CaseConclusion::excluded: {
            std::string witness;
            for (const Verdict& v : res.verdicts) {
                if (v.status != VerdictStatus::contradiction) continue;
                if (!witness.empty()) witness += ";";
                witness += slug(v.witness);
            }
            return make_line(family, id, CheckStatus::excluded, witness);
        }
        case CaseConclusion::data_missing:
            return make_line(family, id, CheckStatus::data_missing, slug(res.note));
        case CaseConclusion::surviving:
            return make_line(family, id, CheckStatus::mismatch, "unexpected-survivor " + slug(res.note));
    }
    return make_line(family, id, CheckStatus::fail, "unreachable");
}

struct CountOutcome {
    bool ok = false;
    BlockCount count;
    std::optional<u64> oracle;
    std::string error;
};

std::vector<u32> grid_primes() {
    std::vector<u32> ps;
    for (u32 p = 5; p <= 71; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

void run_tasks(std::vector<std::function<void()>>& tasks, int jobs) {
    if (jobs <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(n);
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& options) {
    SuiteResult result;

    // corpus ingestion
    std::vector<InstanceRecord> instances;
    if (!options.corpus_dir.empty()) {
        if (!fs::exists(options.corpus_dir) || !fs::is_directory(options.corpus_dir)) {
            result.lines.push_back(make_line(0, "INPUT/corpus", CheckStatus::fail,
                                             "not a directory: " + options.corpus_dir));
            result.exit_code = 2;
            return result;
        }
        std::vector<std::string> paths;
        for (const auto& entry : fs::directory_iterator(options.corpus_dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".inst")
                paths.push_back(entry.path().string());
        }
        std::sort(paths.begin(), paths.end());
        for (const std::string& path : paths) {
            try {
                InstanceRecord rec = load_instance_file(path);
                for (const InstanceRecord& seen : instances)
                    if (seen.label == rec.label)
                        throw ValidationError(path + ": duplicate label " + rec.label);
                instances.push_back(std::move(rec));
            } catch (const Error& e) {
                result.lines.push_back(make_line(0, "INPUT/corpus", CheckStatus::fail, e.what()));
                result.exit_code = 2;
                return result;
            }
        }
    }

    auto meta_of = [](const InstanceRecord& r, const char* key) -> std::string {
        const std::string* v = r.meta_value(key);
        return v ? *v : std::string();
    };

    // independent checks, each writing into its own slot
    std::vector<std::function<void()>> tasks;

    const std::vector<u32> rank3_list = {13, 17, 19, 29, 31, 47};
    std::vector<CaseResult> rank3_results(rank3_list.size());
    for (std::size_t i = 0; i < rank3_list.size(); ++i)
        tasks.push_back([&, i] { rank3_results[i] = verify_rank3_p2(rank3_list[i]); });

    const std::vector<u32> primes = grid_primes();
    struct GridCell {
        u32 p, m, rank, blocks;
    };
    std::vector<GridCell> grid;
    for (u32 rank : {3u, 4u}) {
        for (u32 blocks : {2u, 3u}) {
            if (rank == 3 && blocks == 3) continue;
            for (u32 p : primes)
                for (u32 m = 1; m <= 4; ++m) grid.push_back({p, m, rank, blocks});
        }
    }
    std::vector<CaseResult> grid_results(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        tasks.push_back([&, i] {
            grid_results[i] = verify_imprimitive(grid[i].p, grid[i].m, grid[i].rank, grid[i].blocks);
        });

    std::vector<Verdict> correspondence(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i)
        tasks.push_back([&, i] {
            try {
                correspondence[i] = orbit_correspondence_check(instances[i]);
            } catch (const Error& e) {
                correspondence[i] = Verdict::bad("orbit-correspondence", slug(e.what()));
            }
        });

    std::vector<CountOutcome> counts(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (meta_of(instances[i], "expected_k").empty()) continue;
        tasks.push_back([&, i] {
            CountOutcome& out = counts[i];
            try {
                out.count = count_block(instances[i], LambdaContext{}, options.cap);
                out.ok = true;
                try {
                    out.oracle = brute_force_k(instances[i]);
                } catch (const CapExceededError&) {
                    // oracle restricted to |V| * |K| <= 1e5; count stands alone
                }
            } catch (const Error& e) {
                out.error = e.what();
            }
        });
    }

    std::vector<std::size_t> passman_idx;
    for (std::size_t i = 0; i < instances.size(); ++i)
        if (meta_of(instances[i], "family") == "passman") passman_idx.push_back(i);
    std::vector<CaseResult> passman_results(passman_idx.size());
    for (std::size_t i = 0; i < passman_idx.size(); ++i)
        tasks.push_back([&, i] {
            try {
                passman_results[i] = verify_passman_case(instances[passman_idx[i]], options.cap);
            } catch (const Error& e) {
                CaseResult r;
                r.case_id = "P4.4/" + instances[passman_idx[i]].label;
                r.conclusion = CaseConclusion::data_missing;
                r.note = e.what();
                passman_results[i] = std::move(r);
            }
        });

    const auto& expected = expected_exceptional_cases();
    std::map<std::string, std::size_t> by_key;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const std::string key = meta_of(instances[i], "database_key");
        if (!key.empty()) by_key[key] = i;
    }
    auto guarded_exceptional = [&](std::size_t inst_i, const std::string& id) {
        try {
            return verify_exceptional(instances[inst_i], options.cap);
        } catch (const Error& e) {
            CaseResult r;
            r.case_id = id;
            r.conclusion = CaseConclusion::data_missing;
            r.note = e.what();
            return r;
        }
    };

    std::vector<std::optional<CaseResult>> exceptional_results(expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        auto it = by_key.find(expected[i].database_key());
        if (it == by_key.end()) continue;
        const std::size_t inst_i = it->second;
        tasks.push_back([&, i, inst_i, id = expected[i].case_id()] {
            exceptional_results[i] = guarded_exceptional(inst_i, id);
        });
    }

    // keyed instances outside the expected inventory still run, sorted by key
    std::vector<std::pair<std::string, std::size_t>> extra_keys;
    for (const auto& [key, idx] : by_key) {
        bool known = false;
        for (const auto& e : expected)
            if (e.database_key() == key) known = true;
        if (!known) extra_keys.emplace_back(key, idx);
    }
    std::vector<CaseResult> extra_results(extra_keys.size());
    for (std::size_t i = 0; i < extra_keys.size(); ++i)
        tasks.push_back([&, i] {
            extra_results[i] = guarded_exceptional(extra_keys[i].second, "P4.8-9/" + extra_keys[i].first);
        });

    run_tasks(tasks, options.jobs);

    // the parameter scan is cheap and feeds the final verdict
    const ScanReport scan = semilinear_scan(options.k_target);

    // report assembly, in fixed family order
    for (const ScanCell& cell : scan.cells) {
        const std::string id =
            "SEMILIN/(" + std::to_string(cell.p) + "," + std::to_string(cell.d) + ")";
        if (!cell.survives()) {
            std::string witness;
            if (cell.stage2_rejections.empty()) {
                witness = "stage1 max m*s*t=" + std::to_string(cell.max_stage1_value) + " < " +
                          std::to_string(pow_u64(cell.p, cell.d) - 1);
            } else {
                witness = "stage2";
                for (auto [m, l] : cell.stage2_rejections)
                    witness += " (m,l)=(" + std::to_string(m) + "," + std::to_string(l) + ") m+l=" +
                               std::to_string(m + l) + ">" + std::to_string(scan.k_target);
            }
            result.lines.push_back(make_line(kFamilyScan, id, CheckStatus::excluded, slug(witness)));
            continue;
        }

        // survivor; decorate with the counted witness instance when bundled
        std::string witness;
        CheckStatus status = CheckStatus::survives;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            if (meta_of(instances[i], "role") != "survivor-witness") continue;
            if (instances[i].p != cell.p || instances[i].d != cell.d) continue;
            if (!counts[i].ok) {
                status = CheckStatus::mismatch;
                witness = "witness " + instances[i].label + " failed: " + slug(counts[i].error);
            } else if (counts[i].count.k != scan.k_target) {
                status = CheckStatus::mismatch;
                witness = "witness " + instances[i].label + " k=" + std::to_string(counts[i].count.k) +
                          " expected " + std::to_string(scan.k_target);
            } else {
                witness = "k=" + std::to_string(counts[i].count.k) + " l=" + std::to_string(counts[i].count.l);
            }
            break;
        }
        if (cell.forces_l1_subsections) {
            if (!witness.empty()) witness += " ";
            witness += "forced-l(b)=1-on-subsections;contradicts-P4.1";
        }
        result.lines.push_back(make_line(kFamilyScan, id, status, witness));
    }

    std::vector<CaseResult> all_cases;
    for (const CaseResult& r : rank3_results) {
        result.lines.push_back(case_line(kFamilyRank3, r));
        all_cases.push_back(r);
    }
    for (const CaseResult& r : grid_results) {
        result.lines.push_back(case_line(kFamilyImprimitive, r));
        all_cases.push_back(r);
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (correspondence[i].check_id.empty()) continue;
        result.lines.push_back(make_line(kFamilyCorrespondence, "P4.7/" + instances[i].label,
                                         correspondence[i].status == VerdictStatus::consistent
                                             ? CheckStatus::pass
                                             : CheckStatus::fail,
                                         correspondence[i].witness));
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (meta_of(instances[i], "expected_k").empty()) continue;
        const std::string id = "COUNT/" + instances[i].label;
        const CountOutcome& out = counts[i];
        if (!out.ok) {
            result.lines.push_back(make_line(kFamilyCounts, id, CheckStatus::fail, slug(out.error)));
            continue;
        }
        std::string witness = "k=" + std::to_string(out.count.k) + " l=" + std::to_string(out.count.l);
        CheckStatus status = CheckStatus::pass;
        if (out.oracle) {
            witness += " oracle=" + std::to_string(*out.oracle);
            if (*out.oracle != out.count.k) status = CheckStatus::fail;
        }
        const std::string want_k = meta_of(instances[i], "expected_k");
        const std::string want_l = meta_of(instances[i], "expected_l");
        if (!want_k.empty() && want_k != std::to_string(out.count.k)) status = CheckStatus::fail;
        if (!want_l.empty() && want_l != std::to_string(out.count.l)) status = CheckStatus::fail;
        if (status == CheckStatus::fail) witness += " expected k=" + want_k + (want_l.empty() ? "" : " l=" + want_l);
        result.lines.push_back(make_line(kFamilyCounts, id, status, witness));
    }
    for (const CaseResult& r : passman_results) {
        result.lines.push_back(case_line(kFamilyPassman, r));
        all_cases.push_back(r);
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const std::string id = expected[i].case_id();
        if (!exceptional_results[i]) {
            CaseResult missing;
            missing.case_id = id;
            missing.conclusion = CaseConclusion::data_missing;
            result.lines.push_back(make_line(kFamilyExceptional, id, CheckStatus::data_missing, ""));
            all_cases.push_back(std::move(missing));
            continue;
        }
        result.lines.push_back(case_line(kFamilyExceptional, *exceptional_results[i], id));
        all_cases.push_back(*exceptional_results[i]);
    }
    for (const CaseResult& r : extra_results) {
        result.lines.push_back(case_line(kFamilyExceptional, r));
        all_cases.push_back(r);
    }

    for (const CheckLine& l : result.lines)
        if (l.status == CheckStatus::fail || l.status == CheckStatus::mismatch) result.exit_code = 1;

    try {
        const ReducedVerdict verdict = theorem_reduced_verdict(scan, all_cases);
        result.conditional = verdict.conditional;
        std::string line = "CLASSIFICATION k=" + std::to_string(verdict.entry.k) + " ->";
        for (const DefectGroupDesc& g : verdict.entry.defect_groups) line += " " + g.tag;
        result.classification_line = line;
    } catch (const Error& e) {
        result.classification_line = std::string("CLASSIFICATION FAILED ") + slug(e.what());
        result.exit_code = std::max(result.exit_code, 1);
    }
    return result;
}

std::string emit_report(const SuiteResult& result, ReportFormat format) {
    return render_report(result.lines, result.classification_line, format);
}

}  // namespace blockcensus
