#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "blockcensus/suite.hpp"

using namespace blockcensus;

namespace {

#ifndef BLOCKCENSUS_DEFAULT_CORPUS
#define BLOCKCENSUS_DEFAULT_CORPUS "corpus"
#endif

std::string resolve_corpus(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("BLOCKCENSUS_CORPUS")) return env;
    return BLOCKCENSUS_DEFAULT_CORPUS;
}

void print_orbits(const OrbitDecomposition& dec, const char* side) {
    std::cout << side << ": rank=" << dec.rank << " orbits=";
    for (std::size_t i = 0; i < dec.orbits.size(); ++i) {
        const Orbit& o = dec.orbits[i];
        std::cout << (i ? " " : "") << "(";
        for (std::size_t c = 0; c < o.rep.coords.size(); ++c)
            std::cout << (c ? "," : "") << o.rep.coords[c];
        std::cout << ")x" << o.size;
    }
    std::cout << "\n";
}

void print_case(const CaseResult& res, ReportFormat format) {
    if (format == ReportFormat::machine) {
        std::string witness;
        if (res.conclusion == CaseConclusion::excluded) {
            for (const Verdict& v : res.verdicts) {
                if (v.status != VerdictStatus::contradiction) continue;
                if (!witness.empty()) witness += ";";
                witness += slug(v.witness);
            }
        } else {
            witness = slug(res.note);
        }
        std::cout << "CHECK " << res.case_id << " "
                  << (res.conclusion == CaseConclusion::excluded
                          ? "EXCLUDED"
                          : res.conclusion == CaseConclusion::surviving ? "SURVIVES" : "DATA-MISSING");
        if (!witness.empty()) std::cout << " " << witness;
        std::cout << "\n";
        return;
    }
    std::cout << "case " << res.case_id << ": " << to_string(res.conclusion) << "\n";
    for (const Verdict& v : res.verdicts) {
        std::cout << "  " << v.check_id << ": " << to_string(v.status);
        if (!v.witness.empty()) std::cout << "  " << v.witness;
        std::cout << "\n";
    }
    if (!res.note.empty()) std::cout << "  note: " << res.note << "\n";
}

InstanceRecord corpus_lookup(const std::string& corpus_dir, const std::string& key, bool by_label) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(corpus_dir))
        throw DataMissingError("corpus directory not found: " + corpus_dir);
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".inst")
            paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    for (const std::string& path : paths) {
        InstanceRecord rec = load_instance_file(path);
        if (by_label && rec.label == key) return rec;
        const std::string* dbkey = rec.meta_value("database_key");
        if (!by_label && dbkey && *dbkey == key) return rec;
    }
    throw DataMissingError("no corpus instance for " + key);
}

CaseResult dispatch_case(const std::string& id, const std::string& corpus_dir, u64 cap) {
    auto param = [&](const std::string& prefix, const char* name) {
        const std::string rest = id.substr(prefix.size());
        std::size_t at = rest.find(std::string(name) + "=");
        if (at == std::string::npos) throw InvalidParamsError("case id needs " + std::string(name) + "=");
        at += std::string(name).size() + 1;
        return static_cast<u32>(std::stoul(rest.substr(at)));
    };
    if (id.rfind("P4.5/", 0) == 0) return verify_rank3_p2(param("P4.5/", "p"));
    if (id.rfind("P4.10/", 0) == 0) return verify_imprimitive(param("P4.10/", "p"), param("P4.10/", "m"), 3, 2);
    if (id.rfind("P4.11/", 0) == 0) return verify_imprimitive(param("P4.11/", "p"), param("P4.11/", "m"), 4, 2);
    if (id.rfind("P4.12/", 0) == 0) return verify_imprimitive(param("P4.12/", "p"), param("P4.12/", "m"), 4, 3);
    if (id.rfind("P4.8/", 0) == 0 || id.rfind("P4.9/", 0) == 0) {
        const std::string key = id.substr(id.find('/') + 1);
        try {
            return verify_exceptional(corpus_lookup(corpus_dir, key, false), cap);
        } catch (const DataMissingError&) {
            CaseResult res;
            res.case_id = id;
            res.conclusion = CaseConclusion::data_missing;
            res.note = "no generator data ingested for " + key;
            return res;
        }
    }
    if (id.rfind("P4.4/", 0) == 0)
        return verify_passman_case(corpus_lookup(corpus_dir, id.substr(5), true), cap);
    throw InvalidParamsError("unrecognized case id " + id);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census toolkit for affine matrix-group actions and block character counts"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand

    u64 cap = kDefaultElementCap;
    std::string format_name = "text";
    int jobs = 1;
    app.add_option("--cap", cap, "element enumeration cap")->capture_default_str();
    app.add_option("--format", format_name, "report format: text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--jobs", jobs, "worker threads for independent checks");

    std::string file, side = "both", case_id, corpus_flag, suite_dir;
    bool with_oracle = false, gamma0 = false, emit = false;
    u32 k_arg = 0, gamma_p = 0, gamma_k = 0, scan_target = 5;
    std::optional<u32> l_arg;

    CLI::App* orbits = app.add_subcommand("orbits", "orbit decomposition of an instance");
    orbits->add_option("file", file)->required();
    orbits->add_option("--side", side)->check(CLI::IsMember({"point", "dual", "both"}));

    CLI::App* rank = app.add_subcommand("rank", "permutation rank of an instance");
    rank->add_option("file", file)->required();

    CLI::App* count = app.add_subcommand("count", "block character counts of an instance");
    count->add_option("file", file)->required();
    count->add_flag("--oracle", with_oracle, "cross-check with the brute-force class count");

    CLI::App* scan = app.add_subcommand("scan-semilinear", "semilinear parameter scan");
    scan->add_option("--k-target", scan_target, "character count target")->capture_default_str();

    CLI::App* vcase = app.add_subcommand("verify-case", "run one case verifier by id");
    vcase->add_option("id", case_id, "e.g. P4.5/p=13, P4.10/p=5,m=2, P4.8/5^4:487, P4.4/SL23")->required();
    vcase->add_option("--corpus", corpus_flag, "corpus directory for instance-backed cases");

    CLI::App* vsuite = app.add_subcommand("verify-suite", "run the full census over a corpus");
    vsuite->add_option("dir", suite_dir, "corpus directory (default: $BLOCKCENSUS_CORPUS or bundled)");

    CLI::App* classify = app.add_subcommand("classify", "defect groups for a character count");
    classify->add_option("--k", k_arg)->required();
    u32 l_raw = 0;
    CLI::Option* l_opt = classify->add_option("--l", l_raw);

    CLI::App* gamma = app.add_subcommand("gamma", "build a semilinear group");
    gamma->add_option("--p", gamma_p)->required();
    gamma->add_option("--k", gamma_k)->required();
    gamma->add_flag("--gamma0", gamma0, "multiplication part only");
    gamma->add_flag("--emit", emit, "print as an instance file");

    CLI11_PARSE(app, argc, argv);
    const ReportFormat format = format_name == "machine" ? ReportFormat::machine : ReportFormat::text;

    try {
        if (*orbits) {
            const GroupHandle g = instance_group(load_instance_file(file));
            if (side != "dual") print_orbits(orbit_decomposition(g, ActionSide::points), "point");
            if (side != "point") print_orbits(orbit_decomposition(g, ActionSide::dual), "dual");
        } else if (*rank) {
            const GroupHandle g = instance_group(load_instance_file(file));
            std::cout << orbit_decomposition(g, ActionSide::points).rank << "\n";
        } else if (*count) {
            const InstanceRecord rec = load_instance_file(file);
            const BlockCount bc = count_block(rec, LambdaContext{}, cap);
            std::cout << (rec.label.empty() ? "instance" : rec.label) << ": k=" << bc.k << " l=" << bc.l
                      << "\n";
            for (const auto& [rep, c] : bc.contributions) {
                std::cout << "  orbit (";
                for (std::size_t i = 0; i < rep.coords.size(); ++i)
                    std::cout << (i ? "," : "") << rep.coords[i];
                std::cout << "): " << c << "\n";
            }
            if (with_oracle) std::cout << "  oracle k=" << brute_force_k(rec) << "\n";
        } else if (*scan) {
            const ScanReport rep = semilinear_scan(scan_target);
            for (const ScanCell& cell : rep.cells) {
                std::cout << "(" << cell.p << "," << cell.d << ") "
                          << (cell.survives() ? "SURVIVES" : "EXCLUDED");
                for (const GammaParams& s : cell.survivors)
                    std::cout << " [m=" << s.m << " l=" << s.l << " s=" << s.s << " t=" << s.t << "]";
                for (auto [m, l] : cell.stage2_rejections)
                    std::cout << " rejected(m=" << m << ",l=" << l << ")";
                if (cell.forces_l1_subsections) std::cout << " forced-l(b)=1;contradicts-P4.1";
                std::cout << "\n";
            }
        } else if (*vcase) {
            print_case(dispatch_case(case_id, resolve_corpus(corpus_flag), cap), format);
        } else if (*vsuite) {
            SuiteOptions opts;
            opts.corpus_dir = resolve_corpus(suite_dir);
            opts.cap = cap;
            opts.jobs = jobs;
            const SuiteResult res = run_suite(opts);
            std::cout << emit_report(res, format);
            return res.exit_code;
        } else if (*classify) {
            if (*l_opt) l_arg = l_raw;
            const ClassificationEntry entry = classify_kb(k_arg, l_arg);
            std::cout << "k=" << entry.k;
            if (entry.l) std::cout << " l=" << *entry.l;
            std::cout << " ->";
            for (const DefectGroupDesc& g : entry.defect_groups) std::cout << " " << g.tag;
            std::cout << "\n";
        } else if (*gamma) {
            const GroupHandle g = gamma_group(gamma_p, gamma_k, gamma0 ? GammaKind::gamma0 : GammaKind::full);
            if (emit) {
                InstanceRecord rec;
                rec.p = gamma_p;
                rec.d = gamma_k;
                rec.label = (gamma0 ? "Gamma0(" : "Gamma(") + std::to_string(gamma_p) + "^" +
                            std::to_string(gamma_k) + ")";
                rec.generators = g.generators();
                std::cout << serialize_instance(rec);
            } else {
                std::cout << "order=" << group_order(g) << "\n";
                print_orbits(orbit_decomposition(g, ActionSide::points), "point");
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
