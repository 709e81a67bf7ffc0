#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "blockcensus/suite.hpp"

using namespace blockcensus;

namespace {

namespace fs = std::filesystem;

struct TempCorpus {
    fs::path dir;
    explicit TempCorpus(const char* name) {
        dir = fs::temp_directory_path() / (std::string("blockcensus-test-") + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~TempCorpus() { fs::remove_all(dir); }
    void write(const char* file, const std::string& text) const {
        std::ofstream out(dir / file, std::ios::binary);
        out << text;
    }
};

u64 count_lines_with(const SuiteResult& res, CheckStatus status) {
    u64 n = 0;
    for (const CheckLine& l : res.lines)
        if (l.status == status) ++n;
    return n;
}

}  // namespace

TEST_SUITE("suite") {
    TEST_CASE("bundled corpus: everything matches the census") {
        SuiteOptions opts;
        opts.corpus_dir = BLOCKCENSUS_CORPUS_DIR;
        const SuiteResult res = run_suite(opts);
        CHECK(res.exit_code == 0);
        REQUIRE(res.classification_line.has_value());
        CHECK(*res.classification_line == "CLASSIFICATION k=5 -> C5 C7 D8 Q8");
        CHECK(res.conditional);  // no exceptional-family generator data bundled
        CHECK(count_lines_with(res, CheckStatus::fail) == 0);
        CHECK(count_lines_with(res, CheckStatus::mismatch) == 0);
        CHECK(count_lines_with(res, CheckStatus::data_missing) == 168);
        CHECK(count_lines_with(res, CheckStatus::survives) == 3);

        // the survivor lines carry the witness counts
        const std::string report = emit_report(res, ReportFormat::machine);
        CHECK(report.find("CHECK SEMILIN/(5,1) SURVIVES k=5 l=4") != std::string::npos);
        CHECK(report.find("CHECK SEMILIN/(7,1) SURVIVES k=5 l=3") != std::string::npos);
        CHECK(report.find("contradicts-P4.1") != std::string::npos);
        CHECK(report.rfind("CLASSIFICATION k=5 -> C5 C7 D8 Q8\n") == report.size() - 34);
    }

    TEST_CASE("reports are byte-identical across worker counts") {
        SuiteOptions a;
        a.corpus_dir = BLOCKCENSUS_CORPUS_DIR;
        a.jobs = 1;
        SuiteOptions b = a;
        b.jobs = 4;
        CHECK(emit_report(run_suite(a), ReportFormat::machine) ==
              emit_report(run_suite(b), ReportFormat::machine));
    }

    TEST_CASE("a tampered witness instance fails the run") {
        TempCorpus corpus("tampered");
        corpus.write("f20.inst",
                     "p=5\nd=1\nlabel=F20\nmeta.family=semilinear\nmeta.role=survivor-witness\n"
                     "meta.expected_k=5\nmeta.expected_l=4\ngen=4\n");  // order-2 generator
        SuiteOptions opts;
        opts.corpus_dir = corpus.dir.string();
        const SuiteResult res = run_suite(opts);
        CHECK(res.exit_code == 1);

        const std::string report = emit_report(res, ReportFormat::machine);
        CHECK(report.find("CHECK SEMILIN/(5,1) MISMATCH witness F20 k=4 expected 5") != std::string::npos);
        CHECK(report.find("CHECK COUNT/F20 FAIL k=4") != std::string::npos);
    }

    TEST_CASE("an empty corpus still runs the arithmetic families") {
        TempCorpus corpus("empty");
        SuiteOptions opts;
        opts.corpus_dir = corpus.dir.string();
        const SuiteResult res = run_suite(opts);
        CHECK(res.exit_code == 0);
        CHECK(res.conditional);
        CHECK(count_lines_with(res, CheckStatus::data_missing) == 168);
        REQUIRE(res.classification_line.has_value());
        CHECK(*res.classification_line == "CLASSIFICATION k=5 -> C5 C7 D8 Q8");
    }

    TEST_CASE("ingested exceptional instances run the battery") {
        // a synthetic rank-3 subgroup of the semilinear group on F_{5^4},
        // keyed once inside the expected inventory and once outside it
        const FieldExt f = ext_field_build(5, 4);
        InstanceRecord rec;
        rec.p = 5;
        rec.d = 4;
        rec.label = "synthetic-rank3";
        rec.meta["family"] = "exceptional";
        rec.meta["database_key"] = "5^4:487";
        rec.generators = {mat_pow(f.multiplication_matrix(), 2), mat_pow(f.frobenius_matrix(), 2)};

        InstanceRecord extra = rec;
        extra.label = "synthetic-extra";
        extra.meta["database_key"] = "5^4:9999";

        TempCorpus corpus("ingested");
        corpus.write("a.inst", serialize_instance(rec));
        corpus.write("b.inst", serialize_instance(extra));

        SuiteOptions opts;
        opts.corpus_dir = corpus.dir.string();
        const SuiteResult res = run_suite(opts);
        CHECK(res.exit_code == 0);
        CHECK(count_lines_with(res, CheckStatus::data_missing) == 167);  // one key now ingested

        const std::string report = emit_report(res, ReportFormat::machine);
        CHECK(report.find("CHECK P4.8/5^4:487 EXCLUDED") != std::string::npos);
        CHECK(report.find("CHECK P4.8/5^4:9999 EXCLUDED") != std::string::npos);
    }

    TEST_CASE("input errors exit with code 2") {
        SuiteOptions missing;
        missing.corpus_dir = "/nonexistent/census/corpus";
        CHECK(run_suite(missing).exit_code == 2);

        TempCorpus corpus("corrupt");
        corpus.write("bad.inst", "p=4\nd=1\ngen=3\n");
        SuiteOptions opts;
        opts.corpus_dir = corpus.dir.string();
        CHECK(run_suite(opts).exit_code == 2);
    }

    TEST_CASE("machine report grammar") {
        TempCorpus corpus("grammar");
        SuiteOptions opts;
        opts.corpus_dir = corpus.dir.string();
        const SuiteResult res = run_suite(opts);
        const std::string report = emit_report(res, ReportFormat::machine);
        std::size_t lines = 0, checks = 0;
        for (std::size_t pos = 0; pos < report.size();) {
            const std::size_t eol = report.find('\n', pos);
            const std::string line = report.substr(pos, eol - pos);
            pos = eol + 1;
            ++lines;
            if (line.rfind("CHECK ", 0) == 0) ++checks;
        }
        CHECK(checks == lines - 1);  // all but the classification line
        CHECK(checks == res.lines.size());
        // 6 scan cells + 6 rank-3 primes + 18*4*3 imprimitive cells + 168 expected keys
        CHECK(checks == 6 + 6 + 216 + 168);
    }

    TEST_CASE("text report groups by family") {
        SuiteOptions opts;
        opts.corpus_dir = BLOCKCENSUS_CORPUS_DIR;
        const SuiteResult res = run_suite(opts);
        const std::string report = emit_report(res, ReportFormat::text);
        CHECK(report.find("== semilinear parameter scan ==") != std::string::npos);
        CHECK(report.find("== exceptional degrees ==") != std::string::npos);
        CHECK(report.find("CLASSIFICATION k=5 -> C5 C7 D8 Q8") != std::string::npos);
    }
}
