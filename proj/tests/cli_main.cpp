// Exercises the installed command-line interface end to end: spawns the
// binary (path given as argv[1]), checks exit codes, output files, and
// determinism guarantees.  Prints one line per check; exits non-zero if any
// check failed.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbic/solution_io.hpp"
#include "hbic/types.hpp"

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok: " : "FAIL: ") << what << "\n";
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: hbic_cli_test <path-to-hbic-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    char dir_template[] = "/tmp/hbic_cli_XXXXXX";
    if (!mkdtemp(dir_template)) {
        std::cerr << "cannot create scratch directory\n";
        return 2;
    }
    const std::string dir = dir_template;
    const std::string data = dir + "/data.csv";
    const std::string schema = dir + "/schema.json";
    const std::string truth = dir + "/truth.json";
    const std::string quiet = " 2> " + dir + "/stderr.txt";

    // --- gen ---------------------------------------------------------------
    const std::string gen_flags = " gen --rows 60 --cols 20 --cat-frac 0.5 --nbics 3"
                                  " --bic-rows 10 --bic-cols 4 --noise 0 --seed 5"
                                  " --out-data " + data + " --out-schema " + schema +
                                  " --out-truth " + truth;
    check(run(bin + gen_flags + quiet) == 0, "gen exits 0");
    check(!slurp(data).empty() && !slurp(schema).empty() && !slurp(truth).empty(),
          "gen writes all three files");

    const std::string data2 = dir + "/data2.csv";
    const std::string truth2 = dir + "/truth2.json";
    run(bin + " gen --rows 60 --cols 20 --cat-frac 0.5 --nbics 3 --bic-rows 10 --bic-cols 4"
              " --noise 0 --seed 5 --out-data " + data2 + " --out-schema " + dir +
        "/schema2.json --out-truth " + truth2 + quiet);
    check(slurp(data) == slurp(data2), "gen is reproducible for equal seeds");
    check(slurp(truth) == slurp(truth2), "ground truth is reproducible too");

    check(run(bin + " gen --rows 50 --nbics 100 --bic-rows 50 --out-data " + dir +
              "/x.csv --out-schema " + dir + "/x.json --out-truth " + dir + "/xt.json" + quiet) == 2,
          "infeasible planting exits 2");

    // --- run ---------------------------------------------------------------
    const std::string sol = dir + "/sol.json";
    check(run(bin + " run --input " + data + " --schema " + schema + " --output " + sol + quiet) == 0,
          "run exits 0");
    std::vector<hbic::Bicluster> found;
    bool parsed = true;
    try {
        found = hbic::read_biclusters(slurp(sol));
        for (const hbic::Bicluster& b : found) hbic::validate_bicluster(b, 60, 20);
    } catch (const hbic::Error&) {
        parsed = false;
    }
    check(parsed && !found.empty(), "solution reloads as canonical in-range biclusters");

    nlohmann::json meta = nlohmann::json::parse(slurp(sol))["meta"];
    check(meta["nbins"] == 10 && meta["rmin"] == 2 && meta["cmin"] == 2 && meta["alpha"] == 0.5 &&
              meta["select"] == "all" && meta["beta"].is_null() &&
              meta["n_candidates"].get<int>() > 0,
          "solution meta echoes the run parameters");

    const std::string sol_t8 = dir + "/sol_t8.json";
    run(bin + " run --input " + data + " --schema " + schema + " --output " + sol_t8 +
        " --threads 8" + quiet);
    check(slurp(sol) == slurp(sol_t8), "solutions are identical for 1 and 8 threads");

    const std::string sol_again = dir + "/sol_again.json";
    run(bin + " run --input " + data + " --schema " + schema + " --output " + sol_again + quiet);
    check(slurp(sol) == slurp(sol_again), "repeat runs are byte-identical");

    int code = run(bin + " run --input " + data + " --schema " + schema + " --select best --beta 2"
                   " --output " + dir + "/sol_best.json" + quiet);
    check(code == 0 && hbic::read_biclusters(slurp(dir + "/sol_best.json")).size() == 2,
          "best-beta run keeps two biclusters");

    run(bin + " run --input " + data + " --schema " + schema + " --select best --beta 10000"
        " --output " + dir + "/sol_sat.json 2> " + dir + "/sat_err.txt");
    check(slurp(dir + "/sat_err.txt").find("warning") != std::string::npos,
          "oversized beta warns on the error stream");

    check(run(bin + " run --input " + data + quiet) == 2, "missing --schema exits 2");
    check(run(bin + " run --input " + data + " --schema " + schema + " --select best" + quiet) == 2,
          "--select best without --beta exits 2");
    check(run(bin + " run --input " + dir + "/absent.csv --schema " + schema + quiet) == 2,
          "unreadable input exits 2");
    check(run(bin + " run --input " + data + " --schema " + schema + " --nbins 1" + quiet) == 2,
          "nbins below 2 exits 2");
    check(run(bin + " run --input " + data + " --schema " + schema + " --select wat" + quiet) == 2,
          "unknown selection mode exits 2");
    check(run(bin + " run --input " + data + " --schema " + truth + quiet) == 2,
          "schema that is not a schema exits 2");

    // --- eval --------------------------------------------------------------
    const std::string report = dir + "/report.txt";
    check(run(bin + " eval --solution " + sol + " --truth " + truth + " > " + report + quiet) == 0,
          "eval exits 0");
    std::string line = slurp(report);
    check(line.find("\"relevance\":") != std::string::npos &&
              line.find("\"recovery\":") != std::string::npos &&
              line.find("\"biclustering_error\":") != std::string::npos,
          "eval prints all three metrics");

    run(bin + " eval --solution " + truth + " --truth " + truth + " > " + report + quiet);
    check(slurp(report) ==
              "{\"relevance\":1.000000, \"recovery\":1.000000, \"biclustering_error\":1.000000}\n",
          "identical solutions score ones with six decimals");

    std::ofstream(dir + "/empty.json") << "{\"biclusters\":[]}";
    check(run(bin + " eval --solution " + dir + "/empty.json --truth " + truth + quiet) == 2,
          "empty solution exits 2");
    std::ofstream(dir + "/bad.json") << "{nope";
    check(run(bin + " eval --solution " + dir + "/bad.json --truth " + truth + quiet) == 2,
          "malformed JSON exits 2");

    // --- top level ---------------------------------------------------------
    check(run(bin + quiet) == 2, "missing subcommand exits 2");
    check(run(bin + " frobnicate" + quiet) == 2, "unknown subcommand exits 2");
    check(run(bin + " --help > /dev/null" + quiet) == 0, "--help exits 0");
    check(run(bin + " gen --help > /dev/null" + quiet) == 0, "gen --help exits 0");

    std::cout << (failures ? "FAILED" : "passed") << ": " << failures << " failing check(s)\n";
    return failures ? 1 : 0;
}
