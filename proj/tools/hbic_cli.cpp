#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hbic/hbic.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) hbic::raise(hbic::ErrorKind::InvalidArgument, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) hbic::raise(hbic::ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) hbic::raise(hbic::ErrorKind::InvalidArgument, "failed while writing '" + path + "'");
}

struct RunArgs {
    std::string input, schema, output;
    int nbins = 10;
    hbic::Index rmin = 2, cmin = 2;
    double alpha = 0.5;
    std::string select = "all";
    std::optional<int> beta;
    int threads = 1;
    std::uint64_t seed = 0;
};

int cmd_run(const RunArgs& a) {
    hbic::Schema schema = hbic::parse_schema(read_file(a.schema));
    hbic::HeteroMatrix x = hbic::load_matrix(read_file(a.input), schema);

    hbic::RunConfig cfg;
    cfg.nbins = a.nbins;
    cfg.rmin = a.rmin;
    cfg.cmin = a.cmin;
    cfg.alpha = a.alpha;
    cfg.select = hbic::selection_mode_from(a.select);
    cfg.beta = a.beta;
    cfg.threads = a.threads;
    cfg.seed = a.seed;
    if (cfg.select == hbic::SelectionMode::BestBeta && !cfg.beta)
        hbic::raise(hbic::ErrorKind::InvalidArgument, "--select best requires --beta");
    if (cfg.beta && *cfg.beta < 1)
        hbic::raise(hbic::ErrorKind::InvalidArgument, "--beta must be at least 1");

    hbic::RunOutcome outcome = hbic::run_pipeline(x, cfg);
    if (outcome.saturated)
        std::cerr << "warning: --beta " << *cfg.beta << " exceeds the "
                  << outcome.solution.n_candidates << " available candidates; kept all\n";

    std::string json = hbic::solution_to_json(outcome.solution);
    if (a.output.empty())
        std::cout << json;
    else
        write_file(a.output, json);
    return 0;
}

int cmd_eval(const std::string& solution_path, const std::string& truth_path) {
    std::vector<hbic::Bicluster> solution = hbic::read_biclusters(read_file(solution_path));
    std::vector<hbic::Bicluster> truth = hbic::read_biclusters(read_file(truth_path));
    hbic::MetricReport report = hbic::evaluate(solution, truth);
    std::printf("{\"relevance\":%.6f, \"recovery\":%.6f, \"biclustering_error\":%.6f}\n",
                report.relevance, report.recovery, report.biclustering_error);
    return 0;
}

struct GenArgs {
    hbic::SynthConfig cfg;
    std::string out_data = "data.csv";
    std::string out_schema = "schema.json";
    std::string out_truth = "truth.json";
};

int cmd_gen(const GenArgs& a) {
    hbic::SynthResult result = hbic::generate_dataset(a.cfg);
    write_file(a.out_data, hbic::write_csv(result.matrix));
    write_file(a.out_schema, hbic::schema_to_json(result.schema));
    write_file(a.out_truth, hbic::truth_to_json(result.truth, a.cfg));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-stage biclustering of mixed numeric/binary/categorical data"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Find biclusters in a CSV dataset");
    run->add_option("--input", run_args.input, "Input CSV with a header row")->required();
    run->add_option("--schema", run_args.schema, "Column schema JSON")->required();
    run->add_option("--output", run_args.output, "Solution JSON path (stdout if omitted)");
    run->add_option("--nbins", run_args.nbins, "Equal-width bins for numeric columns")
        ->default_val(10);
    run->add_option("--rmin", run_args.rmin, "Minimum rows per bicluster")->default_val(2);
    run->add_option("--cmin", run_args.cmin, "Minimum columns per bicluster")->default_val(2);
    run->add_option("--alpha", run_args.alpha, "Fitness weight on homogeneity vs size")
        ->default_val(0.5);
    run->add_option("--select", run_args.select, "Selection mode: all, dist, pareto, best")
        ->default_val("all");
    int beta_flag = 0;
    CLI::Option* beta_opt = run->add_option("--beta", beta_flag, "Bicluster count for --select best");
    run->add_option("--threads", run_args.threads, "Worker threads; 0 means auto")->default_val(1);
    run->add_option("--seed", run_args.seed, "Seed recorded in the solution meta")->default_val(0);

    std::string eval_solution, eval_truth;
    CLI::App* eval = app.add_subcommand("eval", "Score a solution against a reference");
    eval->add_option("--solution", eval_solution, "Solution JSON")->required();
    eval->add_option("--truth", eval_truth, "Reference (ground truth) JSON")->required();

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate a planted-bicluster benchmark dataset");
    gen->add_option("--rows", gen_args.cfg.n_rows, "Matrix rows")->default_val(1000);
    gen->add_option("--cols", gen_args.cfg.n_cols, "Matrix columns")->default_val(500);
    gen->add_option("--cat-frac", gen_args.cfg.cat_fraction, "Fraction of categorical columns")
        ->default_val(0.5);
    gen->add_option("--nbics", gen_args.cfg.n_bics, "Planted biclusters")->default_val(5);
    gen->add_option("--bic-rows", gen_args.cfg.bic_rows, "Rows per planted bicluster")
        ->default_val(50);
    gen->add_option("--bic-cols", gen_args.cfg.bic_cols, "Columns per planted bicluster")
        ->default_val(50);
    gen->add_option("--noise", gen_args.cfg.noise_level, "Fraction of cells to perturb")
        ->default_val(0.0);
    gen->add_option("--seed", gen_args.cfg.seed, "Generator seed")->default_val(0);
    gen->add_option("--out-data", gen_args.out_data, "Output CSV path")->default_val("data.csv");
    gen->add_option("--out-schema", gen_args.out_schema, "Output schema path")
        ->default_val("schema.json");
    gen->add_option("--out-truth", gen_args.out_truth, "Output ground-truth path")
        ->default_val("truth.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse diagnostic
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            if (*beta_opt) run_args.beta = beta_flag;
            return cmd_run(run_args);
        }
        if (eval->parsed()) return cmd_eval(eval_solution, eval_truth);
        if (gen->parsed()) return cmd_gen(gen_args);
    } catch (const hbic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_input_error() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
