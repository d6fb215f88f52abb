#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "hbic/discretize.hpp"
#include "hbic/error.hpp"
#include "hbic/generate.hpp"
#include "hbic/matrix_io.hpp"
#include "hbic/metrics.hpp"
#include "hbic/quality.hpp"
#include "hbic/rng.hpp"
#include "hbic/select.hpp"
#include "hbic/solution_io.hpp"
#include "hbic/synth.hpp"
#include "hbic/types.hpp"

namespace hbic {

struct RunConfig {
    int nbins = 10;
    Index rmin = 2;
    Index cmin = 2;
    double alpha = 0.5;
    SelectionMode select = SelectionMode::All;
    std::optional<int> beta;
    int threads = 1;  // 0 picks the hardware thread count
    std::uint64_t seed = 0;
};

struct RunOutcome {
    BiclusterSolution solution;
    bool saturated = false;  // best-beta wanted more candidates than exist
};

// The whole pipeline: discretize, grow candidates from every seed, score
// them on the original matrix, order by (fitness, rows, cols), then apply
// the selection mode.  Deterministic for a given input and config — the
// thread count only spreads the work.
inline RunOutcome run_pipeline(const HeteroMatrix& x, const RunConfig& cfg) {
    int threads = cfg.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;

    DiscreteMatrix d = discretize_matrix(x, cfg.nbins);
    std::vector<Bicluster> candidates = generate_candidates(d, cfg.rmin, cfg.cmin, threads);
    if (candidates.empty())
        raise(ErrorKind::EmptyCandidateSet,
              "no candidate bicluster satisfies the size floors; relax --rmin/--cmin");
    std::vector<QualityScore> scores = fitness_batch(x, candidates, cfg.alpha);

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a].fitness != scores[b].fitness) return scores[a].fitness < scores[b].fitness;
        return candidates[a] < candidates[b];
    });
    std::vector<QualityScore> sorted_scores;
    sorted_scores.reserve(order.size());
    for (std::size_t k : order) sorted_scores.push_back(scores[k]);

    SelectionResult picked = select_candidates(sorted_scores, cfg.select, cfg.beta);

    RunOutcome out;
    out.saturated = picked.saturated;
    out.solution.nbins = cfg.nbins;
    out.solution.rmin = cfg.rmin;
    out.solution.cmin = cfg.cmin;
    out.solution.alpha = cfg.alpha;
    out.solution.select = cfg.select;
    out.solution.beta = cfg.beta;
    out.solution.seed = cfg.seed;
    out.solution.n_candidates = static_cast<std::int64_t>(candidates.size());
    out.solution.biclusters.reserve(picked.kept.size());
    for (std::size_t pos : picked.kept)
        out.solution.biclusters.push_back({candidates[order[pos]], sorted_scores[pos]});
    return out;
}

// Just the bicluster sets of a solution, the shape the metrics consume.
inline std::vector<Bicluster> bicluster_sets(const BiclusterSolution& sol) {
    std::vector<Bicluster> out;
    out.reserve(sol.biclusters.size());
    for (const ScoredBicluster& sb : sol.biclusters) out.push_back(sb.bicluster);
    return out;
}

}  // namespace hbic
