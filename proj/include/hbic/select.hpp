#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hbic/error.hpp"
#include "hbic/types.hpp"

namespace hbic {

struct SelectionResult {
    std::vector<std::size_t> kept;  // indices into the scored candidate list
    bool saturated = false;         // best-beta asked for more than exists
};

// True iff `a` is at least as good on both objectives and strictly better on
// one, minimizing homogeneity and the complement of size.
inline bool dominates(const QualityScore& a, const QualityScore& b) {
    double ha = a.hiv_norm, sa = 1.0 - a.size_norm;
    double hb = b.hiv_norm, sb = 1.0 - b.size_norm;
    return ha <= hb && sa <= sb && (ha < hb || sa < sb);
}

namespace detail {

// Candidates 0..i* where i* marks the largest jump between consecutive
// fitness values.  Ties go to the earliest jump; a flat list (no positive
// jump) keeps everything.
inline SelectionResult select_distance_gap(const std::vector<QualityScore>& scores) {
    SelectionResult r;
    std::size_t cut = scores.size();  // one past the last kept index
    double best_gap = 0.0;
    for (std::size_t i = 0; i + 1 < scores.size(); ++i) {
        double gap = scores[i + 1].fitness - scores[i].fitness;
        if (gap > best_gap) {
            best_gap = gap;
            cut = i + 1;
        }
    }
    for (std::size_t i = 0; i < cut; ++i) r.kept.push_back(i);
    return r;
}

// Non-dominated candidates (the first front only).  Exact duplicates never
// dominate each other, so they all stay.
inline SelectionResult select_pareto(const std::vector<QualityScore>& scores) {
    SelectionResult r;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < scores.size() && !dominated; ++j)
            if (j != i) dominated = dominates(scores[j], scores[i]);
        if (!dominated) r.kept.push_back(i);
    }
    return r;
}

}  // namespace detail

// Picks the final biclusters out of the scored candidates.  The list must
// already be sorted by ascending fitness (the pipeline's canonical order);
// the gap and best-beta modes depend on it.
inline SelectionResult select_candidates(const std::vector<QualityScore>& scores, SelectionMode mode,
                                         std::optional<int> beta = std::nullopt) {
    if (scores.empty()) raise(ErrorKind::EmptyCandidateSet, "selection needs at least one candidate");
    switch (mode) {
        case SelectionMode::All: {
            SelectionResult r;
            for (std::size_t i = 0; i < scores.size(); ++i) r.kept.push_back(i);
            return r;
        }
        case SelectionMode::BestBeta: {
            if (!beta) raise(ErrorKind::InvalidArgument, "best-beta selection requires beta");
            if (*beta < 1)
                raise(ErrorKind::InvalidArgument, "beta must be positive, got " + std::to_string(*beta));
            SelectionResult r;
            std::size_t take = std::min(static_cast<std::size_t>(*beta), scores.size());
            for (std::size_t i = 0; i < take; ++i) r.kept.push_back(i);
            r.saturated = static_cast<std::size_t>(*beta) > scores.size();
            return r;
        }
        case SelectionMode::DistanceGap:
            return detail::select_distance_gap(scores);
        case SelectionMode::ParetoFront:
            return detail::select_pareto(scores);
    }
    raise(ErrorKind::Internal, "unhandled selection mode");
}

}  // namespace hbic
