#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbic/error.hpp"
#include "hbic/synth.hpp"
#include "hbic/types.hpp"

namespace hbic {

namespace detail {

inline nlohmann::json bicluster_to_json(const Bicluster& b) {
    return nlohmann::json{{"rows", b.rows}, {"cols", b.cols}};
}

inline std::vector<Index> read_index_array(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array() || arr.empty())
        raise(ErrorKind::ParseError, std::string(what) + " must be a non-empty array");
    std::vector<Index> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            raise(ErrorKind::ParseError, std::string(what) + " entries must be non-negative integers");
        out.push_back(static_cast<Index>(v.get<std::int64_t>()));
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            raise(ErrorKind::ParseError, std::string(what) + " must be strictly increasing");
    return out;
}

}  // namespace detail

// Serializes a solution with per-bicluster scores and the run parameters
// that produced it.
inline std::string solution_to_json(const BiclusterSolution& sol) {
    nlohmann::json bics = nlohmann::json::array();
    for (const ScoredBicluster& sb : sol.biclusters) {
        nlohmann::json b = detail::bicluster_to_json(sb.bicluster);
        b["hiv"] = sb.score.hiv;
        b["size"] = sb.score.size;
        b["fitness"] = sb.score.fitness;
        bics.push_back(std::move(b));
    }
    nlohmann::json meta{{"nbins", sol.nbins},
                        {"rmin", sol.rmin},
                        {"cmin", sol.cmin},
                        {"alpha", sol.alpha},
                        {"select", to_string(sol.select)},
                        {"seed", sol.seed},
                        {"n_candidates", sol.n_candidates}};
    meta["beta"] = sol.beta ? nlohmann::json(*sol.beta) : nlohmann::json(nullptr);
    return nlohmann::json{{"biclusters", std::move(bics)}, {"meta", std::move(meta)}}.dump(2) + "\n";
}

// Ground truth uses the same bicluster shape, minus the scores, plus the
// generator configuration for provenance.
inline std::string truth_to_json(const GroundTruth& truth, const SynthConfig& cfg) {
    nlohmann::json bics = nlohmann::json::array();
    for (const Bicluster& b : truth.biclusters) bics.push_back(detail::bicluster_to_json(b));
    nlohmann::json meta{{"rows", cfg.n_rows},        {"cols", cfg.n_cols},
                        {"cat_frac", cfg.cat_fraction}, {"nbics", cfg.n_bics},
                        {"bic_rows", cfg.bic_rows},  {"bic_cols", cfg.bic_cols},
                        {"noise", cfg.noise_level},  {"seed", cfg.seed}};
    return nlohmann::json{{"biclusters", std::move(bics)}, {"meta", std::move(meta)}}.dump(2) + "\n";
}

// Reads the bicluster sets out of either file flavor (solution or truth);
// scores and meta are ignored.  Each bicluster must already be canonical:
// strictly increasing non-negative rows and cols.
inline std::vector<Bicluster> read_biclusters(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::ParseError, std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("biclusters") || !doc["biclusters"].is_array())
        raise(ErrorKind::ParseError, "expected an object with a 'biclusters' array");
    std::vector<Bicluster> out;
    for (const auto& entry : doc["biclusters"]) {
        if (!entry.is_object() || !entry.contains("rows") || !entry.contains("cols"))
            raise(ErrorKind::ParseError, "each bicluster needs 'rows' and 'cols' arrays");
        Bicluster b;
        b.rows = detail::read_index_array(entry["rows"], "rows");
        b.cols = detail::read_index_array(entry["cols"], "cols");
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace hbic
