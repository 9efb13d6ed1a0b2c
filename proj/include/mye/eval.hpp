#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "mye/algorithms.hpp"
#include "mye/random.hpp"

/// K-fold masking harness and the coverage / MAE / RMSE metrics.
namespace mye {

class EvalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Assignment of every known-year paper to one of K folds.
struct FoldPlan {
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<int> fold_of;                      ///< per paper; -1 for papers without a year
    std::vector<std::vector<PaperIndex>> members;  ///< per fold, in index order

    friend bool operator==(const FoldPlan&, const FoldPlan&) = default;
};

/// Seeded Fisher-Yates over known papers in index order, then round-robin,
/// so the first (n mod K) folds get one extra paper. Throws EvalError for
/// K < 2 or K above the number of known papers.
FoldPlan plan_folds(const AcademicGraph& g, int k, std::uint64_t seed);

/// Hides each known paper independently with probability `eta`.
std::vector<PaperIndex> independent_mask(const AcademicGraph& g, double eta, Rng& rng);

struct FoldMetrics {
    std::size_t missing = 0;  ///< hidden papers scored
    std::size_t covered = 0;
    double coverage = 0;
    std::optional<double> mae;  ///< empty when nothing was covered
    std::optional<double> rmse;

    friend bool operator==(const FoldMetrics&, const FoldMetrics&) = default;
};

/// Scores an estimation against the true years of the hidden papers only.
FoldMetrics score(const MaskedGraph& g, const Estimation& e);

struct EvalReport {
    Algorithm algorithm{};
    int k = 0;
    std::uint64_t seed = 0;
    double gamma = 1.0;
    std::vector<FoldMetrics> folds;
    double coverage = 0;  ///< mean over all folds
    std::optional<double> mae;  ///< mean over folds with at least one covered paper
    std::optional<double> rmse;
    std::size_t folds_without_coverage = 0;

    double eta() const { return 1.0 / k; }
    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

struct EvalOptions {
    authorship::Gamma gamma;
    unsigned jobs = 1;
};

/// Masks each fold in turn, runs the algorithm and aggregates. Folds run on
/// up to `jobs` threads; results are reduced in fold order.
EvalReport evaluate(const AcademicGraph& g, Algorithm algorithm, int k, std::uint64_t seed, EvalOptions options = {});

void write_csv_header(std::ostream& os);
/// One row per fold plus an `aggregate` row. Empty mae/rmse cells mark
/// folds with no covered paper.
void write_csv_rows(std::ostream& os, const EvalReport& r);
nlohmann::json to_json(const EvalReport& r);

}  // namespace mye
