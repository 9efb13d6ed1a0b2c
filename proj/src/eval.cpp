#include "mye/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace mye {

FoldPlan plan_folds(const AcademicGraph& g, int k, std::uint64_t seed) {
    std::vector<PaperIndex> known;
    for (PaperIndex p = 0; p < g.num_papers(); ++p) {
        if (g.year(p)) known.push_back(p);
    }
    if (k < 2) throw EvalError(fmt::format("K must be at least 2, got {}", k));
    if (static_cast<std::size_t>(k) > known.size()) {
        throw EvalError(fmt::format("K={} exceeds the {} papers with a known year", k, known.size()));
    }
    Rng rng(seed);
    for (std::size_t i = known.size(); i > 1; --i) std::swap(known[i - 1], known[rng.below(i)]);

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.fold_of.assign(g.num_papers(), -1);
    plan.members.resize(k);
    for (std::size_t i = 0; i < known.size(); ++i) {
        const int f = static_cast<int>(i % k);
        plan.fold_of[known[i]] = f;
    }
    for (PaperIndex p = 0; p < g.num_papers(); ++p) {
        if (plan.fold_of[p] >= 0) plan.members[plan.fold_of[p]].push_back(p);
    }
    return plan;
}

std::vector<PaperIndex> independent_mask(const AcademicGraph& g, double eta, Rng& rng) {
    std::vector<PaperIndex> hidden;
    for (PaperIndex p = 0; p < g.num_papers(); ++p) {
        if (g.year(p) && rng.chance(eta)) hidden.push_back(p);
    }
    return hidden;
}

FoldMetrics score(const MaskedGraph& g, const Estimation& e) {
    FoldMetrics m;
    double abs_sum = 0;
    double sq_sum = 0;
    for (PaperIndex p : g.hidden()) {
        ++m.missing;
        if (!e.year[p]) continue;
        ++m.covered;
        const double err = std::abs(static_cast<double>(*e.year[p] - *g.true_year(p)));
        abs_sum += err;
        sq_sum += err * err;
    }
    m.coverage = m.missing == 0 ? 0.0 : static_cast<double>(m.covered) / static_cast<double>(m.missing);
    if (m.covered > 0) {
        m.mae = abs_sum / static_cast<double>(m.covered);
        m.rmse = std::sqrt(sq_sum / static_cast<double>(m.covered));
    }
    return m;
}

EvalReport evaluate(const AcademicGraph& g, Algorithm algorithm, int k, std::uint64_t seed, EvalOptions options) {
    const FoldPlan plan = plan_folds(g, k, seed);
    EvalReport r;
    r.algorithm = algorithm;
    r.k = k;
    r.seed = seed;
    r.gamma = options.gamma.value();
    r.folds.resize(k);

    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(k);
    auto worker = [&] {
        for (int f = next++; f < k; f = next++) {
            try {
                const MaskedGraph masked(g, plan.members[f]);
                r.folds[f] = score(masked, run(masked, algorithm, options.gamma));
            } catch (...) {
                errors[f] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::clamp<unsigned>(options.jobs, 1, static_cast<unsigned>(k));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    double coverage_sum = 0;
    double mae_sum = 0;
    double rmse_sum = 0;
    std::size_t scored = 0;
    for (const FoldMetrics& m : r.folds) {
        coverage_sum += m.coverage;
        if (!m.mae) {
            ++r.folds_without_coverage;
            continue;
        }
        mae_sum += *m.mae;
        rmse_sum += *m.rmse;
        ++scored;
    }
    r.coverage = coverage_sum / k;
    if (scored > 0) {
        r.mae = mae_sum / static_cast<double>(scored);
        r.rmse = rmse_sum / static_cast<double>(scored);
    }
    return r;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? fmt::format("{:.6f}", *v) : std::string(); }

}  // namespace

void write_csv_header(std::ostream& os) { os << "algo,network,eta,K,seed,fold,coverage,mae,rmse\n"; }

void write_csv_rows(std::ostream& os, const EvalReport& r) {
    const auto algo = algo_id(r.algorithm);
    const auto network = to_string(network_of(r.algorithm));
    for (std::size_t f = 0; f < r.folds.size(); ++f) {
        const FoldMetrics& m = r.folds[f];
        fmt::print(os, "{},{},{:.6f},{},{},{},{:.6f},{},{}\n", algo, network, r.eta(), r.k, r.seed, f, m.coverage,
                   cell(m.mae), cell(m.rmse));
    }
    fmt::print(os, "{},{},{:.6f},{},{},aggregate,{:.6f},{},{}\n", algo, network, r.eta(), r.k, r.seed, r.coverage,
               cell(r.mae), cell(r.rmse));
}

nlohmann::json to_json(const EvalReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::json folds = nlohmann::json::array();
    for (const FoldMetrics& m : r.folds) {
        folds.push_back({{"missing", m.missing},
                         {"covered", m.covered},
                         {"coverage", m.coverage},
                         {"mae", opt(m.mae)},
                         {"rmse", opt(m.rmse)}});
    }
    return {{"algo", algo_id(r.algorithm)},
            {"network", to_string(network_of(r.algorithm))},
            {"eta", r.eta()},
            {"K", r.k},
            {"seed", r.seed},
            {"gamma", r.gamma},
            {"coverage", r.coverage},
            {"mae", opt(r.mae)},
            {"rmse", opt(r.rmse)},
            {"folds_without_coverage", r.folds_without_coverage},
            {"folds", folds}};
}

}  // namespace mye
