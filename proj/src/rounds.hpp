#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mye/authorship.hpp"
#include "mye/estimation.hpp"

namespace mye::detail {

/// Round loop shared by every estimator that feeds estimates back into
/// author windows. Each round recomputes author windows from known years and
/// the previous round's estimates, then asks `per_paper(p, author_windows)`
/// for a (estimate, window) pair for every missing paper. Stops when neither
/// the estimates nor the author windows change, or after max(|V_P|, 2) rounds.
template <typename PerPaper>
void run_rounds(const MaskedGraph& g, Estimation& out, bool single_pass, PerPaper&& per_paper,
                authorship::IterationTrace* trace) {
    const YearClamp clamp(g.base().input_window());
    const std::size_t cap = single_pass ? 1 : std::max<std::size_t>(g.num_papers(), 2);

    std::vector<Estimate> previous(g.num_papers());
    std::vector<authorship::AuthorWindow> previous_windows;
    bool first = true;

    for (std::size_t round = 1; round <= cap; ++round) {
        auto windows = authorship::author_windows(g, previous);
        std::vector<Estimate> current(g.num_papers());
        for (PaperIndex p : out.targets) {
            auto [estimate, window] = per_paper(p, std::as_const(windows));
            current[p] = clamp(estimate, out.diagnostics);
            out.window[p] = window;
        }
        if (trace) {
            trace->author_windows.push_back(windows);
            trace->estimates.push_back(current);
        }
        const bool changed = first || current != previous || windows != previous_windows;
        first = false;
        previous = std::move(current);
        previous_windows = std::move(windows);
        out.diagnostics.rounds = round;
        if (single_pass || !changed) break;
        if (round == cap) out.diagnostics.hit_round_cap = true;
    }
    out.year = std::move(previous);
}

}  // namespace mye::detail
