#pragma once

#include <vector>

#include "mye/graph.hpp"
#include "mye/types.hpp"

namespace mye {

/// Output of one estimator run over a MaskedGraph.
///
/// `year` and `window` are indexed by PaperIndex and sized to the graph;
/// only entries listed in `targets` (the missing-year papers) are meaningful.
struct Estimation {
    std::vector<PaperIndex> targets;
    std::vector<Estimate> year;
    std::vector<YearWindow> window;
    Diagnostics diagnostics;

    std::size_t covered() const;
    friend bool operator==(const Estimation&, const Estimation&) = default;
};

Estimation make_estimation(const MaskedGraph& g);

/// Clamps estimates to the graph's input window widened by five years.
class YearClamp {
public:
    static constexpr Year kMargin = 5;

    explicit YearClamp(const YearRange& input_window)
        : min_(input_window.min - kMargin), max_(input_window.max + kMargin) {}

    Estimate operator()(Estimate e, Diagnostics& diag) const {
        if (!e) return e;
        if (*e < min_) {
            ++diag.clamped_estimates;
            return min_;
        }
        if (*e > max_) {
            ++diag.clamped_estimates;
            return max_;
        }
        return e;
    }

private:
    Year min_;
    Year max_;
};

}  // namespace mye
