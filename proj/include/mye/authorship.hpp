#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mye/estimation.hpp"
#include "mye/graph.hpp"
#include "mye/types.hpp"

/// Year estimation from the author-paper bipartite network.
///
/// Each author gets an active window spanning the years of their dated
/// papers; a missing paper's window is the overlap of its authors' windows
/// (with the two ends swapped when the authors never overlap). The iterative
/// variants feed estimates back into author windows each round; AdvIter first
/// tries a weighted average over papers that share two or more authors.
namespace mye::authorship {

/// Author active window. Both ends are finite or both are open.
struct AuthorWindow {
    Bound min;
    Bound max;

    bool is_open() const { return min.is_open(); }
    friend bool operator==(const AuthorWindow&, const AuthorWindow&) = default;
};

/// Weighting exponent for the consistent-coauthor average. 0 gives a plain mean.
class Gamma {
public:
    constexpr Gamma() = default;
    explicit Gamma(double value) : value_(value) {
        if (!std::isfinite(value) || value < 0) throw std::invalid_argument("gamma must be finite and non-negative");
    }
    constexpr double value() const { return value_; }

private:
    double value_ = 1.0;
};

/// Window of every author from known years of their papers plus any supplied
/// estimates. `estimates` is indexed by paper; pass an empty span for none.
std::vector<AuthorWindow> author_windows(const MaskedGraph& g, std::span<const Estimate> estimates);

/// [min(maxMin, minMax), max(maxMin, minMax)] over the paper's authors;
/// unbounded if the paper has no author with a finite window.
YearWindow paper_window(const AcademicGraph& g, PaperIndex p, std::span<const AuthorWindow> authors);

/// Per-round snapshots of an iterative run (round 1 first).
struct IterationTrace {
    std::vector<std::vector<AuthorWindow>> author_windows;
    std::vector<std::vector<Estimate>> estimates;
};

/// Shared authors between papers, kept only for pairs sharing two or more.
///
/// Pairs are stored per paper as (other paper, count) sorted by paper index.
class CoauthorPairIndex {
public:
    struct Pair {
        PaperIndex paper;
        std::uint32_t weight;
        friend bool operator==(const Pair&, const Pair&) = default;
    };

    CoauthorPairIndex() = default;

    /// Pairs for the given papers only.
    static CoauthorPairIndex build(const AcademicGraph& g, std::span<const PaperIndex> papers);
    /// Pairs for every paper.
    static CoauthorPairIndex build_all(const AcademicGraph& g);

    std::span<const Pair> pairs(PaperIndex p) const;
    /// w(p, q) if stored, else 0.
    std::uint32_t weight(PaperIndex p, PaperIndex q) const;
    bool empty() const { return total_pairs_ == 0; }
    std::size_t total_pairs() const { return total_pairs_; }

private:
    std::vector<std::vector<Pair>> pairs_;
    std::size_t total_pairs_ = 0;
};

/// Gamma-weighted mean year over known papers paired with `p`, optionally
/// restricted to pair years inside [window->first, window->second].
std::optional<Year> weighted_year(PaperIndex p, const CoauthorPairIndex& idx, const MaskedGraph& g, Gamma gamma,
                                  std::optional<std::pair<Year, Year>> window = std::nullopt);

/// One pass from known years only.
Estimation estimate_ba(const MaskedGraph& g, IterationTrace* trace = nullptr);
/// Ba repeated, feeding estimates back, until nothing changes.
Estimation estimate_iter(const MaskedGraph& g, IterationTrace* trace = nullptr);
/// Iter with the consistent-coauthor average taking priority when available.
Estimation estimate_adviter(const MaskedGraph& g, Gamma gamma, IterationTrace* trace = nullptr);

}  // namespace mye::authorship
