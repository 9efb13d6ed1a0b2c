#include "mye/authorship.hpp"

#include <algorithm>

#include "mye/citation.hpp"
#include "rounds.hpp"

namespace mye::authorship {

std::vector<AuthorWindow> author_windows(const MaskedGraph& g, std::span<const Estimate> estimates) {
    const AcademicGraph& base = g.base();
    std::vector<AuthorWindow> windows(base.num_authors());
    for (AuthorIndex a = 0; a < base.num_authors(); ++a) {
        AuthorWindow& w = windows[a];
        for (PaperIndex p : base.papers_of(a)) {
            std::optional<Year> y = g.year(p);
            if (!y && !estimates.empty()) y = estimates[p];
            if (!y) continue;
            if (w.is_open()) {
                w.min = w.max = Bound::at(*y);
            } else {
                w.min = Bound::at(std::min(w.min.value(), *y));
                w.max = Bound::at(std::max(w.max.value(), *y));
            }
        }
    }
    return windows;
}

YearWindow paper_window(const AcademicGraph& g, PaperIndex p, std::span<const AuthorWindow> authors) {
    Bound max_min;
    Bound min_max;
    for (AuthorIndex a : g.authors_of(p)) {
        const AuthorWindow& w = authors[a];
        if (w.is_open()) continue;
        max_min.raise_lower(w.min);
        min_max.lower_upper(w.max);
    }
    if (max_min.is_open()) return YearWindow::unbounded();
    const Year lo = std::min(max_min.value(), min_max.value());
    const Year hi = std::max(max_min.value(), min_max.value());
    return YearWindow::closed(lo, hi);
}

CoauthorPairIndex CoauthorPairIndex::build(const AcademicGraph& g, std::span<const PaperIndex> papers) {
    CoauthorPairIndex idx;
    idx.pairs_.resize(g.num_papers());
    std::vector<std::uint32_t> shared(g.num_papers(), 0);
    std::vector<PaperIndex> touched;
    for (PaperIndex p : papers) {
        for (AuthorIndex a : g.authors_of(p)) {
            for (PaperIndex q : g.papers_of(a)) {
                if (q == p) continue;
                if (shared[q]++ == 0) touched.push_back(q);
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = idx.pairs_[p];
        for (PaperIndex q : touched) {
            if (shared[q] >= 2) row.push_back({q, shared[q]});
            shared[q] = 0;
        }
        touched.clear();
        idx.total_pairs_ += row.size();
    }
    return idx;
}

CoauthorPairIndex CoauthorPairIndex::build_all(const AcademicGraph& g) {
    std::vector<PaperIndex> all(g.num_papers());
    for (PaperIndex p = 0; p < all.size(); ++p) all[p] = p;
    return build(g, all);
}

std::span<const CoauthorPairIndex::Pair> CoauthorPairIndex::pairs(PaperIndex p) const {
    if (p >= pairs_.size()) return {};
    return pairs_[p];
}

std::uint32_t CoauthorPairIndex::weight(PaperIndex p, PaperIndex q) const {
    auto row = pairs(p);
    auto it = std::lower_bound(row.begin(), row.end(), q, [](const Pair& e, PaperIndex x) { return e.paper < x; });
    return (it != row.end() && it->paper == q) ? it->weight : 0;
}

std::optional<Year> weighted_year(PaperIndex p, const CoauthorPairIndex& idx, const MaskedGraph& g, Gamma gamma,
                                  std::optional<std::pair<Year, Year>> window) {
    double weight_sum = 0;
    double offset_sum = 0;
    std::optional<Year> base;
    for (const auto& [q, w] : idx.pairs(p)) {
        const auto y = g.year(q);
        if (!y) continue;
        if (window && (*y < window->first || *y > window->second)) continue;
        if (!base) base = *y;
        const double weight = std::pow(static_cast<double>(w), gamma.value());
        weight_sum += weight;
        offset_sum += weight * (*y - *base);
    }
    if (!base) return std::nullopt;
    return *base + round_year(offset_sum / weight_sum);
}

Estimation estimate_ba(const MaskedGraph& g, IterationTrace* trace) {
    Estimation out = make_estimation(g);
    detail::run_rounds(
        g, out, true,
        [&](PaperIndex p, const std::vector<AuthorWindow>& aw) {
            const YearWindow w = paper_window(g.base(), p, aw);
            return std::pair{citation::simple_year(w), w};
        },
        trace);
    return out;
}

Estimation estimate_iter(const MaskedGraph& g, IterationTrace* trace) {
    Estimation out = make_estimation(g);
    detail::run_rounds(
        g, out, false,
        [&](PaperIndex p, const std::vector<AuthorWindow>& aw) {
            const YearWindow w = paper_window(g.base(), p, aw);
            return std::pair{citation::simple_year(w), w};
        },
        trace);
    return out;
}

Estimation estimate_adviter(const MaskedGraph& g, Gamma gamma, IterationTrace* trace) {
    Estimation out = make_estimation(g);
    const auto idx = CoauthorPairIndex::build(g.base(), g.missing());
    // The pair set and the known years are fixed across rounds.
    std::vector<std::optional<Year>> paired(g.num_papers());
    for (PaperIndex p : out.targets) paired[p] = weighted_year(p, idx, g, gamma);

    detail::run_rounds(
        g, out, false,
        [&](PaperIndex p, const std::vector<AuthorWindow>& aw) {
            const YearWindow w = paper_window(g.base(), p, aw);
            return std::pair{paired[p] ? paired[p] : citation::simple_year(w), w};
        },
        trace);
    return out;
}

}  // namespace mye::authorship
