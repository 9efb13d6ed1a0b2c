#include "mye/hetero.hpp"

#include <algorithm>

#include "mye/citation.hpp"
#include "rounds.hpp"

namespace mye::hetero {

using authorship::AuthorWindow;
using authorship::CoauthorPairIndex;
using authorship::Gamma;

std::string_view to_string(SourceCase c) {
    switch (c) {
        case SourceCase::A: return "a";
        case SourceCase::B: return "b";
        case SourceCase::C: return "c";
        case SourceCase::D: return "d";
    }
    return "?";
}

CombinedWindow combine_windows(const YearWindow& cw, const YearWindow& aw) {
    const bool has_c = cw.type() != WindowType::Type4;
    const bool has_a = aw.type() != WindowType::Type4;
    if (!has_c && !has_a) return {YearWindow::unbounded(), SourceCase::A};
    if (!has_c) return {aw, SourceCase::B};
    if (!has_a) return {cw, SourceCase::C};

    const Year a_lo = aw.lower.value();
    const Year a_hi = aw.upper.value();
    YearWindow g;
    switch (cw.type()) {
        case WindowType::Type1: {
            const Year c_lo = cw.lower.value();
            const Year c_hi = cw.upper.value();
            if (a_hi < c_lo || a_lo > c_hi) {
                g = cw;
            } else {
                g = YearWindow::closed(std::max(c_lo, a_lo), std::min(c_hi, a_hi));
            }
            break;
        }
        case WindowType::Type2: {
            const Year c_lo = cw.lower.value();
            g = a_hi < c_lo ? YearWindow::closed(c_lo, c_lo) : YearWindow::closed(std::max(c_lo, a_lo), a_hi);
            break;
        }
        case WindowType::Type3: {
            const Year c_hi = cw.upper.value();
            g = a_lo > c_hi ? YearWindow::closed(c_hi, c_hi) : YearWindow::closed(a_lo, std::min(c_hi, a_hi));
            break;
        }
        case WindowType::Type4: break;
    }
    return {g, SourceCase::D};
}

namespace {

Estimation combine_rounds(const MaskedGraph& g, const std::vector<YearWindow>& citation_windows, bool single_pass,
                          authorship::IterationTrace* trace, Diagnostics citation_diag) {
    Estimation out = make_estimation(g);
    out.diagnostics.swapped_windows = citation_diag.swapped_windows;
    detail::run_rounds(
        g, out, single_pass,
        [&](PaperIndex p, const std::vector<AuthorWindow>& aw) {
            const auto combined = combine_windows(citation_windows[p], authorship::paper_window(g.base(), p, aw));
            return std::pair{citation::simple_year(combined.window), combined.window};
        },
        trace);
    return out;
}

}  // namespace

Estimation estimate_ssba(const MaskedGraph& g) {
    return combine_rounds(g, citation::simple_windows(g), true, nullptr, {});
}

Estimation estimate_asiter(const MaskedGraph& g, authorship::IterationTrace* trace) {
    Diagnostics diag;
    const auto windows = citation::advanced_windows(g, &diag);
    return combine_rounds(g, windows, false, trace, diag);
}

std::optional<Year> weighted_year_windowed(PaperIndex p, const CoauthorPairIndex& idx, const MaskedGraph& g,
                                           Gamma gamma, Year lo, Year hi) {
    return authorship::weighted_year(p, idx, g, gamma, std::pair{lo, hi});
}

std::pair<Year, Year> calibrated_search_window(WindowType type, Year bound, Year calibrated) {
    if (type == WindowType::Type2) {
        const Year delta = std::max(calibrated - bound, 0);
        return {bound, bound + 2 * delta};
    }
    const Year delta = std::max(bound - calibrated, 0);
    return {bound - 2 * delta, bound};
}

Estimation estimate_adviter(const MaskedGraph& g, Gamma gamma, authorship::IterationTrace* trace) {
    Estimation out = make_estimation(g);
    auto citation_part = citation::windows_with_training(g, &out.diagnostics);
    const auto& cw = citation_part.windows;
    const auto idx = CoauthorPairIndex::build(g.base(), g.missing());

    // Calibrated years and coauthor averages depend only on the static
    // citation windows and known years, so they are computed once.
    std::vector<std::optional<Year>> calibrated(g.num_papers());
    std::vector<std::optional<Year>> paired(g.num_papers());
    for (PaperIndex p : out.targets) {
        const YearWindow& w = cw[p];
        switch (w.type()) {
            case WindowType::Type1:
                paired[p] = weighted_year_windowed(p, idx, g, gamma, w.lower.value(), w.upper.value());
                break;
            case WindowType::Type2:
            case WindowType::Type3: {
                const Year bound = w.type() == WindowType::Type2 ? w.lower.value() : w.upper.value();
                const Year d = citation_part.training.lookup(w.type(), bound).value_or(bound);
                calibrated[p] = d;
                const auto [lo, hi] = calibrated_search_window(w.type(), bound, d);
                paired[p] = weighted_year_windowed(p, idx, g, gamma, lo, hi);
                break;
            }
            case WindowType::Type4: paired[p] = authorship::weighted_year(p, idx, g, gamma); break;
        }
    }

    detail::run_rounds(
        g, out, false,
        [&](PaperIndex p, const std::vector<AuthorWindow>& aw_all) {
            const YearWindow& c = cw[p];
            const YearWindow a = authorship::paper_window(g.base(), p, aw_all);
            const YearWindow combined = combine_windows(c, a).window;
            if (paired[p]) return std::pair{paired[p], combined};

            const bool has_a = a.type() != WindowType::Type4;
            Estimate e;
            switch (c.type()) {
                case WindowType::Type2: {
                    const bool disjoint = has_a && a.upper.value() < c.lower.value();
                    e = (disjoint || combined.contains(*calibrated[p])) ? calibrated[p]
                                                                        : citation::simple_year(combined);
                    break;
                }
                case WindowType::Type3: {
                    const bool disjoint = has_a && a.lower.value() > c.upper.value();
                    e = (disjoint || combined.contains(*calibrated[p])) ? calibrated[p]
                                                                        : citation::simple_year(combined);
                    break;
                }
                default: e = citation::simple_year(combined); break;
            }
            return std::pair{e, combined};
        },
        trace);
    return out;
}

}  // namespace mye::hetero
