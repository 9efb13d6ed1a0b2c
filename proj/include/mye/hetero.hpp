#pragma once

#include <optional>
#include <string_view>

#include "mye/authorship.hpp"
#include "mye/estimation.hpp"

/// Estimators over the combined citation + authorship network.
///
/// Each missing paper has a citation window and an author window. When both
/// carry information they are intersected; if they are disjoint the citation
/// window wins.
namespace mye::hetero {

/// Which of the two windows carried information.
enum class SourceCase : std::uint8_t {
    A,  ///< neither: Uncovered
    B,  ///< author window only
    C,  ///< citation window only
    D,  ///< both
};

std::string_view to_string(SourceCase c);

struct CombinedWindow {
    YearWindow window;
    SourceCase source;

    friend bool operator==(const CombinedWindow&, const CombinedWindow&) = default;
};

/// Combines a citation window with an author window (Type1 or Type4).
CombinedWindow combine_windows(const YearWindow& citation_window, const YearWindow& author_window);

/// Simple citation windows + one author-window pass.
Estimation estimate_ssba(const MaskedGraph& g);
/// Advanced citation windows + author-window rounds to a fixpoint.
Estimation estimate_asiter(const MaskedGraph& g, authorship::IterationTrace* trace = nullptr);

/// Consistent-coauthor average restricted to pair years in [lo, hi].
std::optional<Year> weighted_year_windowed(PaperIndex p, const authorship::CoauthorPairIndex& idx,
                                           const MaskedGraph& g, authorship::Gamma gamma, Year lo, Year hi);

/// Search window for the coauthor average around a one-sided citation
/// window: [bound, bound + 2 * delta] for Type2 and [bound - 2 * delta, bound]
/// for Type3, where delta is the distance from the bound to `calibrated`.
/// A non-positive delta collapses the window to the bound.
std::pair<Year, Year> calibrated_search_window(WindowType type, Year bound, Year calibrated);

/// Training-set calibrated windows + consistent-coauthor averages + author
/// window rounds.
Estimation estimate_adviter(const MaskedGraph& g, authorship::Gamma gamma,
                            authorship::IterationTrace* trace = nullptr);

}  // namespace mye::hetero
