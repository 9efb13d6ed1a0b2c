#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mye/estimation.hpp"
#include "mye/graph.hpp"
#include "mye/types.hpp"

/// Year estimation from the citation network alone.
///
/// Every citation (cited, citing) implies Y(cited) <= Y(citing). Windows are
/// derived either from one-hop known neighbours (simple) or by propagating
/// bounds through chains of missing-year papers until a pass makes no update
/// (advanced). A year is then read off the window, either by the midpoint /
/// bound rule or by a lookup into training tuples harvested from known papers.
namespace mye::citation {

/// One window per paper. Known-year papers get an unbounded window.
std::vector<YearWindow> simple_windows(const MaskedGraph& g);

/// Per-pass update counts of a propagation run; the last entry is always 0.
struct PropagationTrace {
    std::vector<std::size_t> updates_per_pass;
    std::vector<std::vector<YearWindow>> windows_after_pass;
};

/// Fixpoint of the bound transmission rules over missing-year papers, with
/// edges visited in (cited, citing) order.
std::vector<YearWindow> advanced_windows(const MaskedGraph& g, Diagnostics* diag = nullptr);

/// Same fixpoint with a caller-chosen edge visiting order. `order` must be a
/// permutation of g.base().citations().
std::vector<YearWindow> advanced_windows(const MaskedGraph& g, std::span<const Citation> order,
                                         Diagnostics* diag = nullptr, PropagationTrace* trace = nullptr);

/// (year, window type, bound value) harvested from a known-year paper whose
/// pretend-window is one-sided.
struct TrainingTuple {
    Year year;
    WindowType type;  ///< Type2 or Type3
    Year bound;

    friend auto operator<=>(const TrainingTuple&, const TrainingTuple&) = default;
};

/// Training tuples indexed by (type, bound) for mean lookups.
class TrainingSet {
public:
    TrainingSet() = default;
    explicit TrainingSet(std::vector<TrainingTuple> tuples);

    const std::vector<TrainingTuple>& tuples() const { return tuples_; }
    bool empty() const { return tuples_.empty(); }

    /// Mean year of tuples matching (type, bound) exactly, rounded half up;
    /// nullopt when nothing matches or `type` is not one-sided.
    std::optional<Year> lookup(WindowType type, Year bound) const;

private:
    struct Sum {
        long long total = 0;
        long long count = 0;
    };
    std::vector<TrainingTuple> tuples_;
    std::map<std::pair<WindowType, Year>, Sum> index_;
};

struct WindowsWithTraining {
    std::vector<YearWindow> windows;  ///< fixpoint windows; for known papers, their pretend-window
    TrainingSet training;
};

/// Propagation that also flows toward known-year papers, deriving a
/// pretend-window for each of them. Windows of missing papers equal
/// advanced_windows(); one training tuple is emitted per known paper whose
/// pretend-window is Type2 or Type3.
WindowsWithTraining windows_with_training(const MaskedGraph& g, Diagnostics* diag = nullptr);

/// Midpoint for Type1, the bound for Type2/Type3, Uncovered for Type4.
Estimate simple_year(const YearWindow& w);

/// d(type, bound) over a training set.
inline std::optional<Year> d_lookup(const TrainingSet& t, WindowType type, Year bound) {
    return t.lookup(type, bound);
}

/// Year from a window using the training set for one-sided windows, falling
/// back to simple_year() when no tuple matches.
Estimate calibrated_year(const YearWindow& w, const TrainingSet& t);

enum class Variant { SS, AS, AA };

/// SS: simple windows + simple year. AS: advanced windows + simple year.
/// AA: advanced windows + calibrated year.
Estimation estimate(const MaskedGraph& g, Variant variant);

}  // namespace mye::citation
