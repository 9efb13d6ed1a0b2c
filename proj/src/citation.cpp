#include "mye/citation.hpp"

#include <algorithm>

namespace mye::citation {

std::vector<YearWindow> simple_windows(const MaskedGraph& g) {
    const AcademicGraph& base = g.base();
    std::vector<YearWindow> windows(g.num_papers());
    for (PaperIndex p : g.missing()) {
        YearWindow& w = windows[p];
        for (PaperIndex cited : base.references(p)) {
            if (auto y = g.year(cited)) w.lower.raise_lower(Bound::at(*y));
        }
        for (PaperIndex citing : base.cited_by(p)) {
            if (auto y = g.year(citing)) w.upper.lower_upper(Bound::at(*y));
        }
    }
    return windows;
}

namespace {

std::size_t normalize_all(std::vector<YearWindow>& windows) {
    std::size_t swapped = 0;
    for (auto& w : windows) swapped += w.normalize() ? 1 : 0;
    return swapped;
}

// One visit of edge (t, f). With `toward_known`, known-year endpoints also
// receive bounds (their pretend-windows); known endpoints always transmit
// their real year.
std::size_t relax(const MaskedGraph& g, const Citation& e, std::vector<YearWindow>& w, bool toward_known) {
    const PaperIndex t = e.cited;
    const PaperIndex f = e.citing;
    const auto yt = g.year(t);
    const auto yf = g.year(f);
    std::size_t updates = 0;

    if (!yf || toward_known) {
        const Bound from_t = yt ? Bound::at(*yt) : w[t].lower;
        updates += w[f].lower.raise_lower(from_t) ? 1 : 0;
    }
    if (!yt || toward_known) {
        const Bound from_f = yf ? Bound::at(*yf) : w[f].upper;
        updates += w[t].upper.lower_upper(from_f) ? 1 : 0;
    }
    return updates;
}

std::vector<YearWindow> propagate(const MaskedGraph& g, std::span<const Citation> order, bool toward_known,
                                  Diagnostics* diag, PropagationTrace* trace) {
    std::vector<YearWindow> windows(g.num_papers());
    std::size_t passes = 0;
    while (true) {
        std::size_t updates = 0;
        for (const Citation& e : order) updates += relax(g, e, windows, toward_known);
        ++passes;
        if (trace) {
            trace->updates_per_pass.push_back(updates);
            trace->windows_after_pass.push_back(windows);
        }
        if (updates == 0) break;
    }
    const std::size_t swapped = normalize_all(windows);
    if (diag) {
        diag->swapped_windows += swapped;
        diag->rounds = passes;
    }
    return windows;
}

}  // namespace

std::vector<YearWindow> advanced_windows(const MaskedGraph& g, Diagnostics* diag) {
    return propagate(g, g.base().citations(), false, diag, nullptr);
}

std::vector<YearWindow> advanced_windows(const MaskedGraph& g, std::span<const Citation> order, Diagnostics* diag,
                                         PropagationTrace* trace) {
    return propagate(g, order, false, diag, trace);
}

TrainingSet::TrainingSet(std::vector<TrainingTuple> tuples) : tuples_(std::move(tuples)) {
    for (const auto& t : tuples_) {
        auto& sum = index_[{t.type, t.bound}];
        sum.total += t.year;
        ++sum.count;
    }
}

std::optional<Year> TrainingSet::lookup(WindowType type, Year bound) const {
    if (type != WindowType::Type2 && type != WindowType::Type3) return std::nullopt;
    auto it = index_.find({type, bound});
    if (it == index_.end()) return std::nullopt;
    const auto [total, count] = it->second;
    // round(total / count), halves up: floor((2 * total + count) / (2 * count))
    return static_cast<Year>(floor_div(2 * total + count, 2 * count));
}

WindowsWithTraining windows_with_training(const MaskedGraph& g, Diagnostics* diag) {
    WindowsWithTraining out;
    out.windows = propagate(g, g.base().citations(), true, diag, nullptr);
    std::vector<TrainingTuple> tuples;
    for (PaperIndex p = 0; p < g.num_papers(); ++p) {
        const auto y = g.year(p);
        if (!y) continue;
        const YearWindow& w = out.windows[p];
        switch (w.type()) {
            case WindowType::Type2: tuples.push_back({*y, WindowType::Type2, w.lower.value()}); break;
            case WindowType::Type3: tuples.push_back({*y, WindowType::Type3, w.upper.value()}); break;
            default: break;
        }
    }
    out.training = TrainingSet(std::move(tuples));
    return out;
}

Estimate simple_year(const YearWindow& w) {
    switch (w.type()) {
        case WindowType::Type1: return midpoint_year(w.lower.value(), w.upper.value());
        case WindowType::Type2: return w.lower.value();
        case WindowType::Type3: return w.upper.value();
        case WindowType::Type4: return std::nullopt;
    }
    return std::nullopt;
}

Estimate calibrated_year(const YearWindow& w, const TrainingSet& t) {
    switch (w.type()) {
        case WindowType::Type2:
            if (auto d = t.lookup(WindowType::Type2, w.lower.value())) return d;
            break;
        case WindowType::Type3:
            if (auto d = t.lookup(WindowType::Type3, w.upper.value())) return d;
            break;
        default: break;
    }
    return simple_year(w);
}

Estimation estimate(const MaskedGraph& g, Variant variant) {
    Estimation out = make_estimation(g);
    const YearClamp clamp(g.base().input_window());

    std::vector<YearWindow> windows;
    TrainingSet training;
    switch (variant) {
        case Variant::SS: windows = simple_windows(g); break;
        case Variant::AS: windows = advanced_windows(g, &out.diagnostics); break;
        case Variant::AA: {
            auto wt = windows_with_training(g, &out.diagnostics);
            windows = std::move(wt.windows);
            training = std::move(wt.training);
            break;
        }
    }
    if (variant == Variant::SS) out.diagnostics.rounds = 1;

    for (PaperIndex p : out.targets) {
        out.window[p] = windows[p];
        const Estimate raw = variant == Variant::AA ? calibrated_year(windows[p], training) : simple_year(windows[p]);
        out.year[p] = clamp(raw, out.diagnostics);
    }
    return out;
}

}  // namespace mye::citation
