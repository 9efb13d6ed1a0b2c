#include "mye/estimation.hpp"

#include <algorithm>

namespace mye {

std::size_t Estimation::covered() const {
    return static_cast<std::size_t>(
        std::count_if(targets.begin(), targets.end(), [&](PaperIndex p) { return year[p].has_value(); }));
}

Estimation make_estimation(const MaskedGraph& g) {
    Estimation e;
    e.targets = g.missing();
    e.year.assign(g.num_papers(), std::nullopt);
    e.window.assign(g.num_papers(), YearWindow::unbounded());
    return e;
}

}  // namespace mye
