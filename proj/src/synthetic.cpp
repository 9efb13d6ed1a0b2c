#include "mye/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "mye/random.hpp"

namespace mye {

namespace {

void validate(const SyntheticParams& p) {
    if (p.years.min > p.years.max) throw SyntheticError("year range is empty");
    for (double v : {p.citations_per_paper, p.authors_per_paper}) {
        if (!std::isfinite(v) || v < 0) throw SyntheticError("means must be finite and non-negative");
    }
    if (!(p.missing_fraction >= 0 && p.missing_fraction <= 1)) throw SyntheticError("missing fraction outside [0, 1]");
    if (p.team_size == 0) throw SyntheticError("team size must be positive");
    if (p.papers > 0 && p.authors_per_paper > 0 && p.authors == 0) {
        throw SyntheticError("papers need authors but the author pool is empty");
    }
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

struct Career {
    Year start;
    Year end;
    bool active(Year y) const { return y >= start && y <= end; }
};

}  // namespace

AcademicGraph generate_synthetic(const SyntheticParams& params, std::uint64_t seed) {
    validate(params);
    Rng rng(seed);
    const std::size_t paper_width = fmt::formatted_size("{}", std::max<std::size_t>(params.papers, 1) - 1);
    const std::size_t author_width = fmt::formatted_size("{}", std::max<std::size_t>(params.authors, 1) - 1);
    auto paper_name = [&](std::size_t i) { return fmt::format("p{:0{}}", i, paper_width); };
    auto author_name = [&](std::size_t i) { return fmt::format("a{:0{}}", i, author_width); };

    std::vector<Career> careers(params.authors);
    for (auto& c : careers) {
        c.start = static_cast<Year>(rng.between(params.years.min, params.years.max));
        c.end = std::min<Year>(params.years.max, c.start + static_cast<Year>(rng.between(3, 20)));
    }
    const std::size_t teams = params.authors == 0 ? 0 : (params.authors + params.team_size - 1) / params.team_size;

    std::vector<Year> years(params.papers);
    for (auto& y : years) y = static_cast<Year>(rng.between(params.years.min, params.years.max));

    const YearRange window{std::min(YearRange{}.min, params.years.min), std::max(YearRange{}.max, params.years.max)};
    GraphBuilder builder(window);
    for (std::size_t a = 0; a < params.authors; ++a) builder.add_author(author_name(a));

    for (std::size_t i = 0; i < params.papers; ++i) {
        const bool hide = params.missing_fraction > 0 && rng.chance(params.missing_fraction);
        builder.add_paper(paper_name(i), hide ? std::nullopt : std::optional<Year>(years[i]));

        std::size_t count = params.authors_per_paper >= 1 ? 1 + rng.poisson(params.authors_per_paper - 1)
                                                          : rng.poisson(params.authors_per_paper);
        count = std::min(count, params.authors);
        if (count == 0) continue;

        const std::size_t team = rng.below(teams);
        const std::size_t first = team * params.team_size;
        const std::size_t last = std::min(params.authors, first + params.team_size);
        std::vector<std::size_t> active;
        std::vector<std::size_t> idle;
        for (std::size_t a = first; a < last; ++a) (careers[a].active(years[i]) ? active : idle).push_back(a);
        shuffle(active, rng);
        shuffle(idle, rng);
        std::vector<std::size_t> chosen = active;
        chosen.insert(chosen.end(), idle.begin(), idle.end());
        chosen.resize(std::min(chosen.size(), count));
        while (chosen.size() < count) {
            const std::size_t a = rng.below(params.authors);
            if (std::find(chosen.begin(), chosen.end(), a) == chosen.end()) chosen.push_back(a);
        }
        for (std::size_t a : chosen) builder.add_authorship(author_name(a), paper_name(i));
    }

    // Citations go to papers of the same or an earlier year, with a bias
    // toward the last five years.
    std::vector<std::size_t> by_year(params.papers);
    std::iota(by_year.begin(), by_year.end(), 0);
    std::stable_sort(by_year.begin(), by_year.end(), [&](std::size_t x, std::size_t y) { return years[x] < years[y]; });
    std::vector<Year> sorted_years(params.papers);
    for (std::size_t k = 0; k < params.papers; ++k) sorted_years[k] = years[by_year[k]];

    for (std::size_t i = 0; i < params.papers; ++i) {
        const Year y = years[i];
        const std::size_t eligible_end = std::upper_bound(sorted_years.begin(), sorted_years.end(), y) - sorted_years.begin();
        const std::size_t recent_begin =
            std::lower_bound(sorted_years.begin(), sorted_years.end(), y - 5) - sorted_years.begin();
        if (eligible_end <= 1) continue;
        const std::size_t count = std::min<std::size_t>(rng.poisson(params.citations_per_paper), (eligible_end - 1) / 2);
        std::unordered_set<std::size_t> cited;
        for (std::size_t attempt = 0; cited.size() < count && attempt < 20 * count; ++attempt) {
            const bool recent = rng.chance(0.7) && eligible_end > recent_begin;
            const std::size_t k = recent ? recent_begin + rng.below(eligible_end - recent_begin) : rng.below(eligible_end);
            const std::size_t target = by_year[k];
            if (target == i || !cited.insert(target).second) continue;
            builder.add_citation(paper_name(target), paper_name(i));
        }
    }
    return builder.build();
}

namespace {

struct PaperRow {
    const char* id;
    std::optional<Year> year;
};

AcademicGraph assemble(std::initializer_list<PaperRow> papers,
                       std::initializer_list<std::pair<const char*, const char*>> citations,
                       std::initializer_list<std::pair<const char*, const char*>> authorships) {
    GraphBuilder b;
    for (const auto& p : papers) b.add_paper(p.id, p.year);
    for (const auto& [cited, citing] : citations) b.add_citation(cited, citing);
    for (const auto& [author, paper] : authorships) b.add_authorship(author, paper);
    return b.build();
}

}  // namespace

AcademicGraph citation_example() {
    return assemble(
        {{"a", {}}, {"b", {}}, {"c", 1993}, {"d", 1999}, {"e", {}}, {"f", 2003},
         {"g", 2001}, {"h", 2007}, {"i", {}}, {"j", {}}, {"k", 2005}, {"l", 2006}},
        {{"a", "d"}, {"c", "d"}, {"d", "e"}, {"e", "h"}, {"e", "i"},
         {"f", "i"}, {"g", "i"}, {"i", "j"}, {"i", "k"}, {"i", "l"}},
        {});
}

AcademicGraph authorship_example() {
    return assemble({{"a", 1996}, {"b", 1999}, {"c", {}}, {"d", 2002}, {"e", 2003}, {"f", {}}, {"g", {}}, {"h", {}}},
                    {},
                    {{"i", "a"}, {"i", "b"}, {"i", "c"},
                     {"j", "c"}, {"j", "d"}, {"j", "e"},
                     {"k", "c"}, {"k", "d"}, {"k", "f"},
                     {"l", "f"}, {"l", "g"}});
}

AcademicGraph chain_topology(int which) {
    switch (which) {
        case 1: return assemble({{"a", 2002}, {"b", 2000}, {"c", 2004}}, {{"b", "a"}, {"b", "c"}}, {});
        case 2: return assemble({{"a", 2000}, {"b", 2004}, {"c", 2002}}, {{"a", "b"}, {"c", "b"}}, {});
        case 3: return assemble({{"a", 2004}, {"b", 2002}, {"c", 2000}}, {{"b", "a"}, {"c", "b"}}, {});
        case 4: return assemble({{"a", 2002}, {"b", 2004}, {"c", 2000}}, {{"a", "b"}, {"c", "a"}}, {});
        case 5: return assemble({{"a", 2002}, {"b", 2000}, {"c", 2004}}, {{"b", "a"}, {"a", "c"}}, {});
        case 6: return assemble({{"a", 2004}, {"b", 2002}, {"c", 2000}}, {{"c", "b"}, {"c", "a"}}, {});
        case 7: return assemble({{"a", 2004}, {"b", 2000}, {"c", 2002}}, {{"b", "a"}, {"c", "a"}}, {});
        default: throw std::out_of_range(fmt::format("chain topology {} does not exist", which));
    }
}

}  // namespace mye
