#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mye/graph.hpp"

/// Seeded corpus generator plus the small hand-built fixtures used by the
/// tests and the `synth` subcommand.
namespace mye {

struct SyntheticParams {
    std::size_t papers = 300;
    std::size_t authors = 100;
    double citations_per_paper = 3.0;
    double authors_per_paper = 2.5;
    YearRange years{1980, 2010};
    /// Fraction of papers emitted without a year.
    double missing_fraction = 0.0;
    /// Authors are grouped into teams of this size; a paper draws most of its
    /// authors from one team, which produces repeated coauthor pairs.
    std::size_t team_size = 6;
};

class SyntheticError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every author gets a career span inside `years`; papers prefer authors who
/// are active in their year. A paper only cites papers of the same or an
/// earlier year, so no citation ever runs backwards in time.
/// Throws SyntheticError for infeasible parameters.
AcademicGraph generate_synthetic(const SyntheticParams& params, std::uint64_t seed);

/// Twelve papers a..l with ten citations; a, b, e, i, j have no year.
AcademicGraph citation_example();
/// Eight papers a..h written by authors i..l; c, f, g, h have no year.
AcademicGraph authorship_example();

inline constexpr int kChainTopologies = 7;

/// Three papers a, b, c joined by two citations, all with years. Callers
/// hide a and c to get the setting where only b is dated. Topologies 1-3
/// have b in the middle; 4, 5 and 7 have a in the middle and 6 has c in the
/// middle. Under advanced windows, a stays Uncovered in 6 and c in 7.
AcademicGraph chain_topology(int which);

}  // namespace mye
