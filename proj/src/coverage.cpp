#include "mye/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mye {

ComponentPartition partition_of(DisjointSet& ds) {
    ComponentPartition out;
    out.total = ds.size();
    for (std::uint32_t x = 0; x < ds.size(); ++x) {
        if (ds.find(x) == x) out.sizes.push_back(ds.size_of(x));
    }
    std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
    return out;
}

namespace {

void unite_citations(const AcademicGraph& g, DisjointSet& ds) {
    for (const Citation& c : g.citations()) ds.unite(c.cited, c.citing);
}

void unite_coauthors(const AcademicGraph& g, DisjointSet& ds) {
    for (AuthorIndex a = 0; a < g.num_authors(); ++a) {
        const auto papers = g.papers_of(a);
        for (std::size_t i = 1; i < papers.size(); ++i) ds.unite(papers[0], papers[i]);
    }
}

}  // namespace

ComponentPartition project_citation(const AcademicGraph& g) {
    DisjointSet ds(g.num_papers());
    unite_citations(g, ds);
    return partition_of(ds);
}

ComponentPartition project_coauthor(const AcademicGraph& g) {
    DisjointSet ds(g.num_papers());
    unite_coauthors(g, ds);
    return partition_of(ds);
}

ComponentPartition project_combined(const AcademicGraph& g) {
    DisjointSet ds(g.num_papers());
    unite_citations(g, ds);
    unite_coauthors(g, ds);
    return partition_of(ds);
}

double expected_coverage(const ComponentPartition& parts, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie strictly between 0 and 1");
    if (parts.total == 0) throw std::invalid_argument("expected coverage of an empty partition");
    double uncovered = 0;
    for (std::size_t s : parts.sizes) uncovered += std::pow(eta, static_cast<double>(s)) * static_cast<double>(s);
    return 1.0 - uncovered / (eta * static_cast<double>(parts.total));
}

}  // namespace mye
