#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mye/graph.hpp"

/// Expected coverage under independent masking, from the connected
/// components of an undirected projection of the paper graph.
namespace mye {

/// Union by size with path halving.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true when two distinct sets were merged.
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t size_of(std::uint32_t x) { return size_[find(x)]; }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::size_t> size_;
};

/// Component sizes of a projection, largest first.
struct ComponentPartition {
    std::vector<std::size_t> sizes;
    std::size_t total = 0;

    std::size_t count() const { return sizes.size(); }
    friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

ComponentPartition partition_of(DisjointSet& ds);

/// Citation edges taken as undirected.
ComponentPartition project_citation(const AcademicGraph& g);
/// Papers linked when they share an author. Unions along each author's paper
/// list, so the cost is linear in the number of authorships.
ComponentPartition project_coauthor(const AcademicGraph& g);
/// Union of the two projections above.
ComponentPartition project_combined(const AcademicGraph& g);

/// 1 - sum_i eta^|V_i| |V_i| / (eta |V|). Throws std::invalid_argument for
/// eta outside (0, 1) or an empty partition.
double expected_coverage(const ComponentPartition& parts, double eta);

}  // namespace mye
