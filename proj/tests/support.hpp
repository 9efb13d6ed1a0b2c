#pragma once

// Shared helpers and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's own data paths (CSR views, pair index,
// disjoint sets) so that agreement means something.

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mye/graph.hpp"
#include "mye/estimation.hpp"
#include "mye/io.hpp"

#ifndef MYE_FIXTURE_DIR
#error "MYE_FIXTURE_DIR must be defined"
#endif

namespace mye::test {

inline std::string fixture(const std::string& name) { return std::string(MYE_FIXTURE_DIR) + "/" + name; }

inline AcademicGraph load_fixture(const std::string& name) {
    const std::string dir = fixture(name);
    return load_graph(dir + "/papers.tsv", dir + "/citations.tsv", dir + "/authorships.tsv", LoadConfig{});
}

inline PaperIndex idx(const AcademicGraph& g, std::string_view id) { return *g.find_paper(id); }

inline Estimate year_of(const AcademicGraph& g, const Estimation& e, std::string_view id) {
    return e.year[idx(g, id)];
}

inline YearWindow window_of(const AcademicGraph& g, const Estimation& e, std::string_view id) {
    return e.window[idx(g, id)];
}

inline MaskedGraph hide(const AcademicGraph& g, std::initializer_list<std::string_view> ids) {
    std::vector<PaperIndex> hidden;
    for (auto id : ids) hidden.push_back(idx(g, id));
    std::sort(hidden.begin(), hidden.end());
    return MaskedGraph(g, hidden);
}

/// Advanced windows by reachability: the lower bound of a missing paper is
/// the latest known year from which it can be reached along citation
/// direction through missing papers only; the upper bound mirrors that.
inline std::vector<YearWindow> reachability_windows(const MaskedGraph& g) {
    const auto& base = g.base();
    std::map<PaperIndex, std::vector<PaperIndex>> forward;   // cited -> citing
    std::map<PaperIndex, std::vector<PaperIndex>> backward;  // citing -> cited
    for (const Citation& c : base.citations()) {
        forward[c.cited].push_back(c.citing);
        backward[c.citing].push_back(c.cited);
    }
    std::vector<YearWindow> out(g.num_papers());
    for (PaperIndex p : g.missing()) {
        auto sweep = [&](auto& adj, bool lower) {
            std::optional<Year> best;
            std::set<PaperIndex> seen{p};
            std::deque<PaperIndex> queue{p};
            while (!queue.empty()) {
                const PaperIndex x = queue.front();
                queue.pop_front();
                for (PaperIndex y : adj[x]) {
                    if (auto known = g.year(y)) {
                        if (!best || (lower ? *known > *best : *known < *best)) best = *known;
                    } else if (seen.insert(y).second) {
                        queue.push_back(y);
                    }
                }
            }
            return best;
        };
        const auto lo = sweep(backward, true);
        const auto hi = sweep(forward, false);
        YearWindow w;
        if (lo) w.lower = Bound::at(*lo);
        if (hi) w.upper = Bound::at(*hi);
        w.normalize();
        out[p] = w;
    }
    return out;
}

/// Shared-author counts by set intersection over every paper pair.
inline std::map<std::pair<PaperIndex, PaperIndex>, std::size_t> shared_authors(const AcademicGraph& g) {
    std::vector<std::set<AuthorIndex>> authors(g.num_papers());
    for (const Authorship& a : g.authorships()) authors[a.paper].insert(a.author);
    std::map<std::pair<PaperIndex, PaperIndex>, std::size_t> out;
    for (PaperIndex p = 0; p < g.num_papers(); ++p) {
        for (PaperIndex q = 0; q < g.num_papers(); ++q) {
            if (p == q) continue;
            std::size_t n = 0;
            for (AuthorIndex a : authors[p]) n += authors[q].count(a);
            if (n > 0) out[{p, q}] = n;
        }
    }
    return out;
}

enum class Projection { Citation, Coauthor, Combined };

/// Component label of every paper by BFS over an explicit undirected edge list.
inline std::vector<std::size_t> bfs_components(const AcademicGraph& g, Projection proj) {
    std::vector<std::set<PaperIndex>> adj(g.num_papers());
    if (proj != Projection::Coauthor) {
        for (const Citation& c : g.citations()) {
            adj[c.cited].insert(c.citing);
            adj[c.citing].insert(c.cited);
        }
    }
    if (proj != Projection::Citation) {
        for (const auto& [pq, n] : shared_authors(g)) adj[pq.first].insert(pq.second);
    }
    std::vector<std::size_t> label(g.num_papers(), SIZE_MAX);
    std::size_t next = 0;
    for (PaperIndex s = 0; s < g.num_papers(); ++s) {
        if (label[s] != SIZE_MAX) continue;
        std::deque<PaperIndex> queue{s};
        label[s] = next;
        while (!queue.empty()) {
            const PaperIndex x = queue.front();
            queue.pop_front();
            for (PaperIndex y : adj[x]) {
                if (label[y] == SIZE_MAX) {
                    label[y] = next;
                    queue.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

/// Exact expected coverage over all 2^n independent maskings: a hidden paper
/// is uncovered exactly when every paper of its component is hidden.
inline double enumerated_coverage(const std::vector<std::size_t>& label, double eta) {
    const std::size_t n = label.size();
    double expected_uncovered = 0;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
        const int hidden = std::popcount(m);
        const double weight = std::pow(eta, hidden) * std::pow(1 - eta, static_cast<int>(n) - hidden);
        std::map<std::size_t, bool> all_hidden;
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, fresh] = all_hidden.try_emplace(label[i], true);
            if (!((m >> i) & 1)) it->second = false;
        }
        std::size_t uncovered = 0;
        for (std::size_t i = 0; i < n; ++i) uncovered += ((m >> i) & 1) && all_hidden[label[i]];
        expected_uncovered += weight * static_cast<double>(uncovered);
    }
    return 1.0 - expected_uncovered / (eta * static_cast<double>(n));
}

}  // namespace mye::test
