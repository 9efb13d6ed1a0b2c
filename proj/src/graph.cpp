#include "mye/graph.hpp"

#include <algorithm>
#include <numeric>

namespace mye {

std::string_view to_string(WindowType t) {
    switch (t) {
        case WindowType::Type1: return "Type1";
        case WindowType::Type2: return "Type2";
        case WindowType::Type3: return "Type3";
        case WindowType::Type4: return "Type4";
    }
    return "?";
}

std::size_t AcademicGraph::num_known() const {
    return static_cast<std::size_t>(
        std::count_if(years_.begin(), years_.end(), [](const auto& y) { return y.has_value(); }));
}

std::optional<PaperIndex> AcademicGraph::find_paper(std::string_view id) const {
    auto it = paper_lookup_.find(std::string(id));
    if (it == paper_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<AuthorIndex> AcademicGraph::find_author(std::string_view id) const {
    auto it = author_lookup_.find(std::string(id));
    if (it == author_lookup_.end()) return std::nullopt;
    return it->second;
}

bool GraphBuilder::add_paper(std::string id, std::optional<Year> year) {
    if (id.empty()) throw GraphError("empty paper id");
    if (paper_slot_.contains(id)) return false;
    paper_slot_.emplace(id, papers_.size());
    papers_.push_back(std::move(id));
    years_.push_back(year);
    return true;
}

bool GraphBuilder::has_paper(std::string_view id) const { return paper_slot_.contains(std::string(id)); }

std::size_t GraphBuilder::ensure_paper(std::string_view id) {
    if (id.empty()) throw GraphError("empty paper id");
    auto it = paper_slot_.find(std::string(id));
    if (it != paper_slot_.end()) return it->second;
    ++stats_.dangling_papers;
    add_paper(std::string(id), std::nullopt);
    return papers_.size() - 1;
}

std::size_t GraphBuilder::ensure_author(std::string_view id) {
    if (id.empty()) throw GraphError("empty author id");
    auto it = author_slot_.find(std::string(id));
    if (it != author_slot_.end()) return it->second;
    author_slot_.emplace(std::string(id), authors_.size());
    authors_.emplace_back(id);
    return authors_.size() - 1;
}

void GraphBuilder::add_citation(std::string_view cited, std::string_view citing) {
    const std::size_t t = ensure_paper(cited);
    const std::size_t f = ensure_paper(citing);
    if (t == f) {
        ++stats_.self_citations;
        return;
    }
    citations_.emplace_back(t, f);
}

void GraphBuilder::add_authorship(std::string_view author, std::string_view paper) {
    const std::size_t a = ensure_author(author);
    const std::size_t p = ensure_paper(paper);
    authorships_.emplace_back(a, p);
}

void GraphBuilder::add_author(std::string_view author) { ensure_author(author); }

namespace {

std::vector<std::uint32_t> sorted_rank(const std::vector<std::string>& ids) {
    std::vector<std::uint32_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids[a] < ids[b]; });
    std::vector<std::uint32_t> rank(ids.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    return rank;
}

template <typename T, typename Edge, typename Key, typename Val>
void fill_csr(std::size_t rows, const std::vector<Edge>& edges, Key key, Val val, std::vector<std::size_t>& offsets,
              std::vector<T>& values) {
    offsets.assign(rows + 1, 0);
    for (const auto& e : edges) ++offsets[key(e) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    values.resize(edges.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& e : edges) values[cursor[key(e)]++] = val(e);
    for (std::size_t r = 0; r < rows; ++r) std::sort(values.begin() + offsets[r], values.begin() + offsets[r + 1]);
}

}  // namespace

AcademicGraph GraphBuilder::build() {
    AcademicGraph g;
    g.input_window_ = input_window_;

    const auto paper_rank = sorted_rank(papers_);
    const auto author_rank = sorted_rank(authors_);

    g.paper_ids_.resize(papers_.size());
    g.years_.resize(papers_.size());
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        g.paper_ids_[paper_rank[i]] = papers_[i];
        g.years_[paper_rank[i]] = years_[i];
    }
    g.author_ids_.resize(authors_.size());
    for (std::size_t i = 0; i < authors_.size(); ++i) g.author_ids_[author_rank[i]] = authors_[i];
    for (PaperIndex p = 0; p < g.paper_ids_.size(); ++p) g.paper_lookup_.emplace(g.paper_ids_[p], p);
    for (AuthorIndex a = 0; a < g.author_ids_.size(); ++a) g.author_lookup_.emplace(g.author_ids_[a], a);

    g.citations_.reserve(citations_.size());
    for (auto [t, f] : citations_) g.citations_.push_back({paper_rank[t], paper_rank[f]});
    std::sort(g.citations_.begin(), g.citations_.end());
    auto cit_end = std::unique(g.citations_.begin(), g.citations_.end());
    stats_.duplicate_citations = static_cast<std::size_t>(g.citations_.end() - cit_end);
    g.citations_.erase(cit_end, g.citations_.end());

    g.authorships_.reserve(authorships_.size());
    for (auto [a, p] : authorships_) g.authorships_.push_back({author_rank[a], paper_rank[p]});
    std::sort(g.authorships_.begin(), g.authorships_.end());
    auto auth_end = std::unique(g.authorships_.begin(), g.authorships_.end());
    stats_.duplicate_authorships = static_cast<std::size_t>(g.authorships_.end() - auth_end);
    g.authorships_.erase(auth_end, g.authorships_.end());

    const std::size_t n = g.paper_ids_.size();
    fill_csr(n, g.citations_, [](const Citation& c) { return c.cited; }, [](const Citation& c) { return c.citing; },
             g.cited_by_.offsets, g.cited_by_.values);
    fill_csr(n, g.citations_, [](const Citation& c) { return c.citing; }, [](const Citation& c) { return c.cited; },
             g.references_.offsets, g.references_.values);
    fill_csr(n, g.authorships_, [](const Authorship& e) { return e.paper; },
             [](const Authorship& e) { return e.author; }, g.authors_of_.offsets, g.authors_of_.values);
    fill_csr(g.author_ids_.size(), g.authorships_, [](const Authorship& e) { return e.author; },
             [](const Authorship& e) { return e.paper; }, g.papers_of_.offsets, g.papers_of_.values);
    return g;
}

MaskedGraph::MaskedGraph(const AcademicGraph& base) : base_(&base), hidden_(base.num_papers(), 0) {
    collect_missing();
}

MaskedGraph::MaskedGraph(const AcademicGraph& base, std::span<const PaperIndex> hidden)
    : base_(&base), hidden_(base.num_papers(), 0) {
    for (PaperIndex p : hidden) {
        if (p >= base.num_papers()) throw GraphError("hidden paper index out of range");
        if (!base.year(p)) throw GraphError("cannot hide paper '" + base.paper_id(p) + "': year already missing");
        hidden_[p] = 1;
    }
    collect_missing();
}

void MaskedGraph::collect_missing() {
    for (PaperIndex p = 0; p < base_->num_papers(); ++p) {
        if (hidden_[p]) hidden_list_.push_back(p);
        if (!is_known(p)) missing_.push_back(p);
    }
}

MaskedGraph mask(const AcademicGraph& g, std::span<const std::string> hidden_ids) {
    std::vector<PaperIndex> hidden;
    hidden.reserve(hidden_ids.size());
    for (const auto& id : hidden_ids) {
        auto p = g.find_paper(id);
        if (!p) throw GraphError("cannot hide unknown paper '" + id + "'");
        hidden.push_back(*p);
    }
    return MaskedGraph(g, hidden);
}

}  // namespace mye
