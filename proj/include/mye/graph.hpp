#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mye/types.hpp"

namespace mye {

using PaperIndex = std::uint32_t;
using AuthorIndex = std::uint32_t;

/// Directed citation: `citing` cites `cited`, so Y(cited) <= Y(citing) is expected.
struct Citation {
    PaperIndex cited;
    PaperIndex citing;

    friend auto operator<=>(const Citation&, const Citation&) = default;
};

struct Authorship {
    AuthorIndex author;
    PaperIndex paper;

    friend auto operator<=>(const Authorship&, const Authorship&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Papers, authors, citation and authorship edges.
///
/// Immutable once built. Paper and author indices follow lexicographic order
/// of their identifiers, so iteration order is stable across platforms.
/// Adjacency is stored in CSR form:
///   cited_by(p)   = T(p), papers citing p
///   references(p) = F(p), papers cited by p
///   authors_of(p) = A(p), papers_of(a) = P(a)
class AcademicGraph {
public:
    AcademicGraph() = default;

    std::size_t num_papers() const { return paper_ids_.size(); }
    std::size_t num_authors() const { return author_ids_.size(); }
    std::size_t num_citations() const { return citations_.size(); }
    std::size_t num_authorships() const { return authorships_.size(); }
    std::size_t num_known() const;

    const std::string& paper_id(PaperIndex p) const { return paper_ids_[p]; }
    const std::string& author_id(AuthorIndex a) const { return author_ids_[a]; }
    std::optional<PaperIndex> find_paper(std::string_view id) const;
    std::optional<AuthorIndex> find_author(std::string_view id) const;

    std::optional<Year> year(PaperIndex p) const { return years_[p]; }

    /// All citations sorted by (cited, citing).
    std::span<const Citation> citations() const { return citations_; }
    /// All authorships sorted by (author, paper).
    std::span<const Authorship> authorships() const { return authorships_; }

    std::span<const PaperIndex> cited_by(PaperIndex p) const { return row(cited_by_, p); }
    std::span<const PaperIndex> references(PaperIndex p) const { return row(references_, p); }
    std::span<const AuthorIndex> authors_of(PaperIndex p) const { return row(authors_of_, p); }
    std::span<const PaperIndex> papers_of(AuthorIndex a) const { return row(papers_of_, a); }

    const YearRange& input_window() const { return input_window_; }

private:
    friend class GraphBuilder;

    template <typename T>
    struct Csr {
        std::vector<std::size_t> offsets{0};
        std::vector<T> values;
    };

    template <typename T>
    static std::span<const T> row(const Csr<T>& csr, std::size_t i) {
        return {csr.values.data() + csr.offsets[i], csr.offsets[i + 1] - csr.offsets[i]};
    }

    std::vector<std::string> paper_ids_;
    std::vector<std::optional<Year>> years_;
    std::vector<std::string> author_ids_;
    std::unordered_map<std::string, PaperIndex> paper_lookup_;
    std::unordered_map<std::string, AuthorIndex> author_lookup_;

    std::vector<Citation> citations_;
    std::vector<Authorship> authorships_;
    Csr<PaperIndex> cited_by_;
    Csr<PaperIndex> references_;
    Csr<AuthorIndex> authors_of_;
    Csr<PaperIndex> papers_of_;
    YearRange input_window_;
};

/// Counters collected while assembling a graph.
struct BuildStats {
    std::size_t dangling_papers = 0;      ///< edge endpoints with no paper record
    std::size_t duplicate_citations = 0;
    std::size_t duplicate_authorships = 0;
    std::size_t self_citations = 0;

    friend bool operator==(const BuildStats&, const BuildStats&) = default;
};

/// Accumulates papers and edges by string id and freezes them into an AcademicGraph.
class GraphBuilder {
public:
    explicit GraphBuilder(YearRange input_window = {}) : input_window_(input_window) {}

    /// Adds a paper record. Returns false if the id is already registered.
    bool add_paper(std::string id, std::optional<Year> year);
    bool has_paper(std::string_view id) const;

    /// `citing` cites `cited`. Unknown endpoints become missing-year papers.
    void add_citation(std::string_view cited, std::string_view citing);
    void add_authorship(std::string_view author, std::string_view paper);

    /// Registers an author with no papers.
    void add_author(std::string_view author);

    AcademicGraph build();
    const BuildStats& stats() const { return stats_; }

private:
    std::size_t ensure_paper(std::string_view id);
    std::size_t ensure_author(std::string_view id);

    YearRange input_window_;
    std::vector<std::string> papers_;
    std::vector<std::optional<Year>> years_;
    std::unordered_map<std::string, std::size_t> paper_slot_;
    std::vector<std::string> authors_;
    std::unordered_map<std::string, std::size_t> author_slot_;
    std::vector<std::pair<std::size_t, std::size_t>> citations_;    // (cited, citing) slots
    std::vector<std::pair<std::size_t, std::size_t>> authorships_;  // (author, paper) slots
    BuildStats stats_;
};

/// Read-only overlay of an AcademicGraph in which a set of known-year papers
/// is treated as missing.
///
/// Algorithms see hidden papers exactly like papers with no year; the true
/// year is only reachable through true_year(). The base graph must outlive
/// the overlay.
class MaskedGraph {
public:
    /// No papers hidden.
    explicit MaskedGraph(const AcademicGraph& base);
    /// Throws GraphError if a hidden paper has no known year.
    MaskedGraph(const AcademicGraph& base, std::span<const PaperIndex> hidden);

    const AcademicGraph& base() const { return *base_; }
    std::size_t num_papers() const { return base_->num_papers(); }

    bool is_hidden(PaperIndex p) const { return hidden_[p] != 0; }
    bool is_known(PaperIndex p) const { return !is_hidden(p) && base_->year(p).has_value(); }
    std::optional<Year> year(PaperIndex p) const { return is_hidden(p) ? std::nullopt : base_->year(p); }

    /// Validation-only access to the real year, including hidden papers.
    std::optional<Year> true_year(PaperIndex p) const { return base_->year(p); }

    /// V_P^U in index order.
    const std::vector<PaperIndex>& missing() const { return missing_; }
    /// Hidden papers in index order.
    const std::vector<PaperIndex>& hidden() const { return hidden_list_; }

private:
    void collect_missing();

    const AcademicGraph* base_;
    std::vector<std::uint8_t> hidden_;
    std::vector<PaperIndex> hidden_list_;
    std::vector<PaperIndex> missing_;
};

/// Masks papers by identifier. Throws GraphError on unknown ids or ids
/// without a known year.
MaskedGraph mask(const AcademicGraph& g, std::span<const std::string> hidden_ids);

}  // namespace mye
