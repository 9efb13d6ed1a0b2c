#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mye/graph.hpp"

namespace mye {

/// Malformed input. Carries the source name and 1-based line number.
class LoadError : public std::runtime_error {
public:
    LoadError(std::string source, std::size_t line, const std::string& what);
    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

struct LoadConfig {
    YearRange input_window;
};

struct LoadReport {
    std::size_t papers = 0;
    std::size_t known_years = 0;
    std::size_t citations = 0;
    std::size_t authorships = 0;
    std::size_t authors = 0;
    std::size_t rejected_years = 0;  ///< paper rows dropped for a year outside the input window
    BuildStats build;

    /// "papers=12 known=7 ..." on one line.
    std::string summary() const;
    /// One key=value pair per line.
    void write_key_values(std::ostream& os) const;
};

/// Streams of the three TSV tables. The authorship stream may be null.
struct GraphSources {
    std::istream* papers = nullptr;
    std::istream* citations = nullptr;
    std::istream* authorships = nullptr;
    std::string papers_name = "papers.tsv";
    std::string citations_name = "citations.tsv";
    std::string authorships_name = "authorships.tsv";
};

/// Parses papers (`id<TAB>year`), citations (`cited<TAB>citing`) and
/// authorships (`author<TAB>paper`). Lines starting with '#' and blank lines
/// are skipped. Throws LoadError on malformed lines.
AcademicGraph load_graph(const GraphSources& sources, const LoadConfig& config, LoadReport* report = nullptr);

/// File-based overload. An empty authorships path means no authorship table.
/// Throws std::runtime_error naming the path when a file cannot be opened.
AcademicGraph load_graph(const std::filesystem::path& papers, const std::filesystem::path& citations,
                         const std::filesystem::path& authorships, const LoadConfig& config,
                         LoadReport* report = nullptr);

/// Writes the three tables in index order.
void write_papers(const AcademicGraph& g, std::ostream& os);
void write_citations(const AcademicGraph& g, std::ostream& os);
void write_authorships(const AcademicGraph& g, std::ostream& os);

/// Writes papers.tsv, citations.tsv and authorships.tsv into `dir` (created if needed).
void write_graph(const AcademicGraph& g, const std::filesystem::path& dir);

struct PreprocessReport {
    std::size_t violations = 0;        ///< known-known edges with Y(cited) > Y(citing)
    std::size_t stripped_papers = 0;   ///< missing-year papers removed
    std::size_t stripped_citations = 0;
    std::size_t stripped_authorships = 0;

    std::string summary() const;
    void write_key_values(std::ostream& os) const;
};

/// Removes citation edges that break Y(cited) <= Y(citing) between known
/// years. With `strip_missing`, also removes missing-year papers and every
/// edge touching them.
AcademicGraph preprocess(const AcademicGraph& g, bool strip_missing, PreprocessReport* report = nullptr);

}  // namespace mye
