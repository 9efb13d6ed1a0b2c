#include "mye/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include <fmt/format.h>

namespace mye {

LoadError::LoadError(std::string source, std::size_t line, const std::string& what)
    : std::runtime_error(fmt::format("{}:{}: {}", source, line, what)), source_(std::move(source)), line_(line) {}

std::string LoadReport::summary() const {
    return fmt::format(
        "papers={} known={} citations={} authorships={} authors={} rejected_years={} dangling={} "
        "duplicate_citations={} duplicate_authorships={} self_citations={}",
        papers, known_years, citations, authorships, authors, rejected_years, build.dangling_papers,
        build.duplicate_citations, build.duplicate_authorships, build.self_citations);
}

void LoadReport::write_key_values(std::ostream& os) const {
    os << "papers=" << papers << '\n'
       << "known=" << known_years << '\n'
       << "citations=" << citations << '\n'
       << "authorships=" << authorships << '\n'
       << "authors=" << authors << '\n'
       << "rejected_years=" << rejected_years << '\n'
       << "dangling=" << build.dangling_papers << '\n'
       << "duplicate_citations=" << build.duplicate_citations << '\n'
       << "duplicate_authorships=" << build.duplicate_authorships << '\n'
       << "self_citations=" << build.self_citations << '\n';
}

std::string PreprocessReport::summary() const {
    return fmt::format("violations={} stripped_papers={} stripped_citations={} stripped_authorships={}", violations,
                       stripped_papers, stripped_citations, stripped_authorships);
}

void PreprocessReport::write_key_values(std::ostream& os) const {
    os << "violations=" << violations << '\n'
       << "stripped_papers=" << stripped_papers << '\n'
       << "stripped_citations=" << stripped_citations << '\n'
       << "stripped_authorships=" << stripped_authorships << '\n';
}

namespace {

// Calls fn(line_no, fields) for every data line.
template <typename Fn>
void for_each_row(std::istream& in, const std::string& source, Fn fn) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string_view> fields;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        fields.clear();
        std::string_view rest = line;
        while (true) {
            auto tab = rest.find('\t');
            fields.push_back(rest.substr(0, tab));
            if (tab == std::string_view::npos) break;
            rest.remove_prefix(tab + 1);
        }
        if (fields.size() != 2) {
            throw LoadError(source, line_no, fmt::format("expected 2 tab-separated fields, found {}", fields.size()));
        }
        if (fields[0].empty()) throw LoadError(source, line_no, "empty identifier");
        fn(line_no, fields);
    }
    if (in.bad()) throw LoadError(source, line_no, "read failure");
}

}  // namespace

AcademicGraph load_graph(const GraphSources& sources, const LoadConfig& config, LoadReport* report) {
    GraphBuilder builder(config.input_window);
    LoadReport local;

    if (sources.papers) {
        for_each_row(*sources.papers, sources.papers_name, [&](std::size_t line_no, const auto& f) {
            std::optional<Year> year;
            if (!f[1].empty()) {
                Year y = 0;
                auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), y);
                if (ec != std::errc{} || ptr != f[1].data() + f[1].size()) {
                    throw LoadError(sources.papers_name, line_no, fmt::format("invalid year '{}'", f[1]));
                }
                if (!config.input_window.contains(y)) {
                    ++local.rejected_years;
                    return;
                }
                year = y;
            }
            if (!builder.add_paper(std::string(f[0]), year)) {
                throw LoadError(sources.papers_name, line_no, fmt::format("duplicate paper id '{}'", f[0]));
            }
        });
    }
    if (sources.citations) {
        for_each_row(*sources.citations, sources.citations_name, [&](std::size_t line_no, const auto& f) {
            if (f[1].empty()) throw LoadError(sources.citations_name, line_no, "empty identifier");
            builder.add_citation(f[0], f[1]);
        });
    }
    if (sources.authorships) {
        for_each_row(*sources.authorships, sources.authorships_name, [&](std::size_t line_no, const auto& f) {
            if (f[1].empty()) throw LoadError(sources.authorships_name, line_no, "empty identifier");
            builder.add_authorship(f[0], f[1]);
        });
    }

    AcademicGraph g = builder.build();
    if (report) {
        local.papers = g.num_papers();
        local.known_years = g.num_known();
        local.citations = g.num_citations();
        local.authorships = g.num_authorships();
        local.authors = g.num_authors();
        local.build = builder.stats();
        *report = local;
    }
    return g;
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
    return in;
}

}  // namespace

AcademicGraph load_graph(const std::filesystem::path& papers, const std::filesystem::path& citations,
                         const std::filesystem::path& authorships, const LoadConfig& config, LoadReport* report) {
    GraphSources sources;
    std::ifstream papers_in = open_input(papers);
    sources.papers = &papers_in;
    sources.papers_name = papers.string();

    std::ifstream citations_in;
    if (!citations.empty()) {
        citations_in = open_input(citations);
        sources.citations = &citations_in;
        sources.citations_name = citations.string();
    }
    std::ifstream authorships_in;
    if (!authorships.empty()) {
        authorships_in = open_input(authorships);
        sources.authorships = &authorships_in;
        sources.authorships_name = authorships.string();
    }
    return load_graph(sources, config, report);
}

void write_papers(const AcademicGraph& g, std::ostream& os) {
    for (PaperIndex p = 0; p < g.num_papers(); ++p) {
        os << g.paper_id(p) << '\t';
        if (auto y = g.year(p)) os << *y;
        os << '\n';
    }
}

void write_citations(const AcademicGraph& g, std::ostream& os) {
    for (const auto& c : g.citations()) os << g.paper_id(c.cited) << '\t' << g.paper_id(c.citing) << '\n';
}

void write_authorships(const AcademicGraph& g, std::ostream& os) {
    for (const auto& e : g.authorships()) os << g.author_id(e.author) << '\t' << g.paper_id(e.paper) << '\n';
}

void write_graph(const AcademicGraph& g, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream out(dir / name);
        if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", (dir / name).string()));
        return out;
    };
    auto papers = open("papers.tsv");
    write_papers(g, papers);
    auto citations = open("citations.tsv");
    write_citations(g, citations);
    auto authorships = open("authorships.tsv");
    write_authorships(g, authorships);
}

AcademicGraph preprocess(const AcademicGraph& g, bool strip_missing, PreprocessReport* report) {
    PreprocessReport local;
    GraphBuilder builder(g.input_window());
    auto keep_paper = [&](PaperIndex p) { return !strip_missing || g.year(p).has_value(); };

    for (PaperIndex p = 0; p < g.num_papers(); ++p) {
        if (keep_paper(p)) {
            builder.add_paper(g.paper_id(p), g.year(p));
        } else {
            ++local.stripped_papers;
        }
    }
    for (const auto& c : g.citations()) {
        if (!keep_paper(c.cited) || !keep_paper(c.citing)) {
            ++local.stripped_citations;
            continue;
        }
        auto yt = g.year(c.cited);
        auto yf = g.year(c.citing);
        if (yt && yf && *yt > *yf) {
            ++local.violations;
            continue;
        }
        builder.add_citation(g.paper_id(c.cited), g.paper_id(c.citing));
    }
    for (const auto& e : g.authorships()) {
        if (!keep_paper(e.paper)) {
            ++local.stripped_authorships;
            continue;
        }
        builder.add_authorship(g.author_id(e.author), g.paper_id(e.paper));
    }
    if (report) *report = local;
    return builder.build();
}

}  // namespace mye
