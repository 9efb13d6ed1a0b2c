#include <doctest.h>

#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "mye/coverage.hpp"
#include "mye/eval.hpp"
#include "mye/io.hpp"
#include "mye/synthetic.hpp"
#include "support.hpp"

using namespace mye;
using mye::test::idx;

namespace {

AcademicGraph dated_papers(std::size_t n) {
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_paper(fmt::format("p{:03}", i), 2000);
    return b.build();
}

std::vector<std::size_t> fold_sizes(const FoldPlan& plan) {
    std::vector<std::size_t> sizes;
    for (const auto& f : plan.members) sizes.push_back(f.size());
    return sizes;
}

std::string csv(const EvalReport& r) {
    std::ostringstream os;
    write_csv_header(os);
    write_csv_rows(os, r);
    return os.str();
}

}  // namespace

TEST_CASE("fold sizes and remainder placement") {
    CHECK(fold_sizes(plan_folds(dated_papers(10), 5, 0)) == std::vector<std::size_t>{2, 2, 2, 2, 2});
    CHECK(fold_sizes(plan_folds(dated_papers(11), 5, 0)) == std::vector<std::size_t>{3, 2, 2, 2, 2});
    CHECK(fold_sizes(plan_folds(dated_papers(14), 4, 3)) == std::vector<std::size_t>{4, 4, 3, 3});
}

TEST_CASE("fold plans are exclusive, exhaustive and deterministic") {
    const auto g = generate_synthetic({.papers = 103, .missing_fraction = 0.1}, 2);
    for (int k : {2, 3, 4, 5, 8}) {
        const auto plan = plan_folds(g, k, 42);
        CHECK(plan == plan_folds(g, k, 42));
        std::size_t total = 0;
        for (int f = 0; f < k; ++f) {
            for (PaperIndex p : plan.members[f]) CHECK(plan.fold_of[p] == f);
            total += plan.members[f].size();
        }
        CHECK(total == g.num_known());
        for (PaperIndex p = 0; p < g.num_papers(); ++p) CHECK((plan.fold_of[p] >= 0) == g.year(p).has_value());
        const auto sizes = fold_sizes(plan);
        CHECK(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()) <= 1);
    }
    CHECK(plan_folds(g, 5, 1) != plan_folds(g, 5, 2));
}

TEST_CASE("fold count limits") {
    const auto g = dated_papers(4);
    CHECK_THROWS_AS(plan_folds(g, 1, 0), EvalError);
    CHECK_THROWS_AS(plan_folds(g, 5, 0), EvalError);
    CHECK_NOTHROW(plan_folds(g, 4, 0));
}

TEST_CASE("two-point metric arithmetic") {
    GraphBuilder b;
    b.add_paper("a", 2001);
    b.add_paper("b", 2005);
    b.add_paper("c", 2010);
    const auto g = b.build();
    const auto m = test::hide(g, {"a", "b", "c"});
    Estimation e = make_estimation(m);
    e.year[idx(g, "a")] = 2000;
    e.year[idx(g, "b")] = 2005;
    const auto s = score(m, e);
    CHECK(s.missing == 3);
    CHECK(s.covered == 2);
    CHECK(s.coverage == doctest::Approx(2.0 / 3.0));
    CHECK(*s.mae == doctest::Approx(0.5));
    CHECK(*s.rmse == doctest::Approx(std::sqrt(0.5)));

    Estimation none = make_estimation(m);
    const auto z = score(m, none);
    CHECK(z.coverage == 0);
    CHECK_FALSE(z.mae);
    CHECK_FALSE(z.rmse);
}

TEST_CASE("folds without covered papers drop out of the error averages") {
    // Two isolated dated papers: every fold is entirely Uncovered.
    const auto g = dated_papers(2);
    const auto r = evaluate(g, Algorithm::CitationAS, 2, 0);
    CHECK(r.coverage == 0);
    CHECK(r.folds_without_coverage == 2);
    CHECK_FALSE(r.mae);
    const auto text = csv(r);
    CHECK(text.find("as,citation,0.500000,2,0,aggregate,0.000000,,\n") != std::string::npos);
}

TEST_CASE("per-fold metric identities and aggregate means") {
    const auto g = generate_synthetic({.papers = 200, .authors = 60}, 5);
    for (Algorithm a : kAllAlgorithms) {
        const auto r = evaluate(g, a, 4, 1);
        double cov = 0;
        for (const auto& f : r.folds) {
            CHECK(f.coverage >= 0);
            CHECK(f.coverage <= 1);
            if (f.mae) CHECK(*f.rmse >= *f.mae - 1e-12);
            cov += f.coverage;
        }
        CHECK(r.coverage == doctest::Approx(cov / 4));
        if (r.mae) CHECK(*r.rmse >= *r.mae - 1e-12);
    }
}

TEST_CASE("exact estimates give zero error") {
    // A known chain where each hidden paper sits between two dated neighbours
    // of the same year.
    GraphBuilder b;
    for (int i = 0; i < 6; ++i) b.add_paper(fmt::format("p{}", i), 2000);
    for (int i = 1; i < 6; ++i) b.add_citation(fmt::format("p{}", i - 1), fmt::format("p{}", i));
    const auto g = b.build();
    const auto r = evaluate(g, Algorithm::CitationAS, 2, 3);
    REQUIRE(r.mae);
    CHECK(*r.mae == 0);
    CHECK(*r.rmse == 0);
}

TEST_CASE("evaluation is reproducible and independent of the thread count") {
    const auto g = preprocess(test::load_fixture("citation_example"), true);
    const auto once = evaluate(g, Algorithm::CitationAA, 2, 7);
    CHECK(csv(once) == csv(evaluate(g, Algorithm::CitationAA, 2, 7)));

    const auto big = generate_synthetic({.papers = 250, .authors = 80}, 8);
    for (Algorithm a : {Algorithm::CitationAS, Algorithm::AuthorIter, Algorithm::HeteroAdvIter}) {
        const auto serial = evaluate(big, a, 5, 11, {.jobs = 1});
        const auto parallel = evaluate(big, a, 5, 11, {.jobs = 4});
        CHECK(serial == parallel);
        CHECK(csv(serial) == csv(parallel));
    }
}

TEST_CASE("JSON summary mirrors the report") {
    const auto g = generate_synthetic({.papers = 60, .authors = 20}, 1);
    const auto r = evaluate(g, Algorithm::HeteroSSBa, 3, 2);
    const auto j = to_json(r);
    CHECK(j["algo"] == "ssba");
    CHECK(j["network"] == "hetero");
    CHECK(j["K"] == 3);
    CHECK(j["folds"].size() == 3);
    CHECK(j["coverage"].get<double>() == r.coverage);
}

TEST_CASE("projections of the examples") {
    const auto ce = test::load_fixture("citation_example");
    CHECK(project_citation(ce).sizes == std::vector<std::size_t>{11, 1});
    CHECK(project_combined(ce).sizes == std::vector<std::size_t>{11, 1});
    CHECK(project_coauthor(ce).count() == 12);

    const auto ae = test::load_fixture("authorship_example");
    CHECK(project_coauthor(ae).sizes == std::vector<std::size_t>{7, 1});
    CHECK(project_citation(ae).count() == 8);

    const auto empty = GraphBuilder().build();
    CHECK(project_citation(empty).sizes.empty());
    CHECK(project_citation(empty).total == 0);
}

TEST_CASE("projections agree with BFS over explicit edges") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = generate_synthetic({.papers = 80, .authors = 50, .citations_per_paper = 0.6,
                                           .authors_per_paper = 1.3}, seed);
        auto sizes = [](const std::vector<std::size_t>& label) {
            std::map<std::size_t, std::size_t> count;
            for (auto l : label) ++count[l];
            std::vector<std::size_t> out;
            for (auto [l, n] : count) out.push_back(n);
            std::sort(out.rbegin(), out.rend());
            return out;
        };
        CHECK(project_citation(g).sizes == sizes(test::bfs_components(g, test::Projection::Citation)));
        CHECK(project_coauthor(g).sizes == sizes(test::bfs_components(g, test::Projection::Coauthor)));
        CHECK(project_combined(g).sizes == sizes(test::bfs_components(g, test::Projection::Combined)));
    }
}

TEST_CASE("expected coverage closed forms") {
    CHECK(expected_coverage({{1}, 1}, 0.3) == doctest::Approx(0.0));
    CHECK(expected_coverage({{2, 1}, 3}, 0.5) == doctest::Approx(1.0 / 3.0));
    for (std::size_t n : {2u, 5u, 9u}) {
        for (double eta : {0.125, 0.5, 0.9}) {
            CHECK(expected_coverage({{n}, n}, eta) == doctest::Approx(1 - std::pow(eta, n - 1)));
        }
    }
    CHECK_THROWS_AS(expected_coverage({{2}, 2}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(expected_coverage({{2}, 2}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(expected_coverage({{}, 0}, 0.5), std::invalid_argument);
}

TEST_CASE("expected coverage matches exhaustive masking on small graphs") {
    std::vector<AcademicGraph> graphs{test::load_fixture("authorship_example")};
    for (int t = 1; t <= kChainTopologies; ++t) graphs.push_back(chain_topology(t));
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        graphs.push_back(generate_synthetic({.papers = 4 + seed, .authors = 5, .citations_per_paper = 0.7,
                                             .authors_per_paper = 1.2}, seed));
    }
    for (const auto& g : graphs) {
        for (double eta : {0.2, 0.5}) {
            CHECK(std::abs(expected_coverage(project_citation(g), eta) -
                           test::enumerated_coverage(test::bfs_components(g, test::Projection::Citation), eta)) <=
                  1e-12);
            CHECK(std::abs(expected_coverage(project_coauthor(g), eta) -
                           test::enumerated_coverage(test::bfs_components(g, test::Projection::Coauthor), eta)) <=
                  1e-12);
        }
    }
}

TEST_CASE("disjoint set") {
    DisjointSet ds(5);
    CHECK(ds.unite(0, 1));
    CHECK_FALSE(ds.unite(1, 0));
    CHECK(ds.unite(3, 4));
    CHECK(ds.unite(1, 4));
    CHECK(ds.size_of(3) == 4);
    CHECK(ds.find(0) == ds.find(3));
    CHECK(partition_of(ds).sizes == std::vector<std::size_t>{4, 1});
}

TEST_CASE("generator determinism and parameter checks") {
    auto dump = [](const AcademicGraph& g) {
        std::ostringstream os;
        write_papers(g, os);
        write_citations(g, os);
        write_authorships(g, os);
        return os.str();
    };
    const SyntheticParams p{.papers = 100, .authors = 30, .missing_fraction = 0.2};
    CHECK(dump(generate_synthetic(p, 1)) == dump(generate_synthetic(p, 1)));
    CHECK(dump(generate_synthetic(p, 1)) != dump(generate_synthetic(p, 2)));
    const auto g = generate_synthetic(p, 1);
    for (PaperIndex q = 0; q < g.num_papers(); ++q) {
        if (auto y = g.year(q)) CHECK(p.years.contains(*y));
    }
    CHECK(generate_synthetic({.papers = 0}, 0).num_papers() == 0);
    CHECK_THROWS_AS(generate_synthetic({.papers = 10, .authors = 0}, 0), SyntheticError);
    CHECK_THROWS_AS(generate_synthetic({.years = {2010, 2000}}, 0), SyntheticError);
    CHECK_THROWS_AS(generate_synthetic({.citations_per_paper = -1}, 0), SyntheticError);
    CHECK_THROWS_AS(generate_synthetic({.missing_fraction = 1.5}, 0), SyntheticError);
    CHECK_THROWS_AS(chain_topology(8), std::out_of_range);
}

TEST_CASE("chain topologies with only the middle-year paper dated") {
    for (int t = 1; t <= kChainTopologies; ++t) {
        const auto g = chain_topology(t);
        CHECK(g.num_papers() == 3);
        CHECK(g.num_citations() == 2);
        CHECK(project_citation(g).sizes == std::vector<std::size_t>{3});
        const auto m = test::hide(g, {"a", "c"});
        const auto e = run(m, Algorithm::CitationAS);
        CHECK(test::year_of(g, e, "a").has_value() == (t != 6));
        CHECK(test::year_of(g, e, "c").has_value() == (t != 7));
        PreprocessReport r;
        preprocess(g, false, &r);
        CHECK(r.violations == 0);
    }
}

TEST_CASE("random draws") {
    Rng rng(3);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
    for (int h : hits) CHECK(h > 850);
    double sum = 0;
    for (int i = 0; i < 4000; ++i) sum += static_cast<double>(rng.poisson(3.5));
    CHECK(sum / 4000 == doctest::Approx(3.5).epsilon(0.05));
    double big = 0;
    for (int i = 0; i < 500; ++i) big += static_cast<double>(rng.poisson(75));
    CHECK(big / 500 == doctest::Approx(75).epsilon(0.03));
    CHECK_THROWS(rng.below(0));
    CHECK(Rng(9).next() == Rng(9).next());
}
