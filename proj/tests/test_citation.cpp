#include <doctest.h>

#include <random>

#include "mye/citation.hpp"
#include "mye/eval.hpp"
#include "mye/synthetic.hpp"
#include "support.hpp"

using namespace mye;
using namespace mye::citation;
using mye::test::idx;

namespace {

constexpr YearWindow lower_only(Year y) { return {Bound::at(y), Bound::open()}; }
constexpr YearWindow upper_only(Year y) { return {Bound::open(), Bound::at(y)}; }

MaskedGraph masked_synthetic(std::uint64_t seed, double eta, const AcademicGraph& g) {
    Rng rng(mix_seed(seed, 99));
    return MaskedGraph(g, independent_mask(g, eta, rng));
}

}  // namespace

TEST_CASE("simple windows and estimates on the citation example") {
    const auto g = test::load_fixture("citation_example");
    const MaskedGraph m(g);
    const auto e = estimate(m, Variant::SS);

    CHECK(test::window_of(g, e, "a") == upper_only(1999));
    CHECK(test::window_of(g, e, "b") == YearWindow::unbounded());
    CHECK(test::window_of(g, e, "e") == YearWindow::closed(1999, 2007));
    CHECK(test::window_of(g, e, "i") == YearWindow::closed(2003, 2005));
    CHECK(test::window_of(g, e, "j") == YearWindow::unbounded());

    CHECK(test::year_of(g, e, "a") == 1999);
    CHECK_FALSE(test::year_of(g, e, "b"));
    CHECK(test::year_of(g, e, "e") == 2003);
    CHECK(test::year_of(g, e, "i") == 2004);
    CHECK_FALSE(test::year_of(g, e, "j"));
    CHECK(e.covered() == 3);
}

TEST_CASE("advanced windows on the citation example") {
    const auto g = test::load_fixture("citation_example");
    const MaskedGraph m(g);
    const auto e = estimate(m, Variant::AS);

    CHECK(test::window_of(g, e, "a") == upper_only(1999));
    CHECK(test::window_of(g, e, "b") == YearWindow::unbounded());
    CHECK(test::window_of(g, e, "e") == YearWindow::closed(1999, 2005));
    CHECK(test::window_of(g, e, "i") == YearWindow::closed(2003, 2005));
    CHECK(test::window_of(g, e, "j") == lower_only(2003));

    CHECK(test::year_of(g, e, "a") == 1999);
    CHECK_FALSE(test::year_of(g, e, "b"));
    CHECK(test::year_of(g, e, "e") == 2002);
    CHECK(test::year_of(g, e, "i") == 2004);
    CHECK(test::year_of(g, e, "j") == 2003);

    SUBCASE("the pass loop ends on a pass with no update") {
        PropagationTrace trace;
        std::vector<Citation> order(g.citations().begin(), g.citations().end());
        advanced_windows(m, order, nullptr, &trace);
        REQUIRE_FALSE(trace.updates_per_pass.empty());
        CHECK(trace.updates_per_pass.back() == 0);
        CHECK(trace.updates_per_pass.size() == trace.windows_after_pass.size());
    }

    SUBCASE("a visiting order that needs two productive passes") {
        auto edge = [&](const char* t, const char* f) { return Citation{idx(g, t), idx(g, f)}; };
        const std::vector<Citation> order{edge("i", "j"), edge("e", "i"), edge("a", "d"), edge("d", "e"),
                                          edge("e", "h"), edge("f", "i"), edge("g", "i"), edge("i", "k"),
                                          edge("i", "l"), edge("c", "d")};
        PropagationTrace trace;
        const auto w = advanced_windows(m, order, nullptr, &trace);
        CHECK(trace.updates_per_pass == std::vector<std::size_t>{5, 2, 0});
        CHECK(w == advanced_windows(m));
    }
}

TEST_CASE("training tuples and calibrated estimates on the citation example") {
    const auto g = test::load_fixture("citation_example");
    const MaskedGraph m(g);
    const auto wt = windows_with_training(m);

    std::vector<TrainingTuple> expected{
        {1993, WindowType::Type3, 1999},  // c
        {2003, WindowType::Type3, 2005},  // f
        {2001, WindowType::Type3, 2005},  // g
        {2007, WindowType::Type2, 1999},  // h
        {2005, WindowType::Type2, 2003},  // k
        {2006, WindowType::Type2, 2003},  // l
    };
    auto got = wt.training.tuples();
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);

    CHECK(wt.windows[idx(g, "d")] == YearWindow::closed(1993, 2005));
    for (PaperIndex p : m.missing()) CHECK(wt.windows[p] == advanced_windows(m)[p]);

    CHECK(d_lookup(wt.training, WindowType::Type2, 2003) == 2006);  // mean 2005.5 rounds up
    CHECK(d_lookup(wt.training, WindowType::Type3, 1999) == 1993);
    CHECK(d_lookup(wt.training, WindowType::Type3, 2005) == 2002);
    CHECK_FALSE(d_lookup(wt.training, WindowType::Type2, 2004));
    CHECK_FALSE(d_lookup(wt.training, WindowType::Type1, 1999));

    const auto e = estimate(m, Variant::AA);
    CHECK(test::year_of(g, e, "a") == 1993);
    CHECK(test::year_of(g, e, "j") == 2006);
    CHECK(test::year_of(g, e, "e") == 2002);
    CHECK(test::year_of(g, e, "i") == 2004);
    CHECK_FALSE(test::year_of(g, e, "b"));
}

TEST_CASE("d lookup rounding and fallbacks") {
    const TrainingSet t({{2000, WindowType::Type2, 1990},
                         {2001, WindowType::Type2, 1990},
                         {1980, WindowType::Type3, 1990},
                         {1981, WindowType::Type3, 1990},
                         {1983, WindowType::Type3, 1990}});
    CHECK(t.lookup(WindowType::Type2, 1990) == 2001);  // 2000.5
    CHECK(t.lookup(WindowType::Type3, 1990) == 1981);  // 1981.33
    CHECK(calibrated_year(lower_only(1995), t) == 1995);
    CHECK(calibrated_year(YearWindow::closed(1990, 1993), t) == 1992);
    CHECK_FALSE(calibrated_year(YearWindow::unbounded(), t));
    CHECK(TrainingSet{}.empty());
}

TEST_CASE("year rules") {
    CHECK(simple_year(YearWindow::closed(2000, 2001)) == 2001);
    CHECK(simple_year(YearWindow::closed(2000, 2002)) == 2001);
    CHECK(simple_year(lower_only(1990)) == 1990);
    CHECK(simple_year(upper_only(1990)) == 1990);
    CHECK_FALSE(simple_year(YearWindow::unbounded()));
    CHECK(midpoint_year(-3, -2) == -2);
    CHECK(round_year(1999.5) == 2000);
    CHECK(round_year(1999.49) == 1999);
}

TEST_CASE("inverted bounds are swapped and counted") {
    GraphBuilder b;
    b.add_paper("t", 2005);
    b.add_paper("m", std::nullopt);
    b.add_paper("f", 2001);
    b.add_citation("t", "m");
    b.add_citation("m", "f");
    const auto g = b.build();
    const MaskedGraph m(g);
    Diagnostics diag;
    const auto w = advanced_windows(m, &diag);
    CHECK(w[idx(g, "m")] == YearWindow::closed(2001, 2005));
    CHECK(diag.swapped_windows == 1);
}

TEST_CASE("estimates far outside the input window are clamped") {
    GraphBuilder b(YearRange{2000, 2010});
    b.add_paper("old", 1990);
    b.add_paper("m", std::nullopt);
    b.add_citation("old", "m");
    const auto g = b.build();
    const auto e = estimate(MaskedGraph(g), Variant::SS);
    CHECK(test::year_of(g, e, "m") == 1995);
    CHECK(e.diagnostics.clamped_estimates == 1);
}

TEST_CASE("advanced windows agree with the reachability oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = generate_synthetic({.papers = 120, .authors = 30, .missing_fraction = 0.1}, seed);
        for (double eta : {0.125, 0.5}) {
            const auto m = masked_synthetic(seed, eta, g);
            const auto w = advanced_windows(m);
            const auto oracle = test::reachability_windows(m);
            for (PaperIndex p : m.missing()) CHECK(w[p] == oracle[p]);
        }
    }
}

TEST_CASE("windows contain the true year and advanced windows refine simple ones") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = generate_synthetic({.papers = 150, .authors = 40}, seed);
        const auto m = masked_synthetic(seed, 0.33, g);
        const auto simple = simple_windows(m);
        const auto advanced = advanced_windows(m);
        for (PaperIndex p : m.hidden()) {
            const Year truth = *m.true_year(p);
            CHECK(simple[p].contains(truth));
            CHECK(advanced[p].contains(truth));
            CHECK(advanced[p].within(simple[p]));
        }
        CHECK(estimate(m, Variant::AS).covered() >= estimate(m, Variant::SS).covered());
        CHECK(estimate(m, Variant::AA).covered() == estimate(m, Variant::AS).covered());
    }
}

TEST_CASE("propagation result does not depend on edge order") {
    const auto g = generate_synthetic({.papers = 200, .authors = 50}, 11);
    const auto m = masked_synthetic(11, 0.5, g);
    const auto reference = advanced_windows(m);
    std::vector<Citation> order(g.citations().begin(), g.citations().end());
    std::mt19937_64 engine(5);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(order.begin(), order.end(), engine);
        CHECK(advanced_windows(m, order) == reference);
    }
}
