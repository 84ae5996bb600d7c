#include <doctest.h>

#include "normax/approx_decider.hpp"
#include "normax/errors.hpp"
#include "support.hpp"

using namespace normax;
using namespace testsupport;

namespace {

// Instance with an artificially wide threshold gap: the unit square with
// YES at its true maximum and NO at half of it. Lets the full decision
// pipeline run at a small certified accuracy.
GadgetInstance wide_gap_square() {
    GadgetInstance inst;
    inst.polytope = unit_square();
    inst.p = 2;
    inst.k = 1;
    inst.n_padded = 4;
    inst.yes_threshold = 2;
    inst.no_threshold = 1;
    return inst;
}

}  // namespace

TEST_CASE("smallest conclusive accuracy for a gap ratio of two") {
    auto sched = choose_beta(wide_gap_square());
    CHECK(sched.beta == 4);  // (4/3)^2 = 16/9 < 2, and (3/2)^2 = 9/4 >= 2
    CHECK(sched.inflated_no < sched.yes);
    CHECK(sched.inflated_no == Rational(16, 9));
}

TEST_CASE("chosen accuracy is minimal and certified on real instances") {
    Graph tri;
    tri.n = 3;
    tri.add_edge(0, 1);
    tri.add_edge(0, 2);
    tri.add_edge(1, 2);
    for (std::size_t k : {2, 3})
        for (int p : {2, 3}) {
            auto inst = build_gadget(tri, k, p);
            auto sched = choose_beta(inst);
            const auto pu = static_cast<unsigned>(p);
            CHECK(pow_int(Rational(sched.beta) / Rational(sched.beta - 1), pu) *
                      inst.no_threshold <
                  inst.yes_threshold);
            if (sched.beta > 2) {
                CHECK(pow_int(Rational(sched.beta - 1) / Rational(sched.beta - 2), pu) *
                          inst.no_threshold >=
                      inst.yes_threshold);
            }
        }
}

TEST_CASE("decision pipeline runs end to end on a wide-gap instance") {
    CHECK(decide_clique_via_approx(wide_gap_square()));

    auto narrow = wide_gap_square();  // same square, YES unreachable
    narrow.yes_threshold = 5;
    narrow.no_threshold = Rational(5, 2);
    CHECK_FALSE(decide_clique_via_approx(narrow));
}

TEST_CASE("real gadgets demand accuracies beyond any facet budget") {
    // The certified beta scales like p n^p k, so the grid ball needs on the
    // order of beta^(2k) facets; the guard reports this instead of building.
    Graph empty4;
    empty4.n = 4;
    auto inst = build_gadget(empty4, 2, 2);
    auto sched = choose_beta(inst);
    CHECK(sched.beta >= 100);
    CHECK_THROWS_AS(decide_clique_via_approx(inst), ApproxBudgetExceeded);
}

TEST_CASE("an instance without a gap is rejected") {
    auto inst = wide_gap_square();
    inst.no_threshold = inst.yes_threshold;
    CHECK_THROWS(choose_beta(inst));
}
