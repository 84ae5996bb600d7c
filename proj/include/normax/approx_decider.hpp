#pragma once

#include "normax/ball_approx.hpp"
#include "normax/gadget.hpp"

namespace normax {

/// Accuracy that makes the approximation conclusive for one instance:
/// inflating the NO threshold by (beta/(beta-1))^p stays below YES.
struct AccuracySchedule {
    int beta = 2;
    Rational inflated_no;  // (beta/(beta-1))^p * no_threshold
    Rational yes;
};

/// Smallest beta >= 2 satisfying the certificate, by doubling then binary
/// search with exact comparisons. The strict threshold gap guarantees one
/// exists.
AccuracySchedule choose_beta(const GadgetInstance& inst);

/// Decides whether the instance is a YES instance using only the
/// beta-approximation: run it at the certified accuracy and compare the
/// witness value against the NO threshold. The certified beta grows like
/// p n^p k, so the grid ball is far beyond any facet budget on real
/// gadgets; ApproxBudgetExceeded reports the required size.
bool decide_clique_via_approx(const GadgetInstance& inst, const BallBuildOptions& opts = {});

/// Convenience form: build the gadget first.
bool decide_clique_via_approx(const Graph& G, std::size_t k, int p,
                              const BallBuildOptions& opts = {});

}  // namespace normax
