#include "normax/approx_decider.hpp"

#include "normax/errors.hpp"

namespace normax {
namespace {

bool certificate_ok(const GadgetInstance& inst, int beta) {
    Rational inflate =
        pow_int(Rational(beta) / Rational(beta - 1), static_cast<unsigned>(inst.p));
    return inflate * inst.no_threshold < inst.yes_threshold;
}

}  // namespace

AccuracySchedule choose_beta(const GadgetInstance& inst) {
    if (!(inst.no_threshold < inst.yes_threshold))
        throw Error("choose_beta: instance has no threshold gap");
    int hi = 2;
    while (!certificate_ok(inst, hi)) {
        if (hi > (1 << 28)) throw Error("choose_beta: runaway accuracy search");
        hi *= 2;
    }
    int lo = hi / 2 < 2 ? 2 : hi / 2;  // certificate fails at lo (or lo == 2)
    while (lo + 1 < hi) {
        int mid = lo + (hi - lo) / 2;
        (certificate_ok(inst, mid) ? hi : lo) = mid;
    }
    int beta = certificate_ok(inst, lo) ? lo : hi;
    AccuracySchedule s;
    s.beta = beta;
    s.inflated_no = pow_int(Rational(beta) / Rational(beta - 1), static_cast<unsigned>(inst.p)) *
                    inst.no_threshold;
    s.yes = inst.yes_threshold;
    return s;
}

bool decide_clique_via_approx(const GadgetInstance& inst, const BallBuildOptions& opts) {
    AccuracySchedule sched = choose_beta(inst);
    BetaApproxResult approx = beta_approx_normmax(inst.polytope, inst.p, sched.beta, opts);
    // Step 3 of the decision procedure: the approximate witness clears the
    // NO threshold exactly when the true maximum reaches the YES threshold.
    return pnorm_pow(approx.witness, inst.p) > inst.no_threshold;
}

bool decide_clique_via_approx(const Graph& G, std::size_t k, int p,
                              const BallBuildOptions& opts) {
    return decide_clique_via_approx(build_gadget(G, k, p), opts);
}

}  // namespace normax
