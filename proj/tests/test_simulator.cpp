#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "coopnet/coop.hpp"
#include "coopnet/simulator.hpp"

using namespace coopnet;

namespace {
ResourceAllocation typical() { return {5e6, 3e-4, 1e-4}; }
}

TEST_CASE("identical seeds give bit-identical runs") {
    SystemParams p;
    p.lambda_p = 0.4;
    SimStats a = run(p, typical(), 50000, 123);
    SimStats b = run(p, typical(), 50000, 123);
    CHECK(a.pi0_hat == b.pi0_hat);
    CHECK(a.mu_s_hat == b.mu_s_hat);
    CHECK(a.mu_p_hat == b.mu_p_hat);
    CHECK(a.energy_p_total == b.energy_p_total);
    CHECK(a.energy_s_total == b.energy_s_total);
    CHECK(a.final_Qp == b.final_Qp);
    CHECK(a.queue_trace == b.queue_trace);

    SimStats c = run(p, typical(), 50000, 124);
    CHECK(a.mu_s_hat != c.mu_s_hat);
}

TEST_CASE("manual stepping reproduces run() without warm-up") {
    SystemParams p;
    p.lambda_p = 0.4;
    SimOptions opts;
    opts.warmup = 0;
    const std::uint64_t n = 20000;
    SimStats agg = run(p, typical(), n, 55, opts);

    SlotRng rng(55);
    NodeQueues q;
    Feedback fb = Feedback::None;
    double ep = 0.0, es = 0.0;
    std::uint64_t s_acks = 0, p_acks = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        SlotOutcome out = step(q, p, typical(), fb, rng, opts);
        fb = out.feedback;
        ep += out.energy_p;
        es += out.energy_s;
        if (out.primary_success) ++p_acks;
        if (out.secondary_success) ++s_acks;
        CHECK(q.Qps <= 1);  // one-packet relaying buffer
    }
    CHECK(agg.energy_p_total == doctest::Approx(ep).epsilon(1e-12));
    CHECK(agg.energy_s_total == doctest::Approx(es).epsilon(1e-12));
    CHECK(agg.mu_p_hat == doctest::Approx(double(p_acks) / n).epsilon(1e-12));
    CHECK(agg.mu_s_hat == doctest::Approx(double(s_acks) / n).epsilon(1e-12));
    CHECK(agg.final_Qp == q.Qp);
}

TEST_CASE("slot energy follows the active intervals") {
    SystemParams p;
    p.lambda_p = 1.0;  // always backlogged
    ResourceAllocation a = typical();
    SlotRng rng(9);
    NodeQueues q;
    Feedback fb = Feedback::None;
    SimOptions opts;
    for (int i = 0; i < 2000; ++i) {
        SlotOutcome out = step(q, p, a, fb, rng, opts);
        double tp = out.state == PrimaryState::Retransmission ? a.TpR : a.TpF;
        if (out.state == PrimaryState::Idle) {
            CHECK(out.energy_p == 0.0);
        } else {
            CHECK(out.energy_p == doctest::Approx(p.Pp * a.Wp * tp).epsilon(1e-12));
        }
        CHECK(out.energy_s >= 0.0);
        fb = out.feedback;
    }
}

TEST_CASE("empty system stays idle and silent") {
    SystemParams p;
    p.lambda_p = 0.0;
    p.lambda_s = 0.0;
    SimStats s = run(p, typical(), 10000, 3);
    CHECK(s.pi0_hat == 1.0);
    CHECK(s.mu_s_hat == 0.0);
    CHECK(s.mu_p_hat == 0.0);
    CHECK(s.energy_p_total == 0.0);
    CHECK(s.energy_s_total == 0.0);
    CHECK(s.final_Qp == 0);
}

TEST_CASE("long run tracks the analytic chain and throughput") {
    SystemParams p;
    p.lambda_p = 0.5;
    ResourceAllocation a{6250000.0, 4e-4, 4e-4 / 24.0};
    SuccessProbabilities sp = success_probabilities(p, a);
    ChainSolution c = solve_chain(p, sp.alpha_p, sp.Gamma_p);
    REQUIRE(c.stable);
    double mu = secondary_throughput(p, a, c);

    SimStats s = run(p, a, 1000000, 11);
    double se0 = std::sqrt(c.pi0 * (1 - c.pi0) / double(s.slots));
    CHECK(std::fabs(s.pi0_hat - c.pi0) < 3 * se0);
    CHECK(std::fabs(s.sum_pi_hat - c.sum_pi) <
          3 * std::sqrt(c.sum_pi * (1 - c.sum_pi) / double(s.slots)));
    CHECK(std::fabs(s.mu_s_hat - mu) / mu < 0.01);
}

TEST_CASE("overloaded primary queue drifts at lambda - eta") {
    SystemParams p;
    p.lambda_p = 0.95;
    ResourceAllocation a{8e6, 3.2e-4, 3.2e-4};
    SuccessProbabilities sp = success_probabilities(p, a);
    ChainSolution c = solve_chain(p, sp.alpha_p, sp.Gamma_p);
    REQUIRE_FALSE(c.stable);

    const std::uint64_t n = 200000;
    SimOptions opts;
    opts.warmup = 0;
    SimStats s = run(p, a, n, 17, opts);
    double drift = double(s.final_Qp) / double(n);
    CHECK(drift == doctest::Approx(p.lambda_p - c.eta).epsilon(0.15));
    CHECK(s.queue_tail.back() > 0.0);  // deep tail actually visited
}
