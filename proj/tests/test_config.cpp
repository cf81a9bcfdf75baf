#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "coopnet/baseline.hpp"
#include "coopnet/config.hpp"
#include "coopnet/sweep.hpp"

using namespace coopnet;

TEST_CASE("empty input keeps the shipped defaults") {
    RunConfig cfg = parse_config("");
    CHECK(cfg.params.b == 2000.0);
    CHECK(cfg.params.W == 1e7);
    CHECK(cfg.params.T == 4e-4);
    CHECK(cfg.params.tau == doctest::Approx(0.2 * 4e-4));
    CHECK(cfg.params.M == 7);
    CHECK(cfg.params.lambda_p == 0.0);
    CHECK(cfg.params.lambda_s == 1.0);
    CHECK(cfg.optimizer.grid_wp == 200);
    CHECK(cfg.sim.seed == 1);
    CHECK(cfg.sim.warmup == 10000);
    CHECK(cfg.output.empty());
}

TEST_CASE("overrides, comments and the tau-follows-T default") {
    RunConfig cfg = parse_config(
        "# comment line\n"
        "T = 8e-4   # trailing comment\n"
        "lambda_p = 0.25\n"
        "grid_wp = 40\n"
        "seed = 99\n");
    CHECK(cfg.params.T == 8e-4);
    CHECK(cfg.params.tau == doctest::Approx(0.2 * 8e-4));
    CHECK(cfg.params.lambda_p == 0.25);
    CHECK(cfg.optimizer.grid_wp == 40);
    CHECK(cfg.sim.seed == 99);

    RunConfig explicit_tau = parse_config("T = 8e-4\ntau = 1e-4\n");
    CHECK(explicit_tau.params.tau == 1e-4);
}

TEST_CASE("gain lists reduce to the best antenna") {
    RunConfig cfg = parse_config("sigma_s_sd_list = 0.05, 0.2, 0.1\n"
                                 "sigma_s_pd_list = 0.4,0.9\n");
    CHECK(cfg.params.sigma_s_sd == 0.2);
    CHECK(cfg.params.sigma_s_pd == 0.9);
}

TEST_CASE("bad input is rejected with the offending line") {
    CHECK_THROWS_AS(parse_config("nonsense_key = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("b 2000\n"), ParseError);
    CHECK_THROWS_AS(parse_config("b = \n"), ParseError);
    CHECK_THROWS_AS(parse_config("b = two thousand\n"), ParseError);
    try {
        parse_config("b = 2000\nwat = 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("out-of-range parameters are rejected") {
    CHECK_THROWS_AS(parse_config("lambda_p = 1.5\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("lambda_p = -0.1\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("M = 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("tau = 5e-4\n"), ValidationError);  // >= T
    CHECK_THROWS_AS(parse_config("grid_wp = 1\n"), ValidationError);
}

TEST_CASE("sweep application validates per point") {
    SystemParams p;
    apply_sweep_value(p, "lambda_p", 0.5);
    CHECK(p.lambda_p == 0.5);
    apply_sweep_value(p, "M", 6.0);
    CHECK(p.M == 6);
    CHECK_THROWS_AS(apply_sweep_value(p, "lambda_p", 2.0), ValidationError);
    CHECK_THROWS_AS(apply_sweep_value(p, "bogus", 1.0), ValidationError);
}

TEST_CASE("sweep covers the inclusive range and reruns byte-identically") {
    RunConfig cfg = parse_config(
        "sweep_var = lambda_p\n"
        "sweep_from = 0.1\n"
        "sweep_to = 0.5\n"
        "sweep_step = 0.1\n"
        "grid_wp = 8\ngrid_tpf = 8\ngrid_tpr = 8\n");
    auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 5);
    CHECK(rows.front().sweep_value == doctest::Approx(0.1));
    CHECK(rows.back().sweep_value == doctest::Approx(0.5));

    std::ostringstream a, b;
    write_csv(a, rows);
    write_csv(b, run_sweep(cfg));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind(kSweepCsvHeader, 0) == 0);
}

TEST_CASE("sweep rows recompute from the public operations") {
    RunConfig cfg = parse_config("grid_wp = 10\ngrid_tpf = 10\ngrid_tpr = 10\n");
    SystemParams p = cfg.params;
    p.lambda_p = 0.5;
    SweepRow row = evaluate_point(p, cfg.optimizer, cfg.sim, 0.5);
    BaselineReport base = noncoop_optimize(p);
    OptimumReport opt = optimize(p, cfg.optimizer);
    CHECK(row.B_nc_max == base.B_max);
    CHECK(row.feasible == opt.feasible);
    CHECK(row.Wp == opt.alloc.Wp);
    CHECK(row.mu_s == opt.mu_s);
    CHECK(std::isnan(row.mu_s_hat));  // no slots requested, no simulation
}
