#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "coopnet/channel.hpp"

using namespace coopnet;

namespace {
SystemParams base() { return SystemParams{}; }
}

TEST_CASE("full-band primary outage matches hand value") {
    SystemParams p = base();
    LinkSpec link{p.b / p.T, p.W, p.snr_p(), p.sigma_p_pd};
    // 1 - exp(-(2^{0.5} - 1)/2)
    CHECK(outage_probability(link) == doctest::Approx(0.1870671606).epsilon(1e-9));
}

TEST_CASE("degenerate links are certain outages") {
    CHECK(outage_probability({1e6, 0.0, 10.0, 1.0}) == 1.0);
    CHECK(outage_probability({1e6, 1e6, 0.0, 1.0}) == 1.0);
    CHECK(outage_probability({1e6, 1e6, 10.0, 0.0}) == 1.0);
    // spectral efficiency demand far beyond any fade realization
    CHECK(outage_probability({2000.0 * 1e7, 1e3, 10.0, 1.0}) == 1.0);
    CHECK(outage_probability({0.0, 1e6, 10.0, 1.0}) == 0.0);
}

TEST_CASE("outage is monotone in rate and in gain*snr") {
    double prev = 0.0;
    for (double r = 1e5; r <= 2e6; r += 1e5) {
        double o = outage_probability({r, 1e6, 10.0, 0.5});
        CHECK(o >= prev);
        prev = o;
    }
    CHECK(outage_probability({1e6, 1e6, 10.0, 0.5}) >
          outage_probability({1e6, 1e6, 10.0, 1.0}));
}

TEST_CASE("secondary rate depends on sensing") {
    SystemParams p = base();
    CHECK(secondary_rate(PrimaryState::Idle, p) == doctest::Approx(p.b / (p.T - p.tau)));
    CHECK(secondary_rate(PrimaryState::Forward, p) == doctest::Approx(p.b / (p.T - p.tau)));
    CHECK(secondary_rate(PrimaryState::Retransmission, p) == doctest::Approx(p.b / p.T));
}

TEST_CASE("minimum bandwidth-time product pins the antenna threshold") {
    SystemParams p = base();
    p.M = 5;
    double e5 = min_bandwidth_time_product(p);
    p.M = 6;
    double e6 = min_bandwidth_time_product(p);
    p.M = 7;
    double e7 = min_bandwidth_time_product(p);
    CHECK(e5 == doctest::Approx(6116.3).epsilon(1e-3));
    CHECK(e6 == doctest::Approx(3565.2).epsilon(1e-3));
    CHECK(e7 == doctest::Approx(2485.1).epsilon(1e-3));
    CHECK(e5 > p.W * p.T);
    CHECK(e6 <= p.W * p.T);
}

TEST_CASE("product threshold solves the separate-decoding equation") {
    // [1 - exp(-(2^{b/E} - 1)/(sigma*snr))]^M == Q_target
    for (int M : {2, 6, 7, 10}) {
        SystemParams p = base();
        p.M = M;
        double E = min_bandwidth_time_product(p);
        double single = -std::expm1(-(std::exp2(p.b / E) - 1.0) /
                                    (p.sigma_p_s * p.snr_p()));
        CHECK(std::pow(single, M) == doctest::Approx(p.Q_target).epsilon(1e-9));
    }
}

TEST_CASE("MRC with one antenna degenerates to a plain outage") {
    SystemParams p = base();
    p.M = 1;
    ResourceAllocation a{5e6, 2e-4, 0.0};
    LinkSpec link{p.b / a.TpF, a.Wp, p.snr_p(), p.sigma_p_s};
    CHECK(std::fabs(mrc_decode_failure(p, a) - outage_probability(link)) < 1e-12);
}

TEST_CASE("separate decoding upper-bounds MRC") {
    SystemParams p = base();
    for (int M : {2, 4, 7}) {
        p.M = M;
        for (double wp : {2e6, 5e6, 9e6}) {
            ResourceAllocation a{wp, 3e-4, 0.0};
            double exact = mrc_decode_failure(p, a);
            double bound = mrc_decode_failure_bound(p, a);
            CHECK(exact <= bound + 1e-15);
            CHECK(exact >= 0.0);
        }
    }
}

TEST_CASE("decode failure needs a positive bandwidth-time product") {
    SystemParams p = base();
    CHECK_THROWS_AS(mrc_decode_failure(p, {0.0, 1e-4, 0.0}), std::domain_error);
    CHECK_THROWS_AS(mrc_decode_failure(p, {1e6, 0.0, 0.0}), std::domain_error);
}
