#include "catch_amalgamated.hpp"

#include <cmath>
#include <set>

#include "mabsec/environment.hpp"
#include "mabsec/errors.hpp"
#include "mabsec/history.hpp"
#include "mabsec/rng.hpp"
#include "support.hpp"

using namespace mabsec;
using Catch::Approx;

TEST_CASE("arm ids are one-based and range checked") {
    CHECK(Arm(1).slot() == 0);
    CHECK(Arm::from_slot(4) == Arm(5));
    CHECK(Arm(2) < Arm(3));
    CHECK_NOTHROW(check_arm(Arm(3), 3));
    CHECK_THROWS_AS(check_arm(Arm(0), 3), ArgumentError);
    CHECK_THROWS_AS(check_arm(Arm(4), 3), ArgumentError);
}

TEST_CASE("rng streams are reproducible and separated by stream id") {
    RngStream a(42, StreamRole::Environment), b(42, StreamRole::Environment), c(42, StreamRole::Learner),
        d(43, StreamRole::Environment);
    for (int i = 0; i < 100; ++i) {
        const double x = a.normal();
        CHECK(x == b.normal());
        CHECK(x != c.normal());
        CHECK(x != d.normal());
    }
}

TEST_CASE("uniform_int and coin stay in range") {
    RngStream r(7, 0);
    for (int i = 0; i < 1000; ++i) {
        const int k = r.uniform_int(3, 5);
        CHECK(k >= 3);
        CHECK(k <= 5);
        const double u = r.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("derive_seed separates cells and trials") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t c = 0; c < 20; ++c) {
        for (std::uint64_t k = 0; k < 50; ++k) seen.insert(derive_seed(9, c, k));
    }
    CHECK(seen.size() == 1000);
    CHECK(derive_seed(9, 1, 2) == derive_seed(9, 1, 2));
    CHECK(derive_seed(9, 1, 2) != derive_seed(9, 2, 1));
    CHECK(derive_seed(9, 1, 2) != derive_seed(10, 1, 2));
}

TEST_CASE("environment validation") {
    EnvironmentSpec env{3, 0.1, {0.1, 0.2, 0.3}, Arm(3)};
    CHECK_NOTHROW(env.validate());
    SECTION("one arm") {
        env.num_arms = 1;
        env.means = {0.0};
        env.target = Arm(1);
        CHECK_THROWS_AS(env.validate(), ArgumentError);
    }
    SECTION("means length") {
        env.means.pop_back();
        CHECK_THROWS_AS(env.validate(), ArgumentError);
    }
    SECTION("negative sigma") {
        env.sigma = -0.1;
        CHECK_THROWS_AS(env.validate(), ArgumentError);
    }
    SECTION("target out of range") {
        env.target = Arm(4);
        CHECK_THROWS_AS(env.validate(), ArgumentError);
    }
}

TEST_CASE("sample_reward") {
    EnvironmentSpec env{2, 0.0, {0.7, 0.0}, Arm(2)};
    RngStream rng(1, StreamRole::Environment);

    SECTION("zero variance returns the mean") { CHECK(sample_reward(env, Arm(1), rng) == 0.7); }

    SECTION("same seed and stream reproduce the draw") {
        env.sigma = 0.1;
        RngStream again(1, StreamRole::Environment);
        CHECK(sample_reward(env, Arm(1), rng) == sample_reward(env, Arm(1), again));
    }

    SECTION("sample mean of 1e5 draws within 3 sigma / sqrt(n)") {
        env.sigma = 0.1;
        env.means = {0.0, 0.0};
        long double s = 0.0L;
        const int n = 100000;
        for (int i = 0; i < n; ++i) s += sample_reward(env, Arm(1), rng);
        CHECK(std::fabs(static_cast<double>(s / n)) <= 0.001);
    }

    SECTION("arm out of range") { CHECK_THROWS_AS(sample_reward(env, Arm(3), rng), ArgumentError); }
}

TEST_CASE("record_round") {
    History h(2);

    SECTION("post is pre minus alpha") {
        const auto& r = h.record_round(1, Arm(1), 0.5, 0.2);
        CHECK(r.post_reward == 0.5 - 0.2);
        CHECK(r.post_reward == Approx(0.3));
        CHECK(h.cumulative_cost() == Approx(0.2));
    }

    SECTION("no-attack round leaves cost unchanged") {
        const auto& r = h.record_round(1, Arm(1), 0.5, 0.0);
        CHECK(r.post_reward == 0.5);
        CHECK(h.cumulative_cost() == 0.0);
    }

    SECTION("cost sums absolute manipulations") {
        h.record_round(1, Arm(1), 0.5, 0.2);
        h.record_round(2, Arm(2), 0.5, -0.1);
        h.record_round(3, Arm(1), 0.5, 0.0);
        CHECK(h.cumulative_cost() == Approx(0.3).epsilon(1e-15));
        CHECK(h.count(Arm(1)) + h.count(Arm(2)) == 3);
    }

    SECTION("non-consecutive rounds are a protocol error") {
        CHECK_THROWS_AS(h.record_round(2, Arm(1), 0.0, 0.0), ProtocolError);
        h.record_round(1, Arm(1), 0.0, 0.0);
        CHECK_THROWS_AS(h.record_round(1, Arm(1), 0.0, 0.0), ProtocolError);
        CHECK_THROWS_AS(h.record_round(3, Arm(1), 0.0, 0.0), ProtocolError);
    }

    SECTION("arm out of range") { CHECK_THROWS_AS(h.record_round(1, Arm(3), 0.0, 0.0), ArgumentError); }
}

TEST_CASE("empirical_means") {
    History h(3);
    CHECK_FALSE(h.empirical_means(Arm(2)).has_value());
    h.record_round(1, Arm(2), 0.1, 0.0);
    h.record_round(2, Arm(2), 0.5, 0.2);
    const auto m = *h.empirical_means(Arm(2));
    CHECK(m.count == 2);
    CHECK(m.post_mean == Approx(0.2));
    CHECK(m.pre_mean == Approx(0.3));
    CHECK_FALSE(h.empirical_means(Arm(1)).has_value());
    CHECK_THROWS_AS(h.empirical_means(Arm(4)), ArgumentError);
}

TEST_CASE("empirical means match a full rescan bit for bit") {
    testsupport::Gen g(11);
    for (int rep = 0; rep < 20; ++rep) {
        const History h = testsupport::random_history(g, 4, 50, 0.3, 0.3);
        for (int a = 1; a <= 4; ++a) {
            long n = 0;
            long double pre = 0.0L, post = 0.0L;
            for (const auto& r : h.rounds()) {
                if (r.arm != Arm(a)) continue;
                ++n;
                pre += r.pre_reward;
                post += r.post_reward;
            }
            const auto m = h.empirical_means(Arm(a));
            if (n == 0) {
                CHECK_FALSE(m.has_value());
                continue;
            }
            CHECK(m->count == n);
            CHECK(m->pre_mean == static_cast<double>(pre / n));
            CHECK(m->post_mean == static_cast<double>(post / n));
        }
    }
}
