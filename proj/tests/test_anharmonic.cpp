#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "envbounds/anharmonic.hpp"
#include "envbounds/envelope.hpp"
#include "envbounds/errors.hpp"

using namespace envbounds;

TEST_SUITE("anharmonic") {
    TEST_CASE("harmonic limit") {
        for (int m = 2; m <= 6; ++m) {
            const AnharmonicModel model(m, 0.25, 0.3);
            CHECK(model.lambda_of_energy(1.0) == 0.0);
            CHECK(model.energy_of_lambda(0.0) == 1.0);
        }
        for (const StateIndex s : {StateIndex{1, 0, 3}, StateIndex{2, 1, 3}, StateIndex{3, 2, 5}}) {
            const auto model = AnharmonicModel::lower_bound(2, s);
            CHECK(model.energy_of_lambda(0.0) == 4.0 * s.n + 2.0 * s.l + s.d - 4.0);
        }
    }

    TEST_CASE("reference values") {
        const AnharmonicModel lower(2, 0.25, 0.0625);
        CHECK(std::abs(lower.energy_of_lambda(0.01) - 1.00248) < 1e-5);
        CHECK(AnharmonicModel(2, 0.25, 0.1766277).lambda_of_energy(1.00697) == doctest::Approx(0.01).epsilon(2e-3));
        const double a = 0.6482831016 * 0.6482831016;
        CHECK(AnharmonicModel(2, a, a * a).lambda_of_energy(1.30074201499697) == doctest::Approx(0.01).epsilon(1e-9));
        const auto e_l = AnharmonicModel::mixed(3, {1, 0, 1});
        CHECK(std::abs(e_l.energy_of_lambda(1.0) - 1.42400) < 5e-6);
    }

    TEST_CASE("round trip, equivalence with minimize, critical point") {
        std::mt19937_64 rng(20261015);
        std::uniform_int_distribution<int> pick_m(2, 6);
        std::uniform_real_distribution<double> coef(0.05, 5.0), shift(0.0, 50.0);
        for (int i = 0; i < 50; ++i) {
            const int m = pick_m(rng);
            const AnharmonicModel model(m, coef(rng), coef(rng));
            const double e = model.harmonic_energy() + shift(rng);
            const double lam = model.lambda_of_energy(e);
            CAPTURE(m);
            CAPTURE(e);
            CHECK(std::abs(model.energy_of_lambda(lam) - e) <= 1e-10 * e);

            const std::vector<EnvelopeTerm> terms{{1.0, 2.0, std::sqrt(model.alpha())},
                                                  {lam, 2.0 * m, std::pow(model.beta(), 1.0 / (2 * m))}};
            const auto min = minimize(terms);
            CHECK(min.value == doctest::Approx(e).epsilon(1e-9));
            CHECK(min.r_star * min.r_star == doctest::Approx(model.critical_r2(e)).epsilon(1e-8));
        }
    }

    TEST_CASE("lambda(E) is increasing") {
        for (int m = 2; m <= 6; ++m) {
            const auto model = AnharmonicModel::upper_bound(m, {1, 0, 1});
            double prev = -1.0;
            for (int i = 0; i < 1000; ++i) {
                const double lam = model.lambda_of_energy(model.harmonic_energy() + 0.02 * i);
                CHECK(lam > prev);
                prev = lam;
            }
        }
    }

    TEST_CASE("no cancellation near the harmonic point") {
        const AnharmonicModel model(2, 0.25, 0.0625);
        const double lam = 1e-12;
        const double e = model.energy_of_lambda(lam);
        CHECK(e > 1.0);
        CHECK(model.lambda_of_energy(e) == doctest::Approx(lam).epsilon(1e-6));
    }

    TEST_CASE("ground-state closed form matches the general model") {
        for (int m = 2; m <= 5; ++m) {
            for (int d : {1, 2, 3}) {
                const auto model = AnharmonicModel::lower_bound(m, {1, 0, d});
                for (double e : {d + 0.001, d + 0.5, d + 20.0}) {
                    CAPTURE(m);
                    CAPTURE(d);
                    CHECK(beta_lambda_ground_state(e, m, d) ==
                          doctest::Approx(model.beta() * model.lambda_of_energy(e)).epsilon(1e-12));
                }
            }
        }
    }

    TEST_CASE("parameter reduction") {
        auto r = reduce_parameters({1, 1, 3.5, 3});
        CHECK(r.lambda == 3.5);
        CHECK(r.energy_scale == 1.0);
        r = reduce_parameters({1, 4, 1, 2});
        CHECK(r.lambda == doctest::Approx(0.125));
        CHECK(r.energy_scale == doctest::Approx(2.0));
        CHECK_THROWS_AS(reduce_parameters({0, 1, 1, 2}), DomainError);
    }

    TEST_CASE("comparison formulas") {
        for (int m = 2; m <= 4; ++m) CHECK(bhattacharya_energy(0, m) == 1.0);
        CHECK(bhattacharya_energy(10, 2) == doctest::Approx(2.45004994).epsilon(1e-8));
        CHECK(bhattacharya_energy(1, 3) == doctest::Approx(1.44869679).epsilon(1e-8));
        CHECK(dasgupta_energy(0, 2, 1, 1.0) == 3.0);
        CHECK(dasgupta_energy(10, 2, 0, 1.06036209) == doctest::Approx(2.43020713424009).epsilon(1e-12));
        CHECK_THROWS_AS(bhattacharya_energy(1, 5), DomainError);
        CHECK(bhattacharya_energy(1, 5, 1.3) > 1.0);
        CHECK_THROWS_AS(dasgupta_energy(1, 2, -1, 1.0), DomainError);
    }

    TEST_CASE("invalid models") {
        CHECK_THROWS_AS(AnharmonicModel(1, 1, 1), DomainError);
        CHECK_THROWS_AS(AnharmonicModel(2, 0, 1), DomainError);
        CHECK_THROWS_AS(AnharmonicModel(2, 1, -1), DomainError);
        const AnharmonicModel model(2, 1, 1);
        CHECK_THROWS_AS(model.lambda_of_energy(1.9), DomainError);
        CHECK_THROWS_AS(model.energy_of_lambda(-1), DomainError);
    }
}
