#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "decolab/discord.hpp"
#include "decolab/infotypes.hpp"
#include "decolab/qmat.hpp"
#include "decolab/security.hpp"
#include "decolab/states.hpp"

using namespace decolab;
using security::Mode;

namespace {

discord::BasisOptimizerConfig quick_cfg(std::uint64_t seed, int restarts = 8) {
    discord::BasisOptimizerConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    return cfg;
}

states::DensityOperator bell_density() {
    const states::PureState b = states::bell_phi_plus();
    return states::DensityOperator(b.amplitudes * b.amplitudes.adjoint(), {2, 2});
}

states::DensityOperator copied_bit() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    return states::DensityOperator(m, {2, 2});
}

states::DensityOperator cq_not_cc() {
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    Matrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    return states::DensityOperator(0.5 * qmat::tensor(p0, p0) + 0.5 * qmat::tensor(p1, plus),
                                   {2, 2});
}

}  // namespace

TEST_CASE("a perfectly copied bit distills nothing against its purifier") {
    const info::InfoType z = info::standard_basis(2, 0);
    const security::SecurityReport r =
        security::secure_rate(copied_bit(), Mode::fixed_basis, z);
    CHECK(r.asymptotic_rate == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("a Bell pair distills one secure bit per copy even adversarially") {
    const security::SecurityReport r =
        security::secure_rate(bell_density(), Mode::adversarial_one_way, std::nullopt, quick_cfg(1));
    CHECK(r.asymptotic_rate == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.adversarial_basis.has_value());
}

TEST_CASE("classical correlation kills the adversarial rate") {
    const security::SecurityReport r =
        security::secure_rate(cq_not_cc(), Mode::adversarial_one_way, std::nullopt, quick_cfg(2));
    CHECK(r.asymptotic_rate < 1e-7);
}

TEST_CASE("adversarial rates match the corresponding discord values") {
    Rng rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        const states::DensityOperator rho =
            states::random_state(states::RandomKind::ginibre_mixed, {2, 2}, 0, rng);
        const auto cfg = quick_cfg(10 + trial, 6);
        const double one_way =
            security::secure_rate(rho, Mode::adversarial_one_way, std::nullopt, cfg).asymptotic_rate;
        CHECK(one_way == doctest::Approx(discord::deficit(rho, cfg).value).epsilon(1e-8));

        const double two_way =
            security::secure_rate(rho, Mode::adversarial_two_way, std::nullopt, cfg).asymptotic_rate;
        CHECK(two_way >= one_way - 1e-6);
    }
}

TEST_CASE("single-shot length inverts the hashing tradeoff") {
    const info::InfoType z = info::standard_basis(2, 0);

    // delta = 1/2 removes the penalty term
    const states::DensityOperator bell = bell_density();
    const security::SecurityReport full =
        security::single_shot_length(bell, 0.5, Mode::adversarial_one_way, std::nullopt, quick_cfg(3));
    CHECK(full.ell_exact == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(full.single_shot_length == 1);

    // delta = 1/4 costs two bits: the exact length goes negative and clamps
    const security::SecurityReport tight =
        security::single_shot_length(bell, 0.25, Mode::adversarial_one_way, std::nullopt, quick_cfg(4));
    CHECK(tight.ell_exact == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(tight.single_shot_length == 0);

    // classical states have nothing to distill at any delta
    const security::SecurityReport cq =
        security::single_shot_length(cq_not_cc(), 0.3, Mode::adversarial_one_way, std::nullopt,
                                     quick_cfg(5));
    CHECK(cq.single_shot_length == 0);

    // fixed-basis mode needs the basis
    CHECK_NOTHROW(security::single_shot_length(bell, 0.5, Mode::fixed_basis, z));
    CHECK_THROWS_AS(security::single_shot_length(bell, 0.6, Mode::fixed_basis, z), BadDelta);
    CHECK_THROWS_AS(security::single_shot_length(bell, 0.0, Mode::fixed_basis, z), BadDelta);
}

TEST_CASE("single-shot identity ties back to the min-entropy discord") {
    Rng rng(7);
    const states::DensityOperator rho =
        states::random_state(states::RandomKind::ginibre_mixed, {2, 2}, 0, rng);
    const auto cfg = quick_cfg(6);
    const security::SecurityReport r =
        security::single_shot_length(rho, 0.25, Mode::adversarial_one_way, std::nullopt, cfg);
    const double d_min = discord::min_entropy_discord(rho, cfg).value;
    CHECK(r.diagnostics.at("min_entropy_identity") == doctest::Approx(d_min).epsilon(1e-6));
}

TEST_CASE("length is monotone in the security demand and adversary strength") {
    Rng rng(9);
    const info::InfoType z = info::standard_basis(2, 0);
    for (int trial = 0; trial < 3; ++trial) {
        const states::DensityOperator rho =
            states::random_state(states::RandomKind::ginibre_mixed, {2, 2}, 0, rng);
        const auto cfg = quick_cfg(20 + trial, 6);
        double prev = std::numeric_limits<double>::infinity();
        for (double delta : {0.5, 0.25, 0.1, 0.05}) {
            const security::SecurityReport r =
                security::single_shot_length(rho, delta, Mode::fixed_basis, z, cfg);
            CHECK(r.ell_exact <= prev + 1e-12);
            prev = r.ell_exact;
        }
        const double fixed =
            security::single_shot_length(rho, 0.25, Mode::fixed_basis, z, cfg).ell_exact;
        const double adversarial =
            security::single_shot_length(rho, 0.25, Mode::adversarial_one_way, std::nullopt, cfg)
                .ell_exact;
        CHECK(fixed >= adversarial - 1e-8);
    }
}

TEST_CASE("task triangle on degenerate and extremal inputs") {
    const info::InfoType z = info::standard_basis(2, 0);

    // already pinched: the two hypotheses coincide and nothing distinguishes
    const states::DensityOperator pinched = copied_bit();
    const security::TaskTriangle flat = security::task_triangle(pinched, z, 5);
    CHECK(flat.distinguish_exponent == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(flat.max_gap < 1e-8);
    CHECK(flat.probability == doctest::Approx(1.0));

    const security::TaskTriangle bell = security::task_triangle(bell_density(), z, 10);
    CHECK(bell.distinguish_exponent == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(bell.max_gap < 1e-8);
    CHECK(bell.probability == doctest::Approx(std::exp2(-10.0)).epsilon(1e-9));
}

TEST_CASE("the three task exponents coincide on random states") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const states::DensityOperator rho =
            states::random_state(states::RandomKind::ginibre_mixed, {2, 2}, 0, rng);
        const info::InfoType z = info::random_rank_one(2, 0, rng);
        const security::TaskTriangle tri = security::task_triangle(rho, z, 3);
        INFO("gap=", tri.max_gap);
        CHECK(tri.max_gap < 1e-8);
    }
}

TEST_CASE("mixing adversary strategies cannot beat the best fixed basis") {
    Rng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        const states::DensityOperator rho =
            states::random_state(states::RandomKind::ginibre_mixed, {2, 2}, 0, rng);
        std::vector<info::InfoType> bases;
        std::vector<double> weights;
        const int n_bases = 2 + static_cast<int>(rng.index(3));
        double total = 0.0;
        for (int b = 0; b < n_bases; ++b) {
            bases.push_back(info::random_rank_one(2, 0, rng));
            const double w = rng.uniform() + 0.1;
            weights.push_back(w);
            total += w;
        }
        for (double& w : weights) w /= total;
        const security::MixedStrategy mix =
            security::mixed_strategy_demo(rho, bases, weights, quick_cfg(30 + trial, 6));
        CHECK(mix.slack >= -1e-8);
    }
}

TEST_CASE("mixed strategy validates its inputs") {
    const states::DensityOperator rho = bell_density();
    const info::InfoType z = info::standard_basis(2, 0);
    CHECK_THROWS_AS(security::mixed_strategy_demo(rho, {z}, {0.5}, quick_cfg(1, 2)), Error);
    CHECK_THROWS_AS(security::mixed_strategy_demo(rho, {}, {}, quick_cfg(1, 2)), Error);
}
