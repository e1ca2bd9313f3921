#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "decolab/entropies.hpp"
#include "decolab/infotypes.hpp"
#include "decolab/qmat.hpp"
#include "decolab/states.hpp"
#include "decolab/theorems.hpp"

using namespace decolab;

namespace {

states::DensityOperator random_pure(const std::vector<int>& dims, Rng& rng) {
    return states::random_state(states::RandomKind::haar_pure, dims, 0, rng);
}

// Pinches the AB marginal in z and re-purifies, so condition (i) of the
// classicality corollary holds by construction.
states::DensityOperator classical_instance(const std::vector<int>& dims, const info::InfoType& z,
                                           Rng& rng) {
    const states::DensityOperator rho = random_pure(dims, rng);
    const Matrix rho_ab = qmat::partial_trace(rho.matrix, rho.dims, {0, 1});
    const states::DensityOperator marg(rho_ab, {dims[0], dims[1]});
    const states::PureState psi = states::purify(info::pinch(marg, z));
    return psi.density();
}

info::InfoType coarse_of(const info::InfoType& z) {
    if (z.dim() == 2) return info::coarse_grain(z, {{0, 1}});
    std::vector<std::vector<int>> grouping = {{0, 1}};
    for (int r = 2; r < z.count(); ++r) grouping.push_back({r});
    return info::coarse_grain(z, grouping);
}

}  // namespace

TEST_CASE("thm1 with a trivial conditioning system reduces to plain entropies") {
    Rng rng(31);
    const states::DensityOperator rho = random_pure({2, 2, 1}, rng);
    const info::InfoType z = info::random_rank_one(2, 0, rng);
    const auto reports = theorems::verify_thm1(rho, z, rng);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) CHECK(r.passed);

    // lhs of (i) is the classical entropy of the outcome distribution
    const entropy::CqDecomposition d = entropy::cq_decompose(rho, z, 2);
    CHECK(reports[0].lhs == doctest::Approx(entropy::classical_entropy(d.probs)).epsilon(1e-9));
}

TEST_CASE("thm1 on an already-pinched state has zero left-hand sides") {
    Rng rng(37);
    const info::InfoType z = info::random_rank_one(2, 0, rng);
    const states::DensityOperator rho = classical_instance({2, 2, 2}, z, rng);
    const auto reports = theorems::verify_thm1(rho, z, rng);
    CHECK(reports[0].lhs == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(reports[1].lhs == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(reports[2].lhs == doctest::Approx(1.0).epsilon(1e-6));  // p_guess = 1
    for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("thm1 holds on a seeded ensemble with rank-one and coarse types") {
    Rng rng(41);
    for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 3}}) {
        for (int trial = 0; trial < 10; ++trial) {
            const states::DensityOperator rho = random_pure(dims, rng);
            const info::InfoType z = info::random_rank_one(dims[0], 0, rng);
            for (const info::InfoType& t : {z, coarse_of(z)}) {
                for (const auto& r : theorems::verify_thm1(rho, t, rng)) {
                    INFO(r.claim, " gap=", r.abs_gap, " tol=", r.tolerance);
                    CHECK(r.passed);
                }
            }
        }
    }
}

TEST_CASE("thm1 rejects mixed input") {
    Rng rng(43);
    const states::DensityOperator mixed =
        states::random_state(states::RandomKind::ginibre_mixed, {2, 2, 2}, 0, rng);
    const info::InfoType z = info::standard_basis(2, 0);
    CHECK_THROWS_AS(theorems::verify_thm1(mixed, z, rng), NotPure);
}

TEST_CASE("measuring the plus state creates one full unit of entanglement") {
    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    Matrix rho = qmat::tensor(qmat::tensor(plus * plus.adjoint(), Matrix::Identity(1, 1)),
                              Matrix::Identity(1, 1));
    const states::DensityOperator state(rho, {2, 1, 1});
    const info::InfoType z = info::standard_basis(2, 0);
    CHECK(theorems::epr_rate(state, z) == doctest::Approx(1.0).epsilon(1e-9));

    Rng rng(47);
    const auto reports = theorems::verify_thm2(state, z, rng);
    for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("a decohered qubit creates no entanglement when measured") {
    // maximally mixed A purified into C; B trivial
    const states::PureState psi = states::purify(states::maximally_mixed({2}));
    Matrix rho = psi.amplitudes * psi.amplitudes.adjoint();
    const states::DensityOperator state(rho, {2, 1, 2});
    const info::InfoType z = info::standard_basis(2, 0);

    Rng rng(53);
    const auto reports = theorems::verify_thm2(state, z, rng);
    CHECK(reports[0].lhs == doctest::Approx(0.0).epsilon(1e-9));  // E_D = 0
    CHECK(reports[1].lhs == doctest::Approx(0.0).epsilon(1e-5));  // E_G = 0
    for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("measuring an unbiased basis on a pure state maximizes entanglement") {
    Rng rng(59);
    for (int d : {2, 3}) {
        const states::DensityOperator pure_a = random_pure({d}, rng);
        // basis containing the state itself: geometric entanglement zero
        const Matrix u_aligned = [&] {
            const qmat::HermitianSpectrum s = qmat::herm_eig(pure_a.matrix);
            return s.eigenvectors;
        }();
        Matrix full = qmat::tensor(qmat::tensor(pure_a.matrix, Matrix::Identity(1, 1)),
                                   Matrix::Identity(1, 1));
        const states::DensityOperator tri(full, {d, 1, 1});

        const info::InfoType aligned = info::basis_from_unitary(u_aligned, 0);
        const auto aligned_reports = theorems::verify_thm2(tri, aligned, rng);
        CHECK(aligned_reports[1].lhs == doctest::Approx(0.0).epsilon(1e-5));

        const info::InfoType w = info::fourier_mu_basis(aligned);
        const auto mu_reports = theorems::verify_thm2(tri, w, rng);
        CHECK(mu_reports[1].lhs == doctest::Approx(1.0 - 1.0 / d).epsilon(1e-5));
        for (const auto& r : mu_reports) CHECK(r.passed);
    }
}

TEST_CASE("thm2 holds on a seeded ensemble") {
    Rng rng(61);
    for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 3}}) {
        for (int trial = 0; trial < 8; ++trial) {
            const states::DensityOperator rho = random_pure(dims, rng);
            const info::InfoType z = info::random_rank_one(dims[0], 0, rng);
            for (const info::InfoType& t : {z, coarse_of(z)}) {
                for (const auto& r : theorems::verify_thm2(rho, t, rng)) {
                    INFO(r.claim, " gap=", r.abs_gap);
                    CHECK(r.passed);
                }
            }
        }
    }
}

TEST_CASE("thm3 Monte Carlo and exact routes pass on seeded ensembles") {
    Rng rng(67);
    for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 3}}) {
        for (int trial = 0; trial < 6; ++trial) {
            const states::DensityOperator rho = random_pure(dims, rng);
            const info::InfoType z = info::random_rank_one(dims[0], 0, rng);
            const auto reports = theorems::verify_thm3(rho, z, 10000, rng);
            REQUIRE(reports.size() == 2);
            INFO("mc gap=", reports[0].abs_gap, " tol=", reports[0].tolerance);
            CHECK(reports[0].passed);
            INFO("exact gap=", reports[1].abs_gap);
            CHECK(reports[1].passed);
            CHECK(reports[1].tolerance == 1e-9);
        }
    }
}

TEST_CASE("thm3 on a classical instance gives zero on both sides") {
    Rng rng(71);
    const info::InfoType z = info::random_rank_one(2, 0, rng);
    const states::DensityOperator rho = classical_instance({2, 2, 2}, z, rng);
    const auto reports = theorems::verify_thm3(rho, z, 2000, rng);
    CHECK(reports[0].rhs == doctest::Approx(0.0).epsilon(1e-9));  // H_Q(Z|C)
    CHECK(std::abs(reports[0].lhs) < 1e-9);                       // sampled certainties
    for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("thm3 requires a rank-one type") {
    Rng rng(73);
    const states::DensityOperator rho = random_pure({3, 2, 3}, rng);
    const info::InfoType z = coarse_of(info::standard_basis(3, 0));
    CHECK_THROWS_AS(theorems::verify_thm3(rho, z, 100, rng), NotRankOne);
}

TEST_CASE("interferometer relation ties off-diagonals to leaked information") {
    Rng rng(79);
    for (double v : {0.0, 0.4, 0.8, 1.0}) {
        Matrix rho_s(2, 2);
        rho_s << 0.5, 0.5 * v, 0.5 * v, 0.5;
        const states::PureState psi = states::purify(states::DensityOperator(rho_s, {2}));
        const states::DensityOperator tri(psi.amplitudes * psi.amplitudes.adjoint(),
                                          {2, 1, psi.dims.back()});
        const info::InfoType z = info::standard_basis(2, 0);

        const entropy::CqDecomposition d = entropy::cq_decompose(tri, z, 2);
        const double half_hq = 0.5 * entropy::cond_entropy_quad(d, d.rho_c);
        CHECK(std::norm(rho_s(0, 1)) == doctest::Approx(half_hq).epsilon(1e-10));

        const auto reports = theorems::verify_thm3(tri, z, 4000, rng);
        for (const auto& r : reports) CHECK(r.passed);
    }
}

TEST_CASE("exchange identity holds on random ket quadruples") {
    Rng rng(83);
    for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 3}}) {
        const states::DensityOperator rho = random_pure(dims, rng);
        for (int trial = 0; trial < 50; ++trial) {
            auto ket = [&]() {
                Vector v(dims[0]);
                for (int i = 0; i < dims[0]; ++i) v(i) = rng.normal_complex();
                v.normalize();
                return v;
            };
            CHECK(theorems::exchange_identity_residual(rho, ket(), ket(), ket(), ket()) < 1e-10);
        }
    }
}

TEST_CASE("off-diagonal specialization with trivial B") {
    Rng rng(89);
    const states::DensityOperator rho_s =
        states::random_state(states::RandomKind::ginibre_mixed, {3}, 0, rng);
    const states::PureState psi = states::purify(rho_s);
    const states::DensityOperator tri(psi.amplitudes * psi.amplitudes.adjoint(),
                                      {3, 1, psi.dims.back()});
    const info::InfoType z = info::standard_basis(3, 0);
    const entropy::CqDecomposition d = entropy::cq_decompose(tri, z, 2);
    double offdiag = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            if (j != k) offdiag += std::norm(rho_s.matrix(j, k));
        }
    CHECK(entropy::cond_entropy_quad(d, d.rho_c) == doctest::Approx(offdiag).epsilon(1e-10));
}

TEST_CASE("corollary classifies constructed instances with no mistakes") {
    Rng rng(97);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const info::InfoType z = info::random_rank_one(2, 0, rng);
        const bool classical = trial % 2 == 0;
        const states::DensityOperator rho =
            classical ? classical_instance({2, 2, 2}, z, rng) : random_pure({2, 2, 2}, rng);
        const theorems::VerificationReport r = theorems::verify_corollary(rho, z, rng);
        CHECK(r.passed);
        const bool detected_zero = r.lhs <= r.tolerance;
        CHECK(detected_zero == classical);
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("corollary flags a maximally nonclassical state") {
    Rng rng(101);
    const states::PureState bell = states::bell_phi_plus();
    const states::DensityOperator rho(
        qmat::tensor(bell.amplitudes * bell.amplitudes.adjoint(), Matrix::Identity(1, 1)),
        {2, 2, 1});
    const theorems::VerificationReport r =
        theorems::verify_corollary(rho, info::standard_basis(2, 0), rng);
    CHECK(r.passed);
    CHECK(r.rhs > 1e-6);  // even the smallest residual is macroscopic
}

TEST_CASE("uncertainty relation and Pinsker chain hold on an ensemble") {
    Rng rng(103);
    for (int trial = 0; trial < 25; ++trial) {
        const states::DensityOperator rho = random_pure({2, 2, 2}, rng);
        const info::InfoType z = info::random_rank_one(2, 0, rng);
        for (const auto& r : theorems::verify_inequalities(rho, z, rng)) {
            INFO(r.claim, " gap=", r.abs_gap);
            CHECK(r.passed);
        }
    }
}

TEST_CASE("perfect presence forces zero complementary certainty") {
    // GHZ-type state: Z on A perfectly recorded in C
    Vector ghz = Vector::Zero(8);
    ghz(0) = 1.0 / std::sqrt(2.0);
    ghz(7) = 1.0 / std::sqrt(2.0);
    const states::DensityOperator rho(ghz * ghz.adjoint(), {2, 2, 2});
    const info::InfoType z = info::standard_basis(2, 0);

    Rng rng(107);
    const auto reports = theorems::verify_inequalities(rho, z, rng);
    CHECK(reports[0].lhs == doctest::Approx(0.0).epsilon(1e-9));  // H(Z|C) = 0
    CHECK(std::abs(reports[0].rhs) < 1e-9);                       // max C(W|B) = 0
    for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("product states satisfy the inequalities") {
    Rng rng(109);
    const states::DensityOperator a = random_pure({2}, rng);
    const states::DensityOperator b = random_pure({2}, rng);
    const states::DensityOperator c = random_pure({2}, rng);
    const Matrix prod = qmat::tensor(qmat::tensor(a.matrix, b.matrix), c.matrix);
    const states::DensityOperator rho(prod, {2, 2, 2});
    const info::InfoType z = info::random_rank_one(2, 0, rng);
    for (const auto& r : theorems::verify_inequalities(rho, z, rng)) CHECK(r.passed);
}

TEST_CASE("reports are invariant under isometries on the purifying factor") {
    Rng rng(113);
    const states::DensityOperator rho = random_pure({2, 2, 2}, rng);
    const info::InfoType z = info::random_rank_one(2, 0, rng);

    const qmat::HermitianSpectrum s = qmat::herm_eig(rho.matrix);
    Vector top = s.eigenvectors.col(0);
    top.normalize();
    const states::PureState psi(top, rho.dims);
    const Matrix u = states::random_unitary(2, rng);
    const states::PureState rotated = states::rotate_factor(psi, 2, u);
    const states::DensityOperator rho_rot = rotated.density();

    Rng rng_a(7), rng_b(7);
    const auto base = theorems::verify_thm1(rho, z, rng_a);
    const auto moved = theorems::verify_thm1(rho_rot, z, rng_b);
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(std::abs(base[i].lhs - moved[i].lhs) < 1e-8);
        CHECK(std::abs(base[i].rhs - moved[i].rhs) < 1e-6);
    }

    Rng rng_c(9), rng_d(9);
    const auto t2a = theorems::verify_thm2(rho, z, rng_c);
    const auto t2b = theorems::verify_thm2(rho_rot, z, rng_d);
    for (std::size_t i = 0; i < t2a.size(); ++i) {
        CHECK(std::abs(t2a[i].lhs - t2b[i].lhs) < 1e-8);
    }
}
