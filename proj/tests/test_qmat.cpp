#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "decolab/qmat.hpp"
#include "decolab/states.hpp"

using namespace decolab;
using qmat::Divergence;

namespace {

Matrix random_hermitian(int d, Rng& rng) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = rng.normal_complex();
    return Complex(0.5, 0.0) * (m + m.adjoint().eval());
}

Matrix random_density(int d, Rng& rng) {
    return states::random_state(states::RandomKind::ginibre_mixed, {d}, 0, rng).matrix;
}

Matrix ketbra(const Vector& v) { return v * v.adjoint(); }

Vector plus_state() {
    Vector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return v;
}

}  // namespace

TEST_CASE("herm_eig on identity and sigma_z") {
    const auto id = qmat::herm_eig(Matrix::Identity(2, 2));
    CHECK(id.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(id.eigenvalues(1) == doctest::Approx(1.0));
    CHECK((id.eigenvectors.adjoint() * id.eigenvectors - Matrix::Identity(2, 2)).norm() < 1e-10);

    Matrix sz = Matrix::Zero(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    const auto s = qmat::herm_eig(sz);
    CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(-1.0));
    CHECK(std::abs(s.eigenvectors(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(s.eigenvectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("herm_eig reconstructs a random 4x4 Hermitian") {
    Rng rng(42);
    const Matrix m = random_hermitian(4, rng);
    const auto s = qmat::herm_eig(m);
    CHECK((s.reconstruct() - m).norm() < 1e-10);
    CHECK((s.eigenvectors.adjoint() * s.eigenvectors - Matrix::Identity(4, 4)).norm() < 1e-10);
    for (int i = 0; i + 1 < 4; ++i) CHECK(s.eigenvalues(i) >= s.eigenvalues(i + 1));
}

TEST_CASE("herm_eig rejects bad input") {
    CHECK_THROWS_AS(qmat::herm_eig(Matrix::Zero(2, 3)), NonSquare);
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = Complex(0.0, 1.0);
    m(1, 0) = Complex(0.0, 1.0);  // equal, not conjugate
    CHECK_THROWS_AS(qmat::herm_eig(m), NonHermitian);
}

TEST_CASE("tensor block ordering") {
    CHECK((qmat::tensor(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) - Matrix::Identity(4, 4))
              .norm() == doctest::Approx(0.0));

    Matrix sz = Matrix::Zero(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    const Matrix t = qmat::tensor(sz, Matrix::Identity(2, 2));
    CHECK(t(0, 0).real() == doctest::Approx(1.0));
    CHECK(t(1, 1).real() == doctest::Approx(1.0));
    CHECK(t(2, 2).real() == doctest::Approx(-1.0));
    CHECK(t(3, 3).real() == doctest::Approx(-1.0));

    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const Matrix e = qmat::tensor(p0, p1);
    CHECK(e(1, 1).real() == doctest::Approx(1.0));
    CHECK(e.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("partial trace of a Bell state and a product state") {
    const Matrix bell = ketbra(states::bell_phi_plus().amplitudes);
    const Matrix redA = qmat::partial_trace(bell, {2, 2}, {0});
    CHECK((redA - Matrix::Identity(2, 2) * 0.5).norm() < 1e-12);

    Rng rng(7);
    const Matrix ra = random_density(2, rng);
    const Matrix rb = random_density(3, rng);
    const Matrix prod = qmat::tensor(ra, rb);
    CHECK((qmat::partial_trace(prod, {2, 3}, {0}) - ra).norm() < 1e-12);
    CHECK((qmat::partial_trace(prod, {2, 3}, {1}) - rb).norm() < 1e-12);
}

TEST_CASE("measured state traced two ways agrees") {
    // isometry-then-trace versus direct block construction of the
    // post-measurement classical-quantum state
    Rng rng(11);
    const Matrix rho = random_density(8, rng);
    const std::vector<int> dims = {2, 2, 2};

    // V = sum_j |j>_M (x) |j><j|_A acting on the A factor
    Matrix v = Matrix::Zero(4, 2);
    v(0, 0) = 1.0;
    v(3, 1) = 1.0;
    const Matrix full = qmat::tensor(v, Matrix::Identity(4, 4));
    const Matrix measured = full * rho * full.adjoint();
    const Matrix via_isometry = qmat::partial_trace(measured, {2, 2, 2, 2}, {0, 3});

    Matrix direct = Matrix::Zero(4, 4);
    for (int j = 0; j < 2; ++j) {
        Matrix pj = Matrix::Zero(2, 2);
        pj(j, j) = 1.0;
        const Matrix pfull = qmat::tensor(pj, Matrix::Identity(4, 4));
        const Matrix sigma_j = qmat::partial_trace((pfull * rho * pfull).eval(), dims, {2});
        Matrix reg = Matrix::Zero(2, 2);
        reg(j, j) = 1.0;
        direct += qmat::tensor(reg, sigma_j);
    }
    CHECK((via_isometry - direct).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("partial trace validates input") {
    const Matrix m = Matrix::Identity(4, 4);
    CHECK_THROWS_AS(qmat::partial_trace(m, {2, 3}, {0}), DimMismatch);
    CHECK_THROWS_AS(qmat::partial_trace(m, {2, 2}, {}), EmptyKeep);
    CHECK_THROWS_AS(qmat::partial_trace(m, {2, 2}, {2}), DimMismatch);
}

TEST_CASE("tracing factors one at a time matches tracing jointly") {
    Rng rng(13);
    const Matrix rho = random_density(12, rng);
    const std::vector<int> dims = {2, 3, 2};
    const Matrix joint = qmat::partial_trace(rho, dims, {1});
    const Matrix first = qmat::partial_trace(rho, dims, {1, 2});
    const Matrix stepwise = qmat::partial_trace(first, {3, 2}, {0});
    CHECK((joint - stepwise).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("divergences on hand-checkable pairs") {
    Rng rng(3);
    const Matrix rho = random_density(3, rng);
    for (auto kind : {Divergence::relative_entropy, Divergence::hilbert_schmidt,
                      Divergence::trace_distance}) {
        CHECK(qmat::divergence(kind, rho, rho) == doctest::Approx(0.0).epsilon(1e-9));
    }
    CHECK(qmat::divergence(Divergence::fidelity, rho, rho) == doctest::Approx(1.0));

    Vector zero(2);
    zero << 1.0, 0.0;
    CHECK(qmat::divergence(Divergence::fidelity, ketbra(zero), ketbra(plus_state())) ==
          doctest::Approx(0.5));

    const Matrix mixed = Matrix::Identity(2, 2) * 0.5;
    CHECK(qmat::divergence(Divergence::relative_entropy, ketbra(plus_state()), mixed) ==
          doctest::Approx(1.0));
}

TEST_CASE("relative entropy signals support violation") {
    Vector zero(2), one(2);
    zero << 1.0, 0.0;
    one << 0.0, 1.0;
    const double d = qmat::divergence(Divergence::relative_entropy, ketbra(zero), ketbra(one));
    CHECK(std::isinf(d));
    CHECK(d > 0.0);
}

TEST_CASE("divergence validates states") {
    const Matrix good = Matrix::Identity(2, 2) * 0.5;
    CHECK_THROWS_AS(qmat::divergence(Divergence::fidelity, good, Matrix::Identity(3, 3) / 3.0),
                    DimMismatch);
    CHECK_THROWS_AS(qmat::divergence(Divergence::fidelity, good, Matrix::Identity(2, 2) * 0.45),
                    NotAState);
}

TEST_CASE("fidelity is symmetric, bounded, and discriminates") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + static_cast<int>(rng.index(4));
        const Matrix a = random_density(d, rng);
        const Matrix b = random_density(d, rng);
        const double fab = qmat::divergence(Divergence::fidelity, a, b);
        const double fba = qmat::divergence(Divergence::fidelity, b, a);
        CHECK(fab >= -1e-10);
        CHECK(fab <= 1.0 + 1e-10);
        CHECK(fab == doctest::Approx(fba).epsilon(1e-8));
        if ((a - b).cwiseAbs().maxCoeff() > 1e-8) CHECK(fab < 1.0 - 1e-8);
    }
}

TEST_CASE("pinsker chain on random pairs") {
    Rng rng(23);
    const double ln2 = std::log(2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + static_cast<int>(rng.index(5));
        const Matrix a = random_density(d, rng);
        const Matrix b = random_density(d, rng);
        const double rel = qmat::divergence(Divergence::relative_entropy, a, b);
        const double td = qmat::divergence(Divergence::trace_distance, a, b);
        const double hs = qmat::divergence(Divergence::hilbert_schmidt, a, b);
        CHECK(ln2 * rel >= 2.0 * td * td - 1e-10);
        CHECK(2.0 * td * td >= hs - 1e-10);
    }
}

TEST_CASE("matrix log and sqrt round-trip on the support") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.index(4));
        const Matrix rho = random_density(d, rng);
        const Matrix root = qmat::sqrtm_psd(rho);
        CHECK((root * root - rho).cwiseAbs().maxCoeff() < 1e-9);

        const Matrix lg = qmat::log2m_support(rho);
        // exp(log rho) = rho on the support: rebuild through the spectrum
        const auto s = qmat::herm_eig(lg);
        Matrix expd = Matrix::Zero(d, d);
        const auto rs = qmat::herm_eig(rho);
        Matrix support = Matrix::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            if (rs.eigenvalues(i) > 1e-12) {
                support += rs.eigenvectors.col(i) * rs.eigenvectors.col(i).adjoint();
            }
        }
        for (int i = 0; i < d; ++i) {
            expd += std::exp2(s.eigenvalues(i)) * (s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint());
        }
        CHECK(((support * expd * support) - rho).cwiseAbs().maxCoeff() < 1e-9);
    }
}
