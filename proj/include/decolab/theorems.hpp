#pragma once

#include <map>
#include <string>
#include <vector>

#include "decolab/common.hpp"
#include "decolab/entropies.hpp"
#include "decolab/infotypes.hpp"
#include "decolab/states.hpp"

namespace decolab::theorems {

struct VerificationReport {
    std::string claim;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_gap = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::map<std::string, double> diagnostics;
};

VerificationReport make_report(std::string claim, double lhs, double rhs, double tolerance);

/// Maximizes F(rho, sum_j P_j sigma P_j) over states sigma by alternating the
/// purification-alignment step with the exact block-diagonal update. The
/// result is a certified lower bound on the maximum.
struct FidelityAscent {
    double fidelity = 0.0;
    Matrix argmax;
    int iterations = 0;
    bool converged = true;
};
FidelityAscent max_fidelity_pinched(const Matrix& rho, const std::vector<Matrix>& projectors,
                                    Rng& rng, int restarts = 3, int max_iters = 4000);

/// Projectors of z embedded into the full space of `dims`.
std::vector<Matrix> embed_projectors(const info::InfoType& z, const std::vector<int>& dims);

/// Off-diagonal sum sum_{j, k != j} ||P_j rho P_k||^2 with ||M||^2 = Tr(M^dag M).
double offdiagonal_norm_sum(const Matrix& rho, const std::vector<Matrix>& projectors);

/// Conditional-entropy identities for a pure tripartite state: the missing
/// Z information equals the distance of rho_AB from its pinched version
/// (relative-entropy, Hilbert-Schmidt, and fidelity/guessing forms).
std::vector<VerificationReport> verify_thm1(const states::DensityOperator& rho_abc,
                                            const info::InfoType& z, Rng& rng);

/// Entanglement generated by a coherent Z measurement: distillable/relative
/// entropy route and the geometric-entanglement route.
std::vector<VerificationReport> verify_thm2(const states::DensityOperator& rho_abc,
                                            const info::InfoType& z, Rng& rng);

/// Averaged complementary certainty over an equivalence class of MU bases:
/// Monte Carlo route against the quadratic conditional entropy, plus the
/// exact term-decomposition route for the class average.
std::vector<VerificationReport> verify_thm3(const states::DensityOperator& rho_abc,
                                            const info::InfoType& z, int samples, Rng& rng);

/// Monte Carlo estimate of the certainty about a class member, averaged over
/// the equivalence class of bases mutually unbiased with the given kets.
struct ClassAverageQuad {
    double mean = 0.0;
    double se = 0.0;
    int samples = 0;
};
ClassAverageQuad class_average_certainty_quad(const entropy::TransferMap& map,
                                              const std::vector<Vector>& z_kets, int samples,
                                              Rng& rng);

/// Residual of the pure-state exchange identity
/// Tr[T_B(|a><b|) T_B(|c><d|)] = Tr[T_C(|a><d|) T_C(|c><b|)]
/// on a ket quadruple of the A factor.
double exchange_identity_residual(const states::DensityOperator& rho_abc, const Vector& a,
                                  const Vector& b, const Vector& c, const Vector& d);

/// Joint zero/nonzero test of the four classicality conditions at the 1e-6
/// threshold.
VerificationReport verify_corollary(const states::DensityOperator& rho_abc,
                                    const info::InfoType& z, Rng& rng, int samples = 50);

/// Uncertainty relation H(Z|C) >= C(W|B) for class members W, and the
/// Pinsker chain on (rho_AB, pinched rho_AB).
std::vector<VerificationReport> verify_inequalities(const states::DensityOperator& rho_abc,
                                                    const info::InfoType& z, Rng& rng,
                                                    int sampled_bases = 20);

// Shared helpers used by the two-time paradigm and the security layer.

/// -H(M_Z|AB) evaluated on the post-measurement pure state.
double epr_rate(const states::DensityOperator& rho_abc, const info::InfoType& z);

/// D(rho_tilde_{M_Z AB} || V_Z E_Z(rho_AB) V_Z^dag), the separable upper bound.
double separable_bound(const states::DensityOperator& rho_abc, const info::InfoType& z);

/// Throws NotPure unless the top eigenvalue reaches 1 - 1e-9; returns the
/// dominant eigenvector as a pure state.
states::PureState require_pure(const states::DensityOperator& rho);

}  // namespace decolab::theorems
