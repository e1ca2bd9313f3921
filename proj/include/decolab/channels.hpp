#pragma once

#include <vector>

#include "decolab/common.hpp"
#include "decolab/infotypes.hpp"
#include "decolab/states.hpp"

namespace decolab::channels {

/// Completely positive trace-preserving map in Kraus form.
struct QuantumChannel {
    std::vector<Matrix> kraus;
    int d_in = 0;
    int d_out = 0;

    QuantumChannel() = default;
    QuantumChannel(std::vector<Matrix> k, int din, int dout);

    Matrix apply(const Matrix& rho) const;

    /// Stinespring isometry V: input -> output (x) environment, with the
    /// environment dimension equal to the Kraus count.
    Matrix stinespring() const;

    /// Environment output of the same isometry (complementary channel).
    Matrix complementary_apply(const Matrix& rho) const;
};

/// Tripartite pure state |Omega> = (I (x) V)|Phi> on (reference, output,
/// environment); the reference marginal is maximally mixed.
struct ChoiTriple {
    states::PureState omega;

    states::DensityOperator density() const { return omega.density(); }
};

ChoiTriple choi_triple(const QuantumChannel& ch);

enum class InfoSide { kept_by_output, leaked_to_env };

/// H(Z|S1) or H(Z|E1) on the Choi triple. The reference factor carries the
/// transposed copy of the input, so the basis is conjugated there; this makes
/// the value the channel's treatment of the input-space z information.
double channel_info(const QuantumChannel& ch, const info::InfoType& z, InfoSide side);

/// The three views of how well the channel preserves z off-diagonals:
/// the direct Kraus-route norm sum, the quadratic entropy leaked to the
/// environment, and the Monte Carlo class-averaged certainty at the output.
struct DecoherenceProfile {
    double offdiagonal_sum = 0.0;
    double quad_leaked = 0.0;
    double mc_mean = 0.0;
    double mc_se = 0.0;
    int samples = 0;
};

DecoherenceProfile decoherence_profile(const QuantumChannel& ch, const info::InfoType& z,
                                       int samples, Rng& rng);

// Standard channel constructors used by fixtures and tests.
QuantumChannel phase_flip(double p);
QuantumChannel depolarizing(double p);
QuantumChannel identity_channel(int d);
QuantumChannel completely_dephasing(int d);

}  // namespace decolab::channels
