#pragma once

#include <vector>

#include "decolab/common.hpp"
#include "decolab/qmat.hpp"

namespace decolab::states {

/// Normalized density operator on a tensor-factored space. Factor labels
/// (A, B, C, ...) are positional in `dims`.
struct DensityOperator {
    Matrix matrix;
    std::vector<int> dims;

    DensityOperator() = default;
    DensityOperator(Matrix m, std::vector<int> d);

    int dim() const { return static_cast<int>(matrix.rows()); }
    int factors() const { return static_cast<int>(dims.size()); }

    /// Marginal on the listed factors (original order kept).
    DensityOperator marginal(const std::vector<int>& keep) const;

    /// Largest eigenvalue; a state is treated as pure when this is >= 1 - 1e-9.
    double top_eigenvalue() const;
    bool is_pure(double tolerance = tol::kPurity) const;
};

struct PureState {
    Vector amplitudes;
    std::vector<int> dims;

    PureState() = default;
    PureState(Vector a, std::vector<int> d);

    DensityOperator density() const;
};

enum class StateClass { CC, CQ, unknown_beyond_CQ };

enum class RandomKind { haar_pure, ginibre_mixed };

/// Spectral purification: sum_k sqrt(lambda_k) |v_k>|k> with the purifier
/// appended as the last factor, of dimension rank(rho).
PureState purify(const DensityOperator& rho);

/// haar_pure draws a rotation-invariant unit vector; ginibre_mixed returns
/// G G^dagger / Tr(G G^dagger) with G a (d x rank) standard complex Gaussian.
/// rank 0 means full rank.
DensityOperator random_state(RandomKind kind, const std::vector<int>& dims, int rank, Rng& rng);

/// Classifies a bipartite state against the CC subset of CQ subset of N
/// hierarchy. `cut` is the number of leading factors forming the A side.
/// Separability beyond CQ is not decided.
StateClass classify(const DensityOperator& rho, int cut = 1);

// Common constructions.
PureState ket(const Vector& amplitudes, const std::vector<int>& dims);
PureState bell_phi_plus();
DensityOperator maximally_mixed(const std::vector<int>& dims);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Matrix random_unitary(int d, Rng& rng);

/// Reduced density matrix of a pure state on the kept factors, computed from
/// the amplitudes without forming the full density matrix.
Matrix pure_marginal(const PureState& psi, const std::vector<int>& keep);

/// Rotates one factor of a pure state by a unitary of matching dimension.
PureState rotate_factor(const PureState& psi, int factor, const Matrix& u);

}  // namespace decolab::states
