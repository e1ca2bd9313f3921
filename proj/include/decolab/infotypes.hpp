#pragma once

#include <optional>
#include <vector>

#include "decolab/common.hpp"
#include "decolab/states.hpp"

namespace decolab::info {

/// Type of information about one subsystem: orthogonal projectors summing to
/// the identity on that factor. Rank-one throughout means an orthonormal basis.
struct InfoType {
    std::vector<Matrix> projectors;
    int subsystem = 0;

    InfoType() = default;
    InfoType(std::vector<Matrix> projs, int subsys);

    int count() const { return static_cast<int>(projectors.size()); }
    int dim() const { return static_cast<int>(projectors.front().rows()); }
    bool rank_one() const;

    /// Basis kets for a rank-one type, with a deterministic phase convention
    /// (largest component real positive).
    std::vector<Vector> kets() const;
};

/// Member of the equivalence class B_Z: the canonical MU base basis together
/// with the diagonal-in-Z phases (and optional index permutation) that rotate
/// it inside the class.
struct MUBasisSample {
    InfoType base_basis;
    std::vector<double> phases;
    std::optional<std::vector<int>> permutation;

    /// Materializes the sampled basis as an InfoType.
    InfoType basis(const InfoType& z) const;
};

/// sum_j (Z_j ox I) rho (Z_j ox I); trace-preserving and idempotent.
states::DensityOperator pinch(const states::DensityOperator& rho, const InfoType& z);

/// Pinch of a bare matrix whose whole space is the subsystem z acts on.
Matrix pinch_local(const Matrix& m, const InfoType& z);

/// V = sum_j |j>_M ox Z_j, an (N d_A) x d_A isometry storing the outcome in a
/// register.
Matrix measurement_isometry(const InfoType& z);

/// Applies the measurement isometry on z's factor of a pure state; the
/// register becomes a new factor inserted just before that factor.
states::PureState apply_measurement(const states::PureState& psi, const InfoType& z);

/// Merges projectors along a partition of the outcome indices; groups keep
/// the order of their lowest original index.
InfoType coarse_grain(const InfoType& z, const std::vector<std::vector<int>>& grouping);

/// Discrete-Fourier basis |W_k> = d^{-1/2} sum_j e^{2 pi i jk/d} |Z_j>,
/// mutually unbiased with z.
InfoType fourier_mu_basis(const InfoType& z);

/// Applies diag(e^{i theta_j}) in the z basis to the Fourier base point,
/// yielding another member of the same equivalence class.
InfoType apply_class_phases(const InfoType& z, const std::vector<double>& phases,
                            const std::optional<std::vector<int>>& permutation = std::nullopt);

/// Uniform phases on [0, 2 pi); permutations included only when requested.
MUBasisSample sample_equivalence_class(const InfoType& z, Rng& rng, bool with_permutation = false);

/// Orthonormal basis as an InfoType from unitary columns.
InfoType basis_from_unitary(const Matrix& u, int subsystem);

InfoType standard_basis(int d, int subsystem);

InfoType random_rank_one(int d, int subsystem, Rng& rng);

}  // namespace decolab::info
