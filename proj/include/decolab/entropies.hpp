#pragma once

#include <vector>

#include "decolab/common.hpp"
#include "decolab/infotypes.hpp"
#include "decolab/states.hpp"

namespace decolab::entropy {

/// Outcome probabilities and conditional states of the post-measurement
/// classical-quantum state. sigma[j] = p_j * cond[j]; outcomes with
/// p_j <= 1e-12 are dead: they contribute nothing to entropy sums and carry
/// no POVM variable.
struct CqDecomposition {
    std::vector<double> probs;
    std::vector<Matrix> sigma;
    std::vector<Matrix> cond;
    std::vector<bool> live;
    Matrix rho_c;

    int outcomes() const { return static_cast<int>(probs.size()); }
    int live_count() const;
};

/// Result of the optimal-guessing optimization. povm covers every outcome
/// (dead outcomes hold zero operators folded into a live partner).
struct GuessResult {
    double p_guess = 0.0;
    std::vector<Matrix> povm;
    double residual = 0.0;
    double dual_gap = 0.0;
    bool converged = true;
    int iterations = 0;
};

struct GuessOptions {
    double residual_target = 1e-9;
    int max_iterations = 50000;
    bool force_iterative = false;  // bypass the Helstrom closed form (used by tests)
};

enum class EntropyKind { vn, quad, min };

/// Linear action X on A -> Tr_{everything but target}[(X ox I) rho],
/// precomputed on the ketbra basis of the A factor. This is the workhorse
/// behind repeated conditional-state evaluations.
class TransferMap {
  public:
    TransferMap(const states::DensityOperator& rho, int a_factor, int target_factor);

    int a_dim() const { return da_; }
    int target_dim() const { return dt_; }
    const Matrix& target_marginal() const { return rho_t_; }

    Matrix apply(const Matrix& x_on_a) const;
    /// Conditional operator of the rank-one projector |w><w|.
    Matrix sigma_of_ket(const Vector& w) const;
    const Matrix& basis_map(int j, int k) const { return maps_[static_cast<std::size_t>(j) * da_ + k]; }

  private:
    int da_ = 0;
    int dt_ = 0;
    std::vector<Matrix> maps_;
    Matrix rho_t_;
};

/// p_j = Tr[(Z_j ox I) rho], sigma_{C,j} = Tr_{not C}[(Z_j ox I) rho (Z_j ox I)].
CqDecomposition cq_decompose(const states::DensityOperator& rho, const info::InfoType& z,
                             int condition_on);
CqDecomposition cq_decompose(const TransferMap& map, const info::InfoType& z);

/// H(Z|C) = H(classical p) + sum_j p_j H(rho_{C,j}) - H(rho_C), in [0, log2 N].
double cond_entropy_vn(const CqDecomposition& decomp);

/// H_Q(Z|C) = Tr(rho_C^2) - sum_j Tr(sigma_j^2).
/// Throws InconsistentMarginal when rho_c differs from sum_j sigma_j.
double cond_entropy_quad(const CqDecomposition& decomp, const Matrix& rho_c);

/// Pair-sum form sum_{j, k != j} Tr(sigma_j sigma_k), algebraically equal to
/// cond_entropy_quad.
double cond_entropy_quad_pairs(const CqDecomposition& decomp);

/// Optimal probability of guessing the outcome from the conditional system.
/// Two live outcomes use the Helstrom closed form; more run a monotone
/// fixed-point iteration on the discrimination optimality conditions with a
/// dual certificate.
GuessResult p_guess(const CqDecomposition& decomp, const GuessOptions& opts = {});

double min_entropy(const CqDecomposition& decomp, const GuessOptions& opts = {});

/// Certainty measures: log2 N - H for vn/min, (N-1)Tr(rho_C^2) - N H_Q for quad.
double certainty(EntropyKind kind, const CqDecomposition& decomp, const Matrix& rho_c,
                 const GuessOptions& opts = {});

// Alternative certainty-quad routes (two-formula oracle for tests).
double certainty_quad_purity_form(const CqDecomposition& decomp, const Matrix& rho_c);
double certainty_quad_pairdist_form(const CqDecomposition& decomp);

// Fast conditional-entropy paths over a transfer map for a rank-one basis
// given as kets; used inside optimizer and Monte Carlo loops.
double cond_entropy_vn_kets(const TransferMap& map, const std::vector<Vector>& kets);
double cond_entropy_quad_kets(const TransferMap& map, const std::vector<Vector>& kets);
double p_guess_kets(const TransferMap& map, const std::vector<Vector>& kets,
                    const GuessOptions& opts = {});

// Scalar entropies, base 2.
double vn_entropy(const Matrix& rho);
double classical_entropy(const std::vector<double>& p);
double binary_entropy(double p);
double quad_entropy(const Matrix& rho);  // 1 - Tr(rho^2)

}  // namespace decolab::entropy
