#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decolab/common.hpp"
#include "decolab/entropies.hpp"
#include "decolab/infotypes.hpp"
#include "decolab/states.hpp"

namespace decolab::discord {

struct BasisOptimizerConfig {
    int restarts = 20;
    int max_iters = 2000;
    double tolerance = 1e-6;
    std::uint64_t seed = 1;
    int mc_samples = 2000;  // class-average objectives reuse one phase set
};

/// Result of a basis-minimized measure. Values are certified upper bounds on
/// the true minimum (the optimization is non-convex); independent routes to
/// the same measure land in optimizer_diag.
struct DiscordReport {
    std::string measure;
    double value = 0.0;
    info::InfoType argmin_basis;
    std::optional<info::InfoType> argmin_basis_b;  // two-way measures
    std::map<std::string, double> optimizer_diag;
    bool is_upper_bound = true;
};

/// Smallest objective value over restarts of a local descent in the
/// Hermitian-generator parametrization of rank-one bases; deterministic per
/// cfg.seed.
std::pair<double, info::InfoType> min_over_bases(
    const std::function<double(const info::InfoType&)>& objective, int d,
    const BasisOptimizerConfig& cfg);

/// One-way information deficit: min_Z [H(pinched) - H(rho)], cross-computed
/// as min_Z H(Z|C) on a purification.
DiscordReport deficit(const states::DensityOperator& rho_ab, const BasisOptimizerConfig& cfg = {});

/// Geometric discord: min_Z D_HS(rho, pinched rho), cross-computed via the
/// quadratic conditional entropy and the off-diagonal sum.
DiscordReport geometric(const states::DensityOperator& rho_ab, const BasisOptimizerConfig& cfg = {});

/// Basis-minimized min-entropy, reported together with the geometric
/// entanglement value 1 - 2^(-value) it pins down.
DiscordReport min_entropy_discord(const states::DensityOperator& rho_ab,
                                  const BasisOptimizerConfig& cfg = {});

/// Basis-minimized 1 - p_guess (geometric-entanglement form).
DiscordReport eg_discord(const states::DensityOperator& rho_ab,
                         const BasisOptimizerConfig& cfg = {});

/// Mutual-information gap to the pinched state.
DiscordReport original_discord(const states::DensityOperator& rho_ab,
                               const BasisOptimizerConfig& cfg = {});

/// Basis-minimized class-averaged certainty about mutually unbiased bases
/// (Monte Carlo with common random numbers across optimizer steps).
DiscordReport complementarity_discord(const states::DensityOperator& rho_ab,
                                      entropy::EntropyKind kind, int samples,
                                      const BasisOptimizerConfig& cfg = {});

enum class TwoWayKind { vn, min };

/// Minimum information about a product of bases missing from the purifier,
/// optimized by block-coordinate descent over the two local bases.
DiscordReport two_way_discord(const states::DensityOperator& rho_ab, TwoWayKind kind,
                              const BasisOptimizerConfig& cfg = {});

/// Dispatch by measure id: deficit, geometric, min_entropy, eg, delta_arrow,
/// complementarity_{vn,quad,min}, two_way_{vn,min}.
DiscordReport measure_by_name(const std::string& id, const states::DensityOperator& rho_ab,
                              const BasisOptimizerConfig& cfg = {});
const std::vector<std::string>& measure_names();

}  // namespace decolab::discord
