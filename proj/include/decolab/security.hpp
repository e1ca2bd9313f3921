#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decolab/common.hpp"
#include "decolab/discord.hpp"
#include "decolab/infotypes.hpp"
#include "decolab/states.hpp"

namespace decolab::security {

enum class Mode { fixed_basis, adversarial_one_way, adversarial_two_way };

/// Secure-bit accounting against an adversary holding the purifying system.
struct SecurityReport {
    Mode mode = Mode::fixed_basis;
    double asymptotic_rate = 0.0;
    long single_shot_length = 0;
    double ell_exact = 0.0;
    double delta = 0.0;
    std::optional<info::InfoType> adversarial_basis;
    std::optional<info::InfoType> adversarial_basis_b;
    std::map<std::string, double> diagnostics;
};

/// Asymptotic secure-bit rate: H(Z|C) for a fixed basis, minimized over the
/// adversary's basis choices otherwise (the discord optimizers carry the
/// minimization).
SecurityReport secure_rate(const states::DensityOperator& rho_ab, Mode mode,
                           const std::optional<info::InfoType>& z = std::nullopt,
                           const discord::BasisOptimizerConfig& cfg = {});

/// Single-shot hashing length: ell = floor(H_min - 2 log2(1/(2 delta)))
/// clamped at zero, with the exact unfloored value reported alongside.
SecurityReport single_shot_length(const states::DensityOperator& rho_ab, double target_delta,
                                  Mode mode, const std::optional<info::InfoType>& z = std::nullopt,
                                  const discord::BasisOptimizerConfig& cfg = {});

/// The three task exponents that coincide for a fixed basis: distinguishing
/// the pinched state, the EPR distillation rate of the measurement register,
/// and the secure-bit rate. Probability reported base 2.
struct TaskTriangle {
    double distinguish_exponent = 0.0;
    double epr_exponent = 0.0;
    double secure_exponent = 0.0;
    double max_gap = 0.0;
    int copies = 1;
    double probability = 1.0;
};

TaskTriangle task_triangle(const states::DensityOperator& rho_ab, const info::InfoType& z, int n);

/// Mixed-strategy value sum_i p_i H(X_i|C) for a finite set of adversary
/// bases, together with the always-one-basis optimum it cannot beat.
struct MixedStrategy {
    double mixture_value = 0.0;
    double best_fixed_value = 0.0;
    double slack = 0.0;
};

MixedStrategy mixed_strategy_demo(const states::DensityOperator& rho_ab,
                                  const std::vector<info::InfoType>& bases,
                                  const std::vector<double>& weights,
                                  const discord::BasisOptimizerConfig& cfg = {});

}  // namespace decolab::security
