#include "decolab/security.hpp"

#include <cmath>

#include "decolab/entropies.hpp"
#include "decolab/theorems.hpp"

namespace decolab::security {

namespace {

states::DensityOperator purified_tripartite(const states::DensityOperator& rho_ab) {
    if (rho_ab.factors() != 2) throw NotBipartite("security layer expects a two-factor state");
    return states::purify(rho_ab).density();
}

double fixed_basis_vn(const states::DensityOperator& rho_ab, const info::InfoType& z) {
    const states::DensityOperator psi = purified_tripartite(rho_ab);
    return entropy::cond_entropy_vn(entropy::cq_decompose(psi, z, 2));
}

double fixed_basis_min(const states::DensityOperator& rho_ab, const info::InfoType& z) {
    const states::DensityOperator psi = purified_tripartite(rho_ab);
    return entropy::min_entropy(entropy::cq_decompose(psi, z, 2));
}

}  // namespace

SecurityReport secure_rate(const states::DensityOperator& rho_ab, Mode mode,
                           const std::optional<info::InfoType>& z,
                           const discord::BasisOptimizerConfig& cfg) {
    SecurityReport out;
    out.mode = mode;
    switch (mode) {
        case Mode::fixed_basis: {
            if (!z) throw Error("secure_rate: fixed_basis mode needs an information type");
            out.asymptotic_rate = fixed_basis_vn(rho_ab, *z);
            break;
        }
        case Mode::adversarial_one_way: {
            const discord::DiscordReport rep = discord::deficit(rho_ab, cfg);
            out.asymptotic_rate = rep.value;
            out.adversarial_basis = rep.argmin_basis;
            out.diagnostics = rep.optimizer_diag;
            break;
        }
        case Mode::adversarial_two_way: {
            const discord::DiscordReport rep =
                discord::two_way_discord(rho_ab, discord::TwoWayKind::vn, cfg);
            out.asymptotic_rate = rep.value;
            out.adversarial_basis = rep.argmin_basis;
            out.adversarial_basis_b = rep.argmin_basis_b;
            out.diagnostics = rep.optimizer_diag;
            break;
        }
    }
    return out;
}

SecurityReport single_shot_length(const states::DensityOperator& rho_ab, double target_delta,
                                  Mode mode, const std::optional<info::InfoType>& z,
                                  const discord::BasisOptimizerConfig& cfg) {
    if (!(target_delta > 0.0) || target_delta > 0.5) {
        throw BadDelta("single_shot_length: delta must lie in (0, 1/2]");
    }
    SecurityReport out;
    out.mode = mode;
    out.delta = target_delta;

    double h_min = 0.0;
    switch (mode) {
        case Mode::fixed_basis: {
            if (!z) throw Error("single_shot_length: fixed_basis mode needs an information type");
            h_min = fixed_basis_min(rho_ab, *z);
            break;
        }
        case Mode::adversarial_one_way: {
            const discord::DiscordReport rep = discord::min_entropy_discord(rho_ab, cfg);
            h_min = rep.value;
            out.adversarial_basis = rep.argmin_basis;
            out.diagnostics = rep.optimizer_diag;
            break;
        }
        case Mode::adversarial_two_way: {
            const discord::DiscordReport rep =
                discord::two_way_discord(rho_ab, discord::TwoWayKind::min, cfg);
            h_min = rep.value;
            out.adversarial_basis = rep.argmin_basis;
            out.adversarial_basis_b = rep.argmin_basis_b;
            out.diagnostics = rep.optimizer_diag;
            break;
        }
    }

    const double penalty = 2.0 * std::log2(1.0 / (2.0 * target_delta));
    out.ell_exact = h_min - penalty;
    // nudge before flooring so solver round-off at integer boundaries
    // cannot drop a whole bit
    out.single_shot_length = static_cast<long>(std::max(0.0, std::floor(out.ell_exact + 1e-9)));
    out.asymptotic_rate = h_min;
    // unfloored identity: the basis-minimized min-entropy rebuilt from the length
    out.diagnostics["min_entropy_identity"] = out.ell_exact + penalty;
    return out;
}

TaskTriangle task_triangle(const states::DensityOperator& rho_ab, const info::InfoType& z, int n) {
    if (n < 1) throw Error("task_triangle: copy count must be at least 1");
    const states::DensityOperator psi = purified_tripartite(rho_ab);
    theorems::require_pure(psi);

    const Matrix rho = rho_ab.matrix;
    const std::vector<Matrix> projs = theorems::embed_projectors(z, rho_ab.dims);
    Matrix pinched = Matrix::Zero(rho.rows(), rho.cols());
    for (const Matrix& p : projs) pinched += p * rho * p;

    TaskTriangle out;
    out.copies = n;
    out.distinguish_exponent = qmat::relative_entropy_core(rho, pinched);
    out.epr_exponent = theorems::epr_rate(psi, z);
    out.secure_exponent = entropy::cond_entropy_vn(entropy::cq_decompose(psi, z, 2));
    out.max_gap = std::max({std::abs(out.distinguish_exponent - out.epr_exponent),
                            std::abs(out.distinguish_exponent - out.secure_exponent),
                            std::abs(out.epr_exponent - out.secure_exponent)});
    out.probability = std::exp2(-static_cast<double>(n) * out.distinguish_exponent);
    return out;
}

MixedStrategy mixed_strategy_demo(const states::DensityOperator& rho_ab,
                                  const std::vector<info::InfoType>& bases,
                                  const std::vector<double>& weights,
                                  const discord::BasisOptimizerConfig& cfg) {
    if (bases.size() != weights.size() || bases.empty()) {
        throw Error("mixed_strategy_demo: bases and weights must match and be nonempty");
    }
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw Error("mixed_strategy_demo: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error("mixed_strategy_demo: weights must sum to one");
    }

    MixedStrategy out;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        out.mixture_value += weights[i] * fixed_basis_vn(rho_ab, bases[i]);
    }
    out.best_fixed_value = discord::deficit(rho_ab, cfg).value;
    out.slack = out.mixture_value - out.best_fixed_value;
    return out;
}

}  // namespace decolab::security
