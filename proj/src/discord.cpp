#include "decolab/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace decolab::discord {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// ---------------------------------------------------------------------------
// Basis parametrization: U = exp(iG) with G Hermitian, d^2 - d real
// off-diagonal parameters plus d - 1 diagonal phases (last diagonal fixed).

int param_count(int d) { return d * d - 1; }

Matrix unitary_from_params(int d, const double* p) {
    Matrix g = Matrix::Zero(d, d);
    int idx = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            g(i, j) = Complex(p[idx], p[idx + 1]);
            g(j, i) = std::conj(g(i, j));
            idx += 2;
        }
    for (int i = 0; i + 1 < d; ++i) g(i, i) = p[idx++];

    const qmat::HermitianSpectrum s = qmat::herm_eig(g);
    Vector phases(d);
    for (int i = 0; i < d; ++i) {
        const double lam = s.eigenvalues(i);
        phases(i) = Complex(std::cos(lam), std::sin(lam));
    }
    return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

// ---------------------------------------------------------------------------
// Nelder-Mead with cascaded refinement stages.

using ParamObjective = std::function<double(const std::vector<double>&)>;

struct NmResult {
    std::vector<double> x;
    double f = 0.0;
    long evals = 0;
};

NmResult nelder_mead(const ParamObjective& fn, std::vector<double> x0, double step, int max_iters) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> fval(n + 1);
    long evals = 0;
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += step;
    for (int i = 0; i <= n; ++i) {
        fval[i] = fn(simplex[i]);
        ++evals;
    }

    std::vector<int> order(n + 1);
    for (int it = 0; it < max_iters; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fval[a] < fval[b]; });
        const int best = order[0], worst = order[n], second = order[n - 1];
        if (fval[worst] - fval[best] < 1e-13 * (1.0 + std::abs(fval[best]))) break;

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (int k = 0; k < n; ++k) centroid[k] += simplex[i][k];
        }
        for (int k = 0; k < n; ++k) centroid[k] /= n;

        auto blend = [&](double coeff) {
            std::vector<double> x(n);
            for (int k = 0; k < n; ++k) x[k] = centroid[k] + coeff * (simplex[worst][k] - centroid[k]);
            return x;
        };

        const std::vector<double> reflected = blend(-1.0);
        const double fr = fn(reflected);
        ++evals;
        if (fr < fval[order[0]]) {
            const std::vector<double> expanded = blend(-2.0);
            const double fe = fn(expanded);
            ++evals;
            if (fe < fr) {
                simplex[worst] = expanded;
                fval[worst] = fe;
            } else {
                simplex[worst] = reflected;
                fval[worst] = fr;
            }
        } else if (fr < fval[second]) {
            simplex[worst] = reflected;
            fval[worst] = fr;
        } else {
            const std::vector<double> contracted = blend(fr < fval[worst] ? -0.5 : 0.5);
            const double fc = fn(contracted);
            ++evals;
            if (fc < std::min(fr, fval[worst])) {
                simplex[worst] = contracted;
                fval[worst] = fc;
            } else {
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (int k = 0; k < n; ++k) {
                        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
                    }
                    fval[i] = fn(simplex[i]);
                    ++evals;
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i) {
        if (fval[i] < fval[best]) best = i;
    }
    return {simplex[best], fval[best], evals};
}

// Coordinate-wise quadratic polish; tightens the minimum enough that two
// independent routes agree well below the cross-check tolerances.
NmResult polish(const ParamObjective& fn, std::vector<double> x, double f) {
    const int n = static_cast<int>(x.size());
    long evals = 0;
    double h = 1e-4;
    for (int sweep = 0; sweep < 4; ++sweep) {
        for (int k = 0; k < n; ++k) {
            std::vector<double> xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            const double fp = fn(xp), fm = fn(xm);
            evals += 2;
            const double denom = fp - 2.0 * f + fm;
            if (denom > 1e-18) {
                double delta = -0.5 * h * (fp - fm) / denom;
                delta = std::clamp(delta, -0.2, 0.2);
                std::vector<double> xn = x;
                xn[k] += delta;
                const double fnn = fn(xn);
                ++evals;
                if (fnn < f) {
                    x = xn;
                    f = fnn;
                }
            } else if (fp < f || fm < f) {
                if (fp < fm) {
                    x = xp;
                    f = fp;
                } else {
                    x = xm;
                    f = fm;
                }
            }
        }
        h *= 0.2;
    }
    return {x, f, evals};
}

struct MinimizeResult {
    std::vector<double> x;
    double f = 0.0;
    long evals = 0;
    int best_restart = 0;
};

MinimizeResult minimize_restarts(const ParamObjective& fn, int nparams,
                                 const BasisOptimizerConfig& cfg, Rng& rng,
                                 bool nonnegative_objective) {
    MinimizeResult best;
    best.f = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(cfg.restarts, 1); ++r) {
        std::vector<double> x0(nparams, 0.0);
        if (r > 0) {
            for (int k = 0; k < nparams; ++k) x0[k] = rng.normal() * 0.9;
        }
        NmResult stage = nelder_mead(fn, std::move(x0), 0.6, cfg.max_iters);
        best.evals += stage.evals;
        stage = nelder_mead(fn, stage.x, 3e-3, cfg.max_iters / 2);
        best.evals += stage.evals;
        NmResult fine = polish(fn, stage.x, stage.f);
        best.evals += fine.evals;
        if (fine.f < best.f) {
            best.f = fine.f;
            best.x = fine.x;
            best.best_restart = r;
        }
        if (nonnegative_objective && best.f < 1e-10) break;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Objective building blocks.

// Entropy of the state pinched in the standard A basis after rotating A by
// U^dagger: the pinched matrix is block diagonal, so its spectrum is the
// union of the A-indexed blocks.
double pinched_entropy_blocks(const Matrix& rotated, int da, int db) {
    double h = 0.0;
    for (int a = 0; a < da; ++a) {
        const Matrix block = rotated.block(static_cast<Eigen::Index>(a) * db,
                                           static_cast<Eigen::Index>(a) * db, db, db);
        Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double lam = es.eigenvalues()(i);
            if (lam > tol::kEigenCutoff) h -= lam * std::log2(lam);
        }
    }
    return h;
}

double pinched_purity_blocks(const Matrix& rotated, int da, int db) {
    double p = 0.0;
    for (int a = 0; a < da; ++a) {
        const Matrix block = rotated.block(static_cast<Eigen::Index>(a) * db,
                                           static_cast<Eigen::Index>(a) * db, db, db);
        p += (block * block.adjoint()).trace().real();
    }
    return p;
}

Matrix rotate_a_side(const Matrix& rho, const Matrix& u, int db) {
    const Matrix r = qmat::tensor(u, Matrix::Identity(db, db));
    return r.adjoint() * rho * r;
}

std::vector<Vector> columns_of(const Matrix& u) {
    std::vector<Vector> cols;
    cols.reserve(u.cols());
    for (Eigen::Index j = 0; j < u.cols(); ++j) cols.push_back(u.col(j));
    return cols;
}

void require_bipartite(const states::DensityOperator& rho) {
    if (rho.factors() != 2) throw NotBipartite("discord measures expect a two-factor state");
}

struct PurifiedSide {
    states::DensityOperator psi_abc;
    entropy::TransferMap to_purifier;

    explicit PurifiedSide(const states::DensityOperator& rho_ab)
        : psi_abc(states::purify(rho_ab).density()), to_purifier(psi_abc, 0, 2) {}
};

DiscordReport finish_report(std::string name, double direct_value, double purified_value,
                            const Matrix& u_direct, const Matrix& u_purified,
                            const MinimizeResult& direct_run, const MinimizeResult& purified_run) {
    DiscordReport rep;
    rep.measure = std::move(name);
    const bool direct_wins = direct_value <= purified_value;
    rep.value = direct_wins ? direct_value : purified_value;
    rep.argmin_basis = info::basis_from_unitary(direct_wins ? u_direct : u_purified, 0);
    rep.optimizer_diag["route_direct"] = direct_value;
    rep.optimizer_diag["route_purified"] = purified_value;
    rep.optimizer_diag["route_gap"] = std::abs(direct_value - purified_value);
    rep.optimizer_diag["evals"] = static_cast<double>(direct_run.evals + purified_run.evals);
    rep.optimizer_diag["best_restart"] =
        static_cast<double>(direct_wins ? direct_run.best_restart : purified_run.best_restart);
    return rep;
}

}  // namespace

std::pair<double, info::InfoType> min_over_bases(
    const std::function<double(const info::InfoType&)>& objective, int d,
    const BasisOptimizerConfig& cfg) {
    Rng rng(cfg.seed);
    const ParamObjective fn = [&](const std::vector<double>& p) {
        return objective(info::basis_from_unitary(unitary_from_params(d, p.data()), 0));
    };
    const MinimizeResult run = minimize_restarts(fn, param_count(d), cfg, rng, false);
    return {run.f, info::basis_from_unitary(unitary_from_params(d, run.x.data()), 0)};
}

DiscordReport deficit(const states::DensityOperator& rho_ab, const BasisOptimizerConfig& cfg) {
    require_bipartite(rho_ab);
    const int da = rho_ab.dims[0], db = rho_ab.dims[1];
    const double h_rho = entropy::vn_entropy(rho_ab.matrix);

    Rng rng_direct = Rng(cfg.seed).spawn(1);
    const ParamObjective direct = [&](const std::vector<double>& p) {
        const Matrix u = unitary_from_params(da, p.data());
        return pinched_entropy_blocks(rotate_a_side(rho_ab.matrix, u, db), da, db) - h_rho;
    };
    const MinimizeResult direct_run = minimize_restarts(direct, param_count(da), cfg, rng_direct, true);

    const PurifiedSide side(rho_ab);
    Rng rng_pur = Rng(cfg.seed).spawn(2);
    const ParamObjective purified = [&](const std::vector<double>& p) {
        const Matrix u = unitary_from_params(da, p.data());
        return entropy::cond_entropy_vn_kets(side.to_purifier, columns_of(u));
    };
    const MinimizeResult purified_run =
        minimize_restarts(purified, param_count(da), cfg, rng_pur, true);

    return finish_report("deficit", direct_run.f, purified_run.f,
                         unitary_from_params(da, direct_run.x.data()),
                         unitary_from_params(da, purified_run.x.data()), direct_run, purified_run);
}

DiscordReport geometric(const states::DensityOperator& rho_ab, const BasisOptimizerConfig& cfg) {
    require_bipartite(rho_ab);
    const int da = rho_ab.dims[0], db = rho_ab.dims[1];
    const double purity_rho = qmat::purity(rho_ab.matrix);

    Rng rng_direct = Rng(cfg.seed).spawn(3);
    const ParamObjective direct = [&](const std::vector<double>& p) {
        const Matrix u = unitary_from_params(da, p.data());
        return purity_rho - pinched_purity_blocks(rotate_a_side(rho_ab.matrix, u, db), da, db);
    };
    const MinimizeResult direct_run = minimize_restarts(direct, param_count(da), cfg, rng_direct, true);

    const PurifiedSide side(rho_ab);
    Rng rng_pur = Rng(cfg.seed).spawn(4);
    const ParamObjective purified = [&](const std::vector<double>& p) {
        const Matrix u = unitary_from_params(da, p.data());
        return entropy::cond_entropy_quad_kets(side.to_purifier, columns_of(u));
    };
    const MinimizeResult purified_run =
        minimize_restarts(purified, param_count(da), cfg, rng_pur, true);

    DiscordReport rep = finish_report("geometric", direct_run.f, purified_run.f,
                                      unitary_from_params(da, direct_run.x.data()),
                                      unitary_from_params(da, purified_run.x.data()), direct_run,
                                      purified_run);

    // third route: off-diagonal norm sum at the reported argmin
    double off = 0.0;
    {
        const Matrix rotated =
            rotate_a_side(rho_ab.matrix,
                          unitary_from_params(da, (direct_run.f <= purified_run.f ? direct_run
                                                                                  : purified_run)
                                                      .x.data()),
                          db);
        const double total = (rotated * rotated.adjoint()).trace().real();
        off = total - pinched_purity_blocks(rotated, da, db);
    }
    rep.optimizer_diag["route_offdiagonal"] = off;
    return rep;
}

DiscordReport min_entropy_discord(const states::DensityOperator& rho_ab,
                                  const BasisOptimizerConfig& cfg) {
    require_bipartite(rho_ab);
    const int da = rho_ab.dims[0];
    const PurifiedSide side(rho_ab);

    Rng rng_min = Rng(cfg.seed).spawn(5);
    const ParamObjective min_obj = [&](const std::vector<double>& p) {
        const Matrix u = unitary_from_params(da, p.data());
        return -std::log2(entropy::p_guess_kets(side.to_purifier, columns_of(u)));
    };
    const MinimizeResult min_run = minimize_restarts(min_obj, param_count(da), cfg, rng_min, true);

    Rng rng_eg = Rng(cfg.seed).spawn(6);
    const ParamObjective eg_obj = [&](const std::vector<double>& p) {
        const Matrix u = unitary_from_params(da, p.data());
        return 1.0 - entropy::p_guess_kets(side.to_purifier, columns_of(u));
    };
    const MinimizeResult eg_run = minimize_restarts(eg_obj, param_count(da), cfg, rng_eg, true);

    const double via_eg = -std::log2(1.0 - eg_run.f);

    DiscordReport rep;
    rep.measure = "min_entropy";
    rep.value = std::min(min_run.f, via_eg);
    rep.argmin_basis = info::basis_from_unitary(
        unitary_from_params(da, (min_run.f <= via_eg ? min_run : eg_run).x.data()), 0);
    rep.optimizer_diag["route_direct"] = min_run.f;
    rep.optimizer_diag["route_via_eg"] = via_eg;
    rep.optimizer_diag["route_gap"] = std::abs(min_run.f - via_eg);
    rep.optimizer_diag["eg_value"] = eg_run.f;
    rep.optimizer_diag["evals"] = static_cast<double>(min_run.evals + eg_run.evals);
    return rep;
}

DiscordReport eg_discord(const states::DensityOperator& rho_ab, const BasisOptimizerConfig& cfg) {
    DiscordReport inner = min_entropy_discord(rho_ab, cfg);
    DiscordReport rep = inner;
    rep.measure = "eg";
    rep.value = 1.0 - std::exp2(-inner.value);
    rep.optimizer_diag["min_entropy_value"] = inner.value;
    return rep;
}

DiscordReport original_discord(const states::DensityOperator& rho_ab,
                               const BasisOptimizerConfig& cfg) {
    require_bipartite(rho_ab);
    const int da = rho_ab.dims[0], db = rho_ab.dims[1];
    const Matrix rho_a = qmat::partial_trace(rho_ab.matrix, rho_ab.dims, {0});
    const Matrix rho_b = qmat::partial_trace(rho_ab.matrix, rho_ab.dims, {1});
    const double mutual = entropy::vn_entropy(rho_a) + entropy::vn_entropy(rho_b) -
                          entropy::vn_entropy(rho_ab.matrix);

    Rng rng = Rng(cfg.seed).spawn(7);
    const ParamObjective fn = [&](const std::vector<double>& p) {
        const Matrix u = unitary_from_params(da, p.data());
        const Matrix rotated_a = u.adjoint() * rho_a * u;
        std::vector<double> diag(da);
        for (int i = 0; i < da; ++i) diag[i] = rotated_a(i, i).real();
        const double h_pinched_a = entropy::classical_entropy(diag);
        const double h_pinched =
            pinched_entropy_blocks(rotate_a_side(rho_ab.matrix, u, db), da, db);
        const double mutual_pinched =
            h_pinched_a + entropy::vn_entropy(rho_b) - h_pinched;
        return mutual - mutual_pinched;
    };
    const MinimizeResult run = minimize_restarts(fn, param_count(da), cfg, rng, true);

    DiscordReport rep;
    rep.measure = "delta_arrow";
    rep.value = run.f;
    rep.argmin_basis = info::basis_from_unitary(unitary_from_params(da, run.x.data()), 0);
    rep.optimizer_diag["evals"] = static_cast<double>(run.evals);
    rep.optimizer_diag["best_restart"] = run.best_restart;
    return rep;
}

DiscordReport complementarity_discord(const states::DensityOperator& rho_ab,
                                      entropy::EntropyKind kind, int samples,
                                      const BasisOptimizerConfig& cfg) {
    require_bipartite(rho_ab);
    const int da = rho_ab.dims[0];
    const double log_d = std::log2(static_cast<double>(da));
    const entropy::TransferMap t_b(rho_ab, 0, 1);
    const double purity_b = qmat::purity(t_b.target_marginal());

    // common random numbers: one phase table reused by every objective call
    Rng phase_rng = Rng(cfg.seed).spawn(8);
    std::vector<Complex> phases(static_cast<std::size_t>(samples) * da);
    for (auto& ph : phases) {
        const double theta = phase_rng.uniform(0.0, kTwoPi);
        ph = Complex(std::cos(theta), std::sin(theta));
    }
    std::vector<Complex> omega(static_cast<std::size_t>(da) * da);
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(da));
    for (int j = 0; j < da; ++j)
        for (int k = 0; k < da; ++k) {
            const double angle = kTwoPi * j * k / da;
            omega[static_cast<std::size_t>(j) * da + k] =
                inv_sqrt_d * Complex(std::cos(angle), std::sin(angle));
        }

    const ParamObjective fn = [&](const std::vector<double>& p) {
        const Matrix u = unitary_from_params(da, p.data());
        std::vector<Vector> w(da, Vector(u.rows()));
        double acc = 0.0;
        for (int s = 0; s < samples; ++s) {
            const Complex* ph = &phases[static_cast<std::size_t>(s) * da];
            for (int k = 0; k < da; ++k) {
                w[k].setZero();
                for (int j = 0; j < da; ++j) {
                    w[k] += ph[j] * omega[static_cast<std::size_t>(j) * da + k] * u.col(j);
                }
            }
            switch (kind) {
                case entropy::EntropyKind::vn:
                    acc += log_d - entropy::cond_entropy_vn_kets(t_b, w);
                    break;
                case entropy::EntropyKind::quad: {
                    double purity_sum = 0.0;
                    for (int k = 0; k < da; ++k) purity_sum += qmat::purity(t_b.sigma_of_ket(w[k]));
                    acc += da * purity_sum - purity_b;
                    break;
                }
                case entropy::EntropyKind::min:
                    acc += log_d + std::log2(entropy::p_guess_kets(t_b, w));
                    break;
            }
        }
        return acc / samples;
    };

    Rng rng = Rng(cfg.seed).spawn(9);
    const MinimizeResult run = minimize_restarts(fn, param_count(da), cfg, rng, true);

    DiscordReport rep;
    switch (kind) {
        case entropy::EntropyKind::vn: rep.measure = "complementarity_vn"; break;
        case entropy::EntropyKind::quad: rep.measure = "complementarity_quad"; break;
        case entropy::EntropyKind::min: rep.measure = "complementarity_min"; break;
    }
    rep.value = run.f;
    rep.argmin_basis = info::basis_from_unitary(unitary_from_params(da, run.x.data()), 0);
    rep.optimizer_diag["evals"] = static_cast<double>(run.evals);
    rep.optimizer_diag["samples"] = samples;
    return rep;
}

DiscordReport two_way_discord(const states::DensityOperator& rho_ab, TwoWayKind kind,
                              const BasisOptimizerConfig& cfg) {
    require_bipartite(rho_ab);
    const int da = rho_ab.dims[0], db = rho_ab.dims[1];
    const int na = param_count(da), nb = param_count(db);

    const states::PureState psi = states::purify(rho_ab);
    const int purifier = psi.dims.back();
    const states::DensityOperator merged(states::pure_marginal(psi, {0, 1, 2}),
                                         {da * db, purifier});
    const entropy::TransferMap to_c(merged, 0, 1);
    const double h_rho = entropy::vn_entropy(rho_ab.matrix);

    auto product_kets = [&](const Matrix& ua, const Matrix& ub) {
        std::vector<Vector> kets;
        kets.reserve(static_cast<std::size_t>(da) * db);
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k) {
                Vector w(da * db);
                for (int a = 0; a < da; ++a)
                    for (int b = 0; b < db; ++b) w(a * db + b) = ua(a, j) * ub(b, k);
                kets.push_back(std::move(w));
            }
        return kets;
    };

    auto objective = [&](const std::vector<double>& pa, const std::vector<double>& pb) {
        const Matrix ua = unitary_from_params(da, pa.data());
        const Matrix ub = unitary_from_params(db, pb.data());
        if (kind == TwoWayKind::min) {
            return -std::log2(entropy::p_guess_kets(to_c, product_kets(ua, ub)));
        }
        return entropy::cond_entropy_vn_kets(to_c, product_kets(ua, ub));
    };

    Rng rng = Rng(cfg.seed).spawn(10);
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_a(na, 0.0), best_b(nb, 0.0);
    long evals = 0;

    for (int r = 0; r < std::max(cfg.restarts, 1); ++r) {
        std::vector<double> xa(na, 0.0), xb(nb, 0.0);
        if (r > 0) {
            for (double& v : xa) v = rng.normal() * 0.9;
            for (double& v : xb) v = rng.normal() * 0.9;
        }
        double current = objective(xa, xb);
        ++evals;
        for (int sweep = 0; sweep < 6; ++sweep) {
            const double before = current;
            {
                const ParamObjective fa = [&](const std::vector<double>& p) { return objective(p, xb); };
                NmResult ra = nelder_mead(fa, xa, sweep == 0 ? 0.6 : 5e-3, cfg.max_iters);
                evals += ra.evals;
                xa = ra.x;
                current = ra.f;
            }
            {
                const ParamObjective fb = [&](const std::vector<double>& p) { return objective(xa, p); };
                NmResult rb = nelder_mead(fb, xb, sweep == 0 ? 0.6 : 5e-3, cfg.max_iters);
                evals += rb.evals;
                xb = rb.x;
                current = rb.f;
            }
            if (before - current < 1e-11) break;
        }
        if (current < best) {
            best = current;
            best_a = xa;
            best_b = xb;
        }
        if (best < 1e-10) break;
    }

    DiscordReport rep;
    rep.measure = kind == TwoWayKind::min ? "two_way_min" : "two_way_vn";
    rep.value = best;
    rep.argmin_basis = info::basis_from_unitary(unitary_from_params(da, best_a.data()), 0);
    rep.argmin_basis_b = info::basis_from_unitary(unitary_from_params(db, best_b.data()), 1);
    rep.optimizer_diag["evals"] = static_cast<double>(evals);

    if (kind == TwoWayKind::vn) {
        // independent route: pinch in the product basis directly on rho_AB
        const Matrix ua = unitary_from_params(da, best_a.data());
        const Matrix ub = unitary_from_params(db, best_b.data());
        const Matrix r = qmat::tensor(ua, ub);
        const Matrix rotated = r.adjoint() * rho_ab.matrix * r;
        std::vector<double> diag(static_cast<std::size_t>(da) * db);
        for (int i = 0; i < da * db; ++i) diag[static_cast<std::size_t>(i)] = rotated(i, i).real();
        rep.optimizer_diag["route_double_pinch"] = entropy::classical_entropy(diag) - h_rho;
        rep.optimizer_diag["route_gap"] = std::abs(rep.optimizer_diag["route_double_pinch"] - best);
    }
    return rep;
}

DiscordReport measure_by_name(const std::string& id, const states::DensityOperator& rho_ab,
                              const BasisOptimizerConfig& cfg) {
    if (id == "deficit") return deficit(rho_ab, cfg);
    if (id == "geometric") return geometric(rho_ab, cfg);
    if (id == "min_entropy") return min_entropy_discord(rho_ab, cfg);
    if (id == "eg") return eg_discord(rho_ab, cfg);
    if (id == "delta_arrow") return original_discord(rho_ab, cfg);
    if (id == "complementarity_vn")
        return complementarity_discord(rho_ab, entropy::EntropyKind::vn, cfg.mc_samples, cfg);
    if (id == "complementarity_quad")
        return complementarity_discord(rho_ab, entropy::EntropyKind::quad, cfg.mc_samples, cfg);
    if (id == "complementarity_min")
        return complementarity_discord(rho_ab, entropy::EntropyKind::min, cfg.mc_samples, cfg);
    if (id == "two_way_vn") return two_way_discord(rho_ab, TwoWayKind::vn, cfg);
    if (id == "two_way_min") return two_way_discord(rho_ab, TwoWayKind::min, cfg);
    throw Error("unknown measure id: " + id);
}

const std::vector<std::string>& measure_names() {
    static const std::vector<std::string> names = {
        "deficit",           "geometric",           "min_entropy",
        "eg",                "delta_arrow",         "complementarity_vn",
        "complementarity_quad", "complementarity_min", "two_way_vn",
        "two_way_min"};
    return names;
}

}  // namespace decolab::discord
