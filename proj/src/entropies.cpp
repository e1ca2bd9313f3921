#include "decolab/entropies.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace decolab::entropy {

namespace {
constexpr double kProbCutoff = 1e-12;
}

int CqDecomposition::live_count() const {
    return static_cast<int>(std::count(live.begin(), live.end(), true));
}

double vn_entropy(const Matrix& rho) {
    const qmat::HermitianSpectrum s = qmat::herm_eig(rho);
    double h = 0.0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        const double lam = s.eigenvalues(i);
        if (lam > tol::kEigenCutoff) h -= lam * std::log2(lam);
    }
    return h;
}

double classical_entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p) {
        if (x > kProbCutoff) h -= x * std::log2(x);
    }
    return h;
}

double binary_entropy(double p) {
    double h = 0.0;
    if (p > kProbCutoff) h -= p * std::log2(p);
    if (1.0 - p > kProbCutoff) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double quad_entropy(const Matrix& rho) {
    return 1.0 - qmat::purity(rho);
}

TransferMap::TransferMap(const states::DensityOperator& rho, int a_factor, int target_factor) {
    const int n = rho.factors();
    if (a_factor < 0 || a_factor >= n || target_factor < 0 || target_factor >= n ||
        a_factor == target_factor) {
        throw DimMismatch("TransferMap: factor indices out of range or equal");
    }
    da_ = rho.dims[a_factor];
    dt_ = rho.dims[target_factor];
    maps_.resize(static_cast<std::size_t>(da_) * da_);

    int before = 1, after = 1;
    for (int i = 0; i < a_factor; ++i) before *= rho.dims[i];
    for (int i = a_factor + 1; i < n; ++i) after *= rho.dims[i];
    const Matrix ib = Matrix::Identity(before, before);
    const Matrix ia = Matrix::Identity(after, after);

    for (int j = 0; j < da_; ++j) {
        for (int k = 0; k < da_; ++k) {
            Matrix e = Matrix::Zero(da_, da_);
            e(j, k) = 1.0;
            const Matrix full = qmat::tensor(qmat::tensor(ib, e), ia);
            maps_[static_cast<std::size_t>(j) * da_ + k] =
                qmat::partial_trace((full * rho.matrix).eval(), rho.dims, {target_factor});
        }
    }
    rho_t_ = qmat::partial_trace(rho.matrix, rho.dims, {target_factor});
}

Matrix TransferMap::apply(const Matrix& x_on_a) const {
    if (x_on_a.rows() != da_ || x_on_a.cols() != da_) {
        throw DimMismatch("TransferMap::apply: operator does not fit the A factor");
    }
    Matrix out = Matrix::Zero(dt_, dt_);
    for (int j = 0; j < da_; ++j)
        for (int k = 0; k < da_; ++k) {
            const Complex c = x_on_a(j, k);
            if (c != Complex(0.0, 0.0)) out += c * basis_map(j, k);
        }
    return out;
}

Matrix TransferMap::sigma_of_ket(const Vector& w) const {
    Matrix out = Matrix::Zero(dt_, dt_);
    for (int j = 0; j < da_; ++j)
        for (int k = 0; k < da_; ++k) out += w(j) * std::conj(w(k)) * basis_map(j, k);
    return Complex(0.5, 0.0) * (out + out.adjoint().eval());
}

namespace {

CqDecomposition finish_decomposition(std::vector<Matrix> sigma, const Matrix& rho_c) {
    CqDecomposition d;
    d.sigma = std::move(sigma);
    d.rho_c = rho_c;
    const int n = static_cast<int>(d.sigma.size());
    d.probs.resize(n);
    d.cond.resize(n);
    d.live.resize(n);
    for (int j = 0; j < n; ++j) {
        d.sigma[j] = Complex(0.5, 0.0) * (d.sigma[j] + d.sigma[j].adjoint().eval());
        d.probs[j] = d.sigma[j].trace().real();
        d.live[j] = d.probs[j] > kProbCutoff;
        d.cond[j] = d.live[j] ? Matrix(d.sigma[j] / d.probs[j])
                              : Matrix::Zero(d.sigma[j].rows(), d.sigma[j].cols());
    }
    return d;
}

}  // namespace

CqDecomposition cq_decompose(const states::DensityOperator& rho, const info::InfoType& z,
                             int condition_on) {
    const int sub = z.subsystem;
    const int n = rho.factors();
    if (sub < 0 || sub >= n || rho.dims[sub] != z.dim()) {
        throw DimMismatch("cq_decompose: information type does not fit its factor");
    }
    if (condition_on < 0 || condition_on >= n || condition_on == sub) {
        throw DimMismatch("cq_decompose: conditioning factor out of range");
    }
    int before = 1, after = 1;
    for (int i = 0; i < sub; ++i) before *= rho.dims[i];
    for (int i = sub + 1; i < n; ++i) after *= rho.dims[i];
    const Matrix ib = Matrix::Identity(before, before);
    const Matrix ia = Matrix::Identity(after, after);

    std::vector<Matrix> sigma;
    sigma.reserve(z.count());
    for (const Matrix& p : z.projectors) {
        const Matrix full = qmat::tensor(qmat::tensor(ib, p), ia);
        sigma.push_back(
            qmat::partial_trace((full * rho.matrix * full).eval(), rho.dims, {condition_on}));
    }
    return finish_decomposition(std::move(sigma),
                                qmat::partial_trace(rho.matrix, rho.dims, {condition_on}));
}

CqDecomposition cq_decompose(const TransferMap& map, const info::InfoType& z) {
    if (z.dim() != map.a_dim()) {
        throw DimMismatch("cq_decompose: information type does not fit the transfer map");
    }
    std::vector<Matrix> sigma;
    sigma.reserve(z.count());
    for (const Matrix& p : z.projectors) sigma.push_back(map.apply(p));
    return finish_decomposition(std::move(sigma), map.target_marginal());
}

double cond_entropy_vn(const CqDecomposition& decomp) {
    double h = classical_entropy(decomp.probs);
    for (int j = 0; j < decomp.outcomes(); ++j) {
        if (decomp.live[j]) h += decomp.probs[j] * vn_entropy(decomp.cond[j]);
    }
    return h - vn_entropy(decomp.rho_c);
}

double cond_entropy_quad(const CqDecomposition& decomp, const Matrix& rho_c) {
    Matrix sum = Matrix::Zero(rho_c.rows(), rho_c.cols());
    for (const Matrix& s : decomp.sigma) sum += s;
    if ((sum - rho_c).cwiseAbs().maxCoeff() > 1e-8) {
        throw InconsistentMarginal("cond_entropy_quad: rho_C differs from the summed sigma_j");
    }
    double h = qmat::purity(rho_c);
    for (const Matrix& s : decomp.sigma) h -= qmat::purity(s);
    return h;
}

double cond_entropy_quad_pairs(const CqDecomposition& decomp) {
    double h = 0.0;
    const int n = decomp.outcomes();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            h += (decomp.sigma[j] * decomp.sigma[k]).trace().real();
        }
    return h;
}

namespace {

// Spectrum helpers for the discrimination solver.

Matrix herm(const Matrix& m) { return Complex(0.5, 0.0) * (m + m.adjoint().eval()); }

Matrix inv_sqrt_psd(const Matrix& m, double cutoff) {
    const qmat::HermitianSpectrum s = qmat::herm_eig(m);
    RealVector v(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double lam = s.eigenvalues(i);
        v(i) = lam > cutoff ? 1.0 / std::sqrt(lam) : 0.0;
    }
    return s.eigenvectors * v.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix support_projector(const Matrix& m, double cutoff) {
    const qmat::HermitianSpectrum s = qmat::herm_eig(m);
    RealVector v(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = s.eigenvalues(i) > cutoff ? 1.0 : 0.0;
    return s.eigenvectors * v.asDiagonal() * s.eigenvectors.adjoint();
}

double lambda_max(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

// Certified upper bound from the dual of the discrimination program:
// any Y >= sigma_j for all j has Tr(Y) >= p_guess.
double dual_bound(const std::vector<Matrix>& sigma, const std::vector<Matrix>& povm) {
    const Eigen::Index d = sigma.front().rows();
    Matrix y = Matrix::Zero(d, d);
    for (std::size_t j = 0; j < sigma.size(); ++j) y += povm[j] * sigma[j];
    y = herm(y);
    double shift = 0.0;
    for (const Matrix& s : sigma) shift = std::max(shift, lambda_max((s - y).eval()));
    return y.trace().real() + static_cast<double>(d) * std::max(shift, 0.0);
}

GuessResult helstrom_two(const Matrix& s0, const Matrix& s1) {
    const Eigen::Index d = s0.rows();
    const Matrix delta = herm(s0 - s1);
    const qmat::HermitianSpectrum sp = qmat::herm_eig(delta);
    Matrix q0 = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        if (sp.eigenvalues(i) > 0.0) q0 += sp.eigenvectors.col(i) * sp.eigenvectors.col(i).adjoint();
    }
    GuessResult r;
    r.p_guess = 0.5 * (s0.trace().real() + s1.trace().real() + sp.eigenvalues.cwiseAbs().sum());
    r.povm = {q0, Matrix::Identity(d, d) - q0};
    const double achieved = (r.povm[0] * s0 + r.povm[1] * s1).trace().real();
    r.residual = std::abs(achieved - r.p_guess);
    r.dual_gap = 0.0;
    r.converged = true;
    return r;
}

// Fixed-point iteration on the discrimination optimality conditions,
// started from the pretty-good measurement. Each step keeps the POVM
// feasible and does not decrease the objective.
GuessResult iterate_min_error(const std::vector<Matrix>& sigma, const GuessOptions& opts) {
    const Eigen::Index d = sigma.front().rows();
    const std::size_t n = sigma.size();

    Matrix rho_bar = Matrix::Zero(d, d);
    for (const Matrix& s : sigma) rho_bar += s;
    rho_bar = herm(rho_bar);

    // work inside the support of the averaged state
    const qmat::HermitianSpectrum bs = qmat::herm_eig(rho_bar);
    int r = 0;
    for (Eigen::Index i = 0; i < bs.eigenvalues.size(); ++i) {
        if (bs.eigenvalues(i) > tol::kEigenCutoff) ++r;
    }
    r = std::max(r, 1);
    const Matrix p = bs.eigenvectors.leftCols(r);

    std::vector<Matrix> sig(n);
    for (std::size_t j = 0; j < n; ++j) sig[j] = herm((p.adjoint() * sigma[j] * p).eval());
    const Matrix rho_sub = herm((p.adjoint() * rho_bar * p).eval());

    const Matrix s_half = inv_sqrt_psd(rho_sub, tol::kEigenCutoff);
    std::vector<Matrix> q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = herm((s_half * sig[j] * s_half).eval());

    auto value_of = [&]() {
        double v = 0.0;
        for (std::size_t j = 0; j < n; ++j) v += (q[j] * sig[j]).trace().real();
        return v;
    };

    GuessResult out;
    double value = value_of();
    double change = 1.0;
    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        Matrix big = Matrix::Zero(r, r);
        std::vector<Matrix> next(n);
        for (std::size_t j = 0; j < n; ++j) {
            next[j] = herm((sig[j] * q[j] * sig[j]).eval());
            big += next[j];
        }
        big = herm(big);
        const Matrix big_half = inv_sqrt_psd(big, 1e-16);
        Matrix total = Matrix::Zero(r, r);
        for (std::size_t j = 0; j < n; ++j) {
            next[j] = herm((big_half * next[j] * big_half).eval());
            total += next[j];
        }
        // outside the support of the update operator nothing contributes;
        // spread the complement to keep the POVM complete
        const Matrix leftover = herm((Matrix::Identity(r, r) - total).eval());
        for (std::size_t j = 0; j < n; ++j) next[j] += leftover / static_cast<double>(n);
        q = std::move(next);

        const double new_value = value_of();
        change = std::abs(new_value - value);
        value = new_value;
        if (change < opts.residual_target * 0.25) break;
    }

    Matrix completeness = Matrix::Identity(r, r);
    for (const Matrix& qj : q) completeness -= qj;
    const double infeasibility = completeness.cwiseAbs().maxCoeff();

    out.p_guess = value;
    out.iterations = it + 1;
    out.residual = std::max(change, infeasibility);
    out.dual_gap = dual_bound(sig, q) - value;
    out.converged = it < opts.max_iterations && out.residual <= std::max(opts.residual_target, 1e-7);

    // lift back to the full conditional space; the kernel of rho_bar is dead
    // weight and folds into the first element
    out.povm.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.povm[j] = p * q[j] * p.adjoint();
    out.povm[0] += Matrix::Identity(d, d) - p * p.adjoint();
    return out;
}

}  // namespace

GuessResult p_guess(const CqDecomposition& decomp, const GuessOptions& opts) {
    const int n = decomp.outcomes();
    if (n < 1) throw Error("p_guess: empty decomposition");
    const Eigen::Index d = decomp.sigma.front().rows();

    std::vector<int> live_idx;
    for (int j = 0; j < n; ++j) {
        if (decomp.live[j]) live_idx.push_back(j);
    }

    GuessResult r;
    if (live_idx.size() <= 1) {
        r.p_guess = 1.0;
        r.povm.assign(n, Matrix::Zero(d, d));
        r.povm[live_idx.empty() ? 0 : live_idx.front()] = Matrix::Identity(d, d);
        return r;
    }
    if (live_idx.size() == 2 && !opts.force_iterative) {
        GuessResult h = helstrom_two(decomp.sigma[live_idx[0]], decomp.sigma[live_idx[1]]);
        r = h;
        r.povm.assign(n, Matrix::Zero(d, d));
        r.povm[live_idx[0]] = h.povm[0];
        r.povm[live_idx[1]] = h.povm[1];
        return r;
    }

    std::vector<Matrix> sigma;
    sigma.reserve(live_idx.size());
    for (int j : live_idx) sigma.push_back(decomp.sigma[j]);
    GuessResult it = iterate_min_error(sigma, opts);

    r = it;
    r.povm.assign(n, Matrix::Zero(d, d));
    for (std::size_t k = 0; k < live_idx.size(); ++k) r.povm[live_idx[k]] = it.povm[k];
    return r;
}

double min_entropy(const CqDecomposition& decomp, const GuessOptions& opts) {
    return -std::log2(p_guess(decomp, opts).p_guess);
}

double cond_entropy_vn_kets(const TransferMap& map, const std::vector<Vector>& kets) {
    // the post-measurement state is block diagonal, so its spectrum is the
    // union of the unnormalized conditional spectra
    double h = 0.0;
    for (const Vector& w : kets) {
        const Matrix sigma = map.sigma_of_ket(w);
        Eigen::SelfAdjointEigenSolver<Matrix> es(sigma, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double lam = es.eigenvalues()(i);
            if (lam > tol::kEigenCutoff) h -= lam * std::log2(lam);
        }
    }
    return h - vn_entropy(map.target_marginal());
}

double cond_entropy_quad_kets(const TransferMap& map, const std::vector<Vector>& kets) {
    double h = qmat::purity(map.target_marginal());
    for (const Vector& w : kets) h -= qmat::purity(map.sigma_of_ket(w));
    return h;
}

double p_guess_kets(const TransferMap& map, const std::vector<Vector>& kets,
                    const GuessOptions& opts) {
    std::vector<Matrix> sigma;
    sigma.reserve(kets.size());
    for (const Vector& w : kets) sigma.push_back(map.sigma_of_ket(w));
    CqDecomposition d = finish_decomposition(std::move(sigma), map.target_marginal());
    return p_guess(d, opts).p_guess;
}

double certainty_quad_purity_form(const CqDecomposition& decomp, const Matrix& rho_c) {
    const double n = static_cast<double>(decomp.outcomes());
    double cq_purity = 0.0;
    for (const Matrix& s : decomp.sigma) cq_purity += qmat::purity(s);
    return n * cq_purity - qmat::purity(rho_c);
}

double certainty_quad_pairdist_form(const CqDecomposition& decomp) {
    double acc = 0.0;
    const int n = decomp.outcomes();
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            acc += qmat::hilbert_schmidt_core(decomp.sigma[j], decomp.sigma[k]);
        }
    return acc;
}

double certainty(EntropyKind kind, const CqDecomposition& decomp, const Matrix& rho_c,
                 const GuessOptions& opts) {
    const double n = static_cast<double>(decomp.outcomes());
    switch (kind) {
        case EntropyKind::vn: return std::log2(n) - cond_entropy_vn(decomp);
        case EntropyKind::quad:
            return (n - 1.0) * qmat::purity(rho_c) - n * cond_entropy_quad(decomp, rho_c);
        case EntropyKind::min: return std::log2(n) - min_entropy(decomp, opts);
    }
    throw Error("certainty: unknown kind");
}

}  // namespace decolab::entropy
