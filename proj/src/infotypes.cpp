#include "decolab/infotypes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace decolab::info {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

InfoType::InfoType(std::vector<Matrix> projs, int subsys) : projectors(std::move(projs)), subsystem(subsys) {
    if (projectors.empty()) throw Error("InfoType: no projectors");
    const Eigen::Index d = projectors.front().rows();
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& p : projectors) {
        if (p.rows() != d || p.cols() != d) throw DimMismatch("InfoType: projector shapes differ");
        if (!qmat::is_hermitian(p)) throw NonHermitian("InfoType: projector is not Hermitian");
        if ((p * p - p).cwiseAbs().maxCoeff() > tol::kHermitian) {
            throw Error("InfoType: projector is not idempotent");
        }
        sum += p;
    }
    for (std::size_t j = 0; j < projectors.size(); ++j) {
        for (std::size_t k = j + 1; k < projectors.size(); ++k) {
            if ((projectors[j] * projectors[k]).cwiseAbs().maxCoeff() > tol::kHermitian) {
                throw Error("InfoType: projectors are not pairwise orthogonal");
            }
        }
    }
    if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol::kHermitian) {
        throw Error("InfoType: projectors do not sum to the identity");
    }
}

bool InfoType::rank_one() const {
    for (const Matrix& p : projectors) {
        if (std::abs(p.trace().real() - 1.0) > 1e-9) return false;
    }
    return true;
}

std::vector<Vector> InfoType::kets() const {
    if (!rank_one()) throw NotRankOne("kets: projectors are not all rank one");
    std::vector<Vector> out;
    out.reserve(projectors.size());
    for (const Matrix& p : projectors) {
        // column through the largest diagonal entry spans the range
        Eigen::Index best = 0;
        double best_mag = -1.0;
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
            const double mag = p(i, i).real();
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        Vector v = p.col(best);
        v.normalize();
        Eigen::Index lead = 0;
        double lead_mag = -1.0;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v(i)) > lead_mag + 1e-12) {
                lead_mag = std::abs(v(i));
                lead = i;
            }
        }
        const Complex phase = v(lead) / std::abs(v(lead));
        v /= phase;
        out.push_back(std::move(v));
    }
    return out;
}

states::DensityOperator pinch(const states::DensityOperator& rho, const InfoType& z) {
    const int sub = z.subsystem;
    if (sub < 0 || sub >= rho.factors() || rho.dims[sub] != z.dim()) {
        throw DimMismatch("pinch: information type does not fit the designated factor");
    }
    int before = 1, after = 1;
    for (int i = 0; i < sub; ++i) before *= rho.dims[i];
    for (int i = sub + 1; i < rho.factors(); ++i) after *= rho.dims[i];
    const Matrix ib = Matrix::Identity(before, before);
    const Matrix ia = Matrix::Identity(after, after);

    Matrix out = Matrix::Zero(rho.dim(), rho.dim());
    for (const Matrix& p : z.projectors) {
        const Matrix full = qmat::tensor(qmat::tensor(ib, p), ia);
        out += full * rho.matrix * full;
    }
    out = Complex(0.5, 0.0) * (out + out.adjoint().eval());
    return states::DensityOperator(std::move(out), rho.dims);
}

Matrix pinch_local(const Matrix& m, const InfoType& z) {
    if (m.rows() != z.dim()) throw DimMismatch("pinch_local: dimension mismatch");
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (const Matrix& p : z.projectors) out += p * m * p;
    return out;
}

Matrix measurement_isometry(const InfoType& z) {
    const int d = z.dim();
    const int n = z.count();
    Matrix v = Matrix::Zero(static_cast<Eigen::Index>(n) * d, d);
    for (int j = 0; j < n; ++j) {
        v.block(static_cast<Eigen::Index>(j) * d, 0, d, d) = z.projectors[j];
    }
    return v;
}

states::PureState apply_measurement(const states::PureState& psi, const InfoType& z) {
    const int sub = z.subsystem;
    if (sub < 0 || sub >= static_cast<int>(psi.dims.size()) || psi.dims[sub] != z.dim()) {
        throw DimMismatch("apply_measurement: information type does not fit the designated factor");
    }
    int before = 1, after = 1;
    for (int i = 0; i < sub; ++i) before *= psi.dims[i];
    for (std::size_t i = sub + 1; i < psi.dims.size(); ++i) after *= psi.dims[i];

    const Matrix v = measurement_isometry(z);
    const Matrix full = qmat::tensor(qmat::tensor(Matrix::Identity(before, before), v),
                                     Matrix::Identity(after, after));
    Vector amps = full * psi.amplitudes;
    std::vector<int> dims = psi.dims;
    dims.insert(dims.begin() + sub, z.count());
    return states::PureState(std::move(amps), std::move(dims));
}

InfoType coarse_grain(const InfoType& z, const std::vector<std::vector<int>>& grouping) {
    const int n = z.count();
    std::vector<bool> seen(n, false);
    for (const auto& g : grouping) {
        if (g.empty()) throw BadPartition("coarse_grain: empty group");
        for (int i : g) {
            if (i < 0 || i >= n || seen[i]) {
                throw BadPartition("coarse_grain: grouping is not a partition of the outcome indices");
            }
            seen[i] = true;
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        throw BadPartition("coarse_grain: grouping does not cover every outcome index");
    }

    std::vector<std::vector<int>> ordered = grouping;
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });

    std::vector<Matrix> projs;
    projs.reserve(ordered.size());
    for (const auto& g : ordered) {
        Matrix p = Matrix::Zero(z.dim(), z.dim());
        for (int i : g) p += z.projectors[i];
        projs.push_back(std::move(p));
    }
    return InfoType(std::move(projs), z.subsystem);
}

InfoType basis_from_unitary(const Matrix& u, int subsystem) {
    std::vector<Matrix> projs;
    projs.reserve(u.cols());
    for (Eigen::Index k = 0; k < u.cols(); ++k) {
        projs.push_back((u.col(k) * u.col(k).adjoint()).eval());
    }
    return InfoType(std::move(projs), subsystem);
}

InfoType fourier_mu_basis(const InfoType& z) {
    if (!z.rank_one()) throw NotRankOne("fourier_mu_basis: requires an orthonormal basis");
    const int d = z.dim();
    const std::vector<Vector> kets = z.kets();
    Matrix w(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        Vector col = Vector::Zero(d);
        for (int j = 0; j < d; ++j) {
            const double angle = kTwoPi * j * k / d;
            col += norm * Complex(std::cos(angle), std::sin(angle)) * kets[j];
        }
        w.col(k) = col;
    }
    return basis_from_unitary(w, z.subsystem);
}

InfoType apply_class_phases(const InfoType& z, const std::vector<double>& phases,
                            const std::optional<std::vector<int>>& permutation) {
    const int d = z.dim();
    if (static_cast<int>(phases.size()) != d) {
        throw DimMismatch("apply_class_phases: need one phase per basis element");
    }
    const std::vector<Vector> zk = z.kets();
    Matrix u = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        u += Complex(std::cos(phases[j]), std::sin(phases[j])) * (zk[j] * zk[j].adjoint());
    }
    const InfoType fourier = fourier_mu_basis(z);
    const std::vector<Vector> fk = fourier.kets();
    Matrix w(d, d);
    for (int k = 0; k < d; ++k) {
        const int src = permutation ? (*permutation)[k] : k;
        w.col(k) = u * fk[src];
    }
    return basis_from_unitary(w, z.subsystem);
}

MUBasisSample sample_equivalence_class(const InfoType& z, Rng& rng, bool with_permutation) {
    const int d = z.dim();
    MUBasisSample s;
    s.base_basis = fourier_mu_basis(z);
    s.phases.resize(d);
    for (int j = 0; j < d; ++j) s.phases[j] = rng.uniform(0.0, kTwoPi);
    if (with_permutation) {
        std::vector<int> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = d - 1; i > 0; --i) {
            std::swap(perm[i], perm[rng.index(static_cast<std::size_t>(i) + 1)]);
        }
        s.permutation = std::move(perm);
    }
    return s;
}

InfoType MUBasisSample::basis(const InfoType& z) const {
    return apply_class_phases(z, phases, permutation);
}

InfoType standard_basis(int d, int subsystem) {
    std::vector<Matrix> projs;
    projs.reserve(d);
    for (int j = 0; j < d; ++j) {
        Matrix p = Matrix::Zero(d, d);
        p(j, j) = 1.0;
        projs.push_back(std::move(p));
    }
    return InfoType(std::move(projs), subsystem);
}

InfoType random_rank_one(int d, int subsystem, Rng& rng) {
    return basis_from_unitary(states::random_unitary(d, rng), subsystem);
}

}  // namespace decolab::info
