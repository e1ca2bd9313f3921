#include "decolab/states.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace decolab::states {

DensityOperator::DensityOperator(Matrix m, std::vector<int> d) : matrix(std::move(m)), dims(std::move(d)) {
    if (matrix.rows() != matrix.cols()) {
        throw NotAState("density operator must be square");
    }
    if (product(dims) != matrix.rows()) {
        throw DimMismatch("density operator dims do not multiply to the matrix dimension");
    }
    qmat::check_state(matrix, 1e-8);
}

DensityOperator DensityOperator::marginal(const std::vector<int>& keep) const {
    Matrix m = qmat::partial_trace(matrix, dims, keep);
    std::vector<int> kd;
    for (int i = 0; i < factors(); ++i) {
        if (std::find(keep.begin(), keep.end(), i) != keep.end()) kd.push_back(dims[i]);
    }
    return DensityOperator(std::move(m), std::move(kd));
}

double DensityOperator::top_eigenvalue() const {
    return qmat::herm_eig(matrix).eigenvalues(0);
}

bool DensityOperator::is_pure(double tolerance) const {
    return top_eigenvalue() >= 1.0 - tolerance;
}

PureState::PureState(Vector a, std::vector<int> d) : amplitudes(std::move(a)), dims(std::move(d)) {
    if (product(dims) != amplitudes.size()) {
        throw DimMismatch("pure state dims do not multiply to the amplitude length");
    }
    if (std::abs(amplitudes.norm() - 1.0) > tol::kHermitian) {
        throw NotAState("pure state amplitudes are not unit norm");
    }
}

DensityOperator PureState::density() const {
    return DensityOperator(amplitudes * amplitudes.adjoint(), dims);
}

PureState purify(const DensityOperator& rho) {
    const qmat::HermitianSpectrum s = qmat::herm_eig(rho.matrix);
    int rank = 0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        if (s.eigenvalues(i) > tol::kEigenCutoff) ++rank;
    }
    rank = std::max(rank, 1);
    const int d = rho.dim();
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(d) * rank);
    for (int k = 0; k < rank; ++k) {
        const double root = std::sqrt(std::max(s.eigenvalues(k), 0.0));
        for (int i = 0; i < d; ++i) amps(static_cast<Eigen::Index>(i) * rank + k) = root * s.eigenvectors(i, k);
    }
    amps.normalize();
    std::vector<int> dims = rho.dims;
    dims.push_back(rank);
    return PureState(std::move(amps), std::move(dims));
}

DensityOperator random_state(RandomKind kind, const std::vector<int>& dims, int rank, Rng& rng) {
    const int d = product(dims);
    if (kind == RandomKind::haar_pure) {
        Vector v(d);
        for (int i = 0; i < d; ++i) v(i) = rng.normal_complex();
        v.normalize();
        return DensityOperator(v * v.adjoint(), dims);
    }
    if (rank == 0) rank = d;
    if (rank < 1 || rank > d) {
        std::ostringstream os;
        os << "random_state: rank " << rank << " outside [1, " << d << "]";
        throw BadRank(os.str());
    }
    Matrix g(d, rank);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = rng.normal_complex();
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = Complex(0.5, 0.0) * (rho + rho.adjoint().eval());
    return DensityOperator(std::move(rho), dims);
}

Matrix random_unitary(int d, Rng& rng) {
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.normal_complex();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phase ambiguity so the distribution is Haar
    for (int j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) q.col(j) *= rjj / mag;
    }
    return q;
}

Matrix pure_marginal(const PureState& psi, const std::vector<int>& keep) {
    const int n = static_cast<int>(psi.dims.size());
    if (keep.empty()) throw EmptyKeep("pure_marginal: keep set is empty");
    std::vector<bool> kept(n, false);
    for (int k : keep) {
        if (k < 0 || k >= n) throw DimMismatch("pure_marginal: keep index out of range");
        kept[k] = true;
    }
    std::vector<int> keep_idx, trace_idx;
    for (int i = 0; i < n; ++i) (kept[i] ? keep_idx : trace_idx).push_back(i);

    std::vector<long> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * psi.dims[i + 1];

    int dk = 1, dt = 1;
    for (int i : keep_idx) dk *= psi.dims[i];
    for (int i : trace_idx) dt *= psi.dims[i];

    auto offset = [&](int composite, const std::vector<int>& idx) {
        long off = 0;
        for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
            const int d = psi.dims[idx[p]];
            off += static_cast<long>(composite % d) * stride[idx[p]];
            composite /= d;
        }
        return off;
    };

    if (trace_idx.empty()) {
        return psi.amplitudes * psi.amplitudes.adjoint();
    }

    Matrix out = Matrix::Zero(dk, dk);
    std::vector<long> keep_off(dk), trace_off(dt);
    for (int i = 0; i < dk; ++i) keep_off[i] = offset(i, keep_idx);
    for (int i = 0; i < dt; ++i) trace_off[i] = offset(i, trace_idx);
    for (int r = 0; r < dk; ++r)
        for (int c = 0; c < dk; ++c) {
            Complex acc(0.0, 0.0);
            for (int t = 0; t < dt; ++t) {
                acc += psi.amplitudes(keep_off[r] + trace_off[t]) *
                       std::conj(psi.amplitudes(keep_off[c] + trace_off[t]));
            }
            out(r, c) = acc;
        }
    return out;
}

PureState rotate_factor(const PureState& psi, int factor, const Matrix& u) {
    const int n = static_cast<int>(psi.dims.size());
    if (factor < 0 || factor >= n) throw DimMismatch("rotate_factor: factor index out of range");
    if (u.rows() != psi.dims[factor] || u.cols() != psi.dims[factor]) {
        throw DimMismatch("rotate_factor: unitary dimension does not match the factor");
    }
    Matrix full = Matrix::Identity(1, 1);
    for (int i = 0; i < n; ++i) {
        full = qmat::tensor(full, i == factor ? u : Matrix::Identity(psi.dims[i], psi.dims[i]));
    }
    Vector amps = full * psi.amplitudes;
    return PureState(std::move(amps), psi.dims);
}

namespace {

// Pinching basis for one side, refined inside degenerate marginal eigenspaces
// by a common eigenbasis of the conditional operators (when one exists).
// Returns false when the conditionals fail to commute, i.e. no classical
// basis can exist on this side.
bool classical_basis_for_side(const Matrix& rho, int da, int db, bool side_a, Matrix& basis_out) {
    const std::vector<int> dims = {da, db};
    const int ds = side_a ? da : db;
    const int dother = side_a ? db : da;
    const std::vector<int> self = {side_a ? 0 : 1};

    const Matrix marg = qmat::partial_trace(rho, dims, self);
    const qmat::HermitianSpectrum ms = qmat::herm_eig(marg);

    // conditional operator on this side for an operator M on the other side
    auto conditional = [&](const Matrix& m_other) {
        Matrix full = side_a ? qmat::tensor(Matrix::Identity(da, da), m_other)
                             : qmat::tensor(m_other, Matrix::Identity(db, db));
        return qmat::partial_trace((full * rho).eval(), dims, self);
    };

    Matrix basis = ms.eigenvectors;

    int start = 0;
    while (start < ds) {
        int end = start + 1;
        while (end < ds && std::abs(ms.eigenvalues(end) - ms.eigenvalues(start)) < 1e-8) ++end;
        const int k = end - start;
        if (k > 1) {
            const Matrix p = basis.block(0, start, ds, k);
            // Hermitian operator basis of the other side
            std::vector<Matrix> conds;
            for (int m = 0; m < dother; ++m) {
                for (int n = m; n < dother; ++n) {
                    Matrix e = Matrix::Zero(dother, dother);
                    if (m == n) {
                        e(m, m) = 1.0;
                        conds.push_back((p.adjoint() * conditional(e) * p).eval());
                    } else {
                        e(m, n) = 1.0;
                        e(n, m) = 1.0;
                        conds.push_back((p.adjoint() * conditional(e) * p).eval());
                        e(m, n) = Complex(0.0, -1.0);
                        e(n, m) = Complex(0.0, 1.0);
                        conds.push_back((p.adjoint() * conditional(e) * p).eval());
                    }
                }
            }
            for (std::size_t i = 0; i < conds.size(); ++i) {
                for (std::size_t j = i + 1; j < conds.size(); ++j) {
                    const Matrix comm = conds[i] * conds[j] - conds[j] * conds[i];
                    if (comm.norm() > 1e-8) return false;
                }
            }
            // Commuting family: a generic combination has the common eigenbasis.
            Matrix combo = Matrix::Zero(k, k);
            double coeff = 1.0;
            for (const Matrix& c : conds) {
                combo += coeff * c;
                coeff *= 0.577215664901532;  // incommensurate weights split degeneracies
            }
            combo = Complex(0.5, 0.0) * (combo + combo.adjoint().eval());
            const qmat::HermitianSpectrum cs = qmat::herm_eig(combo);
            basis.block(0, start, ds, k) = p * cs.eigenvectors;
        }
        start = end;
    }
    basis_out = basis;
    return true;
}

bool side_is_classical(const Matrix& rho, int da, int db, bool side_a) {
    Matrix basis;
    if (!classical_basis_for_side(rho, da, db, side_a, basis)) return false;
    const int ds = side_a ? da : db;
    Matrix pinched = Matrix::Zero(rho.rows(), rho.cols());
    for (int j = 0; j < ds; ++j) {
        const Matrix proj = basis.col(j) * basis.col(j).adjoint();
        const Matrix full = side_a ? qmat::tensor(proj, Matrix::Identity(db, db))
                                   : qmat::tensor(Matrix::Identity(da, da), proj);
        pinched += full * rho * full;
    }
    return (pinched - rho).cwiseAbs().maxCoeff() <= 1e-9;
}

}  // namespace

StateClass classify(const DensityOperator& rho, int cut) {
    if (cut < 1 || cut >= rho.factors()) {
        throw NotBipartite("classify: cut must split the factors into two nonempty groups");
    }
    int da = 1, db = 1;
    for (int i = 0; i < rho.factors(); ++i) (i < cut ? da : db) *= rho.dims[i];

    const bool a_classical = side_is_classical(rho.matrix, da, db, true);
    if (!a_classical) return StateClass::unknown_beyond_CQ;
    const bool b_classical = side_is_classical(rho.matrix, da, db, false);
    return b_classical ? StateClass::CC : StateClass::CQ;
}

PureState ket(const Vector& amplitudes, const std::vector<int>& dims) {
    Vector a = amplitudes;
    a.normalize();
    return PureState(std::move(a), dims);
}

PureState bell_phi_plus() {
    Vector a = Vector::Zero(4);
    a(0) = 1.0 / std::sqrt(2.0);
    a(3) = 1.0 / std::sqrt(2.0);
    return PureState(std::move(a), {2, 2});
}

DensityOperator maximally_mixed(const std::vector<int>& dims) {
    const int d = product(dims);
    return DensityOperator(Matrix::Identity(d, d) / static_cast<double>(d), dims);
}

}  // namespace decolab::states
