#include "decolab/qmat.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace decolab::qmat {

Matrix HermitianSpectrum::reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

bool is_hermitian(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

HermitianSpectrum herm_eig(const Matrix& m) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << "herm_eig: matrix is " << m.rows() << "x" << m.cols() << ", not square";
        throw NonSquare(os.str());
    }
    if (!is_hermitian(m)) {
        throw NonHermitian("herm_eig: input deviates from its conjugate transpose beyond 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("herm_eig: eigensolver did not converge");
    }
    const auto n = m.rows();
    HermitianSpectrum s;
    s.eigenvalues = RealVector(n);
    s.eigenvectors = Matrix(n, n);
    // Eigen returns ascending order; flip to descending.
    for (Eigen::Index i = 0; i < n; ++i) {
        s.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
        s.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return s;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims, const std::vector<int>& keep) {
    const int total = product(dims);
    if (m.rows() != m.cols() || m.rows() != total) {
        throw DimMismatch("partial_trace: product of dims does not match matrix dimension");
    }
    if (keep.empty()) {
        throw EmptyKeep("partial_trace: keep set is empty");
    }
    const int n = static_cast<int>(dims.size());
    std::vector<bool> kept(n, false);
    for (int k : keep) {
        if (k < 0 || k >= n) throw DimMismatch("partial_trace: keep index out of range");
        kept[k] = true;
    }

    std::vector<int> keep_idx, trace_idx;
    for (int i = 0; i < n; ++i) (kept[i] ? keep_idx : trace_idx).push_back(i);

    // Strides of each factor within the flattened row index.
    std::vector<long> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

    int dk = 1, dt = 1;
    for (int i : keep_idx) dk *= dims[i];
    for (int i : trace_idx) dt *= dims[i];

    // offset of a composite (kept, traced) index pair into the full space
    auto offset = [&](int composite, const std::vector<int>& idx) {
        long off = 0;
        for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
            const int d = dims[idx[p]];
            off += static_cast<long>(composite % d) * stride[idx[p]];
            composite /= d;
        }
        return off;
    };

    std::vector<long> keep_off(dk), trace_off(dt);
    for (int i = 0; i < dk; ++i) keep_off[i] = offset(i, keep_idx);
    for (int i = 0; i < dt; ++i) trace_off[i] = offset(i, trace_idx);

    Matrix out = Matrix::Zero(dk, dk);
    for (int r = 0; r < dk; ++r)
        for (int c = 0; c < dk; ++c) {
            Complex acc(0.0, 0.0);
            for (int t = 0; t < dt; ++t)
                acc += m(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
            out(r, c) = acc;
        }
    return out;
}

Matrix sqrtm_psd(const Matrix& m) {
    const HermitianSpectrum s = herm_eig(m);
    RealVector root(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < root.size(); ++i) {
        const double lam = s.eigenvalues(i);
        root(i) = lam > tol::kEigenCutoff ? std::sqrt(lam) : 0.0;
    }
    return s.eigenvectors * root.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix log2m_support(const Matrix& m) {
    const HermitianSpectrum s = herm_eig(m);
    RealVector lg(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < lg.size(); ++i) {
        const double lam = s.eigenvalues(i);
        lg(i) = lam > tol::kEigenCutoff ? std::log2(lam) : 0.0;
    }
    return s.eigenvectors * lg.asDiagonal() * s.eigenvectors.adjoint();
}

double trace_norm(const Matrix& m) {
    if (is_hermitian(m)) {
        const HermitianSpectrum s = herm_eig(m);
        return s.eigenvalues.cwiseAbs().sum();
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

double purity(const Matrix& rho) {
    return (rho * rho).trace().real();
}

double relative_entropy_core(const Matrix& rho, const Matrix& sigma) {
    const HermitianSpectrum ss = herm_eig(sigma);
    // weight of rho on sigma's kernel decides the support condition
    double kernel_weight = 0.0;
    RealVector lg(ss.eigenvalues.size());
    for (Eigen::Index i = 0; i < ss.eigenvalues.size(); ++i) {
        const double lam = ss.eigenvalues(i);
        if (lam > tol::kEigenCutoff) {
            lg(i) = std::log2(lam);
        } else {
            lg(i) = 0.0;
            const Vector v = ss.eigenvectors.col(i);
            kernel_weight += (v.adjoint() * rho * v)(0, 0).real();
        }
    }
    if (kernel_weight > 1e-10) {
        return std::numeric_limits<double>::infinity();
    }
    const Matrix log_sigma = ss.eigenvectors * lg.asDiagonal() * ss.eigenvectors.adjoint();

    const HermitianSpectrum rs = herm_eig(rho);
    double tr_rho_log_rho = 0.0;
    for (Eigen::Index i = 0; i < rs.eigenvalues.size(); ++i) {
        const double lam = rs.eigenvalues(i);
        if (lam > tol::kEigenCutoff) tr_rho_log_rho += lam * std::log2(lam);
    }
    const double tr_rho_log_sigma = (rho * log_sigma).trace().real();
    return tr_rho_log_rho - tr_rho_log_sigma;
}

double hilbert_schmidt_core(const Matrix& rho, const Matrix& sigma) {
    const Matrix d = rho - sigma;
    return (d * d).trace().real();
}

double fidelity_psd(const Matrix& rho, const Matrix& sigma) {
    const Matrix root = sqrtm_psd(rho);
    const HermitianSpectrum s = herm_eig((root * sigma * root).eval());
    double acc = 0.0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        const double lam = s.eigenvalues(i);
        if (lam > 0.0) acc += std::sqrt(lam);
    }
    return acc * acc;
}

double trace_distance_core(const Matrix& rho, const Matrix& sigma) {
    return 0.5 * trace_norm(rho - sigma);
}

void check_state(const Matrix& rho, double tolerance) {
    if (rho.rows() != rho.cols()) {
        throw NotAState("state matrix is not square");
    }
    if (!is_hermitian(rho, tolerance)) {
        throw NotAState("state matrix is not Hermitian");
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > tolerance) {
        std::ostringstream os;
        os << "state trace is " << tr << ", violates unit-trace invariant";
        throw NotAState(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tolerance) {
        throw NotAState("state matrix has a negative eigenvalue beyond tolerance");
    }
}

double divergence(Divergence kind, const Matrix& rho, const Matrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw DimMismatch("divergence: operands differ in dimension");
    }
    check_state(rho);
    check_state(sigma);
    switch (kind) {
        case Divergence::relative_entropy: return relative_entropy_core(rho, sigma);
        case Divergence::hilbert_schmidt: return hilbert_schmidt_core(rho, sigma);
        case Divergence::fidelity: return fidelity_psd(rho, sigma);
        case Divergence::trace_distance: return trace_distance_core(rho, sigma);
    }
    throw Error("divergence: unknown kind");
}

}  // namespace decolab::qmat
