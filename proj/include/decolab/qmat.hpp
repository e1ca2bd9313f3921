#pragma once

#include <vector>

#include "decolab/common.hpp"

namespace decolab::qmat {

/// Spectral decomposition of a Hermitian matrix. Eigenvalues are real and
/// sorted descending; the columns of `eigenvectors` are the matching
/// orthonormal eigenvectors, so U diag(lambda) U^dagger rebuilds the input.
struct HermitianSpectrum {
    RealVector eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const;
};

enum class Divergence { relative_entropy, hilbert_schmidt, fidelity, trace_distance };

/// Spectral decomposition of a Hermitian matrix.
/// Throws NonSquare / NonHermitian if the input fails its pre-checks
/// (max-abs deviation from the conjugate transpose above 1e-10).
HermitianSpectrum herm_eig(const Matrix& m);

/// Kronecker product with block ordering (a ox b)[(i*rb+k),(j*cb+l)] = a[i,j] b[k,l].
Matrix tensor(const Matrix& a, const Matrix& b);

/// Trace out all subsystems not listed in `keep`. `dims` are the factor
/// dimensions of m (their product must equal the matrix dimension); kept
/// factors stay in their original order.
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims, const std::vector<int>& keep);

/// Distinguishability measures between two density operators, base-2 logs.
/// relative_entropy returns +infinity when supp(rho) is not contained in
/// supp(sigma).
double divergence(Divergence kind, const Matrix& rho, const Matrix& sigma);

// Hermitian operator functions, evaluated on the support (eigenvalues below
// the 1e-12 cutoff are treated as exactly zero).
Matrix sqrtm_psd(const Matrix& m);
Matrix log2m_support(const Matrix& m);

double trace_norm(const Matrix& m);
double purity(const Matrix& rho);

// Unchecked cores used by optimizers on PSD operators that are not
// necessarily unit-trace states.
double fidelity_psd(const Matrix& rho, const Matrix& sigma);
double relative_entropy_core(const Matrix& rho, const Matrix& sigma);
double hilbert_schmidt_core(const Matrix& rho, const Matrix& sigma);
double trace_distance_core(const Matrix& rho, const Matrix& sigma);

bool is_hermitian(const Matrix& m, double tolerance = tol::kHermitian);

/// Validates positivity (eigenvalues >= -1e-8) and unit trace within 1e-8;
/// throws NotAState naming the violated invariant.
void check_state(const Matrix& rho, double tolerance = tol::kState);

}  // namespace decolab::qmat
