#include "decolab/channels.hpp"

#include <cmath>

#include "decolab/entropies.hpp"
#include "decolab/theorems.hpp"

namespace decolab::channels {

QuantumChannel::QuantumChannel(std::vector<Matrix> k, int din, int dout)
    : kraus(std::move(k)), d_in(din), d_out(dout) {
    if (kraus.empty()) throw NotTracePreserving("channel has no Kraus operators");
    Matrix sum = Matrix::Zero(d_in, d_in);
    for (const Matrix& op : kraus) {
        if (op.rows() != d_out || op.cols() != d_in) {
            throw DimMismatch("Kraus operator shape does not match (d_out x d_in)");
        }
        sum += op.adjoint() * op;
    }
    if ((sum - Matrix::Identity(d_in, d_in)).cwiseAbs().maxCoeff() > 1e-9) {
        throw NotTracePreserving("Kraus operators do not satisfy sum K^dag K = I within 1e-9");
    }
}

Matrix QuantumChannel::apply(const Matrix& rho) const {
    Matrix out = Matrix::Zero(d_out, d_out);
    for (const Matrix& op : kraus) out += op * rho * op.adjoint();
    return out;
}

Matrix QuantumChannel::stinespring() const {
    const int nk = static_cast<int>(kraus.size());
    Matrix v = Matrix::Zero(static_cast<Eigen::Index>(d_out) * nk, d_in);
    // row (o, k) with the environment as the trailing factor
    for (int k = 0; k < nk; ++k)
        for (int o = 0; o < d_out; ++o)
            for (int i = 0; i < d_in; ++i) v(static_cast<Eigen::Index>(o) * nk + k, i) = kraus[k](o, i);
    return v;
}

Matrix QuantumChannel::complementary_apply(const Matrix& rho) const {
    const Matrix v = stinespring();
    const Matrix big = v * rho * v.adjoint();
    return qmat::partial_trace(big, {d_out, static_cast<int>(kraus.size())}, {1});
}

ChoiTriple choi_triple(const QuantumChannel& ch) {
    const int d = ch.d_in;
    const int nk = static_cast<int>(ch.kraus.size());
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(d) * ch.d_out * nk);
    // amplitude of (reference j, output o, environment k)
    for (int j = 0; j < d; ++j)
        for (int o = 0; o < ch.d_out; ++o)
            for (int k = 0; k < nk; ++k) {
                amps((static_cast<Eigen::Index>(j) * ch.d_out + o) * nk + k) =
                    norm * ch.kraus[k](o, j);
            }
    ChoiTriple t;
    t.omega = states::PureState(std::move(amps), {d, ch.d_out, nk});
    return t;
}

namespace {

// The Choi reference holds the transposed input copy: conjugate the basis
// there so the computed quantity refers to z on the channel input.
info::InfoType conjugate_type(const info::InfoType& z) {
    std::vector<Matrix> projs;
    projs.reserve(z.projectors.size());
    for (const Matrix& p : z.projectors) projs.push_back(p.conjugate());
    return info::InfoType(std::move(projs), z.subsystem);
}

}  // namespace

double channel_info(const QuantumChannel& ch, const info::InfoType& z, InfoSide side) {
    if (z.dim() != ch.d_in) {
        throw DimMismatch("channel_info: information type does not fit the channel input");
    }
    const states::DensityOperator omega = choi_triple(ch).density();
    info::InfoType z_ref = conjugate_type(z);
    z_ref.subsystem = 0;
    const int condition = side == InfoSide::kept_by_output ? 1 : 2;
    return entropy::cond_entropy_vn(entropy::cq_decompose(omega, z_ref, condition));
}

DecoherenceProfile decoherence_profile(const QuantumChannel& ch, const info::InfoType& z,
                                       int samples, Rng& rng) {
    if (!z.rank_one()) throw NotRankOne("decoherence_profile: requires an orthonormal basis");
    if (z.dim() != ch.d_in) {
        throw DimMismatch("decoherence_profile: information type does not fit the channel input");
    }
    const int d = ch.d_in;
    const std::vector<Vector> kets = z.kets();

    DecoherenceProfile out;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            if (j == k) continue;
            const Matrix image = ch.apply((kets[j] * kets[k].adjoint()).eval());
            out.offdiagonal_sum += (image.adjoint() * image).trace().real();
        }
    out.offdiagonal_sum /= static_cast<double>(d) * d;

    const states::DensityOperator omega = choi_triple(ch).density();
    info::InfoType z_ref = conjugate_type(z);
    z_ref.subsystem = 0;
    const entropy::CqDecomposition leak = entropy::cq_decompose(omega, z_ref, 2);
    out.quad_leaked = entropy::cond_entropy_quad(leak, leak.rho_c);

    const entropy::TransferMap to_output(omega, 0, 1);
    const theorems::ClassAverageQuad mc =
        theorems::class_average_certainty_quad(to_output, z_ref.kets(), samples, rng);
    out.mc_mean = mc.mean;
    out.mc_se = mc.se;
    out.samples = samples;
    return out;
}

QuantumChannel phase_flip(double p) {
    Matrix k0 = Matrix::Identity(2, 2) * std::sqrt(1.0 - p);
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 0) = std::sqrt(p);
    k1(1, 1) = -std::sqrt(p);
    return QuantumChannel({k0, k1}, 2, 2);
}

QuantumChannel depolarizing(double p) {
    const double keep = std::sqrt(1.0 - 3.0 * p / 4.0);
    const double flip = std::sqrt(p / 4.0);
    Matrix k0 = Matrix::Identity(2, 2) * keep;
    Matrix kx = Matrix::Zero(2, 2), ky = Matrix::Zero(2, 2), kz = Matrix::Zero(2, 2);
    kx(0, 1) = flip;
    kx(1, 0) = flip;
    ky(0, 1) = Complex(0.0, -flip);
    ky(1, 0) = Complex(0.0, flip);
    kz(0, 0) = flip;
    kz(1, 1) = -flip;
    return QuantumChannel({k0, kx, ky, kz}, 2, 2);
}

QuantumChannel identity_channel(int d) {
    return QuantumChannel({Matrix::Identity(d, d)}, d, d);
}

QuantumChannel completely_dephasing(int d) {
    std::vector<Matrix> kraus;
    kraus.reserve(d);
    for (int j = 0; j < d; ++j) {
        Matrix k = Matrix::Zero(d, d);
        k(j, j) = 1.0;
        kraus.push_back(std::move(k));
    }
    return QuantumChannel(std::move(kraus), d, d);
}

}  // namespace decolab::channels
