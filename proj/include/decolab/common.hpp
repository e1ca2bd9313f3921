#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace decolab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Error kinds surfaced by the library. Each names the violated contract.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonSquare : Error { using Error::Error; };
struct NonHermitian : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct EmptyKeep : Error { using Error::Error; };
struct NotAState : Error { using Error::Error; };
struct BadRank : Error { using Error::Error; };
struct NotBipartite : Error { using Error::Error; };
struct NotRankOne : Error { using Error::Error; };
struct BadPartition : Error { using Error::Error; };
struct NotPure : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct InconsistentMarginal : Error { using Error::Error; };
struct NotTracePreserving : Error { using Error::Error; };
struct BadDelta : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

namespace tol {
// Eigenvalues below this are treated as exactly zero in log/sqrt/support.
inline constexpr double kEigenCutoff = 1e-12;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kState = 1e-8;
inline constexpr double kPurity = 1e-9;
}  // namespace tol

// Deterministic RNG (splitmix64 core). The uniform/normal transforms use
// only explicit arithmetic, so a seed pins the entire stream independent
// of the standard library in use.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    // Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(next_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t integer() { return next_(); }

    // Index uniform on [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    // Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double two_pi = 6.283185307179586476925286766559;
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    Complex normal_complex() { return Complex(normal(), normal()); }

    // Derive an independent stream, e.g. one per ensemble instance.
    Rng spawn(std::uint64_t stream) const {
        std::uint64_t x = state_ ^ (0x9e3779b97f4a7c15ULL + stream * 0xbf58476d1ce4e5b9ULL);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return Rng(x ^ (x >> 31));
    }

  private:
    // splitmix64; a single 64-bit word of state keeps spawn() cheap.
    std::uint64_t next_() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline int product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) p *= d;
    return p;
}

}  // namespace decolab
