#pragma once

// Hilbert-space representation for M spin-1/2 sites.
//
// Basis configurations are bit patterns: site k maps to bit k (little
// endian), bit value 1 means spin up. A state is a flat array of 2^M
// complex amplitudes indexed by configuration.

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spindyn/errors.hpp"

namespace spindyn {

using complex_t = std::complex<double>;
using basis_t = std::uint32_t;

inline constexpr int kMaxSites = 24;  // basis_t headroom; real runs stop far below

inline int popcount(basis_t config) { return std::popcount(config); }

inline bool bit_up(basis_t config, int site) { return (config >> site) & 1u; }

inline void check_site(int site, int m_sites) {
    if (site < 0 || site >= m_sites)
        throw std::out_of_range("site index " + std::to_string(site) +
                                " outside [0, " + std::to_string(m_sites) + ")");
}

class StateVector {
  public:
    // Single basis configuration |config>.
    static StateVector basis_state(int m_sites, basis_t config) {
        StateVector psi(m_sites);
        if (config >= psi.dim())
            throw std::out_of_range("basis config out of range");
        psi.amp_[config] = complex_t{1.0, 0.0};
        return psi;
    }

    // Adopts an amplitude array. The norm must already be 1 within 1e-10;
    // normalization is never repaired silently (call renormalize() to opt in).
    static StateVector from_amplitudes(int m_sites, std::vector<complex_t> amps) {
        StateVector psi(m_sites);
        if (amps.size() != psi.dim())
            throw std::invalid_argument("amplitude array size is not 2^M");
        psi.amp_ = std::move(amps);
        if (psi.norm_error() > 1e-10)
            throw std::invalid_argument("state vector is not normalized (|norm-1| = " +
                                        std::to_string(psi.norm_error()) + ")");
        return psi;
    }

    int sites() const { return m_sites_; }
    std::size_t dim() const { return std::size_t(1) << m_sites_; }

    std::span<const complex_t> amplitudes() const { return amp_; }
    std::span<complex_t> amplitudes() { return amp_; }

    complex_t amplitude(basis_t config) const { return amp_[config]; }

    // |sum |a|^2 - 1|, compensated summation.
    double norm_error() const { return std::abs(norm_sq() - 1.0); }

    double norm_sq() const {
        double sum = 0.0, comp = 0.0;
        for (const auto& a : amp_) {
            const double y = std::norm(a) - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum;
    }

    void renormalize() {
        const double inv = 1.0 / std::sqrt(norm_sq());
        for (auto& a : amp_) a *= inv;
    }

  private:
    explicit StateVector(int m_sites) : m_sites_(m_sites) {
        if (m_sites < 1 || m_sites > kMaxSites)
            throw std::invalid_argument("site count must be in [1, " +
                                        std::to_string(kMaxSites) + "]");
        amp_.assign(std::size_t(1) << m_sites, complex_t{0.0, 0.0});
    }

    int m_sites_;
    std::vector<complex_t> amp_;

    friend StateVector zero_state(int m_sites);
};

// All-zero amplitude workspace (not a valid state until filled).
inline StateVector zero_state(int m_sites) { return StateVector(m_sites); }

// Probability that `site` is spin up: sum of |amplitude|^2 over
// configurations with the site's bit set. This is the W of the local
// correlation function when the state is an evolved excitation.
inline double up_probability(const StateVector& psi, int site) {
    check_site(site, psi.sites());
    const basis_t mask = basis_t(1) << site;
    const auto amp = psi.amplitudes();
    double sum = 0.0, comp = 0.0;
    for (std::size_t b = 0; b < amp.size(); ++b) {
        if (b & mask) {
            const double y = std::norm(amp[b]) - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum;
}

// P = 2(W - 1/2): maps up-probability onto polarization in [-1, 1].
inline double polarization_from_w(double w) {
    constexpr double kSlack = 1e-12;
    if (w < -kSlack || w > 1.0 + kSlack)
        throw std::domain_error("probability " + std::to_string(w) + " outside [0, 1]");
    if (w < 0.0) w = 0.0;
    if (w > 1.0) w = 1.0;
    return 2.0 * (w - 0.5);
}

// Expectation of the total z magnetization, sum_k I_k^z (eigenvalues +-1/2
// per site). Conserved by every coupling network in this library.
inline double total_magnetization(const StateVector& psi) {
    const auto amp = psi.amplitudes();
    const double half_m = 0.5 * psi.sites();
    double sum = 0.0, comp = 0.0;
    for (std::size_t b = 0; b < amp.size(); ++b) {
        const double y = std::norm(amp[b]) * (popcount(basis_t(b)) - half_m) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

// <a|b>, conjugate-linear in the first argument.
inline complex_t inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("inner product between states of different dimension");
    const auto xa = a.amplitudes();
    const auto xb = b.amplitudes();
    complex_t sum{0.0, 0.0};
    for (std::size_t i = 0; i < xa.size(); ++i) sum += std::conj(xa[i]) * xb[i];
    return sum;
}

} // namespace spindyn
