#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "atomwalk/constants.hpp"

// Physical constants of the atom-light pair and the recoil unit system.
//
// Everything downstream works in dimensionless recoil units:
//   momentum in hbar*k, angular frequency in omega_B, time in 1/omega_B,
//   length in 1/k, energy in eps_B = hbar*omega_B.
// In these units omega_p = p^2 and omega_{p+hk} = (p+1)^2, so the
// generalized detuning is delta = Delta + 2p + 1. SI conversion lives
// only here.

namespace atomwalk {

struct AtomSpecies {
    double mass_amu;    // unified atomic mass units
    double wavelength;  // resonant transition wavelength, m
    std::string label;
};

// Built-in preset: the 1S0 -> 3P0 clock transition of fermionic ytterbium.
inline AtomSpecies yb173() { return {172.938208, 578e-9, "Yb-173"}; }

struct RecoilScales {
    double hbar_k;               // photon momentum, kg m/s
    double omega_B;              // recoil angular frequency hbar k^2 / 2M, rad/s
    double epsilon_B;            // recoil energy hbar*omega_B, J
    double recoil_length;        // 1/k, m
    double half_recoil_velocity; // hbar k / 2M, m/s
    double mass;                 // kg
    double wavenumber;           // k = 2 pi / lambda, 1/m
};

// Drive parameters in SI units.
struct DriveParams {
    double rabi = 0.0;          // Omega, rad/s, >= 0
    double detuning = 0.0;      // Delta, rad/s
    double dipole_phase = 0.0;  // phi, radians
};

// Drive in recoil units (rabi and detuning divided by omega_B).
struct RecoilDrive {
    double rabi = 0.0;
    double detuning = 0.0;
};

enum class CouplingVerdict { Strong, Weak, Marginal };

inline const char* to_string(CouplingVerdict v) {
    switch (v) {
        case CouplingVerdict::Strong: return "Strong";
        case CouplingVerdict::Weak: return "Weak";
        default: return "Marginal";
    }
}

struct RegimeReport {
    double ratio = 0.0;              // max |delta| / Omega over the packet support
    double epsilon_effective = 0.0;  // epsilon solving the coupling criterion
    double threshold = 1e-3;         // strong/weak boundary used for the verdict
    CouplingVerdict verdict = CouplingVerdict::Weak;
};

inline RecoilScales derive_recoil(const AtomSpecies& species) {
    if (!(species.mass_amu > 0.0))
        throw std::invalid_argument("derive_recoil: mass_amu must be positive");
    if (!(species.wavelength > 0.0))
        throw std::invalid_argument("derive_recoil: wavelength must be positive");

    RecoilScales s{};
    s.mass = species.mass_amu * constants::atomic_mass_unit;
    s.wavenumber = constants::two_pi / species.wavelength;
    s.hbar_k = constants::hbar * s.wavenumber;
    s.omega_B = constants::hbar * s.wavenumber * s.wavenumber / (2.0 * s.mass);
    s.epsilon_B = constants::hbar * s.omega_B;
    s.recoil_length = 1.0 / s.wavenumber;
    s.half_recoil_velocity = s.hbar_k / (2.0 * s.mass);
    return s;
}

inline RecoilDrive to_recoil(const DriveParams& drive, const RecoilScales& scales) {
    if (drive.rabi < 0.0)
        throw std::invalid_argument("to_recoil: rabi frequency must be non-negative");
    return {drive.rabi / scales.omega_B, drive.detuning / scales.omega_B};
}

// Walking step length Lambda = pi hbar k / (M Omega).
inline double step_length(const RecoilScales& scales, const DriveParams& drive) {
    if (drive.rabi <= 0.0)
        throw std::domain_error(
            "step_length: rabi frequency must be positive (step length diverges at zero)");
    return constants::pi * scales.hbar_k / (scales.mass * drive.rabi);
}

// Walking period T = 2 pi / Omega.
inline double walk_period(const DriveParams& drive) {
    if (drive.rabi <= 0.0)
        throw std::domain_error("walk_period: rabi frequency must be positive");
    return constants::two_pi / drive.rabi;
}

// Average walking speed, half of the single-photon recoil velocity.
// Equals step_length/walk_period for every positive Rabi frequency.
inline double mean_walk_velocity(const RecoilScales& scales) {
    return scales.half_recoil_velocity;
}

// Rabi frequency satisfying the strong-coupling condition
//   Omega = sqrt(2) omega_B / sqrt(eps) * (Pi/hk + Delta/(2 omega_B) + 1/2)
// for a packet of momentum width Pi (in hbar k) and detuning Delta (rad/s).
inline double strong_coupling_rabi(const RecoilScales& scales, double epsilon,
                                   double packet_width_hk, double detuning) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("strong_coupling_rabi: epsilon must be positive");
    const double bracket = packet_width_hk + detuning / (2.0 * scales.omega_B) + 0.5;
    if (!(bracket > 0.0))
        throw std::domain_error(
            "strong_coupling_rabi: Pi/hk + Delta/(2 omega_B) + 1/2 must be positive; "
            "the criterion is undefined for this detuning/width combination");
    return std::sqrt(2.0) * scales.omega_B / std::sqrt(epsilon) * bracket;
}

// Inverse of the criterion: the epsilon a given drive actually achieves.
inline double epsilon_effective(const RecoilScales& scales, const DriveParams& drive,
                                double packet_width_hk) {
    if (drive.rabi <= 0.0) return std::numeric_limits<double>::infinity();
    const double bracket = packet_width_hk + drive.detuning / (2.0 * scales.omega_B) + 0.5;
    const double ratio = scales.omega_B * bracket / drive.rabi;
    return 2.0 * ratio * ratio;
}

inline RegimeReport classify_regime(const RecoilScales& scales, const DriveParams& drive,
                                    double packet_width_hk, double p_center_hk,
                                    double support_sigmas = 3.0, double threshold = 1e-3) {
    if (!(packet_width_hk > 0.0))
        throw std::invalid_argument("classify_regime: packet width must be positive");

    RegimeReport report;
    report.threshold = threshold;

    if (drive.rabi <= 0.0) {
        report.ratio = std::numeric_limits<double>::infinity();
        report.epsilon_effective = std::numeric_limits<double>::infinity();
        report.verdict = CouplingVerdict::Weak;
        return report;
    }

    // delta(p) = Delta + omega_B + p k / M, evaluated at the packet support edges.
    const double delta_rec = drive.detuning / scales.omega_B;
    const double lo = p_center_hk - support_sigmas * packet_width_hk;
    const double hi = p_center_hk + support_sigmas * packet_width_hk;
    const double delta_lo = delta_rec + 2.0 * lo + 1.0;
    const double delta_hi = delta_rec + 2.0 * hi + 1.0;
    const double max_delta = std::max(std::abs(delta_lo), std::abs(delta_hi));
    report.ratio = max_delta / (drive.rabi / scales.omega_B);

    report.epsilon_effective = epsilon_effective(scales, drive, packet_width_hk);
    if (report.epsilon_effective <= threshold)
        report.verdict = CouplingVerdict::Strong;
    else if (report.epsilon_effective >= 10.0 * threshold)
        report.verdict = CouplingVerdict::Weak;
    else
        report.verdict = CouplingVerdict::Marginal;
    return report;
}

}  // namespace atomwalk
