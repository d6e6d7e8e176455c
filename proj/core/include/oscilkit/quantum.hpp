#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "oscilkit/cross_sections.hpp"
#include "oscilkit/oscillator.hpp"

namespace oscilkit::quantum {

/// One dipole-allowed transition out of the ground state.
struct Transition {
    double omega_n0;   // excitation frequency [rad/s]
    double dipole_sq;  // |D_n0|^2 [(C m)^2]
    double gamma_n;    // natural linewidth [1/s]
};

struct TransitionTable {
    std::vector<Transition> transitions;
    double mass;
    double charge;

    void validate() const;  // non-empty, distinct frequencies, positive entries

    /// Parses {"mass":..., "charge":..., "transitions":[{"omega":...,
    /// "dipole_sq":..., "gamma":...}, ...]} (SI units).
    static TransitionTable from_json_text(const std::string& text);
    std::string to_json_text() const;
};

/// Dipole-dipole response function
///   chi_DD(t) = (2/i hbar) sum_n |D_n0|^2 sin(omega_n0 t) e^{-Gamma_n |t|/2};
/// purely imaginary and odd in t.
std::complex<double> chi_dd(const TransitionTable& table, double t,
                            const xsec::PhysicalConstants& consts);

/// Dynamical dipole susceptibility at omega + i0: a sum of Lorentzian terms
/// 2 omega_n0 |D_n0|^2 / hbar / (Omega_n^2 - omega^2 - i Gamma_n omega) with
/// Omega_n^2 = omega_n0^2 + (Gamma_n/2)^2.
std::complex<double> chi_dd_susceptibility(const TransitionTable& table, double omega,
                                           const xsec::PhysicalConstants& consts);

/// Generalized form off the real axis (s = sign Im[z]); throws for real z.
std::complex<double> chi_dd_susceptibility(const TransitionTable& table,
                                           std::complex<double> z,
                                           const xsec::PhysicalConstants& consts);

struct Level {
    double energy;              // eigenvalue [J]
    double position_matrix_sq;  // |<level| r |n>|^2 against the target state [m^2]
};

/// Spontaneous-emission rate of level n (electric dipole):
///   Gamma_n = (4 alpha / 3 c^2) sum_{e_j < e_n} omega_nj^3 |<j|r|n>|^2.
/// Levels must be sorted by energy; the ground state returns 0.
double natural_linewidth(const std::vector<Level>& levels, std::size_t n,
                         const xsec::PhysicalConstants& consts);

/// Charged harmonic oscillator as a minimal atom model.
struct QuantumOscillatorModel {
    double omega_10;            // level spacing [rad/s]
    double mass;
    double oscillator_length;   // x0 = sqrt(hbar/(2 m omega_10))

    static QuantumOscillatorModel make(double omega_10, double mass,
                                       const xsec::PhysicalConstants& consts);
};

/// The oscillator's transition table: exactly one entry with |D_10|^2 = e^2 x0^2
/// and Gamma_1 from natural_linewidth (= tau omega_10^2).
TransitionTable oscillator_table(const QuantumOscillatorModel& model,
                                 const xsec::PhysicalConstants& consts);

/// The classical oscillator equivalent to the quantum model:
/// Omega~ <-> omega_10 and Gamma <-> tau omega_10^2.
oscillator::OscillatorParams classical_identification(const QuantumOscillatorModel& model,
                                                      const xsec::PhysicalConstants& consts);

/// Average absorbed power P = (1/2) omega Im[chi_DD~](omega) E0^2.
double absorbed_power_qm(const TransitionTable& table, double E0, double omega,
                         const xsec::PhysicalConstants& consts);

/// Averaged ac-Stark shift Delta_eps = -(1/4) chi'_DD(omega) E0^2; equals the
/// optical dipole potential at the local field strength.
double ac_stark_shift(double chi_re, double E0);

/// The two perturbative contributions: -(1/2) chi' E0^2 from the induced
/// dipole energy and +(1/4) chi' E0^2 from the second-order energy shift.
struct StarkTerms {
    double first_order;
    double second_order;
    double total;
};

StarkTerms ac_stark_terms(double chi_re, double E0);

} // namespace oscilkit::quantum
