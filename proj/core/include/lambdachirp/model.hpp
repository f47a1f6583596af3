#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace lambdachirp {

using cdouble = std::complex<double>;

// Units follow the lab convention used throughout this project: time in ns,
// angular frequencies in rad/ns, chirp rate beta in rad/ns^3.

// Gaussian pulse with a quadratically chirped carrier frequency.
// The coupling envelope is F(t) = sqrt(2)*wp*exp(-t^2/(2 tau_p^2)) and the
// rotating-frame detuning is eps(t) = e0p + chirp_factor*beta*t^2.
struct PulseParams {
    double wp = 0.0;           // peak Rabi frequency of a single transition
    double tau_p = 1.0;        // half pulse duration
    double e0p = 0.0;          // detuning at pulse center
    double beta = 0.0;         // chirp rate (any sign; 0 disables branch tracking)
    double chirp_factor = 3.0; // k in eps(t) = e0p + k*beta*t^2

    void validate() const; // throws std::invalid_argument naming the bad field
};

struct SystemParams {
    double dipole_ratio = 1.0;      // r = d23/d12
    double omega_R = 0.0;           // two-photon (Raman) detuning
    std::optional<double> omega_13; // ground-state splitting, for the broadband check

    void validate() const;

    // True when the transform-limited bandwidth 1/tau_p exceeds the
    // ground-state splitting (trivially true when omega_13 is unset).
    bool broadband_ok(double tau_p) const;
};

enum class Formulation { Direct, PhaseRemoved };

struct SimConfig {
    double t_span_multiplier = 4.0; // integrate over [-m*tau_p, +m*tau_p]
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    int n_samples = 2000;
    std::array<cdouble, 3> initial_state{cdouble{1.0}, cdouble{0.0}, cdouble{0.0}};
    Formulation formulation = Formulation::PhaseRemoved;

    void validate() const;

    double t_begin(const PulseParams& p) const { return -t_span_multiplier * p.tau_p; }
    double t_end(const PulseParams& p) const { return t_span_multiplier * p.tau_p; }
};

// F(t): total coupling of the pulse to the bright transition, and its
// time derivative.
double rabi_coupling(double t, const PulseParams& p);
double rabi_coupling_dot(double t, const PulseParams& p);

// eps(t) = e0p + k*beta*t^2: the detuning entering the Hamiltonian diagonal.
double effective_detuning(double t, const PulseParams& p);
double effective_detuning_dot(double t, const PulseParams& p);

// e0p + beta*t^2: detuning of the instantaneous carrier frequency. Reported
// in trajectory output; the dynamics use effective_detuning.
double instantaneous_detuning(double t, const PulseParams& p);

// Integral of effective_detuning from 0 to t, in closed form.
double detuning_phase(double t, const PulseParams& p);

// Real roots of effective_detuning(t) = 0, ascending. Two roots when the
// parabola crosses zero, none when it does not, {0} for the tangency e0p = 0.
std::vector<double> resonance_crossings(const PulseParams& p);

} // namespace lambdachirp
