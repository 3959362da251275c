#ifndef VORTEXAB_MEDIUM_HPP
#define VORTEXAB_MEDIUM_HPP

// Physical description of a thin fluid layer carrying capillary-gravity
// waves: dispersion relations, the classification parameter delta comparing
// depth with the capillary length, phase and group velocities, viscous
// attenuation-time estimates, and validity warnings for the modelling
// assumptions.  All quantities are CGS (cm, g, s).

#include <string>
#include <vector>

namespace vortexab::medium {

struct FluidProperties {
    double rho = 1.0;    // density (g/cm^3)
    double tau = 74.0;   // surface tension (dyn/cm)
    double mu = 0.01;    // dynamic viscosity (g/(cm*s))
    double g = 981.0;    // gravity (cm/s^2)

    void validate() const;   // throws ConstraintError when any field is out of range
};

// Clean water at room temperature, the reference medium for all presets.
inline FluidProperties water() { return FluidProperties{}; }

struct LayerGeometry {
    double h = 0.1;   // equilibrium depth (cm)

    void validate() const;
};

// l_c = sqrt(tau / (rho g)).  The raw overload accepts tau = 0 (pure gravity
// waves); the struct overload enforces the full property invariants.
double capillary_length(double tau, double rho, double g);
double capillary_length(const FluidProperties& fluid);

// delta = 1 / (k^2 (l_c^2 - h^2/3)).  Positive for h < sqrt(3) l_c (capillary
// side), negative beyond; throws DegenerateDispersion at the crossover depth
// where the coefficient vanishes.
double delta_parameter(double k, double h, double l_c);

struct Velocities {
    double c_phi = 0.0;   // phase velocity (cm/s)
    double c_g = 0.0;     // group velocity (cm/s)
    // delta in (-2, -1): the formulas stay real but energy moves against the
    // phase; surfaced as a flag, not an error.
    bool group_velocity_negative = false;
};

// c_phi^2 = g h (1 + delta) / delta and c_g = (g h / c_phi)(2 + delta)/delta.
// One algebraic form covers both signs of delta.  Throws NonPropagating for
// delta in [-1, 0).
Velocities velocities(double k, double h, double delta, double g);

enum class DispersionModel {
    Full,    // nu^2 = (g k + tau k^3 / rho) tanh(k h)
    Cubic,   // nu^2 = g h k^2 + (tau h / rho - g h^3 / 3) k^4
};

// Angular frequency nu for wavenumber k.  The cubic model throws
// EvanescentError when its right-hand side is non-positive.
double dispersion(double k, const FluidProperties& fluid, const LayerGeometry& layer,
                  DispersionModel model);

struct WaveParameters {
    double k = 0.0;        // wavenumber (1/cm)
    double lambda = 0.0;   // wavelength (cm), 2 pi / k
    double nu = 0.0;       // angular frequency (1/s)
};

WaveParameters wave_from_k(double k, const FluidProperties& fluid, const LayerGeometry& layer,
                           DispersionModel model);

struct AttenuationReport {
    double t_gw = 0.0;         // gravity-wave attenuation time (s)
    double t_cw = 0.0;         // capillary-wave attenuation time (s)
    double period = 0.0;       // lambda / c_phi (s)
    double travel_time = 0.0;  // period * (a / lambda); 0 when no radius given
};

// Viscous attenuation estimates for wavelength lambda.  When a vortex radius
// is supplied, also reports the transit time across it.
AttenuationReport attenuation(double lambda, const FluidProperties& fluid, double c_phi,
                              double vortex_radius = 0.0);

// Everything the scattering problem depends on, nondimensionalized.
struct DimensionlessGroups {
    double alpha = 0.0;   // phase-dislocation strength
    double beta = 0.0;    // k * a
    double delta = 0.0;   // dispersion classification parameter
    double mach = 0.0;    // U0 / c_phi
    double kh = 0.0;      // k * h
    double kl_c = 0.0;    // k * l_c
    double c_phi = 0.0;   // cm/s
    double c_g = 0.0;     // cm/s
};

struct ValidityReport {
    std::vector<std::string> warnings;
    bool dissipation_negligible = false;
    double eta0_estimate = 0.0;   // typical background surface displacement (cm)
};

// Checks the smallness assumptions behind the scattering model and estimates
// the background surface depression set up by the vortex.
ValidityReport validity_report(const DimensionlessGroups& groups, const AttenuationReport& att);

} // namespace vortexab::medium

#endif
