#include "vortexab/medium.hpp"

#include "vortexab/errors.hpp"

#include <cmath>
#include <sstream>

namespace vortexab::medium {

namespace {
const double kTwoPi = 6.28318530717958647693;
}

void FluidProperties::validate() const {
    std::ostringstream os;
    if (!(rho > 0.0)) {
        os << "density must be positive, got " << rho;
        throw ConstraintError(os.str());
    }
    if (!(tau > 0.0)) {
        os << "surface tension must be positive, got " << tau;
        throw ConstraintError(os.str());
    }
    if (!(mu > 0.0)) {
        os << "viscosity must be positive, got " << mu;
        throw ConstraintError(os.str());
    }
    if (!(g > 0.0)) {
        os << "gravity must be positive, got " << g;
        throw ConstraintError(os.str());
    }
}

void LayerGeometry::validate() const {
    if (!(h > 0.0)) {
        std::ostringstream os;
        os << "depth must be positive, got " << h;
        throw ConstraintError(os.str());
    }
}

double capillary_length(double tau, double rho, double g) {
    if (!(rho > 0.0) || !(g > 0.0) || !(tau >= 0.0))
        throw ConstraintError("capillary length needs rho > 0, g > 0, tau >= 0");
    return std::sqrt(tau / (rho * g));
}

double capillary_length(const FluidProperties& fluid) {
    fluid.validate();
    return capillary_length(fluid.tau, fluid.rho, fluid.g);
}

double delta_parameter(double k, double h, double l_c) {
    if (!(k > 0.0)) throw ConstraintError("wavenumber must be positive");
    if (!(h > 0.0)) throw ConstraintError("depth must be positive");
    if (!(l_c >= 0.0)) throw ConstraintError("capillary length must be non-negative");
    double coeff = l_c * l_c - h * h / 3.0;
    if (std::fabs(coeff) < 1e-14 * h * h) {
        std::ostringstream os;
        os << "depth " << h << " sits at the crossover sqrt(3) * " << l_c
           << " where the quartic dispersion term vanishes";
        throw DegenerateDispersion(os.str());
    }
    return 1.0 / (k * k * coeff);
}

Velocities velocities(double k, double h, double delta, double g) {
    if (!(k > 0.0) || !(h > 0.0) || !(g > 0.0))
        throw ConstraintError("velocities need k, h, g positive");
    if (delta >= -1.0 && delta <= 0.0) {
        std::ostringstream os;
        os << "delta = " << delta << " lies in [-1, 0]: squared phase velocity "
           << "is non-positive, no propagating wave";
        throw NonPropagating(os.str());
    }
    double gh = g * h;
    Velocities v;
    v.c_phi = std::sqrt(gh * (1.0 + delta) / delta);
    v.c_g = (gh / v.c_phi) * (2.0 + delta) / delta;
    v.group_velocity_negative = (delta > -2.0 && delta < -1.0);
    return v;
}

double dispersion(double k, const FluidProperties& fluid, const LayerGeometry& layer,
                  DispersionModel model) {
    if (!(k > 0.0)) throw ConstraintError("wavenumber must be positive");
    fluid.validate();
    layer.validate();
    double h = layer.h;
    if (model == DispersionModel::Full) {
        double s = (fluid.g * k + fluid.tau * k * k * k / fluid.rho) * std::tanh(k * h);
        return std::sqrt(s);
    }
    double s = fluid.g * h * k * k +
               (fluid.tau * h / fluid.rho - fluid.g * h * h * h / 3.0) * k * k * k * k;
    if (!(s > 0.0)) {
        std::ostringstream os;
        os << "cubic dispersion model gives nu^2 = " << s << " at k = " << k
           << "; the wave is evanescent there";
        throw EvanescentError(os.str());
    }
    return std::sqrt(s);
}

WaveParameters wave_from_k(double k, const FluidProperties& fluid, const LayerGeometry& layer,
                           DispersionModel model) {
    WaveParameters w;
    w.k = k;
    w.lambda = kTwoPi / k;
    w.nu = dispersion(k, fluid, layer, model);
    return w;
}

AttenuationReport attenuation(double lambda, const FluidProperties& fluid, double c_phi,
                              double vortex_radius) {
    if (!(lambda > 0.0) || !(c_phi > 0.0))
        throw ConstraintError("attenuation needs lambda > 0 and c_phi > 0");
    fluid.validate();
    AttenuationReport r;
    double p2 = kTwoPi * kTwoPi;
    double c2 = c_phi * c_phi;
    r.t_gw = fluid.rho * fluid.g * fluid.g * std::pow(lambda, 4) / (2.0 * p2 * p2 * fluid.mu * c2 * c2);
    r.t_cw = fluid.rho * lambda * lambda / (2.0 * p2 * fluid.mu);
    r.period = lambda / c_phi;
    r.travel_time = (vortex_radius > 0.0) ? r.period * vortex_radius / lambda : 0.0;
    return r;
}

ValidityReport validity_report(const DimensionlessGroups& groups, const AttenuationReport& att) {
    ValidityReport rep;
    auto warn = [&rep](const std::string& s) { rep.warnings.push_back(s); };
    std::ostringstream os;

    if (groups.mach > 0.2) {
        os.str("");
        os << "M = " << groups.mach << " exceeds 0.2: the weak-flow linearization is strained";
        warn(os.str());
    }
    if (groups.beta < 5.0) {
        os.str("");
        os << "beta = " << groups.beta
           << " is below 5: short-wavelength (ray) behaviour is only marginally reached";
        warn(os.str());
    }
    if (groups.kh > 0.8) {
        os.str("");
        os << "kh = " << groups.kh
           << " exceeds 0.8: the long-wave truncation error grows past a few percent";
        warn(os.str());
    }
    if (std::fabs(groups.delta) < 3.0) {
        os.str("");
        os << "|delta| = " << std::fabs(groups.delta)
           << " is below 3: mixed gravity-capillary regime, sign-specific far-field "
              "approximations weaken";
        warn(os.str());
    }
    double t_sum = att.t_gw + att.t_cw;
    if (att.travel_time > t_sum) {
        os.str("");
        os << "transit time " << att.travel_time << " s exceeds the attenuation time "
           << t_sum << " s: the wave decays before crossing the vortex";
        warn(os.str());
    }
    rep.dissipation_negligible = (att.period < t_sum) && (att.travel_time <= t_sum);

    // Background depression estimate U0^2/g * 1/(1 + (l_c/a)^2), reconstructed
    // from the dimensionless groups plus the dimensional content of att.
    if (att.period > 0.0 && groups.beta > 0.0 && groups.c_phi > 0.0 && groups.kh > 0.0) {
        double denom = (1.0 + groups.delta) / groups.delta;
        if (denom > 0.0) {
            double lambda = groups.c_phi * att.period;
            double k = kTwoPi / lambda;
            double h = groups.kh / k;
            double g = groups.c_phi * groups.c_phi / (denom * h);
            double u0 = groups.mach * groups.c_phi;
            double lc_over_a = groups.kl_c / groups.beta;
            rep.eta0_estimate = u0 * u0 / g / (1.0 + lc_over_a * lc_over_a);
        }
    }
    return rep;
}

} // namespace vortexab::medium
