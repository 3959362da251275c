#include "detail.hpp"

#include <cmath>

// Ascending power series for J_nu (and its modified sibling I_nu), with a
// running max-term tracker so callers can tell whether cancellation ate the
// answer.  For I the series terms are all "aligned" when z is positive real;
// for J the alternating signs make the series useless once |z| outruns the
// order, which is exactly what the estimate detects.

namespace vortexab::specfun::detail {

Scaled j_series_one(Cx nu, Cx z, bool modified, double* rel_err) {
    // (z/2)^nu / Gamma(nu+1) * sum_k q^k / (k! (nu+1)_k),  q = -+ z^2/4
    Cx lpref = nu * std::log(0.5 * z) - log_gamma_cx(nu + 1.0);
    Scaled pref = Scaled::expc(lpref);
    Cx q = 0.25 * z * z;
    if (!modified) q = -q;
    Cx t(1.0, 0.0), s(1.0, 0.0);
    double maxt = 1.0;
    for (int k = 1; k < 4000; ++k) {
        t *= q / (static_cast<double>(k) * (nu + static_cast<double>(k)));
        s += t;
        double at = std::abs(t);
        if (at > maxt) maxt = at;
        if (at <= std::abs(s) * 1e-17 && k > 3) break;
    }
    double mag = std::max(std::abs(s), 1e-300);
    *rel_err = 2.0 * kEps * (maxt / mag) + kEps * (1.0 + std::abs(lpref));
    return pref.times(s);
}

Scaled sinpi_scaled(Cx v) {
    double n = std::round(v.real());
    Cx w(v.real() - n, v.imag());
    double sgn = (std::fmod(std::fabs(n), 2.0) < 0.5) ? 1.0 : -1.0;
    Scaled s;
    if (std::fabs(v.imag()) < 25.0) {
        s = Scaled::of(std::sin(kPi * w));
    } else {
        // sin(pi w) = (e^{i pi w} - e^{-i pi w}) / (2i)
        Cx ip = Cx(0.0, kPi) * w;
        s = Scaled::sub(Scaled::expc(ip), Scaled::expc(-ip)).times(Cx(0.0, -0.5));
    }
    return s.times(sgn);
}

Scaled cospi_scaled(Cx v) {
    double n = std::round(v.real());
    Cx w(v.real() - n, v.imag());
    double sgn = (std::fmod(std::fabs(n), 2.0) < 0.5) ? 1.0 : -1.0;
    Scaled s;
    if (std::fabs(v.imag()) < 25.0) {
        s = Scaled::of(std::cos(kPi * w));
    } else {
        Cx ip = Cx(0.0, kPi) * w;
        s = Scaled::add(Scaled::expc(ip), Scaled::expc(-ip)).times(0.5);
    }
    return s.times(sgn);
}

} // namespace vortexab::specfun::detail
