#ifndef VORTEXAB_SPECFUN_HPP
#define VORTEXAB_SPECFUN_HPP

#include <complex>

#include "vortexab/errors.hpp"

// Cylinder functions J, Y, H1 = J + iY, I, K of complex order and complex
// argument, plus the complex gamma function.  This is the numerical bedrock of
// the scattering solver: orders are arbitrary complex numbers (fractional and
// purely imaginary orders both occur), so none of the usual real-order
// libraries apply.
//
// Supported envelope: |order| <= 150, |argument| <= 250.  Accuracy targets:
// 1e-10 relative for real argument and real or purely imaginary order,
// 1e-8 relative for general complex inputs.  When an internal iteration
// cannot certify its target it throws ConvergenceError rather than return a
// silently inaccurate value.  Results whose magnitude overflows double
// precision throw EnvelopeError; magnitudes below the double range underflow
// to exact zero (ratios never go through such values, see cyl_ratio).
//
// Algorithms: Lanczos approximation for gamma; ascending power series with a
// running cancellation estimate; Miller backward recurrence normalized by the
// Neumann identity sum_k (mu+2k) Gamma(mu+k)/k! J_{mu+2k}(z) = (z/2)^mu
// (A&S 9.1.87); Temme's series for Y and K near the origin; Steed-type
// continued fractions (CF2) for H1'/H1 and for K at larger arguments; Hankel
// asymptotic expansions for |z| >= 30 + |order|^2/2.  Left half-plane and
// lower half-plane inputs are reached through the standard analytic
// continuation and reflection formulas.

namespace vortexab::specfun {

using Cx = std::complex<double>;

enum class Kind { J, Y, H1, I, K };

struct EvalRequest {
    Kind kind = Kind::J;
    Cx order{0.0, 0.0};
    Cx argument{0.0, 0.0};
    // scaled=true removes the dominant exponential behavior:
    //   I -> e^{-Re z} I,  K -> e^{+z} K,  H1 -> e^{-iz} H1,  J,Y -> e^{-|Im z|} J,Y.
    bool scaled = false;
};

// Gamma(z) for complex z.  Throws PoleError at non-positive integers and
// EnvelopeError if the magnitude overflows.
Cx gamma_cx(Cx z);

// Principal-branch log Gamma(z); continuous enough for exp(log_gamma_cx(a) -
// log_gamma_cx(b)) style prefactors (2*pi jumps cancel under exp).
Cx log_gamma_cx(Cx z);

// Evaluate one cylinder function.
Cx cyl_eval(const EvalRequest& req);
Cx cyl_eval(Kind kind, Cx order, Cx argument, bool scaled = false);

// d/dz of the requested function, through the three-term derivative
// recurrences: Z' = (Z_{v-1} - Z_{v+1})/2 for J, Y, H1;
// I' = (I_{v-1} + I_{v+1})/2; K' = -(K_{v-1} + K_{v+1})/2.
Cx cyl_derivative(Kind kind, Cx order, Cx argument);

// Z_{order+1}(argument) / Z_order(argument), formed inside the recurrence
// engines so it stays finite even where the individual values overflow or
// underflow double range.  Throws ZeroDenominator if Z_order(argument) = 0 to
// working precision.
Cx cyl_ratio(Kind kind, Cx order, Cx argument);

// Fast path used by the field synthesizer: J and H1 of the same (possibly
// complex) order at real x > 0 from a single recurrence pass.
struct JandH1 { Cx j, h1; };
JandH1 eval_j_h1(Cx order, double x);

} // namespace vortexab::specfun

#endif
