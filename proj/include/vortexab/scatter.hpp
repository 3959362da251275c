#ifndef VORTEXAB_SCATTER_HPP
#define VORTEXAB_SCATTER_HPP

#include <array>
#include <complex>

#include "vortexab/errors.hpp"
#include "vortexab/medium.hpp"

// Per-mode machinery of the scattering solver.  The surface elevation is
// expanded in angular modes e^{i n theta}; for each integer mode n the radial
// profile obeys a fourth-order equation whose solutions are cylinder functions
// inside the vortex core (rigid rotation) and outside it (potential swirl).
// Continuity of the elevation and its first three radial derivatives at the
// core edge r = a yields a 4x4 complex linear system per mode; its solution
// gives the modal amplitudes used by the field synthesizer.

namespace vortexab::scatter {

using Cx = std::complex<double>;

// Rankine vortex: rigid rotation (vorticity omega) inside radius a, potential
// swirl with circulation gamma outside.  The three parameters are redundant:
// gamma = pi * omega * a^2 ties them together.
struct VortexFlow {
    double omega = 0.0;   // core vorticity (1/s)
    double a = 1.0;       // core radius (cm)
    double gamma = 0.0;   // circulation (cm^2/s)

    static VortexFlow from_omega(double omega, double a);
    static VortexFlow from_gamma(double gamma, double a);

    // Throws ConstraintError unless a > 0 and gamma = pi*omega*a^2 to 1e-12
    // relative.
    void validate() const;
};

// Dimensionless radial wavenumbers of mode n (all scaled by the core radius a).
// Inside the core the quartic radial operator factorizes into two second-order
// operators with wavenumbers k_n (propagating branch) and kappa_n (companion
// branch: hyperbolic for delta > 0, second oscillatory root for delta < 0).
// Outside, the scattered field carries the incident wavenumber k and one extra
// wavenumber q (evanescent for delta > 0, radiating for delta < 0).
struct ModalWavenumbers {
    int n = 0;
    Cx kn_a{0.0, 0.0};       // inner propagating root, k_n * a
    Cx kappan_a{0.0, 0.0};   // inner companion root, kappa_n * a
    Cx q_a{0.0, 0.0};        // outer scattered wavenumber, q * a
};

// Effective angular orders of the outer solutions, plus the two constant
// coefficients of the outer quartic operator (stored dimensionless, i.e.
// multiplied by the appropriate power of a).  The swirl shifts the order of
// the cylinder functions from n to m_plus = sqrt(n^2 + 2n*alpha) on the
// incident-wavenumber branch and m_minus = sqrt(n^2 - 2n*alpha) on the other
// branch; m_old = |n + alpha| is the order the non-dispersive (shallow-layer)
// theory would assign, kept for far-field comparisons.
struct ModalOrders {
    int n = 0;
    Cx m_plus{0.0, 0.0};
    Cx m_minus{0.0, 0.0};
    double m_old = 0.0;
    double A = 0.0;   // constant term of the outer quartic: (delta+1) * beta^4
    double B = 0.0;   // angular-coupling coefficient: 2*n*alpha*beta^2*(2+delta)
};

// Columns of the 4x4 matching system.  Component p (p = 0..3) of each column
// is (a d/dr)^p applied to the corresponding radial profile normalized to 1 at
// r = a; the outgoing columns v_d, v_e enter with a minus sign, so their first
// components are -1.  v_c is the right-hand side: the same rows for the
// order-shifted incident wave, carrying its full amplitude c_n.
struct BoundaryVectors {
    int n = 0;
    std::array<Cx, 4> v_a{};   // inner propagating column (+)
    std::array<Cx, 4> v_b{};   // inner companion column (+)
    std::array<Cx, 4> v_d{};   // outgoing column at the incident wavenumber (-)
    std::array<Cx, 4> v_e{};   // outgoing column at the extra wavenumber (-)
    std::array<Cx, 4> v_c{};   // incident right-hand side
};

// Amplitudes of the five wave components of mode n at the core edge, plus the
// infinity-norm condition number of the 4x4 system that produced them.  When
// a solved amplitude underflows below 1e-300 it is replaced by exact zero and
// `underflow` is set.
struct ModalCoefficients {
    int n = 0;
    Cx a_n{0.0, 0.0};   // inner propagating amplitude
    Cx b_n{0.0, 0.0};   // inner companion amplitude
    Cx c_n{0.0, 0.0};   // incident amplitude (known, not solved)
    Cx d_n{0.0, 0.0};   // outgoing amplitude at the incident wavenumber
    Cx e_n{0.0, 0.0};   // outgoing amplitude at the extra wavenumber
    double condition_number = 0.0;
    bool underflow = false;
};

// Residuals of the algebraic identities satisfied by the outer factorization,
// plus the magnitude of the two identities it is forced to violate (the
// violation is the price of factorizing the quartic; it scales as 1/beta^2
// relative to the leading terms, hence the normalization by beta^2).
struct FactorizationReport {
    double sum_residual = 0.0;        // q_+^2 + q_-^2 vs -delta*beta^2
    double product_residual = 0.0;    // q_+^2 * q_-^2 vs -A
    double coupling_residual = 0.0;   // cross terms vs -delta*beta^2*n^2 - B
    double order_residual = 0.0;      // m_+^2 + m_-^2 vs 2 n^2
    double drift_violation = 0.0;     // |m^2 - n^2| / beta^2 on the extra branch
    double curvature_violation = 0.0; // quartic-order mismatch / beta^2
};

// Collapse the physical description (fluid, layer, wave, vortex) into the
// dimensionless groups the mode solver works with.  The frequency entering
// alpha is re-derived from the same truncated dispersion that defines the
// velocities, so the identity alpha = beta * M * c_phi / c_g is exact.
// Errors: propagated from medium::velocities (NonPropagating, ...).
medium::DimensionlessGroups dimensionless_setup(const medium::FluidProperties& fluid,
                                                const medium::LayerGeometry& layer,
                                                const medium::WaveParameters& wave,
                                                const VortexFlow& vortex);

// Dimensionless inner wavenumbers of mode n.  n = 0 gives kn_a = beta exactly
// whenever that is algebraically forced (delta > 0 or delta <= -2).  For
// delta < 0 and large |n| the two roots form a conjugate complex pair; this is
// legal and handled downstream by evaluating cylinder functions of complex
// argument.
ModalWavenumbers inner_wavenumbers(int n, const medium::DimensionlessGroups& groups);

// Effective outer orders for mode n.  Branch rule: the principal square root,
// i.e. the real non-negative root when the radicand is >= 0 and +i*sqrt(|.|)
// otherwise.  This overload leaves the quartic constants A and B at zero
// (they need beta and delta); the groups overload fills everything.
ModalOrders outer_orders(int n, double alpha);
ModalOrders outer_orders(int n, const medium::DimensionlessGroups& groups);

// Outer scattered wavenumber q*a: beta*sqrt(1+delta) for delta > 0,
// beta*sqrt(|delta|-1) for delta < -1.  Throws EvanescentOuter for
// delta in [-1, 0): the extra outer branch then cannot radiate.
Cx outer_wavenumber(const medium::DimensionlessGroups& groups);

// Amplitude of mode n of the dislocated incident wave at the core edge:
// c_n = exp(-i*pi*m_plus/2) * J_{m_plus}(beta).  For imaginary m_plus the
// prefactor has magnitude exp(pi*|m_plus|/2) > 1; this growth is genuine and
// compensated by the decay of J at imaginary order.
Cx incident_coefficient(int n, const medium::DimensionlessGroups& groups);

// Assemble the five 4-component columns of the matching system from ratios of
// cylinder functions.  Function kinds: the inner companion column uses I for
// delta > 0 and J for delta < 0; the outer extra column uses K for delta > 0
// and H1 for delta < 0.  Errors: propagated from specfun.
BoundaryVectors boundary_vectors(int n, const medium::DimensionlessGroups& groups,
                                 const ModalWavenumbers& wavenumbers,
                                 const ModalOrders& orders);

// Solve the 4x4 complex system [v_a v_b v_d v_e] x = v_c by LU with partial
// pivoting; attach the infinity-norm condition number.  Throws SingularSystem
// when |det| < 1e-13 * (product of row 2-norms).
ModalCoefficients solve_modal_system(const BoundaryVectors& vectors);

// Convenience: chain inner_wavenumbers -> outer_orders -> boundary_vectors ->
// solve_modal_system for one mode.
ModalCoefficients mode_coefficients(int n, const medium::DimensionlessGroups& groups);

// Diagnostic: residuals of the identities the outer factorization satisfies
// and the magnitude of the ones it drops.
FactorizationReport verify_factorization(int n, const medium::DimensionlessGroups& groups,
                                         const ModalWavenumbers& wavenumbers,
                                         const ModalOrders& orders);

} // namespace vortexab::scatter

#endif
