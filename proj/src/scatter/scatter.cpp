#include "vortexab/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vortexab/specfun.hpp"

namespace vortexab::scatter {
namespace {

constexpr double kPi = std::numbers::pi;

using specfun::Kind;

// Square root of a real radicand as a complex number: the real non-negative
// root when possible, otherwise +i*sqrt(|r|).  Building from a double avoids
// the signed-zero pitfalls of std::sqrt(std::complex) on the branch cut.
Cx sqrt_real(double r) {
    if (r >= 0.0) return Cx(std::sqrt(r), 0.0);
    return Cx(0.0, std::sqrt(-r));
}

// Principal square root with the imaginary axis snapped: radicands produced by
// real arithmetic land exactly on the axes and should stay there.
Cx sqrt_cx(Cx z) {
    if (z.imag() == 0.0) return sqrt_real(z.real());
    return std::sqrt(z);
}

// Component p of each matching column is (a d/dr)^p of the radial profile
// C_m(w r/a)/C_m(w) at r = a, rewritten through the second-order equation the
// profile satisfies so that only the single ratio R = C_{m+1}(w)/C_m(w) is
// needed.  "Ordinary" covers J, Y, H1 (oscillatory equation); the modified
// variants cover I and K (hyperbolic equation), which differ in the sign of
// the w^2 term and in the direction of the ladder recurrence.

std::array<Cx, 4> rows_ordinary(Cx m, Cx w, Cx R) {
    const Cx w2 = w * w;
    const Cx m2 = m * m;
    return {Cx(1.0),
            m - w * R,
            m * (m - 1.0) - w2 + w * R,
            (m - 1.0) * (m * (m - 2.0) - w2) + w * (w2 - (m2 + 2.0)) * R};
}

std::array<Cx, 4> rows_modified_i(Cx m, Cx w, Cx R) {
    const Cx w2 = w * w;
    const Cx m2 = m * m;
    return {Cx(1.0),
            m + w * R,
            m * (m - 1.0) + w2 - w * R,
            (m - 1.0) * (m * (m - 2.0) + w2) + w * (w2 + m2 + 2.0) * R};
}

std::array<Cx, 4> rows_modified_k(Cx m, Cx w, Cx R) {
    const Cx w2 = w * w;
    const Cx m2 = m * m;
    return {Cx(1.0),
            m - w * R,
            m * (m - 1.0) + w2 + w * R,
            (m - 1.0) * (m * (m - 2.0) + w2) - w * (m2 + 2.0 + w2) * R};
}

std::array<Cx, 4> negated(std::array<Cx, 4> v) {
    for (Cx& c : v) c = -c;
    return v;
}

Cx ratio(Kind kind, Cx order, Cx argument) {
    return specfun::cyl_ratio(kind, order, argument);
}

// 4x4 complex LU factorization with partial pivoting.
struct Lu4 {
    Cx a[4][4];
    int piv[4];
    double det_sign;
};

Lu4 lu_factor(const Cx m[4][4]) {
    Lu4 lu;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) lu.a[r][c] = m[r][c];
    lu.det_sign = 1.0;
    for (int j = 0; j < 4; ++j) {
        int p = j;
        double best = std::abs(lu.a[j][j]);
        for (int r = j + 1; r < 4; ++r) {
            const double mag = std::abs(lu.a[r][j]);
            if (mag > best) {
                best = mag;
                p = r;
            }
        }
        if (best == 0.0)
            throw SingularSystem("matching system has a zero pivot column at elimination step " +
                                 std::to_string(j));
        lu.piv[j] = p;
        if (p != j) {
            for (int c = 0; c < 4; ++c) std::swap(lu.a[j][c], lu.a[p][c]);
            lu.det_sign = -lu.det_sign;
        }
        for (int r = j + 1; r < 4; ++r) {
            const Cx f = lu.a[r][j] / lu.a[j][j];
            lu.a[r][j] = f;
            for (int c = j + 1; c < 4; ++c) lu.a[r][c] -= f * lu.a[j][c];
        }
    }
    return lu;
}

void lu_solve(const Lu4& lu, const Cx b[4], Cx x[4]) {
    for (int r = 0; r < 4; ++r) x[r] = b[r];
    // The factor stores row swaps applied retroactively to the multiplier
    // columns, so the right-hand side must be fully permuted before any
    // elimination step touches it.
    for (int j = 0; j < 4; ++j)
        if (lu.piv[j] != j) std::swap(x[j], x[lu.piv[j]]);
    for (int j = 0; j < 4; ++j)
        for (int r = j + 1; r < 4; ++r) x[r] -= lu.a[r][j] * x[j];
    for (int r = 3; r >= 0; --r) {
        for (int c = r + 1; c < 4; ++c) x[r] -= lu.a[r][c] * x[c];
        x[r] /= lu.a[r][r];
    }
}

double norm_inf(const Cx m[4][4]) {
    double best = 0.0;
    for (int r = 0; r < 4; ++r) {
        double s = 0.0;
        for (int c = 0; c < 4; ++c) s += std::abs(m[r][c]);
        best = std::max(best, s);
    }
    return best;
}

} // namespace

VortexFlow VortexFlow::from_omega(double omega, double a) {
    VortexFlow v;
    v.omega = omega;
    v.a = a;
    v.gamma = kPi * omega * a * a;
    v.validate();
    return v;
}

VortexFlow VortexFlow::from_gamma(double gamma, double a) {
    VortexFlow v;
    v.gamma = gamma;
    v.a = a;
    v.omega = (a > 0.0) ? gamma / (kPi * a * a) : 0.0;
    v.validate();
    return v;
}

void VortexFlow::validate() const {
    if (!(a > 0.0))
        throw ConstraintError("vortex core radius must be positive, got " + std::to_string(a));
    const double expected = kPi * omega * a * a;
    const double scale = std::max(std::abs(gamma), std::abs(expected));
    if (std::abs(gamma - expected) > 1e-12 * std::max(scale, 1e-300))
        throw ConstraintError("circulation is inconsistent with vorticity and radius: gamma = " +
                              std::to_string(gamma) + " but pi*omega*a^2 = " +
                              std::to_string(expected));
}

medium::DimensionlessGroups dimensionless_setup(const medium::FluidProperties& fluid,
                                                const medium::LayerGeometry& layer,
                                                const medium::WaveParameters& wave,
                                                const VortexFlow& vortex) {
    fluid.validate();
    layer.validate();
    vortex.validate();
    if (!(wave.k > 0.0))
        throw ConstraintError("wavenumber must be positive, got " + std::to_string(wave.k));

    const double l_c = medium::capillary_length(fluid);
    const double delta = medium::delta_parameter(wave.k, layer.h, l_c);
    const medium::Velocities vel = medium::velocities(wave.k, layer.h, delta, fluid.g);
    // The frequency entering alpha follows the same truncated dispersion as
    // the velocities, which keeps alpha = beta*M*c_phi/c_g an exact identity.
    const double nu = vel.c_phi * wave.k;

    medium::DimensionlessGroups g;
    g.alpha = vortex.gamma * nu / (2.0 * kPi * vel.c_phi * vel.c_g);
    g.beta = wave.k * vortex.a;
    g.delta = delta;
    g.mach = 0.5 * vortex.omega * vortex.a / vel.c_phi;
    g.kh = wave.k * layer.h;
    g.kl_c = wave.k * l_c;
    g.c_phi = vel.c_phi;
    g.c_g = vel.c_g;
    return g;
}

ModalWavenumbers inner_wavenumbers(int n, const medium::DimensionlessGroups& groups) {
    const double alpha = groups.alpha;
    const double beta = groups.beta;
    const double delta = groups.delta;
    const double beta2 = beta * beta;

    // Frequency seen in the co-rotating core, relative to the lab frequency.
    const double S = 1.0 - n * (alpha / beta2) * (2.0 + delta) / (1.0 + delta);
    // Shift of the inner radicand away from 1; for delta < -1 the radicand
    // itself can go negative, at which point the two roots become a conjugate
    // complex pair.
    const double shift = 4.0 * S * S * (1.0 + delta) / (delta * delta);
    const double rad = 1.0 + shift;

    ModalWavenumbers out;
    out.n = n;
    if (delta > 0.0) {
        const double root = std::sqrt(rad);   // rad >= 1 here
        // root - 1 rewritten as shift/(1 + root): exact in the shallow-layer
        // limit delta -> infinity where root -> 1.
        out.kn_a = Cx(beta * std::sqrt(0.5 * delta * shift / (1.0 + root)), 0.0);
        out.kappan_a = Cx(beta * std::sqrt(0.5 * delta * (root + 1.0)), 0.0);
    } else {
        const double half = 0.5 * beta2 * std::abs(delta);
        if (rad >= 0.0) {
            const double root = std::sqrt(rad);
            const double one_minus_root = -shift / (1.0 + root);   // cancellation-free 1 - root
            out.kn_a = sqrt_real(half * one_minus_root);
            out.kappan_a = Cx(std::sqrt(half * (1.0 + root)), 0.0);
        } else {
            const Cx root(0.0, std::sqrt(-rad));
            out.kn_a = sqrt_cx(half * (Cx(1.0) - root));
            out.kappan_a = sqrt_cx(half * (Cx(1.0) + root));
        }
    }
    // At n = 0 the radicand collapses to ((delta+2)/delta)^2 and the
    // propagating root is exactly the incident wavenumber (for -2 < delta < -1
    // the roots trade places and this shortcut does not apply).
    if (n == 0 && (delta > 0.0 || delta <= -2.0)) out.kn_a = Cx(beta, 0.0);

    if (delta >= 0.0) {
        out.q_a = Cx(beta * std::sqrt(1.0 + delta), 0.0);
    } else {
        out.q_a = sqrt_real(beta2 * (-delta - 1.0));
    }
    return out;
}

ModalOrders outer_orders(int n, double alpha) {
    ModalOrders mo;
    mo.n = n;
    mo.m_plus = sqrt_real(n * (n + 2.0 * alpha));
    mo.m_minus = sqrt_real(n * (n - 2.0 * alpha));
    mo.m_old = std::abs(n + alpha);
    return mo;
}

ModalOrders outer_orders(int n, const medium::DimensionlessGroups& groups) {
    ModalOrders mo = outer_orders(n, groups.alpha);
    const double beta2 = groups.beta * groups.beta;
    mo.A = (groups.delta + 1.0) * beta2 * beta2;
    mo.B = 2.0 * n * groups.alpha * beta2 * (2.0 + groups.delta);
    return mo;
}

Cx outer_wavenumber(const medium::DimensionlessGroups& groups) {
    const double delta = groups.delta;
    const double beta = groups.beta;
    if (delta >= 0.0) return Cx(beta * std::sqrt(1.0 + delta), 0.0);
    if (delta >= -1.0)
        throw EvanescentOuter("no radiating outer branch for delta = " + std::to_string(delta) +
                              " (needs delta > 0 or delta < -1)");
    return Cx(beta * std::sqrt(-delta - 1.0), 0.0);
}

Cx incident_coefficient(int n, const medium::DimensionlessGroups& groups) {
    const ModalOrders mo = outer_orders(n, groups.alpha);
    // (-i)^m under the principal branch: exp(-i pi m / 2).
    const Cx pref = std::exp(Cx(0.0, -0.5 * kPi) * mo.m_plus);
    const Cx j = specfun::cyl_eval(Kind::J, mo.m_plus, Cx(groups.beta, 0.0));
    return pref * j;
}

BoundaryVectors boundary_vectors(int n, const medium::DimensionlessGroups& groups,
                                 const ModalWavenumbers& wavenumbers,
                                 const ModalOrders& orders) {
    const bool hyperbolic = groups.delta > 0.0;
    const Cx nn(static_cast<double>(n), 0.0);
    const Cx beta(groups.beta, 0.0);

    BoundaryVectors bv;
    bv.n = n;
    bv.v_a = rows_ordinary(nn, wavenumbers.kn_a, ratio(Kind::J, nn, wavenumbers.kn_a));
    bv.v_b = hyperbolic
                 ? rows_modified_i(nn, wavenumbers.kappan_a,
                                   ratio(Kind::I, nn, wavenumbers.kappan_a))
                 : rows_ordinary(nn, wavenumbers.kappan_a,
                                 ratio(Kind::J, nn, wavenumbers.kappan_a));
    bv.v_d = negated(rows_ordinary(orders.m_plus, beta, ratio(Kind::H1, orders.m_plus, beta)));
    bv.v_e = hyperbolic
                 ? negated(rows_modified_k(orders.m_minus, wavenumbers.q_a,
                                           ratio(Kind::K, orders.m_minus, wavenumbers.q_a)))
                 : negated(rows_ordinary(orders.m_minus, wavenumbers.q_a,
                                         ratio(Kind::H1, orders.m_minus, wavenumbers.q_a)));

    const Cx cn = incident_coefficient(n, groups);
    const std::array<Cx, 4> rc = rows_ordinary(orders.m_plus, beta, ratio(Kind::J, orders.m_plus, beta));
    for (int p = 0; p < 4; ++p) bv.v_c[p] = cn * rc[p];
    return bv;
}

ModalCoefficients solve_modal_system(const BoundaryVectors& vectors) {
    Cx m[4][4];
    Cx rhs[4];
    for (int r = 0; r < 4; ++r) {
        m[r][0] = vectors.v_a[r];
        m[r][1] = vectors.v_b[r];
        m[r][2] = vectors.v_d[r];
        m[r][3] = vectors.v_e[r];
        rhs[r] = vectors.v_c[r];
    }

    double hadamard = 1.0;
    for (int r = 0; r < 4; ++r) {
        double s = 0.0;
        for (int c = 0; c < 4; ++c) s += std::norm(m[r][c]);
        hadamard *= std::sqrt(s);
    }

    const Lu4 lu = lu_factor(m);
    Cx det(lu.det_sign, 0.0);
    for (int j = 0; j < 4; ++j) det *= lu.a[j][j];
    if (std::abs(det) < 1e-13 * hadamard)
        throw SingularSystem("matching system determinant " + std::to_string(std::abs(det)) +
                             " is below 1e-13 of its Hadamard bound " + std::to_string(hadamard));

    Cx x[4];
    lu_solve(lu, rhs, x);

    // Infinity-norm condition number through the explicit inverse (cheap at
    // this size and exact, unlike norm estimators).
    Cx inv[4][4];
    for (int c = 0; c < 4; ++c) {
        Cx e[4] = {Cx(0.0), Cx(0.0), Cx(0.0), Cx(0.0)};
        e[c] = Cx(1.0);
        Cx col[4];
        lu_solve(lu, e, col);
        for (int r = 0; r < 4; ++r) inv[r][c] = col[r];
    }

    ModalCoefficients mc;
    mc.n = vectors.n;
    mc.a_n = x[0];
    mc.b_n = x[1];
    mc.d_n = x[2];
    mc.e_n = x[3];
    mc.c_n = vectors.v_c[0];
    mc.condition_number = norm_inf(m) * norm_inf(inv);

    for (Cx* coef : {&mc.a_n, &mc.b_n, &mc.d_n, &mc.e_n}) {
        const double mag = std::abs(*coef);
        if (mag != 0.0 && mag < 1e-300) {
            *coef = Cx(0.0, 0.0);
            mc.underflow = true;
        }
    }
    return mc;
}

ModalCoefficients mode_coefficients(int n, const medium::DimensionlessGroups& groups) {
    const ModalWavenumbers wn = inner_wavenumbers(n, groups);
    const ModalOrders mo = outer_orders(n, groups);
    const BoundaryVectors bv = boundary_vectors(n, groups, wn, mo);
    return solve_modal_system(bv);
}

FactorizationReport verify_factorization(int n, const medium::DimensionlessGroups& groups,
                                         const ModalWavenumbers& wavenumbers,
                                         const ModalOrders& orders) {
    const double beta2 = groups.beta * groups.beta;
    const double delta = groups.delta;
    const double n2 = static_cast<double>(n) * n;
    // Squared orders are real whatever the branch of m_plus/m_minus.
    const double m2p = (orders.m_plus * orders.m_plus).real();
    const double m2m = (orders.m_minus * orders.m_minus).real();
    const double qa2 = (wavenumbers.q_a * wavenumbers.q_a).real();

    // Outer factorization roots: one root always carries the incident
    // wavenumber and the order-raised branch; for delta < 0 the extra root is
    // the radiating one and the effective orders trade places.
    double qp2, qm2, m2_with_qp, m2_with_qm;
    if (delta > 0.0) {
        qp2 = beta2;
        qm2 = -qa2;
        m2_with_qp = m2p;
        m2_with_qm = m2m;
    } else {
        qp2 = qa2;
        qm2 = beta2;
        m2_with_qp = m2m;
        m2_with_qm = m2p;
    }

    const double a_const = (delta + 1.0) * beta2 * beta2;
    const double b_const = 2.0 * n * groups.alpha * beta2 * (2.0 + delta);

    auto rel = [](double lhs, double rhs, double floor_scale) {
        const double scale = std::max({std::abs(lhs), std::abs(rhs), floor_scale});
        return std::abs(lhs - rhs) / scale;
    };

    FactorizationReport rep;
    rep.sum_residual = rel(qp2 + qm2, -delta * beta2, beta2);
    rep.product_residual = rel(qp2 * qm2, -a_const, beta2 * beta2);
    rep.coupling_residual =
        rel(m2_with_qp * qm2 + m2_with_qm * qp2, -delta * beta2 * n2 - b_const, beta2);
    rep.order_residual = rel(m2p + m2m, 2.0 * n2, 1.0);
    // The two identities the factorization cannot satisfy: the effective order
    // on the extra branch drifts off n^2 by 2|n·alpha|, and the quartic-order
    // term inherits the same mismatch.  Both are O(1/beta^2) against the
    // leading terms, which is the error budget of the outer solution.
    rep.drift_violation = std::abs(m2_with_qm - n2) / beta2;
    rep.curvature_violation =
        std::abs(m2p * m2m - 4.0 * m2_with_qm - (n2 * n2 - 4.0 * n2)) / beta2;
    return rep;
}

} // namespace vortexab::scatter
