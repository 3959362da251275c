#include "vortexab/field.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vortexab/errors.hpp"
#include "vortexab/kernels.hpp"
#include "vortexab/specfun.hpp"

namespace vortexab::field {

namespace {

using specfun::Kind;

constexpr double kPi = std::numbers::pi;

// An evanescent factor e^{-x} with x beyond this is below 1e-17 of its
// boundary value and the term is skipped without evaluation.  This also keeps
// the largest-|delta| runs away from the evaluator's argument envelope, where
// the skipped factors would otherwise have to be formed first.
constexpr double kEvanescentDrop = 40.0;

// Order envelope of the cylinder-function evaluator.
constexpr double kOrderEnvelope = 150.0;

// Incident-ladder terms whose magnitude bound falls below e^-46 ~ 1e-20 may
// be dropped when their order exceeds the evaluator envelope; larger terms
// beyond the envelope are evaluated anyway so the honest envelope error
// surfaces.
constexpr double kNegligibleLog = -46.0;

Cx quarter_turn(Cx order) {
    // (-i)^order under the principal branch.
    return std::exp(Cx(0.0, -0.5 * kPi) * order);
}

bool ladder_term_negligible(double order, double z) {
    if (order <= kOrderEnvelope) return false;
    // |J_nu(z)| <= (z/2)^nu / nu! ~ exp(nu (1 + log(z / (2 nu)))).
    return order * (1.0 + std::log(0.5 * z / order)) < kNegligibleLog;
}

void require_table(const ModeTable& table) {
    const int nc = table.truncation.n_core, na = table.truncation.n_ab;
    if (nc < 1 || na < nc || table.modes.size() != static_cast<size_t>(2 * nc + 1) ||
        table.orders.size() != static_cast<size_t>(2 * na + 1))
        throw ConstraintError("mode table is empty or inconsistent with its truncation");
}

// Per-mode complex amplitudes of the in-core series at radius r', stored as
// split real/imaginary rows for the synthesis kernel (index n + n_core).
void core_factors(const ModeTable& table, double r_prime, std::vector<double>& fre,
                  std::vector<double>& fim) {
    const int nc = table.truncation.n_core;
    fre.assign(2 * nc + 1, 0.0);
    fim.assign(2 * nc + 1, 0.0);
    const bool hyperbolic = table.groups.delta > 0.0;
    for (int n = -nc; n <= nc; ++n) {
        const ModeEntry& me = table.mode(n);
        const Cx order(n, 0.0);
        Cx term(0.0, 0.0);
        if (me.coefficients.a_n != Cx{}) {
            if (me.power_law_a)
                term += me.coefficients.a_n * std::pow(r_prime, std::abs(n));
            else
                term += me.coefficients.a_n *
                        specfun::cyl_eval(Kind::J, order, me.wavenumbers.kn_a * r_prime) /
                        me.den_core_a;
        }
        if (me.coefficients.b_n != Cx{}) {
            if (hyperbolic) {
                if (me.wavenumbers.kappan_a.real() * (1.0 - r_prime) <= kEvanescentDrop)
                    term += me.coefficients.b_n *
                            specfun::cyl_eval(Kind::I, order, me.wavenumbers.kappan_a * r_prime) /
                            me.den_core_b;
            } else {
                term += me.coefficients.b_n *
                        specfun::cyl_eval(Kind::J, order, me.wavenumbers.kappan_a * r_prime) /
                        me.den_core_b;
            }
        }
        fre[n + nc] = term.real();
        fim[n + nc] = term.imag();
    }
}

// Per-mode complex amplitudes of the outside series at radius r' (index
// n + n_ab): the dislocated incident ladder when want_ab, the scattered wave
// when want_r.  Sharing one routine lets a single evaluation provide both the
// J and the outgoing-Hankel profile of the same order.
void outer_factors(const ModeTable& table, double r_prime, bool want_ab, bool want_r,
                   std::vector<double>& fre, std::vector<double>& fim) {
    const int nc = table.truncation.n_core, na = table.truncation.n_ab;
    fre.assign(2 * na + 1, 0.0);
    fim.assign(2 * na + 1, 0.0);
    const double z = table.groups.beta * r_prime;
    const bool hyperbolic = table.groups.delta > 0.0;
    const bool keep_second =
        !hyperbolic || table.q_a.real() * (r_prime - 1.0) <= kEvanescentDrop;
    for (int n = -na; n <= na; ++n) {
        const auto& mo = table.order(n);
        const ModeEntry* me = std::abs(n) <= nc ? &table.mode(n) : nullptr;
        const bool need_j = want_ab;
        const bool need_h = want_r && me != nullptr && me->coefficients.d_n != Cx{};
        Cx j_val(0.0, 0.0), h_val(0.0, 0.0);
        if (mo.m_plus.imag() == 0.0) {
            const double m = mo.m_plus.real();
            if (need_j && ladder_term_negligible(m, z)) {
                if (need_h) h_val = specfun::cyl_eval(Kind::H1, mo.m_plus, Cx(z, 0.0));
            } else if (need_j && need_h) {
                const auto jh = specfun::eval_j_h1(m, z);
                j_val = jh.j;
                h_val = jh.h1;
            } else if (need_j) {
                j_val = specfun::cyl_eval(Kind::J, mo.m_plus, Cx(z, 0.0));
            } else if (need_h) {
                h_val = specfun::cyl_eval(Kind::H1, mo.m_plus, Cx(z, 0.0));
            }
        } else {
            if (need_j) j_val = specfun::cyl_eval(Kind::J, mo.m_plus, Cx(z, 0.0));
            if (need_h) h_val = specfun::cyl_eval(Kind::H1, mo.m_plus, Cx(z, 0.0));
        }
        Cx term(0.0, 0.0);
        if (need_j) term += table.ab_prefactor[n + na] * j_val;
        if (need_h) term += me->coefficients.d_n * h_val / me->den_outer_d;
        if (want_r && me != nullptr && me->coefficients.e_n != Cx{} && keep_second) {
            const Kind second = hyperbolic ? Kind::K : Kind::H1;
            term += me->coefficients.e_n *
                    specfun::cyl_eval(second, mo.m_minus, table.q_a * r_prime) / me->den_outer_e;
        }
        fre[n + na] = term.real();
        fim[n + na] = term.imag();
    }
}

double synthesize(const std::vector<double>& fre, const std::vector<double>& fim, int n_min,
                  double theta, double nu_t) {
    const Cx sum = kernels::phase_sum(fre.data(), fim.data(), static_cast<int>(fre.size()),
                                      n_min, theta);
    return (std::polar(1.0, -nu_t) * sum).real();
}

} // namespace

SeriesTruncation truncation_policy(double beta, std::optional<int> n_core_override,
                                   std::optional<int> n_ab_override) {
    if (!(beta > 0.0)) throw ConstraintError("truncation policy needs beta > 0");
    SeriesTruncation t;
    t.n_core = n_core_override ? *n_core_override
                               : std::max(30, static_cast<int>(std::ceil(5.0 * beta)));
    t.n_ab = n_ab_override ? *n_ab_override
                           : std::max(90, static_cast<int>(std::ceil(9.0 * beta)));
    if (t.n_core < 1 || t.n_ab < 1)
        throw ConstraintError("truncation cutoffs must be positive");
    if (t.n_ab < t.n_core) t.n_ab = t.n_core;
    const double n = t.n_core;
    const double log_tail = 2.5 * std::log(n) + n * (1.0 + std::log(0.5 * beta) - std::log(n));
    if (log_tail > std::log(1e-8))
        t.warning = "series tail estimate at the core cutoff n = " + std::to_string(t.n_core) +
                    " is not below 1e-8 of the unit incident amplitude; raise n_core";
    return t;
}

ModeTable build_mode_table(const medium::DimensionlessGroups& groups,
                           const SeriesTruncation& truncation) {
    if (truncation.n_core < 1 || truncation.n_ab < truncation.n_core)
        throw ConstraintError("mode table needs 1 <= n_core <= n_ab");
    ModeTable table;
    table.groups = groups;
    table.truncation = truncation;
    const int nc = truncation.n_core, na = truncation.n_ab;
    const bool hyperbolic = groups.delta > 0.0;

    table.orders.reserve(2 * na + 1);
    table.ab_prefactor.reserve(2 * na + 1);
    for (int n = -na; n <= na; ++n) {
        table.orders.push_back(scatter::outer_orders(n, groups));
        table.ab_prefactor.push_back(quarter_turn(table.orders.back().m_plus));
    }

    table.modes.reserve(2 * nc + 1);
    for (int n = -nc; n <= nc; ++n) {
        ModeEntry me;
        me.wavenumbers = scatter::inner_wavenumbers(n, groups);
        if (n == -nc) table.q_a = me.wavenumbers.q_a;
        const auto& mo = table.order(n);
        const auto vectors = scatter::boundary_vectors(n, groups, me.wavenumbers, mo);
        me.coefficients = scatter::solve_modal_system(vectors);
        const Cx order(n, 0.0);
        me.den_core_a = specfun::cyl_eval(Kind::J, order, me.wavenumbers.kn_a);
        me.den_core_b = specfun::cyl_eval(hyperbolic ? Kind::I : Kind::J, order,
                                          me.wavenumbers.kappan_a);
        me.den_outer_d = specfun::cyl_eval(Kind::H1, mo.m_plus, Cx(groups.beta, 0.0));
        me.den_outer_e =
            specfun::cyl_eval(hyperbolic ? Kind::K : Kind::H1, mo.m_minus, me.wavenumbers.q_a);
        // A vanishing Z_n at a near-zero inner wavenumber is the co-rotation
        // resonance (the mode's Doppler-shifted frequency passes through
        // zero); the profile has a clean power-law limit there.  A vanishing
        // normalization anywhere else is a genuine internal resonance.
        if (me.den_core_a == Cx{} && std::abs(me.wavenumbers.kn_a) < 0.5)
            me.power_law_a = true;
        if ((me.den_core_a == Cx{} && !me.power_law_a) || me.den_core_b == Cx{} ||
            me.den_outer_d == Cx{} || me.den_outer_e == Cx{})
            throw ZeroDenominator("radial profile normalization vanishes at mode n = " +
                                  std::to_string(n));
        table.modes.push_back(std::move(me));
    }
    return table;
}

double eta_core(double r_prime, double theta, double nu_t, const ModeTable& table) {
    require_table(table);
    if (!(r_prime >= 0.0 && r_prime <= 1.0))
        throw ConstraintError("eta_core needs 0 <= r' <= 1");
    std::vector<double> fre, fim;
    core_factors(table, r_prime, fre, fim);
    return synthesize(fre, fim, -table.truncation.n_core, theta, nu_t);
}

double eta_ab(double r_prime, double theta, double nu_t, const ModeTable& table) {
    require_table(table);
    if (!(r_prime >= 1.0)) throw ConstraintError("eta_ab needs r' >= 1");
    std::vector<double> fre, fim;
    outer_factors(table, r_prime, true, false, fre, fim);
    return synthesize(fre, fim, -table.truncation.n_ab, theta, nu_t);
}

double eta_r(double r_prime, double theta, double nu_t, const ModeTable& table) {
    require_table(table);
    if (!(r_prime >= 1.0)) throw ConstraintError("eta_r needs r' >= 1");
    std::vector<double> fre, fim;
    outer_factors(table, r_prime, false, true, fre, fim);
    return synthesize(fre, fim, -table.truncation.n_ab, theta, nu_t);
}

Cx far_field_correction(double theta, const ModeTable& table) {
    require_table(table);
    const int nc = table.truncation.n_core;
    const bool hyperbolic = table.groups.delta > 0.0;
    const double root4 =
        hyperbolic ? 1.0 : std::pow(std::abs(table.groups.delta) - 1.0, 0.25);
    std::vector<double> fre(2 * nc + 1), fim(2 * nc + 1);
    for (int n = -nc; n <= nc; ++n) {
        const auto& mo = table.order(n);
        const ModeEntry& me = table.mode(n);
        // Finite-core ladder correction: the half-turn phases of the drifted
        // and undrifted orders.
        Cx term = std::exp(Cx(0.0, -kPi) * mo.m_plus) - std::exp(Cx(0.0, -kPi * mo.m_old));
        term += 2.0 * me.coefficients.d_n * quarter_turn(mo.m_plus) / me.den_outer_d;
        if (!hyperbolic)
            term += 2.0 * me.coefficients.e_n * quarter_turn(mo.m_minus) /
                    (root4 * me.den_outer_e);
        fre[n + nc] = term.real();
        fim[n + nc] = term.imag();
    }
    return kernels::phase_sum(fre.data(), fim.data(), 2 * nc + 1, -nc, theta);
}

FarFieldAmplitude far_field_sweep(const ModeTable& table, int samples) {
    if (samples < 1) throw ConstraintError("far-field sweep needs at least one sample");
    FarFieldAmplitude out;
    out.theta_samples.reserve(samples);
    out.values.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        const double theta = -kPi + 2.0 * kPi * j / samples;
        out.theta_samples.push_back(theta);
        out.values.push_back(far_field_correction(theta, table));
    }
    return out;
}

FieldGrid render_grid(const GridSpec& spec, const ModeTable& table) {
    require_table(table);
    if (!(spec.half_width > 0.0)) throw ConstraintError("grid half width must be positive");
    if (spec.resolution < 1) throw ConstraintError("grid resolution must be at least 1");
    const int res = spec.resolution;
    FieldGrid grid;
    grid.half_width = spec.half_width;
    grid.resolution = res;
    grid.time = spec.phase;
    grid.values.assign(static_cast<size_t>(res) * res, 0.0);
    grid.ring.assign(static_cast<size_t>(res) * res, 0);

    // Pixel centers sit at odd multiples of half_width/res, so every radius
    // class is keyed by the integer u^2 + v^2; all pixels in a class share
    // their radial profiles and differ only in azimuth.
    const double scale = spec.half_width / res;
    const double cell = 2.0 * spec.half_width / res;
    const double ring_band = 0.5 * cell * std::numbers::sqrt2;
    std::unordered_map<long long, std::vector<int>> classes;
    for (int row = 0; row < res; ++row) {
        const long long v = res - 1 - 2 * row;
        for (int col = 0; col < res; ++col) {
            const long long u = 2 * col + 1 - res;
            classes[u * u + v * v].push_back(row * res + col);
        }
    }

    const Cx rot = std::polar(1.0, -spec.phase);
    std::vector<double> fre, fim;
    for (const auto& [key, pixels] : classes) {
        const double r_prime = std::sqrt(static_cast<double>(key)) * scale;
        const bool inside = r_prime <= 1.0;
        int n_min;
        if (inside) {
            core_factors(table, r_prime, fre, fim);
            n_min = -table.truncation.n_core;
        } else {
            outer_factors(table, r_prime, true, true, fre, fim);
            n_min = -table.truncation.n_ab;
        }
        const bool on_ring = std::abs(r_prime - 1.0) <= ring_band;
        for (const int idx : pixels) {
            const int row = idx / res, col = idx % res;
            const double x = (2 * col + 1 - res) * scale;
            const double y = (res - 1 - 2 * row) * scale;
            const double theta = std::atan2(y, x);
            const Cx sum = kernels::phase_sum(fre.data(), fim.data(),
                                              static_cast<int>(fre.size()), n_min, theta);
            grid.values[idx] = (rot * sum).real();
            if (on_ring) grid.ring[idx] = 1;
        }
    }
    return grid;
}

} // namespace vortexab::field
