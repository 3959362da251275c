#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vortexab/medium.hpp"
#include "vortexab/scatter.hpp"

namespace vortexab::field {

using Cx = std::complex<double>;

// Cutoffs for the angular-harmonic series.  The coefficient-bearing sums
// (inside the core and the scattered wave outside) converge super-
// exponentially once |n| exceeds a few times beta, while the dislocated
// incident sum needs noticeably more terms before its Bessel ladder decays,
// hence the two independent cutoffs.
struct SeriesTruncation {
    int n_core = 0;       // |n| cutoff for the coefficient-bearing sums
    int n_ab = 0;         // |n| cutoff for the dislocated incident sum
    std::string warning;  // non-empty when the tail estimate is not negligible
};

// Chooses cutoffs for a given dimensionless core radius beta.  Defaults are
// n_core = max(30, ceil(5*beta)) and n_ab = max(90, ceil(9*beta)); explicit
// overrides are accepted verbatim (n_ab is raised to n_core if needed so the
// invariant n_ab >= n_core always holds).  A warning is attached when the
// super-exponential tail estimate n^{5/2} (e*beta/2n)^n at the core cutoff is
// not below 1e-8 of the unit incident amplitude.
SeriesTruncation truncation_policy(double beta, std::optional<int> n_core_override = {},
                                   std::optional<int> n_ab_override = {});

// Everything the synthesis routines need for one angular mode n with
// |n| <= n_core: the radial wavenumbers, the solved matching coefficients,
// and the radial-profile normalizations (values of the respective cylinder
// functions at the core boundary) that every sample point divides by.
struct ModeEntry {
    scatter::ModalWavenumbers wavenumbers;
    scatter::ModalCoefficients coefficients;
    Cx den_core_a;   // Z_n at the propagating inner wavenumber
    Cx den_core_b;   // companion-family function at the second inner wavenumber
    Cx den_outer_d;  // outgoing Hankel of order m_plus at the core boundary
    Cx den_outer_e;  // second outer family (K or Hankel, per dispersion class)
    // True for a co-rotation-resonant mode whose inner wavenumber is so close
    // to zero that Z_n underflows; the normalized profile then takes its
    // wavenumber->0 limit (r')^|n| instead of a 0/0 ratio.
    bool power_law_a = false;
};

// Immutable per-run table of modal data shared by all sample points.
struct ModeTable {
    medium::DimensionlessGroups groups;
    SeriesTruncation truncation;
    Cx q_a;                                     // second outer wavenumber scale
    std::vector<scatter::ModalOrders> orders;   // index n + n_ab, |n| <= n_ab
    std::vector<Cx> ab_prefactor;               // (-i)^{m_plus}, index n + n_ab
    std::vector<ModeEntry> modes;               // index n + n_core, |n| <= n_core

    const scatter::ModalOrders& order(int n) const { return orders[n + truncation.n_ab]; }
    const ModeEntry& mode(int n) const { return modes[n + truncation.n_core]; }
};

// Solves the matching system for every |n| <= n_core and precomputes the
// boundary normalizations; orders and incident prefactors are tabulated up to
// n_ab.  Errors from the per-mode solves propagate unchanged.
ModeTable build_mode_table(const medium::DimensionlessGroups& groups,
                           const SeriesTruncation& truncation);

// Surface elevation inside the core (0 <= r' <= 1), at azimuth theta and
// snapshot phase nu_t (angular frequency times time):
//   Re sum_n (a_n Z_n(k_n a r')/Z_n(k_n a) + b_n X_n(kappa_n a r')/X_n(kappa_n a))
//        * exp(i(n*theta - nu_t)),
// where Z = J and X = I when the second inner family is evanescent
// (delta > 0), and both are J otherwise.
double eta_core(double r_prime, double theta, double nu_t, const ModeTable& table);

// Dislocated incident wave outside the core (r' >= 1):
//   Re sum_{|n| <= n_ab} (-i)^{m_plus} J_{m_plus}(beta r') exp(i(n*theta - nu_t)).
// With no circulation this resums to the plane wave cos(beta x' + nu_t).
double eta_ab(double r_prime, double theta, double nu_t, const ModeTable& table);

// Scattered wave outside the core (r' >= 1):
//   Re sum_n (d_n H1_{m_plus}(beta r')/H1_{m_plus}(beta)
//             + e_n T_{m_minus}(q a r')/T_{m_minus}(q a)) * exp(i(n*theta - nu_t)),
// where T = K (evanescent second branch, delta > 0) or H1 (radiating,
// delta < -1).
double eta_r(double r_prime, double theta, double nu_t, const ModeTable& table);

// Correction to the point-flux (delta-function core) scattering amplitude:
// the finite-core ladder difference
//   G(theta) = sum_n e^{i n theta} (e^{-i pi m_plus} - e^{-i pi m_old})
// plus 2 sum_n d_n (-i)^{m_plus} / H1_{m_plus}(beta) e^{i n theta}, and for a
// radiating second branch additionally
// 2 sum_n e_n (-i)^{m_minus} / ((|delta|-1)^{1/4} H1_{m_minus}(q a)) e^{i n theta}.
// All sums run over |n| <= n_core.
Cx far_field_correction(double theta, const ModeTable& table);

// Far-field correction sampled on a uniform angular grid.  Values are
// 2*pi-periodic in theta by construction.
struct FarFieldAmplitude {
    std::vector<double> theta_samples;
    std::vector<Cx> values;
};
FarFieldAmplitude far_field_sweep(const ModeTable& table, int samples);

// Cartesian sampling window centered on the vortex axis.
struct GridSpec {
    double half_width = 5.0;  // in units of the core radius
    int resolution = 256;     // samples per axis
    double phase = 0.0;       // snapshot phase (angular frequency times time)
};

// Pointwise samples of the total elevation: eta_core inside the core,
// eta_ab + eta_r outside.  Values are raw (unquantized); the ring mask marks
// cells straddling the core boundary r' = 1 so renderers can draw it without
// touching the data.
struct FieldGrid {
    double half_width = 0.0;
    int resolution = 0;
    double time = 0.0;               // snapshot phase of this frame
    std::vector<double> values;      // row-major, row 0 at the top (+y)
    std::vector<std::uint8_t> ring;  // 1 where the cell straddles r' = 1

    double value(int row, int col) const { return values[row * resolution + col]; }
};

FieldGrid render_grid(const GridSpec& spec, const ModeTable& table);

} // namespace vortexab::field
