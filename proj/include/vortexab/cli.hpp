#ifndef VORTEXAB_CLI_HPP
#define VORTEXAB_CLI_HPP

// Command-line front end: configuration parsing, figure presets, and file
// output (CSV curves, binary PGM grids, plain-text run manifests).  Every
// routine here is callable programmatically; run_main() is the thin argv
// wrapper used by the executable.

#include <optional>
#include <string>
#include <vector>

#include "vortexab/field.hpp"
#include "vortexab/medium.hpp"
#include "vortexab/scatter.hpp"

namespace vortexab::cli {

// One run's worth of parameters.  Two mutually exclusive modes:
//   - physical: fluid/layer properties plus a wave (wavelength or wavenumber)
//     and a vortex (circulation or alpha); everything dimensionless is derived.
//   - dimensionless: alpha, beta, delta given directly (the figure presets);
//     velocities are derived on the unit-depth-speed, unit-core-radius scale.
struct RunConfig {
    // Vortex strength: exactly one of the two must be supplied.
    std::optional<double> circulation;   // Gamma (cm^2/s); physical runs only
    std::optional<double> alpha;         // dislocation strength (either mode)

    // Wave: physical runs supply exactly one of wavenumber/wavelength;
    // dimensionless runs supply beta and delta instead.
    std::optional<double> wavenumber;    // 1/cm
    std::optional<double> wavelength;    // cm
    std::optional<double> beta;          // k * a
    std::optional<double> delta;         // dispersion classification parameter

    medium::FluidProperties fluid{};     // defaults: clean water
    medium::LayerGeometry layer{};       // default depth 0.1 cm
    double core_radius = 1.0;            // a (cm)

    double half_width = 5.0;             // grid half-size in units of a
    int resolution = 256;                // grid samples per axis
    double phase = 0.0;                  // snapshot phase nu*t
    int samples = 360;                   // far-field angular samples
    std::optional<int> n_core;           // truncation overrides
    std::optional<int> n_ab;
    std::string out_dir = "out";
    std::string label = "run";

    bool dimensionless() const { return beta.has_value() || delta.has_value(); }

    // Throws ConstraintError naming the violated invariant.
    void validate() const;
};

// Parses line-oriented `key = value` text ('#' starts a comment).  Unknown or
// malformed keys raise ParseError with the line number; structural violations
// raise ConstraintError.  The manifest's echoed-configuration block is valid
// input, so a run can be reproduced from its manifest.
RunConfig parse_config(const std::string& text);

// Named parameter sets reproducing the published figures and the attenuation
// table.  Panel names (fig5a..fig8d, fig11a, fig11b) yield one config; family
// names (fig5..fig8, fig9, fig10, table1) yield the whole panel set.  Throws
// UnknownPreset for anything else.
std::vector<RunConfig> figure_preset(const std::string& name);

// Everything derived from a RunConfig that the solver and the manifest need.
struct ResolvedRun {
    bool physical = false;
    medium::WaveParameters wave{};            // physical runs only
    scatter::VortexFlow vortex{};             // physical runs only
    medium::AttenuationReport attenuation{};  // physical runs only
    medium::DimensionlessGroups groups{};
    medium::ValidityReport validity{};
    field::SeriesTruncation truncation{};
};

// Validates and derives.  Dimensionless-group and velocity errors propagate
// unchanged (NonPropagating, EvanescentError, ...).
ResolvedRun resolve(const RunConfig& config);

// Plain-text manifest: an echoed-configuration block (re-parseable), derived
// quantities, warnings, and the list of files the run wrote.  Contains no
// timestamps, so identical runs produce identical manifests.
struct RunManifest {
    RunConfig config;
    std::string subcommand;
    std::string version;
    std::vector<std::string> derived;    // "name = value" lines
    std::vector<std::string> warnings;
    std::vector<std::string> outputs;    // file names relative to out_dir

    std::string text() const;
};

// Executes one subcommand over a list of configs, writing all artifacts under
// each config's out_dir:
//   dispersion   -> <label>_dispersion.csv (full and long-wave models)
//   coefficients -> <label>_coefficients.csv (magnitudes and their log10)
//   field        -> <label>_field.pgm + <label>_field.csv (raw samples)
//   farfield     -> <label>_farfield.csv (theta, |f|, arg f)
//   sweep        -> coefficients + field + farfield per config
//   validate     -> manifest only
// Every run also writes <label>_manifest.txt.  Returns 0 on success; library
// errors propagate as exceptions (run_main turns them into exit codes).
int run(const std::string& subcommand, const std::vector<RunConfig>& configs);

// argv front end: `vortexab <subcommand> [--config FILE] [--preset NAME]
// [--out DIR] [--ncore N] [--nab N] [--phase X] [--resolution N]`.
// On any library error prints one line `E_CATEGORY: message` to stderr and
// returns a nonzero status.
int run_main(int argc, char** argv);

} // namespace vortexab::cli

#endif
