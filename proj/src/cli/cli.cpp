#include "vortexab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "vortexab/errors.hpp"
#include "vortexab/version.hpp"

namespace vortexab::cli {

namespace fs = std::filesystem;
using Cx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

// Full-precision, locale-independent float formatting; %.17g round-trips
// every double exactly, which is what makes manifests reproducible.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

double to_double(int line, const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        parse_fail(line, "value '" + value + "' for key '" + key + "' is not a number");
    return v;
}

int to_int(int line, const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || v < -1000000 || v > 1000000)
        parse_fail(line, "value '" + value + "' for key '" + key + "' is not a valid integer");
    return static_cast<int>(v);
}

void write_file(const fs::path& path, const std::string& body, bool binary) {
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os) throw OutputError("cannot open '" + path.string() + "' for writing");
    os.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!os) throw OutputError("failed writing '" + path.string() + "'");
}

} // namespace

// --------------------------------------------------------------------------
// Configuration
// --------------------------------------------------------------------------

void RunConfig::validate() const {
    if (circulation && alpha)
        throw ConstraintError("exactly one of circulation and alpha may be given, not both");
    if (!circulation && !alpha)
        throw ConstraintError("one of circulation or alpha is required");
    if (beta.has_value() != delta.has_value())
        throw ConstraintError("dimensionless runs need both beta and delta");
    if (dimensionless()) {
        if (circulation)
            throw ConstraintError("dimensionless runs take the vortex strength through alpha");
        if (wavelength || wavenumber)
            throw ConstraintError("beta/delta and wavelength/wavenumber are mutually exclusive");
        if (!(*beta > 0.0)) throw ConstraintError("beta must be positive");
    } else {
        if (wavelength && wavenumber)
            throw ConstraintError("exactly one of wavelength and wavenumber may be given, not both");
        if (!wavelength && !wavenumber)
            throw ConstraintError("one of wavelength or wavenumber is required");
        if (wavelength && !(*wavelength > 0.0))
            throw ConstraintError("wavelength must be positive");
        if (wavenumber && !(*wavenumber > 0.0))
            throw ConstraintError("wavenumber must be positive");
        fluid.validate();
        layer.validate();
        if (!(core_radius > 0.0)) throw ConstraintError("core_radius must be positive");
    }
    if (resolution < 1) throw ConstraintError("resolution must be at least 1");
    if (!(half_width > 0.0)) throw ConstraintError("half_width must be positive");
    if (samples < 1) throw ConstraintError("samples must be at least 1");
    if (n_core && *n_core < 1) throw ConstraintError("n_core override must be positive");
    if (n_ab && *n_ab < 1) throw ConstraintError("n_ab override must be positive");
    if (!std::isfinite(phase)) throw ConstraintError("phase must be finite");
    if (label.empty()) throw ConstraintError("label must be non-empty");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::string first_physical, first_dimless;
    static const std::set<std::string> physical_keys = {
        "rho",         "surface_tension", "viscosity",  "gravity",    "depth",
        "core_radius", "wavelength",      "wavenumber", "circulation"};
    static const std::set<std::string> dimless_keys = {"beta", "delta"};

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) parse_fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) parse_fail(line_no, "missing key before '='");
        if (value.empty()) parse_fail(line_no, "missing value for key '" + key + "'");
        if (!seen.insert(key).second) parse_fail(line_no, "duplicate key '" + key + "'");
        if (physical_keys.count(key) && first_physical.empty()) first_physical = key;
        if (dimless_keys.count(key) && first_dimless.empty()) first_dimless = key;

        if (key == "rho") cfg.fluid.rho = to_double(line_no, key, value);
        else if (key == "surface_tension") cfg.fluid.tau = to_double(line_no, key, value);
        else if (key == "viscosity") cfg.fluid.mu = to_double(line_no, key, value);
        else if (key == "gravity") cfg.fluid.g = to_double(line_no, key, value);
        else if (key == "depth") cfg.layer.h = to_double(line_no, key, value);
        else if (key == "core_radius") cfg.core_radius = to_double(line_no, key, value);
        else if (key == "wavelength") cfg.wavelength = to_double(line_no, key, value);
        else if (key == "wavenumber") cfg.wavenumber = to_double(line_no, key, value);
        else if (key == "circulation") cfg.circulation = to_double(line_no, key, value);
        else if (key == "alpha") cfg.alpha = to_double(line_no, key, value);
        else if (key == "beta") cfg.beta = to_double(line_no, key, value);
        else if (key == "delta") cfg.delta = to_double(line_no, key, value);
        else if (key == "half_width") cfg.half_width = to_double(line_no, key, value);
        else if (key == "resolution") cfg.resolution = to_int(line_no, key, value);
        else if (key == "phase") cfg.phase = to_double(line_no, key, value);
        else if (key == "samples") cfg.samples = to_int(line_no, key, value);
        else if (key == "n_core") cfg.n_core = to_int(line_no, key, value);
        else if (key == "n_ab") cfg.n_ab = to_int(line_no, key, value);
        else if (key == "out_dir") cfg.out_dir = value;
        else if (key == "label") cfg.label = value;
        else parse_fail(line_no, "unknown key '" + key + "'");
    }

    if (!first_physical.empty() && !first_dimless.empty())
        throw ConstraintError("physical key '" + first_physical + "' and dimensionless key '" +
                              first_dimless + "' are mutually exclusive");
    cfg.validate();
    return cfg;
}

// --------------------------------------------------------------------------
// Presets
// --------------------------------------------------------------------------

namespace {

RunConfig dimless_config(double alpha, double beta, double delta, double half_width,
                         const std::string& label) {
    RunConfig c;
    c.alpha = alpha;
    c.beta = beta;
    c.delta = delta;
    c.half_width = half_width;
    c.label = label;
    return c;
}

} // namespace

std::vector<RunConfig> figure_preset(const std::string& name) {
    static const double panel_alpha[4] = {0.5, 1.0, 1.5, 2.0};
    static const double polar_alpha[4] = {0.25, 0.5, 1.0, 1.25};
    static const char letters[5] = "abcd";

    // Density-plot families fig5..fig8: delta = +8 then -8, beta = 5 then 10.
    if (name.size() >= 4 && name.compare(0, 3, "fig") == 0 &&
        name[3] >= '5' && name[3] <= '8' &&
        (name.size() == 4 || (name.size() == 5 && name[4] >= 'a' && name[4] <= 'd'))) {
        const int fig = name[3] - '0';
        const double delta = fig <= 6 ? 8.0 : -8.0;
        const double beta = (fig == 5 || fig == 7) ? 5.0 : 10.0;
        std::vector<RunConfig> out;
        if (name.size() == 5) {
            out.push_back(dimless_config(panel_alpha[name[4] - 'a'], beta, delta, 5.0, name));
        } else {
            for (int i = 0; i < 4; ++i)
                out.push_back(
                    dimless_config(panel_alpha[i], beta, delta, 5.0, name + letters[i]));
        }
        return out;
    }

    if (name == "fig9" || name == "fig10") {
        const double delta = name == "fig9" ? 8.0 : -8.0;
        std::vector<RunConfig> out;
        for (int i = 0; i < 4; ++i)
            out.push_back(dimless_config(polar_alpha[i], 5.0, delta, 5.0, name + letters[i]));
        return out;
    }

    if (name == "fig11a") {
        // Non-dispersive reference panel: the depth-independent limit is
        // approximated by a very large delta at the same beta and alpha = 1.
        return {dimless_config(1.0, kPi, 4000.0, 10.0, name)};
    }

    if (name == "fig11b") {
        // Thin water layer, lambda = 2 cm, vortex circulation chosen so that
        // the non-dispersive theory would assign dislocation strength 1:
        // Gamma = 2 pi g h / nu.
        RunConfig c;
        c.wavelength = 2.0;
        c.layer.h = 0.1;
        c.core_radius = 1.0;
        const double k = kTwoPi / *c.wavelength;
        const double nu =
            medium::dispersion(k, c.fluid, c.layer, medium::DispersionModel::Cubic);
        c.circulation = kTwoPi * c.fluid.g * c.layer.h / nu;
        c.half_width = 10.0;
        c.label = name;
        return {c};
    }

    if (name == "table1") {
        // Attenuation-time rows: capillary-gravity wavelengths on a deep
        // column plus the long shallow-water wavelength.
        static const double lambdas[4] = {0.1, 0.5, 1.0, 2.0};
        std::vector<RunConfig> out;
        for (int i = 0; i < 4; ++i) {
            RunConfig c;
            c.wavelength = lambdas[i];
            c.layer.h = 10.0;
            c.alpha = 0.0;
            c.label = name + letters[i];
            out.push_back(c);
        }
        return out;
    }

    throw UnknownPreset("unknown preset '" + name + "'");
}

// --------------------------------------------------------------------------
// Derivation
// --------------------------------------------------------------------------

ResolvedRun resolve(const RunConfig& cfg) {
    cfg.validate();
    ResolvedRun rr;
    if (cfg.dimensionless()) {
        const double beta = *cfg.beta, delta = *cfg.delta, alpha = *cfg.alpha;
        // velocities() on the unit (depth-speed)^2, unit-core scale.
        const auto vel = medium::velocities(beta, 1.0, delta, 1.0);
        rr.groups.alpha = alpha;
        rr.groups.beta = beta;
        rr.groups.delta = delta;
        rr.groups.c_phi = vel.c_phi;
        rr.groups.c_g = vel.c_g;
        rr.groups.mach = alpha * vel.c_g / (beta * vel.c_phi);
        rr.validity = medium::validity_report(rr.groups, rr.attenuation);
    } else {
        rr.physical = true;
        const double k = cfg.wavenumber ? *cfg.wavenumber : kTwoPi / *cfg.wavelength;
        rr.wave = medium::wave_from_k(k, cfg.fluid, cfg.layer, medium::DispersionModel::Cubic);
        double gamma;
        if (cfg.circulation) {
            gamma = *cfg.circulation;
        } else {
            // alpha = Gamma k / (2 pi c_g), inverted for the circulation.
            const double l_c = medium::capillary_length(cfg.fluid);
            const double delta = medium::delta_parameter(k, cfg.layer.h, l_c);
            const auto vel = medium::velocities(k, cfg.layer.h, delta, cfg.fluid.g);
            gamma = kTwoPi * (*cfg.alpha) * vel.c_g / k;
        }
        rr.vortex = scatter::VortexFlow::from_gamma(gamma, cfg.core_radius);
        rr.groups = scatter::dimensionless_setup(cfg.fluid, cfg.layer, rr.wave, rr.vortex);
        rr.attenuation =
            medium::attenuation(rr.wave.lambda, cfg.fluid, rr.groups.c_phi, cfg.core_radius);
        rr.validity = medium::validity_report(rr.groups, rr.attenuation);
    }
    rr.truncation = field::truncation_policy(rr.groups.beta, cfg.n_core, cfg.n_ab);
    return rr;
}

// --------------------------------------------------------------------------
// Manifest
// --------------------------------------------------------------------------

namespace {

void echo_config(std::ostream& os, const RunConfig& c) {
    if (c.dimensionless()) {
        os << "alpha = " << fmt(*c.alpha) << "\n";
        os << "beta = " << fmt(*c.beta) << "\n";
        os << "delta = " << fmt(*c.delta) << "\n";
    } else {
        os << "rho = " << fmt(c.fluid.rho) << "\n";
        os << "surface_tension = " << fmt(c.fluid.tau) << "\n";
        os << "viscosity = " << fmt(c.fluid.mu) << "\n";
        os << "gravity = " << fmt(c.fluid.g) << "\n";
        os << "depth = " << fmt(c.layer.h) << "\n";
        os << "core_radius = " << fmt(c.core_radius) << "\n";
        if (c.wavelength) os << "wavelength = " << fmt(*c.wavelength) << "\n";
        if (c.wavenumber) os << "wavenumber = " << fmt(*c.wavenumber) << "\n";
        if (c.circulation) os << "circulation = " << fmt(*c.circulation) << "\n";
        if (c.alpha) os << "alpha = " << fmt(*c.alpha) << "\n";
    }
    os << "half_width = " << fmt(c.half_width) << "\n";
    os << "resolution = " << c.resolution << "\n";
    os << "phase = " << fmt(c.phase) << "\n";
    os << "samples = " << c.samples << "\n";
    if (c.n_core) os << "n_core = " << *c.n_core << "\n";
    if (c.n_ab) os << "n_ab = " << *c.n_ab << "\n";
    os << "out_dir = " << c.out_dir << "\n";
    os << "label = " << c.label << "\n";
}

RunManifest make_manifest(const RunConfig& cfg, const ResolvedRun* rr,
                          const std::string& subcommand) {
    RunManifest m;
    m.config = cfg;
    m.subcommand = subcommand;
    m.version = kVersion;
    if (rr) {
        auto add = [&m](const std::string& k, const std::string& v) {
            m.derived.push_back(k + " = " + v);
        };
        add("alpha", fmt(rr->groups.alpha));
        add("beta", fmt(rr->groups.beta));
        add("delta", fmt(rr->groups.delta));
        add("mach", fmt(rr->groups.mach));
        add("c_phi_cm_per_s", fmt(rr->groups.c_phi));
        add("c_g_cm_per_s", fmt(rr->groups.c_g));
        if (rr->physical) {
            add("kh", fmt(rr->groups.kh));
            add("k_lc", fmt(rr->groups.kl_c));
            add("k_per_cm", fmt(rr->wave.k));
            add("lambda_cm", fmt(rr->wave.lambda));
            add("nu_rad_per_s", fmt(rr->wave.nu));
            add("circulation_cm2_per_s", fmt(rr->vortex.gamma));
            add("core_vorticity_rad_per_s", fmt(rr->vortex.omega));
            add("t_gw_s", fmt(rr->attenuation.t_gw));
            add("t_cw_s", fmt(rr->attenuation.t_cw));
            add("period_s", fmt(rr->attenuation.period));
            add("travel_time_s", fmt(rr->attenuation.travel_time));
            add("eta0_estimate_cm", fmt(rr->validity.eta0_estimate));
        }
        add("n_core", std::to_string(rr->truncation.n_core));
        add("n_ab", std::to_string(rr->truncation.n_ab));
        for (const auto& w : rr->validity.warnings) m.warnings.push_back(w);
        if (!rr->truncation.warning.empty()) m.warnings.push_back(rr->truncation.warning);
    }
    return m;
}

} // namespace

std::string RunManifest::text() const {
    std::ostringstream os;
    os << "# vortexab " << version << " run manifest: " << config.label << "\n";
    os << "# subcommand: " << subcommand << "\n";
    os << "#\n";
    os << "# echoed configuration; this block parses as a config file\n";
    echo_config(os, config);
    os << "#\n";
    for (const auto& d : derived) os << "# derived: " << d << "\n";
    for (const auto& w : warnings) os << "# warning: " << w << "\n";
    for (const auto& o : outputs) os << "# output: " << o << "\n";
    return os.str();
}

// --------------------------------------------------------------------------
// Subcommand bodies
// --------------------------------------------------------------------------

namespace {

std::string dispersion_csv(const RunConfig& cfg) {
    const double k = cfg.wavenumber ? *cfg.wavenumber : kTwoPi / *cfg.wavelength;
    const double nu_full =
        medium::dispersion(k, cfg.fluid, cfg.layer, medium::DispersionModel::Full);
    double nu_cubic = std::numeric_limits<double>::quiet_NaN();
    try {
        nu_cubic = medium::dispersion(k, cfg.fluid, cfg.layer, medium::DispersionModel::Cubic);
    } catch (const Error&) {
        // long-wave model outside its validity; reported as nan
    }
    double delta = std::numeric_limits<double>::quiet_NaN();
    try {
        delta = medium::delta_parameter(k, cfg.layer.h,
                                        medium::capillary_length(cfg.fluid));
    } catch (const Error&) {
    }
    // Group velocity of the full relation: d(nu^2)/dk / (2 nu) with
    // nu^2 = (g k + tau k^3/rho) tanh(k h).
    const double t = std::tanh(k * cfg.layer.h);
    const double p = cfg.fluid.g * k + cfg.fluid.tau * k * k * k / cfg.fluid.rho;
    const double dp = cfg.fluid.g + 3.0 * cfg.fluid.tau * k * k / cfg.fluid.rho;
    const double c_g = (dp * t + p * cfg.layer.h * (1.0 - t * t)) / (2.0 * nu_full);

    std::ostringstream os;
    os << "k_per_cm,nu_full_rad_per_s,nu_cubic_rad_per_s,c_phi_cm_per_s,c_g_cm_per_s,delta\n";
    os << fmt(k) << ',' << fmt(nu_full) << ',' << fmt(nu_cubic) << ',' << fmt(nu_full / k)
       << ',' << fmt(c_g) << ',' << fmt(delta) << "\n";
    return os.str();
}

std::string coefficients_csv(const field::ModeTable& table) {
    std::ostringstream os;
    os << "n,a_abs,b_abs,c_abs,d_abs,e_abs,"
          "a_log10,b_log10,c_log10,d_log10,e_log10,condition_number\n";
    const int nc = table.truncation.n_core;
    for (int n = -nc; n <= nc; ++n) {
        const auto& c = table.mode(n).coefficients;
        const double m[5] = {std::abs(c.a_n), std::abs(c.b_n), std::abs(c.c_n),
                             std::abs(c.d_n), std::abs(c.e_n)};
        os << n;
        for (double v : m) os << ',' << fmt(v);
        for (double v : m) os << ',' << fmt(std::log10(v));
        os << ',' << fmt(c.condition_number) << "\n";
    }
    return os.str();
}

std::string farfield_csv(const field::ModeTable& table, int samples) {
    const auto sweep = field::far_field_sweep(table, samples);
    std::ostringstream os;
    os << "theta_rad,f_abs,f_arg_rad\n";
    for (std::size_t i = 0; i < sweep.values.size(); ++i) {
        os << fmt(sweep.theta_samples[i]) << ',' << fmt(std::abs(sweep.values[i])) << ','
           << fmt(std::arg(sweep.values[i])) << "\n";
    }
    return os.str();
}

std::string field_csv(const field::FieldGrid& grid) {
    std::ostringstream os;
    os << "x_over_a,y_over_a,eta\n";
    const int res = grid.resolution;
    const double scale = grid.half_width / res;
    for (int row = 0; row < res; ++row) {
        const double y = (res - 1 - 2 * row) * scale;
        for (int col = 0; col < res; ++col) {
            const double x = (2 * col + 1 - res) * scale;
            os << fmt(x) << ',' << fmt(y) << ',' << fmt(grid.value(row, col)) << "\n";
        }
    }
    return os.str();
}

// Binary PGM (P5): linear greyscale, minimum -> 0, maximum -> 255; cells
// straddling the core boundary are painted black to mark the vortex ring.
std::string field_pgm(const field::FieldGrid& grid) {
    double lo = grid.values[0], hi = grid.values[0];
    for (double v : grid.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi - lo;
    std::string body = "P5\n" + std::to_string(grid.resolution) + " " +
                       std::to_string(grid.resolution) + "\n255\n";
    body.reserve(body.size() + grid.values.size());
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        unsigned byte = 0;
        if (span > 0.0)
            byte = static_cast<unsigned>(std::lround((grid.values[i] - lo) / span * 255.0));
        if (grid.ring[i]) byte = 0;
        body.push_back(static_cast<char>(static_cast<unsigned char>(byte)));
    }
    return body;
}

void run_one(const std::string& sub, const RunConfig& cfg) {
    cfg.validate();
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw OutputError("cannot create output directory '" + cfg.out_dir + "'");
    const fs::path dir(cfg.out_dir);
    std::vector<std::string> outputs;

    if (sub == "dispersion") {
        if (cfg.dimensionless())
            throw ConstraintError("dispersion output needs a physical configuration");
        const std::string csv = dispersion_csv(cfg);
        const std::string csv_name = cfg.label + "_dispersion.csv";
        write_file(dir / csv_name, csv, false);
        outputs.push_back(csv_name);

        // The thin-layer scattering derivation may legitimately fail here
        // (e.g. deep-water rows); the manifest then records why.
        RunManifest m;
        try {
            const ResolvedRun rr = resolve(cfg);
            m = make_manifest(cfg, &rr, sub);
        } catch (const Error& e) {
            m = make_manifest(cfg, nullptr, sub);
            m.warnings.push_back("thin-layer model not applicable: " + e.category() + ": " +
                                 e.what());
        }
        m.outputs = outputs;
        m.outputs.push_back(cfg.label + "_manifest.txt");
        write_file(dir / (cfg.label + "_manifest.txt"), m.text(), false);
        return;
    }

    const ResolvedRun rr = resolve(cfg);
    const bool wants_coeff = sub == "coefficients" || sub == "sweep";
    const bool wants_field = sub == "field" || sub == "sweep";
    const bool wants_far = sub == "farfield" || sub == "sweep";

    if (wants_coeff || wants_field || wants_far) {
        const auto table = field::build_mode_table(rr.groups, rr.truncation);
        if (wants_coeff) {
            const std::string name = cfg.label + "_coefficients.csv";
            write_file(dir / name, coefficients_csv(table), false);
            outputs.push_back(name);
        }
        if (wants_field) {
            field::GridSpec spec;
            spec.half_width = cfg.half_width;
            spec.resolution = cfg.resolution;
            spec.phase = cfg.phase;
            const auto grid = field::render_grid(spec, table);
            const std::string pgm_name = cfg.label + "_field.pgm";
            const std::string csv_name = cfg.label + "_field.csv";
            write_file(dir / pgm_name, field_pgm(grid), true);
            write_file(dir / csv_name, field_csv(grid), false);
            outputs.push_back(pgm_name);
            outputs.push_back(csv_name);
        }
        if (wants_far) {
            const std::string name = cfg.label + "_farfield.csv";
            write_file(dir / name, farfield_csv(table, cfg.samples), false);
            outputs.push_back(name);
        }
    }

    RunManifest m = make_manifest(cfg, &rr, sub);
    m.outputs = outputs;
    m.outputs.push_back(cfg.label + "_manifest.txt");
    write_file(dir / (cfg.label + "_manifest.txt"), m.text(), false);
}

} // namespace

int run(const std::string& subcommand, const std::vector<RunConfig>& configs) {
    static const std::set<std::string> known = {"dispersion", "coefficients", "field",
                                               "farfield",   "sweep",        "validate"};
    if (!known.count(subcommand))
        throw ConstraintError("E_CLI_USAGE", "unknown subcommand '" + subcommand + "'");
    if (configs.empty())
        throw ConstraintError("E_CLI_USAGE", "no run configuration given");
    for (const auto& cfg : configs) run_one(subcommand, cfg);
    return 0;
}

int run_main(int argc, char** argv) {
    CLI::App app{"capillary-gravity wave scattering by a vortex"};
    app.set_version_flag("--version", std::string("vortexab ") + kVersion);
    std::string subcommand, config_path, preset, out_dir;
    int ncore = 0, nab = 0, resolution = 0;
    double phase = 0.0;
    bool have_phase = false;
    app.add_option("subcommand", subcommand,
                   "one of: dispersion, coefficients, field, farfield, sweep, validate")
        ->required();
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--preset", preset, "published figure/table preset name");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--ncore", ncore, "override for the coefficient-sum cutoff");
    app.add_option("--nab", nab, "override for the incident-sum cutoff");
    app.add_option("--phase", phase, "snapshot phase nu*t")
        ->each([&have_phase](const std::string&) { have_phase = true; });
    app.add_option("--resolution", resolution, "grid samples per axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (config_path.empty() == preset.empty())
            throw ConstraintError("E_CLI_USAGE",
                                  "exactly one of --config and --preset is required");
        std::vector<RunConfig> configs;
        if (!preset.empty()) {
            configs = figure_preset(preset);
        } else {
            std::ifstream in(config_path, std::ios::binary);
            if (!in) throw OutputError("cannot read config file '" + config_path + "'");
            std::ostringstream body;
            body << in.rdbuf();
            configs.push_back(parse_config(body.str()));
        }
        for (auto& cfg : configs) {
            if (!out_dir.empty()) cfg.out_dir = out_dir;
            if (ncore > 0) cfg.n_core = ncore;
            if (nab > 0) cfg.n_ab = nab;
            if (have_phase) cfg.phase = phase;
            if (resolution > 0) cfg.resolution = resolution;
        }
        return run(subcommand, configs);
    } catch (const Error& e) {
        std::fprintf(stderr, "%s: %s\n", e.category().c_str(), e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "E_INTERNAL: %s\n", e.what());
        return 1;
    }
}

} // namespace vortexab::cli
