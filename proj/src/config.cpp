#include "dmgrad/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace dmgrad {

namespace {

struct RawValue {
    std::string text;
    int line = 0;
    mutable bool used = false;
};

using Section = std::map<std::string, RawValue>;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
    std::ostringstream os;
    os << path << ": " << msg;
    if (line > 0) os << " (line " << line << ")";
    throw ConfigError(os.str());
}

struct UnitTable {
    std::map<std::string, double> factors;  // unit token -> SI multiplier
    std::string dimension;
};

const UnitTable kMass{{{"kg", 1.0},
                       {"u", units::atomic_mass_unit},
                       {"eV/c^2", units::electron_volt / (299792458.0 * 299792458.0)},
                       {"MeV/c^2", 1e6 * units::electron_volt / (299792458.0 * 299792458.0)},
                       {"GeV/c^2", 1e9 * units::electron_volt / (299792458.0 * 299792458.0)}},
                      "mass"};
const UnitTable kAngularFreq{{{"rad/s", 1.0}, {"Hz", 2.0 * M_PI}, {"mHz", 2.0e-3 * M_PI}},
                             "angular frequency"};
const UnitTable kTime{{{"s", 1.0}, {"ms", 1e-3}}, "time"};
const UnitTable kLength{{{"m", 1.0}, {"cm", 1e-2}, {"km", 1e3}}, "length"};
const UnitTable kWavevector{{{"rad/m", 1.0}, {"1/m", 1.0}}, "wave vector"};
const UnitTable kAcceleration{{{"m/s^2", 1.0}}, "acceleration"};
const UnitTable kMomentum{{{"kg*m/s", 1.0}}, "momentum"};  // plus hbar*k, see below
const UnitTable kDensity{{{"J/m^3", 1.0}, {"GeV/cm^3", units::gev_per_cm3}},
                         "energy density"};
const UnitTable kAngle{{{"rad", 1.0}, {"deg", M_PI / 180.0}}, "angle"};

class Parsed {
  public:
    Parsed(const std::string& text, std::string path) : path_(std::move(path)) {
        std::istringstream in(text);
        std::string line;
        std::string section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    fail(path_, lineno, "malformed section header '" + line + "'");
                section = trim(line.substr(1, line.size() - 2));
                sections_[section];
                continue;
            }
            const size_t eq = line.find('=');
            if (eq == std::string::npos)
                fail(path_, lineno, "expected 'key = value', got '" + line + "'");
            if (section.empty())
                fail(path_, lineno, "key outside of any [section]");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty() || value.empty())
                fail(path_, lineno, "empty key or value");
            if (sections_[section].count(key))
                fail(path_, lineno, "duplicate key " + section + "." + key);
            sections_[section][key] = RawValue{value, lineno};
        }
    }

    bool has(const std::string& sec, const std::string& key) const {
        auto s = sections_.find(sec);
        return s != sections_.end() && s->second.count(key) > 0;
    }

    const RawValue& raw(const std::string& sec, const std::string& key) const {
        auto s = sections_.find(sec);
        if (s == sections_.end() || !s->second.count(key))
            fail(path_, 0, "missing required key " + sec + "." + key);
        const RawValue& rv = s->second.at(key);
        rv.used = true;
        return rv;
    }

    double quantity(const std::string& sec, const std::string& key, const UnitTable& units,
                    std::optional<double> def = std::nullopt) const {
        if (!has(sec, key)) {
            if (def) return *def;
            fail(path_, 0, "missing required key " + sec + "." + key + " (" +
                               units.dimension + ")");
        }
        const RawValue& rv = raw(sec, key);
        auto [num, unit] = split_number(sec, key, rv);
        auto it = units.factors.find(unit);
        if (it == units.factors.end())
            fail(path_, rv.line, sec + "." + key + ": unknown " + units.dimension +
                                     " unit '" + unit + "'");
        return num * it->second;
    }

    double dimensionless(const std::string& sec, const std::string& key,
                         std::optional<double> def = std::nullopt) const {
        if (!has(sec, key)) {
            if (def) return *def;
            fail(path_, 0, "missing required key " + sec + "." + key);
        }
        const RawValue& rv = raw(sec, key);
        auto [num, unit] = split_number(sec, key, rv);
        if (!unit.empty())
            fail(path_, rv.line,
                 sec + "." + key + ": dimensionless key must not carry a unit ('" +
                     unit + "')");
        return num;
    }

    // momentum accepts kg*m/s or hbar*k (k from the geometry section)
    double momentum(const std::string& sec, const std::string& key, double hbar_k,
                    std::optional<double> def = std::nullopt) const {
        if (!has(sec, key)) {
            if (def) return *def;
            fail(path_, 0, "missing required key " + sec + "." + key + " (momentum)");
        }
        const RawValue& rv = raw(sec, key);
        auto [num, unit] = split_number(sec, key, rv);
        if (unit == "hbar*k") return num * hbar_k;
        auto it = kMomentum.factors.find(unit);
        if (it == kMomentum.factors.end())
            fail(path_, rv.line,
                 sec + "." + key + ": unknown momentum unit '" + unit +
                     "' (use kg*m/s or hbar*k)");
        return num * it->second;
    }

    std::string word(const std::string& sec, const std::string& key,
                     std::optional<std::string> def = std::nullopt) const {
        if (!has(sec, key)) {
            if (def) return *def;
            fail(path_, 0, "missing required key " + sec + "." + key);
        }
        return raw(sec, key).text;
    }

    long integer(const std::string& sec, const std::string& key, long def) const {
        if (!has(sec, key)) return def;
        const RawValue& rv = raw(sec, key);
        char* end = nullptr;
        const long v = std::strtol(rv.text.c_str(), &end, 10);
        if (end == rv.text.c_str() || *end != '\0')
            fail(path_, rv.line, sec + "." + key + ": expected an integer");
        return v;
    }

    void check_all_used() const {
        static const std::map<std::string, bool> known = {{"species", true},
                                                          {"dilaton", true},
                                                          {"geometry", true},
                                                          {"gradiometer", true},
                                                          {"numerics", true}};
        for (const auto& [sec, entries] : sections_) {
            if (!known.count(sec)) fail(path_, 0, "unknown section [" + sec + "]");
            for (const auto& [key, rv] : entries)
                if (!rv.used)
                    fail(path_, rv.line, "unknown key " + sec + "." + key);
        }
    }

    const std::string& path() const { return path_; }

  private:
    std::pair<double, std::string> split_number(const std::string& sec,
                                                const std::string& key,
                                                const RawValue& rv) const {
        char* end = nullptr;
        const double v = std::strtod(rv.text.c_str(), &end);
        if (end == rv.text.c_str())
            fail(path_, rv.line, sec + "." + key + ": expected a number, got '" +
                                     rv.text + "'");
        return {v, trim(std::string(end))};
    }

    std::map<std::string, Section> sections_;
    std::string path_;
};

}  // namespace

Scenario parse_config_impl(const std::string& text, const std::string& path) {
    const Parsed cfg(text, path);
    Scenario sc;

    // species
    const double eps_g = cfg.dimensionless("species", "eps_g", 0.0);
    const double eps_e = cfg.dimensionless("species", "eps_e", 0.0);
    if (cfg.has("species", "preset")) {
        try {
            sc.species = species_preset(cfg.word("species", "preset"), eps_g, eps_e);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(path + ": species.preset: " + e.what());
        }
    } else {
        sc.species.mean_mass = cfg.quantity("species", "m_bar", kMass);
        sc.species.mass_defect = cfg.quantity("species", "delta_m", kMass, 0.0);
        sc.species.eps_g = eps_g;
        sc.species.eps_e = eps_e;
    }
    try {
        validate(sc.species);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path + ": " + e.what());
    }

    // dilaton
    sc.dilaton.omega_rho = cfg.quantity("dilaton", "omega_rho", kAngularFreq);
    if (!(sc.dilaton.omega_rho > 0.0))
        throw ConfigError(path + ": dilaton.omega_rho must be > 0");
    const bool has_rho0 = cfg.has("dilaton", "rho_0");
    const bool has_rhodm = cfg.has("dilaton", "rho_DM");
    if (has_rho0 == has_rhodm)
        throw ConfigError(path +
                          ": dilaton: exactly one of rho_0 or rho_DM must be given");
    if (has_rho0) {
        sc.dilaton.rho_0 = cfg.dimensionless("dilaton", "rho_0");
    } else {
        sc.rho_dm = cfg.quantity("dilaton", "rho_DM", kDensity);
        sc.dilaton.rho_0 = dilaton_amplitude(sc.dilaton.omega_rho, *sc.rho_dm);
    }
    sc.dilaton.eps_S = cfg.dimensionless("dilaton", "eps_S", 0.0);
    sc.dilaton.phi_S = cfg.quantity("dilaton", "phi_S", kAngle, 0.0);
    const std::string phirho = cfg.word("dilaton", "phi_rho", std::string("averaged"));
    if (phirho == "averaged") {
        sc.phi_rho_averaged = true;
        sc.dilaton.phi_rho = 0.0;
    } else {
        sc.phi_rho_averaged = false;
        sc.dilaton.phi_rho = cfg.quantity("dilaton", "phi_rho", kAngle);
    }

    // geometry
    sc.grad.geom.k = cfg.quantity("geometry", "k", kWavevector);
    sc.grad.geom.T = cfg.quantity("geometry", "T", kTime);
    sc.grad.geom.t0 = cfg.quantity("geometry", "t0", kTime, 0.0);
    sc.grad.geom.z0 = cfg.quantity("geometry", "z0", kLength, 0.0);
    sc.grad.geom.g0 = cfg.quantity("geometry", "g0", kAcceleration, 0.0);
    const double hbar_k = codata().hbar * sc.grad.geom.k;
    sc.grad.geom.p0 = cfg.momentum("geometry", "p0", hbar_k, 0.0);
    const std::string diff =
        cfg.word("geometry", "diffraction", std::string("single_photon"));
    if (diff == "single_photon")
        sc.grad.geom.diffraction = Diffraction::SinglePhoton;
    else if (diff == "raman")
        sc.grad.geom.diffraction = Diffraction::Raman;
    else if (diff == "bragg")
        sc.grad.geom.diffraction = Diffraction::Bragg;
    else
        throw ConfigError(path + ": geometry.diffraction: unknown mode '" + diff +
                          "' (single_photon, raman, bragg)");

    // gradiometer
    sc.grad.L = cfg.quantity("gradiometer", "L", kLength);
    sc.grad.p1 = cfg.momentum("gradiometer", "p1", hbar_k, sc.grad.geom.p0);

    // numerics
    sc.numerics.phi_rho_nodes =
        static_cast<int>(cfg.integer("numerics", "phi_rho_nodes", 256));
    sc.numerics.phi_s_nodes = static_cast<int>(cfg.integer("numerics", "phi_s_nodes", 64));
    sc.numerics.oracle_rel_tol = cfg.dimensionless("numerics", "oracle_rel_tol", 1e-6);
    sc.numerics.signal_rel_tol = cfg.dimensionless("numerics", "signal_rel_tol", 1e-9);
    sc.numerics.timescale_rel_tol =
        cfg.dimensionless("numerics", "timescale_rel_tol", 1e-10);
    sc.numerics.threads = static_cast<int>(cfg.integer("numerics", "threads", 1));
    const std::string braces = cfg.word("numerics", "brace_terms", std::string("off"));
    if (braces == "on")
        sc.numerics.include_brace_terms = true;
    else if (braces == "off")
        sc.numerics.include_brace_terms = false;
    else
        throw ConfigError(path + ": numerics.brace_terms: expected on/off");
    if (sc.numerics.phi_rho_nodes < 8)
        throw ConfigError(path + ": numerics.phi_rho_nodes must be >= 8");
    if (sc.numerics.threads < 1)
        throw ConfigError(path + ": numerics.threads must be >= 1");

    cfg.check_all_used();
    try {
        validate(sc.grad);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return sc;
}

Scenario parse_config(const std::string& text) {
    return parse_config_impl(text, "<config>");
}

Scenario load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_impl(buf.str(), path);
}

std::string dump_config(const Scenario& sc) {
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::ostringstream os;
    os << "[species]\n";
    os << "m_bar = " << num(sc.species.mean_mass) << " kg\n";
    os << "delta_m = " << num(sc.species.mass_defect) << " kg\n";
    os << "eps_g = " << num(sc.species.eps_g) << "\n";
    os << "eps_e = " << num(sc.species.eps_e) << "\n";
    os << "\n[dilaton]\n";
    os << "omega_rho = " << num(sc.dilaton.omega_rho) << " rad/s\n";
    if (sc.phi_rho_averaged)
        os << "phi_rho = averaged\n";
    else
        os << "phi_rho = " << num(sc.dilaton.phi_rho) << " rad\n";
    if (sc.rho_dm)
        os << "rho_DM = " << num(*sc.rho_dm) << " J/m^3\n";
    else
        os << "rho_0 = " << num(sc.dilaton.rho_0) << "\n";
    os << "eps_S = " << num(sc.dilaton.eps_S) << "\n";
    os << "phi_S = " << num(sc.dilaton.phi_S) << " rad\n";
    os << "\n[geometry]\n";
    os << "k = " << num(sc.grad.geom.k) << " rad/m\n";
    os << "T = " << num(sc.grad.geom.T) << " s\n";
    os << "t0 = " << num(sc.grad.geom.t0) << " s\n";
    os << "z0 = " << num(sc.grad.geom.z0) << " m\n";
    os << "p0 = " << num(sc.grad.geom.p0) << " kg*m/s\n";
    os << "g0 = " << num(sc.grad.geom.g0) << " m/s^2\n";
    os << "diffraction = " << diffraction_name(sc.grad.geom.diffraction) << "\n";
    os << "\n[gradiometer]\n";
    os << "L = " << num(sc.grad.L) << " m\n";
    os << "p1 = " << num(sc.grad.p1) << " kg*m/s\n";
    os << "\n[numerics]\n";
    os << "phi_rho_nodes = " << sc.numerics.phi_rho_nodes << "\n";
    os << "phi_s_nodes = " << sc.numerics.phi_s_nodes << "\n";
    os << "oracle_rel_tol = " << num(sc.numerics.oracle_rel_tol) << "\n";
    os << "signal_rel_tol = " << num(sc.numerics.signal_rel_tol) << "\n";
    os << "timescale_rel_tol = " << num(sc.numerics.timescale_rel_tol) << "\n";
    os << "brace_terms = " << (sc.numerics.include_brace_terms ? "on" : "off") << "\n";
    os << "threads = " << sc.numerics.threads << "\n";
    return os.str();
}

}  // namespace dmgrad
