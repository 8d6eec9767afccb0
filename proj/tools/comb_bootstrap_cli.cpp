// comb-bootstrap: band scans, convergence tables, dispersion curves and the
// square-well study, emitted as deterministic CSV/JSON (plot-ready, no GUI).
//
// Exit codes: 0 success, 2 invalid flags, 3 numeric failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "comb/band_scan.hpp"
#include "comb/dispersion.hpp"
#include "comb/exact_oracle.hpp"
#include "comb/isw.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace comb;

namespace {

// fixed float formatting keeps identical flags -> byte-identical files
std::string g10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

struct Csv {
    std::ofstream out;
    explicit Csv(const fs::path& path) : out(path) {
        if (!out) throw std::runtime_error("cannot open " + path.string());
        out << std::unitbuf;
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    }
};

struct Manifest {
    json config = json::object();
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write(const std::string& command, const fs::path& dir) {
        json m;
        m["command"] = command;
        m["config"] = config;
        m["outputs"] = outputs;
        m["versions"] = {{"comb-bootstrap", std::string(version)}};
        m["timing_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ofstream f(dir / "manifest.json");
        f << m.dump(2) << '\n';
    }
};

std::string min_energy_str(const MinEnergy& m) {
    switch (m.kind) {
        case MinEnergy::Kind::value: return g10(m.value);
        case MinEnergy::Kind::unbounded_below: return "unbounded-below";
        default: return "none-allowed";
    }
}

json min_energy_json(const MinEnergy& m) {
    if (m.kind == MinEnergy::Kind::value) return m.value;
    return min_energy_str(m);
}

Regularization parse_reg(const std::string& s) {
    if (s == "finite-k") return Regularization::finite_k;
    if (s == "zeta") return Regularization::zeta;
    throw CLI::ValidationError("--reg", "must be finite-k or zeta");
}

Rho0Source parse_rho0(const std::string& s) {
    if (s == "finite-k") return Rho0Source::finite_k;
    if (s == "analytic") return Rho0Source::analytic;
    throw CLI::ValidationError("--rho0", "must be analytic or finite-k");
}

struct ScanArgs {
    double a = 2.0, A = 2.0;
    int K = 100, power = 0;
    double e_lo = -2.0, e_hi = 30.0, e_step = 0.005, tol = 1e-9;
    std::string reg = "finite-k", rho0 = "analytic", out = ".";
    bool long_run = false;

    ScanConfig config() const {
        ScanConfig cfg;
        cfg.params = LatticeParams(a, A);
        cfg.K = K;
        cfg.power = power;
        cfg.e_lo = e_lo;
        cfg.e_hi = e_hi;
        cfg.e_step = e_step;
        cfg.tol = tol;
        cfg.reg = parse_reg(reg);
        cfg.rho0_source = parse_rho0(rho0);
        return cfg;
    }

    json config_json() const {
        return {{"a", a},         {"A", A},         {"K", K},
                {"power", power}, {"e_lo", e_lo},   {"e_hi", e_hi},
                {"e_step", e_step}, {"tol", tol},   {"reg", reg},
                {"rho0", rho0},   {"long", long_run}};
    }
};

void add_scan_flags(CLI::App* cmd, ScanArgs& args) {
    cmd->add_option("--a", args.a, "lattice period")->check(CLI::PositiveNumber);
    cmd->add_option("--A", args.A, "barrier strength")->check(CLI::PositiveNumber);
    cmd->add_option("--K", args.K, "mode cutoff")->check(CLI::PositiveNumber);
    cmd->add_option("--power", args.power, "momentum power sigma+tau (0..4)")
        ->check(CLI::Range(0, 4));
    cmd->add_option("--e-lo", args.e_lo, "grid lower bound");
    cmd->add_option("--e-hi", args.e_hi, "grid upper bound");
    cmd->add_option("--e-step", args.e_step, "grid step")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", args.tol, "relative PSD tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--reg", args.reg, "divergent-sum mode: finite-k|zeta");
    cmd->add_option("--rho0", args.rho0, "rho(0) source: analytic|finite-k");
    cmd->add_option("--out", args.out, "output directory");
    cmd->add_flag("--long", args.long_run, "permit minutes-scale runs (K > 200)");
}

void require_long_gate(const ScanArgs& args) {
    if (args.K > 200 && !args.long_run)
        throw CLI::ValidationError("--K", "K > 200 is minutes-scale; pass --long");
}

int cmd_scan(const ScanArgs& args) {
    require_long_gate(args);
    const fs::path dir(args.out);
    fs::create_directories(dir);
    Manifest manifest;
    manifest.config = args.config_json();

    const auto res = scan(args.config());

    {
        Csv csv(dir / "allowed.csv");
        csv.row({"E", "allowed", "min_eig"});
        for (const auto& pt : res.points)
            csv.row({g10(pt.E), pt.skipped ? "skip" : (pt.allowed ? "1" : "0"),
                     g10(pt.min_eig)});
    }
    manifest.outputs.push_back("allowed.csv");

    json spec;
    json bands = json::array();
    for (const auto& b : res.spectrum.allowed)
        bands.push_back({{"index", b.index}, {"lo", b.lo}, {"hi", b.hi}});
    json gaps = json::array();
    for (const auto& g : res.spectrum.gaps)
        gaps.push_back({{"index", g.index}, {"width", g.width}});
    spec["bands"] = bands;
    spec["gaps"] = gaps;
    if (res.spectrum.unbounded_below)
        spec["e_min"] = "unbounded-below";
    else if (res.spectrum.e_min)
        spec["e_min"] = *res.spectrum.e_min;
    else
        spec["e_min"] = nullptr;
    {
        std::ofstream f(dir / "spectrum.json");
        f << spec.dump(2) << '\n';
    }
    manifest.outputs.push_back("spectrum.json");
    manifest.write("scan", dir);

    std::size_t nskip = 0;
    for (const auto& pt : res.points) nskip += pt.skipped ? 1 : 0;
    if (nskip)
        std::cerr << "note: " << nskip << " grid points skipped (pole/solver)\n";
    std::cout << "bands: " << res.spectrum.allowed.size()
              << "  gaps:";
    for (const auto& g : res.spectrum.gaps) std::cout << ' ' << g10(g.width);
    std::cout << "  e_min: "
              << (res.spectrum.unbounded_below
                      ? std::string("unbounded-below")
                      : (res.spectrum.e_min ? g10(*res.spectrum.e_min)
                                            : std::string("none")))
              << '\n';
    return 0;
}

struct Table1Args {
    ScanArgs scan;
    std::vector<int> Ks{2, 5, 10, 20, 50, 100};
    std::vector<int> powers{0};
};

int cmd_table1(const Table1Args& args) {
    if (args.Ks.empty()) throw CLI::ValidationError("--Ks", "K list is empty");
    if (args.powers.empty()) throw CLI::ValidationError("--powers", "power list is empty");
    for (int K : args.Ks)
        if (K > 200 && !args.scan.long_run)
            throw CLI::ValidationError("--Ks", "K > 200 is minutes-scale; pass --long");
    const fs::path dir(args.scan.out);
    fs::create_directories(dir);
    Manifest manifest;
    manifest.config = args.scan.config_json();
    manifest.config["Ks"] = args.Ks;
    manifest.config["powers"] = args.powers;

    const auto params = LatticeParams(args.scan.a, args.scan.A);
    const auto rows = convergence_study(params, args.Ks, args.powers, args.scan.config());

    // analytic reference from the transcendental relation
    const auto bands = exact_band_edges(params, 1.6 * params.mode_energy(4));
    std::vector<double> exact_gaps;
    for (std::size_t b = 0; b + 1 < bands.size() && b < 3; ++b)
        exact_gaps.push_back(bands[b + 1].lo - bands[b].hi);

    {
        Csv csv(dir / "table1.csv");
        csv.row({"source", "power", "K", "gap1", "gap2", "gap3", "e_min"});
        for (const auto& row : rows) {
            std::vector<std::string> cells{"bootstrap", std::to_string(row.power),
                                           std::to_string(row.K)};
            for (std::size_t g = 0; g < 3; ++g)
                cells.push_back(g < row.gaps.size() ? g10(row.gaps[g]) : "");
            cells.push_back(min_energy_str(row.e_min));
            csv.row(cells);
        }
        std::vector<std::string> cells{"analytic", "", ""};
        for (std::size_t g = 0; g < 3; ++g)
            cells.push_back(g < exact_gaps.size() ? g10(exact_gaps[g]) : "");
        cells.push_back(bands.empty() ? "" : g10(bands.front().lo));
        csv.row(cells);
    }
    manifest.outputs.push_back("table1.csv");
    manifest.write("table1", dir);

    for (const auto& row : rows) {
        std::cout << "power " << row.power << " K " << row.K << " gaps";
        for (double g : row.gaps) std::cout << ' ' << g10(g);
        std::cout << " e_min " << min_energy_str(row.e_min) << '\n';
    }
    return 0;
}

struct DispersionArgs {
    double a = 2.0, A = 2.0;
    int band = 1, samples = 200, N = 0;  // N = 0: adaptive truncation
    double e_max = 30.0;
    std::string out = ".";
};

int cmd_dispersion(const DispersionArgs& args) {
    const fs::path dir(args.out);
    fs::create_directories(dir);
    Manifest manifest;
    manifest.config = {{"a", args.a},           {"A", args.A},   {"band", args.band},
                       {"samples", args.samples}, {"N", args.N}, {"e_max", args.e_max}};

    const auto params = LatticeParams(args.a, args.A);
    const auto bands = exact_band_edges(params, args.e_max);
    if (args.band < 1 || args.band > static_cast<int>(bands.size()))
        throw CLI::ValidationError("--band", "band index outside the resolved bands");
    const auto& band = bands[static_cast<std::size_t>(args.band) - 1];

    {
        Csv csv(dir / "dispersion.csv");
        csv.row({"E", "k_series", "cos_ka_series", "cos_ka_exact", "residual"});
        for (int i = 0; i < args.samples; ++i) {
            const double E = band.lo + (band.hi - band.lo) * i / (args.samples - 1);
            const double c = args.N > 0 ? cos_ka_series(E, params, args.N)
                                        : cos_ka_series_adaptive(E, params);
            const double exact = kp_dispersion_rhs(E, params);
            const double k = std::acos(std::clamp(c, -1.0, 1.0)) / params.a;
            csv.row({g10(E), g10(k), g10(c), g10(exact), g10(c - exact)});
        }
    }
    manifest.outputs.push_back("dispersion.csv");
    manifest.write("dispersion", dir);
    std::cout << "band " << args.band << " [" << g10(band.lo) << ", " << g10(band.hi)
              << "] " << args.samples << " samples\n";
    return 0;
}

struct IswArgs {
    double a = 2.0;
    int m = 1, nmax = 3, trunc = 80, grid_points = 201, moments = 8;
    double e_lo = 0.5, e_hi = 25.0, e_step = 0.05;
    std::string out = ".";
};

int cmd_isw(const IswArgs& args) {
    const fs::path dir(args.out);
    fs::create_directories(dir);
    Manifest manifest;
    manifest.config = {{"a", args.a},     {"m", args.m},         {"nmax", args.nmax},
                       {"trunc", args.trunc}, {"grid_points", args.grid_points},
                       {"moments", args.moments}, {"e_lo", args.e_lo},
                       {"e_hi", args.e_hi}, {"e_step", args.e_step}};
    const double a = args.a;

    {
        Csv csv(dir / "isw_moments.csv");
        std::vector<std::string> head{"E"};
        for (int n = 1; n <= args.moments; ++n) head.push_back("X" + std::to_string(n));
        csv.row(head);
        for (int m = 1; m <= 3; ++m) {
            const double E = std::pow(M_PI * m / a, 2);
            std::vector<std::string> cells{g10(E)};
            for (int n = 1; n <= args.moments; ++n) cells.push_back(g10(isw_moment(n, E, a)));
            csv.row(cells);
        }
    }
    manifest.outputs.push_back("isw_moments.csv");

    {
        Csv csv(dir / "isw_density.csv");
        csv.row({"x", "density_modes", "density_exact"});
        const double Em = std::pow(M_PI * args.m / a, 2);
        std::vector<double> re(static_cast<std::size_t>(args.nmax) + 1, 0.0);
        for (int n = 0; n <= args.nmax; ++n)
            re[static_cast<std::size_t>(n)] = isw_fourier_mode(n, Em, a, args.trunc).real();
        for (int i = 0; i < args.grid_points; ++i) {
            const double x = a * i / (args.grid_points - 1);
            double rho = re[0];
            for (int n = 1; n <= args.nmax; ++n)
                rho += 2.0 * re[static_cast<std::size_t>(n)] * std::cos(2.0 * M_PI * n * x / a);
            csv.row({g10(x), g10(rho), g10(isw_density(x, args.m, a))});
        }
    }
    manifest.outputs.push_back("isw_density.csv");

    {
        Csv csv(dir / "quantization_residuals.csv");
        csv.row({"E", "residual"});
        for (double E = args.e_lo; E <= args.e_hi + args.e_step / 2; E += args.e_step)
            csv.row({g10(E), g10(isw_quantization_residual(E, a, args.nmax, args.trunc))});
    }
    manifest.outputs.push_back("quantization_residuals.csv");
    manifest.write("isw", dir);
    std::cout << "square-well study written to " << dir.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kronig-Penney bootstrap"};
    app.require_subcommand(1);

    ScanArgs scan_args;
    auto* scan_cmd = app.add_subcommand("scan", "PSD band scan over an energy grid");
    add_scan_flags(scan_cmd, scan_args);

    Table1Args t1_args;
    auto* t1_cmd = app.add_subcommand("table1", "gap convergence table over K (and powers)");
    add_scan_flags(t1_cmd, t1_args.scan);
    t1_cmd->add_option("--Ks", t1_args.Ks, "mode cutoffs");
    t1_cmd->add_option("--powers", t1_args.powers, "momentum powers")
        ->check(CLI::Range(0, 4));

    DispersionArgs disp_args;
    auto* disp_cmd = app.add_subcommand("dispersion", "Bloch dispersion from the momentum series");
    disp_cmd->add_option("--a", disp_args.a)->check(CLI::PositiveNumber);
    disp_cmd->add_option("--A", disp_args.A)->check(CLI::PositiveNumber);
    disp_cmd->add_option("--band", disp_args.band, "band index (1-based)");
    disp_cmd->add_option("--samples", disp_args.samples)->check(CLI::Range(2, 1000000));
    disp_cmd->add_option("--N", disp_args.N, "fixed series truncation (0 = adaptive)");
    disp_cmd->add_option("--e-max", disp_args.e_max)->check(CLI::PositiveNumber);
    disp_cmd->add_option("--out", disp_args.out);

    IswArgs isw_args;
    auto* isw_cmd = app.add_subcommand("isw", "infinite square well bootstrap study");
    isw_cmd->add_option("--a", isw_args.a, "well width")->check(CLI::PositiveNumber);
    isw_cmd->add_option("--m", isw_args.m, "quantum number")->check(CLI::PositiveNumber);
    isw_cmd->add_option("--nmax", isw_args.nmax, "modes checked")->check(CLI::Range(1, 6));
    isw_cmd->add_option("--trunc", isw_args.trunc, "moment series truncation");
    isw_cmd->add_option("--grid-points", isw_args.grid_points)->check(CLI::Range(2, 1000000));
    isw_cmd->add_option("--moments", isw_args.moments)->check(CLI::Range(1, 40));
    isw_cmd->add_option("--e-lo", isw_args.e_lo);
    isw_cmd->add_option("--e-hi", isw_args.e_hi);
    isw_cmd->add_option("--e-step", isw_args.e_step)->check(CLI::PositiveNumber);
    isw_cmd->add_option("--out", isw_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*scan_cmd) return cmd_scan(scan_args);
        if (*t1_cmd) return cmd_table1(t1_args);
        if (*disp_cmd) return cmd_dispersion(disp_args);
        if (*isw_cmd) return cmd_isw(isw_args);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
