#include "comb/band_scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

namespace comb {

namespace {

int resolve_threads(int requested) {
    int n = requested > 0 ? requested
                          : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* cap = std::getenv("COMB_BOOTSTRAP_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1) n = std::min(n, c);
    }
    return n;
}

// run fn(i) for i in [0, count) on a small worker pool, deterministic output
// via index-addressed storage in the callee
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || count < 4) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

bool point_allowed(double E, const ScanConfig& cfg, double* min_eig) {
    const auto M = build_matrix(cfg.power, cfg.K, E, cfg.params, cfg.reg, cfg.rho0_source);
    const auto r = is_psd(M, cfg.tol);
    if (min_eig) *min_eig = r.min_eig;
    return r.psd;
}

// bisect the allowed/disallowed boundary between e0 (state s0) and e1;
// points that error keep the bracket side of e1
double refine_boundary(double e0, double e1, bool s0, const ScanConfig& cfg,
                       double resolution) {
    for (int it = 0; it < 64 && std::abs(e1 - e0) > resolution; ++it) {
        const double mid = 0.5 * (e0 + e1);
        bool s;
        try {
            s = point_allowed(mid, cfg, nullptr);
        } catch (const std::runtime_error&) {
            s = !s0;
        }
        if (s == s0)
            e0 = mid;
        else
            e1 = mid;
    }
    return 0.5 * (e0 + e1);
}

}  // namespace

std::vector<double> scan_grid(const ScanConfig& cfg) {
    if (!(cfg.e_lo < cfg.e_hi)) throw std::invalid_argument("scan: e_lo must be < e_hi");
    if (!(cfg.e_step > 0.0)) throw std::invalid_argument("scan: e_step must be > 0");
    std::vector<double> grid;
    const int n = static_cast<int>(std::floor((cfg.e_hi - cfg.e_lo) / cfg.e_step + 0.5)) + 1;
    grid.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double e = cfg.e_lo + i * cfg.e_step;
        if (e > cfg.e_hi + cfg.e_step / 2) break;
        if (near_pole(e, cfg.params, cfg.K, 1e-9)) e += cfg.e_step / 10.0;
        grid.push_back(e);
    }
    return grid;
}

ScanResult scan(const ScanConfig& cfg) {
    const auto grid = scan_grid(cfg);
    const int n = static_cast<int>(grid.size());
    std::vector<ScanPoint> pts(static_cast<std::size_t>(n));
    parallel_for(n, resolve_threads(cfg.threads), [&](int i) {
        ScanPoint& pt = pts[static_cast<std::size_t>(i)];
        pt.E = grid[static_cast<std::size_t>(i)];
        try {
            pt.allowed = point_allowed(pt.E, cfg, &pt.min_eig);
        } catch (const std::runtime_error&) {
            pt.skipped = true;
            pt.allowed = false;
        }
    });

    ScanResult out;
    out.points = std::move(pts);

    // maximal allowed runs
    int i = 0;
    while (i < n) {
        if (!out.points[static_cast<std::size_t>(i)].allowed) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < n && out.points[static_cast<std::size_t>(j) + 1].allowed) ++j;
        double lo = out.points[static_cast<std::size_t>(i)].E;
        double hi = out.points[static_cast<std::size_t>(j)].E;
        if (cfg.refine_edges) {
            if (i > 0)
                lo = refine_boundary(out.points[static_cast<std::size_t>(i) - 1].E, lo,
                                     false, cfg, cfg.e_step / 100.0);
            if (j + 1 < n)
                hi = refine_boundary(hi, out.points[static_cast<std::size_t>(j) + 1].E,
                                     true, cfg, cfg.e_step / 100.0);
        }
        out.spectrum.allowed.push_back(
            {lo, hi, static_cast<int>(out.spectrum.allowed.size()) + 1});
        i = j + 1;
    }
    for (std::size_t b = 0; b + 1 < out.spectrum.allowed.size(); ++b)
        out.spectrum.gaps.push_back(
            {static_cast<int>(b) + 1,
             out.spectrum.allowed[b + 1].lo - out.spectrum.allowed[b].hi});

    if (!out.spectrum.allowed.empty()) {
        if (out.points.front().allowed)
            out.spectrum.unbounded_below = true;  // grid floor itself is allowed
        else
            out.spectrum.e_min = out.spectrum.allowed.front().lo;
    }
    return out;
}

MinEnergy min_allowed_energy(const ScanConfig& cfg) {
    if (cfg.power < 1)
        throw std::invalid_argument("min_allowed_energy: power 0 is unbounded below");
    const auto grid = scan_grid(cfg);
    int first = -1;
    for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
        bool ok = false;
        try {
            ok = point_allowed(grid[static_cast<std::size_t>(i)], cfg, nullptr);
        } catch (const std::runtime_error&) {
            continue;
        }
        if (ok) {
            first = i;
            break;
        }
    }
    if (first < 0) return {MinEnergy::Kind::none_allowed, 0.0};
    if (first == 0) return {MinEnergy::Kind::unbounded_below, grid.front()};
    const double refined =
        refine_boundary(grid[static_cast<std::size_t>(first) - 1],
                        grid[static_cast<std::size_t>(first)], false, cfg,
                        cfg.e_step / 100.0);
    return {MinEnergy::Kind::value, refined};
}

double x2_moment(double E, const LatticeParams& p, int K) {
    if (K < 1) throw std::invalid_argument("x2_moment: K must be >= 1");
    if (near_pole(E, p, K)) throw pole_error("x2_moment: E coincides with a mode energy");
    const double r0 = rho0_analytic(E, p);
    const double pref = p.a * p.a / (2.0 * M_PI * M_PI);
    double s = 0.0;
    for (int m = K; m >= 1; --m) {
        const double cm = p.A * r0 / (E - p.mode_energy(m));
        s += cm * pref * (m % 2 == 0 ? 1.0 : -1.0) / (double(m) * m);
    }
    return p.a * p.a / 12.0 + s;
}

double heisenberg_min_energy(const LatticeParams& p, int K, const ScanConfig& grid) {
    const auto product_ok = [&](double E) {
        const double p2 = E - p.A * rho0_analytic(E, p);
        return x2_moment(E, p, K) * p2 >= 0.25;
    };
    ScanConfig cfg = grid;
    cfg.params = p;
    cfg.K = K;
    const auto energies = scan_grid(cfg);
    int first = -1;
    for (int i = 0; i < static_cast<int>(energies.size()); ++i) {
        try {
            if (product_ok(energies[static_cast<std::size_t>(i)])) {
                first = i;
                break;
            }
        } catch (const std::runtime_error&) {
            continue;
        }
    }
    if (first < 0)
        throw numeric_error("heisenberg_min_energy: no grid point satisfies the bound");
    if (first == 0) return energies.front();
    double lo = energies[static_cast<std::size_t>(first) - 1];
    double hi = energies[static_cast<std::size_t>(first)];
    for (int it = 0; it < 64 && hi - lo > cfg.e_step / 100.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        bool ok;
        try {
            ok = product_ok(mid);
        } catch (const std::runtime_error&) {
            ok = false;
        }
        (ok ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<ConvergenceRow> convergence_study(const LatticeParams& params,
                                              const std::vector<int>& Ks,
                                              const std::vector<int>& powers,
                                              ScanConfig base) {
    if (Ks.empty()) throw std::invalid_argument("convergence_study: empty K list");
    if (powers.empty()) throw std::invalid_argument("convergence_study: empty power list");
    std::vector<ConvergenceRow> rows;
    for (int power : powers) {
        for (int K : Ks) {
            ScanConfig cfg = base;
            cfg.params = params;
            cfg.K = K;
            cfg.power = power;
            cfg.refine_edges = true;
            const auto res = scan(cfg);
            ConvergenceRow row;
            row.K = K;
            row.power = power;
            for (std::size_t g = 0; g < res.spectrum.gaps.size() && g < 3; ++g)
                row.gaps.push_back(res.spectrum.gaps[g].width);
            if (res.spectrum.unbounded_below)
                row.e_min = {MinEnergy::Kind::unbounded_below, cfg.e_lo};
            else if (res.spectrum.e_min)
                row.e_min = {MinEnergy::Kind::value, *res.spectrum.e_min};
            else
                row.e_min = {MinEnergy::Kind::none_allowed, 0.0};
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace comb
