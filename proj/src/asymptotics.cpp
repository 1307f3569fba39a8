#include "popzeta/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace popzeta {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Fill constant and the oscillation band over the upper half of the grid.
void finish(AsymptoticFit& fit) {
    if (fit.estimates.empty()) return;
    fit.constant = fit.estimates.back();
    std::size_t from = fit.estimates.size() / 2;
    fit.band_lo = fit.band_hi = fit.estimates[from];
    for (std::size_t i = from; i < fit.estimates.size(); ++i) {
        fit.band_lo = std::min(fit.band_lo, fit.estimates[i]);
        fit.band_hi = std::max(fit.band_hi, fit.estimates[i]);
    }
}

unsigned reason_of(const ArithmeticalList& M, const char* who) {
    if (!M.is_arithmetical())
        throw std::domain_error(std::string(who) + ": requires an arithmetical list (reason r)");
    return M.reason();
}

// 8-point Gauss-Legendre on [a, b].
double gauss8(const std::function<double(double)>& f, double a, double b) {
    static const double xs[] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                0.9602898564975363};
    static const double ws[] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                0.1012285362903763};
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
    return s * h;
}

}  // namespace

std::string AsymptoticFit::csv() const {
    std::string out = "x,observed,model,constant_estimate\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out += fmt(grid[i]) + "," + fmt(observed[i]) + "," + fmt(model[i]) + "," +
               fmt(estimates[i]) + "\n";
    return out;
}

std::string AsymptoticFit::summary() const {
    std::string out = "constant,band_lo,band_hi,grid_max\n";
    out += fmt(constant) + "," + fmt(band_lo) + "," + fmt(band_hi) + "," +
           fmt(grid.empty() ? 0.0 : grid.back()) + "\n";
    return out;
}

std::vector<double> geometric_grid(double lo, double hi, int per_decade) {
    if (!(lo > 0 && hi >= lo) || per_decade < 1)
        throw std::domain_error("geometric_grid: bad range");
    std::vector<double> g;
    double step = std::pow(10.0, 1.0 / per_decade);
    for (double x = lo; x < hi * (1.0 - 1e-12); x *= step) g.push_back(x);
    g.push_back(hi);
    return g;
}

AsymptoticFit mertens_fit(ArithmeticalList& M, std::span<const double> grid) {
    unsigned r = reason_of(M, "mertens_fit");
    if (grid.empty() || grid.front() < 3.0)
        throw std::domain_error("mertens_fit: grid must start at x >= 3");
    u64 xmax = static_cast<u64>(grid.back());
    M.ensure(xmax);
    auto primes = M.members(xmax);

    AsymptoticFit fit;
    fit.list_descr = M.describe();
    fit.quantity = "mertens_gamma";
    double logprod = 0.0;  // ln prod (1 - 1/p)^{-1}
    std::size_t i = 0;
    for (double x : grid) {
        while (i < primes.size() && static_cast<double>(primes[i]) <= x) {
            logprod -= std::log1p(-1.0 / static_cast<double>(primes[i]));
            ++i;
        }
        double est = logprod - std::log(std::log(x)) / r;
        fit.grid.push_back(x);
        fit.observed.push_back(logprod);
        fit.estimates.push_back(est);
    }
    finish(fit);
    for (double x : fit.grid) fit.model.push_back(std::log(std::log(x)) / r + fit.constant);
    return fit;
}

AsymptoticFit lnp_over_p(ArithmeticalList& M, std::span<const double> grid) {
    unsigned r = reason_of(M, "lnp_over_p");
    if (grid.empty()) throw std::domain_error("lnp_over_p: empty grid");
    u64 xmax = static_cast<u64>(grid.back());
    M.ensure(xmax);
    auto primes = M.members(xmax);

    AsymptoticFit fit;
    fit.list_descr = M.describe();
    fit.quantity = "lnp_over_p_residual";
    double sum = 0.0;
    std::size_t i = 0;
    for (double x : grid) {
        while (i < primes.size() && static_cast<double>(primes[i]) <= x) {
            double p = static_cast<double>(primes[i]);
            sum += std::log(p) / p;
            ++i;
        }
        fit.grid.push_back(x);
        fit.observed.push_back(sum);
        fit.estimates.push_back(sum - std::log(x) / r);
    }
    finish(fit);
    for (double x : fit.grid) fit.model.push_back(std::log(x) / r + fit.constant);
    return fit;
}

AsymptoticFit one_over_p(ArithmeticalList& M, std::span<const double> grid) {
    unsigned r = reason_of(M, "one_over_p");
    if (grid.empty() || grid.front() < 3.0)
        throw std::domain_error("one_over_p: grid must start at x >= 3");
    u64 xmax = static_cast<u64>(grid.back());
    M.ensure(xmax);
    auto primes = M.members(xmax);

    AsymptoticFit fit;
    fit.list_descr = M.describe();
    fit.quantity = "one_over_p_b";
    double sum = 0.0;
    std::size_t i = 0;
    for (double x : grid) {
        while (i < primes.size() && static_cast<double>(primes[i]) <= x) {
            sum += 1.0 / static_cast<double>(primes[i]);
            ++i;
        }
        fit.grid.push_back(x);
        fit.observed.push_back(sum);
        fit.estimates.push_back(sum - std::log(std::log(x)) / r);
    }
    finish(fit);
    for (double x : fit.grid) fit.model.push_back(std::log(std::log(x)) / r + fit.constant);
    return fit;
}

AsymptoticFit estimate_A(ArithmeticalList& M, std::span<const double> grid,
                         const PopulationTable& pop) {
    unsigned r = reason_of(M, "estimate_A");
    if (grid.back() > static_cast<double>(pop.bound()))
        throw std::out_of_range("estimate_A: grid past population table bound");

    AsymptoticFit fit;
    fit.list_descr = M.describe();
    fit.quantity = "A_density";
    fit.exploratory = true;
    for (double x : grid) {
        double n = static_cast<double>(pop.count(x));
        double lx = std::log(x);
        double est = n * lx / (x * std::pow(lx, 1.0 / r));
        fit.grid.push_back(x);
        fit.observed.push_back(n);
        fit.estimates.push_back(est);
    }
    finish(fit);
    for (double x : fit.grid) {
        double lx = std::log(x);
        fit.model.push_back(fit.constant * x * std::pow(lx, 1.0 / r) / lx);
    }
    return fit;
}

AsymptoticFit mesch_check(const PopulationTable& pop, std::span<const double> grid, double A_est) {
    unsigned r = pop.source().reason();
    if (grid.back() > static_cast<double>(pop.bound()))
        throw std::out_of_range("mesch_check: grid past population table bound");

    AsymptoticFit fit;
    fit.list_descr = pop.source().describe();
    fit.quantity = "harmonic_ratio";
    auto mem = pop.members();
    double s = 0.0;
    std::size_t i = 0;
    for (double x : grid) {
        while (i < mem.size() && static_cast<double>(mem[i]) <= x) {
            s += 1.0 / static_cast<double>(mem[i]);
            ++i;
        }
        double model = r * A_est * std::pow(std::log(x), 1.0 / r);
        fit.grid.push_back(x);
        fit.observed.push_back(s);
        fit.model.push_back(model);
        fit.estimates.push_back(s / model);
    }
    finish(fit);
    return fit;
}

SigExpResult sigexp_check(const PopulationTable& pop, std::span<const double> x_grid,
                          double A_est) {
    unsigned r = pop.source().reason();
    auto mem = pop.members();

    SigExpResult out;
    out.fit.list_descr = pop.source().describe();
    out.fit.quantity = "laplace_ratio";
    for (double x : x_grid) {
        if (static_cast<double>(pop.bound()) < 40.0 / x)
            throw std::out_of_range("sigexp_check: table bound below 40/x");

        double direct = 0.0;
        for (u64 n : mem) {
            double t = static_cast<double>(n) * x;
            if (t > 45.0) break;
            direct += std::exp(-t);
        }
        // x int_1^inf N_pop(t) e^{-tx} dt, piecewise exact over the steps.
        double integral = 0.0;
        for (std::size_t j = 0; j < mem.size(); ++j) {
            double lo = std::exp(-static_cast<double>(mem[j]) * x);
            double hi = (j + 1 < mem.size()) ? std::exp(-static_cast<double>(mem[j + 1]) * x) : 0.0;
            integral += static_cast<double>(j + 1) * (lo - hi);
        }
        out.identity_residual.push_back(std::abs(direct - integral) / direct);

        double li = std::log(1.0 / x);
        double model = A_est / x * std::pow(li, 1.0 / r) / li;
        out.fit.grid.push_back(x);
        out.fit.observed.push_back(direct);
        out.fit.model.push_back(model);
        out.fit.estimates.push_back(direct / model);
    }
    finish(out.fit);
    return out;
}

namespace {

AsymptoticFit series_integral_impl(const std::function<u64(u64)>& next_member,
                                   const std::function<double(double)>& f, u64 n_max,
                                   const std::string& descr) {
    // Reject non-decreasing f by sampling.
    double prev = f(1.0);
    if (!(prev > 0)) throw std::invalid_argument("series_integral_constant: f must be positive");
    for (double t = 2.0; t <= static_cast<double>(n_max); t *= 2.0) {
        double v = f(t);
        if (v > prev) throw std::invalid_argument("series_integral_constant: f must be decreasing");
        prev = v;
    }

    AsymptoticFit fit;
    fit.list_descr = descr;
    fit.quantity = "series_integral_C";
    std::vector<double> checkpoints = geometric_grid(100.0, static_cast<double>(n_max));
    std::size_t ci = 0;
    double u = 0.0;
    for (u64 i = next_member(0); i != 0 && i <= n_max; i = next_member(i)) {
        double d = static_cast<double>(i);
        while (ci < checkpoints.size() && d > checkpoints[ci]) {
            fit.grid.push_back(checkpoints[ci]);
            fit.observed.push_back(u);
            fit.estimates.push_back(u);
            ++ci;
        }
        u += f(d) - gauss8(f, d, d + 1.0);
    }
    // Flush remaining checkpoints with the final value.
    while (ci < checkpoints.size()) {
        fit.grid.push_back(checkpoints[ci]);
        fit.observed.push_back(u);
        fit.estimates.push_back(u);
        ++ci;
    }
    finish(fit);
    fit.model.assign(fit.grid.size(), fit.constant);
    return fit;
}

}  // namespace

AsymptoticFit series_integral_constant(const PopulationTable& pop,
                                       const std::function<double(double)>& f, u64 n_max) {
    if (n_max > pop.bound())
        throw std::out_of_range("series_integral_constant: n_max past table bound");
    auto mem = pop.members();
    auto next = [mem](u64 cur) -> u64 {
        auto it = std::upper_bound(mem.begin(), mem.end(), cur);
        return it == mem.end() ? 0 : *it;
    };
    return series_integral_impl(next, f, n_max, pop.source().describe());
}

AsymptoticFit series_integral_constant(const std::function<double(double)>& f, u64 n_max) {
    auto next = [](u64 cur) -> u64 { return cur + 1; };
    return series_integral_impl(next, f, n_max, "N*");
}

}  // namespace popzeta
