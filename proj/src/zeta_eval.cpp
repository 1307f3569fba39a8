#include "popzeta/zeta_eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace popzeta {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex cpow_inv(u64 p, Complex s) {  // p^{-s}
    return std::exp(-s * std::log(static_cast<double>(p)));
}

double require_sigma(Complex s, double min_sigma, const char* who) {
    double sigma = s.real();
    if (!(sigma > min_sigma)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s: requires Re(s) > %g", who, min_sigma);
        throw std::domain_error(buf);
    }
    return sigma;
}

// Tail of sum over primes > P of p^{-sigma}, by the integral heuristic
// int_P^inf t^{-sigma} dt / ln(P).
double eta_tail(u64 P, double sigma) {
    double p = static_cast<double>(P);
    return std::pow(p, 1.0 - sigma) / ((sigma - 1.0) * std::log(p));
}

std::string fmt_complex(Complex z) {
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    }
    return buf;
}

IdentityReport complex_report(const std::string& id, const std::string& descr, Complex s,
                              Complex lhs, Complex rhs, double budget) {
    IdentityReport rep;
    rep.identity_id = id;
    rep.list_descr = descr;
    rep.x = s.real();
    if (s.imag() != 0.0) rep.a = s.imag();
    rep.lhs = fmt_complex(lhs);
    rep.rhs = fmt_complex(rhs);
    rep.residual = std::abs(lhs - rhs);
    rep.pass = rep.residual <= budget;
    return rep;
}

}  // namespace

EvalResult eta(ArithmeticalList& M, Complex s, const EvalConfig& cfg) {
    double sigma = require_sigma(s, 1.0, "eta");
    M.ensure(cfg.prime_cutoff);
    Complex sum = 0.0;
    for (u64 p : M.members(cfg.prime_cutoff)) sum += cpow_inv(p, s);
    return {sum, eta_tail(cfg.prime_cutoff, sigma), cfg};
}

EvalResult eta_derivative(ArithmeticalList& M, Complex s, const EvalConfig& cfg) {
    double sigma = require_sigma(s, 1.0, "eta_derivative");
    M.ensure(cfg.prime_cutoff);
    Complex sum = 0.0;
    for (u64 p : M.members(cfg.prime_cutoff)) {
        double lp = std::log(static_cast<double>(p));
        sum -= lp * cpow_inv(p, s);
    }
    // ln(t) cancels the prime density, leaving int_P^inf t^{-sigma} dt.
    double P = static_cast<double>(cfg.prime_cutoff);
    return {sum, std::pow(P, 1.0 - sigma) / (sigma - 1.0), cfg};
}

EvalResult zeta_partial(ArithmeticalList& M, Complex s, ZetaMethod method,
                        const EvalConfig& cfg) {
    double sigma = require_sigma(s, 1.0, "zeta_partial");
    if (method == ZetaMethod::euler_product) {
        M.ensure(cfg.prime_cutoff);
        Complex log_z = 0.0;
        for (u64 p : M.members(cfg.prime_cutoff)) log_z -= std::log(1.0 - cpow_inv(p, s));
        Complex value = std::exp(log_z);
        return {value, std::abs(value) * eta_tail(cfg.prime_cutoff, sigma), cfg};
    }
    PopulationTable pop(M, cfg.series_cutoff);
    return zeta_partial(pop, s, cfg);
}

EvalResult zeta_partial(const PopulationTable& pop, Complex s, const EvalConfig& cfg) {
    double sigma = require_sigma(s, 1.0, "zeta_partial");
    auto mem = pop.members();
    Complex sum = 0.0;
    for (std::size_t i = mem.size(); i-- > 0;) sum += cpow_inv(mem[i], s);
    // Tail from the empirical member density near the cutoff.
    u64 N = pop.bound();
    double density =
        static_cast<double>(pop.count_u(N) - pop.count_u(N / 2)) / (static_cast<double>(N) / 2.0);
    double tail = density * std::pow(static_cast<double>(N), 1.0 - sigma) / (sigma - 1.0);
    return {sum, tail, cfg};
}

EvalResult w_regularized(ArithmeticalList& M, Complex s, const EvalConfig& cfg) {
    double sigma = require_sigma(s, 0.5, "w_regularized");
    M.ensure(cfg.prime_cutoff);
    Complex log_w = 0.0;
    for (u64 p : M.members(cfg.prime_cutoff)) {
        Complex z = cpow_inv(p, s);
        log_w -= std::log(1.0 - z) + z;
    }
    Complex value = std::exp(log_w);
    // Each omitted log factor is ~ p^{-2s}/2.
    double P = static_cast<double>(cfg.prime_cutoff);
    double tail = 0.5 * std::pow(P, 1.0 - 2.0 * sigma) / ((2.0 * sigma - 1.0) * std::log(P));
    return {value, std::abs(value) * tail, cfg};
}

EvalResult w_shift(ArithmeticalList& M, Complex s, const EvalConfig& cfg) {
    double sigma = require_sigma(s, 0.0, "w_shift");
    (void)sigma;
    unsigned r = M.reason();  // throws for non-arithmetical lists
    unsigned r0 = M.first_index();
    if (r == 1) return {Complex(0.0, 0.0), 0.0, cfg};

    // Block n compares the n-th primes of all r shifted lists against the
    // n-th member of M: sum_j p_{1+j+nr}^{-s} - r p_{r0+nr}^{-s}.
    auto table = primes_upto(cfg.prime_cutoff + cfg.prime_cutoff / 8 + 64);
    auto primes = table->primes();
    Complex sum = 0.0;
    double last_block = 0.0;
    std::size_t n = 0;
    while (true) {
        std::size_t hi = n * static_cast<std::size_t>(r) + r - 1;  // index of p_{r+nr}
        if (hi >= primes.size()) break;
        Complex block = -static_cast<double>(r) * cpow_inv(primes[r0 - 1 + n * r], s);
        for (unsigned j = 0; j < r; ++j) block += cpow_inv(primes[j + n * r], s);
        bool past_cutoff = primes[hi] > cfg.prime_cutoff;
        if (past_cutoff) {
            last_block = std::abs(block);  // first omitted block
            break;
        }
        sum += block;
        last_block = std::abs(block);
        ++n;
    }
    // The omitted blocks share a sign, so the first one alone underestimates
    // the tail; add the integral of the block envelope |s| (r-1)/2 t^{-s-1}.
    double P = static_cast<double>(cfg.prime_cutoff);
    double envelope = std::abs(s) * 0.5 * (r - 1) * std::pow(P, -sigma) / sigma;
    return {sum, last_block + envelope, cfg};
}

EvalResult g_k(Complex s, unsigned k, const EvalConfig& cfg) {
    if (k < 1) throw std::domain_error("g_k: k must be >= 1");
    unsigned m = std::max(1u, cfg.weierstrass_order);
    double sigma = require_sigma(s, 1.0 / (m + 1), "g_k");
    if (k == 1) return {Complex(1.0, 0.0), 0.0, cfg};

    auto table = primes_upto(cfg.prime_cutoff);
    auto primes = table->primes();

    auto log_w_factor = [&](Complex z) {
        // ln W_m(z) = Log(1-z) + sum_{l<=m} z^l / l
        Complex acc = std::log(1.0 - z);
        Complex zl = 1.0;
        for (unsigned l = 1; l <= m; ++l) {
            zl *= z;
            acc += zl / static_cast<double>(l);
        }
        return acc;
    };

    Complex log_g = 0.0;
    for (unsigned i = 2; i <= k; ++i) {
        // alpha_n = p_{1+(n-1)k}, beta_n = p_{i+(n-1)k}
        for (std::size_t n = 0;; ++n) {
            std::size_t ai = n * k, bi = i - 1 + n * k, ani = (n + 1) * k;
            if (bi >= primes.size() || primes[bi] > cfg.prime_cutoff) break;
            u64 alpha = primes[ai], beta = primes[bi];
            if (!(alpha <= beta && (ani >= primes.size() || beta <= primes[ani])))
                throw std::logic_error("g_k: interleaving violated");
            Complex za = cpow_inv(alpha, s), zb = cpow_inv(beta, s);
            log_g += log_w_factor(za) - log_w_factor(zb);
            Complex zal = 1.0, zbl = 1.0;
            for (unsigned l = 1; l <= m; ++l) {
                zal *= za;
                zbl *= zb;
                log_g -= (zal - zbl) / static_cast<double>(l);
            }
        }
    }
    Complex value = std::exp(log_g);
    double P = static_cast<double>(cfg.prime_cutoff);
    double tail = std::abs(s) * k * std::pow(P, -sigma) / sigma;
    double mp1 = static_cast<double>(m + 1);
    if (mp1 * sigma > 1.0)
        tail += k * std::pow(P, 1.0 - mp1 * sigma) / ((mp1 * sigma - 1.0) * std::log(P));
    return {value, std::abs(value) * tail, cfg};
}

IdentityReport weierstrass_split_check(ArithmeticalList& M, Complex s, const EvalConfig& cfg) {
    require_sigma(s, 1.0, "weierstrass_split_check");
    EvalResult z = zeta_partial(M, s, ZetaMethod::euler_product, cfg);
    EvalResult w = w_regularized(M, s, cfg);
    EvalResult e = eta(M, s, cfg);
    Complex rhs = w.value * std::exp(e.value);
    double budget = z.err + w.err * std::abs(std::exp(e.value)) + std::abs(rhs) * e.err + 1e-12;
    return complex_report("weierstrass_split", M.describe(), s, z.value, rhs, budget);
}

IdentityReport shift_decomposition_check(ArithmeticalList& M, Complex s, const EvalConfig& cfg) {
    require_sigma(s, 1.0, "shift_decomposition_check");
    unsigned r = M.reason();
    ArithmeticalList all = ArithmeticalList::all_primes();
    EvalResult e1 = eta(all, s, cfg);
    EvalResult em = eta(M, s, cfg);
    EvalResult w = w_shift(M, s, cfg);
    Complex rhs = static_cast<double>(r) * em.value + w.value;
    double budget = e1.err + r * em.err + w.err + 1e-12;
    return complex_report("shift_decomposition", M.describe(), s, e1.value, rhs, budget);
}

IdentityReport g_k_factor_check(unsigned k, Complex s, const EvalConfig& cfg) {
    require_sigma(s, 1.0, "g_k_factor_check");
    ArithmeticalList mk = ArithmeticalList::make(1, k);
    EvalResult zk = zeta_partial(mk, s, ZetaMethod::euler_product, cfg);
    EvalResult g = g_k(s, k, cfg);
    Complex lhs = riemann_zeta(s);
    Complex rhs = g.value * std::pow(zk.value, static_cast<double>(k));
    double rel = g.err / std::abs(g.value) + k * zk.err / std::abs(zk.value);
    double budget = std::abs(rhs) * rel + 1e-10;
    return complex_report("g_k_factor_k" + std::to_string(k), "P", s, lhs, rhs, budget);
}

Complex riemann_zeta(Complex s) {
    if (s == Complex(1.0, 0.0)) throw std::domain_error("riemann_zeta: pole at s = 1");
    // Euler-Maclaurin with N terms and the first Bernoulli corrections.
    constexpr int N = 64;
    static const double B[] = {1.0 / 6,      -1.0 / 30,     1.0 / 42,      -1.0 / 30,
                               5.0 / 66,     -691.0 / 2730, 7.0 / 6,       -3617.0 / 510,
                               43867.0 / 798, -174611.0 / 330};
    Complex sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    double lnN = std::log(static_cast<double>(N));
    Complex Ns = std::exp(-s * lnN);  // N^{-s}
    sum += static_cast<double>(N) * Ns / (s - 1.0) + 0.5 * Ns;
    Complex poch = s;          // s (s+1) ... rising
    double fact = 2.0;         // (2j)!
    Complex npow = Ns / static_cast<double>(N);  // N^{-s-1}
    for (int j = 1; j <= 10; ++j) {
        sum += B[j - 1] / fact * poch * npow;
        // advance to the next correction term
        poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        fact *= (2 * j + 1) * (2 * j + 2);
        npow /= static_cast<double>(N) * static_cast<double>(N);
    }
    return sum;
}

Complex gamma_fn(Complex s) {
    // Lanczos, g = 7, 9 coefficients.
    static const double c[] = {0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
                               771.32342877765313,   -176.61502916214059,  12.507343278686905,
                               -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (s.real() < 0.5) {
        // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return kPi / (std::sin(kPi * s) * gamma_fn(1.0 - s));
    }
    s -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (s + static_cast<double>(i));
    Complex t = s + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

IdentityReport log_mobius_check(ArithmeticalList& M, Complex s, const EvalConfig& cfg) {
    require_sigma(s, 1.0, "log_mobius_check");
    EvalResult lhs = eta(M, s, cfg);
    Complex rhs = 0.0;
    double err = lhs.err;
    for (int n = 1; n <= 300; ++n) {
        int mu = mobius(static_cast<u64>(n));
        if (mu == 0) continue;
        EvalResult z = zeta_partial(M, Complex(n, 0) * s, ZetaMethod::euler_product, cfg);
        Complex term = std::log(z.value) * (static_cast<double>(mu) / n);
        rhs += term;
        err += z.err / (std::abs(z.value) * n);
        if (std::abs(std::log(z.value)) < 1e-17) break;
    }
    return complex_report("log_mobius", M.describe(), s, lhs.value, rhs, err + 1e-12);
}

EvalResult pi_log_integral(Complex s, u64 x_cut, const EvalConfig& cfg) {
    double sigma = require_sigma(s, 1.0, "pi_log_integral");
    if (x_cut < 3) throw std::domain_error("pi_log_integral: x_cut must be >= 3");
    auto table = primes_upto(x_cut);
    auto primes = table->primes();

    // Antiderivative of ln(t) t^{-s-1}: F(t) = -(s ln t + 1) / (s^2 t^s).
    auto F = [&](double t) {
        return -(s * std::log(t) + 1.0) / (s * s) * std::exp(-s * std::log(t));
    };

    Complex integral = 0.0;
    u64 count = 0;
    double prev = 2.0;
    for (u64 p : primes) {
        if (p > x_cut) break;
        if (count > 0) integral += static_cast<double>(count) * (F(static_cast<double>(p)) - F(prev));
        prev = static_cast<double>(p);
        ++count;
    }
    integral += static_cast<double>(count) * (F(static_cast<double>(x_cut)) - F(prev));

    // pi(t) <= t tail: int_X^inf ln(t) t^{-sigma} dt.
    double X = static_cast<double>(x_cut);
    double tail = ((sigma - 1.0) * std::log(X) + 1.0) /
                  ((sigma - 1.0) * (sigma - 1.0) * std::pow(X, sigma - 1.0));
    return {integral, tail, cfg};
}

IdentityReport eta_derivative_integral_check(Complex s, u64 x_cut, const EvalConfig& cfg) {
    ArithmeticalList all = ArithmeticalList::all_primes();
    EvalResult d = eta_derivative(all, s, cfg);
    EvalResult e = eta(all, s, cfg);
    EvalResult integral = pi_log_integral(s, x_cut, cfg);
    Complex lhs = d.value - e.value / s;
    Complex rhs = -s * integral.value;
    double budget = d.err + e.err / std::abs(s) + std::abs(s) * integral.err + 1e-12;
    return complex_report("eta_derivative_integral", "P", s, lhs, rhs, budget);
}

namespace {

// Adaptive Simpson for complex-valued integrands.
struct Quad {
    const std::function<Complex(double)>& f;
    double tol;
    int max_depth = 40;
    long evals = 0;

    Complex simpson(double a, double b, Complex fa, Complex fm, Complex fb) const {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    Complex run(double a, double b) {
        Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
        evals += 3;
        return refine(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, max_depth);
    }

    Complex refine(double a, double b, Complex fa, Complex fm, Complex fb, Complex whole,
                   double eps, int depth) {
        double m = 0.5 * (a + b);
        Complex fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
        evals += 2;
        Complex left = simpson(a, m, fa, fl, fm), right = simpson(m, b, fm, fr, fb);
        Complex delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * eps || depth <= 0) {
            if (depth <= 0 && std::abs(delta) > 1000.0 * eps)
                throw std::runtime_error("quadrature refinement failed near t = " +
                                         std::to_string(m));
            return left + right + delta / 15.0;
        }
        return refine(a, m, fa, fl, fm, left, 0.5 * eps, depth - 1) +
               refine(m, b, fm, fr, fb, right, 0.5 * eps, depth - 1);
    }
};

}  // namespace

IdentityReport gamma_integral_check(ArithmeticalList& M, Complex s, const EvalConfig& cfg) {
    double sigma = require_sigma(s, 1.0, "gamma_integral_check");

    // Small-t evaluation uses inclusion-exclusion over squarefree complement
    // products; the k-cutoff must fit the configured series bound.
    ArithmeticalList comp = M.complement();
    comp.ensure(cfg.series_cutoff);
    auto sf = squarefree_products(comp.members(cfg.series_cutoff), cfg.series_cutoff);

    PopulationTable pop(M, 2048);
    auto mem = pop.members();

    constexpr double kExpCut = 45.0;  // e^{-45} is below double noise
    double t_split = 0.05;
    double t_min = kExpCut / static_cast<double>(cfg.series_cutoff);

    auto g_exp = [&](double t) -> double {
        double kmax = kExpCut / t;
        if (t >= t_split) {
            double sum = 0.0;
            for (u64 n : mem) {
                if (static_cast<double>(n) > kmax) break;
                sum += std::exp(-static_cast<double>(n) * t);
            }
            return sum;
        }
        double sum = 0.0;
        for (auto [k, mu] : sf) {
            if (static_cast<double>(k) > kmax) break;
            sum += mu / std::expm1(static_cast<double>(k) * t);
        }
        return sum;
    };

    // t in [t_min, 1] on a log axis, then [1, 50] directly.
    double u_max = std::log(1.0 / t_min);
    std::function<Complex(double)> f_log = [&](double u) {
        double t = std::exp(-u);
        return g_exp(t) * std::exp(-u * s);
    };
    std::function<Complex(double)> f_lin = [&](double t) {
        return g_exp(t) * std::exp((s - 1.0) * std::log(t));
    };
    Quad q1{f_log, cfg.quad_tol};
    Quad q2{f_lin, cfg.quad_tol};
    Complex integral = q1.run(0.0, u_max) + q2.run(1.0, 50.0);

    double head = std::pow(t_min, sigma - 1.0) / (sigma - 1.0);

    EvalResult z = zeta_partial(M, s, ZetaMethod::euler_product, cfg);
    Complex gamma = gamma_fn(s);
    Complex rhs = gamma * z.value;
    double budget = head + 64.0 * cfg.quad_tol + std::abs(gamma) * z.err + 1e-11 * std::abs(rhs);
    return complex_report("gamma_integral", M.describe(), s, integral, rhs, budget);
}

IdentityReport abel_integral_check(ArithmeticalList& M, Complex s, u64 X, const EvalConfig& cfg) {
    double sigma = require_sigma(s, 1.0, "abel_integral_check");
    PopulationTable pop(M, X);
    auto mem = pop.members();

    // s int over each step [m_j, m_{j+1}) where N_pop = j.
    Complex integral = 0.0;
    for (std::size_t j = 0; j < mem.size(); ++j) {
        Complex lo = cpow_inv(mem[j], s);
        Complex hi = (j + 1 < mem.size()) ? cpow_inv(mem[j + 1], s)
                                          : std::exp(-s * std::log(static_cast<double>(X)));
        integral += static_cast<double>(j + 1) * (lo - hi);
    }

    EvalResult z = zeta_partial(M, s, ZetaMethod::euler_product, cfg);
    double tail = std::abs(s) * std::pow(static_cast<double>(X), 1.0 - sigma) / (sigma - 1.0);
    double budget = tail + z.err + 1e-12;
    return complex_report("abel_integral", M.describe(), s, integral, z.value, budget);
}

EvalResult perron_estimate(ArithmeticalList& M, double x, double sigma, double T,
                           const EvalConfig& cfg) {
    if (x == std::floor(x)) throw std::domain_error("perron_estimate: x must not be an integer");
    if (!(sigma > 1.0)) throw std::domain_error("perron_estimate: requires sigma > 1");
    M.ensure(cfg.prime_cutoff);
    auto primes = M.members(cfg.prime_cutoff);

    double dt = 0.02;
    long steps = static_cast<long>(std::ceil(2.0 * T / dt));
    dt = 2.0 * T / static_cast<double>(steps);

    // March p^{-it} along the grid by per-prime rotations.
    std::vector<double> pw(primes.size());  // p^{-sigma}
    std::vector<Complex> u(primes.size()), rot(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        double lp = std::log(static_cast<double>(primes[i]));
        pw[i] = std::exp(-sigma * lp);
        u[i] = std::exp(Complex(0.0, T * lp));        // at t = -T
        rot[i] = std::exp(Complex(0.0, -dt * lp));
    }
    double lx = std::log(x);
    Complex acc = 0.0;
    for (long j = 0; j <= steps; ++j) {
        double t = -T + dt * static_cast<double>(j);
        Complex z = 1.0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            z /= 1.0 - pw[i] * u[i];
            u[i] *= rot[i];
        }
        Complex sv(sigma, t);
        Complex term = z * std::exp(sv * lx) / sv;
        double w = (j == 0 || j == steps) ? 0.5 : 1.0;
        acc += w * term;
    }
    Complex value = acc * dt / (2.0 * kPi);
    double err = std::pow(x, sigma) / T;  // O(x^sigma / T) truncation
    return {Complex(value.real(), 0.0), err, cfg};
}

ZetaKPath zeta_k_path(unsigned k, std::span<const Complex> path, const EvalConfig& cfg) {
    if (path.empty()) throw std::domain_error("zeta_k_path: empty path");
    if (!(path[0].imag() == 0.0 && path[0].real() > 1.0))
        throw std::domain_error("zeta_k_path: anchor must be real with s0 > 1");

    ZetaKPath out;
    Complex h_prev = 0.0;
    for (std::size_t j = 0; j < path.size(); ++j) {
        Complex s = path[j];
        Complex z = riemann_zeta(s);
        if (std::abs(z) < 1e-12)
            throw std::runtime_error("zeta_k_path: zeta estimate vanishes on path");
        EvalResult g = g_k(s, k, cfg);
        Complex h = std::log(z) - std::log(g.value);
        if (j == 0) {
            h = Complex(h.real(), 0.0);  // anchor real positive
        } else {
            double turns = std::round((h_prev.imag() - h.imag()) / (2.0 * kPi));
            h += Complex(0.0, 2.0 * kPi * turns);
            if (std::abs(h - h_prev) >= kPi / 4.0)
                throw std::runtime_error("zeta_k_path: path too coarse for branch tracking");
        }
        h_prev = h;
        Complex zk = std::exp(h / static_cast<double>(k));
        double err = std::abs(zk) * (g.err / std::abs(g.value)) / k;
        out.values.push_back({zk, err, cfg});
        bool real_pt = s.imag() == 0.0 && s.real() > 1.0;
        double est = real_pt
                         ? zk.real() * std::pow(s.real() - 1.0, 1.0 / static_cast<double>(k))
                         : std::numeric_limits<double>::quiet_NaN();
        out.a_k_estimates.push_back(est);
        if (real_pt) out.a_k_stabilized = est;
    }
    return out;
}

}  // namespace popzeta
