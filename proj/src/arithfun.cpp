#include "popzeta/arithfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace popzeta {

ArithValues arith_values(u64 n) {
    if (n < 1) throw std::domain_error("arith_values: n must be >= 1");
    ArithValues v;
    v.n = n;
    u64 rest = n;
    auto table = primes_upto(static_cast<u64>(std::sqrt(double(n))) + 2);
    for (u64 p : table->primes()) {
        if (p * p > rest) break;
        if (rest % p) continue;
        unsigned e = 0;
        while (rest % p == 0) rest /= p, ++e;
        v.factors.emplace_back(p, e);
    }
    if (rest > 1) v.factors.emplace_back(rest, 1);

    v.nu = static_cast<unsigned>(v.factors.size());
    for (auto [p, e] : v.factors) {
        v.tau *= (e + 1);
        u64 pe1 = p;
        for (unsigned k = 1; k < e; ++k) pe1 *= p;
        v.phi *= pe1 - pe1 / p;
        if (e > 1) v.mu = 0;
    }
    if (v.mu != 0) v.mu = (v.nu % 2 == 0) ? 1 : -1;
    return v;
}

Rat ArithValues::sigma(long a) const {
    if (a == 0) return Rat(Int(tau));
    unsigned long e_abs = static_cast<unsigned long>(a < 0 ? -a : a);
    Int s = 1;
    for (auto [p, e] : factors) {
        // (p^{a(e+1)} - 1) / (p^a - 1)
        Int pa = int_pow(Int(static_cast<unsigned long>(p)), e_abs);
        Int num = int_pow(pa, e + 1) - 1;
        Int den = pa - 1;
        s *= num / den;
    }
    if (a > 0) return Rat(s);
    return Rat(s) / Rat(int_pow(Int(static_cast<unsigned long>(n)), e_abs));
}

int mobius(u64 n) { return arith_values(n).mu; }
u64 euler_phi(u64 n) { return arith_values(n).phi; }
u64 divisor_count(u64 n) { return arith_values(n).tau; }
u64 divisor_sigma1(u64 n) {
    Rat s = arith_values(n).sigma(1);
    return s.get_num().get_ui();
}

std::string IdentityReport::csv_header() { return "identity_id,M,x,a,lhs,rhs,residual,pass"; }

std::string IdentityReport::csv_row() const {
    char buf[64];
    std::string row = identity_id + "," + list_descr + ",";
    std::snprintf(buf, sizeof buf, "%.17g", x);
    row += buf;
    row += ",";
    if (a) {
        std::snprintf(buf, sizeof buf, "%.17g", *a);
        row += buf;
    }
    row += "," + lhs + "," + rhs + ",";
    std::snprintf(buf, sizeof buf, "%.17g", residual);
    row += buf;
    row += pass ? ",1" : ",0";
    return row;
}

CoeffMap dirichlet_convolve(const CoeffMap& a, const CoeffMap& b, const PopulationTable& pop,
                            u64 X) {
    for (auto* m : {&a, &b})
        for (const auto& [n, c] : *m)
            if (c != 0 && !pop.member(n))
                throw std::invalid_argument("dirichlet_convolve: input supported off pop at " +
                                            std::to_string(n));
    CoeffMap out;
    for (const auto& [k, ak] : a) {
        if (k > X || ak == 0) continue;
        for (const auto& [l, bl] : b) {
            if (l > X / k) break;
            if (bl == 0) continue;
            out[k * l] += ak * bl;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) {
            it = out.erase(it);
            continue;
        }
        if (!pop.member(it->first))
            throw std::logic_error("dirichlet_convolve: closure violated at " +
                                   std::to_string(it->first));
        ++it;
    }
    return out;
}

IdentityReport mobius_pair_check(const std::function<double(double)>& f, double support_bound,
                                 const PopulationTable& pop, std::span<const double> xs) {
    if (support_bound > static_cast<double>(pop.bound()))
        throw std::out_of_range("mobius_pair_check: support bound past population table");
    auto mem = pop.members();
    std::vector<int> mu(mem.size());
    for (std::size_t i = 0; i < mem.size(); ++i) mu[i] = mobius(mem[i]);

    auto big_f = [&](double y) {
        double s = 0.0;
        for (u64 k : mem) {
            double t = static_cast<double>(k) * y;
            if (t > support_bound) break;
            s += f(t);
        }
        return s;
    };

    IdentityReport rep;
    rep.identity_id = "mobius_pair";
    rep.list_descr = pop.source().describe();
    double worst = 0.0;
    for (double x : xs) {
        double recon = 0.0;
        for (std::size_t i = 0; i < mem.size(); ++i) {
            double t = static_cast<double>(mem[i]) * x;
            if (t > support_bound) break;
            if (mu[i] == 0) continue;
            recon += mu[i] * big_f(t);
        }
        worst = std::max(worst, std::abs(recon - f(x)));
    }
    rep.x = xs.empty() ? 0.0 : xs.back();
    rep.residual = worst;
    rep.pass = worst == 0.0;
    rep.lhs = "f";
    rep.rhs = "sum mu(k) F(kx)";
    return rep;
}

namespace {

constexpr std::array<SumIdentity, 14> kAll = {
    SumIdentity::phi_pop,      SumIdentity::two_pow_nu,   SumIdentity::mu_count,
    SumIdentity::phi_over_i,   SumIdentity::tau_count,    SumIdentity::nu_count,
    SumIdentity::sigma_a,      SumIdentity::sigma_a_norm, SumIdentity::sigma_harm,
    SumIdentity::tau_harm,     SumIdentity::nu_harm,      SumIdentity::conv_product,
    SumIdentity::sigma_mu,     SumIdentity::tau_mu,
};

// Per-population context shared across the x sweep.
struct SweepCtx {
    const PopulationTable& pop;
    u64 xmax;
    long a;
    std::span<const u64> mem;          // members <= xmax
    std::vector<ArithValues> vals;     // per member
    std::vector<bool> is_prime;        // member is a source prime
    std::vector<Rat> s_prefix;         // S_pop at member prefixes, exponent a
    std::vector<Int> mu_prefix;        // prefix sums over members
    std::vector<Int> tau_prefix;
    std::vector<Int> sigma_prefix;     // sigma_1
    std::vector<Int> id_prefix;        // prefix of i
    std::vector<Rat> scratch;

    SweepCtx(const PopulationTable& p, u64 xm, long aa) : pop(p), xmax(xm), a(aa) {
        if (xm > p.bound()) throw std::out_of_range("identity sweep: x past population bound");
        std::size_t n = p.count_u(xm);
        mem = p.members().subspan(0, n);
        vals.reserve(n);
        is_prime.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            vals.push_back(arith_values(mem[i]));
            is_prime[i] = vals[i].nu == 1 && vals[i].factors[0].second == 1;
        }
        scratch.resize(n);
    }

    std::size_t idx(u64 x) const { return pop.count_u(std::min(x, xmax)); }

    const std::vector<Rat>& s_pref() {
        if (s_prefix.empty()) {
            s_prefix.resize(mem.size() + 1);
            s_prefix[0] = 0;
            for (std::size_t i = 0; i < mem.size(); ++i)
                s_prefix[i + 1] = s_prefix[i] + rat_pow(Rat(Int(mem[i])), -a);
        }
        return s_prefix;
    }
    const std::vector<Int>& pref(std::vector<Int>& store, auto&& weight) {
        if (store.empty()) {
            store.resize(mem.size() + 1);
            store[0] = 0;
            for (std::size_t i = 0; i < mem.size(); ++i) store[i + 1] = store[i] + weight(i);
        }
        return store;
    }
};

std::string fmt_exact(const Int& v) { return v.get_str(); }
std::string fmt_exact(const Rat& v) { return v.get_str(); }

template <typename T>
IdentityReport make_report(SumIdentity id, const SweepCtx& ctx, u64 x, const T& lhs, const T& rhs,
                           bool needs_a) {
    IdentityReport rep;
    rep.identity_id = identity_name(id);
    rep.list_descr = ctx.pop.source().describe();
    rep.x = static_cast<double>(x);
    if (needs_a) rep.a = static_cast<double>(ctx.a);
    rep.lhs = fmt_exact(lhs);
    rep.rhs = fmt_exact(rhs);
    T diff = lhs - rhs;
    rep.pass = diff == 0;
    rep.residual = std::abs(to_double(Rat(diff)));
    return rep;
}

// F(k) for conv_product computed literally from the pop-restricted divisor
// sum with f = g = id.
Int conv_fk(const SweepCtx& ctx, u64 k) {
    Int s = 0;
    for (u64 d : ctx.pop.divisors_in_pop(k)) s += Int(d) * Int(k / d);
    return s;
}

IdentityReport check_at(SumIdentity id, SweepCtx& ctx, u64 x,
                        const std::vector<Int>& lhs_prefix_int,
                        const std::vector<Rat>& lhs_prefix_rat) {
    std::size_t n = ctx.idx(x);
    auto& pop = ctx.pop;

    switch (id) {
        case SumIdentity::phi_pop: {
            Int rhs = 0;
            for (std::size_t i = 0; i < n; ++i)
                rhs += Int(pop.count_u(x / ctx.mem[i])) * Int(ctx.vals[i].phi);
            return make_report(id, ctx, x, lhs_prefix_int[n], rhs, false);
        }
        case SumIdentity::two_pow_nu: {
            Int rhs = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (ctx.vals[i].mu != 0) rhs += Int(pop.count_u(x / ctx.mem[i]));
            return make_report(id, ctx, x, lhs_prefix_int[n], rhs, false);
        }
        case SumIdentity::mu_count: {
            Int rhs = 0;
            for (std::size_t i = 0; i < n; ++i)
                rhs += Int(ctx.vals[i].mu) * Int(pop.count_u(x / ctx.mem[i]));
            return make_report(id, ctx, x, Int(1), rhs, false);
        }
        case SumIdentity::phi_over_i: {
            for (std::size_t i = 0; i < n; ++i)
                ctx.scratch[i] = make_rat(Int(ctx.vals[i].mu) * Int(pop.count_u(x / ctx.mem[i])),
                                          Int(ctx.mem[i]));
            Rat rhs = balanced_sum(std::span<Rat>(ctx.scratch.data(), n));
            return make_report(id, ctx, x, lhs_prefix_rat[n], rhs, false);
        }
        case SumIdentity::tau_count: {
            Int rhs = 0;
            for (std::size_t i = 0; i < n; ++i) rhs += Int(pop.count_u(x / ctx.mem[i]));
            return make_report(id, ctx, x, lhs_prefix_int[n], rhs, false);
        }
        case SumIdentity::nu_count: {
            Int rhs = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (ctx.is_prime[i]) rhs += Int(pop.count_u(x / ctx.mem[i]));
            return make_report(id, ctx, x, lhs_prefix_int[n], rhs, false);
        }
        case SumIdentity::sigma_a: {
            if (ctx.a >= 0) {
                Int rhs = 0;
                for (std::size_t i = 0; i < n; ++i)
                    rhs += Int(pop.count_u(x / ctx.mem[i])) *
                           int_pow(Int(ctx.mem[i]), static_cast<unsigned long>(ctx.a));
                return make_report(id, ctx, x, lhs_prefix_int[n], rhs, true);
            }
            for (std::size_t i = 0; i < n; ++i)
                ctx.scratch[i] =
                    Rat(Int(pop.count_u(x / ctx.mem[i]))) * rat_pow(Rat(Int(ctx.mem[i])), ctx.a);
            Rat rhs = balanced_sum(std::span<Rat>(ctx.scratch.data(), n));
            return make_report(id, ctx, x, lhs_prefix_rat[n], rhs, true);
        }
        case SumIdentity::sigma_a_norm: {
            for (std::size_t i = 0; i < n; ++i)
                ctx.scratch[i] =
                    Rat(Int(pop.count_u(x / ctx.mem[i]))) * rat_pow(Rat(Int(ctx.mem[i])), -ctx.a);
            Rat rhs = balanced_sum(std::span<Rat>(ctx.scratch.data(), n));
            return make_report(id, ctx, x, lhs_prefix_rat[n], rhs, true);
        }
        case SumIdentity::sigma_harm: {
            const auto& sp = ctx.s_pref();
            for (std::size_t i = 0; i < n; ++i) ctx.scratch[i] = sp[ctx.idx(x / ctx.mem[i])];
            Rat rhs = balanced_sum(std::span<Rat>(ctx.scratch.data(), n));
            return make_report(id, ctx, x, lhs_prefix_rat[n], rhs, true);
        }
        case SumIdentity::tau_harm: {
            const auto& sp = ctx.s_pref();
            for (std::size_t i = 0; i < n; ++i)
                ctx.scratch[i] = sp[ctx.idx(x / ctx.mem[i])] * rat_pow(Rat(Int(ctx.mem[i])), -ctx.a);
            Rat rhs = balanced_sum(std::span<Rat>(ctx.scratch.data(), n));
            return make_report(id, ctx, x, lhs_prefix_rat[n], rhs, true);
        }
        case SumIdentity::nu_harm: {
            const auto& sp = ctx.s_pref();
            std::size_t cnt = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (ctx.is_prime[i])
                    ctx.scratch[cnt++] =
                        sp[ctx.idx(x / ctx.mem[i])] * rat_pow(Rat(Int(ctx.mem[i])), -ctx.a);
            Rat rhs = balanced_sum(std::span<Rat>(ctx.scratch.data(), cnt));
            return make_report(id, ctx, x, lhs_prefix_rat[n], rhs, true);
        }
        case SumIdentity::conv_product: {
            const auto& idp = ctx.pref(ctx.id_prefix, [&](std::size_t i) -> Int { return Int(ctx.mem[i]); });
            Int rhs = 0;
            for (std::size_t i = 0; i < n; ++i)
                rhs += Int(ctx.mem[i]) * idp[ctx.idx(x / ctx.mem[i])];
            return make_report(id, ctx, x, lhs_prefix_int[n], rhs, false);
        }
        case SumIdentity::sigma_mu: {
            const auto& mup = ctx.pref(ctx.mu_prefix, [&](std::size_t i) -> Int { return Int(ctx.vals[i].mu); });
            const auto& sgp = ctx.pref(ctx.sigma_prefix, [&](std::size_t i) -> Int {
                return Int(ctx.vals[i].sigma(1).get_num());
            });
            Int rhs1 = 0, rhs2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t j = ctx.idx(x / ctx.mem[i]);
                rhs1 += Int(ctx.vals[i].mu) * sgp[j];
                rhs2 += Int(ctx.vals[i].sigma(1).get_num()) * mup[j];
            }
            IdentityReport rep = make_report(id, ctx, x, lhs_prefix_int[n], rhs1, false);
            if (rhs1 != rhs2) {
                rep.pass = false;
                rep.residual = std::max(rep.residual, std::abs(to_double(Rat(rhs1 - rhs2))));
            }
            return rep;
        }
        case SumIdentity::tau_mu: {
            const auto& mup = ctx.pref(ctx.mu_prefix, [&](std::size_t i) -> Int { return Int(ctx.vals[i].mu); });
            const auto& tap = ctx.pref(ctx.tau_prefix, [&](std::size_t i) -> Int { return Int(ctx.vals[i].tau); });
            Int rhs1 = 0, rhs2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t j = ctx.idx(x / ctx.mem[i]);
                rhs1 += Int(ctx.vals[i].mu) * tap[j];
                rhs2 += Int(ctx.vals[i].tau) * mup[j];
            }
            IdentityReport rep = make_report(id, ctx, x, Int(static_cast<unsigned long>(n)), rhs1, false);
            if (rhs1 != rhs2) {
                rep.pass = false;
                rep.residual = std::max(rep.residual, std::abs(to_double(Rat(rhs1 - rhs2))));
            }
            return rep;
        }
    }
    throw std::domain_error("verify_sum_identity: unknown identity");
}

void build_lhs(SumIdentity id, SweepCtx& ctx, std::vector<Int>& out_int, std::vector<Rat>& out_rat) {
    std::size_t n = ctx.mem.size();
    auto int_lhs = [&](auto&& weight) {
        out_int.resize(n + 1);
        out_int[0] = 0;
        for (std::size_t i = 0; i < n; ++i) out_int[i + 1] = out_int[i] + weight(i);
    };
    auto rat_lhs = [&](auto&& weight) {
        out_rat.resize(n + 1);
        out_rat[0] = 0;
        for (std::size_t i = 0; i < n; ++i) out_rat[i + 1] = out_rat[i] + weight(i);
    };
    switch (id) {
        case SumIdentity::phi_pop:
            int_lhs([&](std::size_t i) -> Int { return Int(ctx.mem[i]); });
            break;
        case SumIdentity::two_pow_nu:
            int_lhs([&](std::size_t i) -> Int { return int_pow(Int(2), ctx.vals[i].nu); });
            break;
        case SumIdentity::mu_count:
            break;  // LHS is the constant 1
        case SumIdentity::phi_over_i:
            rat_lhs([&](std::size_t i) -> Rat { return make_rat(Int(ctx.vals[i].phi), Int(ctx.mem[i])); });
            break;
        case SumIdentity::tau_count:
            int_lhs([&](std::size_t i) -> Int { return Int(ctx.vals[i].tau); });
            break;
        case SumIdentity::nu_count:
            int_lhs([&](std::size_t i) -> Int { return Int(ctx.vals[i].nu); });
            break;
        case SumIdentity::sigma_a:
            if (ctx.a >= 0)
                int_lhs([&](std::size_t i) -> Int { return Int(ctx.vals[i].sigma(ctx.a).get_num()); });
            else
                rat_lhs([&](std::size_t i) -> Rat { return ctx.vals[i].sigma(ctx.a); });
            break;
        case SumIdentity::sigma_a_norm:
        case SumIdentity::sigma_harm:
            rat_lhs([&](std::size_t i) -> Rat {
                return ctx.vals[i].sigma(ctx.a) * rat_pow(Rat(Int(ctx.mem[i])), -ctx.a);
            });
            break;
        case SumIdentity::tau_harm:
            rat_lhs([&](std::size_t i) -> Rat {
                return Rat(Int(ctx.vals[i].tau)) * rat_pow(Rat(Int(ctx.mem[i])), -ctx.a);
            });
            break;
        case SumIdentity::nu_harm:
            rat_lhs([&](std::size_t i) -> Rat {
                return Rat(Int(ctx.vals[i].nu)) * rat_pow(Rat(Int(ctx.mem[i])), -ctx.a);
            });
            break;
        case SumIdentity::conv_product:
            int_lhs([&](std::size_t i) -> Int { return conv_fk(ctx, ctx.mem[i]); });
            break;
        case SumIdentity::sigma_mu:
            int_lhs([&](std::size_t i) -> Int { return Int(ctx.mem[i]); });
            break;
        case SumIdentity::tau_mu:
            break;  // LHS is N_pop(x)
    }
}

}  // namespace

std::span<const SumIdentity> all_sum_identities() { return kAll; }

std::string identity_name(SumIdentity id) {
    switch (id) {
        case SumIdentity::phi_pop: return "phi_pop";
        case SumIdentity::two_pow_nu: return "two_pow_nu";
        case SumIdentity::mu_count: return "mu_count";
        case SumIdentity::phi_over_i: return "phi_over_i";
        case SumIdentity::tau_count: return "tau_count";
        case SumIdentity::nu_count: return "nu_count";
        case SumIdentity::sigma_a: return "sigma_a";
        case SumIdentity::sigma_a_norm: return "sigma_a_norm";
        case SumIdentity::sigma_harm: return "sigma_harm";
        case SumIdentity::tau_harm: return "tau_harm";
        case SumIdentity::nu_harm: return "nu_harm";
        case SumIdentity::conv_product: return "conv_product";
        case SumIdentity::sigma_mu: return "sigma_mu";
        case SumIdentity::tau_mu: return "tau_mu";
    }
    return "?";
}

SumIdentity identity_from_name(const std::string& name) {
    for (SumIdentity id : kAll)
        if (identity_name(id) == name) return id;
    throw std::domain_error("unknown identity id: " + name);
}

IdentityReport verify_sum_identity(SumIdentity id, const PopulationTable& pop, u64 x, long a) {
    if (x < 1 || x > pop.bound()) throw std::out_of_range("verify_sum_identity: x out of range");
    SweepCtx ctx(pop, x, a);
    std::vector<Int> lhs_int;
    std::vector<Rat> lhs_rat;
    build_lhs(id, ctx, lhs_int, lhs_rat);
    return check_at(id, ctx, x, lhs_int, lhs_rat);
}

std::vector<IdentityReport> sweep_sum_identity(SumIdentity id, const PopulationTable& pop,
                                               u64 x_max, long a) {
    SweepCtx ctx(pop, x_max, a);
    std::vector<Int> lhs_int;
    std::vector<Rat> lhs_rat;
    build_lhs(id, ctx, lhs_int, lhs_rat);
    std::vector<IdentityReport> out;
    out.reserve(x_max);
    for (u64 x = 1; x <= x_max; ++x) out.push_back(check_at(id, ctx, x, lhs_int, lhs_rat));
    return out;
}

}  // namespace popzeta
