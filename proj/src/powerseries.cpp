#include "popzeta/powerseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace popzeta {

CoefficientSeries CoefficientSeries::monomial(unsigned cap, unsigned k, Rat coeff) {
    CoefficientSeries s(cap);
    if (k <= cap) s.c_[k] = std::move(coeff);
    return s;
}

CoefficientSeries& CoefficientSeries::operator+=(const CoefficientSeries& o) {
    for (unsigned k = 0; k < std::min(c_.size(), o.c_.size()); ++k) c_[k] += o.c_[k];
    return *this;
}

CoefficientSeries& CoefficientSeries::operator-=(const CoefficientSeries& o) {
    for (unsigned k = 0; k < std::min(c_.size(), o.c_.size()); ++k) c_[k] -= o.c_[k];
    return *this;
}

CoefficientSeries operator*(const CoefficientSeries& a, const CoefficientSeries& b) {
    unsigned cap = std::min(a.cap(), b.cap());
    CoefficientSeries out(cap);
    for (unsigned i = 0; i <= cap; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; i + j <= cap; ++j) {
            if (b.c_[j] == 0) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

CoefficientSeries& CoefficientSeries::operator*=(const Rat& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

CoefficientSeries CoefficientSeries::substituted_power(unsigned n) const {
    if (n == 0) throw std::domain_error("substituted_power: exponent must be >= 1");
    CoefficientSeries out(cap());
    for (unsigned k = 0; k <= cap() / n; ++k) out.c_[k * n] = c_[k];
    return out;
}

CoefficientSeries CoefficientSeries::derivative() const {
    CoefficientSeries out(cap());
    for (unsigned k = 1; k <= cap(); ++k) out.c_[k - 1] = c_[k] * Rat(k);
    return out;
}

CoefficientSeries CoefficientSeries::truncated(unsigned new_cap) const {
    CoefficientSeries out(new_cap);
    for (unsigned k = 0; k <= std::min(new_cap, cap()); ++k) out.c_[k] = c_[k];
    return out;
}

std::string CoefficientSeries::csv() const {
    std::string out = "k,numerator,denominator\n";
    for (unsigned k = 0; k <= cap(); ++k) {
        if (c_[k] == 0) continue;
        out += std::to_string(k) + "," + c_[k].get_num().get_str() + "," +
               c_[k].get_den().get_str() + "\n";
    }
    return out;
}

CoefficientSeries g_pop_series(const PopulationTable& pop, unsigned D) {
    if (D < 1) throw std::domain_error("g_pop_series: D must be >= 1");
    CoefficientSeries s(D);
    for (u64 m : pop.members()) {
        if (m > D) break;
        s.at(static_cast<unsigned>(m)) = 1;
    }
    return s;
}

CoefficientSeries l_pop_series(const PopulationTable& pop, unsigned D) {
    if (D < 1) throw std::domain_error("l_pop_series: D must be >= 1");
    CoefficientSeries s(D);
    for (u64 m : pop.members()) {
        if (m > D) break;
        s.at(static_cast<unsigned>(m)) = make_rat(Int(1), Int(m));
    }
    return s;
}

CoefficientSeries log_inv_one_minus_pow(unsigned n, unsigned D) {
    CoefficientSeries s(D);
    for (unsigned m = 1; n * m <= D; ++m) s.at(n * m) = make_rat(Int(1), Int(m));
    return s;
}

std::vector<SeriesIdentity> all_series_identities() {
    return {SeriesIdentity::mu_l_pop,  SeriesIdentity::l_pop_complement,
            SeriesIdentity::mu_g_pop,  SeriesIdentity::phi_g_pop,
            SeriesIdentity::lambert_tau, SeriesIdentity::lambert_sigma};
}

std::string series_identity_name(SeriesIdentity id) {
    switch (id) {
        case SeriesIdentity::mu_l_pop: return "mu_l_pop";
        case SeriesIdentity::l_pop_complement: return "l_pop_complement";
        case SeriesIdentity::mu_g_pop: return "mu_g_pop";
        case SeriesIdentity::phi_g_pop: return "phi_g_pop";
        case SeriesIdentity::lambert_tau: return "lambert_tau";
        case SeriesIdentity::lambert_sigma: return "lambert_sigma";
    }
    return "?";
}

SeriesIdentity series_identity_from_name(const std::string& name) {
    for (SeriesIdentity id : all_series_identities())
        if (series_identity_name(id) == name) return id;
    throw std::domain_error("unknown series identity id: " + name);
}

namespace {

// Largest coefficient-wise |difference|, as a double, for reporting.
double series_residual(const CoefficientSeries& a, const CoefficientSeries& b) {
    double worst = 0.0;
    for (unsigned k = 0; k <= std::min(a.cap(), b.cap()); ++k)
        worst = std::max(worst, std::abs(to_double(a[k] - b[k])));
    return worst;
}

IdentityReport series_report(SeriesIdentity id, const ArithmeticalList& M, unsigned D,
                             const CoefficientSeries& lhs, const CoefficientSeries& rhs) {
    IdentityReport rep;
    rep.identity_id = series_identity_name(id);
    rep.list_descr = M.describe();
    rep.x = D;
    rep.pass = lhs == rhs;
    rep.residual = series_residual(lhs, rhs);
    rep.lhs = "series[" + std::to_string(D) + "]";
    rep.rhs = "series[" + std::to_string(D) + "]";
    return rep;
}

}  // namespace

IdentityReport verify_series_identity(SeriesIdentity id, const ArithmeticalList& M, unsigned D) {
    if (D < 2) throw std::domain_error("verify_series_identity: D must be >= 2");
    PopulationTable pop(M, D);
    auto mem = pop.members();

    switch (id) {
        case SeriesIdentity::mu_l_pop: {
            CoefficientSeries lhs(D);
            CoefficientSeries l = l_pop_series(pop, D);
            for (u64 n : mem) {
                int mu = mobius(n);
                if (mu == 0) continue;
                CoefficientSeries t = l.substituted_power(static_cast<unsigned>(n));
                t *= make_rat(Int(mu), Int(n));
                lhs += t;
            }
            return series_report(id, M, D, lhs, CoefficientSeries::monomial(D, 1));
        }
        case SeriesIdentity::l_pop_complement: {
            ArithmeticalList comp = M.complement();
            PopulationTable cpop(comp, D);
            CoefficientSeries rhs(D);
            for (u64 n : cpop.members()) {
                int mu = mobius(n);
                if (mu == 0) continue;
                CoefficientSeries t = log_inv_one_minus_pow(static_cast<unsigned>(n), D);
                t *= make_rat(Int(mu), Int(n));
                rhs += t;
            }
            return series_report(id, M, D, l_pop_series(pop, D), rhs);
        }
        case SeriesIdentity::mu_g_pop: {
            CoefficientSeries lhs(D);
            CoefficientSeries g = g_pop_series(pop, D);
            for (u64 n : mem) {
                int mu = mobius(n);
                if (mu == 0) continue;
                CoefficientSeries t = g.substituted_power(static_cast<unsigned>(n));
                t *= Rat(mu);
                lhs += t;
            }
            return series_report(id, M, D, lhs, CoefficientSeries::monomial(D, 1));
        }
        case SeriesIdentity::phi_g_pop: {
            CoefficientSeries lhs(D);
            CoefficientSeries g = g_pop_series(pop, D);
            for (u64 n : mem) {
                CoefficientSeries t = g.substituted_power(static_cast<unsigned>(n));
                t *= Rat(Int(euler_phi(n)));
                lhs += t;
            }
            // x d/dx G has coefficient k c_k at degree k.
            CoefficientSeries rhs(D);
            for (unsigned k = 1; k <= D; ++k) rhs.at(k) = g[k] * Rat(k);
            return series_report(id, M, D, lhs, rhs);
        }
        case SeriesIdentity::lambert_tau:
        case SeriesIdentity::lambert_sigma: {
            bool weighted = id == SeriesIdentity::lambert_sigma;
            CoefficientSeries lhs(D);
            for (u64 n : mem) {
                // x^n/(1-x^n) = sum_m x^{nm}
                for (u64 m = n; m <= D; m += n)
                    lhs.at(static_cast<unsigned>(m)) += weighted ? Rat(Int(n)) : Rat(1);
            }
            // Right side split: tau/sigma on pop, divisor counts restricted to
            // pop elsewhere, both from the divisor oracle.
            CoefficientSeries rhs(D);
            for (unsigned n = 1; n <= D; ++n) {
                if (pop.member(n)) {
                    rhs.at(n) = weighted ? arith_values(n).sigma(1) : Rat(Int(divisor_count(n)));
                } else {
                    Int b = 0;
                    for (u64 d : pop.divisors_in_pop(n)) b += weighted ? Int(d) : Int(1);
                    rhs.at(n) = Rat(b);
                }
            }
            return series_report(id, M, D, lhs, rhs);
        }
    }
    throw std::domain_error("verify_series_identity: unknown identity");
}

IdentityReport bivariate_product_check(const ArithmeticalList& M, const Rat& a, const Rat& b,
                                       unsigned D) {
    if (abs(a) >= 1 || abs(b) >= 1)
        throw std::domain_error("bivariate_product_check: requires |a| < 1 and |b| < 1");

    // The declared tolerance covers the degree-D truncation of the product
    // side. The divisor-sum side carries terms a^d b^{n/d} of total exponent
    // >= 2 sqrt(n); it is summed out far enough that its own tail
    // (E+2) max^E / (1-max)^2 with E = 2 sqrt(n) sits below an eighth of
    // that tolerance.
    Rat big_early = std::max(abs(a), abs(b));
    u64 rhs_cap = D;
    if (big_early != 0) {
        double mx = to_double(big_early);
        double L = -std::log(mx);
        double E = D + 1.0;
        for (int it = 0; it < 4; ++it)
            E = D + 1.0 + (std::log(E + 2.0) + std::log(16.0 / (1.0 - mx))) / L;
        rhs_cap = std::max<u64>(D, static_cast<u64>(E * E / 4.0) + 1);
    }
    PopulationTable pop(M, std::max<u64>(rhs_cap, 2));

    auto geom = [&](const Rat& q) {
        Rat s = 0;
        for (u64 m : pop.members()) {
            if (m > D) break;
            s += rat_pow(q, static_cast<long>(m));
        }
        return s;
    };
    Rat lhs = geom(a) * geom(b);

    Rat rhs = 0;
    for (u64 m : pop.members()) {
        if (m > rhs_cap) break;
        for (u64 d = 1; d * d <= m; ++d) {
            if (m % d) continue;
            rhs += rat_pow(a, static_cast<long>(d)) * rat_pow(b, static_cast<long>(m / d));
            if (d != m / d)
                rhs += rat_pow(a, static_cast<long>(m / d)) * rat_pow(b, static_cast<long>(d));
        }
    }

    Rat bound = Rat(2) * rat_pow(big_early, static_cast<long>(D) + 1) / (Rat(1) - big_early);

    IdentityReport rep;
    rep.identity_id = "g_pop_product";
    rep.list_descr = M.describe();
    rep.x = D;
    rep.lhs = lhs.get_str();
    rep.rhs = rhs.get_str();
    Rat diff = abs(lhs - rhs);
    rep.residual = to_double(diff);
    rep.pass = diff <= bound;
    return rep;
}

}  // namespace popzeta
