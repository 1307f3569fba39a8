#pragma once

#include <string>
#include <vector>

#include "popzeta/arithfun.hpp"
#include "popzeta/population.hpp"
#include "popzeta/rational.hpp"

namespace popzeta {

// Truncated formal power series over exact rationals, coefficients c_0..c_D.
// All arithmetic truncates at the degree cap.
class CoefficientSeries {
public:
    explicit CoefficientSeries(unsigned cap) : c_(cap + 1) {}
    static CoefficientSeries monomial(unsigned cap, unsigned k, Rat coeff = Rat(1));

    unsigned cap() const { return static_cast<unsigned>(c_.size() - 1); }
    const Rat& operator[](unsigned k) const { return c_.at(k); }
    Rat& at(unsigned k) { return c_.at(k); }

    CoefficientSeries& operator+=(const CoefficientSeries& o);
    CoefficientSeries& operator-=(const CoefficientSeries& o);
    friend CoefficientSeries operator+(CoefficientSeries a, const CoefficientSeries& b) {
        return a += b;
    }
    friend CoefficientSeries operator-(CoefficientSeries a, const CoefficientSeries& b) {
        return a -= b;
    }
    friend CoefficientSeries operator*(const CoefficientSeries& a, const CoefficientSeries& b);
    CoefficientSeries& operator*=(const Rat& s);

    // x -> x^n substitution (coefficients move to multiples of n).
    CoefficientSeries substituted_power(unsigned n) const;
    // Formal derivative, still capped at the same degree.
    CoefficientSeries derivative() const;
    CoefficientSeries truncated(unsigned new_cap) const;

    bool operator==(const CoefficientSeries& o) const { return c_ == o.c_; }

    // One "k,numerator,denominator" row per nonzero coefficient.
    std::string csv() const;

private:
    std::vector<Rat> c_;
};

// G_pop(q) = sum of q^k over pop members k <= D.
CoefficientSeries g_pop_series(const PopulationTable& pop, unsigned D);
// l_pop(x) = sum of x^k / k over pop members k <= D.
CoefficientSeries l_pop_series(const PopulationTable& pop, unsigned D);
// ln(1/(1-x^n)) = sum over m >= 1 of x^{nm}/m, truncated at D.
CoefficientSeries log_inv_one_minus_pow(unsigned n, unsigned D);

enum class SeriesIdentity {
    mu_l_pop,          // sum mu(n)/n l_pop(x^n) = x
    l_pop_complement,  // l_pop(x) = sum over complement pop of mu(n)/n ln(1/(1-x^n))
    mu_g_pop,          // sum mu(n) G_pop(x^n) = x
    phi_g_pop,         // sum Phi(n) G_pop(x^n) = x G_pop'(x)
    lambert_tau,       // sum x^n/(1-x^n) = sum tau(n) x^n + sum_{n not in pop} B_n x^n
    lambert_sigma,     // sum n x^n/(1-x^n) = sum sigma(n) x^n + ...
};

std::vector<SeriesIdentity> all_series_identities();
std::string series_identity_name(SeriesIdentity id);
SeriesIdentity series_identity_from_name(const std::string& name);

IdentityReport verify_series_identity(SeriesIdentity id, const ArithmeticalList& M, unsigned D);

// G_pop(a) G_pop(b) truncated at degree D vs the divisor-sum expansion
// sum over pop members n of (sum_{d|n} a^d b^{n/d}); exact rationals,
// residual against the tail bound 2 max(|a|,|b|)^{D+1} / (1 - max(|a|,|b|)).
IdentityReport bivariate_product_check(const ArithmeticalList& M, const Rat& a, const Rat& b,
                                       unsigned D);

}  // namespace popzeta
