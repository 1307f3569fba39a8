#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "popzeta/population.hpp"
#include "popzeta/rational.hpp"

namespace popzeta {

// Prime factorization plus the classical multiplicative functions at n.
struct ArithValues {
    u64 n = 1;
    std::vector<std::pair<u64, unsigned>> factors;  // (p, exponent), ascending
    int mu = 1;        // Moebius
    u64 phi = 1;       // Euler totient
    u64 tau = 1;       // divisor count
    unsigned nu = 0;   // distinct prime factors

    // sigma_a(n) = sum of d^a over d | n; exact for any integer a
    // (negative a gives sigma_{|a|}(n) / n^{|a|}).
    Rat sigma(long a) const;
};

ArithValues arith_values(u64 n);

int mobius(u64 n);
u64 euler_phi(u64 n);
u64 divisor_count(u64 n);
u64 divisor_sigma1(u64 n);

// One verified identity instance. For exact identities pass <=> residual
// is exactly zero; float identities compare against `tol`.
struct IdentityReport {
    std::string identity_id;
    std::string list_descr;
    double x = 0;
    std::optional<double> a;
    std::string lhs, rhs;
    double residual = 0;
    bool pass = false;

    // identity_id,M,x,a,lhs,rhs,residual,pass
    std::string csv_row() const;
    static std::string csv_header();
};

// Sparse coefficient map n -> coefficient, supported on pop ∩ [1, X].
using CoeffMap = std::map<u64, Rat>;

// Dirichlet product gamma_n = sum_{kl=n} a_k b_l, truncated at X. Inputs
// must vanish off pop; the output provably does too, and this is asserted.
CoeffMap dirichlet_convolve(const CoeffMap& a, const CoeffMap& b, const PopulationTable& pop,
                            u64 X);

// Round-trip check of the Moebius transform pair F(x) = sum f(kx) over pop,
// f(x) = sum mu(k) F(kx). Returns the max residual over the sampled xs.
IdentityReport mobius_pair_check(const std::function<double(double)>& f, double support_bound,
                                 const PopulationTable& pop, std::span<const double> xs);

// The fourteen pop-restricted summation identities.
enum class SumIdentity {
    phi_pop,          // sum i           = sum N(x/i) Phi(i)
    two_pow_nu,       // sum 2^nu(i)     = sum N(x/i) |mu(i)|
    mu_count,         // 1               = sum N(x/i) mu(i)
    phi_over_i,       // sum Phi(i)/i    = sum N(x/i) mu(i)/i
    tau_count,        // sum tau(i)      = sum N(x/i)
    nu_count,         // sum nu(i)       = sum over primes p of N(x/p)
    sigma_a,          // sum sigma_a(i)  = sum N(x/i) i^a
    sigma_a_norm,     // sum sigma_a(i)/i^a = sum N(x/i)/i^a
    sigma_harm,       // sum sigma_a(i)/i^a = sum S(x/i;a)
    tau_harm,         // sum tau(i)/i^a  = sum S(x/i;a)/i^a
    nu_harm,          // sum nu(i)/i^a   = sum over primes p of S(x/p;a)/p^a
    conv_product,     // sum (f*g)(i)    = sum f(i) * (sum_{j<=x/i} g(j)), f=g=id
    sigma_mu,         // sum i = sum mu(i) Sg(x/i) = sum sigma(i) Smu(x/i)
    tau_mu,           // N(x)  = sum mu(i) St(x/i) = sum tau(i)  Smu(x/i)
};

std::span<const SumIdentity> all_sum_identities();
std::string identity_name(SumIdentity id);
SumIdentity identity_from_name(const std::string& name);

IdentityReport verify_sum_identity(SumIdentity id, const PopulationTable& pop, u64 x, long a = 1);

// Sweep one identity over every integer x in [1, x_max]; far cheaper than
// x_max independent calls. Reports are returned per x.
std::vector<IdentityReport> sweep_sum_identity(SumIdentity id, const PopulationTable& pop,
                                               u64 x_max, long a = 1);

}  // namespace popzeta
