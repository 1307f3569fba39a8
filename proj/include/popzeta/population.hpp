#pragma once

#include <span>
#include <vector>

#include "popzeta/primes.hpp"
#include "popzeta/rational.hpp"

namespace popzeta {

// pop(M) intersected with [1, X]: every positive integer whose prime factors
// all lie in M, sorted ascending. 1 is always a member (empty product) and
// the table is closed under division.
class PopulationTable {
public:
    PopulationTable(ArithmeticalList source, u64 bound);

    u64 bound() const { return bound_; }
    const ArithmeticalList& source() const { return source_; }
    std::span<const u64> members() const { return members_; }

    // N_pop(x) = card([1, x] ∩ pop); floor semantics for non-integer x.
    // Throws std::out_of_range for x > bound (never silently truncates).
    u64 count(double x) const;
    u64 count_u(u64 x) const;

    // S_pop(u; a) = sum of 1/i^a over members i <= u, accumulated from the
    // largest member down for floating stability.
    double harmonic(double u, double a) const;
    // Exact variant for integer exponents.
    Rat harmonic_exact(u64 u, long a) const;

    bool member(u64 n) const;

    // Div(n) ∩ pop, ascending; n <= bound.
    std::vector<u64> divisors_in_pop(u64 n) const;

private:
    ArithmeticalList source_;
    u64 bound_;
    std::vector<u64> members_;
};

PopulationTable enumerate_pop(ArithmeticalList M, u64 bound);

// Membership by trial division against M's primes up to sqrt(n), then a
// final-cofactor membership test. Materializes M as needed.
bool is_pop_member(ArithmeticalList& M, u64 n);

// N_pop(n) by inclusion-exclusion over the squarefree members of
// pop(P - M): sum of mu(k) * floor(n/k). The complement must be
// materialized at least to n.
i64 inclusion_exclusion_count(const ArithmeticalList& M, u64 n, u64 complement_bound);

// (k, mu(k)) for every squarefree k <= bound whose prime factors all lie in
// `primes` (sorted); k = 1 included. Ascending in k.
std::vector<std::pair<u64, int>> squarefree_products(std::span<const u64> primes, u64 bound);

}  // namespace popzeta
