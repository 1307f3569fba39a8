#include "popzeta/population.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace popzeta {

namespace {

struct Candidate {
    u64 value;
    std::size_t max_prime_idx;  // index into M's members of the largest factor
    bool operator>(const Candidate& o) const { return value > o.value; }
};

}  // namespace

PopulationTable::PopulationTable(ArithmeticalList source, u64 bound)
    : source_(std::move(source)), bound_(bound) {
    if (bound < 1) throw std::domain_error("PopulationTable: bound must be >= 1");
    source_.ensure(bound);
    auto primes = source_.members(bound);

    // Generalized Hamming enumeration: pop 1, then extend each member only by
    // primes >= its largest factor so every member is produced exactly once.
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<Candidate>> heap;
    heap.push({1, 0});
    while (!heap.empty()) {
        Candidate c = heap.top();
        heap.pop();
        members_.push_back(c.value);
        for (std::size_t i = c.max_prime_idx; i < primes.size(); ++i) {
            u64 p = primes[i];
            if (p > bound / c.value) break;  // product would exceed bound; no overflow
            heap.push({c.value * p, i});
        }
    }
}

PopulationTable enumerate_pop(ArithmeticalList M, u64 bound) {
    return PopulationTable(std::move(M), bound);
}

u64 PopulationTable::count(double x) const {
    if (x < 1.0) throw std::domain_error("N_pop: x must be >= 1");
    if (x > static_cast<double>(bound_)) throw std::out_of_range("N_pop: x past table bound");
    return count_u(static_cast<u64>(std::floor(x)));
}

u64 PopulationTable::count_u(u64 x) const {
    if (x > bound_) throw std::out_of_range("N_pop: x past table bound");
    return static_cast<u64>(std::upper_bound(members_.begin(), members_.end(), x) - members_.begin());
}

double PopulationTable::harmonic(double u, double a) const {
    if (u < 1.0 || u > static_cast<double>(bound_))
        throw std::out_of_range("S_pop: u out of [1, bound]");
    std::size_t n = count(u);
    double s = 0.0;
    for (std::size_t i = n; i-- > 0;) s += std::pow(static_cast<double>(members_[i]), -a);
    return s;
}

Rat PopulationTable::harmonic_exact(u64 u, long a) const {
    if (u < 1 || u > bound_) throw std::out_of_range("S_pop: u out of [1, bound]");
    std::size_t n = count_u(u);
    std::vector<Rat> terms;
    terms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) terms.emplace_back(rat_pow(Rat(Int(members_[i])), -a));
    return balanced_sum(std::span<Rat>(terms));
}

bool PopulationTable::member(u64 n) const {
    return std::binary_search(members_.begin(), members_.end(), n);
}

std::vector<u64> PopulationTable::divisors_in_pop(u64 n) const {
    if (n < 1 || n > bound_) throw std::out_of_range("divisors_in_pop: n out of [1, bound]");
    std::vector<u64> divs{1};
    u64 rest = n;
    auto table = primes_upto(static_cast<u64>(std::sqrt(double(n))) + 2);
    for (u64 p : table->primes()) {
        if (p * p > rest) break;
        if (rest % p) continue;
        unsigned e = 0;
        while (rest % p == 0) rest /= p, ++e;
        std::size_t base = divs.size();
        u64 pw = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pw *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    if (rest > 1) {
        std::size_t base = divs.size();
        for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * rest);
    }
    std::sort(divs.begin(), divs.end());
    std::vector<u64> out;
    for (u64 d : divs)
        if (member(d)) out.push_back(d);
    return out;
}

bool is_pop_member(ArithmeticalList& M, u64 n) {
    if (n < 1) throw std::domain_error("is_pop_member: n must be >= 1");
    if (n == 1) return true;
    M.ensure(n);
    u64 rest = n;
    for (u64 p : M.members(n)) {
        if (p * p > rest) break;
        while (rest % p == 0) rest /= p;
    }
    if (rest == 1) return true;
    // rest is either 1, a prime, or has a prime factor outside M below
    // sqrt(n); only a prime cofactor can still be a member.
    if (!primes_upto(rest)->contains(rest)) return false;
    return M.contains(rest);
}

i64 inclusion_exclusion_count(const ArithmeticalList& M, u64 n, u64 complement_bound) {
    if (complement_bound < n)
        throw std::out_of_range("inclusion_exclusion_count: complement not materialized to n");
    ArithmeticalList comp = M.complement();
    comp.ensure(n);
    auto qs = comp.members(n);

    // DFS over squarefree products of complement primes, pruned at > n.
    i64 total = 0;
    auto dfs = [&](auto&& self, std::size_t idx, u64 prod, int sign) -> void {
        total += sign * static_cast<i64>(n / prod);
        for (std::size_t i = idx; i < qs.size(); ++i) {
            if (qs[i] > n / prod) break;
            self(self, i + 1, prod * qs[i], -sign);
        }
    };
    dfs(dfs, 0, 1, 1);
    return total;
}

std::vector<std::pair<u64, int>> squarefree_products(std::span<const u64> primes, u64 bound) {
    std::vector<std::pair<u64, int>> out;
    auto dfs = [&](auto&& self, std::size_t idx, u64 prod, int sign) -> void {
        out.emplace_back(prod, sign);
        for (std::size_t i = idx; i < primes.size(); ++i) {
            if (primes[i] > bound / prod) break;
            self(self, i + 1, prod * primes[i], -sign);
        }
    };
    dfs(dfs, 0, 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace popzeta
