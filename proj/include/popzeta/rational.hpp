#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace popzeta {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Exact arithmetic backing for identity checks and power series.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for signed e; base must be nonzero when e < 0.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), a);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), a);
    if (e < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

// mpq_class(num, den) does not canonicalize; route every num/den build here.
inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline double to_double(const Rat& q) { return q.get_d(); }

// Pairwise reduction keeps denominators balanced; much faster than a linear
// fold when summing many 1/i-style terms.
inline Rat balanced_sum(std::span<Rat> terms) {
    if (terms.empty()) return Rat(0);
    std::size_t n = terms.size();
    while (n > 1) {
        std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) terms[i] += terms[i + half];
        n = half;
    }
    return terms[0];
}

inline Rat balanced_sum(std::vector<Rat>&& terms) {
    return balanced_sum(std::span<Rat>(terms));
}

}  // namespace popzeta
