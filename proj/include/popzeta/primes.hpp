#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace popzeta {

using u64 = std::uint64_t;

// Returns all primes <= limit, ascending. Throws std::domain_error for
// limit < 2 and std::length_error when the result would blow the memory
// budget (limit > 2^34).
std::vector<u64> sieve_primes(u64 limit);

// Primes in [lo, hi], segmented so only O(sqrt(hi) + segment) memory is used.
std::vector<u64> sieve_range(u64 lo, u64 hi);

// All primes <= limit with 1-based positional access (nth(1) == 2).
class PrimeTable {
public:
    explicit PrimeTable(u64 limit);
    PrimeTable(u64 limit, std::vector<u64> primes);  // pre-sieved

    u64 limit() const { return limit_; }
    std::span<const u64> primes() const { return primes_; }
    std::size_t count() const { return primes_.size(); }

    // 1-based: nth(1) == 2. Throws std::out_of_range past the table.
    u64 nth(std::size_t n) const;
    bool contains(u64 n) const;
    // pi(x) = number of primes <= x, for x <= limit.
    u64 pi(u64 x) const;

private:
    u64 limit_;
    std::vector<u64> primes_;
};

// Shared, monotonically growing prime source. Extends by sieving only the
// new range; returned tables are immutable snapshots safe to share.
std::shared_ptr<const PrimeTable> primes_upto(u64 limit);

enum class ListKind { arithmetical, explicit_set, complement };

// A subset of the primes: either an index-arithmetical list {p_{r0+n r}},
// an explicit finite set, or the complement of another list. Members are
// materialized lazily up to a working bound.
class ArithmeticalList {
public:
    // M = {p_{r0 + n r} : n >= 0}; requires 1 <= r0 <= r.
    static ArithmeticalList make(unsigned r0, unsigned r);
    // M = P, i.e. make(1, 1).
    static ArithmeticalList all_primes();
    // Finite explicit set; every element must be prime.
    static ArithmeticalList from_primes(std::vector<u64> primes);

    // P - M.
    ArithmeticalList complement() const;
    // Shifted list M^{(j)} = {p_{1+j+n r}}; requires arithmetical kind with
    // r0 == 1 and 0 <= j < r.
    ArithmeticalList shift(unsigned j) const;

    ListKind kind() const { return kind_; }
    bool is_arithmetical() const { return kind_ == ListKind::arithmetical; }
    unsigned first_index() const;  // r0; throws unless arithmetical
    unsigned reason() const;       // r; throws unless arithmetical

    // Materializes members <= bound (extends the shared sieve if needed).
    void ensure(u64 bound);
    u64 materialized_bound() const { return bound_; }

    // Members <= bound, ascending; requires ensure(bound) to have run.
    std::span<const u64> members(u64 bound) const;
    // Membership for p <= materialized bound.
    bool contains(u64 p) const;

    std::string describe() const;

private:
    ArithmeticalList() = default;

    ListKind kind_ = ListKind::arithmetical;
    unsigned r0_ = 1, r_ = 1;
    std::vector<u64> explicit_primes_;                  // explicit_set
    std::shared_ptr<const ArithmeticalList> base_;      // complement
    u64 bound_ = 0;
    std::vector<u64> members_;
};

// Spec-level constructors: build and materialize in one step.
ArithmeticalList make_list(unsigned r0, unsigned r, u64 bound);
ArithmeticalList shift_list(const ArithmeticalList& m, unsigned j, u64 bound);

}  // namespace popzeta
