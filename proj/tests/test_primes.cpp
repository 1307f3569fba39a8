#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "popzeta/primes.hpp"

using namespace popzeta;

namespace {

// Independent oracle: trial division.
bool is_prime_oracle(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> primes_oracle(u64 limit) {
    std::vector<u64> out;
    for (u64 n = 2; n <= limit; ++n)
        if (is_prime_oracle(n)) out.push_back(n);
    return out;
}

}  // namespace

TEST_CASE("sieve basics") {
    CHECK(sieve_primes(10) == std::vector<u64>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<u64>{2});
    CHECK(sieve_primes(100).size() == primes_oracle(100).size());
    CHECK(sieve_primes(100).size() == 25);
    CHECK_THROWS_AS(sieve_primes(1), std::domain_error);
}

TEST_CASE("sieve agrees with trial division") {
    auto got = sieve_primes(5000);
    auto want = primes_oracle(5000);
    REQUIRE(got == want);
}

TEST_CASE("segmented range sieve") {
    auto whole = sieve_primes(30000);
    auto lo = sieve_range(2, 9999);
    auto hi = sieve_range(10000, 30000);
    std::vector<u64> glued(lo);
    glued.insert(glued.end(), hi.begin(), hi.end());
    CHECK(glued == whole);
}

TEST_CASE("prime table indexing is 1-based") {
    PrimeTable t(100);
    CHECK(t.nth(1) == 2);
    CHECK(t.nth(2) == 3);
    CHECK(t.nth(3) == 5);
    CHECK(t.nth(4) == 7);
    CHECK(t.pi(100) == 25);
    CHECK(t.pi(1) == 0);
    CHECK(t.contains(97));
    CHECK(!t.contains(91));
    CHECK_THROWS_AS(t.nth(0), std::out_of_range);
    CHECK_THROWS_AS(t.nth(26), std::out_of_range);
}

TEST_CASE("arithmetical list construction") {
    auto m33 = make_list(3, 3, 80);
    std::vector<u64> want{5, 13, 23, 37, 47, 61, 73};
    CHECK(std::vector<u64>(m33.members(80).begin(), m33.members(80).end()) == want);

    auto m1 = make_list(1, 1, 200);
    auto all = sieve_primes(200);
    CHECK(std::vector<u64>(m1.members(200).begin(), m1.members(200).end()) == all);

    auto m2 = make_list(1, 2, 50);
    std::vector<u64> want2{2, 5, 11, 17, 23, 31, 41, 47};
    CHECK(std::vector<u64>(m2.members(50).begin(), m2.members(50).end()) == want2);

    CHECK_THROWS_AS(ArithmeticalList::make(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(ArithmeticalList::make(0, 2), std::domain_error);
    CHECK_THROWS_AS(make_list(1, 2, 1), std::domain_error);
}

TEST_CASE("shifted lists") {
    auto m2 = ArithmeticalList::make(1, 2);
    auto s1 = shift_list(m2, 1, 45);
    std::vector<u64> want{3, 7, 13, 19, 29, 37, 43};
    CHECK(std::vector<u64>(s1.members(45).begin(), s1.members(45).end()) == want);

    auto s0 = shift_list(m2, 0, 45);
    ArithmeticalList m2b = m2;
    m2b.ensure(45);
    CHECK(std::vector<u64>(s0.members(45).begin(), s0.members(45).end()) ==
          std::vector<u64>(m2b.members(45).begin(), m2b.members(45).end()));

    CHECK_THROWS_AS(m2.shift(2), std::domain_error);
    CHECK_THROWS_AS(make_list(2, 3, 100).shift(0), std::domain_error);
}

TEST_CASE("shifts partition the primes") {
    for (unsigned r : {2u, 3u, 5u}) {
        for (u64 bound : {50ull, 500ull, 3000ull}) {
            auto m = ArithmeticalList::make(1, r);
            std::vector<u64> merged;
            for (unsigned j = 0; j < r; ++j) {
                auto s = shift_list(m, j, bound);
                auto mem = s.members(bound);
                merged.insert(merged.end(), mem.begin(), mem.end());
            }
            std::sort(merged.begin(), merged.end());
            CHECK(merged == sieve_primes(bound));
        }
    }
}

TEST_CASE("index consistency with the prime table") {
    PrimeTable t(10000);
    for (unsigned r0 = 1; r0 <= 4; ++r0) {
        for (unsigned r = r0; r <= 5; ++r) {
            auto m = make_list(r0, r, 10000);
            auto mem = m.members(10000);
            for (std::size_t n = 0; n < mem.size(); ++n)
                CHECK(mem[n] == t.nth(r0 + n * r));
        }
    }
}

TEST_CASE("monotone materialization") {
    auto m = ArithmeticalList::make(1, 3);
    m.ensure(100);
    std::vector<u64> before(m.members(100).begin(), m.members(100).end());
    m.ensure(5000);
    std::vector<u64> after(m.members(100).begin(), m.members(100).end());
    CHECK(before == after);
}

TEST_CASE("explicit lists and complements") {
    auto e = ArithmeticalList::from_primes({7, 3});
    e.ensure(100);
    CHECK(std::vector<u64>(e.members(100).begin(), e.members(100).end()) ==
          std::vector<u64>{3, 7});
    CHECK(e.describe() == "{3,7}");
    CHECK_THROWS_AS(ArithmeticalList::from_primes({4}), std::invalid_argument);

    auto c = e.complement();
    c.ensure(30);
    CHECK(std::vector<u64>(c.members(30).begin(), c.members(30).end()) ==
          std::vector<u64>{2, 5, 11, 13, 17, 19, 23, 29});

    auto m2 = ArithmeticalList::make(1, 2);
    auto c2 = m2.complement();
    c2.ensure(45);
    auto s1 = shift_list(m2, 1, 45);
    CHECK(std::vector<u64>(c2.members(45).begin(), c2.members(45).end()) ==
          std::vector<u64>(s1.members(45).begin(), s1.members(45).end()));

    CHECK(ArithmeticalList::all_primes().describe() == "P");
    CHECK(m2.describe() == "M[1:2]");
    CHECK(c2.describe() == "P-M[1:2]");
}
