#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "popzeta/arithfun.hpp"

using namespace popzeta;

namespace {

std::vector<u64> all_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 phi_oracle(u64 n) {  // count of k <= n coprime to n
    u64 c = 0;
    for (u64 k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

}  // namespace

TEST_CASE("point values") {
    CHECK(arith_values(4).mu == 0);
    auto v1 = arith_values(1);
    CHECK(v1.mu == 1);
    CHECK(v1.phi == 1);
    CHECK(v1.tau == 1);
    CHECK(v1.nu == 0);
    auto v10 = arith_values(10);
    CHECK(v10.mu == 1);
    CHECK(v10.phi == 4);
    CHECK(v10.tau == 4);
    CHECK(v10.nu == 2);
    CHECK(v10.sigma(1) == Rat(18));
    CHECK_THROWS_AS(arith_values(0), std::domain_error);
}

TEST_CASE("values against divisor-enumeration oracles to 10^4") {
    for (u64 n = 1; n <= 10000; ++n) {
        auto v = arith_values(n);
        auto divs = all_divisors(n);
        CHECK(v.tau == divs.size());
        u64 s1 = 0;
        for (u64 d : divs) s1 += d;
        CHECK(v.sigma(1) == Rat(Int(s1)));
        // squarefree <=> mu != 0
        bool sqfree = true;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0) sqfree = false;
        CHECK((v.mu != 0) == sqfree);
        // phi via the divisor-sum characterization: sum over d|n of phi(d) = n
        u64 phisum = 0;
        for (u64 d : divs) phisum += arith_values(d).phi;
        CHECK(phisum == n);
        // Moebius column sum: sum over d|n of mu(d) = [n = 1]
        long musum = 0;
        for (u64 d : divs) musum += mobius(d);
        CHECK(musum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("phi against the gcd-count oracle") {
    for (u64 n = 1; n <= 2000; ++n) CHECK(arith_values(n).phi == phi_oracle(n));
}

TEST_CASE("sigma exponents") {
    auto v = arith_values(12);
    CHECK(v.sigma(0) == Rat(6));
    CHECK(v.sigma(2) == Rat(1 + 4 + 9 + 16 + 36 + 144));
    // sigma_{-a}(n) = sigma_a(n) / n^a
    for (u64 n : {2ull, 10ull, 36ull, 97ull})
        for (long a : {1L, 2L, 3L})
            CHECK(arith_values(n).sigma(-a) ==
                  arith_values(n).sigma(a) / rat_pow(Rat(Int(n)), a));
}

TEST_CASE("dirichlet convolution") {
    PopulationTable pop(ArithmeticalList::make(1, 2), 400);
    CoeffMap ones, identity, mu_map, id_map;
    for (u64 m : pop.members()) {
        ones[m] = 1;
        mu_map[m] = mobius(m);
        id_map[m] = Rat(Int(m));
    }

    auto tau_out = dirichlet_convolve(ones, ones, pop, 400);
    CHECK(tau_out[4] == Rat(3));
    for (auto& [n, c] : tau_out) CHECK(c == Rat(Int(divisor_count(n))));

    auto unit = dirichlet_convolve(ones, mu_map, pop, 400);
    CHECK(unit.size() == 1);
    CHECK(unit[1] == Rat(1));

    auto sig = dirichlet_convolve(ones, id_map, pop, 20);
    for (auto& [n, c] : sig) CHECK(c == arith_values(n).sigma(1));

    CoeffMap off;
    off[3] = 1;  // 3 not in pop(M_2)
    CHECK_THROWS_AS(dirichlet_convolve(ones, off, pop, 400), std::invalid_argument);
}

TEST_CASE("lemma-1 closure on random rational inputs") {
    PopulationTable pop(ArithmeticalList::make(1, 3), 10000);
    std::minstd_rand rng(12345);
    CoeffMap a, b;
    auto mem = pop.members();
    for (int i = 0; i < 40; ++i) {
        a[mem[rng() % mem.size()]] = make_rat(Int(int(rng() % 19) - 9), Int(1 + rng() % 7));
        b[mem[rng() % mem.size()]] = make_rat(Int(int(rng() % 19) - 9), Int(1 + rng() % 7));
    }
    auto out = dirichlet_convolve(a, b, pop, 10000);  // throws if closure fails
    for (auto& [n, c] : out) CHECK(pop.member(n));
}

TEST_CASE("mobius pair round trip") {
    PopulationTable pop(ArithmeticalList::make(1, 2), 4000);

    SUBCASE("indicator reproduces the unit counting identity") {
        double T = 1000;
        auto f = [T](double t) { return t <= T ? 1.0 : 0.0; };
        std::vector<double> xs{1.0};
        auto rep = mobius_pair_check(f, 4000, pop, xs);
        CHECK(rep.pass);
    }
    SUBCASE("single point support") {
        auto f = [](double t) { return t == 17.0 ? 3.0 : 0.0; };
        std::vector<double> xs{1.0, 17.0, 2.0};
        CHECK(mobius_pair_check(f, 4000, pop, xs).pass);
    }
    SUBCASE("random integer-valued f on [1,100]") {
        std::minstd_rand rng(99);
        std::vector<double> table(101, 0.0);
        for (int i = 1; i <= 100; ++i) table[i] = double(rng() % 21) - 10.0;
        auto f = [&table](double t) {
            double r = std::floor(t);
            if (r != t || t < 1 || t > 100) return 0.0;
            return table[static_cast<std::size_t>(r)];
        };
        std::vector<double> xs{1.0, 2.0, 4.0, 5.0, 10.0};
        auto rep = mobius_pair_check(f, 4000, pop, xs);
        CHECK(rep.pass);
        CHECK(rep.residual == 0.0);
    }
}

TEST_CASE("restricted divisor identity drives the phi summation") {
    PopulationTable pop(ArithmeticalList::make(1, 2), 2000);
    for (u64 n : pop.members()) {
        Int s = 0;
        for (u64 d : pop.divisors_in_pop(n)) s += Int(euler_phi(d));
        CHECK(s == Int(n));
    }
}

TEST_CASE("named examples") {
    PopulationTable pop(ArithmeticalList::make(1, 2), 64);
    auto rep = verify_sum_identity(SumIdentity::phi_pop, pop, 10);
    CHECK(rep.pass);
    CHECK(rep.lhs == "30");
    CHECK(rep.rhs == "30");

    auto mu = verify_sum_identity(SumIdentity::mu_count, pop, 50);
    CHECK(mu.pass);
    CHECK(mu.rhs == "1");

    for (SumIdentity id : all_sum_identities()) CHECK(verify_sum_identity(id, pop, 1).pass);
}

TEST_CASE("all fourteen identities sweep exactly") {
    std::vector<PopulationTable> pops;
    pops.emplace_back(ArithmeticalList::make(1, 2), 400);
    pops.emplace_back(ArithmeticalList::make(1, 3), 400);
    pops.emplace_back(ArithmeticalList::from_primes({3, 7}), 400);
    for (auto& pop : pops) {
        for (SumIdentity id : all_sum_identities()) {
            auto reports = sweep_sum_identity(id, pop, 400);
            for (auto& rep : reports) {
                CHECK(rep.pass);
                CHECK(rep.residual == 0.0);
            }
        }
    }
}

TEST_CASE("exponent variants stay exact") {
    PopulationTable pop(ArithmeticalList::make(1, 2), 200);
    for (long a : {0L, 2L, -1L}) {
        for (SumIdentity id : {SumIdentity::sigma_a, SumIdentity::sigma_a_norm,
                               SumIdentity::sigma_harm, SumIdentity::tau_harm,
                               SumIdentity::nu_harm}) {
            auto reports = sweep_sum_identity(id, pop, 200, a);
            for (auto& rep : reports) CHECK(rep.pass);
        }
    }
}

TEST_CASE("report serialization") {
    PopulationTable pop(ArithmeticalList::make(1, 2), 64);
    auto rep = verify_sum_identity(SumIdentity::sigma_harm, pop, 10, 1);
    CHECK(IdentityReport::csv_header() == "identity_id,M,x,a,lhs,rhs,residual,pass");
    CHECK(rep.csv_row() == "sigma_harm,M[1:2],10,1," + rep.lhs + "," + rep.rhs + ",0,1");
    CHECK_THROWS_AS(identity_from_name("nope"), std::domain_error);
    CHECK(identity_from_name("tau_mu") == SumIdentity::tau_mu);
}
