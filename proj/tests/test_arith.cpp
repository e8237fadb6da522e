#include <doctest.h>

#include <numeric>
#include <random>

#include "gcdsum/arith.hpp"
#include "oracles.hpp"

using namespace gcdsum;

namespace {

mpz_class z(unsigned long v) { return mpz_class(v); }

std::vector<mpz_class> zs(std::initializer_list<unsigned long> vs)
{
    std::vector<mpz_class> out;
    for (auto v : vs) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("factorize examples")
{
    CHECK(factorize(1).parts().empty());
    CHECK(factorize(12).parts() == std::vector<PrimePower>{{2, 2}, {3, 1}});

    // 9999999967 is prime: confirmed by trial division up to its square root.
    REQUIRE(oracle::is_prime(9999999967ULL));
    CHECK(factorize(9999999967ULL).parts() == std::vector<PrimePower>{{9999999967ULL, 1}});
}

TEST_CASE("factorize rejects non-positive input")
{
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    CHECK_THROWS_AS(factorize(mpz_class(-12)), std::domain_error);
}

TEST_CASE("factorize handles values beyond 64 bits")
{
    // 2^70 * 3^5 * 1000003
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), 2, 70);
    n *= 243;
    n *= 1000003;
    const Factorization f = factorize(n);
    CHECK(f.parts() == std::vector<PrimePower>{{2, 70}, {3, 5}, {1000003, 1}});
    CHECK_FALSE(f.fits_u64());
    CHECK_THROWS_AS(f.value_u64(), resource_error);
}

TEST_CASE("factorize then expand is the identity on 1..10^5")
{
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        const Factorization f = factorize(n);
        mpz_class product = 1;
        std::uint64_t last = 0;
        bool ascending = true;
        bool prime = true;
        for (const auto& part : f.parts()) {
            product *= part.value();
            ascending = ascending && part.prime > last && part.exponent >= 1;
            prime = prime && (part.prime > 1000 || oracle::is_prime(part.prime));
            last = part.prime;
        }
        if (product != n || !ascending || !prime) FAIL("bad factorization of " << n);
    }
}

TEST_CASE("Factorization constructor enforces its invariants")
{
    CHECK_THROWS_AS(Factorization(z(12), {{3, 1}, {2, 2}}), std::domain_error);
    CHECK_THROWS_AS(Factorization(z(12), {{2, 2}, {3, 2}}), std::domain_error);
    CHECK_THROWS_AS(Factorization(z(8), {{4, 1}, {2, 1}}), std::domain_error);
    CHECK_NOTHROW(Factorization(z(1), {}));
}

TEST_CASE("is_prime agrees with trial division")
{
    for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
    CHECK(is_prime(18446744073709551557ULL)); // largest 64-bit prime
    CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("euler_phi examples and brute-force range")
{
    CHECK(euler_phi(factorize(1)) == 1);
    CHECK(euler_phi(factorize(9)) == oracle::phi(9));
    CHECK(euler_phi(factorize(9)) == 6);
    CHECK(euler_phi(factorize(12)) == 4);
    for (std::uint64_t n = 1; n <= 10000; ++n)
        if (euler_phi(factorize(n)) != oracle::phi(n)) FAIL("phi mismatch at " << n);
}

TEST_CASE("sigma_k examples and brute-force range")
{
    CHECK(sigma_k(factorize(1), 0) == 1);
    CHECK(sigma_k(factorize(1), 7) == 1);
    CHECK(sigma_k(factorize(3), 1) == 4);
    CHECK(sigma_k(factorize(12), 0) == 6);
    for (std::uint64_t n = 1; n <= 10000; ++n)
        for (unsigned k = 0; k <= 3; ++k)
            if (sigma_k(factorize(n), k) != oracle::sigma(n, k)) FAIL("sigma mismatch at n=" << n << " k=" << k);
}

TEST_CASE("sigma_k stays exact past 64 bits")
{
    // sigma_5(2^20) = (2^105 - 1) / (2^5 - 1)
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, 105);
    expected = (expected - 1) / 31;
    CHECK(sigma_k(factorize(1u << 20), 5) == expected);
}

TEST_CASE("multiplicativity of phi and sigma_k on coprime pairs")
{
    for (std::uint64_t a = 1; a <= 500; a += 7) {
        for (std::uint64_t b = 1; b <= 500; b += 11) {
            if (std::gcd(a, b) != 1) continue;
            const auto fa = factorize(a), fb = factorize(b), fab = factorize(a * b);
            REQUIRE(euler_phi(fab) == euler_phi(fa) * euler_phi(fb));
            for (unsigned k = 0; k <= 3; ++k) REQUIRE(sigma_k(fab, k) == sigma_k(fa, k) * sigma_k(fb, k));
        }
    }
}

TEST_CASE("moebius")
{
    CHECK(moebius(factorize(1)) == 1);
    CHECK(moebius(factorize(6)) == 1);
    CHECK(moebius(factorize(12)) == 0);
    CHECK(moebius(factorize(30)) == -1);
    // sum_{d | n} mu(d) = [n = 1]
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        int total = 0;
        for (auto d : oracle::divisors(n)) total += moebius(factorize(d));
        REQUIRE(total == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors")
{
    CHECK(divisors(factorize(1)) == zs({1}));
    CHECK(divisors(factorize(9)) == zs({1, 3, 9}));
    CHECK(divisors(factorize(12)) == zs({1, 2, 3, 4, 6, 12}));
    for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(divisors_u64(factorize(n)) == oracle::divisors(n));
}

TEST_CASE("crt_split examples")
{
    CHECK(crt_split(factorize(12), z(7)) == zs({3, 1}));
    CHECK(crt_split(factorize(12), z(0)) == zs({0, 0}));
    CHECK(crt_split(factorize(45), z(38)) == zs({2, 3}));
    CHECK_THROWS_AS(crt_split(factorize(12), z(12)), std::domain_error);
}

TEST_CASE("crt_combine examples")
{
    const auto m1 = zs({4, 3}), r1 = zs({3, 1});
    CHECK(crt_combine(m1, r1) == 7);
    const auto m2 = zs({17}), r2 = zs({5});
    CHECK(crt_combine(m2, r2) == 5);
    const auto m3 = zs({9, 5}), r3 = zs({2, 3});
    CHECK(crt_combine(m3, r3) == oracle::crt_scan({9, 5}, {2, 3}));
    CHECK(crt_combine(m3, r3) == 38);

    const auto bad = zs({4, 6}), rb = zs({1, 1});
    CHECK_THROWS_AS(crt_combine(bad, rb), std::domain_error);
}

TEST_CASE("crt_combine inverts crt_split for n <= 1000")
{
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        const auto f = factorize(n);
        std::vector<mpz_class> moduli;
        for (const auto& part : f.parts()) moduli.push_back(part.value());
        for (std::uint64_t x = 0; x < n; ++x) {
            const auto parts = crt_split(f, z(x));
            if (crt_combine(moduli, parts) != x) FAIL("round trip failed for x=" << x << " mod " << n);
        }
    }
}

TEST_CASE("crt_combine random property against the scan oracle")
{
    std::mt19937_64 rng(20261018);
    const std::vector<std::uint64_t> pool{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> moduli;
        std::uint64_t product = 1;
        for (auto q : pool) {
            if (rng() % 3 == 0 && std::gcd(q, product) == 1 && product * q < 200000) {
                moduli.push_back(q);
                product *= q;
            }
        }
        std::vector<std::uint64_t> residues;
        std::vector<mpz_class> zm, zr;
        for (auto q : moduli) {
            residues.push_back(rng() % q);
            zm.emplace_back(static_cast<unsigned long>(q));
            zr.emplace_back(static_cast<unsigned long>(residues.back()));
        }
        REQUIRE(crt_combine(zm, zr) == oracle::crt_scan(moduli, residues));
    }
}
