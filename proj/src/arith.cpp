#include "gcdsum/arith.hpp"

#include <algorithm>
#include <numeric>

namespace gcdsum {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t to_u64(const mpz_class& v)
{
    return static_cast<std::uint64_t>(v.get_ui());
}

void push_part(std::vector<PrimePower>& parts, std::uint64_t p)
{
    if (!parts.empty() && parts.back().prime == p)
        ++parts.back().exponent;
    else
        parts.push_back({p, 1});
}

} // namespace

mpz_class PrimePower::value() const
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), prime, exponent);
    return r;
}

Factorization::Factorization(mpz_class value, std::vector<PrimePower> parts)
    : value_(std::move(value)), parts_(std::move(parts))
{
    mpz_class product = 1;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].exponent == 0 || !is_prime(parts_[i].prime))
            throw std::domain_error("factorization part is not a prime power");
        if (i > 0 && parts_[i - 1].prime >= parts_[i].prime)
            throw std::domain_error("factorization primes must be strictly ascending");
        product *= parts_[i].value();
    }
    if (product != value_)
        throw std::domain_error("factorization parts do not multiply to its value");
}

std::uint64_t Factorization::value_u64() const
{
    if (!fits_u64())
        throw resource_error("modulus " + to_string(value_) + " does not fit in 64 bits");
    return to_u64(value_);
}

Factorization factorize(std::uint64_t n)
{
    return factorize(mpz_class(static_cast<unsigned long>(n)));
}

Factorization factorize(const mpz_class& n)
{
    if (n <= 0)
        throw std::domain_error("factorize: expected a positive integer, got " + to_string(n));

    std::vector<PrimePower> parts;
    mpz_class rest = n;
    while (mpz_even_p(rest.get_mpz_t())) {
        push_part(parts, 2);
        rest /= 2;
    }

    std::uint64_t d = 3;
    // Big cofactors: divide in mpz until the remainder fits a machine word.
    while (!mpz_fits_ulong_p(rest.get_mpz_t())) {
        if (d > kTrialDivisionLimit)
            throw resource_error("factorize: cofactor " + to_string(rest) + " is beyond trial division range");
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
            push_part(parts, d);
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
        }
        d += 2;
    }

    std::uint64_t r = to_u64(rest);
    for (; d <= r / d; d += 2) {
        while (r % d == 0) {
            push_part(parts, d);
            r /= d;
        }
    }
    if (r > 1) push_part(parts, r);

    return Factorization(n, std::move(parts));
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a deterministic witness set below 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

mpz_class euler_phi(const Factorization& f)
{
    mpz_class result = 1;
    for (const auto& part : f.parts()) {
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), part.prime, part.exponent - 1);
        result *= q * (part.prime - 1);
    }
    return result;
}

mpz_class sigma_k(const Factorization& f, unsigned k)
{
    mpz_class result = 1;
    for (const auto& part : f.parts()) {
        // 1 + p^k + p^{2k} + ... + p^{mk}
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), part.prime, k);
        mpz_class term = 1;
        mpz_class local = 1;
        for (unsigned i = 0; i < part.exponent; ++i) {
            term *= pk;
            local += term;
        }
        result *= local;
    }
    return result;
}

int moebius(const Factorization& f)
{
    for (const auto& part : f.parts())
        if (part.exponent > 1) return 0;
    return f.parts().size() % 2 == 0 ? 1 : -1;
}

std::vector<mpz_class> divisors(const Factorization& f)
{
    std::vector<mpz_class> out{1};
    for (const auto& part : f.parts()) {
        const std::size_t base = out.size();
        mpz_class pe = 1;
        for (unsigned e = 1; e <= part.exponent; ++e) {
            pe *= part.prime;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors_u64(const Factorization& f)
{
    f.value_u64();
    std::vector<std::uint64_t> out;
    for (const auto& d : divisors(f))
        out.push_back(to_u64(d));
    return out;
}

std::vector<mpz_class> crt_split(const Factorization& n, const mpz_class& a)
{
    if (a < 0 || a >= n.value())
        throw std::domain_error("crt_split: residue out of range");
    std::vector<mpz_class> out;
    out.reserve(n.parts().size());
    for (const auto& part : n.parts())
        out.push_back(a % part.value());
    return out;
}

mpz_class crt_combine(std::span<const mpz_class> moduli, std::span<const mpz_class> residues)
{
    if (moduli.size() != residues.size())
        throw std::domain_error("crt_combine: moduli and residues differ in length");

    mpz_class x = 0;
    mpz_class modulus = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const mpz_class& q = moduli[i];
        const mpz_class& r = residues[i];
        if (q <= 0)
            throw std::domain_error("crt_combine: moduli must be positive");
        if (r < 0 || r >= q)
            throw std::domain_error("crt_combine: residue out of range");
        if (gcd(modulus, q) != 1)
            throw std::domain_error("crt_combine: moduli are not pairwise coprime");

        // x' = x + modulus * ((r - x) * modulus^{-1} mod q)
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), mpz_class(modulus % q).get_mpz_t(), q.get_mpz_t());
        mpz_class t = ((r - x) * inv) % q;
        if (t < 0) t += q;
        x += modulus * t;
        modulus *= q;
    }
    return x;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r))
            throw resource_error("ipow: 64-bit overflow");
    }
    return r;
}

std::string to_string(const mpz_class& v)
{
    return v.get_str();
}

} // namespace gcdsum
