#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer arithmetic and multiplicative functions.
 *
 * Everything that leaves this header as a "value" is an mpz_class, so
 * sigma_k(n) for large k and tuple counts like n^k never wrap around.
 * Primes themselves always fit in 64 bits: factorize() refuses inputs whose
 * trial division would need divisors beyond 2^32.
 */

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gcdsum {

/// Thrown when an input would exceed a configured work or memory budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    mpz_class value() const;

    bool operator==(const PrimePower&) const = default;
};

/// n = prod p_i^{m_i}, primes strictly ascending.  Empty parts iff n = 1.
class Factorization {
public:
    Factorization() : value_(1) {}
    Factorization(mpz_class value, std::vector<PrimePower> parts);

    const mpz_class& value() const { return value_; }
    const std::vector<PrimePower>& parts() const { return parts_; }

    bool fits_u64() const { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }
    /// Throws resource_error when value() does not fit in 64 bits.
    std::uint64_t value_u64() const;

    bool operator==(const Factorization& o) const {
        return value_ == o.value_ && parts_ == o.parts_;
    }

private:
    mpz_class value_;
    std::vector<PrimePower> parts_;
};

/// Largest trial divisor factorize() will try before giving up.
inline constexpr std::uint64_t kTrialDivisionLimit = std::uint64_t{1} << 32;

Factorization factorize(const mpz_class& n);
Factorization factorize(std::uint64_t n);

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::uint64_t n);

mpz_class euler_phi(const Factorization& f);
mpz_class sigma_k(const Factorization& f, unsigned k);
int moebius(const Factorization& f);

/// All divisors of n in ascending order.
std::vector<mpz_class> divisors(const Factorization& f);
std::vector<std::uint64_t> divisors_u64(const Factorization& f);

/// Component i is a mod p_i^{m_i}.
std::vector<mpz_class> crt_split(const Factorization& n, const mpz_class& a);

/// Unique x mod prod q_i with x = r_i mod q_i.  Moduli must be pairwise coprime.
mpz_class crt_combine(std::span<const mpz_class> moduli, std::span<const mpz_class> residues);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::string to_string(const mpz_class& v);

} // namespace gcdsum
