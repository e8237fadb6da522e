#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact sums of roots of unity.
 *
 * A character value is zeta_N^j for some order N.  Sums of such values are
 * kept as multiplicity vectors over the exponents j mod N; turning a sum back
 * into an integer means reducing the polynomial sum_j c_j x^j modulo the N-th
 * cyclotomic polynomial and checking that only a constant survives.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace gcdsum {

/// Integer polynomial, coefficients low degree first.
using Polynomial = std::vector<mpz_class>;

/// zeta_N^j, or the distinguished zero used for non-units.
class RootOfUnity {
public:
    /// zeta_1^0 = 1.
    RootOfUnity() = default;
    RootOfUnity(std::uint64_t numerator, std::uint64_t order);

    static RootOfUnity zero();
    static RootOfUnity one() { return {}; }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && numerator_ == 0; }
    std::uint64_t numerator() const { return numerator_; }
    std::uint64_t order() const { return order_; }

    /// Same value written with denominator new_order; order() must divide it.
    RootOfUnity rescaled(std::uint64_t new_order) const;
    /// Smallest order that represents this value.
    RootOfUnity reduced() const;

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);

private:
    std::uint64_t numerator_ = 0;
    std::uint64_t order_ = 1;
    bool zero_ = false;
};

class CyclotomicSum {
public:
    explicit CyclotomicSum(std::uint64_t order = 1);

    std::uint64_t order() const { return order_; }
    const std::vector<mpz_class>& counts() const { return counts_; }

    /// Adds weight * zeta_N^j (j taken mod N).
    void add(std::uint64_t j, const mpz_class& weight = 1);
    /// Adds weight * r, widening the order to lcm(order(), r.order()) if needed.
    /// Zero is ignored.
    void add(const RootOfUnity& r, const mpz_class& weight = 1);
    void add(const CyclotomicSum& other, const mpz_class& weight = 1);

    /// Re-express over a multiple of the current order.
    void widen(std::uint64_t new_order);

    CyclotomicSum& operator+=(const CyclotomicSum& other);

private:
    std::uint64_t order_;
    std::vector<mpz_class> counts_;
};

/// Phi_N, built by dividing x^N - 1 by Phi_d for every proper divisor d.
/// Results are memoised; safe to call from several threads.
Polynomial cyclotomic_polynomial(std::uint64_t n);

/// Remainder of p modulo a monic polynomial.
Polynomial reduce_mod_monic(Polynomial p, const Polynomial& modulus);

/// The integer S represents, or nullopt when S is not rational.
std::optional<mpz_class> extract_integer(const CyclotomicSum& s);

} // namespace gcdsum
