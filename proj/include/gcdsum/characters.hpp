#pragma once

/**
 * @file characters.hpp
 * @brief Dirichlet characters modulo n with exact values.
 *
 * The unit group mod n splits by CRT into unit groups mod p^m.  Each of
 * those is described by a PrimePowerLocal: a fixed generator set and a full
 * discrete-log table.  A character is then a list of exponent vectors, one
 * per prime-power part, and chi(a) is a product of roots of unity read off
 * the log table.
 *
 * Generators:
 *   - odd p^m and q = 4: the smallest primitive root;
 *   - q = 2: the single element 1 with order 1;
 *   - 2^m with m >= 3: (-1, order 2) followed by (5, order 2^{m-2}).
 *
 * Characters of a group are indexed in mixed radix over the flattened
 * exponent digits, primes ascending, earlier digits more significant.
 */

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gcdsum/arith.hpp"
#include "gcdsum/cyclotomic.hpp"

namespace gcdsum {

struct Generator {
    std::uint64_t element;
    std::uint64_t order;
};

/// Exponent vector over a local generator list (one or two entries used).
using LocalExponents = std::array<std::uint64_t, 2>;

/// Largest prime power for which a log table will be built.
inline constexpr std::uint64_t kMaxLocalModulus = std::uint64_t{1} << 25;

class PrimePowerLocal {
public:
    PrimePowerLocal(std::uint64_t p, unsigned m);

    std::uint64_t prime() const { return p_; }
    unsigned exponent() const { return m_; }
    std::uint64_t modulus() const { return q_; }
    std::uint64_t totient() const { return phi_; }
    std::span<const Generator> generators() const { return {gens_.data(), gen_count_}; }

    bool is_unit(std::uint64_t a) const { return log_[a % q_][0] != kNotUnit; }
    /// Exponent vector of a unit a mod q; throws std::domain_error for non-units.
    LocalExponents log(std::uint64_t a) const;
    /// prod g_i^{e_i} mod q.
    std::uint64_t exp(const LocalExponents& e) const;

    /// U_0 = all units; U_i = 1 + p^i Z mod p^m.  Ascending residues.
    std::vector<std::uint64_t> unit_subgroup(unsigned i) const;

private:
    static constexpr std::uint32_t kNotUnit = UINT32_MAX;

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::uint64_t phi_;
    std::array<Generator, 2> gens_{};
    std::size_t gen_count_ = 0;
    std::vector<std::array<std::uint32_t, 2>> log_;
};

/// Shared, immutable structure for p^m; built on first use.
std::shared_ptr<const PrimePowerLocal> prime_power_local(std::uint64_t p, unsigned m);

std::vector<std::uint64_t> enumerate_unit_subgroup(const PrimePowerLocal& local, unsigned i);

/// A character of (Z/p^m)^*.
class LocalCharacter {
public:
    LocalCharacter(std::shared_ptr<const PrimePowerLocal> local, LocalExponents exponents);

    const PrimePowerLocal& structure() const { return *local_; }
    const std::shared_ptr<const PrimePowerLocal>& structure_ptr() const { return local_; }
    const LocalExponents& exponents() const { return exps_; }
    std::uint64_t order() const { return order_; }

    /// Zero on non-units.  The result has order order().
    RootOfUnity operator()(std::uint64_t a) const;

    /// Smallest t with chi trivial on U_t, found by scanning U_m, U_{m-1}, ...
    unsigned conductor_exponent() const { return t_; }
    std::uint64_t conductor() const;

private:
    std::shared_ptr<const PrimePowerLocal> local_;
    LocalExponents exps_{};
    std::uint64_t order_ = 1;
    std::array<std::uint64_t, 2> steps_{}; // per-generator numerator over order_
    unsigned t_ = 0;
};

class DirichletCharacter {
public:
    /// locals[i] must be a character mod the i-th prime-power part of modulus.
    DirichletCharacter(Factorization modulus, std::vector<LocalCharacter> locals);

    const Factorization& modulus() const { return modulus_; }
    std::uint64_t modulus_value() const { return n_; }
    std::span<const LocalCharacter> locals() const { return locals_; }

    /// lcm of the local orders; every value is an order()-th root of unity.
    std::uint64_t order() const { return order_; }
    /// Product of the local conductors.
    std::uint64_t conductor() const { return conductor_; }
    bool is_trivial() const { return order_ == 1; }

    /// chi(a mod n) written over order(); Zero when gcd(a, n) > 1.
    RootOfUnity operator()(std::uint64_t a) const;

    /// Flattened exponent digits and their radices, in index order.
    std::vector<std::uint64_t> digits() const;
    std::vector<std::uint64_t> radices() const;
    /// Mixed-radix position of this character in its group.
    std::uint64_t index() const;

    /// chi(a) numerators over order() for a = 0..n-1; -1 marks non-units.
    std::vector<std::int64_t> value_table() const;

private:
    Factorization modulus_;
    std::uint64_t n_;
    std::vector<LocalCharacter> locals_;
    std::uint64_t order_ = 1;
    std::uint64_t conductor_ = 1;
};

/// Default cap on the number of characters character_group() will build.
inline constexpr std::uint64_t kDefaultCharacterCap = 1'000'000;

/// The group of characters mod n, addressable by mixed-radix index.
class CharacterGroup {
public:
    explicit CharacterGroup(Factorization n);

    const Factorization& modulus() const { return modulus_; }
    /// phi(n).
    std::uint64_t size() const { return size_; }
    std::span<const std::uint64_t> radices() const { return radices_; }

    /// Throws std::out_of_range when index >= size().
    DirichletCharacter at(std::uint64_t index) const;
    DirichletCharacter trivial() const { return at(0); }

private:
    Factorization modulus_;
    std::vector<std::shared_ptr<const PrimePowerLocal>> locals_;
    std::vector<std::uint64_t> radices_;
    std::uint64_t size_ = 1;
};

/// All phi(n) characters, index 0 trivial.  resource_error past cap.
std::vector<DirichletCharacter> character_group(const Factorization& n,
                                                std::uint64_t cap = kDefaultCharacterCap);

RootOfUnity evaluate(const DirichletCharacter& chi, std::uint64_t a);

/// Smallest d | n such that chi(a) = 1 for every unit a = 1 mod d, by brute
/// force over the whole unit group.  Independent of the local conductors.
std::uint64_t conductor_by_scan(const DirichletCharacter& chi);

/// chi1 * chi2 as a character mod n1 n2; moduli must be coprime.
DirichletCharacter crt_product(const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// The character mod p_i^{m_i} that is the i-th CRT component of chi.
DirichletCharacter component(const DirichletCharacter& chi, std::size_t i);

/// The character mod conductor(chi) inducing chi.
DirichletCharacter primitive_character(const DirichletCharacter& chi);

/// sum_{a in U_i} chi(a), exactly.
CyclotomicSum char_sum_on_unit_subgroup(const LocalCharacter& chi, unsigned i);

} // namespace gcdsum
