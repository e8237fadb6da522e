#pragma once

/**
 * @file menon.hpp
 * @brief The character-twisted Menon sum
 *
 *     S(chi, n, k) = sum over units a mod n and b_1..b_k mod n of
 *                    gcd(a - 1, b_1, ..., b_k, n) * chi(a),
 *
 * computed four ways:
 *
 *   naive    literal enumeration of every (a, b_1, ..., b_k);
 *   grouped  split by g = gcd(b_1, ..., b_k, n): sum over divisors g of
 *            #{b : gcd(b, n) = g} * sum_a gcd(a - 1, g) chi(a);
 *   local    per prime power, the closed gcd-twisted sums times the tuple
 *            counts, multiplied across the CRT parts;
 *   closed   phi(n) * sigma_k(n / conductor).
 *
 * For k = 0 the tuple is empty and the summand is gcd(a - 1, n).
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include <gmpxx.h>

#include "gcdsum/characters.hpp"
#include "gcdsum/cyclotomic.hpp"

namespace gcdsum {

enum class Mode { naive, grouped, local, closed };

inline constexpr std::array<Mode, 4> kAllModes{Mode::naive, Mode::grouped, Mode::local, Mode::closed};

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

struct MenonEvaluation {
    std::uint64_t modulus = 1;
    std::uint64_t char_index = 0;
    unsigned k = 0;
    Mode mode = Mode::closed;
    mpz_class value;
    std::uint64_t conductor = 1;
};

/// Default elementary-step budget for naive evaluation.
inline constexpr std::uint64_t kDefaultWorkCap = 100'000'000;

/// sum over units a mod n of gcd(a - 1, divisor) * chi(a).  divisor | n.
CyclotomicSum gcd_char_sum(const DirichletCharacter& chi, std::uint64_t divisor);

/// (s - t + 1)(p^m - p^{m-1}) when s >= t, else 0.
mpz_class gcd_char_sum_closed(std::uint64_t p, unsigned m, unsigned t, unsigned s);

/// #{(b_1..b_k) in (Z/n)^k : gcd(b_1, ..., b_k, n) = divisor}.
/// For k >= 1 this is sum_{e | n/divisor} mu(e) (n / (divisor e))^k.
mpz_class tuple_gcd_count(std::uint64_t n, unsigned k, std::uint64_t divisor);

/// n^k * phi(n): the number of summands the naive mode visits.
mpz_class naive_work(std::uint64_t n, unsigned k);

MenonEvaluation menon_naive(const DirichletCharacter& chi, unsigned k, std::uint64_t work_cap = kDefaultWorkCap);
MenonEvaluation menon_grouped(const DirichletCharacter& chi, unsigned k);
MenonEvaluation menon_local(const DirichletCharacter& chi, unsigned k);
MenonEvaluation menon_closed(const DirichletCharacter& chi, unsigned k);

MenonEvaluation evaluate_menon(const DirichletCharacter& chi, unsigned k, Mode mode,
                               std::uint64_t work_cap = kDefaultWorkCap);

} // namespace gcdsum
