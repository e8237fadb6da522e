#include "gcdsum/menon.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace gcdsum {

namespace {

using u128 = unsigned __int128;

mpz_class from_u128(u128 v)
{
    mpz_class hi(static_cast<unsigned long>(v >> 64));
    mpz_class lo(static_cast<unsigned long>(v));
    return (hi << 64) + lo;
}

mpz_class pow_ui(std::uint64_t base, unsigned long exp)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

void require_divisor(std::uint64_t n, std::uint64_t divisor, const char* who)
{
    if (divisor == 0 || n % divisor != 0)
        throw std::domain_error(std::string(who) + ": " + std::to_string(divisor) + " does not divide " +
                                std::to_string(n));
}

/// Sum over units a of gcd(a - 1, divisor) * zeta^{values[a]}, values from value_table().
CyclotomicSum gcd_char_sum_from_table(const std::vector<std::int64_t>& values, std::uint64_t order,
                                      std::uint64_t divisor)
{
    std::vector<std::uint64_t> buckets(order);
    const std::uint64_t n = values.size();
    for (std::uint64_t a = 0; a < n; ++a) {
        if (values[a] < 0) continue;
        const std::uint64_t shifted = (a % divisor + divisor - 1) % divisor;
        buckets[static_cast<std::uint64_t>(values[a])] += std::gcd(shifted, divisor);
    }
    CyclotomicSum sum(order);
    for (std::uint64_t j = 0; j < order; ++j)
        if (buckets[j] != 0) sum.add(j, mpz_class(static_cast<unsigned long>(buckets[j])));
    return sum;
}

mpz_class extract_or_throw(const CyclotomicSum& s, const char* who)
{
    auto v = extract_integer(s);
    if (!v)
        throw std::logic_error(std::string(who) + ": Menon sum did not reduce to an integer");
    return *v;
}

MenonEvaluation make_record(const DirichletCharacter& chi, unsigned k, Mode mode, mpz_class value)
{
    return MenonEvaluation{chi.modulus_value(), chi.index(), k, mode, std::move(value), chi.conductor()};
}

/// Adds sum over (b_depth..b_k) of gcd(g, b_depth, ..., b_k) to acc.
void sum_tuple_gcds(std::uint64_t n, unsigned remaining, std::uint64_t g, u128& acc)
{
    if (remaining == 0) {
        acc += g;
        return;
    }
    for (std::uint64_t b = 0; b < n; ++b) sum_tuple_gcds(n, remaining - 1, std::gcd(g, b), acc);
}

} // namespace

std::string_view mode_name(Mode mode)
{
    switch (mode) {
    case Mode::naive: return "naive";
    case Mode::grouped: return "grouped";
    case Mode::local: return "local";
    case Mode::closed: return "closed";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view name)
{
    for (Mode m : kAllModes)
        if (mode_name(m) == name) return m;
    return std::nullopt;
}

CyclotomicSum gcd_char_sum(const DirichletCharacter& chi, std::uint64_t divisor)
{
    require_divisor(chi.modulus_value(), divisor, "gcd_char_sum");
    return gcd_char_sum_from_table(chi.value_table(), chi.order(), divisor);
}

mpz_class gcd_char_sum_closed(std::uint64_t p, unsigned m, unsigned t, unsigned s)
{
    if (!is_prime(p) || m == 0 || t > m || s > m)
        throw std::domain_error("gcd_char_sum_closed: need p prime, m >= 1, 0 <= t <= m, 0 <= s <= m");
    if (s < t) return 0;
    return mpz_class(s - t + 1) * (pow_ui(p, m) - pow_ui(p, m - 1));
}

mpz_class tuple_gcd_count(std::uint64_t n, unsigned k, std::uint64_t divisor)
{
    if (n == 0) throw std::domain_error("tuple_gcd_count: modulus must be positive");
    require_divisor(n, divisor, "tuple_gcd_count");
    // The empty tuple contributes gcd(n) = n.
    if (k == 0) return divisor == n ? 1 : 0;

    const std::uint64_t r = n / divisor;
    const Factorization f = factorize(r);
    std::vector<std::uint64_t> primes;
    for (const auto& part : f.parts()) primes.push_back(part.prime);

    // Only squarefree e | r carry a nonzero Moebius weight.
    mpz_class count = 0;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t e = 1;
        int sign = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                e *= primes[i];
                sign = -sign;
            }
        }
        const mpz_class term = pow_ui(r / e, k);
        if (sign > 0)
            count += term;
        else
            count -= term;
    }
    return count;
}

mpz_class naive_work(std::uint64_t n, unsigned k)
{
    return pow_ui(n, k) * euler_phi(factorize(n));
}

MenonEvaluation menon_naive(const DirichletCharacter& chi, unsigned k, std::uint64_t work_cap)
{
    const std::uint64_t n = chi.modulus_value();
    const mpz_class work = naive_work(n, k);
    if (work > mpz_class(static_cast<unsigned long>(work_cap)))
        throw resource_error("naive evaluation mod " + std::to_string(n) + " with k = " + std::to_string(k) +
                             " needs " + to_string(work) + " steps, above the cap of " + std::to_string(work_cap));

    CyclotomicSum sum(chi.order());
    for (std::uint64_t a = 0; a < n; ++a) {
        const RootOfUnity value = chi(a);
        if (value.is_zero()) continue;
        // gcd(a - 1, n): a - 1 taken mod n, gcd(0, n) = n.
        const std::uint64_t g = std::gcd((a + n - 1) % n, n);
        u128 weight = 0;
        if (k == 0)
            weight = g;
        else
            sum_tuple_gcds(n, k, g, weight);
        sum.add(value, from_u128(weight));
    }
    return make_record(chi, k, Mode::naive, extract_or_throw(sum, "menon_naive"));
}

MenonEvaluation menon_grouped(const DirichletCharacter& chi, unsigned k)
{
    const std::uint64_t n = chi.modulus_value();
    const auto values = chi.value_table();
    CyclotomicSum total(chi.order());
    for (std::uint64_t g : divisors_u64(chi.modulus())) {
        const mpz_class count = tuple_gcd_count(n, k, g);
        if (count == 0) continue;
        total.add(gcd_char_sum_from_table(values, chi.order(), g), count);
    }
    return make_record(chi, k, Mode::grouped, extract_or_throw(total, "menon_grouped"));
}

MenonEvaluation menon_local(const DirichletCharacter& chi, unsigned k)
{
    mpz_class product = 1;
    for (const auto& local : chi.locals()) {
        const auto& s = local.structure();
        const std::uint64_t p = s.prime();
        const unsigned m = s.exponent();
        const unsigned t = local.conductor_exponent();
        mpz_class part = 0;
        for (unsigned e = t; e <= m; ++e)
            part += gcd_char_sum_closed(p, m, t, e) * tuple_gcd_count(s.modulus(), k, ipow(p, e));
        product *= part;
    }
    return make_record(chi, k, Mode::local, product);
}

MenonEvaluation menon_closed(const DirichletCharacter& chi, unsigned k)
{
    const std::uint64_t n = chi.modulus_value();
    const mpz_class value = euler_phi(chi.modulus()) * sigma_k(factorize(n / chi.conductor()), k);
    return make_record(chi, k, Mode::closed, value);
}

MenonEvaluation evaluate_menon(const DirichletCharacter& chi, unsigned k, Mode mode, std::uint64_t work_cap)
{
    switch (mode) {
    case Mode::naive: return menon_naive(chi, k, work_cap);
    case Mode::grouped: return menon_grouped(chi, k);
    case Mode::local: return menon_local(chi, k);
    case Mode::closed: return menon_closed(chi, k);
    }
    throw std::domain_error("unknown mode");
}

} // namespace gcdsum
