#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::uint64_t phi(std::uint64_t n)
{
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++count;
    return count;
}

mpz_class sigma(std::uint64_t n, unsigned k)
{
    mpz_class total = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), d, k);
        total += term;
    }
    return total;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t crt_scan(const std::vector<std::uint64_t>& moduli, const std::vector<std::uint64_t>& residues)
{
    std::uint64_t product = 1;
    for (auto q : moduli) product *= q;
    for (std::uint64_t x = 0; x < product; ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < moduli.size() && ok; ++i) ok = x % moduli[i] == residues[i];
        if (ok) return x;
    }
    throw std::logic_error("crt_scan: no solution");
}

std::map<std::uint64_t, std::uint64_t> tuple_gcd_histogram(std::uint64_t n, unsigned k)
{
    std::map<std::uint64_t, std::uint64_t> hist;
    std::vector<std::uint64_t> b(k, 0);
    while (true) {
        std::uint64_t g = n;
        for (auto x : b) g = std::gcd(g, x);
        ++hist[g];
        std::size_t i = 0;
        while (i < k && ++b[i] == n) b[i++] = 0;
        if (i == k) break;
    }
    return hist;
}

std::complex<double> complex_value(const gcdsum::DirichletCharacter& chi, std::uint64_t a)
{
    const auto r = chi(a);
    if (r.is_zero()) return 0.0;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r.numerator()) / static_cast<double>(r.order());
    return std::polar(1.0, angle);
}

std::complex<double> menon_numeric(const gcdsum::DirichletCharacter& chi, unsigned k)
{
    const std::uint64_t n = chi.modulus_value();
    std::complex<double> total = 0.0;
    for (std::uint64_t a = 0; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        const std::int64_t am1 = static_cast<std::int64_t>(a) - 1;
        const std::uint64_t base = std::gcd(static_cast<std::uint64_t>(std::llabs(am1)), n);
        double weight = 0;
        for (const auto& [g, count] : tuple_gcd_histogram(n, k))
            weight += static_cast<double>(std::gcd(base, g) * count);
        total += weight * complex_value(chi, a);
    }
    return total;
}

bool trivial_on_filtration(const gcdsum::LocalCharacter& chi, unsigned i)
{
    const auto& s = chi.structure();
    std::uint64_t pi = 1;
    for (unsigned j = 0; j < i; ++j) pi *= s.prime();
    for (std::uint64_t a = 1; a < s.modulus() || a == 1; ++a) {
        if (a % s.prime() == 0) continue;
        if (i > 0 && (a - 1) % pi != 0) continue;
        if (!chi(a).is_one()) return false;
        if (s.modulus() == 1) break;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> prime_powers_up_to(std::uint64_t bound)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        for (unsigned m = 1; q <= bound; ++m, q *= p) out.push_back({p, m});
    }
    return out;
}

} // namespace oracle
