#include "gcdsum/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gcdsum {

RootOfUnity::RootOfUnity(std::uint64_t numerator, std::uint64_t order)
    : numerator_(0), order_(order)
{
    if (order == 0)
        throw std::domain_error("RootOfUnity: order must be positive");
    numerator_ = numerator % order;
}

RootOfUnity RootOfUnity::zero()
{
    RootOfUnity r;
    r.zero_ = true;
    return r;
}

RootOfUnity RootOfUnity::rescaled(std::uint64_t new_order) const
{
    if (zero_) return *this;
    if (new_order == 0 || new_order % order_ != 0)
        throw std::domain_error("RootOfUnity: target order is not a multiple of the current one");
    return RootOfUnity(numerator_ * (new_order / order_), new_order);
}

RootOfUnity RootOfUnity::reduced() const
{
    if (zero_) return *this;
    const std::uint64_t g = std::gcd(numerator_, order_);
    return RootOfUnity(numerator_ / g, order_ / g);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b)
{
    if (a.zero_ || b.zero_) return RootOfUnity::zero();
    const std::uint64_t n = std::lcm(a.order_, b.order_);
    return RootOfUnity(a.rescaled(n).numerator_ + b.rescaled(n).numerator_, n);
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b)
{
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    const RootOfUnity x = a.reduced();
    const RootOfUnity y = b.reduced();
    return x.numerator_ == y.numerator_ && x.order_ == y.order_;
}

CyclotomicSum::CyclotomicSum(std::uint64_t order)
    : order_(order), counts_(order)
{
    if (order == 0)
        throw std::domain_error("CyclotomicSum: order must be positive");
}

void CyclotomicSum::add(std::uint64_t j, const mpz_class& weight)
{
    counts_[j % order_] += weight;
}

void CyclotomicSum::add(const RootOfUnity& r, const mpz_class& weight)
{
    if (r.is_zero()) return;
    if (order_ % r.order() != 0) widen(std::lcm(order_, r.order()));
    add(r.rescaled(order_).numerator(), weight);
}

void CyclotomicSum::add(const CyclotomicSum& other, const mpz_class& weight)
{
    if (order_ % other.order_ != 0) widen(std::lcm(order_, other.order_));
    const std::uint64_t step = order_ / other.order_;
    for (std::uint64_t j = 0; j < other.order_; ++j) {
        if (other.counts_[j] != 0)
            counts_[j * step] += weight * other.counts_[j];
    }
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& other)
{
    add(other);
    return *this;
}

void CyclotomicSum::widen(std::uint64_t new_order)
{
    if (new_order == order_) return;
    if (new_order == 0 || new_order % order_ != 0)
        throw std::domain_error("CyclotomicSum: target order is not a multiple of the current one");
    std::vector<mpz_class> wider(new_order);
    const std::uint64_t step = new_order / order_;
    for (std::uint64_t j = 0; j < order_; ++j)
        wider[j * step] = std::move(counts_[j]);
    counts_ = std::move(wider);
    order_ = new_order;
}

namespace {

void trim(Polynomial& p)
{
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/// Exact quotient num / den; den monic, division must leave no remainder.
Polynomial divide_exact(Polynomial num, const Polynomial& den)
{
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size())
        throw std::logic_error("cyclotomic division: dividend degree too small");
    Polynomial quotient(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        const mpz_class c = num[i];
        quotient[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            num[i - dd + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    trim(quotient);
    return quotient;
}

std::mutex cache_mutex;
std::map<std::uint64_t, Polynomial> cache;

Polynomial compute_cyclotomic(std::uint64_t n)
{
    // x^n - 1
    Polynomial p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    }
    return p;
}

} // namespace

Polynomial cyclotomic_polynomial(std::uint64_t n)
{
    if (n == 0)
        throw std::domain_error("cyclotomic_polynomial: order must be positive");
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    Polynomial p = compute_cyclotomic(n);
    std::lock_guard lock(cache_mutex);
    return cache.emplace(n, std::move(p)).first->second;
}

Polynomial reduce_mod_monic(Polynomial p, const Polynomial& modulus)
{
    if (modulus.empty() || modulus.back() != 1)
        throw std::domain_error("reduce_mod_monic: modulus must be monic");
    const std::size_t dm = modulus.size() - 1;
    for (std::size_t i = p.size(); i-- > dm;) {
        const mpz_class c = p[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j)
            p[i - dm + j] -= c * modulus[j];
    }
    if (p.size() > dm) p.resize(std::max<std::size_t>(dm, 1));
    trim(p);
    return p;
}

std::optional<mpz_class> extract_integer(const CyclotomicSum& s)
{
    const Polynomial rem = reduce_mod_monic(s.counts(), cyclotomic_polynomial(s.order()));
    for (std::size_t j = 1; j < rem.size(); ++j)
        if (rem[j] != 0) return std::nullopt;
    return rem.empty() ? mpz_class(0) : rem[0];
}

} // namespace gcdsum
