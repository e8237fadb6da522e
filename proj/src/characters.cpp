#include "gcdsum/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace gcdsum {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    base %= m;
    for (; exp != 0; exp >>= 1) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
    }
    return r;
}

std::uint64_t smallest_primitive_root(std::uint64_t p, std::uint64_t q, std::uint64_t phi)
{
    const Factorization f = factorize(phi);
    std::vector<std::uint64_t> prime_factors;
    for (const auto& part : f.parts())
        prime_factors.push_back(part.prime);

    for (std::uint64_t g = 2; g < q; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (std::uint64_t r : prime_factors) {
            if (powmod(g, phi / r, q) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("no primitive root mod " + std::to_string(q));
}

} // namespace

PrimePowerLocal::PrimePowerLocal(std::uint64_t p, unsigned m)
    : p_(p), m_(m)
{
    if (!is_prime(p) || m == 0)
        throw std::domain_error("PrimePowerLocal: expected a prime power p^m with m >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > kMaxLocalModulus / p)
            throw resource_error("prime power " + std::to_string(p) + "^" + std::to_string(m) +
                                 " exceeds the log-table limit");
        q *= p;
    }
    q_ = q;
    phi_ = q - q / p;

    if (p == 2 && m >= 3) {
        gens_[0] = {q - 1, 2};
        gens_[1] = {5, q / 4};
        gen_count_ = 2;
    } else if (q == 2) {
        gens_[0] = {1, 1};
        gen_count_ = 1;
    } else {
        gens_[0] = {smallest_primitive_root(p, q, phi_), phi_};
        gen_count_ = 1;
    }

    log_.assign(q, {kNotUnit, kNotUnit});
    std::uint64_t filled = 0;
    if (gen_count_ == 1) {
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i < gens_[0].order; ++i) {
            log_[x] = {static_cast<std::uint32_t>(i), 0};
            x = mulmod(x, gens_[0].element, q);
            ++filled;
        }
    } else {
        for (std::uint64_t a = 0; a < gens_[0].order; ++a) {
            std::uint64_t x = a == 0 ? 1 : q - 1;
            for (std::uint64_t b = 0; b < gens_[1].order; ++b) {
                log_[x] = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
                x = mulmod(x, 5, q);
                ++filled;
            }
        }
    }
    if (filled != phi_)
        throw std::logic_error("log table for " + std::to_string(q) + " is incomplete");
}

LocalExponents PrimePowerLocal::log(std::uint64_t a) const
{
    const auto& entry = log_[a % q_];
    if (entry[0] == kNotUnit)
        throw std::domain_error("log: " + std::to_string(a) + " is not a unit mod " + std::to_string(q_));
    return {entry[0], entry[1]};
}

std::uint64_t PrimePowerLocal::exp(const LocalExponents& e) const
{
    std::uint64_t x = 1 % q_;
    for (std::size_t j = 0; j < gen_count_; ++j)
        x = mulmod(x, powmod(gens_[j].element, e[j], q_), q_);
    return x;
}

std::vector<std::uint64_t> PrimePowerLocal::unit_subgroup(unsigned i) const
{
    if (i > m_)
        throw std::domain_error("unit_subgroup: index " + std::to_string(i) + " exceeds exponent " +
                                std::to_string(m_));
    std::vector<std::uint64_t> out;
    if (i == 0) {
        out.reserve(phi_);
        for (std::uint64_t a = 1; a < q_; ++a)
            if (a % p_ != 0) out.push_back(a);
        return out;
    }
    const std::uint64_t step = ipow(p_, i);
    const std::uint64_t count = q_ / step;
    out.reserve(count);
    for (std::uint64_t j = 0; j < count; ++j)
        out.push_back((1 + step * j) % q_);
    return out;
}

std::shared_ptr<const PrimePowerLocal> prime_power_local(std::uint64_t p, unsigned m)
{
    static std::mutex mutex;
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const PrimePowerLocal>> cache;

    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const PrimePowerLocal>(p, m);
    std::lock_guard lock(mutex);
    return cache.emplace(std::pair{p, m}, std::move(built)).first->second;
}

std::vector<std::uint64_t> enumerate_unit_subgroup(const PrimePowerLocal& local, unsigned i)
{
    return local.unit_subgroup(i);
}

LocalCharacter::LocalCharacter(std::shared_ptr<const PrimePowerLocal> local, LocalExponents exponents)
    : local_(std::move(local))
{
    const auto gens = local_->generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        exps_[j] = exponents[j] % gens[j].order;
        order_ = std::lcm(order_, gens[j].order / std::gcd(exps_[j], gens[j].order));
    }
    // zeta_{o_j}^{e_j} = zeta_{o_j/g}^{e_j/g} = zeta_order^{(e_j/g) * order/(o_j/g)}
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::uint64_t g = std::gcd(exps_[j], gens[j].order);
        const std::uint64_t reduced_order = gens[j].order / g;
        steps_[j] = (exps_[j] / g) * (order_ / reduced_order);
    }

    auto trivial_on = [&](unsigned i) {
        for (std::uint64_t a : local_->unit_subgroup(i))
            if (!(*this)(a).is_one()) return false;
        return true;
    };
    t_ = 0;
    for (unsigned i = local_->exponent() + 1; i-- > 0;) {
        if (!trivial_on(i)) {
            t_ = i + 1;
            break;
        }
    }
}

RootOfUnity LocalCharacter::operator()(std::uint64_t a) const
{
    if (!local_->is_unit(a)) return RootOfUnity::zero();
    const LocalExponents log = local_->log(a);
    std::uint64_t num = 0;
    const std::size_t n = local_->generators().size();
    for (std::size_t j = 0; j < n; ++j)
        num = (num + mulmod(steps_[j], log[j], order_)) % order_;
    return RootOfUnity(num, order_);
}

std::uint64_t LocalCharacter::conductor() const
{
    return ipow(local_->prime(), t_);
}

DirichletCharacter::DirichletCharacter(Factorization modulus, std::vector<LocalCharacter> locals)
    : modulus_(std::move(modulus)), n_(modulus_.value_u64()), locals_(std::move(locals))
{
    const auto& parts = modulus_.parts();
    if (parts.size() != locals_.size())
        throw std::domain_error("DirichletCharacter: one local character per prime-power part expected");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& s = locals_[i].structure();
        if (s.prime() != parts[i].prime || s.exponent() != parts[i].exponent)
            throw std::domain_error("DirichletCharacter: local character does not match modulus part");
        order_ = std::lcm(order_, locals_[i].order());
        conductor_ *= locals_[i].conductor();
    }
}

RootOfUnity DirichletCharacter::operator()(std::uint64_t a) const
{
    a %= n_;
    std::uint64_t num = 0;
    for (const auto& local : locals_) {
        const RootOfUnity r = local(a % local.structure().modulus());
        if (r.is_zero()) return r;
        num = (num + r.numerator() * (order_ / r.order())) % order_;
    }
    return RootOfUnity(num, order_);
}

std::vector<std::uint64_t> DirichletCharacter::digits() const
{
    std::vector<std::uint64_t> out;
    for (const auto& local : locals_) {
        const std::size_t n = local.structure().generators().size();
        for (std::size_t j = 0; j < n; ++j) out.push_back(local.exponents()[j]);
    }
    return out;
}

std::vector<std::uint64_t> DirichletCharacter::radices() const
{
    std::vector<std::uint64_t> out;
    for (const auto& local : locals_)
        for (const auto& g : local.structure().generators()) out.push_back(g.order);
    return out;
}

std::uint64_t DirichletCharacter::index() const
{
    const auto d = digits();
    const auto r = radices();
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < d.size(); ++i) idx = idx * r[i] + d[i];
    return idx;
}

std::vector<std::int64_t> DirichletCharacter::value_table() const
{
    std::vector<std::int64_t> out(n_);
    for (std::uint64_t a = 0; a < n_; ++a) {
        const RootOfUnity r = (*this)(a);
        out[a] = r.is_zero() ? -1 : static_cast<std::int64_t>(r.numerator());
    }
    return out;
}

CharacterGroup::CharacterGroup(Factorization n)
    : modulus_(std::move(n))
{
    modulus_.value_u64();
    for (const auto& part : modulus_.parts()) {
        locals_.push_back(prime_power_local(part.prime, part.exponent));
        for (const auto& g : locals_.back()->generators()) {
            radices_.push_back(g.order);
            size_ *= g.order;
        }
    }
}

DirichletCharacter CharacterGroup::at(std::uint64_t index) const
{
    if (index >= size_)
        throw std::out_of_range("character index " + std::to_string(index) + " out of range for modulus " +
                                to_string(modulus_.value()) + " (group order " + std::to_string(size_) + ")");
    std::vector<std::uint64_t> digits(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
        digits[i] = index % radices_[i];
        index /= radices_[i];
    }
    std::vector<LocalCharacter> locals;
    std::size_t pos = 0;
    for (const auto& local : locals_) {
        LocalExponents e{};
        for (std::size_t j = 0; j < local->generators().size(); ++j) e[j] = digits[pos++];
        locals.emplace_back(local, e);
    }
    return DirichletCharacter(modulus_, std::move(locals));
}

std::vector<DirichletCharacter> character_group(const Factorization& n, std::uint64_t cap)
{
    CharacterGroup group(n);
    if (group.size() > cap)
        throw resource_error("character group mod " + to_string(n.value()) + " has " +
                             std::to_string(group.size()) + " elements, above the cap of " + std::to_string(cap));
    std::vector<DirichletCharacter> out;
    out.reserve(group.size());
    for (std::uint64_t i = 0; i < group.size(); ++i) out.push_back(group.at(i));
    return out;
}

RootOfUnity evaluate(const DirichletCharacter& chi, std::uint64_t a)
{
    return chi(a);
}

std::uint64_t conductor_by_scan(const DirichletCharacter& chi)
{
    const std::uint64_t n = chi.modulus_value();
    if (n == 1) return 1;
    for (std::uint64_t d : divisors_u64(chi.modulus())) {
        bool trivial = true;
        for (std::uint64_t a = 1; a < n; a += d) {
            const RootOfUnity r = chi(a);
            if (!r.is_zero() && !r.is_one()) {
                trivial = false;
                break;
            }
        }
        if (trivial) return d;
    }
    throw std::logic_error("conductor_by_scan: no divisor works");
}

DirichletCharacter crt_product(const DirichletCharacter& chi1, const DirichletCharacter& chi2)
{
    const auto& n1 = chi1.modulus();
    const auto& n2 = chi2.modulus();
    if (gcd(n1.value(), n2.value()) != 1)
        throw std::domain_error("crt_product: moduli are not coprime");

    std::vector<PrimePower> parts;
    std::vector<LocalCharacter> locals;
    std::size_t i = 0, j = 0;
    while (i < chi1.locals().size() || j < chi2.locals().size()) {
        const bool take_first = j == chi2.locals().size() ||
                                (i < chi1.locals().size() && n1.parts()[i].prime < n2.parts()[j].prime);
        if (take_first) {
            parts.push_back(n1.parts()[i]);
            locals.push_back(chi1.locals()[i++]);
        } else {
            parts.push_back(n2.parts()[j]);
            locals.push_back(chi2.locals()[j++]);
        }
    }
    return DirichletCharacter(Factorization(n1.value() * n2.value(), std::move(parts)), std::move(locals));
}

DirichletCharacter component(const DirichletCharacter& chi, std::size_t i)
{
    const PrimePower part = chi.modulus().parts().at(i);
    return DirichletCharacter(Factorization(part.value(), {part}), {chi.locals()[i]});
}

DirichletCharacter primitive_character(const DirichletCharacter& chi)
{
    std::vector<PrimePower> parts;
    std::vector<LocalCharacter> locals;
    mpz_class d = 1;
    for (const auto& local : chi.locals()) {
        const unsigned t = local.conductor_exponent();
        if (t == 0) continue;
        const std::uint64_t p = local.structure().prime();
        auto reduced = prime_power_local(p, t);
        LocalExponents e{};
        const auto gens = reduced->generators();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            // gens[j].element < p^t is its own lift to a unit mod p^m.
            const RootOfUnity r = local(gens[j].element);
            const mpz_class scaled = mpz_class(static_cast<unsigned long>(r.numerator())) * gens[j].order;
            if (scaled % r.order() != 0)
                throw std::logic_error("primitive_character: character does not factor through its conductor");
            const mpz_class q = scaled / r.order();
            e[j] = static_cast<std::uint64_t>(q.get_ui());
        }
        parts.push_back({p, t});
        locals.emplace_back(std::move(reduced), e);
        d *= parts.back().value();
    }
    return DirichletCharacter(Factorization(d, std::move(parts)), std::move(locals));
}

CyclotomicSum char_sum_on_unit_subgroup(const LocalCharacter& chi, unsigned i)
{
    CyclotomicSum sum(chi.order());
    for (std::uint64_t a : chi.structure().unit_subgroup(i)) sum.add(chi(a));
    return sum;
}

} // namespace gcdsum
