#include "gcdsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <thread>

namespace gcdsum {

namespace {

struct ItemResult {
    std::uint64_t cases = 0;
    std::vector<Mismatch> mismatches;
    std::exception_ptr error;
};

ItemResult verify_modulus(std::uint64_t n, const VerifyOptions& options)
{
    ItemResult result;
    std::vector<Mode> modes;
    for (const auto& pair : options.pairs) {
        for (Mode m : {pair.first, pair.second})
            if (std::find(modes.begin(), modes.end(), m) == modes.end()) modes.push_back(m);
    }

    const CharacterGroup group(factorize(n));
    for (std::uint64_t index = 0; index < group.size(); ++index) {
        const DirichletCharacter chi = group.at(index);
        for (unsigned k : options.k_list) {
            std::map<Mode, mpz_class> values;
            for (Mode m : modes) values[m] = evaluate_menon(chi, k, m, options.work_cap).value;
            for (const auto& pair : options.pairs) {
                ++result.cases;
                const mpz_class& a = values[pair.first];
                const mpz_class& b = values[pair.second];
                if (a != b) result.mismatches.push_back({n, index, k, pair.first, a, pair.second, b});
            }
        }
    }
    return result;
}

} // namespace

std::vector<ModePair> all_mode_pairs()
{
    std::vector<ModePair> out;
    for (std::size_t i = 0; i < kAllModes.size(); ++i)
        for (std::size_t j = i + 1; j < kAllModes.size(); ++j) out.push_back({kAllModes[i], kAllModes[j]});
    return out;
}

std::optional<ModePair> parse_mode_pair(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    const auto a = parse_mode(text.substr(0, colon));
    const auto b = parse_mode(text.substr(colon + 1));
    if (!a || !b || *a == *b) return std::nullopt;
    return ModePair{*a, *b};
}

std::string mode_pair_name(const ModePair& pair)
{
    return std::string(mode_name(pair.first)) + ":" + std::string(mode_name(pair.second));
}

std::uint64_t predicted_cases(const VerifyOptions& options)
{
    std::uint64_t characters = 0;
    for (std::uint64_t n = 1; n <= options.max_n; ++n)
        characters += euler_phi(factorize(n)).get_ui();
    return characters * options.k_list.size() * options.pairs.size();
}

VerificationReport run_verification(const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();

    const bool uses_naive = std::any_of(options.pairs.begin(), options.pairs.end(), [](const ModePair& p) {
        return p.first == Mode::naive || p.second == Mode::naive;
    });
    if (uses_naive) {
        for (unsigned k : options.k_list) {
            for (std::uint64_t n = 1; n <= options.max_n; ++n) {
                const mpz_class work = naive_work(n, k);
                if (work > mpz_class(static_cast<unsigned long>(options.work_cap)))
                    throw resource_error("verify: naive mode at n = " + std::to_string(n) + ", k = " +
                                         std::to_string(k) + " needs " + to_string(work) +
                                         " steps, above the cap of " + std::to_string(options.work_cap));
            }
        }
    }

    std::vector<ItemResult> results(options.max_n);
    auto run_item = [&](std::uint64_t n) {
        try {
            results[n - 1] = verify_modulus(n, options);
        } catch (...) {
            results[n - 1].error = std::current_exception();
        }
    };

    if (options.parallel && options.max_n > 1) {
        unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
        workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, options.max_n));
        // Largest moduli first: they dominate the runtime.
        std::atomic<std::uint64_t> taken{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t i = taken++; i < options.max_n; i = taken++) run_item(options.max_n - i);
            });
        }
    } else {
        for (std::uint64_t n = 1; n <= options.max_n; ++n) run_item(n);
    }

    VerificationReport report;
    report.max_n = options.max_n;
    report.k_list = options.k_list;
    report.pairs = options.pairs;
    for (auto& item : results) {
        if (item.error) std::rethrow_exception(item.error);
        report.cases_run += item.cases;
        for (auto& m : item.mismatches) report.mismatches.push_back(std::move(m));
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace gcdsum
