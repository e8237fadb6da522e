#include "gcdsum/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace gcdsum::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kIndexHelp =
    "Character index: mixed radix over the local exponent digits, primes ascending, the first digit most "
    "significant. Each odd prime power p^m (and 4) contributes one digit, the exponent on its smallest "
    "primitive root; 2^m with m >= 3 contributes two digits, the exponent on -1 followed by the exponent on 5. "
    "Index 0 is the trivial character.";

class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const
    {
        std::vector<std::size_t> widths(header_.size());
        for (std::size_t c = 0; c < header_.size(); ++c) {
            widths[c] = header_[c].size();
            for (const auto& row : rows_) widths[c] = std::max(widths[c], row[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c + 1 == cells.size())
                    out << cells[c];
                else
                    out << std::left << std::setw(static_cast<int>(widths[c] + 2)) << cells[c];
            }
            out << '\n';
        };
        line(header_);
        for (const auto& row : rows_) line(row);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string join_digits(const std::vector<std::uint64_t>& digits)
{
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(digits[i]);
    }
    return s;
}

CharacterGroup make_group(const Factorization& n)
{
    if (!n.fits_u64())
        throw usage_error("modulus " + to_string(n.value()) + " is too large for character enumeration");
    return CharacterGroup(n);
}

} // namespace

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "table") return Format::table;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    return std::nullopt;
}

Factorization parse_modulus(std::string_view text)
{
    const bool digits_only =
        !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!digits_only) throw usage_error("malformed modulus '" + std::string(text) + "'");
    const mpz_class n(std::string(text), 10);
    if (n < 1) throw usage_error("modulus must be at least 1");
    return factorize(n);
}

void cmd_characters(const Factorization& modulus, Format format, std::ostream& out)
{
    const CharacterGroup group = make_group(modulus);
    TextTable table({"index", "digits", "order", "conductor"});
    if (format == Format::csv) out << "index,digits,order,conductor\n";

    for (std::uint64_t i = 0; i < group.size(); ++i) {
        const DirichletCharacter chi = group.at(i);
        const auto digits = chi.digits();
        switch (format) {
        case Format::json: {
            ordered_json row;
            row["index"] = i;
            row["digits"] = digits;
            row["order"] = chi.order();
            row["conductor"] = chi.conductor();
            out << row.dump() << '\n';
            break;
        }
        case Format::csv:
            out << i << ',' << join_digits(digits) << ',' << chi.order() << ',' << chi.conductor() << '\n';
            break;
        case Format::table:
            table.add({std::to_string(i), digits.empty() ? "-" : join_digits(digits), std::to_string(chi.order()),
                       std::to_string(chi.conductor())});
            break;
        }
    }
    if (format == Format::table) table.print(out);
}

std::string evaluation_json(const MenonEvaluation& e)
{
    ordered_json j;
    j["n"] = e.modulus;
    j["char_index"] = e.char_index;
    j["conductor"] = e.conductor;
    j["k"] = e.k;
    j["mode"] = std::string(mode_name(e.mode));
    j["value"] = to_string(e.value);
    return j.dump();
}

MenonEvaluation cmd_eval(const Factorization& modulus, std::uint64_t char_index, unsigned k, Mode mode,
                         std::uint64_t work_cap, std::ostream& out)
{
    const CharacterGroup group = make_group(modulus);
    if (char_index >= group.size())
        throw usage_error("character index " + std::to_string(char_index) + " out of range: modulus " +
                          to_string(modulus.value()) + " has " + std::to_string(group.size()) + " characters");
    MenonEvaluation e = evaluate_menon(group.at(char_index), k, mode, work_cap);
    out << evaluation_json(e) << '\n';
    return e;
}

VerificationReport cmd_verify(const VerifyOptions& options, Format format, std::ostream& out, std::ostream& err)
{
    if (options.max_n < 1) throw usage_error("--max-n must be at least 1");
    if (options.k_list.empty()) throw usage_error("--k-list must not be empty");
    if (options.pairs.empty()) throw usage_error("at least one mode pair is required");
    if (format == Format::csv) throw usage_error("verify supports --format table or json");

    const VerificationReport report = run_verification(options);

    std::vector<std::string> pair_names;
    for (const auto& p : report.pairs) pair_names.push_back(mode_pair_name(p));

    if (format == Format::json) {
        ordered_json j;
        j["max_n"] = report.max_n;
        j["k_list"] = report.k_list;
        j["pairs"] = pair_names;
        j["cases_run"] = report.cases_run;
        j["mismatches"] = ordered_json::array();
        for (const auto& m : report.mismatches) {
            ordered_json row;
            row["n"] = m.n;
            row["char_index"] = m.char_index;
            row["k"] = m.k;
            row["mode_a"] = std::string(mode_name(m.mode_a));
            row["value_a"] = to_string(m.value_a);
            row["mode_b"] = std::string(mode_name(m.mode_b));
            row["value_b"] = to_string(m.value_b);
            j["mismatches"].push_back(row);
        }
        j["elapsed_seconds"] = report.elapsed_seconds;
        out << j.dump() << '\n';
    } else {
        std::ostringstream ks;
        for (std::size_t i = 0; i < report.k_list.size(); ++i) ks << (i ? "," : "") << report.k_list[i];
        std::string pairs;
        for (std::size_t i = 0; i < pair_names.size(); ++i) pairs += (i ? "," : "") + pair_names[i];
        out << "range:      1 <= n <= " << report.max_n << ", k in {" << ks.str() << "}\n"
            << "pairs:      " << pairs << '\n'
            << "cases run:  " << report.cases_run << '\n'
            << "mismatches: " << report.mismatches.size() << '\n'
            << "elapsed:    " << std::fixed << std::setprecision(3) << report.elapsed_seconds << " s\n"
            << (report.ok() ? "OK" : "FAILED") << '\n';
    }

    if (!report.ok()) {
        const Mismatch& m = report.mismatches.front();
        err << "counterexample: n=" << m.n << " char_index=" << m.char_index << " k=" << m.k << ' '
            << mode_name(m.mode_a) << '=' << to_string(m.value_a) << ' ' << mode_name(m.mode_b) << '='
            << to_string(m.value_b) << '\n';
    }
    return report;
}

void cmd_table(std::span<const std::uint64_t> n_list, unsigned k, Mode mode, Format format,
               std::uint64_t work_cap, std::ostream& out)
{
    std::vector<std::uint64_t> moduli(n_list.begin(), n_list.end());
    std::sort(moduli.begin(), moduli.end());
    moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());

    TextTable table({"n", "char_index", "conductor", "value"});
    if (format == Format::csv) out << "n,char_index,conductor,value\n";
    for (std::uint64_t n : moduli) {
        if (n < 1) throw usage_error("every modulus in --n-list must be at least 1");
        const CharacterGroup group = make_group(factorize(n));
        for (std::uint64_t i = 0; i < group.size(); ++i) {
            const MenonEvaluation e = evaluate_menon(group.at(i), k, mode, work_cap);
            const std::string value = to_string(e.value);
            switch (format) {
            case Format::json: {
                ordered_json row;
                row["n"] = n;
                row["char_index"] = i;
                row["conductor"] = e.conductor;
                row["value"] = value;
                out << row.dump() << '\n';
                break;
            }
            case Format::csv:
                out << n << ',' << i << ',' << e.conductor << ',' << value << '\n';
                break;
            case Format::table:
                table.add({std::to_string(n), std::to_string(i), std::to_string(e.conductor), value});
                break;
            }
        }
    }
    if (format == Format::table) table.print(out);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dirichlet characters and character-twisted Menon sums, in exact arithmetic.", "gcdsum"};
    app.require_subcommand(1);
    app.footer(kIndexHelp);

    std::string modulus_text;
    std::string format_text = "table";
    std::string mode_text = "closed";
    std::uint64_t char_index = 0;
    unsigned k = 0;
    std::uint64_t work_cap = kDefaultWorkCap;
    VerifyOptions verify;
    std::vector<std::string> pair_texts;
    std::vector<std::uint64_t> n_list;

    const std::string mode_help = "Evaluation mode: naive, grouped, local or closed";
    const std::string format_help = "Output format: table, json or csv";

    auto* characters = app.add_subcommand("characters", "List every character mod n with its order and conductor");
    characters->add_option("--modulus", modulus_text, "Modulus n >= 1")->required();
    characters->add_option("--format", format_text, format_help);
    characters->footer(kIndexHelp);

    auto* eval = app.add_subcommand("eval", "Evaluate S(chi, n, k) and print it as one JSON object");
    eval->add_option("--modulus", modulus_text, "Modulus n >= 1")->required();
    eval->add_option("--char-index", char_index, "Character index, 0 <= index < phi(n)")->required();
    eval->add_option("--k", k, "Number of auxiliary variables b_1..b_k")->required();
    eval->add_option("--mode", mode_text, mode_help);
    eval->add_option("--work-cap", work_cap, "Step budget for naive mode");
    eval->footer(kIndexHelp);

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check evaluation modes for every n <= max-n");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest modulus checked");
    verify_cmd->add_option("--k-list", verify.k_list, "Comma-separated k values")->delimiter(',');
    verify_cmd->add_option("--pairs", pair_texts, "Comma-separated mode pairs such as grouped:closed (default: all)")
        ->delimiter(',');
    verify_cmd->add_flag("--parallel", verify.parallel, "Spread moduli over worker threads");
    verify_cmd->add_option("--threads", verify.threads, "Worker count for --parallel (default: all cores)");
    verify_cmd->add_option("--work-cap", work_cap, "Step budget for naive mode");
    verify_cmd->add_option("--format", format_text, "Output format: table or json");

    auto* table = app.add_subcommand("table", "Tabulate S(chi, n, k) over all characters of each modulus");
    table->add_option("--n-list", n_list, "Comma-separated moduli")->delimiter(',')->required();
    table->add_option("--k", k, "Number of auxiliary variables")->required();
    table->add_option("--mode", mode_text, mode_help);
    table->add_option("--format", format_text, format_help);
    table->add_option("--work-cap", work_cap, "Step budget for naive mode");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto format = parse_format(format_text);
        if (!format) throw usage_error("unknown format '" + format_text + "'");
        const auto mode = parse_mode(mode_text);
        if (!mode) throw usage_error("unknown mode '" + mode_text + "'");

        if (characters->parsed()) {
            cmd_characters(parse_modulus(modulus_text), *format, out);
        } else if (eval->parsed()) {
            cmd_eval(parse_modulus(modulus_text), char_index, k, *mode, work_cap, out);
        } else if (verify_cmd->parsed()) {
            if (!pair_texts.empty()) {
                verify.pairs.clear();
                for (const auto& t : pair_texts) {
                    const auto pair = parse_mode_pair(t);
                    if (!pair) throw usage_error("malformed mode pair '" + t + "'");
                    verify.pairs.push_back(*pair);
                }
            }
            verify.work_cap = work_cap;
            const VerificationReport report = cmd_verify(verify, *format, out, err);
            return report.ok() ? kExitOk : kExitMismatch;
        } else if (table->parsed()) {
            cmd_table(n_list, k, *mode, *format, work_cap, out);
        }
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace gcdsum::cli
