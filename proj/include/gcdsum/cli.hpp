#pragma once

/**
 * @file cli.hpp
 * @brief The gcdsum command line: characters, eval, verify, table.
 *
 * The commands write to caller-supplied streams so they can be driven
 * in-process; run_cli() adds argument parsing and maps failures onto
 * exit codes.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gcdsum/menon.hpp"
#include "gcdsum/verify.hpp"

namespace gcdsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Format { table, json, csv };

std::optional<Format> parse_format(std::string_view name);

/// Decimal positive integer of any length; usage_error otherwise.
Factorization parse_modulus(std::string_view text);

void cmd_characters(const Factorization& modulus, Format format, std::ostream& out);

/// {"n":..,"char_index":..,"conductor":..,"k":..,"mode":"..","value":"<decimal>"}
std::string evaluation_json(const MenonEvaluation& e);

MenonEvaluation cmd_eval(const Factorization& modulus, std::uint64_t char_index, unsigned k, Mode mode,
                         std::uint64_t work_cap, std::ostream& out);

/// Prints the report; a first-mismatch dump goes to err.
VerificationReport cmd_verify(const VerifyOptions& options, Format format, std::ostream& out, std::ostream& err);

void cmd_table(std::span<const std::uint64_t> n_list, unsigned k, Mode mode, Format format,
               std::uint64_t work_cap, std::ostream& out);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gcdsum::cli
