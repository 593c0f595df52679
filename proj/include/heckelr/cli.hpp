#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckelr/products.hpp"

namespace heckelr::cli {

enum class Command { symbol, pairs, ancestors, expand, factors, drinfeld, tensor, batch };
enum class Format { text, json };

/// Malformed command line. Exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;
inline constexpr int exit_integrity = 4;

struct Request {
    Command command = Command::factors;
    Format format = Format::text;
    std::optional<EvaluationModuleSpec> first;
    std::optional<EvaluationModuleSpec> second;
    // Explicit symbol rows, accepted by `pairs` and `ancestors`.
    std::optional<std::vector<Int>> top;
    std::optional<std::vector<Int>> bottom;
    std::optional<Int> rank;
    Int max_weight = 0;
    Int max_charge = 0;
    int threads = 0;
    std::optional<std::string> help; // set when --help was requested
};

/// Parses the arguments following the program name. Throws UsageError.
Request parse_args(const std::vector<std::string>& args);

/// Parses "4,1,1" (any order, zeros allowed) into integers. Throws UsageError.
std::vector<Int> parse_int_list(const std::string& text);

/// Executes a parsed request. Domain and integrity failures propagate.
void run(const Request& request, std::ostream& out);

/// Full pipeline: parse, run, report errors on `err`. Returns the exit code.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string render_multisegment(const Multisegment& m);
std::string render_symbol(const Symbol& s);
std::string render_expansion(const Expansion& e);

} // namespace heckelr::cli
