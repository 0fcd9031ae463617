#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "canform/field.hpp"

namespace canform::cli {

enum class Command {
    rnf,
    affine,
    normal_form,
    verify,
    pairs_invariants,
    pairs_fiber,
    pairs_reduce,
    pairs_hom,
    pairs_split,
    selftest,
};

enum class Format { text, json };
enum class Family { rational, affine };

struct Invocation {
    Command command = Command::selftest;
    /// File paths, or the three invariants for `pairs fiber`.
    std::vector<std::string> inputs;
    std::optional<Field> field;
    Format format = Format::text;
    bool verify = false;
    Family family = Family::rational;
};

enum class Status { ok, mismatch, error };

struct Report {
    Status status = Status::ok;
    /// Keys are sorted on output, so equal payloads print identically.
    nlohmann::json payload = nlohmann::json::object();
};

struct Outcome {
    int exit_code;
    Report report;
};

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;

/// Parses argv-style arguments (without the program name).
/// Throws UsageError. A help request yields nullopt after printing to out.
std::optional<Invocation> parse_arguments(const std::vector<std::string>& args, std::ostream& out);

/// Never throws for library errors: they become status error with the
/// error name in the payload.
Outcome run(const Invocation& invocation);

Report selftest();

std::string render(const Report& report, Format format);

/// Whole program: parse, run, print. Returns the exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string status_name(Status status);

} // namespace canform::cli
