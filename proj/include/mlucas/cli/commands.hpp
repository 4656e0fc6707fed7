#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <mlucas/cli/output.hpp>
#include <mlucas/cli/verify.hpp>

namespace mlucas::cli
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1; // verification failure or route disagreement
inline constexpr int exit_usage = 2;

struct CommandOutput {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

struct TermRequest {
    std::string family; // m, gm, mpoly, gmpoly
    std::int64_t n = 0;
    std::string method = "auto";
    Format format = Format::Text;
};

struct TableRequest {
    int which = 1; // 1 or 2
    std::int64_t rows = 6;
    Format format = Format::Text;
};

struct SeriesRequest {
    std::string which; // gm, gm-even, gm-odd, mpoly, gmpoly, kernel
    std::size_t order = 10;
    std::optional<std::string> d; // kernel only
    std::optional<std::string> p; // kernel only
    Format format = Format::Text;
};

struct VerifyRequest {
    VerifyOptions options;
    std::optional<std::string> perturb;
    Format format = Format::Text;
};

CommandOutput cmd_term(const TermRequest &req);
CommandOutput cmd_table(const TableRequest &req);
CommandOutput cmd_series(const SeriesRequest &req);
CommandOutput cmd_verify(const VerifyRequest &req);

// Full command line without the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mlucas::cli
