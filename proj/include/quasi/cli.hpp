// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quasi/scer.hpp"

namespace quasi::cli {

enum class Format { Tsv, Json };
enum class InputMode { Bytes, Tokens };
enum class ArrayKind { Border, Scover, Lcover, Covers, Lseeds };

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitMalformed = 2;

struct AnalysisRequest {
    ScerKind scer = ScerKind::Identity;
    std::vector<ArrayKind> arrays;  // canonical order, no duplicates
    Format format = Format::Tsv;
    InputMode input_mode = InputMode::Bytes;
    std::optional<std::string> input_path;  // nullopt or "-" reads `in`
    std::optional<std::string> border_file;
    bool oracle = false;
    bool stream = false;
};

/// Per-array results of a batch run. `covers` and `lseeds` describe the whole text.
struct Report {
    ScerKind scer = ScerKind::Identity;
    std::size_t n = 0;
    std::vector<std::size_t> border, scover, lcover, covers, lseeds;
};

/// Parses "border,scover,..." into canonical order. Throws std::invalid_argument.
std::vector<ArrayKind> parse_array_list(const std::string& csv);

/// Executes a request, writing the report to `out` and diagnostics to `err`.
/// Returns kExitOk, kExitIo or kExitMalformed.
int run(const AnalysisRequest& request, std::istream& in, std::ostream& out, std::ostream& err);

/// Full command line entry point (args excludes the program name).
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

void write_tsv(const Report& report, const std::vector<ArrayKind>& arrays, std::ostream& out);
void write_json(const Report& report, const std::vector<ArrayKind>& arrays, std::ostream& out);

}  // namespace quasi::cli
