// SPDX-License-Identifier: Apache-2.0

#include "quasi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "quasi/border.hpp"
#include "quasi/covers.hpp"
#include "quasi/oracle.hpp"

namespace quasi::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr ArrayKind kCanonicalOrder[] = {ArrayKind::Border, ArrayKind::Scover, ArrayKind::Lcover,
                                         ArrayKind::Covers, ArrayKind::Lseeds};

const char* array_name(ArrayKind kind) {
    switch (kind) {
    case ArrayKind::Border: return "border";
    case ArrayKind::Scover: return "scover";
    case ArrayKind::Lcover: return "lcover";
    case ArrayKind::Covers: return "covers";
    case ArrayKind::Lseeds: return "lseeds";
    }
    return "?";
}

std::optional<std::size_t> parse_unsigned(std::string_view word) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size() || word.empty()) {
        return std::nullopt;
    }
    return value;
}

class TokenReader {
public:
    TokenReader(std::istream& in, InputMode mode) : in_(in), mode_(mode) {}

    bool next(Token& token) {
        if (mode_ == InputMode::Bytes) {
            int c = in_.get();
            if (c == std::char_traits<char>::eof()) {
                check_stream();
                return false;
            }
            token = static_cast<unsigned char>(c);
            return true;
        }
        std::string word;
        if (!(in_ >> word)) {
            check_stream();
            return false;
        }
        Token value = 0;
        auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || ptr != word.data() + word.size()) {
            throw InputError("not a non-negative integer token: '" + word + "'");
        }
        token = value;
        return true;
    }

private:
    void check_stream() const {
        if (in_.bad()) {
            throw IoError("read error on input");
        }
    }

    std::istream& in_;
    InputMode mode_;
};

TokenSeq read_text(std::istream& in, InputMode mode) {
    TokenReader reader(in, mode);
    std::vector<Token> tokens;
    Token t = 0;
    while (reader.next(t)) {
        tokens.push_back(t);
    }
    return TokenSeq(std::move(tokens));
}

BorderArray read_border_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw IoError("cannot open border file '" + path + "'");
    }
    std::vector<std::size_t> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        auto value = parse_unsigned(std::string_view(line).substr(first, last - first + 1));
        if (!value) {
            throw InputError(path + ":" + std::to_string(line_no) + ": expected one non-negative integer");
        }
        values.push_back(*value);
    }
    if (file.bad()) {
        throw IoError("read error on border file '" + path + "'");
    }
    if (auto problem = BorderArray::check(values)) {
        throw InputError(path + ": invalid border array: " + *problem);
    }
    return BorderArray(std::move(values));
}

Report analyze(const TokenSeq& text, ScerKind scer, const std::optional<BorderArray>& given) {
    Report r;
    r.scer = scer;
    BorderArray border = given ? *given : border_array(text, scer);
    r.n = border.size();
    auto sca = shortest_cover_array(border);
    auto lca = longest_cover_array(border);
    r.border.assign(border.values().begin(), border.values().end());
    r.scover.assign(sca.values().begin(), sca.values().end());
    r.lcover.assign(lca.values().begin(), lca.values().end());
    if (r.n > 0) {
        r.covers = all_cover_lengths(lca, r.n);
        r.lseeds = left_seed_lengths(border, lca, r.n).lengths;
    }
    return r;
}

Report analyze_with_oracle(const TokenSeq& text, ScerKind scer) {
    Report r;
    r.scer = scer;
    r.n = text.size();
    auto border = oracle::brute_border_array(text.tokens(), scer);
    r.border.assign(border.values().begin(), border.values().end());
    r.scover = oracle::brute_scover(text.tokens(), scer);
    r.lcover = oracle::brute_lcover(text.tokens(), scer);
    for (std::size_t c = 1; c <= r.n; ++c) {
        if (oracle::is_cover(c, text.tokens(), scer)) {
            r.covers.push_back(c);
        }
    }
    if (r.n > 0) {
        r.lseeds = oracle::brute_left_seeds(text.tokens(), scer, r.n).lengths;
    }
    return r;
}

void write_list(std::ostream& out, const std::vector<std::size_t>& values, char sep) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) {
            out << sep;
        }
        out << values[k];
    }
}

// One row per prefix, emitted as soon as its position is known.
class StreamEmitter {
public:
    StreamEmitter(const AnalysisRequest& request, std::ostream& out) : request_(request), out_(out) {
        if (request_.format == Format::Tsv) {
            out_ << 'i';
            for (ArrayKind a : request_.arrays) {
                out_ << '\t' << array_name(a);
            }
            out_ << '\n' << std::flush;
        }
    }

    void push(std::size_t border) {
        std::size_t s = scover_.push(border);
        std::size_t l = lcover_.push(border);
        std::size_t i = lcover_.size();
        const auto& state = lcover_.state();

        if (request_.format == Format::Json) {
            nlohmann::ordered_json row;
            row["i"] = i;
            for (ArrayKind a : request_.arrays) {
                switch (a) {
                case ArrayKind::Border: row["border"] = border; break;
                case ArrayKind::Scover: row["scover"] = s; break;
                case ArrayKind::Lcover: row["lcover"] = l; break;
                case ArrayKind::Covers: row["covers"] = all_cover_lengths(state, i); break;
                case ArrayKind::Lseeds: row["lseeds"] = left_seed_lengths(state, i).lengths; break;
                }
            }
            out_ << row.dump() << '\n' << std::flush;
            return;
        }
        out_ << i;
        for (ArrayKind a : request_.arrays) {
            out_ << '\t';
            switch (a) {
            case ArrayKind::Border: out_ << border; break;
            case ArrayKind::Scover: out_ << s; break;
            case ArrayKind::Lcover: out_ << l; break;
            case ArrayKind::Covers: write_list(out_, all_cover_lengths(state, i), ','); break;
            case ArrayKind::Lseeds: write_list(out_, left_seed_lengths(state, i).lengths, ','); break;
            }
        }
        out_ << '\n' << std::flush;
    }

private:
    const AnalysisRequest& request_;
    std::ostream& out_;
    ShortestCoverBuilder scover_;
    LongestCoverBuilder lcover_;
};

int run_checked(const AnalysisRequest& request, std::istream& in, std::ostream& out) {
    if (request.arrays.empty()) {
        throw InputError("no arrays requested");
    }
    if (request.stream && request.scer == ScerKind::OrderIso) {
        throw InputError("--stream is not available for order-isomorphism");
    }
    if (request.stream && request.oracle) {
        throw InputError("--stream and --oracle cannot be combined");
    }
    if (request.oracle && request.border_file) {
        throw InputError("--oracle needs the text and cannot use --border-file");
    }

    std::ifstream file;
    std::istream* source = &in;
    bool have_text = !request.border_file || request.input_path;
    if (request.input_path && *request.input_path != "-") {
        file.open(*request.input_path, std::ios::binary);
        if (!file) {
            throw IoError("cannot open input '" + *request.input_path + "'");
        }
        source = &file;
    }

    std::optional<BorderArray> given;
    if (request.border_file) {
        given = read_border_file(*request.border_file);
    }

    if (request.stream && !given) {
        StreamEmitter emitter(request, out);
        OnlineBorderBuilder border(request.scer);
        TokenReader reader(*source, request.input_mode);
        Token t = 0;
        while (reader.next(t)) {
            emitter.push(border.push(t));
        }
        return kExitOk;
    }

    TokenSeq text;
    if (have_text) {
        text = read_text(*source, request.input_mode);
        if (given && given->size() != text.size()) {
            throw InputError("border file length " + std::to_string(given->size()) +
                             " does not match text length " + std::to_string(text.size()));
        }
    }

    if (request.stream) {
        StreamEmitter emitter(request, out);
        for (std::size_t b : given->values()) {
            emitter.push(b);
        }
        return kExitOk;
    }

    Report report = request.oracle ? analyze_with_oracle(text, request.scer) : analyze(text, request.scer, given);
    if (request.format == Format::Json) {
        write_json(report, request.arrays, out);
    } else {
        write_tsv(report, request.arrays, out);
    }
    out << std::flush;
    if (!out) {
        throw IoError("write error on output");
    }
    return kExitOk;
}

}  // namespace

std::vector<ArrayKind> parse_array_list(const std::string& csv) {
    std::vector<bool> wanted(std::size(kCanonicalOrder), false);
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto it = std::ranges::find_if(kCanonicalOrder, [&](ArrayKind a) { return item == array_name(a); });
        if (it == std::end(kCanonicalOrder)) {
            throw std::invalid_argument("unknown array '" + item + "'");
        }
        wanted[static_cast<std::size_t>(it - std::begin(kCanonicalOrder))] = true;
    }
    std::vector<ArrayKind> out;
    for (std::size_t k = 0; k < wanted.size(); ++k) {
        if (wanted[k]) {
            out.push_back(kCanonicalOrder[k]);
        }
    }
    return out;
}

int run(const AnalysisRequest& request, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(request, in, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const MalformedBorderArray& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
}

void write_tsv(const Report& report, const std::vector<ArrayKind>& arrays, std::ostream& out) {
    out << 'i';
    for (std::size_t i = 1; i <= report.n; ++i) {
        out << '\t' << i;
    }
    out << '\n';
    for (ArrayKind a : arrays) {
        out << array_name(a);
        const std::vector<std::size_t>* row = nullptr;
        switch (a) {
        case ArrayKind::Border: row = &report.border; break;
        case ArrayKind::Scover: row = &report.scover; break;
        case ArrayKind::Lcover: row = &report.lcover; break;
        case ArrayKind::Covers: row = &report.covers; break;
        case ArrayKind::Lseeds: row = &report.lseeds; break;
        }
        for (std::size_t v : *row) {
            out << '\t' << v;
        }
        out << '\n';
    }
}

void write_json(const Report& report, const std::vector<ArrayKind>& arrays, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["scer"] = std::string(to_string(report.scer));
    doc["n"] = report.n;
    for (ArrayKind a : arrays) {
        switch (a) {
        case ArrayKind::Border: doc["border"] = report.border; break;
        case ArrayKind::Scover: doc["scover"] = report.scover; break;
        case ArrayKind::Lcover: doc["lcover"] = report.lcover; break;
        case ArrayKind::Covers: doc["covers"] = report.covers; break;
        case ArrayKind::Lseeds: doc["lseeds"] = report.lseeds; break;
        }
    }
    out << doc.dump() << '\n';
}

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Border, cover and left-seed arrays under substring consistent equivalences"};
    app.name("quasi");

    std::string scer = "identity";
    std::string arrays = "border,scover,lcover";
    std::string format = "tsv";
    std::string mode = "bytes";
    std::string border_file;
    std::string input;
    bool use_oracle = false;
    bool stream = false;

    app.add_option("--scer", scer, "Equivalence relation")
        ->check(CLI::IsMember({"identity", "param", "op"}))
        ->capture_default_str();
    app.add_option("--arrays", arrays, "Comma-separated subset of border,scover,lcover,covers,lseeds")
        ->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
    app.add_option("--input-mode", mode, "bytes: one token per byte; tokens: whitespace-separated integers")
        ->check(CLI::IsMember({"bytes", "tokens"}))
        ->capture_default_str();
    app.add_option("--border-file", border_file, "Use this border array (one integer per line) instead of computing it");
    app.add_flag("--oracle", use_oracle, "Compute everything by brute force");
    app.add_flag("--stream", stream, "Emit one row per prefix as input arrives (identity/param)");
    app.add_option("input", input, "Input file (default: standard input)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    }

    AnalysisRequest request;
    request.scer = scer == "identity" ? ScerKind::Identity
                   : scer == "param"  ? ScerKind::Parameterized
                                      : ScerKind::OrderIso;
    try {
        request.arrays = parse_array_list(arrays);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    request.format = format == "json" ? Format::Json : Format::Tsv;
    request.input_mode = mode == "tokens" ? InputMode::Tokens : InputMode::Bytes;
    if (!input.empty()) {
        request.input_path = input;
    }
    if (!border_file.empty()) {
        request.border_file = border_file;
    }
    request.oracle = use_oracle;
    request.stream = stream;
    return run(request, in, out, err);
}

}  // namespace quasi::cli
