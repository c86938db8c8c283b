#pragma once

#include "liftgirth/error.hpp"

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace liftgirth::detail {

struct Line {
    int number = 0;
    std::vector<std::string_view> tokens;
};

/// Splits text into whitespace-separated tokens per line, dropping '#'
/// comments and blank lines. Views point into `text`.
inline std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        Line out{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                out.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!out.tokens.empty())
            lines.push_back(std::move(out));
    }
    return lines;
}

[[noreturn]] inline void parse_fail(const Line& line, const std::string& what)
{
    throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

inline std::int64_t parse_int(const Line& line, std::string_view token)
{
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        parse_fail(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

inline void expect_arity(const Line& line, std::size_t count)
{
    if (line.tokens.size() != count)
        parse_fail(line, "'" + std::string(line.tokens[0]) + "' expects " +
                             std::to_string(count - 1) + " argument(s)");
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << text;
}

} // namespace liftgirth::detail
