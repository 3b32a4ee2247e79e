#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace flexdp::detail {

struct TokenLine {
    int number;
    std::vector<std::string> tokens;
};

/// Splits on newlines, strips '#' comments, drops blank lines.
inline std::vector<TokenLine> tokenized_lines(std::string_view text)
{
    std::vector<TokenLine> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        TokenLine line{number, {}};
        for (std::string w; words >> w;)
            line.tokens.push_back(w);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

} // namespace flexdp::detail
