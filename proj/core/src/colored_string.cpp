#include "colorminer/colored_string.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace colorminer {

int32_t ColoredString::symbol_at(int32_t i) const {
    if (i < 1 || i > size()) {
        throw OutOfRange("symbol_at: position " + std::to_string(i) +
                         " outside [1, " + std::to_string(size()) + "]");
    }
    return text[i - 1];
}

int32_t ColoredString::color_at(int32_t i) const {
    if (i < 1 || i > size()) {
        throw OutOfRange("color_at: position " + std::to_string(i) +
                         " outside [1, " + std::to_string(size()) + "]");
    }
    return colors[i - 1];
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> content_lines(const std::string& document) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream ss(document);
    while (std::getline(ss, cur)) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        if (cur.find_first_not_of(" \t") != std::string::npos) {
            lines.push_back(cur);
        }
    }
    return lines;
}

// Assign dense ids in order of first appearance, keeping spellings.
void intern_line(const std::vector<std::string>& tokens,
                 std::vector<int32_t>& ids, int32_t& alphabet_size,
                 std::vector<std::string>& spellings) {
    std::unordered_map<std::string, int32_t> seen;
    for (const auto& tok : tokens) {
        if (tok.find('$') != std::string::npos) {
            throw ReservedSymbol("'$' is reserved for the sentinel");
        }
        auto it = seen.find(tok);
        if (it == seen.end()) {
            it = seen.emplace(tok, static_cast<int32_t>(spellings.size())).first;
            spellings.push_back(tok);
        }
        ids.push_back(it->second);
    }
    alphabet_size = static_cast<int32_t>(spellings.size());
}

}  // namespace

ColoredString parse_colored(const std::string& document, bool tokenized) {
    auto lines = content_lines(document);
    if (lines.size() < 2) {
        throw EmptyInput("expected two non-empty lines, found " +
                         std::to_string(lines.size()));
    }
    if (lines.size() > 2) {
        throw LengthMismatch("expected exactly two content lines, found " +
                             std::to_string(lines.size()));
    }

    std::vector<std::string> text_toks, color_toks;
    if (tokenized) {
        text_toks = split_tokens(lines[0]);
        color_toks = split_tokens(lines[1]);
    } else {
        for (char c : lines[0]) text_toks.emplace_back(1, c);
        for (char c : lines[1]) color_toks.emplace_back(1, c);
    }
    if (text_toks.empty() || color_toks.empty()) {
        throw EmptyInput("a content line holds no tokens");
    }
    if (text_toks.size() != color_toks.size()) {
        throw LengthMismatch("text has " + std::to_string(text_toks.size()) +
                             " positions, colors have " +
                             std::to_string(color_toks.size()));
    }

    ColoredString cs;
    intern_line(text_toks, cs.text, cs.sigma, cs.symbol_tokens);
    intern_line(color_toks, cs.colors, cs.gamma, cs.color_tokens);
    return cs;
}

std::string render_colored(const ColoredString& cs, bool tokenized) {
    bool compact = !tokenized;
    for (const auto& t : cs.symbol_tokens) {
        if (t.size() != 1) compact = false;
    }
    for (const auto& t : cs.color_tokens) {
        if (t.size() != 1) compact = false;
    }

    std::string out;
    for (int32_t i = 0; i < cs.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += cs.symbol_tokens[cs.text[i]];
    }
    out += '\n';
    for (int32_t i = 0; i < cs.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += cs.color_tokens[cs.colors[i]];
    }
    out += '\n';
    return out;
}

bool is_good_occurrence(const ColoredString& cs, int32_t i, int32_t m,
                        int32_t y, int32_t d) {
    int32_t n = cs.size();
    if (i < 1 || m < 1 || i + m - 1 > n || d < 0) {
        throw OutOfRange("is_good_occurrence: invalid occurrence (i=" +
                         std::to_string(i) + ", m=" + std::to_string(m) +
                         ", d=" + std::to_string(d) + ", n=" +
                         std::to_string(n) + ")");
    }
    int32_t checked = i + m - 1 + d;
    if (checked > n) return false;
    return cs.colors[checked - 1] == y;
}

std::vector<int32_t> occurrences(const ColoredString& cs,
                                 const std::vector<int32_t>& pattern) {
    std::vector<int32_t> starts;
    int32_t n = cs.size();
    int32_t m = static_cast<int32_t>(pattern.size());
    if (m == 0 || m > n) return starts;
    for (int32_t i = 1; i + m - 1 <= n; ++i) {
        bool hit = true;
        for (int32_t k = 0; k < m && hit; ++k) {
            hit = cs.text[i - 1 + k] == pattern[k];
        }
        if (hit) starts.push_back(i);
    }
    return starts;
}

bool is_unique(const ColoredString& cs, const std::vector<int32_t>& pattern,
               int32_t y, int32_t d) {
    int32_t n = cs.size();
    int32_t m = static_cast<int32_t>(pattern.size());
    for (int32_t i : occurrences(cs, pattern)) {
        if (i + m - 1 + d > n) continue;
        if (!is_good_occurrence(cs, i, m, y, d)) return false;
    }
    return true;
}

ColoredString gen_random(int32_t n, int32_t sigma, int32_t gamma,
                         uint64_t seed) {
    if (sigma <= 0 || gamma <= 0) {
        throw ZeroAlphabet("alphabet sizes must be positive (sigma=" +
                           std::to_string(sigma) + ", gamma=" +
                           std::to_string(gamma) + ")");
    }
    if (n < 1) {
        throw OutOfRange("gen_random: n must be >= 1, got " +
                         std::to_string(n));
    }

    ColoredString cs;
    cs.sigma = sigma;
    cs.gamma = gamma;
    cs.text.reserve(n);
    cs.colors.reserve(n);
    SplitMix64 rng(seed);
    for (int32_t i = 0; i < n; ++i) {
        // symbol draw first, then color; this order is part of the contract
        cs.text.push_back(static_cast<int32_t>(rng.next() % sigma));
        cs.colors.push_back(static_cast<int32_t>(rng.next() % gamma));
    }
    for (int32_t id = 0; id < sigma; ++id) {
        cs.symbol_tokens.push_back(default_symbol_token(id));
    }
    for (int32_t id = 0; id < gamma; ++id) {
        cs.color_tokens.push_back(default_color_token(id));
    }
    return cs;
}

std::string default_symbol_token(int32_t id) {
    if (id < 26) return std::string(1, static_cast<char>('a' + id));
    return std::to_string(id);
}

std::string default_color_token(int32_t id) {
    // x,y,z first so the classic examples read naturally, then wrap to a..w
    if (id < 3) return std::string(1, static_cast<char>('x' + id));
    if (id < 26) return std::string(1, static_cast<char>('a' + id - 3));
    return std::to_string(id);
}

std::string render_pattern(const ColoredString& cs,
                           const std::vector<int32_t>& pattern) {
    bool compact = true;
    for (const auto& t : cs.symbol_tokens) {
        if (t.size() != 1) compact = false;
    }
    std::string out;
    for (size_t k = 0; k < pattern.size(); ++k) {
        if (!compact && k > 0) out += ' ';
        out += cs.symbol_tokens[pattern[k]];
    }
    return out;
}

void sort_reports(const ColoredString& cs, std::vector<ReportEntry>& entries,
                  bool delay_ascending) {
    auto token_less = [&cs](const std::vector<int32_t>& a,
                            const std::vector<int32_t>& b) {
        size_t k = 0;
        while (k < a.size() && k < b.size()) {
            const std::string& ta = cs.symbol_tokens[a[k]];
            const std::string& tb = cs.symbol_tokens[b[k]];
            if (ta != tb) return ta < tb;
            ++k;
        }
        return a.size() < b.size();
    };
    std::sort(entries.begin(), entries.end(),
              [&](const ReportEntry& a, const ReportEntry& b) {
                  if (a.delay != b.delay) {
                      return delay_ascending ? a.delay < b.delay
                                             : a.delay > b.delay;
                  }
                  return token_less(a.pattern, b.pattern);
              });
}

}  // namespace colorminer
