#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colorminer/errors.hpp"

namespace colorminer {

/*
 * A string over an integer alphabet where every position additionally
 * carries a color. Positions are 1-based at the API boundary; the id
 * vectors themselves are 0-based and dense. Display tokens remember how
 * each id was spelled in the source document so output can round-trip.
 */
struct ColoredString {
    std::vector<int32_t> text;    // symbol ids, 0..sigma-1
    std::vector<int32_t> colors;  // color ids, 0..gamma-1
    int32_t sigma = 0;
    int32_t gamma = 0;
    std::vector<std::string> symbol_tokens;
    std::vector<std::string> color_tokens;

    int32_t size() const { return static_cast<int32_t>(text.size()); }

    // 1-based accessors, i in [1, n]
    int32_t symbol_at(int32_t i) const;
    int32_t color_at(int32_t i) const;
};

/*
 * One mined result: a pattern (as symbol ids) that is uniformly followed
 * by the queried color at the given delay. occurrence_count is the number
 * of occurrences of the pattern in the text; end_positions (1-based) are
 * filled only when the caller asks for them.
 */
struct ReportEntry {
    int32_t delay = 0;
    std::vector<int32_t> pattern;
    int64_t occurrence_count = 0;
    std::vector<int32_t> end_positions;
};

/*
 * Parse a two-line colored-string document. Compact mode reads one
 * graphic character per position; tokenized mode splits each line on
 * whitespace. Ids are assigned in order of first appearance within each
 * line, and the original spellings are kept as display tokens.
 *
 * Throws EmptyInput when fewer than two non-empty lines are present,
 * LengthMismatch when the two lines disagree in length (or extra content
 * lines follow), and ReservedSymbol if '$' appears anywhere.
 */
ColoredString parse_colored(const std::string& document, bool tokenized);

// Serialize back to the two-line document format. Tokenized output is
// forced when any display token is longer than one character.
std::string render_colored(const ColoredString& cs, bool tokenized);

// True when the occurrence of a length-m pattern starting at i has color y
// exactly d positions after its last character. Returns false when that
// position falls beyond the end of the string.
// Throws OutOfRange unless 1 <= i, m >= 1, i+m-1 <= n, d >= 0.
bool is_good_occurrence(const ColoredString& cs, int32_t i, int32_t m,
                        int32_t y, int32_t d);

// All start positions (1-based) where pattern occurs in cs.text.
std::vector<int32_t> occurrences(const ColoredString& cs,
                                 const std::vector<int32_t>& pattern);

// True iff every occurrence of pattern is good at delay d or the checked
// position runs past the end. Vacuously true for non-occurring patterns.
bool is_unique(const ColoredString& cs, const std::vector<int32_t>& pattern,
               int32_t y, int32_t d);

/*
 * splitmix64: the fixed cross-platform generator behind gen_random.
 * Written out explicitly because the exact stream is part of the test
 * contract (std library engines are not portable across implementations).
 */
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// Deterministic random instance: for each position, one draw for the
// symbol then one for the color. The length-n output is a prefix of any
// longer output with the same (sigma, gamma, seed).
// Throws ZeroAlphabet when sigma or gamma is 0, OutOfRange when n < 1.
ColoredString gen_random(int32_t n, int32_t sigma, int32_t gamma,
                         uint64_t seed);

// Default display tokens used by gen_random and trace ingestion:
// symbols a..z then decimal; colors x,y,z then a..w then decimal
// (26 single-character tokens each, so sigma,gamma <= 26 stays compact).
std::string default_symbol_token(int32_t id);
std::string default_color_token(int32_t id);

// Render a pattern through the display tokens. Single-character tokens
// concatenate; anything longer joins with single spaces.
std::string render_pattern(const ColoredString& cs,
                           const std::vector<int32_t>& pattern);

// Order report entries by delay (descending by default), then by pattern,
// comparing token-by-token on display spellings.
void sort_reports(const ColoredString& cs, std::vector<ReportEntry>& entries,
                  bool delay_ascending = false);

}  // namespace colorminer
