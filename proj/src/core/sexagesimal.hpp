#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shatir::sexagesimal {

// Sexagesimal-coded signed quantity. Zodiac signs are units of 30 degrees.
struct SexValue {
    bool negative = false;
    std::int64_t zodiac_signs = 0;
    std::int64_t whole = 0;
    std::vector<int> fracs; // base-60 digits, each in [0, 59]

    bool operator==(const SexValue&) const = default;
};

enum class Rounding { HalfUp, Truncate };

// Grammar: [-] [<n>s] <whole> [';' d (',' d)*], optional whitespace after 's'.
SexValue parse(const std::string& text);

double to_decimal(const SexValue& v);

// Encode a decimal quantity with `places` base-60 fractional digits.
SexValue encode(double x, int places, Rounding rounding = Rounding::HalfUp,
                bool with_zodiac = false);

// Canonical rendering "D;d1,d2,..." (zodiac part only if the value carries one).
std::string render(const SexValue& v);

std::string format(double x, int places, Rounding rounding = Rounding::HalfUp,
                   bool with_zodiac = false);

} // namespace shatir::sexagesimal
