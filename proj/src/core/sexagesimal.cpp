#include "sexagesimal.hpp"

#include <cctype>
#include <cmath>

#include "util.hpp"

namespace shatir::sexagesimal {

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

bool read_uint(const std::string& s, size_t& i, std::int64_t& out) {
    size_t start = i;
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000'000'000LL) fail(Err::MalformedSexagesimal, "numeral too large: " + s);
        ++i;
    }
    out = v;
    return i > start;
}

} // namespace

SexValue parse(const std::string& text) {
    SexValue v;
    size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        v.negative = text[i] == '-';
        ++i;
    }
    skip_ws(text, i);

    std::int64_t first = 0;
    if (!read_uint(text, i, first)) fail(Err::MalformedSexagesimal, "expected digits: \"" + text + "\"");

    if (i < text.size() && text[i] == 's') {
        v.zodiac_signs = first;
        ++i;
        skip_ws(text, i);
        if (!read_uint(text, i, v.whole))
            fail(Err::MalformedSexagesimal, "expected degrees after sign count: \"" + text + "\"");
    } else {
        v.whole = first;
    }

    if (i < text.size() && text[i] == ';') {
        ++i;
        while (true) {
            std::int64_t d = 0;
            if (!read_uint(text, i, d))
                fail(Err::MalformedSexagesimal, "expected fractional digit: \"" + text + "\"");
            if (d >= 60) fail(Err::DigitOutOfRange, "fractional digit >= 60 in \"" + text + "\"");
            v.fracs.push_back(static_cast<int>(d));
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
    }
    skip_ws(text, i);
    if (i != text.size()) fail(Err::MalformedSexagesimal, "trailing input in \"" + text + "\"");
    return v;
}

double to_decimal(const SexValue& v) {
    double frac = 0.0;
    for (auto it = v.fracs.rbegin(); it != v.fracs.rend(); ++it) frac = (*it + frac) / 60.0;
    double x = 30.0 * static_cast<double>(v.zodiac_signs) + static_cast<double>(v.whole) + frac;
    return v.negative ? -x : x;
}

SexValue encode(double x, int places, Rounding rounding, bool with_zodiac) {
    if (places < 0 || places > 8) fail(Err::FieldOutOfRange, "places must be in [0, 8]");
    SexValue v;
    v.negative = x < 0.0;

    long double scaled = fabsl(static_cast<long double>(x));
    for (int k = 0; k < places; ++k) scaled *= 60.0L;
    // Tiny guard so that values intended to be exact sexagesimal numerals do
    // not truncate one unit low after binary round-off.
    long double units =
        (rounding == Rounding::HalfUp) ? floorl(scaled + 0.5L) : floorl(scaled + 1e-9L);

    auto total = static_cast<std::int64_t>(units);
    if (total == 0) v.negative = false;
    v.fracs.assign(places, 0);
    for (int k = places - 1; k >= 0; --k) {
        v.fracs[k] = static_cast<int>(total % 60);
        total /= 60;
    }
    v.whole = total;
    if (with_zodiac) {
        v.zodiac_signs = v.whole / 30;
        v.whole %= 30;
    }
    return v;
}

std::string render(const SexValue& v) {
    std::string s;
    if (v.negative) s += '-';
    if (v.zodiac_signs != 0) {
        s += std::to_string(v.zodiac_signs);
        s += "s ";
    }
    s += std::to_string(v.whole);
    for (size_t k = 0; k < v.fracs.size(); ++k) {
        s += (k == 0) ? ';' : ',';
        s += std::to_string(v.fracs[k]);
    }
    return s;
}

std::string format(double x, int places, Rounding rounding, bool with_zodiac) {
    return render(encode(x, places, rounding, with_zodiac));
}

} // namespace shatir::sexagesimal
