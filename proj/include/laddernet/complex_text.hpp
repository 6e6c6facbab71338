#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "types.hpp"

namespace laddernet {

namespace detail {

// Full-consumption strtod: the whole token must be one finite number.
inline bool parse_double(std::string_view text, double& out) {
    if (text.empty()) return false;
    const std::string buf(text);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return false;
    if (!std::isfinite(v)) return false;
    out = v;
    return true;
}

}  // namespace detail

// Accepts "a", "bi", and "a+bi"/"a-bi" with no spaces; the imaginary part
// sign splits the token at the first +/- that is not an exponent sign.
inline Complex parse_complex(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");

    const bool imaginary = text.back() == 'i' || text.back() == 'I';
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == '+' || c == '-') &&
            text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }

    double re = 0.0, im = 0.0;
    if (split == std::string_view::npos) {
        if (imaginary) {
            std::string_view body = text.substr(0, text.size() - 1);
            if (body.empty() || body == "+")
                im = 1.0;
            else if (body == "-")
                im = -1.0;
            else if (!detail::parse_double(body, im))
                throw std::invalid_argument("bad complex literal");
        } else if (!detail::parse_double(text, re)) {
            throw std::invalid_argument("bad complex literal");
        }
        return {re, im};
    }

    if (!imaginary) throw std::invalid_argument("bad complex literal");
    if (!detail::parse_double(text.substr(0, split), re))
        throw std::invalid_argument("bad complex literal");
    std::string_view tail = text.substr(split, text.size() - split - 1);
    if (tail == "+")
        im = 1.0;
    else if (tail == "-")
        im = -1.0;
    else if (!detail::parse_double(tail, im))
        throw std::invalid_argument("bad complex literal");
    return {re, im};
}

// Nine significant digits, scientific; negative zero prints as zero.
inline std::string format_sci(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

inline std::string format_complex(Complex z) {
    const double im = std::imag(z);
    std::string out = format_sci(std::real(z));
    out += im < 0.0 ? '-' : '+';
    out += format_sci(std::abs(im));
    out += 'i';
    return out;
}

}  // namespace laddernet
