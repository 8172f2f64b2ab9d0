#include "qrkit/utf8.hpp"

namespace qrkit::utf8 {

bool decode(std::string_view s, std::size_t& i, char32_t& cp) {
    if (i >= s.size()) return false;
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        cp = b0;
        i += 1;
        return true;
    }
    int len = 0;
    char32_t acc = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        acc = b0 & 0x1F;
        min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        acc = b0 & 0x0F;
        min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        acc = b0 & 0x07;
        min = 0x10000;
    } else {
        return false;
    }
    if (i + len > s.size()) return false;
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) return false;
        acc = (acc << 6) | (b & 0x3F);
    }
    if (acc < min) return false;                       // overlong
    if (acc >= 0xD800 && acc <= 0xDFFF) return false;  // surrogate
    if (acc > 0x10FFFF) return false;
    cp = acc;
    i += len;
    return true;
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool valid(std::string_view s) {
    std::size_t i = 0;
    char32_t cp = 0;
    while (i < s.size()) {
        if (!decode(s, i, cp)) return false;
    }
    return true;
}

std::size_t length(std::string_view s) {
    std::size_t i = 0;
    std::size_t n = 0;
    char32_t cp = 0;
    while (i < s.size()) {
        if (!decode(s, i, cp)) ++i;
        ++n;
    }
    return n;
}

}  // namespace qrkit::utf8
