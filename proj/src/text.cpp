#include "slpseq/text.hpp"

namespace slpseq {

std::u32string decodeUtf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        unsigned char b0 = static_cast<unsigned char>(bytes[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw Utf8Error("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > bytes.size()) throw Utf8Error("truncated UTF-8 sequence at offset " + std::to_string(i));
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk & 0xC0) != 0x80) throw Utf8Error("invalid UTF-8 continuation at offset " + std::to_string(i + k));
            cp = (cp << 6) | (bk & 0x3F);
        }
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMin[len]) throw Utf8Error("overlong UTF-8 encoding at offset " + std::to_string(i));
        if (cp >= 0xD800 && cp <= 0xDFFF) throw Utf8Error("UTF-8 encoded surrogate at offset " + std::to_string(i));
        if (cp > 0x10FFFF) throw Utf8Error("code point out of range at offset " + std::to_string(i));
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encodeUtf8(char32_t c) {
    std::string out;
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
    return out;
}

std::string encodeUtf8(std::u32string_view chars) {
    std::string out;
    out.reserve(chars.size());
    for (char32_t c : chars) out += encodeUtf8(c);
    return out;
}

}  // namespace slpseq
