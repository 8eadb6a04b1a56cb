#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slpseq {

class Utf8Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decodes UTF-8 into a sequence of unicode scalars. Throws Utf8Error on
// malformed input (truncated sequences, overlong encodings, surrogates,
// values beyond U+10FFFF).
std::u32string decodeUtf8(std::string_view bytes);

std::string encodeUtf8(std::u32string_view chars);
std::string encodeUtf8(char32_t c);

}  // namespace slpseq
