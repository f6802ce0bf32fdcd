#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace onemap {

using Pos = std::int32_t;   // 1-based text position at all public interfaces
using Count = std::int64_t;
using Symbol = std::int32_t;

/// Input sequence over an integer alphabet. Symbol codes are dense
/// (every code < alphabet_size); positions handed to queries are 1-based.
struct Text {
    std::vector<Symbol> data; // data[i-1] holds the symbol at position i
    Pos n = 0;
    Symbol alphabet_size = 0;
    std::string record_id;    // nonempty when the text came from a FASTA record

    Symbol at(Pos i) const { return data[static_cast<size_t>(i) - 1]; }
    bool empty() const { return n == 0; }
};

/// Byte string -> Text with order-preserving dense symbol codes.
Text make_text(std::string_view bytes);

/// Codes must already be dense in [0, alphabet_size).
Text make_text_from_codes(std::vector<Symbol> codes);

Text reversed(const Text& text);

} // namespace onemap
