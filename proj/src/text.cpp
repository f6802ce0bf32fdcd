#include "onemap/text.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace onemap {

Text make_text(std::string_view bytes) {
    std::array<Symbol, 256> code{};
    code.fill(-1);
    for (unsigned char c : bytes) code[c] = 0;
    Symbol next = 0;
    for (int c = 0; c < 256; ++c) {
        if (code[c] == 0) code[c] = next++;
    }
    Text t;
    t.n = static_cast<Pos>(bytes.size());
    t.alphabet_size = next;
    t.data.reserve(bytes.size());
    for (unsigned char c : bytes) t.data.push_back(code[c]);
    return t;
}

Text make_text_from_codes(std::vector<Symbol> codes) {
    Text t;
    t.n = static_cast<Pos>(codes.size());
    Symbol mx = -1;
    for (Symbol s : codes) {
        assert(s >= 0);
        mx = std::max(mx, s);
    }
    t.alphabet_size = mx + 1;
    t.data = std::move(codes);
    return t;
}

Text reversed(const Text& text) {
    Text t = text;
    std::reverse(t.data.begin(), t.data.end());
    return t;
}

} // namespace onemap
