#pragma once

#include <stdexcept>
#include <string>

namespace onemap {

enum class Errc {
    EmptyText,
    PositionOutOfRange,
    BadWindowLength,
    OffsetPastEnd,
    NotARun,
    BadDimensions,
    BadRange,
    InputTooLarge,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace onemap
