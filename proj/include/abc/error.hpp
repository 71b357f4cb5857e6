#pragma once

#include <stdexcept>
#include <string>

namespace abc {

enum class Errc {
    invalid_input,
    limit_exceeded,
    degenerate_modulus,
    export_cap_exceeded,
    overflow_of_limit,
};

const char* to_string(Errc code) noexcept;

// Every failure the library reports carries one of the codes above; the C API
// maps them onto abc_status values.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace abc
