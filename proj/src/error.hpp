#pragma once

#include <stdexcept>
#include <string>

namespace f2r {

enum class Errc {
    bad_argument,
    not_invertible,   // constant term 0 where an inverse is required
    resource_limit,
    precondition,
    range,
    parse,
    divide_by_zero,
    noncanonical,
    empty_set,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace f2r
