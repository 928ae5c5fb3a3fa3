#pragma once

#include <stdexcept>
#include <string>

namespace framelat {

// Error categories map 1:1 onto CLI exit codes (see tools/framelat.cpp).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace framelat
