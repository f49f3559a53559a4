#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace rfgnn {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible matrix/graph shapes. Message names both shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter value (probability out of range, empty set, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Dataset or checkpoint file problem. Message carries file and line.
class LoadError : public Error {
public:
    using Error::Error;
};

namespace detail {
inline void format_parts(std::ostringstream&) {}

template <typename T, typename... Rest>
void format_parts(std::ostringstream& os, const T& head, const Rest&... rest) {
    os << head;
    format_parts(os, rest...);
}
} // namespace detail

template <typename... Parts>
std::string concat(const Parts&... parts) {
    std::ostringstream os;
    detail::format_parts(os, parts...);
    return os.str();
}

} // namespace rfgnn

#define RFG_CHECK(cond, ExcType, ...)                                  \
    do {                                                               \
        if (!(cond)) throw ExcType(::rfgnn::concat(__VA_ARGS__));      \
    } while (0)
