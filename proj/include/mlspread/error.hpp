#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace mlspread {

// Library-wide exception type. Messages are meant to be shown to users
// verbatim, so they carry names, values and line numbers where available.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void format_into(std::ostringstream&) {}

template <typename T, typename... Rest>
void format_into(std::ostringstream& out, T&& head, Rest&&... rest) {
    out << std::forward<T>(head);
    format_into(out, std::forward<Rest>(rest)...);
}

} // namespace detail

template <typename... Parts>
[[noreturn]] void fail(Parts&&... parts) {
    std::ostringstream out;
    detail::format_into(out, std::forward<Parts>(parts)...);
    throw Error(out.str());
}

template <typename... Parts>
void require(bool condition, Parts&&... parts) {
    if (!condition) {
        fail(std::forward<Parts>(parts)...);
    }
}

} // namespace mlspread
