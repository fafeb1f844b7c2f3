#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace dwig::detail {

// Shortest representation that parses back to the same double.
inline std::string shortest(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

}  // namespace dwig::detail
