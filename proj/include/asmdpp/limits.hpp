#pragma once

#include <stdexcept>
#include <string>

namespace asmdpp {

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationLimit = 8;

// Largest n accepted by brute-force enumeration. ASMDPP_MAX_N lowers (or
// raises) the default of 8.
std::size_t enumeration_limit();
void check_enumeration_limit(std::size_t n, const char* what);

}  // namespace asmdpp
