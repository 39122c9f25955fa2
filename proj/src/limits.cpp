#include "asmdpp/limits.hpp"

#include <cstdlib>

namespace asmdpp {

std::size_t enumeration_limit() {
    if (const char* env = std::getenv("ASMDPP_MAX_N")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultEnumerationLimit;
}

void check_enumeration_limit(std::size_t n, const char* what) {
    std::size_t lim = enumeration_limit();
    if (n > lim)
        throw LimitExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds enumeration limit " +
                            std::to_string(lim));
}

}  // namespace asmdpp
