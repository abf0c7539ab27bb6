#ifndef HESSLCP_LIMITS_HPP
#define HESSLCP_LIMITS_HPP

#include <cstddef>
#include <cstdlib>
#include <string>

#include "hesslcp/error.hpp"

namespace hesslcp {

inline constexpr std::size_t kDefaultEnumerationLimit = 20;
inline constexpr std::size_t kDefaultDigraphLimit = 16;
inline constexpr std::size_t kDefaultFallbackLimit = 20;

// Bases are 64-bit masks in the oracle and digraph out-bits are 32-bit words.
inline constexpr std::size_t kMaxEnumerationLimit = 62;
inline constexpr std::size_t kMaxDigraphLimit = 30;

namespace detail {
inline std::size_t env_limit(std::size_t fallback, std::size_t ceiling) {
    const char* v = std::getenv("HESSLCP_LIMIT");
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0') throw InvalidArgument(std::string("HESSLCP_LIMIT is not a nonnegative integer: '") + v + "'");
    return parsed > ceiling ? ceiling : static_cast<std::size_t>(parsed);
}
} // namespace detail

/// Size guard for exhaustive 2^n checks; HESSLCP_LIMIT overrides it.
inline std::size_t enumeration_limit() { return detail::env_limit(kDefaultEnumerationLimit, kMaxEnumerationLimit); }

/// Size guard for digraph construction; HESSLCP_LIMIT overrides it.
inline std::size_t digraph_limit() { return detail::env_limit(kDefaultDigraphLimit, kMaxDigraphLimit); }

inline void check_size(std::size_t n, std::size_t limit, const char* what) {
    if (n > limit)
        throw TooLarge(std::string(what) + ": n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
}

} // namespace hesslcp

#endif // HESSLCP_LIMITS_HPP
