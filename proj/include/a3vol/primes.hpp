#pragma once

#include <cstdint>
#include <vector>

namespace a3vol {

inline std::vector<uint32_t> primes_up_to(uint32_t n) {
    std::vector<uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (uint32_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= n; j += i) composite[j] = true;
        }
    }
    return out;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace a3vol
