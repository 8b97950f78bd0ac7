#include "dfhad/numtheory.hpp"

#include <array>

namespace dfhad {

namespace {

constexpr std::array<std::uint32_t, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Needs m < 2^127 so that doubling never wraps.
u128 mulmod(u128 a, u128 b, u128 m) {
    if (m <= UINT64_MAX) return (a % m) * (b % m) % m;
    a %= m;
    b %= m;
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a += a;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

u128 powmod(u128 base, u128 exp, u128 m) {
    u128 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin(u128 n) {
    if (n < 2) return false;
    for (std::uint32_t p : kBases) {
        if (n % p == 0) return n == p;
    }
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint32_t a : kBases) {
        u128 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) { return miller_rabin(n); }

bool is_prime(u128 n) {
    // Cheap sieve before the expensive wide modular arithmetic.
    if (n < 1000000) return miller_rabin(n);
    for (std::uint32_t d = 43; d < 1000; d += 2) {
        if (n % d == 0) return false;
    }
    return miller_rabin(n);
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::make_pair(q, 1);
    int e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, e);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace dfhad
