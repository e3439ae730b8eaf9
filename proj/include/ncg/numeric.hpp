#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ncg {

using Int = mpz_class;
using Rat = mpq_class;

/// Floor of the integer square root.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Exact square root if n is a perfect square, nullopt otherwise.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

inline bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// d = s * f^2 with s squarefree (for d within the trial-division bound).
/// Square factors above the bound are only detected when the remaining
/// cofactor is itself a perfect square; callers here never exceed that.
struct SquarefreeSplit {
    Int squarefree;
    Int root_factor;
};

inline SquarefreeSplit squarefree_split(Int d) {
    if (d <= 0) throw std::domain_error("squarefree_split needs d > 0");
    Int f = 1;
    for (Int p = 2; p * p <= d && p < 100000; p += (p == 2 ? 1 : 2)) {
        while (d % (p * p) == 0) {
            d /= p * p;
            f *= p;
        }
    }
    if (auto r = exact_sqrt(d)) {
        f *= *r;
        d = 1;
    }
    return {d, f};
}

/// Fibonacci F_k and Lucas L_k by fast doubling.
inline std::pair<Int, Int> fibonacci_pair(unsigned long k) {
    // returns (F_k, F_{k+1})
    if (k == 0) return {0, 1};
    auto [a, b] = fibonacci_pair(k / 2);
    Int c = a * (2 * b - a);
    Int d = a * a + b * b;
    if (k % 2 == 0) return {c, d};
    return {d, c + d};
}

inline Int fibonacci(unsigned long k) { return fibonacci_pair(k).first; }

inline Int lucas(unsigned long k) {
    auto [f, f1] = fibonacci_pair(k);
    return 2 * f1 - f;  // L_k = F_{k-1} + F_{k+1} = 2F_{k+1} - F_k
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    for (long i = 2; i <= n; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    return out;
}

inline long mod_pow_long(long base, long e, long m) {
    return static_cast<long>(detail::powmod_u64(static_cast<std::uint64_t>(((base % m) + m) % m),
                                                static_cast<std::uint64_t>(e),
                                                static_cast<std::uint64_t>(m)));
}

/// Multiplicative order of a modulo prime p.
inline long mult_order_mod(long a, long p) {
    long x = ((a % p) + p) % p;
    if (x == 0) throw std::domain_error("order of 0 is undefined");
    long ord = 1;
    long cur = x;
    while (cur != 1) {
        cur = static_cast<long>(detail::mulmod_u64(static_cast<std::uint64_t>(cur), static_cast<std::uint64_t>(x),
                                                   static_cast<std::uint64_t>(p)));
        ++ord;
        if (ord > p) throw std::logic_error("mult_order_mod ran away (non-prime modulus?)");
    }
    return ord;
}

}  // namespace ncg
