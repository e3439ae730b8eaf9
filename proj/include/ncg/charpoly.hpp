#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ncg/matrix.hpp"
#include "ncg/numeric.hpp"
#include "ncg/poly.hpp"

namespace ncg {

namespace detail {

/// Faddeev-LeVerrier over exact integers; O(n^4) multiplies, used for small
/// dimensions and for matrices whose entries exceed machine words.
inline IPoly charpoly_faddeev(const IntMatrix& a) {
    const int n = a.dim();
    std::vector<Int> coeff(static_cast<std::size_t>(n) + 1, Int(0));
    coeff[static_cast<std::size_t>(n)] = 1;
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    for (int k = 1; k <= n; ++k) {
        // am = a * m
        IntMatrix am(n);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const Int& ail = a.at(i, l);
                if (ail == 0) continue;
                for (int j = 0; j < n; ++j) am.at(i, j) += ail * m.at(l, j);
            }
        Int c = -am.trace();
        if (c % k != 0) throw std::logic_error("Faddeev-LeVerrier: inexact division");
        c /= k;
        coeff[static_cast<std::size_t>(n - k)] = c;
        m = am;
        for (int i = 0; i < n; ++i) m.at(i, i) += c;
    }
    return IPoly{std::move(coeff)};
}

struct ModMatrix {
    int n;
    std::uint64_t p;
    std::vector<std::uint64_t> a;
    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

inline std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) { return powmod_u64(x, p - 2, p); }

/// Characteristic polynomial mod p via Hessenberg reduction; coefficients low-first.
inline std::vector<std::uint64_t> charpoly_mod(ModMatrix h) {
    const int n = h.n;
    const std::uint64_t p = h.p;
    auto sub = [p](std::uint64_t x, std::uint64_t y) { return (x + p - y) % p; };
    // similarity reduction to upper Hessenberg form
    for (int col = 0; col + 2 < n; ++col) {
        int pivot = -1;
        for (int r = col + 1; r < n; ++r)
            if (h.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(h.at(pivot, j), h.at(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h.at(i, pivot), h.at(i, col + 1));
        }
        std::uint64_t pinv = inv_mod(h.at(col + 1, col), p);
        for (int r = col + 2; r < n; ++r) {
            std::uint64_t f = mulmod_u64(h.at(r, col), pinv, p);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) h.at(r, j) = sub(h.at(r, j), mulmod_u64(f, h.at(col + 1, j), p));
            for (int i = 0; i < n; ++i) h.at(i, col + 1) = (h.at(i, col + 1) + mulmod_u64(f, h.at(i, r), p)) % p;
        }
    }
    // chi_k via the Hessenberg recurrence
    std::vector<std::vector<std::uint64_t>> chi(static_cast<std::size_t>(n) + 1);
    chi[0] = {1};
    for (int k = 1; k <= n; ++k) {
        const auto& prev = chi[static_cast<std::size_t>(k - 1)];
        std::vector<std::uint64_t> cur(static_cast<std::size_t>(k) + 1, 0);
        std::uint64_t hkk = h.at(k - 1, k - 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = (cur[i + 1] + prev[i]) % p;
            cur[i] = sub(cur[i], mulmod_u64(hkk, prev[i], p));
        }
        std::uint64_t prod = 1;
        for (int m = k - 1; m >= 1; --m) {
            prod = mulmod_u64(prod, h.at(m, m - 1), p);
            if (prod == 0) break;
            std::uint64_t w = mulmod_u64(h.at(m - 1, k - 1), prod, p);
            if (w == 0) continue;
            const auto& cm = chi[static_cast<std::size_t>(m - 1)];
            for (std::size_t i = 0; i < cm.size(); ++i) cur[i] = sub(cur[i], mulmod_u64(w, cm[i], p));
        }
        chi[static_cast<std::size_t>(k)] = std::move(cur);
    }
    return chi[static_cast<std::size_t>(n)];
}

inline std::vector<std::uint64_t> charpoly_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t candidate = (1ull << 31) - 1;
    while (out.size() < count) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        out.push_back(candidate);
        candidate -= 2;
    }
    return out;
}

/// Multi-prime CRT path; requires entries to fit in signed long.
inline IPoly charpoly_modular(const IntMatrix& a) {
    const int n = a.dim();
    Int rho = a.row_sum_bound();
    std::size_t bits = static_cast<std::size_t>(n) * (mpz_sizeinbase(rho.get_mpz_t(), 2) + 1) + 8;
    std::size_t nprimes = bits / 30 + 2;
    auto primes = charpoly_primes(nprimes);

    std::vector<Int> crt(static_cast<std::size_t>(n) + 1, Int(0));
    Int modulus = 1;
    for (std::uint64_t p : primes) {
        ModMatrix mm{n, p, std::vector<std::uint64_t>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n))};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long v = a.at(i, j).get_si();
                long r = v % static_cast<long>(p);
                if (r < 0) r += static_cast<long>(p);
                mm.at(i, j) = static_cast<std::uint64_t>(r);
            }
        auto cp = charpoly_mod(std::move(mm));
        if (modulus == 1) {
            for (std::size_t i = 0; i < cp.size(); ++i) crt[i] = Int(static_cast<unsigned long>(cp[i]));
            modulus = Int(static_cast<unsigned long>(p));
            continue;
        }
        // combine: x = crt + modulus * t with t = (cp - crt) / modulus mod p
        Int pz(static_cast<unsigned long>(p));
        Int minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t i = 0; i < crt.size(); ++i) {
            Int cur = crt[i] % pz;
            Int diff = (Int(static_cast<unsigned long>(cp[i])) - cur) % pz;
            if (diff < 0) diff += pz;
            Int t = (diff * minv) % pz;
            crt[i] += modulus * t;
        }
        modulus *= pz;
    }
    Int half = modulus / 2;
    for (auto& v : crt)
        if (v > half) v -= modulus;
    return IPoly{std::move(crt)};
}

}  // namespace detail

/// Exact characteristic polynomial det(xI - A) of an integer matrix.
inline IPoly char_poly_exact(const IntMatrix& a) {
    if (a.dim() == 0) return IPoly::constant(1);
    if (a.dim() <= 12 || !a.fits_long()) return detail::charpoly_faddeev(a);
    return detail::charpoly_modular(a);
}

}  // namespace ncg
