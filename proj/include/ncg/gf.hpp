#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/numeric.hpp"

namespace ncg {

/// GF(p^n) with full add/mul tables. Elements are integer codes in [0, p^n):
/// the base-p digits of the code are the coefficients of the residue
/// polynomial, lowest degree first. A fixed irreducible modulus per (p, n)
/// keeps codes and labels deterministic.
class GFTable {
public:
    GFTable(long p, int n) : p_(p), n_(n) {
        if (!is_prime_u64(static_cast<std::uint64_t>(p))) throw std::invalid_argument("GF: p must be prime");
        if (n < 1) throw std::invalid_argument("GF: n must be >= 1");
        size_ = 1;
        for (int i = 0; i < n; ++i) {
            size_ *= p;
            if (size_ > 1 << 20) throw std::invalid_argument("GF: field too large");
        }
        modulus_ = irreducible_modulus(p, n);
        build_tables();
        verify_field();
    }

    long characteristic() const { return p_; }
    int degree() const { return n_; }
    long size() const { return size_; }

    long add(long a, long b) const { return add_[idx(a, b)]; }
    long mul(long a, long b) const { return mul_[idx(a, b)]; }
    long neg(long a) const { return neg_[static_cast<std::size_t>(a)]; }
    /// Frobenius automorphism a -> a^p.
    long frobenius(long a) const { return frob_[static_cast<std::size_t>(a)]; }

    std::string label(long a) const { return std::to_string(a); }

private:
    std::size_t idx(long a, long b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
    }

    static std::vector<long> irreducible_modulus(long p, int n) {
        // lower-degree coefficients of a fixed monic irreducible of degree n
        static const std::map<std::pair<long, int>, std::vector<long>> table = {
            {{2, 2}, {1, 1}},           // x^2 + x + 1
            {{2, 3}, {1, 1, 0}},        // x^3 + x + 1
            {{2, 4}, {1, 1, 0, 0}},     // x^4 + x + 1
            {{2, 5}, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
            {{2, 6}, {1, 1, 0, 0, 0, 0}},  // x^6 + x + 1
            {{3, 2}, {2, 2}},           // x^2 + 2x + 2
            {{3, 3}, {1, 2, 0}},        // x^3 + 2x + 1
            {{5, 2}, {2, 4}},           // x^2 + 4x + 2
            {{7, 2}, {3, 6}},           // x^2 + 6x + 3
        };
        if (n == 1) return {};
        auto it = table.find({p, n});
        if (it == table.end()) throw std::invalid_argument("GF: no modulus on record for this (p, n)");
        return it->second;
    }

    std::vector<long> decode(long a) const {
        std::vector<long> c(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            c[static_cast<std::size_t>(i)] = a % p_;
            a /= p_;
        }
        return c;
    }
    long encode(const std::vector<long>& c) const {
        long a = 0;
        for (int i = n_ - 1; i >= 0; --i) a = a * p_ + c[static_cast<std::size_t>(i)];
        return a;
    }

    void build_tables() {
        const std::size_t sz = static_cast<std::size_t>(size_);
        add_.resize(sz * sz);
        mul_.resize(sz * sz);
        neg_.resize(sz);
        frob_.resize(sz);
        for (long a = 0; a < size_; ++a) {
            auto ca = decode(a);
            std::vector<long> nc(ca.size());
            for (std::size_t i = 0; i < ca.size(); ++i) nc[i] = (p_ - ca[i]) % p_;
            neg_[static_cast<std::size_t>(a)] = encode(nc);
            for (long b = 0; b < size_; ++b) {
                auto cb = decode(b);
                std::vector<long> s(ca.size());
                for (std::size_t i = 0; i < ca.size(); ++i) s[i] = (ca[i] + cb[i]) % p_;
                add_[idx(a, b)] = encode(s);
                mul_[idx(a, b)] = poly_mul(ca, cb);
            }
        }
        for (long a = 0; a < size_; ++a) {
            long r = a;
            for (long i = 1; i < p_; ++i) r = mul(r, a);
            frob_[static_cast<std::size_t>(a)] = r;
        }
    }

    long poly_mul(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> prod(2 * static_cast<std::size_t>(n_) - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        // reduce by the monic modulus
        for (int d = static_cast<int>(prod.size()) - 1; d >= n_; --d) {
            long f = prod[static_cast<std::size_t>(d)];
            if (f == 0) continue;
            prod[static_cast<std::size_t>(d)] = 0;
            for (int i = 0; i < n_; ++i) {
                long& tgt = prod[static_cast<std::size_t>(d - n_ + i)];
                tgt = ((tgt - f * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
            }
        }
        prod.resize(static_cast<std::size_t>(n_));
        return encode(prod);
    }

    void verify_field() {
        // no zero divisors <=> the modulus really is irreducible
        for (long a = 1; a < size_; ++a)
            for (long b = 1; b < size_; ++b)
                if (mul(a, b) == 0) throw std::logic_error("GF: modulus is reducible (zero divisor found)");
    }

    long p_;
    int n_;
    long size_ = 0;
    std::vector<long> modulus_;
    std::vector<long> add_, mul_, neg_, frob_;
};

}  // namespace ncg
