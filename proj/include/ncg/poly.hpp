#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncg/numeric.hpp"

namespace ncg {

inline int sign_of(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }
inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

inline Int rat_floor(const Rat& v) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return q;
}

/// Polynomial with exact integer coefficients, stored low degree first.
struct IPoly {
    std::vector<Int> c;

    IPoly() = default;
    explicit IPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    static IPoly constant(Int v) { return IPoly{{std::move(v)}}; }
    static IPoly x_minus(const Int& r) { return IPoly{{-r, 1}}; }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lead() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    int sign_at(const Rat& x) const { return sign_of(eval(x)); }

    IPoly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<Int> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
        return IPoly{std::move(d)};
    }

    friend IPoly operator+(const IPoly& a, const IPoly& b) {
        std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return IPoly{std::move(r)};
    }
    friend IPoly operator-(const IPoly& a, const IPoly& b) {
        std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return IPoly{std::move(r)};
    }
    friend IPoly operator*(const IPoly& a, const IPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return IPoly{std::move(r)};
    }
    friend bool operator==(const IPoly& a, const IPoly& b) { return a.c == b.c; }
};

/// Quotient and remainder for a monic divisor; both stay integral.
inline std::pair<IPoly, IPoly> divrem_monic(const IPoly& a, const IPoly& b) {
    if (!b.is_monic()) throw std::invalid_argument("divrem_monic: divisor not monic");
    std::vector<Int> rem = a.c;
    const int db = b.degree();
    std::vector<Int> quo;
    if (static_cast<int>(rem.size()) - 1 >= db) quo.assign(rem.size() - static_cast<std::size_t>(db), Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        Int f = rem[static_cast<std::size_t>(i)];
        if (f == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.c[static_cast<std::size_t>(j)];
    }
    IPoly q{std::move(quo)}, r{std::move(rem)};
    return {std::move(q), std::move(r)};
}

/// Exact division by a monic divisor; throws if b does not divide a.
inline IPoly div_exact(const IPoly& a, const IPoly& b) {
    auto [q, r] = divrem_monic(a, b);
    if (!r.is_zero()) throw std::logic_error("div_exact: nonzero remainder");
    return q;
}

/// Exact division when the divisor may be non-monic (quotient must be integral).
inline IPoly div_exact_anylead(const IPoly& a, const IPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) rem[i] = a.c[i];
    const int db = b.degree();
    const Rat blead(b.lead());
    std::vector<Rat> quo(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        Rat f = rem[static_cast<std::size_t>(i)] / blead;
        quo[static_cast<std::size_t>(i - db)] = f;
        if (f != 0)
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(i - db + j)] -= f * Rat(b.c[static_cast<std::size_t>(j)]);
    }
    for (auto& v : rem)
        if (v != 0) throw std::logic_error("div_exact_anylead: nonzero remainder");
    std::vector<Int> ic(quo.size());
    for (std::size_t i = 0; i < quo.size(); ++i) {
        quo[i].canonicalize();
        if (quo[i].get_den() != 1) throw std::logic_error("div_exact_anylead: non-integer quotient");
        ic[i] = quo[i].get_num();
    }
    return IPoly{std::move(ic)};
}

inline Int content(const IPoly& p) {
    Int g = 0;
    for (const auto& v : p.c) {
        Int a = abs(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

/// Primitive part with positive leading coefficient.
inline IPoly primitive_part(IPoly p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.lead() < 0) g = -g;
    for (auto& v : p.c) v /= g;
    return p;
}

namespace detail {

/// Remainder of a by b over Q, returned as a primitive integer polynomial
/// scaled by a positive constant (sign pattern preserved).
inline IPoly qrem_primitive(const IPoly& a, const IPoly& b) {
    std::vector<Rat> rem(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) rem[i] = a.c[i];
    const int db = b.degree();
    const Rat blead(b.lead());
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= db) {
        Rat f = rem[static_cast<std::size_t>(dr)] / blead;
        if (f != 0) {
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(dr - db + j)] -= f * Rat(b.c[static_cast<std::size_t>(j)]);
        }
        rem.pop_back();
        --dr;
    }
    Int lcm = 1;
    for (auto& v : rem) {
        v.canonicalize();
        Int den = v.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Int> ic(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) {
        Rat s = rem[i] * Rat(lcm);
        s.canonicalize();
        ic[i] = s.get_num();
    }
    IPoly r{std::move(ic)};
    if (r.is_zero()) return r;
    Int g = content(r);
    for (auto& v : r.c) v /= g;
    return r;
}

}  // namespace detail

/// Primitive gcd of two integer polynomials (monic-normalized Euclid over Q).
inline IPoly gcd_poly(IPoly a, IPoly b) {
    if (a.is_zero()) return primitive_part(std::move(b));
    if (b.is_zero()) return primitive_part(std::move(a));
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IPoly r = detail::qrem_primitive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(std::move(a));
}

/// Square-free decomposition (Yun): [(factor, multiplicity)], factors primitive
/// and pairwise coprime; product of factor^mult equals p up to content.
inline std::vector<std::pair<IPoly, int>> squarefree_decompose(const IPoly& p) {
    std::vector<std::pair<IPoly, int>> out;
    if (p.degree() < 1) return out;
    IPoly f = primitive_part(p);
    IPoly g = gcd_poly(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(std::move(f), 1);
        return out;
    }
    IPoly c = div_exact_anylead(f, g);
    IPoly d = div_exact_anylead(f.derivative(), g) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        IPoly a = gcd_poly(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = div_exact_anylead(c, a);
        d = div_exact_anylead(d, a) - c.derivative();
    }
    return out;
}

/// Sturm chain of a square-free polynomial (primitive integer normalization).
struct SturmChain {
    std::vector<IPoly> chain;

    explicit SturmChain(const IPoly& p) {
        chain.push_back(primitive_part(p));
        IPoly d = p.derivative();
        if (!d.is_zero()) chain.push_back(primitive_part(d));
        while (chain.size() >= 2 && chain.back().degree() > 0) {
            IPoly r = detail::qrem_primitive(chain[chain.size() - 2], chain.back());
            if (r.is_zero()) break;
            for (auto& v : r.c) v = -v;
            chain.push_back(std::move(r));
        }
    }

    int variations_at(const Rat& x) const {
        int var = 0, prev = 0;
        for (const auto& p : chain) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }
    /// Number of distinct real roots in (a, b]; endpoints must not be roots.
    int count_in(const Rat& a, const Rat& b) const { return variations_at(a) - variations_at(b); }
};

/// Strict bound B with every real root inside (-B, B).
inline Int root_bound(const IPoly& p) {
    if (p.degree() < 1) return 1;
    Int m = 0;
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) m = std::max(m, Int(abs(p.c[i])));
    Int lead = abs(p.lead());
    return m / lead + 2;
}

struct RootInterval {
    Rat lo, hi;  // half-open (lo, hi], contains exactly one root
};

namespace detail {

/// A point near mid (within (lo,hi)) where p does not vanish.
inline Rat nonroot_near(const IPoly& p, const Rat& lo, const Rat& hi) {
    Rat mid = (lo + hi) / 2;
    if (p.sign_at(mid) != 0) return mid;
    Rat step = (hi - lo) / 8;
    for (int k = 0; k < 128; ++k) {
        Rat cand = mid + step;
        if (cand < hi && p.sign_at(cand) != 0) return cand;
        step /= 2;
    }
    throw std::logic_error("nonroot_near: could not avoid polynomial roots");
}

}  // namespace detail

/// Isolating intervals for all real roots of a square-free polynomial.
inline std::vector<RootInterval> isolate_real_roots(const IPoly& p) {
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;
    SturmChain st(p);
    Int b = root_bound(p);
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> work;
    Rat lo(-b), hi(b);
    int total = st.count_in(lo, hi);
    if (total > 0) work.push_back({lo, hi, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = detail::nonroot_near(p, s.lo, s.hi);
        int left = st.count_in(s.lo, mid);
        int right = s.count - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b2) { return a.lo < b2.lo; });
    return out;
}

/// Shrink an isolating interval of a square-free p by bisection until hi - lo <= width.
inline RootInterval refine_interval(const IPoly& p, RootInterval iv, const Rat& width) {
    int s_hi = p.sign_at(iv.hi);
    if (s_hi == 0) {
        // the root is exactly the right endpoint
        Rat eps = width / 2;
        return {iv.hi - eps, iv.hi};
    }
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) {
            Rat eps = width / 4;
            return {mid - eps, mid + eps};
        }
        if (sm == s_hi)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

/// All integer roots of p with multiplicities; p is deflated in place.
inline std::vector<std::pair<Int, int>> extract_integer_roots(IPoly& p) {
    std::vector<std::pair<Int, int>> found;
    if (p.degree() < 1) return found;
    if (!p.is_monic()) throw std::invalid_argument("extract_integer_roots expects a monic polynomial");
    auto record = [&](const Int& r) {
        int mult = 0;
        for (;;) {
            auto [q, rem] = divrem_monic(p, IPoly::x_minus(r));
            if (!rem.is_zero()) break;
            p = std::move(q);
            ++mult;
        }
        if (mult > 0) found.emplace_back(r, mult);
    };
    // trailing zeros first: graph char polys are dominated by the 0 eigenvalue
    if (!p.c.empty() && p.c[0] == 0) record(0);
    while (p.degree() >= 1) {
        std::vector<Int> candidates;
        for (auto& [f, mult] : squarefree_decompose(p)) {
            (void)mult;
            if (f.degree() < 1) continue;
            for (auto& iv : isolate_real_roots(f)) {
                auto r = refine_interval(f, iv, Rat(1, 4));
                Int cand = rat_floor(r.hi);
                if (Rat(cand) > r.lo && Rat(cand) <= r.hi && p.eval(cand) == 0) candidates.push_back(cand);
            }
        }
        if (candidates.empty()) break;
        for (const auto& cand : candidates) record(cand);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return found;
}

inline std::string poly_to_string(const IPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& v = p.c[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        Int a = abs(v);
        if (!s.empty())
            s += (v > 0) ? " + " : " - ";
        else if (v < 0)
            s += "-";
        bool show_coeff = (a != 1) || i == 0;
        if (show_coeff) s += a.get_str();
        if (i > 0) {
            if (show_coeff) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace ncg
