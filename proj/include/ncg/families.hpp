#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/gf.hpp"
#include "ncg/group.hpp"
#include "ncg/numeric.hpp"

namespace ncg {

enum class Family {
    D2m,
    Q4m,
    SD8n,
    QD2n,
    V8n,
    M2rs,
    U6n,
    Frobenius,
    HanakiAv,
    HanakiAp,
    Alt,
    Sym,
    SL23,
    Sz2,
    DirectProduct,
    Order16,
};

/// Family tag plus the integer parameters that family uses; named variants
/// cover the direct products and order-16 groups from the case studies.
struct GroupFamilySpec {
    Family family{};
    long m = 0, n = 0, r = 0, s = 0, p = 0, q = 0;
    std::string variant;  // d6xz3 | a4xz2 | z2xd8 | z2xq8 | m16 | z4rz4 | d8sz4 | sg163

    static GroupFamilySpec d2m(long m) { return {Family::D2m, m, 0, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec q4m(long m) { return {Family::Q4m, m, 0, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec sd8n(long n) { return {Family::SD8n, 0, n, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec qd2n(long n) { return {Family::QD2n, 0, n, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec v8n(long n) { return {Family::V8n, 0, n, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec m2rs(long r, long s) { return {Family::M2rs, 0, 0, r, s, 0, 0, {}}; }
    static GroupFamilySpec u6n(long n) { return {Family::U6n, 0, n, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec frobenius(long p, long q) { return {Family::Frobenius, 0, 0, 0, 0, p, q, {}}; }
    static GroupFamilySpec hanaki_av(long n) { return {Family::HanakiAv, 0, n, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec hanaki_ap(long p, long n) { return {Family::HanakiAp, 0, n, 0, 0, p, 0, {}}; }
    static GroupFamilySpec alt(long n) { return {Family::Alt, 0, n, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec sym(long n) { return {Family::Sym, 0, n, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec sl23() { return {Family::SL23, 0, 0, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec sz2() { return {Family::Sz2, 0, 0, 0, 0, 0, 0, {}}; }
    static GroupFamilySpec named_product(std::string v) { return {Family::DirectProduct, 0, 0, 0, 0, 0, 0, std::move(v)}; }
    static GroupFamilySpec order16(std::string v) { return {Family::Order16, 0, 0, 0, 0, 0, 0, std::move(v)}; }

    Int predicted_order() const {
        switch (family) {
            case Family::D2m: return Int(2 * m);
            case Family::Q4m: return Int(4 * m);
            case Family::SD8n: return Int(8 * n);
            case Family::QD2n: return Int(1) << static_cast<unsigned long>(n);
            case Family::V8n: return Int(8 * n);
            case Family::M2rs: return Int(2 * r * s);
            case Family::U6n: return Int(6 * n);
            case Family::Frobenius: return Int(p) * Int(q);
            case Family::HanakiAv: return pow_int(Int(4), static_cast<unsigned long>(n));
            case Family::HanakiAp: return pow_int(Int(p), static_cast<unsigned long>(3 * n));
            case Family::Alt: {
                Int f = 1;
                for (long i = 2; i <= n; ++i) f *= i;
                return f / 2;
            }
            case Family::Sym: {
                Int f = 1;
                for (long i = 2; i <= n; ++i) f *= i;
                return f;
            }
            case Family::SL23: return 24;
            case Family::Sz2: return 20;
            case Family::DirectProduct:
                if (variant == "d6xz3") return 18;
                if (variant == "a4xz2") return 24;
                return 16;  // z2xd8, z2xq8
            case Family::Order16: return 16;
        }
        return 0;
    }

    std::string to_string() const {
        std::ostringstream os;
        switch (family) {
            case Family::D2m: os << "D_" << 2 * m; break;
            case Family::Q4m: os << "Q_" << 4 * m; break;
            case Family::SD8n: os << "SD_" << 8 * n; break;
            case Family::QD2n: os << "QD_" << (1L << n); break;
            case Family::V8n: os << "V_" << 8 * n; break;
            case Family::M2rs: os << "M_" << 2 * r * s << "(r=" << r << ",s=" << s << ")"; break;
            case Family::U6n: os << "U_" << 6 * n; break;
            case Family::Frobenius: os << "F_{" << p << "," << q << "}"; break;
            case Family::HanakiAv: os << "A(" << n << ",v)"; break;
            case Family::HanakiAp: os << "A(" << n << "," << p << ")"; break;
            case Family::Alt: os << "A_" << n; break;
            case Family::Sym: os << "S_" << n; break;
            case Family::SL23: os << "SL(2,3)"; break;
            case Family::Sz2: os << "Sz(2)"; break;
            case Family::DirectProduct:
                if (variant == "d6xz3") os << "D_6 x Z_3";
                else if (variant == "a4xz2") os << "A_4 x Z_2";
                else if (variant == "z2xd8") os << "Z_2 x D_8";
                else os << "Z_2 x Q_8";
                break;
            case Family::Order16:
                if (variant == "m16") os << "M_16";
                else if (variant == "z4rz4") os << "Z_4 : Z_4";
                else if (variant == "d8sz4") os << "D_8 * Z_4";
                else os << "SG(16,3)";
                break;
        }
        return os.str();
    }
};

namespace detail {

inline std::string power_word(const std::vector<std::pair<const char*, long>>& factors) {
    std::string s;
    for (const auto& [sym, e] : factors) {
        if (e == 0) continue;
        if (!s.empty()) s += " ";
        s += sym;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "e" : s;
}

/// <a, b : a^M = 1, b^K = a^h, b a b^-1 = a^u>; elements a^i b^j.
inline FiniteGroup metacyclic(const std::string& name, long M, long K, long u, long h,
                              const char* core = "a", const char* outer = "b") {
    u = ((u % M) + M) % M;
    h = ((h % M) + M) % M;
    // consistency: u^K = 1 (mod M) and h is fixed by the twist
    std::vector<long> upow(static_cast<std::size_t>(K) + 1);
    upow[0] = 1;
    for (long j = 1; j <= K; ++j) upow[static_cast<std::size_t>(j)] = (upow[static_cast<std::size_t>(j - 1)] * u) % M;
    if (upow[static_cast<std::size_t>(K)] != 1 % M) throw std::logic_error(name + ": inconsistent twist u^K != 1");
    if ((h * u) % M != h % M) throw std::logic_error(name + ": b^K = a^h is not twist-invariant");
    std::vector<std::vector<long>> elems;
    for (long i = 0; i < M; ++i)
        for (long j = 0; j < K; ++j) elems.push_back({i, j});
    auto mul = [M, K, h, upow](const std::vector<long>& x, const std::vector<long>& y) {
        long i = (x[0] + y[0] * upow[static_cast<std::size_t>(x[1])]) % M;
        long j = x[1] + y[1];
        if (j >= K) {
            j -= K;
            i = (i + h) % M;
        }
        return std::vector<long>{i, j};
    };
    auto label = [core, outer](const std::vector<long>& x) {
        return power_word({{core, x[0]}, {outer, x[1]}});
    };
    return FiniteGroup::build(name, elems, mul, label);
}

inline int permutation_parity(const std::vector<long>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2;
}

inline std::string cycle_label(const std::vector<long>& p) {
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<long>(i)) continue;
        s += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            first = false;
            s += std::to_string(j + 1);
            j = static_cast<std::size_t>(p[j]);
        }
        s += ")";
    }
    return s.empty() ? "e" : s;
}

inline FiniteGroup permutation_group(const std::string& name, long n, bool even_only) {
    std::vector<long> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<long>> elems;
    std::vector<long> perm = base;
    do {
        if (!even_only || permutation_parity(perm) == 0) elems.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto mul = [](const std::vector<long>& x, const std::vector<long>& y) {
        std::vector<long> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[static_cast<std::size_t>(y[i])];
        return r;
    };
    return FiniteGroup::build(name, elems, mul, cycle_label);
}

inline FiniteGroup cyclic(const std::string& name, long k, const char* sym = "z") {
    std::vector<std::vector<long>> elems;
    for (long i = 0; i < k; ++i) elems.push_back({i});
    auto mul = [k](const std::vector<long>& x, const std::vector<long>& y) {
        return std::vector<long>{(x[0] + y[0]) % k};
    };
    auto label = [sym](const std::vector<long>& x) { return power_word({{sym, x[0]}}); };
    return FiniteGroup::build(name, elems, mul, label);
}

}  // namespace detail

/// Direct product with componentwise multiplication.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int ng = g.order(), nh = h.order();
    const int n = ng * nh;
    if (n > FiniteGroup::kMaxOrder) throw std::invalid_argument("direct product too large");
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    auto id = [nh](int a, int b) { return a * nh + b; };
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) labels[static_cast<std::size_t>(id(a, b))] = "(" + g.label(a) + ", " + h.label(b) + ")";
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            for (int c = 0; c < ng; ++c)
                for (int d = 0; d < nh; ++d)
                    table[static_cast<std::size_t>(id(a, b)) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(id(c, d))] = static_cast<std::uint16_t>(id(g.mul(a, c), h.mul(b, d)));
    return FiniteGroup::from_table(g.name() + " x " + h.name(), std::move(table), std::move(labels));
}

namespace detail {

inline FiniteGroup hanaki_av(long n) {
    GFTable f(2, static_cast<int>(n));
    std::vector<std::vector<long>> elems;
    for (long a = 0; a < f.size(); ++a)
        for (long b = 0; b < f.size(); ++b) elems.push_back({a, b});
    // U(a,b) U(a',b') = U(a+a', b+b'+v(a)a')
    auto mul = [&f](const std::vector<long>& x, const std::vector<long>& y) {
        return std::vector<long>{f.add(x[0], y[0]), f.add(f.add(x[1], y[1]), f.mul(f.frobenius(x[0]), y[0]))};
    };
    auto label = [](const std::vector<long>& x) {
        return "U(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + ")";
    };
    return FiniteGroup::build("A(" + std::to_string(n) + ",v)", elems, mul, label);
}

inline FiniteGroup hanaki_ap(long p, long n) {
    GFTable f(p, static_cast<int>(n));
    std::vector<std::vector<long>> elems;
    for (long a = 0; a < f.size(); ++a)
        for (long b = 0; b < f.size(); ++b)
            for (long c = 0; c < f.size(); ++c) elems.push_back({a, b, c});
    auto mul = [&f](const std::vector<long>& x, const std::vector<long>& y) {
        return std::vector<long>{f.add(x[0], y[0]), f.add(f.add(x[1], y[1]), f.mul(x[2], y[0])), f.add(x[2], y[2])};
    };
    auto label = [](const std::vector<long>& x) {
        return "V(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + ")";
    };
    return FiniteGroup::build("A(" + std::to_string(n) + "," + std::to_string(p) + ")", elems, mul, label);
}

inline FiniteGroup v8n_group(long n) {
    std::vector<std::vector<long>> elems;
    for (long i = 0; i < 2 * n; ++i)
        for (long j = 0; j < 4; ++j) elems.push_back({i, j});
    const long M = 2 * n;
    auto mul = [M](const std::vector<long>& x, const std::vector<long>& y) {
        long sign = (x[1] % 2 == 0) ? 1 : -1;
        long i = ((x[0] + sign * y[0]) % M + M) % M;
        long j = (x[1] + y[1] + 2 * (y[0] % 2) * (x[1] % 2)) % 4;
        return std::vector<long>{i, j};
    };
    auto label = [](const std::vector<long>& x) { return power_word({{"a", x[0]}, {"b", x[1]}}); };
    return FiniteGroup::build("V_" + std::to_string(8 * n), elems, mul, label);
}

inline FiniteGroup sl23_group() {
    std::vector<std::vector<long>> elems;
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
            for (long c = 0; c < 3; ++c)
                for (long d = 0; d < 3; ++d)
                    if (((a * d - b * c) % 3 + 3) % 3 == 1) elems.push_back({a, b, c, d});
    auto mul = [](const std::vector<long>& x, const std::vector<long>& y) {
        return std::vector<long>{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
                                 (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
    };
    auto label = [](const std::vector<long>& x) {
        return "[[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "],[" + std::to_string(x[2]) + "," +
               std::to_string(x[3]) + "]]";
    };
    return FiniteGroup::build("SL(2,3)", elems, mul, label);
}

/// D_8 * Z_4 central product: <x,y,c : x^4=y^2=c^2=1, xy=yx, xc=cx, yc=x^2cy>.
inline FiniteGroup d8_central_z4() {
    std::vector<std::vector<long>> elems;
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 2; ++k) elems.push_back({i, j, k});
    auto mul = [](const std::vector<long>& x, const std::vector<long>& y) {
        return std::vector<long>{(x[0] + y[0] + 2 * x[2] * y[1]) % 4, (x[1] + y[1]) % 2, (x[2] + y[2]) % 2};
    };
    auto label = [](const std::vector<long>& x) { return power_word({{"x", x[0]}, {"y", x[1]}, {"c", x[2]}}); };
    return FiniteGroup::build("D_8 * Z_4", elems, mul, label);
}

/// SG(16,3): <x,y : x^4=y^4=1, xy=y^-1x^-1, xy^-1=yx^-1>, realized on the
/// normal forms a^i b^j s^k with s a s = a b, b central, x = a s, y = s a.
inline FiniteGroup sg16_3() {
    std::vector<std::vector<long>> elems;
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 2; ++k) elems.push_back({i, j, k});
    auto mul = [](const std::vector<long>& x, const std::vector<long>& y) {
        return std::vector<long>{(x[0] + y[0]) % 4, (x[1] + y[1] + x[2] * y[0]) % 2, (x[2] + y[2]) % 2};
    };
    auto label = [](const std::vector<long>& x) { return power_word({{"a", x[0]}, {"b", x[1]}, {"s", x[2]}}); };
    return FiniteGroup::build("SG(16,3)", elems, mul, label);
}

}  // namespace detail

/// Construct the group named by a family spec. Throws std::invalid_argument
/// with a reason when the parameters violate the family's constraints.
inline FiniteGroup construct_group(const GroupFamilySpec& spec) {
    using detail::metacyclic;
    switch (spec.family) {
        case Family::D2m:
            if (spec.m < 3) throw std::invalid_argument("D_2m needs m >= 3 (smaller m gives an abelian group)");
            return metacyclic("D_" + std::to_string(2 * spec.m), spec.m, 2, -1, 0);
        case Family::Q4m:
            if (spec.m < 2) throw std::invalid_argument("Q_4m needs m >= 2");
            return metacyclic("Q_" + std::to_string(4 * spec.m), 2 * spec.m, 2, -1, spec.m, "b", "a");
        case Family::SD8n:
            if (spec.n < 2) throw std::invalid_argument("SD_8n needs n >= 2 (n = 1 gives an abelian group)");
            return metacyclic("SD_" + std::to_string(8 * spec.n), 4 * spec.n, 2, 2 * spec.n - 1, 0);
        case Family::QD2n: {
            if (spec.n < 4) throw std::invalid_argument("QD_2^n needs n >= 4");
            long M = 1L << (spec.n - 1);
            return metacyclic("QD_" + std::to_string(1L << spec.n), M, 2, (1L << (spec.n - 2)) - 1, 0);
        }
        case Family::V8n:
            if (spec.n < 1) throw std::invalid_argument("V_8n needs n >= 1");
            return detail::v8n_group(spec.n);
        case Family::M2rs:
            if (spec.r < 3) throw std::invalid_argument("M_2rs needs r >= 3 (smaller r gives an abelian group)");
            if (spec.s < 1) throw std::invalid_argument("M_2rs needs s >= 1");
            return metacyclic("M_" + std::to_string(2 * spec.r * spec.s) + "(r=" + std::to_string(spec.r) +
                                  ",s=" + std::to_string(spec.s) + ")",
                              spec.r, 2 * spec.s, -1, 0);
        case Family::U6n:
            if (spec.n < 1) throw std::invalid_argument("U_6n needs n >= 1");
            return metacyclic("U_" + std::to_string(6 * spec.n), 3, 2 * spec.n, -1, 0, "b", "a");
        case Family::Frobenius: {
            if (!is_prime_u64(static_cast<std::uint64_t>(spec.p))) throw std::invalid_argument("F_{p,q}: p is not prime");
            if (!is_prime_u64(static_cast<std::uint64_t>(spec.q))) throw std::invalid_argument("F_{p,q}: q is not prime");
            if (spec.q < 2 || (spec.p - 1) % spec.q != 0)
                throw std::invalid_argument("F_{p,q}: q does not divide p - 1");
            long u = 0;
            for (long g = 2; g < spec.p; ++g) {
                long cand = mod_pow_long(g, (spec.p - 1) / spec.q, spec.p);
                if (cand != 1 && mult_order_mod(cand, spec.p) == spec.q) {
                    u = cand;
                    break;
                }
            }
            if (u == 0) throw std::invalid_argument("F_{p,q}: no element of order q mod p found");
            long v = mod_pow_long(u, spec.q - 1, spec.p);  // b a b^-1 = a^(u^-1)
            return metacyclic("F_{" + std::to_string(spec.p) + "," + std::to_string(spec.q) + "}", spec.p, spec.q, v, 0);
        }
        case Family::HanakiAv:
            if (spec.n < 2) throw std::invalid_argument("A(n,v) needs n >= 2");
            return detail::hanaki_av(spec.n);
        case Family::HanakiAp:
            if (spec.n < 1) throw std::invalid_argument("A(n,p) needs n >= 1");
            if (!is_prime_u64(static_cast<std::uint64_t>(spec.p))) throw std::invalid_argument("A(n,p): p is not prime");
            return detail::hanaki_ap(spec.p, spec.n);
        case Family::Alt:
            if (spec.n < 4) throw std::invalid_argument("A_n needs n >= 4 (A_3 is abelian)");
            if (spec.n > 7) throw std::invalid_argument("A_n supported up to n = 7");
            return detail::permutation_group("A_" + std::to_string(spec.n), spec.n, true);
        case Family::Sym:
            if (spec.n < 3) throw std::invalid_argument("S_n needs n >= 3");
            if (spec.n > 7) throw std::invalid_argument("S_n supported up to n = 7");
            return detail::permutation_group("S_" + std::to_string(spec.n), spec.n, false);
        case Family::SL23: return detail::sl23_group();
        case Family::Sz2:
            // Z_5 x| Z_4 with y^-1 x y = x^2, i.e. y x y^-1 = x^3
            return detail::metacyclic("Sz(2)", 5, 4, 3, 0, "x", "y");
        case Family::DirectProduct: {
            if (spec.variant == "d6xz3") return direct_product(construct_group(GroupFamilySpec::d2m(3)), detail::cyclic("Z_3", 3));
            if (spec.variant == "a4xz2") return direct_product(construct_group(GroupFamilySpec::alt(4)), detail::cyclic("Z_2", 2));
            if (spec.variant == "z2xd8") return direct_product(detail::cyclic("Z_2", 2), construct_group(GroupFamilySpec::d2m(4)));
            if (spec.variant == "z2xq8") return direct_product(detail::cyclic("Z_2", 2), construct_group(GroupFamilySpec::q4m(2)));
            throw std::invalid_argument("unknown direct product: " + spec.variant);
        }
        case Family::Order16: {
            if (spec.variant == "m16") return detail::metacyclic("M_16", 8, 2, 5, 0, "x", "y");
            if (spec.variant == "z4rz4") return detail::metacyclic("Z_4 : Z_4", 4, 4, -1, 0, "x", "y");
            if (spec.variant == "d8sz4") return detail::d8_central_z4();
            if (spec.variant == "sg163") return detail::sg16_3();
            throw std::invalid_argument("unknown order-16 group: " + spec.variant);
        }
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace ncg
