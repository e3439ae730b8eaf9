#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ncg/numeric.hpp"
#include "ncg/poly.hpp"

namespace ncg {

/// a + b*sqrt(d) with rational a, b (b != 0) and squarefree integer d >= 2.
struct Surd {
    Rat a, b;
    Int d;
};

/// Root of a primitive square-free integer polynomial, isolated by [lo, hi].
struct PolyRoot {
    IPoly poly;
    Rat lo, hi;
};

/// Fallback when a product has no exact closed form (flagged inexact).
struct ApproxVal {
    double value;
    double bound;
};

/// Rational interval [lo, hi] used for exact-endpoint comparisons.
struct RatInterval {
    Rat lo, hi;
    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval scaled(const Rat& f) const {
        if (f >= 0) return {lo * f, hi * f};
        return {hi * f, lo * f};
    }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rat width() const { return hi - lo; }
};

/// Rational bracket s/2^k <= sqrt(d) <= (s+1)/2^k of width <= w.
inline RatInterval sqrt_bracket(const Int& d, const Rat& w) {
    if (d < 0) throw std::domain_error("sqrt_bracket of negative");
    unsigned long k = 2;
    Rat width = w > 0 ? w : Rat(1, 1000000);
    for (;;) {
        Int scaled = d << (2 * k);
        Int s = isqrt(scaled);
        Rat lo = Rat(s) / Rat(Int(1) << k);
        Rat hi = Rat(s + 1) / Rat(Int(1) << k);
        if (s * s == scaled) return {lo, lo};
        if (hi - lo <= width) return {lo, hi};
        k = k * 2;
    }
}

inline int surd_sign(const Rat& a, const Rat& b, const Int& d) {
    int sa = sign_of(a), sb = sign_of(b);
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d
    Rat lhs = a * a, rhs = b * b * Rat(d);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

class AlgebraicValue {
public:
    enum class Kind { Rational, Surd, PolyRoot, Approx };

    AlgebraicValue() : v_(Rat(0)) {}

    static AlgebraicValue rational(Rat r) { return AlgebraicValue(std::move(r)); }
    static AlgebraicValue integer(Int n) { return AlgebraicValue(Rat(std::move(n))); }

    /// a + b*sqrt(d); d is normalized to its squarefree part.
    static AlgebraicValue surd(Rat a, Rat b, Int d) {
        if (d < 0) throw std::domain_error("negative discriminant: complex values unsupported");
        a.canonicalize();
        b.canonicalize();
        if (b == 0 || d == 0) return rational(std::move(a));
        auto split = squarefree_split(d);
        b *= Rat(split.root_factor);
        d = split.squarefree;
        if (d == 1) return rational(a + b);
        return AlgebraicValue(Surd{std::move(a), std::move(b), std::move(d)});
    }

    /// Root of a square-free integer polynomial inside [lo, hi].
    /// Degree <= 2 inputs collapse to Rational / Surd.
    static AlgebraicValue poly_root(IPoly p, Rat lo, Rat hi) {
        p = primitive_part(std::move(p));
        if (p.degree() == 1) {
            Rat r(-p.c[0], p.c[1]);
            r.canonicalize();
            return rational(r);
        }
        if (p.degree() == 2) {
            // (-b +- sqrt(b^2-4ac)) / 2a
            Rat a(p.c[2]), b(p.c[1]), c(p.c[0]);
            Rat disc = b * b - 4 * a * c;
            disc.canonicalize();
            if (disc < 0) throw std::domain_error("complex quadratic root");
            // value = -b/(2a) + s*sqrt(disc)/(2a): decide branch from the interval
            Int dn = disc.get_num() * disc.get_den();
            Rat base = -b / (2 * a);
            Rat coeff = Rat(1, 1) / (2 * a * Rat(disc.get_den()));
            AlgebraicValue plus = surd(base, coeff, dn);
            AlgebraicValue minus = surd(base, -coeff, dn);
            // pick the root lying in [lo, hi]
            auto in_iv = [&](const AlgebraicValue& av) {
                RatInterval iv = av.bracket(Rat(1, 1000000));
                return iv.hi >= lo && iv.lo <= hi;
            };
            if (in_iv(plus) && !in_iv(minus)) return plus;
            if (in_iv(minus) && !in_iv(plus)) return minus;
            // ambiguous at coarse precision: refine by direct comparison
            RatInterval ip = plus.bracket(Rat(1, Int("1000000000000000000")));
            if (ip.hi >= lo && ip.lo <= hi) return plus;
            return minus;
        }
        return AlgebraicValue(PolyRoot{std::move(p), std::move(lo), std::move(hi)});
    }

    static AlgebraicValue approx(double value, double bound) { return AlgebraicValue(ApproxVal{value, bound}); }

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_exact() const { return kind() != Kind::Approx; }
    const Rat& as_rational() const { return std::get<Rat>(v_); }
    const Surd& as_surd() const { return std::get<Surd>(v_); }
    const PolyRoot& as_poly_root() const { return std::get<PolyRoot>(v_); }
    const ApproxVal& as_approx() const { return std::get<ApproxVal>(v_); }

    /// Rational interval containing the value, of width <= w (exact values give width 0).
    RatInterval bracket(const Rat& w) const {
        switch (kind()) {
            case Kind::Rational: {
                const Rat& r = as_rational();
                return {r, r};
            }
            case Kind::Surd: {
                const Surd& s = as_surd();
                Rat babs = abs(s.b);
                RatInterval root = sqrt_bracket(s.d, w / (2 * babs));
                RatInterval scaled = root.scaled(s.b);
                return {s.a + scaled.lo, s.a + scaled.hi};
            }
            case Kind::PolyRoot: {
                const PolyRoot& pr = as_poly_root();
                auto iv = refine_interval(pr.poly, {pr.lo, pr.hi}, w);
                return {iv.lo, iv.hi};
            }
            case Kind::Approx: {
                const ApproxVal& a = as_approx();
                return {Rat(a.value) - Rat(a.bound), Rat(a.value) + Rat(a.bound)};
            }
        }
        throw std::logic_error("unreachable");
    }

    double to_double() const {
        RatInterval iv = bracket(Rat(1, Int("10000000000000000")));
        return (iv.lo.get_d() + iv.hi.get_d()) / 2;
    }

    int sign() const {
        switch (kind()) {
            case Kind::Rational: return sign_of(as_rational());
            case Kind::Surd: {
                const Surd& s = as_surd();
                return surd_sign(s.a, s.b, s.d);
            }
            case Kind::PolyRoot: {
                // square-free poly without rational roots: the root is never 0
                Rat w(1, 2);
                RatInterval iv = bracket(w);
                while (iv.contains_zero()) {
                    w /= 1024;
                    iv = bracket(w);
                }
                return iv.lo > 0 ? 1 : -1;
            }
            case Kind::Approx: {
                const ApproxVal& a = as_approx();
                if (a.value - a.bound > 0) return 1;
                if (a.value + a.bound < 0) return -1;
                return 0;
            }
        }
        throw std::logic_error("unreachable");
    }

    AlgebraicValue negated() const {
        switch (kind()) {
            case Kind::Rational: return rational(-as_rational());
            case Kind::Surd: {
                const Surd& s = as_surd();
                return AlgebraicValue(Surd{-s.a, -s.b, s.d});
            }
            case Kind::PolyRoot: {
                const PolyRoot& pr = as_poly_root();
                IPoly q = pr.poly;
                for (std::size_t i = 0; i < q.c.size(); ++i)
                    if (i % 2 == 1) q.c[i] = -q.c[i];
                q = primitive_part(std::move(q));
                return AlgebraicValue(PolyRoot{std::move(q), -pr.hi, -pr.lo});
            }
            case Kind::Approx: {
                const ApproxVal& a = as_approx();
                return approx(-a.value, a.bound);
            }
        }
        throw std::logic_error("unreachable");
    }

    /// Shift by an exact rational (used for |mu - 2e/v| in Laplacian energy).
    AlgebraicValue shifted(const Rat& t) const {
        switch (kind()) {
            case Kind::Rational: return rational(as_rational() + t);
            case Kind::Surd: {
                const Surd& s = as_surd();
                return AlgebraicValue(Surd{s.a + t, s.b, s.d});
            }
            case Kind::PolyRoot: {
                const PolyRoot& pr = as_poly_root();
                // y = x + t  =>  roots of P(y - t), denominators cleared
                IPoly shifted_poly = compose_linear(pr.poly, -t);
                return AlgebraicValue(PolyRoot{std::move(shifted_poly), pr.lo + t, pr.hi + t});
            }
            case Kind::Approx: {
                const ApproxVal& a = as_approx();
                return approx(a.value + t.get_d(), a.bound + 1e-15 * std::abs(t.get_d()));
            }
        }
        throw std::logic_error("unreachable");
    }

    /// Scale by an exact rational.
    AlgebraicValue scaled(const Rat& f) const {
        if (f == 0) return rational(Rat(0));
        switch (kind()) {
            case Kind::Rational: return rational(as_rational() * f);
            case Kind::Surd: {
                const Surd& s = as_surd();
                return AlgebraicValue(Surd{s.a * f, s.b * f, s.d});
            }
            case Kind::PolyRoot: {
                const PolyRoot& pr = as_poly_root();
                IPoly q = scale_roots(pr.poly, f);
                Rat lo = pr.lo * f, hi = pr.hi * f;
                if (f < 0) std::swap(lo, hi);
                return AlgebraicValue(PolyRoot{std::move(q), std::move(lo), std::move(hi)});
            }
            case Kind::Approx: {
                const ApproxVal& a = as_approx();
                double fd = f.get_d();
                return approx(a.value * fd, a.bound * std::abs(fd) + 1e-300);
            }
        }
        throw std::logic_error("unreachable");
    }

    AlgebraicValue abs_value() const { return sign() >= 0 ? *this : negated(); }

    friend bool operator==(const AlgebraicValue& x, const AlgebraicValue& y) {
        if (x.kind() != y.kind()) return false;
        switch (x.kind()) {
            case Kind::Rational: return x.as_rational() == y.as_rational();
            case Kind::Surd: {
                const Surd& a = x.as_surd();
                const Surd& b = y.as_surd();
                return a.a == b.a && a.b == b.b && a.d == b.d;
            }
            case Kind::PolyRoot: {
                const PolyRoot& a = x.as_poly_root();
                const PolyRoot& b = y.as_poly_root();
                if (!(a.poly == b.poly)) return false;
                // refine far below the root separation of the small polynomials
                // used here; overlapping refined brackets means the same root
                Rat w(1, Int("1000000000000000000000000"));
                RatInterval ia = x.bracket(w), ib = y.bracket(w);
                return !(ia.hi < ib.lo || ib.hi < ia.lo);
            }
            case Kind::Approx: return false;
        }
        return false;
    }

    std::string to_string() const {
        std::ostringstream os;
        switch (kind()) {
            case Kind::Rational: os << as_rational(); break;
            case Kind::Surd: {
                const Surd& s = as_surd();
                Rat babs = abs(s.b);
                std::string root = (babs == 1 ? "" : babs.get_str() + "*");
                root += "sqrt(" + s.d.get_str() + ")";
                if (s.a != 0) os << s.a << (s.b > 0 ? " + " : " - ") << root;
                else os << (s.b < 0 ? "-" : "") << root;
                break;
            }
            case Kind::PolyRoot: {
                const PolyRoot& pr = as_poly_root();
                os << "root of " << poly_to_string(pr.poly) << " near " << to_double();
                break;
            }
            case Kind::Approx: os << "~" << as_approx().value << " (+-" << as_approx().bound << ")"; break;
        }
        return os.str();
    }

private:
    explicit AlgebraicValue(Rat r) : v_(std::move(r)) { std::get<Rat>(v_).canonicalize(); }
    explicit AlgebraicValue(Surd s) : v_(std::move(s)) {}
    explicit AlgebraicValue(PolyRoot p) : v_(std::move(p)) {}
    explicit AlgebraicValue(ApproxVal a) : v_(std::move(a)) {}

    /// P(x + t) with denominators cleared (t rational).
    static IPoly compose_linear(const IPoly& p, const Rat& t) {
        std::vector<Rat> acc{Rat(0)};
        for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
            // acc = acc*(x+t) + coeff
            std::vector<Rat> next(acc.size() + 1, Rat(0));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i + 1] += acc[i];
                next[i] += acc[i] * t;
            }
            next[0] += Rat(*it);
            acc = std::move(next);
        }
        Int lcm = 1;
        for (auto& v : acc) {
            v.canonicalize();
            Int den = v.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Int> ic(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            Rat s = acc[i] * Rat(lcm);
            s.canonicalize();
            ic[i] = s.get_num();
        }
        return primitive_part(IPoly{std::move(ic)});
    }

    /// Polynomial whose roots are f * (roots of p).
    static IPoly scale_roots(const IPoly& p, const Rat& f) {
        // Q(y) = P(y/f) scaled: coefficients c_i * num^{deg-i} * den^{i}
        Int num = f.get_num(), den = f.get_den();
        int deg = p.degree();
        std::vector<Int> q(p.c.size());
        for (int i = 0; i <= deg; ++i)
            q[static_cast<std::size_t>(i)] =
                p.c[static_cast<std::size_t>(i)] * pow_int(num, static_cast<unsigned long>(deg - i)) *
                pow_int(den, static_cast<unsigned long>(i));
        return primitive_part(IPoly{std::move(q)});
    }

    std::variant<Rat, Surd, PolyRoot, ApproxVal> v_;
};

/// Product of two algebraic values; exact whenever a closed form exists,
/// otherwise an Approx with widened bound.
inline AlgebraicValue product(const AlgebraicValue& x, const AlgebraicValue& y) {
    using K = AlgebraicValue::Kind;
    if (x.kind() == K::Rational) return y.scaled(x.as_rational());
    if (y.kind() == K::Rational) return x.scaled(y.as_rational());
    if (x.kind() == K::Surd && y.kind() == K::Surd) {
        const Surd& a = x.as_surd();
        const Surd& b = y.as_surd();
        if (a.d == b.d) {
            Rat rat = a.a * b.a + a.b * b.b * Rat(a.d);
            Rat co = a.a * b.b + a.b * b.a;
            return AlgebraicValue::surd(rat, co, a.d);
        }
        if (a.a == 0 && b.a == 0) return AlgebraicValue::surd(Rat(0), a.b * b.b, a.d * b.d);
    }
    // no exact form: fall back to a widened numeric bound
    RatInterval ix = x.bracket(Rat(1, Int("1000000000000")));
    RatInterval iy = y.bracket(Rat(1, Int("1000000000000")));
    double vx = (ix.lo.get_d() + ix.hi.get_d()) / 2, vy = (iy.lo.get_d() + iy.hi.get_d()) / 2;
    double bx = ix.width().get_d() / 2 + 1e-12, by = iy.width().get_d() / 2 + 1e-12;
    double bound = std::abs(vx) * by + std::abs(vy) * bx + bx * by + 1e-12;
    return AlgebraicValue::approx(vx * vy, bound);
}

/// Exact sum of rationals, surds over several radicands, isolated roots and
/// numeric remainders; supports exact sign decisions whenever possible.
class ExactSum {
public:
    ExactSum() = default;

    void add_rational(Rat r) {
        r.canonicalize();
        rational_ += r;
    }
    void add(const AlgebraicValue& v, const Rat& mult = Rat(1)) {
        using K = AlgebraicValue::Kind;
        if (mult == 0) return;
        switch (v.kind()) {
            case K::Rational: rational_ += v.as_rational() * mult; break;
            case K::Surd: {
                const Surd& s = v.as_surd();
                rational_ += s.a * mult;
                surds_[s.d] += s.b * mult;
                if (surds_[s.d] == 0) surds_.erase(s.d);
                break;
            }
            case K::PolyRoot: roots_.emplace_back(v, mult); break;
            case K::Approx: {
                approx_lo_ += (Rat(v.as_approx().value) - Rat(v.as_approx().bound)) * mult;
                approx_hi_ += (Rat(v.as_approx().value) + Rat(v.as_approx().bound)) * mult;
                has_approx_ = true;
                break;
            }
        }
    }

    bool is_exact() const { return roots_.empty() && !has_approx_; }
    bool is_closed_form() const { return is_exact() && surds_.size() <= 1; }

    /// Exact AlgebraicValue when the sum is a rational or a single surd.
    std::optional<AlgebraicValue> to_algebraic() const {
        if (!is_closed_form()) return std::nullopt;
        if (surds_.empty()) return AlgebraicValue::rational(rational_);
        const auto& [d, b] = *surds_.begin();
        return AlgebraicValue::surd(rational_, b, d);
    }

    RatInterval bracket(const Rat& w) const {
        std::size_t parts = 1 + surds_.size() + roots_.size();
        Rat share = w / Rat(static_cast<long>(parts));
        RatInterval acc{rational_, rational_};
        for (const auto& [d, b] : surds_) {
            RatInterval r = sqrt_bracket(d, share / (2 * abs(b)));
            acc = acc + r.scaled(b);
        }
        for (const auto& [root, mult] : roots_) acc = acc + root.bracket(share / (2 * abs(mult))).scaled(mult);
        if (has_approx_) acc = acc + RatInterval{approx_lo_, approx_hi_};
        return acc;
    }

    double to_double() const {
        RatInterval iv = bracket(Rat(1, Int("10000000000000000")));
        return (iv.lo.get_d() + iv.hi.get_d()) / 2;
    }

    /// Sign of the sum: +1/-1/0, or nullopt when undecidable (inexact parts
    /// straddling zero after refinement).
    std::optional<int> sign() const {
        if (!roots_.empty()) {
            ExactSum folded = consolidated();
            if (folded.roots_.size() < roots_.size()) return folded.sign();
        }
        if (is_exact()) {
            if (surds_.empty()) return sign_of(rational_);
            if (surds_.size() == 1) {
                const auto& [d, b] = *surds_.begin();
                return surd_sign(rational_, b, d);
            }
        }
        Rat w(1, 1000000);
        for (int round = 0; round < 8; ++round) {
            RatInterval iv = bracket(w);
            if (iv.lo > 0) return 1;
            if (iv.hi < 0) return -1;
            if (iv.lo == 0 && iv.hi == 0) return 0;
            if (has_approx_ && iv.width() <= (approx_hi_ - approx_lo_) * 2) break;
            w = w / Int("100000000");
        }
        return std::nullopt;
    }

    /// Merge duplicate roots and fold complete root families (all real roots
    /// of one square-free polynomial with one shared coefficient) into the
    /// rational part via the exact root sum.
    ExactSum consolidated() const {
        ExactSum r = *this;
        // merge entries that refer to the same root
        std::vector<std::pair<AlgebraicValue, Rat>> merged;
        for (const auto& [root, coeff] : r.roots_) {
            bool joined = false;
            for (auto& [mroot, mcoeff] : merged) {
                if (mroot == root) {
                    mcoeff += coeff;
                    joined = true;
                    break;
                }
            }
            if (!joined) merged.emplace_back(root, coeff);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
                     merged.end());
        // fold complete families
        std::map<std::vector<Int>, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < merged.size(); ++i)
            groups[merged[i].first.as_poly_root().poly.c].push_back(i);
        std::vector<bool> drop(merged.size(), false);
        for (const auto& [coeffs, idxs] : groups) {
            IPoly p{std::vector<Int>(coeffs)};
            if (static_cast<int>(idxs.size()) != p.degree()) continue;
            const Rat& coeff = merged[idxs[0]].second;
            bool uniform = true;
            for (std::size_t i : idxs) uniform = uniform && (merged[i].second == coeff);
            if (!uniform) continue;
            Rat root_sum = Rat(-p.c[static_cast<std::size_t>(p.degree() - 1)]) / Rat(p.lead());
            root_sum.canonicalize();
            r.rational_ += root_sum * coeff;
            for (std::size_t i : idxs) drop[i] = true;
        }
        r.roots_.clear();
        for (std::size_t i = 0; i < merged.size(); ++i)
            if (!drop[i]) r.roots_.push_back(merged[i]);
        return r;
    }

    ExactSum operator-(const ExactSum& o) const {
        ExactSum r = *this;
        r.rational_ -= o.rational_;
        for (const auto& [d, b] : o.surds_) {
            r.surds_[d] -= b;
            if (r.surds_[d] == 0) r.surds_.erase(d);
        }
        for (const auto& [root, mult] : o.roots_) r.roots_.emplace_back(root, -mult);
        if (o.has_approx_) {
            r.approx_lo_ -= o.approx_hi_;
            r.approx_hi_ -= o.approx_lo_;
            r.has_approx_ = true;
        }
        return r;
    }

    bool equals_exact(const ExactSum& o) const {
        ExactSum d = *this - o;
        auto s = d.sign();
        return s.has_value() && *s == 0;
    }

    std::string to_string() const {
        if (auto av = to_algebraic()) return av->to_string();
        std::ostringstream os;
        bool have_exact_part = rational_ != 0 || !surds_.empty();
        if (have_exact_part) {
            os << rational_;
            for (const auto& [d, b] : surds_) {
                Rat babs = abs(b);
                os << (b > 0 ? " + " : " - ") << (babs == 1 ? "" : babs.get_str() + "*") << "sqrt(" << d << ")";
            }
        }
        if (!roots_.empty() || has_approx_) {
            std::ostringstream rest;
            rest.precision(12);
            ExactSum tail = *this;
            tail.rational_ = 0;
            tail.surds_.clear();
            rest << tail.to_double();
            if (have_exact_part)
                os << " + (" << rest.str() << ")";
            else
                os << "~" << rest.str();
        }
        return os.str();
    }

    const Rat& rational_part() const { return rational_; }
    const std::map<Int, Rat>& surd_parts() const { return surds_; }
    bool has_roots() const { return !roots_.empty(); }

private:
    Rat rational_ = 0;
    std::map<Int, Rat> surds_;                             // d -> coefficient
    std::vector<std::pair<AlgebraicValue, Rat>> roots_;    // PolyRoot entries with coefficients
    Rat approx_lo_ = 0, approx_hi_ = 0;
    bool has_approx_ = false;
};

/// Three-way comparison of exact sums; nullopt when numerically undecidable.
inline std::optional<int> compare_sums(const ExactSum& a, const ExactSum& b) { return (a - b).sign(); }

}  // namespace ncg
