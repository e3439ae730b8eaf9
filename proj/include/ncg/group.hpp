#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncg/numeric.hpp"

namespace ncg {

/// Finite group as an explicit multiplication table over indexed elements.
/// Immutable after construction; all operations are pure lookups.
class FiniteGroup {
public:
    static constexpr long kMaxOrder = 5040;

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int x, int y) const {
        return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
    }
    int inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }
    bool commutes(int x, int y) const { return mul(x, y) == mul(y, x); }
    const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
    const std::string& name() const { return name_; }

    int pow(int x, long e) const {
        int acc = identity_;
        if (e < 0) {
            x = inv(x);
            e = -e;
        }
        for (long i = 0; i < e; ++i) acc = mul(acc, x);
        return acc;
    }

    int element_order(int x) const {
        int acc = x, ord = 1;
        while (acc != identity_) {
            acc = mul(acc, x);
            ++ord;
        }
        return ord;
    }

    bool is_abelian() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!commutes(i, j)) return false;
        return true;
    }

    /// Builder used by the family constructors: elements are opaque tuples,
    /// the product rule is a closed-form function on tuples.
    static FiniteGroup build(std::string name, const std::vector<std::vector<long>>& elems,
                             const std::function<std::vector<long>(const std::vector<long>&, const std::vector<long>&)>& mul_fn,
                             const std::function<std::string(const std::vector<long>&)>& label_fn) {
        const int n = static_cast<int>(elems.size());
        if (n < 1 || n > kMaxOrder) throw std::invalid_argument("group order out of supported range");
        std::map<std::vector<long>, int> index;
        for (int i = 0; i < n; ++i) {
            if (!index.emplace(elems[static_cast<std::size_t>(i)], i).second)
                throw std::logic_error("duplicate element in enumeration: " + name);
        }
        FiniteGroup g;
        g.name_ = std::move(name);
        g.n_ = n;
        g.table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        g.labels_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) g.labels_[static_cast<std::size_t>(i)] = label_fn(elems[static_cast<std::size_t>(i)]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto prod = mul_fn(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
                auto it = index.find(prod);
                if (it == index.end()) throw std::logic_error("product escaped the element set: " + g.name_);
                g.table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                    static_cast<std::uint16_t>(it->second);
            }
        g.finalize();
        return g;
    }

    /// Build directly from a multiplication table (quotients, products).
    static FiniteGroup from_table(std::string name, std::vector<std::uint16_t> table, std::vector<std::string> labels) {
        FiniteGroup g;
        g.name_ = std::move(name);
        g.n_ = static_cast<int>(labels.size());
        g.table_ = std::move(table);
        g.labels_ = std::move(labels);
        g.finalize();
        return g;
    }

private:
    void finalize() {
        identity_ = -1;
        for (int e = 0; e < n_; ++e) {
            bool ok = true;
            for (int x = 0; x < n_ && ok; ++x) ok = (mul(e, x) == x && mul(x, e) == x);
            if (ok) {
                identity_ = e;
                break;
            }
        }
        if (identity_ < 0) throw std::logic_error("no identity element: " + name_);
        inv_.assign(static_cast<std::size_t>(n_), -1);
        for (int x = 0; x < n_; ++x) {
            for (int y = 0; y < n_; ++y) {
                if (mul(x, y) == identity_ && mul(y, x) == identity_) {
                    inv_[static_cast<std::size_t>(x)] = y;
                    break;
                }
            }
            if (inv_[static_cast<std::size_t>(x)] < 0) throw std::logic_error("missing inverse: " + name_);
        }
    }

    int n_ = 0;
    int identity_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::string name_;
};

/// Exhaustive associativity check for small orders, deterministic sampling above.
inline void validate_group_axioms(const FiniteGroup& g, int exhaustive_limit = 256) {
    const int n = g.order();
    if (n <= exhaustive_limit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw std::logic_error("associativity fails: " + g.name());
    } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto next = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return static_cast<int>(state % static_cast<std::uint64_t>(n));
        };
        for (int t = 0; t < 50000; ++t) {
            int a = next(), b = next(), c = next();
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw std::logic_error("associativity fails (sampled): " + g.name());
        }
    }
}

inline std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y) central = g.commutes(x, y);
        if (central) z.push_back(x);
    }
    return z;
}

inline std::vector<int> centralizer(const FiniteGroup& g, int x) {
    std::vector<int> c;
    for (int y = 0; y < g.order(); ++y)
        if (g.commutes(x, y)) c.push_back(y);
    return c;
}

inline bool is_abelian_subset(const FiniteGroup& g, const std::vector<int>& elems) {
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!g.commutes(elems[i], elems[j])) return false;
    return true;
}

/// Deduplicated centralizers of all elements (first-occurrence order), the
/// sublist for non-central elements, and the AC-group flag.
struct CentralizerData {
    std::vector<std::vector<int>> all;
    std::vector<std::vector<int>> noncentral;
    bool ac_group = true;
};

inline CentralizerData distinct_centralizers(const FiniteGroup& g) {
    CentralizerData out;
    std::vector<int> z = center(g);
    std::set<int> zset(z.begin(), z.end());
    std::set<std::vector<int>> seen, seen_noncentral;
    for (int x = 0; x < g.order(); ++x) {
        auto c = centralizer(g, x);
        if (seen.insert(c).second) out.all.push_back(c);
        if (!zset.count(x) && seen_noncentral.insert(c).second) {
            if (!is_abelian_subset(g, c)) out.ac_group = false;
            out.noncentral.push_back(c);
        }
    }
    return out;
}

inline Rat commuting_probability(const FiniteGroup& g) {
    long commuting = 0;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            if (g.commutes(x, y)) ++commuting;
    Rat pr(commuting, static_cast<long>(g.order()) * g.order());
    pr.canonicalize();
    return pr;
}

inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> have(gens.begin(), gens.end());
    have.insert(g.identity());
    std::vector<int> queue(have.begin(), have.end());
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        std::vector<int> snapshot(have.begin(), have.end());
        for (int y : snapshot) {
            for (int p : {g.mul(x, y), g.mul(y, x)}) {
                if (have.insert(p).second) queue.push_back(p);
            }
        }
    }
    return {have.begin(), have.end()};
}

/// G / Z(G) with coset representatives as elements.
inline FiniteGroup quotient_by_center(const FiniteGroup& g) {
    std::vector<int> z = center(g);
    const int n = g.order();
    std::vector<int> rep(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        int r = x;
        for (int zi : z) r = std::min(r, g.mul(zi, x));
        rep[static_cast<std::size_t>(x)] = r;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (rep[static_cast<std::size_t>(x)] == x) reps.push_back(x);
    std::map<int, int> idx;
    for (std::size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
    const int q = static_cast<int>(reps.size());
    std::vector<std::uint16_t> table(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    std::vector<std::string> labels(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        labels[static_cast<std::size_t>(i)] = g.label(reps[static_cast<std::size_t>(i)]) + "Z";
        for (int j = 0; j < q; ++j) {
            int p = g.mul(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]);
            table[static_cast<std::size_t>(i) * static_cast<std::size_t>(q) + static_cast<std::size_t>(j)] =
                static_cast<std::uint16_t>(idx[rep[static_cast<std::size_t>(p)]]);
        }
    }
    return FiniteGroup::from_table(g.name() + "/Z", std::move(table), std::move(labels));
}

/// Recognized shape of G/Z(G). Order-4 exponent-2 quotients are reported as
/// ZpZp(2), never Dihedral(4): the Z_p x Z_p results are the ones that apply.
struct QuotientShape {
    enum class Kind { ZpZp, Dihedral, Other } kind = Kind::Other;
    long p = 0;      // ZpZp parameter
    long two_m = 0;  // dihedral order 2m
    std::string to_string() const {
        switch (kind) {
            case Kind::ZpZp: return "Z_" + std::to_string(p) + " x Z_" + std::to_string(p);
            case Kind::Dihedral: return "D_" + std::to_string(two_m);
            case Kind::Other: return "other";
        }
        return "?";
    }
};

inline QuotientShape central_quotient_shape(const FiniteGroup& g) {
    FiniteGroup q = quotient_by_center(g);
    const int nq = q.order();
    // Z_p x Z_p: order p^2, abelian, exponent p
    for (long p = 2; p * p <= nq; ++p) {
        if (p * p == nq && is_prime_u64(static_cast<std::uint64_t>(p))) {
            bool ok = q.is_abelian();
            for (int x = 0; x < nq && ok; ++x)
                if (x != q.identity()) ok = (q.element_order(x) == static_cast<int>(p));
            if (ok) return {QuotientShape::Kind::ZpZp, p, 0};
        }
    }
    if (nq % 2 == 0 && nq >= 6) {
        const int m = nq / 2;
        for (int r = 0; r < nq; ++r) {
            if (q.element_order(r) != m) continue;
            std::vector<bool> in_cyc(static_cast<std::size_t>(nq), false);
            int acc = q.identity();
            for (int k = 0; k < m; ++k) {
                in_cyc[static_cast<std::size_t>(acc)] = true;
                acc = q.mul(acc, r);
            }
            for (int s = 0; s < nq; ++s) {
                if (in_cyc[static_cast<std::size_t>(s)]) continue;
                if (q.mul(s, s) != q.identity()) continue;
                if (q.mul(q.mul(s, r), s) == q.inv(r)) return {QuotientShape::Kind::Dihedral, 0, nq};
            }
        }
    }
    return {QuotientShape::Kind::Other, 0, 0};
}

}  // namespace ncg
