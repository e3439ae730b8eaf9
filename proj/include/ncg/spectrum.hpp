#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/algebraic.hpp"
#include "ncg/charpoly.hpp"
#include "ncg/jacobi.hpp"
#include "ncg/matrix.hpp"
#include "ncg/numeric.hpp"
#include "ncg/poly.hpp"

namespace ncg {

enum class SpectrumKind { Adjacency, Laplacian };

struct SpectrumEntry {
    AlgebraicValue value;
    Int mult;
    double approx;
};

/// Eigenvalue -> multiplicity map; multiplicities are big integers so that
/// spectra of astronomically large multipartite graphs stay representable.
class SpectrumMultiset {
public:
    explicit SpectrumMultiset(SpectrumKind k) : kind_(k) {}

    SpectrumKind kind() const { return kind_; }

    void add(const AlgebraicValue& v, Int mult) {
        if (mult == 0) return;
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        for (auto& e : entries_) {
            if (e.value == v) {
                e.mult += mult;
                return;
            }
        }
        SpectrumEntry e{v, std::move(mult), v.to_double()};
        auto pos = std::lower_bound(entries_.begin(), entries_.end(), e,
                                    [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.approx < b.approx; });
        entries_.insert(pos, std::move(e));
    }

    const std::vector<SpectrumEntry>& entries() const { return entries_; }

    Int total() const {
        Int t = 0;
        for (const auto& e : entries_) t += e.mult;
        return t;
    }

    bool all_exact() const {
        for (const auto& e : entries_)
            if (!e.value.is_exact()) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& e : entries_) {
            if (e.value.kind() != AlgebraicValue::Kind::Rational) return false;
            if (e.value.as_rational().get_den() != 1) return false;
        }
        return true;
    }

    ExactSum trace_sum() const {
        ExactSum s;
        for (const auto& e : entries_) s.add(e.value, Rat(e.mult));
        return s;
    }

    /// Sum of squared eigenvalues, exact when PolyRoot families are complete.
    std::optional<ExactSum> sum_squares() const {
        ExactSum s;
        std::map<std::vector<Int>, std::pair<Int, int>> root_groups;  // poly -> (common mult, count)
        for (const auto& e : entries_) {
            switch (e.value.kind()) {
                case AlgebraicValue::Kind::Rational: {
                    const Rat& r = e.value.as_rational();
                    s.add_rational(r * r * Rat(e.mult));
                    break;
                }
                case AlgebraicValue::Kind::Surd: {
                    const Surd& sd = e.value.as_surd();
                    AlgebraicValue sq = AlgebraicValue::surd(sd.a * sd.a + sd.b * sd.b * Rat(sd.d), 2 * sd.a * sd.b, sd.d);
                    s.add(sq, Rat(e.mult));
                    break;
                }
                case AlgebraicValue::Kind::PolyRoot: {
                    const PolyRoot& pr = e.value.as_poly_root();
                    auto it = root_groups.find(pr.poly.c);
                    if (it == root_groups.end())
                        root_groups.emplace(pr.poly.c, std::make_pair(e.mult, 1));
                    else {
                        if (it->second.first != e.mult) return std::nullopt;
                        it->second.second += 1;
                    }
                    break;
                }
                case AlgebraicValue::Kind::Approx: return std::nullopt;
            }
        }
        for (const auto& [coeffs, info] : root_groups) {
            IPoly p{std::vector<Int>(coeffs)};
            if (info.second != p.degree()) return std::nullopt;  // incomplete root family
            // Newton: p2 = e1^2 - 2 e2 over all roots of p
            Rat lead(p.lead());
            Rat e1 = p.degree() >= 1 ? Rat(-p.c[static_cast<std::size_t>(p.degree() - 1)]) / lead : Rat(0);
            Rat e2 = p.degree() >= 2 ? Rat(p.c[static_cast<std::size_t>(p.degree() - 2)]) / lead : Rat(0);
            s.add_rational((e1 * e1 - 2 * e2) * Rat(info.first));
        }
        return s;
    }

    /// prod (x - lambda)^mult as an exact integer polynomial; nullopt when the
    /// multiset cannot be the spectrum of an integer matrix (unpaired surds,
    /// incomplete root families, inexact entries).
    std::optional<IPoly> to_charpoly() const {
        std::vector<std::vector<Rat>> factors;  // rational-coefficient factors with exponents applied
        std::vector<char> used(entries_.size(), 0);
        std::map<std::vector<Int>, std::pair<Int, int>> root_groups;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (used[i]) continue;
            const auto& e = entries_[i];
            if (!e.mult.fits_ulong_p()) return std::nullopt;
            switch (e.value.kind()) {
                case AlgebraicValue::Kind::Rational: {
                    std::vector<Rat> lin{-e.value.as_rational(), Rat(1)};
                    append_power(factors, lin, e.mult.get_ui());
                    used[i] = 1;
                    break;
                }
                case AlgebraicValue::Kind::Surd: {
                    const Surd& sd = e.value.as_surd();
                    bool paired = false;
                    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
                        if (used[j] || entries_[j].value.kind() != AlgebraicValue::Kind::Surd) continue;
                        const Surd& od = entries_[j].value.as_surd();
                        if (od.d == sd.d && od.a == sd.a && od.b == -sd.b && entries_[j].mult == e.mult) {
                            std::vector<Rat> quad{sd.a * sd.a - sd.b * sd.b * Rat(sd.d), -2 * sd.a, Rat(1)};
                            append_power(factors, quad, e.mult.get_ui());
                            used[i] = used[j] = 1;
                            paired = true;
                            break;
                        }
                    }
                    if (!paired) return std::nullopt;
                    break;
                }
                case AlgebraicValue::Kind::PolyRoot: {
                    const PolyRoot& pr = e.value.as_poly_root();
                    auto it = root_groups.find(pr.poly.c);
                    if (it == root_groups.end())
                        root_groups.emplace(pr.poly.c, std::make_pair(e.mult, 1));
                    else {
                        if (it->second.first != e.mult) return std::nullopt;
                        it->second.second += 1;
                    }
                    used[i] = 1;
                    break;
                }
                case AlgebraicValue::Kind::Approx: return std::nullopt;
            }
        }
        for (const auto& [coeffs, info] : root_groups) {
            IPoly p{std::vector<Int>(coeffs)};
            if (info.second != p.degree()) return std::nullopt;
            if (!info.first.fits_ulong_p()) return std::nullopt;
            std::vector<Rat> qp(p.c.size());
            Rat lead(p.lead());
            for (std::size_t k = 0; k < p.c.size(); ++k) qp[k] = Rat(p.c[k]) / lead;
            append_power(factors, qp, info.first.get_ui());
        }
        std::vector<Rat> acc{Rat(1)};
        for (const auto& f : factors) acc = qmul(acc, f);
        std::vector<Int> ic(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k].canonicalize();
            if (acc[k].get_den() != 1) return std::nullopt;
            ic[k] = acc[k].get_num();
        }
        return IPoly{std::move(ic)};
    }

    /// Expanded sorted eigenvalue list; only for spectra with small totals.
    std::vector<double> to_doubles() const {
        std::vector<double> out;
        for (const auto& e : entries_) {
            if (!e.mult.fits_ulong_p()) throw std::domain_error("spectrum too large to expand");
            for (unsigned long k = 0; k < e.mult.get_ui(); ++k) out.push_back(e.approx);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& e : entries_) {
            if (!first) os << ", ";
            first = false;
            bool paren = e.value.kind() != AlgebraicValue::Kind::Rational || e.value.as_rational() < 0;
            if (paren) os << "(" << e.value.to_string() << ")";
            else os << e.value.to_string();
            if (e.mult != 1) os << "^" << e.mult.get_str();
        }
        os << "}";
        return os.str();
    }

private:
    static std::vector<Rat> qmul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    static void append_power(std::vector<std::vector<Rat>>& factors, std::vector<Rat> base, unsigned long e) {
        std::vector<Rat> acc{Rat(1)};
        while (e) {
            if (e & 1) acc = qmul(acc, base);
            e >>= 1;
            if (e) base = qmul(base, base);
        }
        factors.push_back(std::move(acc));
    }

    SpectrumKind kind_;
    std::vector<SpectrumEntry> entries_;
};

/// Multiset of part sizes of a complete multipartite graph, grouped into
/// (size, count) classes, sizes descending.
class MultipartiteShape {
public:
    MultipartiteShape() = default;

    static MultipartiteShape from_parts(const std::vector<Int>& parts) {
        std::map<Int, Int> grouped;
        for (const auto& p : parts) {
            if (p < 1) throw std::invalid_argument("part sizes must be >= 1");
            grouped[p] += 1;
        }
        return from_classes_map(grouped);
    }

    static MultipartiteShape from_classes(const std::vector<std::pair<Int, Int>>& classes) {
        std::map<Int, Int> grouped;
        for (const auto& [size, count] : classes) {
            if (size < 1 || count < 1) throw std::invalid_argument("class sizes and counts must be >= 1");
            grouped[size] += count;
        }
        return from_classes_map(grouped);
    }

    const std::vector<std::pair<Int, Int>>& classes() const { return classes_; }  // (size, count), size desc

    Int vertex_count() const {
        Int n = 0;
        for (const auto& [s, c] : classes_) n += s * c;
        return n;
    }
    Int part_count() const {
        Int r = 0;
        for (const auto& [s, c] : classes_) r += c;
        return r;
    }
    /// 2|e| = sum over parts of s (N - s).
    Int edge_double() const {
        Int n = vertex_count(), acc = 0;
        for (const auto& [s, c] : classes_) acc += c * s * (n - s);
        return acc;
    }

    /// Flat part list (requires counts to fit a machine word).
    std::vector<Int> parts() const {
        std::vector<Int> out;
        for (const auto& [s, c] : classes_) {
            if (!c.fits_ulong_p()) throw std::domain_error("shape too large to expand");
            for (unsigned long k = 0; k < c.get_ui(); ++k) out.push_back(s);
        }
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "K_{";
        bool first = true;
        for (const auto& [s, c] : classes_) {
            if (!first) os << ", ";
            first = false;
            os << c.get_str() << "." << s.get_str();
        }
        os << "}";
        return os.str();
    }

    friend bool operator==(const MultipartiteShape& a, const MultipartiteShape& b) { return a.classes_ == b.classes_; }

private:
    static MultipartiteShape from_classes_map(const std::map<Int, Int>& grouped) {
        MultipartiteShape s;
        for (auto it = grouped.rbegin(); it != grouped.rend(); ++it) s.classes_.emplace_back(it->first, it->second);
        return s;
    }
    std::vector<std::pair<Int, Int>> classes_;
};

/// All exact roots of a monic integer polynomial with real roots only.
inline SpectrumMultiset exact_roots_of_poly(IPoly p, SpectrumKind kind) {
    SpectrumMultiset out(kind);
    const int deg = p.degree();
    for (const auto& [r, mult] : extract_integer_roots(p)) out.add(AlgebraicValue::integer(r), mult);
    if (p.degree() > 0) {
        for (const auto& [f, mult] : squarefree_decompose(p)) {
            auto intervals = isolate_real_roots(f);
            if (static_cast<int>(intervals.size()) != f.degree())
                throw std::domain_error("polynomial has non-real roots; not a symmetric spectrum");
            for (const auto& iv : intervals) out.add(AlgebraicValue::poly_root(f, iv.lo, iv.hi), mult);
        }
    }
    if (out.total() != deg) throw std::logic_error("root extraction lost multiplicities");
    return out;
}

/// Exact spectrum of a symmetric integer matrix: exact characteristic
/// polynomial, numeric hints to peel integer eigenvalues fast, then a
/// rigorous finish on the low-degree remainder. Beyond `exact_dim_cap` the
/// result is numeric-only (clustered Jacobi eigenvalues, flagged inexact).
struct ExactSpectrum {
    IPoly charpoly;  // empty when the spectrum is numeric-only
    SpectrumMultiset spectrum;
    bool exact = true;
};

inline ExactSpectrum exact_spectrum_of_symmetric(const IntMatrix& m, SpectrumKind kind, double tol = 1e-10,
                                                 int exact_dim_cap = 300) {
    if (!m.is_symmetric()) throw std::invalid_argument("exact_spectrum_of_symmetric: not symmetric");
    if (m.dim() > exact_dim_cap) {
        auto res = numeric_eigenvalues(m, tol);
        SpectrumMultiset out(kind);
        std::size_t i = 0;
        while (i < res.eigenvalues.size()) {
            std::size_t j = i + 1;
            double lo = res.eigenvalues[i], hi = lo;
            while (j < res.eigenvalues.size() &&
                   res.eigenvalues[j] - hi <= 1e-6 * std::max(1.0, std::abs(res.eigenvalues[j]))) {
                hi = res.eigenvalues[j];
                ++j;
            }
            double mid = (lo + hi) / 2;
            out.add(AlgebraicValue::approx(mid, (hi - lo) / 2 + 10 * (res.offdiag_norm + tol)),
                    Int(static_cast<long>(j - i)));
            i = j;
        }
        return {IPoly{}, std::move(out), false};
    }
    IPoly chi = char_poly_exact(m);
    SpectrumMultiset out(kind);
    IPoly work = chi;

    auto divide_out = [&work](const Int& r) {
        Int mult = 0;
        for (;;) {
            auto [q, rem] = divrem_monic(work, IPoly::x_minus(r));
            if (!rem.is_zero()) break;
            work = std::move(q);
            ++mult;
        }
        return mult;
    };

    if (m.dim() > 0) {
        auto hints = numeric_eigenvalues(m, tol).eigenvalues;
        std::vector<Int> candidates;
        for (double h : hints) {
            double r = std::round(h);
            if (std::abs(h - r) < 1e-4) {
                Int c(static_cast<long>(r));
                if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
            }
        }
        for (const auto& c : candidates) {
            Int mult = divide_out(c);
            if (mult > 0) out.add(AlgebraicValue::integer(c), mult);
        }
    }
    if (work.degree() > 0) {
        SpectrumMultiset rest = exact_roots_of_poly(work, kind);
        for (const auto& e : rest.entries()) out.add(e.value, e.mult);
    }
    if (out.total() != chi.degree()) throw std::logic_error("spectrum extraction mismatch");
    return {std::move(chi), std::move(out), true};
}

/// Spectrum of the block matrix [[0, J_{m x n}], [J_{n x m}, (J - I)_n]].
inline SpectrumMultiset block_B_spectrum(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("block_B_spectrum requires m, n >= 1");
    SpectrumMultiset s(SpectrumKind::Adjacency);
    s.add(AlgebraicValue::integer(0), Int(m - 1));
    s.add(AlgebraicValue::integer(-1), Int(n - 1));
    Int disc = Int(n - 1) * Int(n - 1) + 4 * Int(m) * Int(n);
    s.add(AlgebraicValue::surd(Rat(n - 1, 2), Rat(1, 2), disc), 1);
    s.add(AlgebraicValue::surd(Rat(n - 1, 2), Rat(-1, 2), disc), 1);
    return s;
}

/// Eigenvalues of a Kronecker product: all pairwise products.
inline SpectrumMultiset kron_spectrum(const SpectrumMultiset& x, const SpectrumMultiset& y) {
    if (x.kind() != SpectrumKind::Adjacency || y.kind() != SpectrumKind::Adjacency)
        throw std::invalid_argument("kron_spectrum works on adjacency spectra");
    SpectrumMultiset out(SpectrumKind::Adjacency);
    for (const auto& ex : x.entries())
        for (const auto& ey : y.entries()) out.add(product(ex.value, ey.value), ex.mult * ey.mult);
    return out;
}

/// Reduced class matrix of a complete multipartite graph: one row per
/// distinct part size; its roots are the eigenvalues not forced to 0 or -s.
inline IntMatrix multipartite_class_matrix(const MultipartiteShape& shape) {
    const auto& cls = shape.classes();
    const int k = static_cast<int>(cls.size());
    IntMatrix c(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Int t = cls[static_cast<std::size_t>(j)].first * cls[static_cast<std::size_t>(j)].second;
            c.at(i, j) = (i == j) ? t - cls[static_cast<std::size_t>(i)].first : t;
        }
    return c;
}

inline SpectrumMultiset multipartite_adjacency_spectrum(const MultipartiteShape& shape) {
    if (shape.part_count() < 2) throw std::invalid_argument("complete multipartite graph needs >= 2 parts");
    SpectrumMultiset out(SpectrumKind::Adjacency);
    out.add(AlgebraicValue::integer(0), shape.vertex_count() - shape.part_count());
    for (const auto& [s, c] : shape.classes()) out.add(AlgebraicValue::integer(-s), c - 1);
    IPoly reduced = char_poly_exact(multipartite_class_matrix(shape));
    SpectrumMultiset roots = exact_roots_of_poly(std::move(reduced), SpectrumKind::Adjacency);
    for (const auto& e : roots.entries()) out.add(e.value, e.mult);
    return out;
}

inline SpectrumMultiset multipartite_laplacian_spectrum(const MultipartiteShape& shape) {
    if (shape.part_count() < 2) throw std::invalid_argument("complete multipartite graph needs >= 2 parts");
    SpectrumMultiset out(SpectrumKind::Laplacian);
    Int n = shape.vertex_count();
    out.add(AlgebraicValue::integer(0), 1);
    for (const auto& [s, c] : shape.classes()) out.add(AlgebraicValue::integer(n - s), (s - 1) * c);
    out.add(AlgebraicValue::integer(n), shape.part_count() - 1);
    return out;
}

/// E = sum |lambda| * mult.
inline ExactSum energy(const SpectrumMultiset& s) {
    ExactSum acc;
    for (const auto& e : s.entries()) acc.add(e.value.abs_value(), Rat(e.mult));
    return acc;
}

/// LE = sum |mu - 2|e|/|v|| * mult.
inline ExactSum laplacian_energy(const SpectrumMultiset& s, const Int& edge_double, const Int& vertices) {
    if (s.kind() != SpectrumKind::Laplacian) throw std::invalid_argument("laplacian_energy needs a Laplacian spectrum");
    Rat mean(edge_double, vertices);
    mean.canonicalize();
    ExactSum acc;
    for (const auto& e : s.entries()) acc.add(e.value.shifted(-mean).abs_value(), Rat(e.mult));
    return acc;
}

enum class EnergyVerdict { ELess, EEqual, EGreater, Inconclusive };

inline EnergyVerdict energy_verdict(const ExactSum& e, const ExactSum& le) {
    auto s = compare_sums(e, le);
    if (!s) return EnergyVerdict::Inconclusive;
    if (*s < 0) return EnergyVerdict::ELess;
    if (*s > 0) return EnergyVerdict::EGreater;
    return EnergyVerdict::EEqual;
}

inline std::string verdict_name(EnergyVerdict v) {
    switch (v) {
        case EnergyVerdict::ELess: return "E<LE";
        case EnergyVerdict::EEqual: return "E=LE";
        case EnergyVerdict::EGreater: return "E>LE";
        case EnergyVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// E, LE, mean degree and the comparison verdict for one graph.
struct EnergyReport {
    ExactSum energy;
    ExactSum laplacian_energy;
    Rat mean_degree;
    EnergyVerdict verdict;
};

inline EnergyReport make_energy_report(const SpectrumMultiset& adj, const SpectrumMultiset& lap,
                                       const Int& edge_double, const Int& vertices) {
    EnergyReport r;
    r.energy = energy(adj);
    r.laplacian_energy = laplacian_energy(lap, edge_double, vertices);
    r.mean_degree = Rat(edge_double, vertices);
    r.mean_degree.canonicalize();
    r.verdict = energy_verdict(r.energy, r.laplacian_energy);
    return r;
}

}  // namespace ncg
