#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncg/families.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/spectrum.hpp"

namespace ncg {

/// One identifier per published closed form handled by this library.
enum class FormulaId {
    V8n_spec,
    V8n_E,
    SD8n_odd_spec,
    SD8n_odd_E,
    SD8n_even_spec,
    SD8n_even_E,
    ZpZp_spec,
    ZpZp_E,
    Fpq_spec,
    Fpq_E,
    HanakiAv_spec,
    HanakiAv_E,
    HanakiAp_spec,
    HanakiAp_E,
    D2mQuotient_spec,
    D2mQuotient_E,
    M2rs_odd,
    M2rs_even,
    D2m_odd,
    D2m_even,
    Q4m,
    U6n,
    V8n_lspec,
    V8n_LE,
    SD8n_odd_lspec,
    SD8n_odd_LE,
    SD8n_even_lspec,
    SD8n_even_LE,
    Fpq_LE,
    D2mQuotient_LE,
    M2rs_LE,
    D2m_LE,
    Q4m_LE,
    ZpZp_LE,
    HanakiAv_LE,
    HanakiAp_LE,
};

inline const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::V8n_spec: return "V8n_spec";
        case FormulaId::V8n_E: return "V8n_E";
        case FormulaId::SD8n_odd_spec: return "SD8n_odd_spec";
        case FormulaId::SD8n_odd_E: return "SD8n_odd_E";
        case FormulaId::SD8n_even_spec: return "SD8n_even_spec";
        case FormulaId::SD8n_even_E: return "SD8n_even_E";
        case FormulaId::ZpZp_spec: return "ZpZp_spec";
        case FormulaId::ZpZp_E: return "ZpZp_E";
        case FormulaId::Fpq_spec: return "Fpq_spec";
        case FormulaId::Fpq_E: return "Fpq_E";
        case FormulaId::HanakiAv_spec: return "HanakiAv_spec";
        case FormulaId::HanakiAv_E: return "HanakiAv_E";
        case FormulaId::HanakiAp_spec: return "HanakiAp_spec";
        case FormulaId::HanakiAp_E: return "HanakiAp_E";
        case FormulaId::D2mQuotient_spec: return "D2mQuotient_spec";
        case FormulaId::D2mQuotient_E: return "D2mQuotient_E";
        case FormulaId::M2rs_odd: return "M2rs_odd";
        case FormulaId::M2rs_even: return "M2rs_even";
        case FormulaId::D2m_odd: return "D2m_odd";
        case FormulaId::D2m_even: return "D2m_even";
        case FormulaId::Q4m: return "Q4m";
        case FormulaId::U6n: return "U6n";
        case FormulaId::V8n_lspec: return "V8n_lspec";
        case FormulaId::V8n_LE: return "V8n_LE";
        case FormulaId::SD8n_odd_lspec: return "SD8n_odd_lspec";
        case FormulaId::SD8n_odd_LE: return "SD8n_odd_LE";
        case FormulaId::SD8n_even_lspec: return "SD8n_even_lspec";
        case FormulaId::SD8n_even_LE: return "SD8n_even_LE";
        case FormulaId::Fpq_LE: return "Fpq_LE";
        case FormulaId::D2mQuotient_LE: return "D2mQuotient_LE";
        case FormulaId::M2rs_LE: return "M2rs_LE";
        case FormulaId::D2m_LE: return "D2m_LE";
        case FormulaId::Q4m_LE: return "Q4m_LE";
        case FormulaId::ZpZp_LE: return "ZpZp_LE";
        case FormulaId::HanakiAv_LE: return "HanakiAv_LE";
        case FormulaId::HanakiAp_LE: return "HanakiAp_LE";
    }
    return "?";
}

/// AsPrinted reproduces the source text; TraceCorrected is the variant that
/// passes the eigenvalue-sum identities where the printed one does not.
enum class VariantTag { AsPrinted, TraceCorrected };

inline const char* variant_name(VariantTag v) {
    return v == VariantTag::AsPrinted ? "as-printed" : "trace-corrected";
}

struct Prediction {
    std::optional<SpectrumMultiset> adjacency;
    std::optional<ExactSum> energy;
    std::optional<SpectrumMultiset> laplacian;
    std::optional<ExactSum> laplacian_energy;
};

struct FormulaPrediction {
    FormulaId id;
    VariantTag variant;
    std::string claim;  // the formula as stated in the source text
    Prediction prediction;
};

namespace detail {

inline ExactSum sum_of(Rat rational, Rat surd_coeff, const Int& d) {
    ExactSum s;
    s.add_rational(rational);
    if (surd_coeff != 0) s.add(AlgebraicValue::surd(Rat(0), surd_coeff, d));
    return s;
}

inline ExactSum sum_rat(Rat r) {
    ExactSum s;
    s.add_rational(std::move(r));
    return s;
}

inline void add_surd_pair(SpectrumMultiset& sp, const Rat& base, const Rat& coeff, const Int& d) {
    sp.add(AlgebraicValue::surd(base, coeff, d), 1);
    sp.add(AlgebraicValue::surd(base, -coeff, d), 1);
}

// ---- V_8n (odd n) -------------------------------------------------------

inline SpectrumMultiset v8n_spec(long n) {
    SpectrumMultiset sp(SpectrumKind::Adjacency);
    sp.add(AlgebraicValue::integer(-2), 2 * n - 1);
    sp.add(AlgebraicValue::integer(0), 6 * n - 3);
    add_surd_pair(sp, Rat(2 * n - 1), Rat(1), Int(2 * n - 1) * Int(10 * n - 1));
    return sp;
}
inline ExactSum v8n_energy(long n) { return sum_of(Rat(2 * (2 * n - 1)), Rat(2), Int(2 * n - 1) * Int(10 * n - 1)); }
inline SpectrumMultiset v8n_lspec(long n) {
    SpectrumMultiset sp(SpectrumKind::Laplacian);
    sp.add(AlgebraicValue::integer(0), 1);
    sp.add(AlgebraicValue::integer(8 * n - 4), 2 * n);
    sp.add(AlgebraicValue::integer(4 * n), 4 * n - 3);
    sp.add(AlgebraicValue::integer(8 * n - 2), 2 * n);
    return sp;
}
inline ExactSum v8n_le(long n) { return sum_rat(Rat(8 * n * (8 * n * n - 8 * n + 3), 4 * n - 1)); }

// ---- SD_8n ---------------------------------------------------------------

inline SpectrumMultiset sd8n_odd_spec(long n, VariantTag v) {
    SpectrumMultiset sp(SpectrumKind::Adjacency);
    sp.add(AlgebraicValue::integer(-4), v == VariantTag::AsPrinted ? 2 * n - 1 : n - 1);
    sp.add(AlgebraicValue::integer(0), 7 * n - 5);
    add_surd_pair(sp, Rat(2 * (n - 1)), Rat(2), Int(5 * n - 1) * Int(n - 1));
    return sp;
}
inline ExactSum sd8n_odd_energy(long n, VariantTag v) {
    long lead = (v == VariantTag::AsPrinted) ? 2 * (n - 1) : 4 * (n - 1);
    return sum_of(Rat(lead), Rat(4), Int(n - 1) * Int(5 * n - 1));
}
inline SpectrumMultiset sd8n_odd_lspec(long n) {
    SpectrumMultiset sp(SpectrumKind::Laplacian);
    sp.add(AlgebraicValue::integer(0), 1);
    sp.add(AlgebraicValue::integer(8 * n - 8), 3 * n);
    sp.add(AlgebraicValue::integer(4 * n), 4 * n - 5);
    sp.add(AlgebraicValue::integer(8 * n - 4), n);
    return sp;
}
inline ExactSum sd8n_odd_le(long n) { return sum_rat(Rat(8 * n * (4 * n * n - 10 * n + 7), 2 * n - 1)); }

// ---- G/Z = Z_p x Z_p -----------------------------------------------------

inline SpectrumMultiset zpzp_spec(long p, long z) {
    SpectrumMultiset sp(SpectrumKind::Adjacency);
    sp.add(AlgebraicValue::integer(-(p - 1) * z), p);
    sp.add(AlgebraicValue::integer(0), (p + 1) * ((p - 1) * z - 1));
    sp.add(AlgebraicValue::integer(p * (p - 1) * z), 1);
    return sp;
}
inline ExactSum zpzp_energy(long p, long z) { return sum_rat(Rat(2 * p * (p - 1) * z)); }

// ---- F_{p,q} --------------------------------------------------------------

inline SpectrumMultiset fpq_spec(long p, long q) {
    SpectrumMultiset sp(SpectrumKind::Adjacency);
    Int alpha = Int(p - 1) * Int(q - 1);
    sp.add(AlgebraicValue::integer(0), p * q - p - 2);
    sp.add(AlgebraicValue::integer(-(q - 1)), p - 1);
    Int disc = alpha * alpha + 4 * p * alpha;
    add_surd_pair(sp, Rat(alpha) / 2, Rat(1, 2), disc);
    return sp;
}
inline ExactSum fpq_energy(long p, long q) {
    Int alpha = Int(p - 1) * Int(q - 1);
    return sum_of(Rat(alpha), Rat(1), alpha * alpha + 4 * p * alpha);
}
inline ExactSum fpq_le(long p, long q) {
    Int alpha = Int(p - 1) * Int(q - 1);
    Rat le(2 * Int(p) * Int(p) * alpha + 2 * Int(p) * Int(q - 1) * Int(q - 1), Int(p) * Int(q) - 1);
    le.canonicalize();
    return sum_rat(le);
}

// ---- Hanaki groups ---------------------------------------------------------

inline SpectrumMultiset hanaki_av_spec(long n) {
    Int P = pow_int(Int(2), static_cast<unsigned long>(n));
    SpectrumMultiset sp(SpectrumKind::Adjacency);
    sp.add(AlgebraicValue::integer(0), P * P - 2 * P + 1);
    sp.add(AlgebraicValue::integer(-P), P - 2);
    sp.add(AlgebraicValue::integer(P * (P - 2)), 1);
    return sp;
}
inline ExactSum hanaki_av_energy(long n) {
    Int P = pow_int(Int(2), static_cast<unsigned long>(n));
    return sum_rat(Rat(2 * P * (P - 2)));
}
inline SpectrumMultiset hanaki_ap_spec(long p, long n) {
    Int P = pow_int(Int(p), static_cast<unsigned long>(n));
    SpectrumMultiset sp(SpectrumKind::Adjacency);
    sp.add(AlgebraicValue::integer(0), P * P * P - 2 * P - 1);
    sp.add(AlgebraicValue::integer(-(P * P - P)), P);
    sp.add(AlgebraicValue::integer(P * (P * P - P)), 1);
    return sp;
}
inline ExactSum hanaki_ap_energy(long p, long n) {
    Int P = pow_int(Int(p), static_cast<unsigned long>(n));
    return sum_rat(Rat(2 * P * P * (P - 1)));
}

// ---- G/Z = D_2m ------------------------------------------------------------

inline SpectrumMultiset d2m_quotient_spec(long m, long z) {
    SpectrumMultiset sp(SpectrumKind::Adjacency);
    sp.add(AlgebraicValue::integer(0), 2 * z * m - z - m - 1);
    sp.add(AlgebraicValue::integer(-z), m - 1);
    add_surd_pair(sp, Rat(z * (m - 1), 2), Rat(z, 2), Int(m - 1) * Int(5 * m - 1));
    return sp;
}
inline ExactSum d2m_quotient_energy(long m, long z) {
    return sum_of(Rat(z * (m - 1)), Rat(z), Int(m - 1) * Int(5 * m - 1));
}
inline ExactSum d2m_quotient_le(long m, long z) {
    Rat le(Int(2 * m) * Int(z) * Int(z) * Int(m - 1) * Int(m - 2) + Int(2 * m) * Int(z) * Int(2 * m - 1), Int(2 * m - 1));
    le.canonicalize();
    return sum_rat(le);
}

}  // namespace detail

/// All formula predictions applicable to a family spec. The group, when
/// supplied, enables the quotient-shape entries (they need |Z(G)| and the
/// recognized shape of G/Z).
inline std::vector<FormulaPrediction> predict(const GroupFamilySpec& spec, const FiniteGroup* group = nullptr) {
    using namespace detail;
    std::vector<FormulaPrediction> out;
    auto push = [&out](FormulaId id, VariantTag v, std::string claim, Prediction p) {
        out.push_back({id, v, std::move(claim), std::move(p)});
    };
    switch (spec.family) {
        case Family::V8n: {
            long n = spec.n;
            if (n % 2 == 1) {
                push(FormulaId::V8n_spec, VariantTag::AsPrinted,
                     "spec = {(-2)^(2n-1), 0^(6n-3), ((2n-1) +- sqrt((2n-1)(10n-1)))^1}",
                     {v8n_spec(n), {}, {}, {}});
                push(FormulaId::V8n_E, VariantTag::AsPrinted, "E = 2(2n-1) + 2 sqrt((2n-1)(10n-1))",
                     {{}, v8n_energy(n), {}, {}});
                push(FormulaId::V8n_lspec, VariantTag::AsPrinted,
                     "lspec = {0, (8n-4)^(2n), (4n)^(4n-3), (8n-2)^(2n)}", {{}, {}, v8n_lspec(n), {}});
                push(FormulaId::V8n_LE, VariantTag::AsPrinted, "LE = 8n(8n^2-8n+3)/(4n-1)", {{}, {}, {}, v8n_le(n)});
            }
            break;
        }
        case Family::SD8n: {
            long n = spec.n;
            if (n % 2 == 1) {
                push(FormulaId::SD8n_odd_spec, VariantTag::AsPrinted,
                     "spec = {(-4)^(2n-1), 0^(7n-5), (2(n-1) +- 2 sqrt((5n-1)(n-1)))^1}",
                     {sd8n_odd_spec(n, VariantTag::AsPrinted), {}, {}, {}});
                push(FormulaId::SD8n_odd_spec, VariantTag::TraceCorrected,
                     "spec = {(-4)^(n-1), 0^(7n-5), (2(n-1) +- 2 sqrt((5n-1)(n-1)))^1}",
                     {sd8n_odd_spec(n, VariantTag::TraceCorrected), {}, {}, {}});
                push(FormulaId::SD8n_odd_E, VariantTag::AsPrinted, "E = 2(n-1) + 4 sqrt((n-1)(5n-1))",
                     {{}, sd8n_odd_energy(n, VariantTag::AsPrinted), {}, {}});
                push(FormulaId::SD8n_odd_E, VariantTag::TraceCorrected, "E = 4(n-1) + 4 sqrt((n-1)(5n-1))",
                     {{}, sd8n_odd_energy(n, VariantTag::TraceCorrected), {}, {}});
                push(FormulaId::SD8n_odd_lspec, VariantTag::AsPrinted,
                     "lspec = {0, (8n-8)^(3n), (4n)^(4n-5), (8n-4)^n}", {{}, {}, sd8n_odd_lspec(n), {}});
                push(FormulaId::SD8n_odd_LE, VariantTag::AsPrinted, "LE = 8n(4n^2-10n+7)/(2n-1)",
                     {{}, {}, {}, sd8n_odd_le(n)});
            } else {
                push(FormulaId::SD8n_even_spec, VariantTag::AsPrinted,
                     "spec = {(-2)^(2n-1), 0^(6n-3), ((2n-1) +- sqrt((2n-1)(10n-1)))^1}",
                     {v8n_spec(n), {}, {}, {}});
                push(FormulaId::SD8n_even_E, VariantTag::AsPrinted, "E = 2(2n-1) + 2 sqrt((2n-1)(10n-1))",
                     {{}, v8n_energy(n), {}, {}});
                push(FormulaId::SD8n_even_lspec, VariantTag::AsPrinted,
                     "lspec = {0, (8n-4)^(2n), (4n)^(4n-3), (8n-2)^(2n)}", {{}, {}, v8n_lspec(n), {}});
                push(FormulaId::SD8n_even_LE, VariantTag::AsPrinted, "LE = 8n(8n^2-8n+3)/(4n-1)",
                     {{}, {}, {}, v8n_le(n)});
            }
            break;
        }
        case Family::Frobenius: {
            push(FormulaId::Fpq_spec, VariantTag::AsPrinted,
                 "spec = {0^(pq-p-2), (-(q-1))^(p-1), ((alpha +- sqrt(alpha^2+4p alpha))/2)^1}",
                 {fpq_spec(spec.p, spec.q), {}, {}, {}});
            push(FormulaId::Fpq_E, VariantTag::AsPrinted, "E = alpha + sqrt(alpha^2 + 4p alpha)",
                 {{}, fpq_energy(spec.p, spec.q), {}, {}});
            push(FormulaId::Fpq_LE, VariantTag::AsPrinted, "LE = (2p^2 alpha + 2p(q-1)^2)/(pq-1)",
                 {{}, {}, {}, fpq_le(spec.p, spec.q)});
            break;
        }
        case Family::HanakiAv: {
            push(FormulaId::HanakiAv_spec, VariantTag::AsPrinted,
                 "spec = {0^(2^2n - 2^(n+1) + 1), (-2^n)^(2^n-2), (2^n(2^n-2))^1}", {hanaki_av_spec(spec.n), {}, {}, {}});
            push(FormulaId::HanakiAv_E, VariantTag::AsPrinted, "E = 2^(n+1) (2^n - 2)",
                 {{}, hanaki_av_energy(spec.n), {}, {}});
            push(FormulaId::HanakiAv_LE, VariantTag::AsPrinted, "LE = 2^(2n+1) - 2^(n+2)",
                 {{}, {}, {}, hanaki_av_energy(spec.n)});
            break;
        }
        case Family::HanakiAp: {
            push(FormulaId::HanakiAp_spec, VariantTag::AsPrinted,
                 "spec = {0^(p^3n - 2p^n - 1), (-(p^2n - p^n))^(p^n), (p^n(p^2n - p^n))^1}",
                 {hanaki_ap_spec(spec.p, spec.n), {}, {}, {}});
            push(FormulaId::HanakiAp_E, VariantTag::AsPrinted, "E = 2 p^2n (p^n - 1)",
                 {{}, hanaki_ap_energy(spec.p, spec.n), {}, {}});
            push(FormulaId::HanakiAp_LE, VariantTag::AsPrinted, "LE = 2(p^3n - p^2n)",
                 {{}, {}, {}, hanaki_ap_energy(spec.p, spec.n)});
            break;
        }
        case Family::M2rs: {
            long r = spec.r, s = spec.s;
            if (r % 2 == 1) {
                Prediction p;
                p.adjacency = d2m_quotient_spec(r, s);
                p.energy = d2m_quotient_energy(r, s);
                push(FormulaId::M2rs_odd, VariantTag::AsPrinted,
                     "spec = {0^(2sr-s-r-1), (-s)^(r-1), (s(r-1)/2 +- (s/2) sqrt((r-1)(5r-1)))^1}; E = s((r-1) + sqrt((r-1)(5r-1)))",
                     std::move(p));
                Rat le(Int(2 * r) * Int(r - 1) * Int(r - 2) * Int(s) * Int(s) + Int(2 * r) * Int(s) * Int(2 * r - 1),
                       Int(2 * r - 1));
                le.canonicalize();
                push(FormulaId::M2rs_LE, VariantTag::AsPrinted, "LE = (2r(r-1)(r-2)s^2 + 2rs(2r-1))/(2r-1)",
                     {{}, {}, {}, sum_rat(le)});
            } else {
                Prediction p;
                p.adjacency = d2m_quotient_spec(r / 2, 2 * s);
                p.energy = d2m_quotient_energy(r / 2, 2 * s);
                push(FormulaId::M2rs_even, VariantTag::AsPrinted,
                     "spec = {0^(2sr-2s-r/2-1), (-2s)^(r/2-1), (s(r/2-1) +- s sqrt((r/2-1)(5r/2-1)))^1}; E = s((r-2) + sqrt((r-2)(5r-2)))",
                     std::move(p));
                Rat le(Int(r) * Int(s) * Int(s) * Int(r - 2) * Int(r - 4) + Int(2 * r) * Int(s) * Int(r - 1), Int(r - 1));
                le.canonicalize();
                push(FormulaId::M2rs_LE, VariantTag::AsPrinted, "LE = (rs^2(r-2)(r-4) + 2rs(r-1))/(r-1)",
                     {{}, {}, {}, sum_rat(le)});
            }
            break;
        }
        case Family::D2m: {
            long m = spec.m;
            if (m % 2 == 1) {
                Prediction p;
                p.adjacency = d2m_quotient_spec(m, 1);
                p.energy = d2m_quotient_energy(m, 1);
                push(FormulaId::D2m_odd, VariantTag::AsPrinted,
                     "spec = {0^(m-2), (-1)^(m-1), (((m-1) +- sqrt((m-1)(5m-1)))/2)^1}; E = (m-1) + sqrt((m-1)(5m-1))",
                     std::move(p));
                Rat le(Int(2 * m) * Int(m - 1) * Int(m - 2) + Int(2 * m) * Int(2 * m - 1), Int(2 * m - 1));
                le.canonicalize();
                push(FormulaId::D2m_LE, VariantTag::AsPrinted, "LE = (2m(m-1)(m-2) + 2m(2m-1))/(2m-1)",
                     {{}, {}, {}, sum_rat(le)});
            } else {
                Prediction p;
                p.adjacency = d2m_quotient_spec(m / 2, 2);
                p.energy = d2m_quotient_energy(m / 2, 2);
                push(FormulaId::D2m_even, VariantTag::AsPrinted,
                     "spec = {0^(3m/2-3), (-2)^(m/2-1), ((m/2-1) +- sqrt((m/2-1)(5m/2-1)))^1}; E = (m-2) + sqrt((m-2)(5m-2))",
                     std::move(p));
                Rat le(Int(m) * Int(m - 2) * Int(m - 4) + Int(2 * m) * Int(m - 1), Int(m - 1));
                le.canonicalize();
                push(FormulaId::D2m_LE, VariantTag::AsPrinted, "LE = (m(m-2)(m-4) + 2m(m-1))/(m-1)",
                     {{}, {}, {}, sum_rat(le)});
            }
            break;
        }
        case Family::Q4m: {
            long m = spec.m;
            Prediction p;
            p.adjacency = d2m_quotient_spec(m, 2);
            p.energy = d2m_quotient_energy(m, 2);
            push(FormulaId::Q4m, VariantTag::AsPrinted,
                 "spec = {0^(3m-3), (-2)^(m-1), ((m-1) +- sqrt((m-1)(5m-1)))^1}; E = 2((m-1) + sqrt((m-1)(5m-1)))",
                 std::move(p));
            Rat le(Int(8 * m) * Int(m - 1) * Int(m - 2) + Int(4 * m) * Int(2 * m - 1), Int(2 * m - 1));
            le.canonicalize();
            push(FormulaId::Q4m_LE, VariantTag::AsPrinted, "LE = (8m(m-1)(m-2) + 4m(2m-1))/(2m-1)",
                 {{}, {}, {}, sum_rat(le)});
            break;
        }
        case Family::U6n: {
            long n = spec.n;
            Prediction p;
            p.adjacency = d2m_quotient_spec(3, n);
            p.energy = d2m_quotient_energy(3, n);
            push(FormulaId::U6n, VariantTag::AsPrinted,
                 "spec = {0^(5n-4), (-n)^2, (n +- n sqrt(7))^1}; E = 2n(1 + sqrt(7))", std::move(p));
            break;
        }
        default: break;
    }
    if (group) {
        QuotientShape qs = central_quotient_shape(*group);
        long z = static_cast<long>(center(*group).size());
        if (qs.kind == QuotientShape::Kind::ZpZp) {
            push(FormulaId::ZpZp_spec, VariantTag::AsPrinted,
                 "spec = {(-(p-1)|Z|)^p, 0^((p+1)((p-1)|Z|-1)), (p(p-1)|Z|)^1}", {zpzp_spec(qs.p, z), {}, {}, {}});
            push(FormulaId::ZpZp_E, VariantTag::AsPrinted, "E = 2p(p-1)|Z|", {{}, zpzp_energy(qs.p, z), {}, {}});
            push(FormulaId::ZpZp_LE, VariantTag::AsPrinted, "LE = 2p(p-1)|Z|", {{}, {}, {}, zpzp_energy(qs.p, z)});
        } else if (qs.kind == QuotientShape::Kind::Dihedral) {
            long m = qs.two_m / 2;
            push(FormulaId::D2mQuotient_spec, VariantTag::AsPrinted,
                 "spec = {0^(2nm-n-m-1), (-n)^(m-1), ((n(m-1) +- n sqrt((m-1)(5m-1)))/2)^1}, n = |Z|",
                 {d2m_quotient_spec(m, z), {}, {}, {}});
            push(FormulaId::D2mQuotient_E, VariantTag::AsPrinted, "E = |Z|((m-1) + sqrt((m-1)(5m-1)))",
                 {{}, d2m_quotient_energy(m, z), {}, {}});
            push(FormulaId::D2mQuotient_LE, VariantTag::AsPrinted,
                 "LE = (2m n^2 (m-1)(m-2) + 2mn(2m-1))/(2m-1), n = |Z|", {{}, {}, {}, d2m_quotient_le(m, z)});
        }
    }
    return out;
}

enum class VerifyStatus { Confirmed, Refuted, CorrectedVariantConfirmed, Skipped };

inline const char* status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Confirmed: return "confirmed";
        case VerifyStatus::Refuted: return "refuted";
        case VerifyStatus::CorrectedVariantConfirmed: return "corrected-variant-confirmed";
        case VerifyStatus::Skipped: return "skipped";
    }
    return "?";
}

struct FormulaVerification {
    FormulaId id;
    VariantTag variant;
    std::string claim;
    VerifyStatus status;
    std::string witness;
};

struct VerificationRecord {
    GroupFamilySpec spec;
    std::string group_name;
    bool skipped = false;
    std::string skip_reason;
    std::vector<FormulaVerification> results;

    bool all_printed_confirmed() const {
        for (const auto& r : results)
            if (r.variant == VariantTag::AsPrinted && r.status != VerifyStatus::Confirmed) return false;
        return true;
    }
};

/// The stock agreement sweep: every family/parameter combination whose
/// closed forms the test suite checks against brute force.
inline std::vector<GroupFamilySpec> default_verification_sweep() {
    std::vector<GroupFamilySpec> out;
    for (long n : {1, 3, 5, 7}) out.push_back(GroupFamilySpec::v8n(n));
    for (long n = 2; n <= 8; ++n) out.push_back(GroupFamilySpec::sd8n(n));
    for (long m = 3; m <= 20; ++m) out.push_back(GroupFamilySpec::d2m(m));
    for (long m = 2; m <= 12; ++m) out.push_back(GroupFamilySpec::q4m(m));
    for (long r = 3; r <= 60; ++r)
        for (long s = 1; r * s <= 60; ++s) out.push_back(GroupFamilySpec::m2rs(r, s));
    for (long n = 1; n <= 8; ++n) out.push_back(GroupFamilySpec::u6n(n));
    for (long p : primes_up_to(199))
        for (long q : primes_up_to(p - 1))
            if ((p - 1) % q == 0 && p * q <= 200) out.push_back(GroupFamilySpec::frobenius(p, q));
    for (long n : {2, 3}) out.push_back(GroupFamilySpec::hanaki_av(n));
    out.push_back(GroupFamilySpec::hanaki_ap(2, 1));
    out.push_back(GroupFamilySpec::hanaki_ap(3, 1));
    out.push_back(GroupFamilySpec::hanaki_ap(2, 2));
    return out;
}

/// Brute-force data for one constructed group.
struct BruteForceData {
    NonCommutingGraph graph;
    IPoly adj_charpoly;
    SpectrumMultiset adjacency;
    IPoly lap_charpoly;
    SpectrumMultiset laplacian;
    ExactSum energy_value;
    ExactSum le_value;
    bool exact = true;
};

inline BruteForceData brute_force_data(const FiniteGroup& g, double tol = 1e-10) {
    NonCommutingGraph gr = build_graph(g);
    auto adj = exact_spectrum_of_symmetric(adjacency_matrix(gr), SpectrumKind::Adjacency, tol);
    auto lap = exact_spectrum_of_symmetric(laplacian_matrix(gr), SpectrumKind::Laplacian, tol);
    ExactSum e = energy(adj.spectrum);
    ExactSum le = laplacian_energy(lap.spectrum, 2 * gr.edges, gr.vertex_count());
    return {std::move(gr),          std::move(adj.charpoly), std::move(adj.spectrum), std::move(lap.charpoly),
            std::move(lap.spectrum), std::move(e),            std::move(le),           adj.exact && lap.exact};
}

/// Construct the group, run the brute-force spectral path and compare every
/// applicable formula variant against it.
inline VerificationRecord verify_catalog(const GroupFamilySpec& spec, long cap = 4096) {
    VerificationRecord rec;
    rec.spec = spec;
    Int order = spec.predicted_order();
    if (order > cap) {
        rec.skipped = true;
        std::ostringstream os;
        os << "group order " << order.get_str() << " exceeds cap " << cap;
        rec.skip_reason = os.str();
        return rec;
    }
    FiniteGroup g = construct_group(spec);
    rec.group_name = g.name();
    BruteForceData bf = brute_force_data(g);
    if (!bf.exact) {
        rec.skipped = true;
        rec.skip_reason = "graph exceeds the exact spectral path's dimension cap";
        return rec;
    }
    const Int n_vertices(static_cast<long>(bf.graph.vertex_count()));

    auto spectrum_matches = [](const SpectrumMultiset& predicted, const IPoly& truth, const Int& dim,
                               std::string& witness) {
        if (predicted.total() != dim) {
            std::ostringstream os;
            os << "multiplicity total " << predicted.total().get_str() << " != " << dim.get_str() << " vertices";
            ExactSum tr = predicted.trace_sum();
            if (predicted.kind() == SpectrumKind::Adjacency) {
                auto sign = tr.sign();
                if (sign && *sign != 0) os << "; eigenvalue sum " << tr.to_string() << " != 0";
            }
            witness = os.str();
            return false;
        }
        auto chi = predicted.to_charpoly();
        if (!chi) {
            witness = "multiset has no integer characteristic polynomial";
            return false;
        }
        if (!(*chi == truth)) {
            witness = "spectrum differs from the computed one";
            return false;
        }
        return true;
    };

    for (const auto& fp : predict(spec, &g)) {
        FormulaVerification v{fp.id, fp.variant, fp.claim, VerifyStatus::Confirmed, ""};
        bool ok = true;
        std::string witness;
        if (fp.prediction.adjacency && !spectrum_matches(*fp.prediction.adjacency, bf.adj_charpoly, n_vertices, witness))
            ok = false;
        if (ok && fp.prediction.laplacian &&
            !spectrum_matches(*fp.prediction.laplacian, bf.lap_charpoly, n_vertices, witness))
            ok = false;
        if (ok && fp.prediction.energy && !fp.prediction.energy->equals_exact(bf.energy_value)) {
            ok = false;
            witness = "E formula gives " + fp.prediction.energy->to_string() + ", computed E = " + bf.energy_value.to_string();
        }
        if (ok && fp.prediction.laplacian_energy && !fp.prediction.laplacian_energy->equals_exact(bf.le_value)) {
            ok = false;
            witness = "LE formula gives " + fp.prediction.laplacian_energy->to_string() +
                      ", computed LE = " + bf.le_value.to_string();
        }
        if (ok)
            v.status = (fp.variant == VariantTag::AsPrinted) ? VerifyStatus::Confirmed
                                                             : VerifyStatus::CorrectedVariantConfirmed;
        else {
            v.status = VerifyStatus::Refuted;
            v.witness = witness;
        }
        rec.results.push_back(std::move(v));
    }
    return rec;
}

}  // namespace ncg
