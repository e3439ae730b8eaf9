// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncg/compare.hpp"
#include "ncg/integral.hpp"
#include "ncg/json_io.hpp"
#include "ncg/ncgraph.hpp"

using namespace ncg;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

ExactSum rat_sum(long num, long den = 1) {
    ExactSum s;
    Rat r(num, den);
    r.canonicalize();
    s.add_rational(r);
    return s;
}

ExactSum surd_sum(long rational, long coeff, long d) {
    ExactSum s;
    s.add_rational(Rat(rational));
    s.add(AlgebraicValue::surd(Rat(0), Rat(coeff), Int(d)));
    return s;
}

struct Rng {
    std::uint64_t state = 0x2545f4914f6cdd1dull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

// 1. Closed-form agreement sweep
void criterion1() {
    std::ostringstream detail;
    bool pass = true;
    int confirmed = 0, refuted = 0;
    for (const auto& spec : default_verification_sweep()) {
        VerificationRecord rec = verify_catalog(spec, 4096);
        if (rec.skipped) {
            pass = false;
            detail << rec.spec.to_string() << " skipped; ";
            continue;
        }
        for (const auto& r : rec.results) {
            if (r.status == VerifyStatus::Confirmed || r.status == VerifyStatus::CorrectedVariantConfirmed) {
                ++confirmed;
                continue;
            }
            ++refuted;
            bool expected_refutation = (r.id == FormulaId::SD8n_odd_spec || r.id == FormulaId::SD8n_odd_E) &&
                                       r.variant == VariantTag::AsPrinted;
            if (!expected_refutation) {
                pass = false;
                detail << rec.group_name << "/" << formula_name(r.id) << " " << status_name(r.status) << "; ";
            }
        }
    }
    if (refuted == 0) {
        pass = false;
        detail << "expected the printed odd-semidihedral results to be refuted";
    }
    std::ostringstream name;
    name << "closed-form agreement sweep (" << confirmed << " confirmed, " << refuted
         << " printed variants refuted, all in the expected two formula ids)";
    report(1, name.str(), pass, detail.str());
}

// 2. Trace detector on the printed odd-semidihedral spectrum
void criterion2() {
    bool pass = true;
    std::ostringstream detail;
    for (long n = 3; n <= 9; n += 2) {
        auto preds = predict(GroupFamilySpec::sd8n(n));
        const Prediction *printed = nullptr, *corrected = nullptr;
        for (const auto& p : preds) {
            if (p.id != FormulaId::SD8n_odd_spec) continue;
            if (p.variant == VariantTag::AsPrinted) printed = &p.prediction;
            if (p.variant == VariantTag::TraceCorrected) corrected = &p.prediction;
        }
        if (!printed || !corrected) {
            pass = false;
            detail << "n=" << n << " missing variants; ";
            continue;
        }
        auto printed_trace = printed->adjacency->trace_sum().sign();
        if (!printed_trace || *printed_trace == 0) {
            pass = false;
            detail << "n=" << n << " printed trace vanished; ";
        }
        auto corr_trace = corrected->adjacency->trace_sum().sign();
        auto corr_sq = corrected->adjacency->sum_squares();
        bool sq_ok = corr_sq && corr_sq->equals_exact(rat_sum(48 * n * n - 48 * n));
        if (!corr_trace || *corr_trace != 0 || !sq_ok) {
            pass = false;
            detail << "n=" << n << " corrected variant failed an identity; ";
        }
    }
    report(2, "eigenvalue-sum detector refutes the printed odd-semidihedral spectrum for every odd n tested", pass,
           detail.str());
}

// 3. Boundary equalities E = LE
void criterion3() {
    bool pass = true;
    std::ostringstream detail;
    auto check_equal = [&](const GroupFamilySpec& spec, const ExactSum& expected) {
        BruteForceData bf = brute_force_data(construct_group(spec));
        if (!bf.energy_value.equals_exact(expected) || !bf.le_value.equals_exact(expected)) {
            pass = false;
            detail << spec.to_string() << " E=" << bf.energy_value.to_string() << " LE=" << bf.le_value.to_string()
                   << "; ";
        }
    };
    check_equal(GroupFamilySpec::v8n(1), rat_sum(8));
    check_equal(GroupFamilySpec::d2m(4), rat_sum(8));
    check_equal(GroupFamilySpec::q4m(2), rat_sum(8));
    check_equal(GroupFamilySpec::hanaki_av(2), rat_sum(16));
    // A(n,p): E = LE = 2(p^3n - p^2n)
    check_equal(GroupFamilySpec::hanaki_ap(2, 1), rat_sum(8));
    check_equal(GroupFamilySpec::hanaki_ap(3, 1), rat_sum(36));
    check_equal(GroupFamilySpec::hanaki_ap(2, 2), rat_sum(96));
    report(3, "boundary equalities: E = LE = 8 for V_8, D_8, Q_8; 16 for A(2,v); 2(p^3n - p^2n) for A(n,p)", pass,
           detail.str());
}

// 4. Case studies reproduce the published values
void criterion4() {
    bool pass = true;
    std::ostringstream detail;
    auto cases = case_studies(4096);
    bool a5_flag = false, sl23_flag = false;
    for (const auto& c : cases) {
        if (c.claimed_energy && !c.energy_value.equals_exact(*c.claimed_energy)) {
            pass = false;
            detail << c.group << " E mismatch; ";
        }
        if (c.claimed_le && !c.le_value.equals_exact(*c.claimed_le)) {
            pass = false;
            detail << c.group << " LE mismatch; ";
        }
        if (c.claimed_energy_approx && std::abs(c.energy_value.to_double() - *c.claimed_energy_approx) > 0.01) {
            pass = false;
            detail << c.group << " approximate E off by more than 0.01; ";
        }
        for (const auto& f : c.flags) {
            if (c.group == "A_5" && f.find("signs corrected") != std::string::npos) a5_flag = true;
            if (c.group == "SL(2,3)" && f.find("degree") != std::string::npos) sl23_flag = true;
        }
    }
    if (!a5_flag || !sl23_flag) {
        pass = false;
        detail << "expected the spectrum-sign and characteristic-polynomial-degree flags; ";
    }
    report(4, "case studies reproduce published E and LE (exact where exact, 0.01 on the cubic cases), with flags",
           pass, detail.str());
}

// 5. The 28-row table, byte-exact, plus the Fibonacci/Lucas identities
void criterion5() {
    bool pass = true;
    std::ostringstream detail;
    std::ifstream golden(std::string(NCG_TEST_DATA_DIR) + "/square_table_28.csv", std::ios::binary);
    std::string expected((std::istreambuf_iterator<char>(golden)), std::istreambuf_iterator<char>());
    if (expected.empty()) {
        pass = false;
        detail << "golden file missing; ";
    }
    if (square_table_csv(28) != expected) {
        pass = false;
        detail << "library table differs from the golden file; ";
    }
    // the CLI must emit identical bytes
    std::string cmd = std::string(NCG_CLI_PATH) + " square-table --rows 28";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string cli_out;
    if (pipe) {
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) cli_out.append(buf, got);
        pclose(pipe);
    }
    if (cli_out != expected) {
        pass = false;
        detail << "CLI output differs from the golden file; ";
    }
    for (const auto& row : fib_lucas_check(28)) {
        if (!row.ok || row.witness_lucas * row.witness_lucas - 5 * row.witness_fib * row.witness_fib != 4) {
            pass = false;
            detail << "Fibonacci/Lucas identity failed; ";
            break;
        }
    }
    report(5, "square-table --rows 28 byte-exact (library and CLI); Fibonacci/Lucas and L^2-5F^2=4 hold", pass,
           detail.str());
}

// 6. Integrality of the emitted instances; K_{3,2} as negative control
void criterion6() {
    bool pass = true;
    std::ostringstream detail;
    int certified = 0;
    for (int idx = 1; idx <= 10; ++idx) {
        for (auto c : {IntegralCase::A, IntegralCase::B, IntegralCase::C, IntegralCase::D, IntegralCase::E,
                       IntegralCase::F, IntegralCase::G, IntegralCase::H, IntegralCase::I}) {
            for (const auto& shape : integral_graph_instances(idx, c, {1, 2, 3})) {
                auto cert = certify_integral(shape);
                ++certified;
                if (!cert.integral) {
                    pass = false;
                    detail << integral_case_name(c) << " at index " << idx << " not integral: " << shape.to_string()
                           << "; ";
                }
            }
        }
    }
    if (certified < 60) {
        pass = false;
        detail << "only " << certified << " instances emitted; ";
    }
    if (certify_integral(MultipartiteShape::from_parts({3, 2})).integral) {
        pass = false;
        detail << "negative control failed; ";
    }
    std::ostringstream name;
    name << "all " << certified << " emitted shapes over the first 10 terms certified integral; K_{3,2} certified not";
    report(6, name.str(), pass, detail.str());
}

// 7. Frobenius theorem check and remark audit
void criterion7() {
    bool pass = true;
    std::ostringstream detail;
    auto cases = frobenius_scan(200, 200);
    int theorem_checked = 0, audited = 0;
    for (const auto& c : cases) {
        long p = c.spec->p, q = c.spec->q;
        if (frobenius_condition(p, q).q2_lt) {
            ++theorem_checked;
            if (c.verdict != EnergyVerdict::ELess && c.verdict != EnergyVerdict::EEqual) {
                pass = false;
                detail << "E <= LE fails at (" << p << "," << q << "); ";
            }
        }
        bool is_remark_pair = (p == 43 && q == 7) || (p == 53 && q == 13) || (p == 67 && q == 11) || (p == 89 && q == 11);
        if (is_remark_pair) {
            ++audited;
            bool has_claim_flag = false;
            for (const auto& f : c.flags)
                has_claim_flag = has_claim_flag || (f.find("published remark claims E > LE") != std::string::npos &&
                                                    f.find("E<LE") != std::string::npos);
            if (!has_claim_flag || c.verdict != EnergyVerdict::ELess) {
                pass = false;
                detail << "remark audit incomplete at (" << p << "," << q << "); ";
            }
        }
    }
    if (audited != 4) {
        pass = false;
        detail << "expected 4 audited pairs, saw " << audited << "; ";
    }
    std::ostringstream name;
    name << "E <= LE exact for all " << theorem_checked
         << " pairs with q^2 < q+p+1, p <= 200; all 4 claimed counterexamples audited (computed E < LE)";
    report(7, name.str(), pass, detail.str());
}

// 8. Oracle consistency on random multipartite shapes
void criterion8() {
    bool pass = true;
    std::ostringstream detail;
    Rng rng;
    for (int t = 0; t < 50; ++t) {
        std::vector<Int> parts;
        long total = 0;
        long nparts = rng.uniform(2, 8);
        for (long i = 0; i < nparts; ++i) {
            long s = rng.uniform(1, 14);
            if (total + s > 120) break;
            parts.emplace_back(s);
            total += s;
        }
        while (parts.size() < 2) {
            parts.emplace_back(1);
            ++total;
        }
        MultipartiteShape shape = MultipartiteShape::from_parts(parts);
        auto exact = multipartite_adjacency_spectrum(shape);
        NonCommutingGraph gr = multipartite_graph(shape);
        auto numeric = numeric_eigenvalues(adjacency_matrix(gr), 1e-10);
        auto expanded = exact.to_doubles();
        if (expanded.size() != numeric.eigenvalues.size()) {
            pass = false;
            detail << shape.to_string() << " count mismatch; ";
            continue;
        }
        for (std::size_t i = 0; i < expanded.size(); ++i) {
            if (std::abs(expanded[i] - numeric.eigenvalues[i]) > 1e-6) {
                pass = false;
                detail << shape.to_string() << " eigenvalue " << i << " differs; ";
                break;
            }
        }
        auto lap = multipartite_laplacian_spectrum(shape);
        ExactSum lap_sum = lap.trace_sum();
        ExactSum lap_expect;
        lap_expect.add_rational(Rat(shape.edge_double()));
        if (!lap_sum.equals_exact(lap_expect)) {
            pass = false;
            detail << shape.to_string() << " Laplacian sum wrong; ";
        }
    }
    report(8, "50 random shapes (N <= 120): exact vs numeric adjacency spectra within 1e-6; Laplacian sums = 2|e|",
           pass, detail.str());
}

// 9. Kronecker eigenvalue law on random pairs
void criterion9() {
    bool pass = true;
    std::ostringstream detail;
    Rng rng;
    for (int t = 0; t < 20; ++t) {
        int xd = static_cast<int>(rng.uniform(2, 5));
        IntMatrix x(xd);
        for (int i = 0; i < xd; ++i)
            for (int j = i; j < xd; ++j) {
                long v = rng.uniform(-3, 3);
                x.at(i, j) = v;
                x.at(j, i) = v;
            }
        int k = static_cast<int>(rng.uniform(1, 6));
        IntMatrix jk(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) jk.at(i, j) = 1;
        auto spec_x = exact_spectrum_of_symmetric(x, SpectrumKind::Adjacency).spectrum;
        SpectrumMultiset spec_j(SpectrumKind::Adjacency);
        spec_j.add(AlgebraicValue::integer(0), k - 1);
        spec_j.add(AlgebraicValue::integer(k), 1);
        auto combined = kron_spectrum(spec_x, spec_j);
        auto expanded = combined.to_doubles();
        auto numeric = numeric_eigenvalues(kronecker(x, jk), 1e-12);
        if (expanded.size() != numeric.eigenvalues.size()) {
            pass = false;
            detail << "dimension mismatch at trial " << t << "; ";
            continue;
        }
        for (std::size_t i = 0; i < expanded.size(); ++i)
            if (std::abs(expanded[i] - numeric.eigenvalues[i]) > 1e-8) {
                pass = false;
                detail << "trial " << t << " eigenvalue " << i << " off by "
                       << std::abs(expanded[i] - numeric.eigenvalues[i]) << "; ";
                break;
            }
    }
    report(9, "20 random (X, J_k) pairs: expanded Kronecker spectrum equals the pairwise products within 1e-8", pass,
           detail.str());
}

// 10. Group sanity: axioms and predicted centers
void criterion10() {
    bool pass = true;
    std::ostringstream detail;
    auto check_center = [&](const GroupFamilySpec& spec, long expected) {
        FiniteGroup g = construct_group(spec);
        try {
            validate_group_axioms(g);
        } catch (const std::exception& e) {
            pass = false;
            detail << e.what() << "; ";
        }
        if (static_cast<long>(center(g).size()) != expected) {
            pass = false;
            detail << g.name() << " center " << center(g).size() << " != " << expected << "; ";
        }
    };
    for (long n : {1L, 3L, 5L, 7L}) check_center(GroupFamilySpec::v8n(n), 2);
    for (long n = 2; n <= 8; ++n) check_center(GroupFamilySpec::sd8n(n), n % 2 == 1 ? 4 : 2);
    for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 2}, {7, 3}, {11, 5}, {31, 5}})
        check_center(GroupFamilySpec::frobenius(p, q), 1);
    for (long n : {2L, 3L}) check_center(GroupFamilySpec::hanaki_av(n), 1L << n);
    check_center(GroupFamilySpec::hanaki_ap(2, 1), 2);
    check_center(GroupFamilySpec::hanaki_ap(3, 1), 3);
    check_center(GroupFamilySpec::hanaki_ap(2, 2), 4);
    for (long m = 3; m <= 12; ++m) check_center(GroupFamilySpec::d2m(m), m % 2 == 1 ? 1 : 2);
    for (long m = 2; m <= 8; ++m) check_center(GroupFamilySpec::q4m(m), 2);
    report(10, "all constructed families pass the axiom checks and the predicted center orders", pass, detail.str());
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << " (" << elapsed.count() / 1000.0
              << " s)" << std::endl;
    return g_failures;
}
