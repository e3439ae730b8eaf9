#include <catch2/catch_amalgamated.hpp>

#include "ncg/charpoly.hpp"
#include "ncg/jacobi.hpp"
#include "ncg/matrix.hpp"
#include "ncg/spectrum.hpp"

using namespace ncg;

static IntMatrix all_ones(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = 1;
    return m;
}

static IPoly from_longs(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IPoly{std::move(c)};
}

TEST_CASE("characteristic polynomial of the all-ones matrix") {
    // chi(J_n) = x^(n-1) (x - n)
    CHECK(char_poly_exact(all_ones(3)) == from_longs({0, 0, -3, 1}));
    IPoly expected = IPoly::x_minus(5);
    for (int i = 0; i < 4; ++i) expected = expected * IPoly::x_minus(0);
    CHECK(char_poly_exact(all_ones(5)) == expected);
}

TEST_CASE("modular charpoly path agrees with the exact small-dimension path") {
    // deterministic symmetric test matrix, large enough for the CRT route
    const int n = 40;
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long v = ((i * 31 + j * 17) % 7) - 3;
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    IPoly fast = detail::charpoly_modular(m);
    IPoly slow = detail::charpoly_faddeev(m);
    CHECK(fast == slow);
}

TEST_CASE("block matrix spectrum") {
    auto k3 = block_B_spectrum(1, 2);  // the K_3 adjacency matrix
    REQUIRE(k3.entries().size() == 2);
    CHECK(k3.entries()[0].value == AlgebraicValue::integer(-1));
    CHECK(k3.entries()[0].mult == 2);
    CHECK(k3.entries()[1].value == AlgebraicValue::integer(2));

    auto b5 = block_B_spectrum(2, 3);
    CHECK(b5.total() == 5);
    CHECK(b5.entries()[1].value == AlgebraicValue::integer(-1));
    CHECK(b5.entries()[1].mult == 2);
    bool has_plus = false;
    for (const auto& e : b5.entries()) has_plus = has_plus || (e.value == AlgebraicValue::surd(Rat(1), Rat(1), Int(7)));
    CHECK(has_plus);

    // m = 1, n = 2^k - 2 collapses to {(-1)^(n), n} shape after merging
    auto c = block_B_spectrum(1, 2);
    ExactSum tr = c.trace_sum();
    CHECK(tr.equals_exact(ExactSum{}));
}

TEST_CASE("kronecker spectrum combination") {
    SpectrumMultiset x(SpectrumKind::Adjacency);
    x.add(AlgebraicValue::integer(-1), 2);
    x.add(AlgebraicValue::integer(2), 1);
    SpectrumMultiset y(SpectrumKind::Adjacency);
    y.add(AlgebraicValue::integer(0), 2);
    y.add(AlgebraicValue::integer(3), 1);
    auto k = kron_spectrum(x, y);
    CHECK(k.total() == 9);
    REQUIRE(k.entries().size() == 3);
    CHECK(k.entries()[0].value == AlgebraicValue::integer(-3));
    CHECK(k.entries()[0].mult == 2);
    CHECK(k.entries()[1].value == AlgebraicValue::integer(0));
    CHECK(k.entries()[1].mult == 6);
    CHECK(k.entries()[2].value == AlgebraicValue::integer(6));

    // B(2,3) (x) J_3: {0^11, (-3)^2, 3 +- 3 sqrt(7)}
    SpectrumMultiset j3(SpectrumKind::Adjacency);
    j3.add(AlgebraicValue::integer(0), 2);
    j3.add(AlgebraicValue::integer(3), 1);
    auto prod = kron_spectrum(block_B_spectrum(2, 3), j3);
    CHECK(prod.total() == 15);
    bool surd_found = false;
    for (const auto& e : prod.entries()) {
        if (e.value == AlgebraicValue::surd(Rat(3), Rat(3), Int(7))) surd_found = true;
        if (e.value == AlgebraicValue::integer(0)) CHECK(e.mult == 11);
        if (e.value == AlgebraicValue::integer(-3)) CHECK(e.mult == 2);
    }
    CHECK(surd_found);

    // multiplying by {1^k} keeps the values
    SpectrumMultiset ones(SpectrumKind::Adjacency);
    ones.add(AlgebraicValue::integer(1), 4);
    auto same = kron_spectrum(x, ones);
    REQUIRE(same.entries().size() == x.entries().size());
    for (std::size_t i = 0; i < x.entries().size(); ++i) {
        CHECK(same.entries()[i].value == x.entries()[i].value);
        CHECK(same.entries()[i].mult == x.entries()[i].mult * 4);
    }
}

TEST_CASE("complete multipartite adjacency spectrum") {
    auto octa = multipartite_adjacency_spectrum(MultipartiteShape::from_parts({2, 2, 2}));
    CHECK(octa.total() == 6);
    REQUIRE(octa.entries().size() == 3);
    CHECK(octa.entries()[0].value == AlgebraicValue::integer(-2));
    CHECK(octa.entries()[0].mult == 2);
    CHECK(octa.entries()[1].value == AlgebraicValue::integer(0));
    CHECK(octa.entries()[1].mult == 3);
    CHECK(octa.entries()[2].value == AlgebraicValue::integer(4));

    // K_{2,1,1,1}: {0^1, (-1)^2, 1 +- sqrt(7)}
    auto k2111 = multipartite_adjacency_spectrum(MultipartiteShape::from_parts({2, 1, 1, 1}));
    CHECK(k2111.total() == 5);
    bool found = false;
    for (const auto& e : k2111.entries()) found = found || (e.value == AlgebraicValue::surd(Rat(1), Rat(1), Int(7)));
    CHECK(found);
}

TEST_CASE("A5-shaped spectrum has the stated cubic factor and sign-corrected families") {
    MultipartiteShape shape = MultipartiteShape::from_classes({{4, 6}, {3, 5}, {2, 10}});
    CHECK(shape.vertex_count() == 59);
    auto sp = multipartite_adjacency_spectrum(shape);
    CHECK(sp.total() == 59);
    // reduced class matrix charpoly is x^3 - 50x^2 - 324x - 480
    CHECK(char_poly_exact(multipartite_class_matrix(shape)) == from_longs({-480, -324, -50, 1}));
    Int m0 = 0, m2 = 0, m3 = 0, m4 = 0;
    for (const auto& e : sp.entries()) {
        if (e.value == AlgebraicValue::integer(0)) m0 = e.mult;
        if (e.value == AlgebraicValue::integer(-2)) m2 = e.mult;
        if (e.value == AlgebraicValue::integer(-3)) m3 = e.mult;
        if (e.value == AlgebraicValue::integer(-4)) m4 = e.mult;
    }
    CHECK(m0 == 38);
    CHECK(m2 == 9);
    CHECK(m3 == 4);
    CHECK(m4 == 5);
    // eigenvalue sum is zero only with the corrected signs
    auto tr = sp.trace_sum().sign();
    REQUIRE(tr.has_value());
    CHECK(*tr == 0);
    auto sq = sp.sum_squares();
    REQUIRE(sq.has_value());
    ExactSum expected;
    expected.add_rational(Rat(shape.edge_double()));
    CHECK(sq->equals_exact(expected));
    CHECK(energy(sp).to_double() == Catch::Approx(111.89).margin(0.01));

    auto lap = multipartite_laplacian_spectrum(shape);
    CHECK(lap.total() == 59);
    ExactSum le = laplacian_energy(lap, shape.edge_double(), shape.vertex_count());
    ExactSum claim;
    claim.add_rational(Rat(8580, 59));
    CHECK(le.equals_exact(claim));
}

TEST_CASE("multipartite laplacian spectrum") {
    auto lap = multipartite_laplacian_spectrum(MultipartiteShape::from_parts({2, 2, 2}));
    REQUIRE(lap.entries().size() == 3);
    CHECK(lap.entries()[0].value == AlgebraicValue::integer(0));
    CHECK(lap.entries()[0].mult == 1);
    CHECK(lap.entries()[1].value == AlgebraicValue::integer(4));
    CHECK(lap.entries()[1].mult == 3);
    CHECK(lap.entries()[2].value == AlgebraicValue::integer(6));
    CHECK(lap.entries()[2].mult == 2);

    // astronomically large shapes stay exact
    Int t("7442093853169599697985");
    MultipartiteShape huge = MultipartiteShape::from_classes({{2, t}, {2 * (t - 1), 1}});
    auto hl = multipartite_laplacian_spectrum(huge);
    ExactSum sum = hl.trace_sum();
    ExactSum expect;
    expect.add_rational(Rat(huge.edge_double()));
    CHECK(sum.equals_exact(expect));
}

TEST_CASE("numeric eigensolver oracle") {
    // K_{2,2,2} adjacency
    auto gr = MultipartiteShape::from_parts({2, 2, 2});
    IntMatrix a(6);
    int part_of[6] = {0, 0, 1, 1, 2, 2};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a.at(i, j) = (part_of[i] != part_of[j]) ? 1 : 0;
    auto res = numeric_eigenvalues(a, 1e-10);
    std::vector<double> expect{-2, -2, 0, 0, 0, 4};
    REQUIRE(res.eigenvalues.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(res.eigenvalues[static_cast<std::size_t>(i)] == Catch::Approx(expect[static_cast<std::size_t>(i)]).margin(1e-9));
    CHECK(res.offdiag_norm <= 1e-10);

    IntMatrix zero(4);
    auto zres = numeric_eigenvalues(zero);
    for (double v : zres.eigenvalues) CHECK(v == 0.0);

    IntMatrix asym(2);
    asym.at(0, 1) = 1;
    CHECK_THROWS_AS(numeric_eigenvalues(asym), std::invalid_argument);
}

TEST_CASE("exact spectrum of a symmetric matrix") {
    IntMatrix a(6);
    int part_of[6] = {0, 0, 1, 1, 2, 2};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a.at(i, j) = (part_of[i] != part_of[j]) ? 1 : 0;
    auto es = exact_spectrum_of_symmetric(a, SpectrumKind::Adjacency);
    auto direct = multipartite_adjacency_spectrum(MultipartiteShape::from_parts({2, 2, 2}));
    REQUIRE(es.spectrum.entries().size() == direct.entries().size());
    for (std::size_t i = 0; i < direct.entries().size(); ++i) {
        CHECK(es.spectrum.entries()[i].value == direct.entries()[i].value);
        CHECK(es.spectrum.entries()[i].mult == direct.entries()[i].mult);
    }
    auto chi = es.spectrum.to_charpoly();
    REQUIRE(chi.has_value());
    CHECK(*chi == es.charpoly);
}

TEST_CASE("energies") {
    SpectrumMultiset s(SpectrumKind::Adjacency);
    s.add(AlgebraicValue::integer(0), 3);
    s.add(AlgebraicValue::integer(-2), 2);
    s.add(AlgebraicValue::integer(4), 1);
    ExactSum e = energy(s);
    ExactSum eight;
    eight.add_rational(Rat(8));
    CHECK(e.equals_exact(eight));

    SpectrumMultiset lap(SpectrumKind::Laplacian);
    lap.add(AlgebraicValue::integer(0), 1);
    lap.add(AlgebraicValue::integer(8), 2);
    lap.add(AlgebraicValue::integer(9), 4);
    lap.add(AlgebraicValue::integer(11), 4);
    ExactSum le = laplacian_energy(lap, Int(96), Int(11));
    ExactSum claim;
    claim.add_rational(Rat(224, 11));
    CHECK(le.equals_exact(claim));

    // energy ignores entry order and merging
    SpectrumMultiset s2(SpectrumKind::Adjacency);
    s2.add(AlgebraicValue::integer(4), 1);
    s2.add(AlgebraicValue::integer(-2), 1);
    s2.add(AlgebraicValue::integer(0), 3);
    s2.add(AlgebraicValue::integer(-2), 1);
    CHECK(energy(s2).equals_exact(e));
}

TEST_CASE("charpoly evaluates to near zero at the numeric eigenvalues") {
    IntMatrix a(6);
    int part_of[6] = {0, 0, 1, 1, 2, 2};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a.at(i, j) = (part_of[i] != part_of[j]) ? 1 : 0;
    IPoly chi = char_poly_exact(a);
    for (double ev : numeric_eigenvalues(a).eigenvalues) {
        double val = 0;
        for (int k = chi.degree(); k >= 0; --k) val = val * ev + chi.c[static_cast<std::size_t>(k)].get_d();
        CHECK(std::abs(val) < 1e-6 * a.dim());
    }
}

TEST_CASE("verdicts") {
    ExactSum e, le;
    e.add_rational(Rat(8));
    le.add_rational(Rat(8));
    CHECK(energy_verdict(e, le) == EnergyVerdict::EEqual);
    le.add_rational(Rat(1, 7));
    CHECK(energy_verdict(e, le) == EnergyVerdict::ELess);
    CHECK(energy_verdict(le, e) == EnergyVerdict::EGreater);

    // inconclusive only when inexact bounds overlap
    ExactSum fuzzy_a, fuzzy_b;
    fuzzy_a.add(AlgebraicValue::approx(1.0, 0.5));
    fuzzy_b.add(AlgebraicValue::approx(1.2, 0.5));
    CHECK(energy_verdict(fuzzy_a, fuzzy_b) == EnergyVerdict::Inconclusive);
    ExactSum far;
    far.add_rational(Rat(10));
    CHECK(energy_verdict(fuzzy_a, far) == EnergyVerdict::ELess);
}
