#include <catch2/catch_amalgamated.hpp>

#include "ncg/closed_forms.hpp"

using namespace ncg;

static ExactSum rat_sum(long num, long den = 1) {
    ExactSum s;
    Rat r(num, den);
    r.canonicalize();
    s.add_rational(r);
    return s;
}

static ExactSum surd_sum(long rational, long coeff, long d) {
    ExactSum s;
    s.add_rational(Rat(rational));
    s.add(AlgebraicValue::surd(Rat(0), Rat(coeff), Int(d)));
    return s;
}

static const Prediction* find_prediction(const std::vector<FormulaPrediction>& preds, FormulaId id,
                                         VariantTag v = VariantTag::AsPrinted) {
    for (const auto& p : preds)
        if (p.id == id && p.variant == v) return &p.prediction;
    return nullptr;
}

TEST_CASE("predicted values at small parameters") {
    SECTION("V_8 merges the surd into the integer eigenvalues") {
        auto preds = predict(GroupFamilySpec::v8n(1));
        const Prediction* spec = find_prediction(preds, FormulaId::V8n_spec);
        REQUIRE(spec);
        REQUIRE(spec->adjacency.has_value());
        CHECK(spec->adjacency->to_string() == "{(-2)^2, 0^3, 4}");
        const Prediction* e = find_prediction(preds, FormulaId::V8n_E);
        REQUIRE(e);
        CHECK(e->energy->equals_exact(rat_sum(8)));
        const Prediction* le = find_prediction(preds, FormulaId::V8n_LE);
        REQUIRE(le);
        CHECK(le->laplacian_energy->equals_exact(rat_sum(8)));
    }
    SECTION("F_{3,2}") {
        auto preds = predict(GroupFamilySpec::frobenius(3, 2));
        const Prediction* e = find_prediction(preds, FormulaId::Fpq_E);
        REQUIRE(e);
        CHECK(e->energy->equals_exact(surd_sum(2, 2, 7)));  // 2 + sqrt(28)
        const Prediction* le = find_prediction(preds, FormulaId::Fpq_LE);
        REQUIRE(le);
        CHECK(le->laplacian_energy->equals_exact(rat_sum(42, 5)));
    }
    SECTION("A(1,2)") {
        auto preds = predict(GroupFamilySpec::hanaki_ap(2, 1));
        const Prediction* spec = find_prediction(preds, FormulaId::HanakiAp_spec);
        REQUIRE(spec);
        CHECK(spec->adjacency->to_string() == "{(-2)^2, 0^3, 4}");
        CHECK(find_prediction(preds, FormulaId::HanakiAp_E)->energy->equals_exact(rat_sum(8)));
        CHECK(find_prediction(preds, FormulaId::HanakiAp_LE)->laplacian_energy->equals_exact(rat_sum(8)));
    }
    SECTION("U_12") {
        auto preds = predict(GroupFamilySpec::u6n(2));
        const Prediction* u = find_prediction(preds, FormulaId::U6n);
        REQUIRE(u);
        CHECK(u->adjacency->to_string() == "{(2 - 2*sqrt(7)), (-2)^2, 0^6, (2 + 2*sqrt(7))}");
        CHECK(u->energy->equals_exact(surd_sum(4, 4, 7)));
    }
    SECTION("D_8") {
        auto preds = predict(GroupFamilySpec::d2m(4));
        CHECK(find_prediction(preds, FormulaId::D2m_even)->energy->equals_exact(rat_sum(8)));
        CHECK(find_prediction(preds, FormulaId::D2m_LE)->laplacian_energy->equals_exact(rat_sum(8)));
    }
    SECTION("Q_8") {
        auto preds = predict(GroupFamilySpec::q4m(2));
        CHECK(find_prediction(preds, FormulaId::Q4m)->energy->equals_exact(rat_sum(8)));
        CHECK(find_prediction(preds, FormulaId::Q4m_LE)->laplacian_energy->equals_exact(rat_sum(8)));
    }
}

TEST_CASE("verification against brute force") {
    SECTION("V_24 confirms everything") {
        auto rec = verify_catalog(GroupFamilySpec::v8n(3));
        REQUIRE(!rec.skipped);
        CHECK(rec.results.size() >= 4);
        for (const auto& r : rec.results) CHECK(r.status != VerifyStatus::Refuted);
        CHECK(rec.all_printed_confirmed());
    }
    SECTION("SD_24: printed adjacency results refuted, corrected variants confirmed") {
        auto rec = verify_catalog(GroupFamilySpec::sd8n(3));
        REQUIRE(!rec.skipped);
        int refuted = 0, corrected = 0;
        for (const auto& r : rec.results) {
            if (r.status == VerifyStatus::Refuted) {
                ++refuted;
                CHECK((r.id == FormulaId::SD8n_odd_spec || r.id == FormulaId::SD8n_odd_E));
                CHECK(r.variant == VariantTag::AsPrinted);
                CHECK(!r.witness.empty());
            }
            if (r.status == VerifyStatus::CorrectedVariantConfirmed) ++corrected;
        }
        CHECK(refuted == 2);
        CHECK(corrected == 2);
        // Laplacian results for the same group are fine as printed
        for (const auto& r : rec.results)
            if (r.id == FormulaId::SD8n_odd_lspec || r.id == FormulaId::SD8n_odd_LE)
                CHECK(r.status == VerifyStatus::Confirmed);
    }
    SECTION("trace detector fires on the printed SD_8n odd spectrum") {
        for (long n : {3L, 5L, 7L, 9L}) {
            auto preds = predict(GroupFamilySpec::sd8n(n));
            const Prediction* printed = find_prediction(preds, FormulaId::SD8n_odd_spec);
            const Prediction* corrected = find_prediction(preds, FormulaId::SD8n_odd_spec, VariantTag::TraceCorrected);
            REQUIRE(printed);
            REQUIRE(corrected);
            auto printed_trace = printed->adjacency->trace_sum().sign();
            CHECK(*printed_trace != 0);
            auto corrected_trace = corrected->adjacency->trace_sum().sign();
            CHECK(*corrected_trace == 0);
            // corrected second moment equals 2|e| = 48n^2 - 48n
            auto sq = corrected->adjacency->sum_squares();
            REQUIRE(sq.has_value());
            CHECK(sq->equals_exact(rat_sum(48 * n * n - 48 * n)));
        }
    }
    SECTION("Frobenius groups") {
        for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 2}, {7, 3}, {5, 2}, {13, 3}}) {
            auto rec = verify_catalog(GroupFamilySpec::frobenius(p, q));
            REQUIRE(!rec.skipped);
            CHECK(rec.all_printed_confirmed());
        }
    }
    SECTION("Hanaki groups, equal energies") {
        auto rec = verify_catalog(GroupFamilySpec::hanaki_av(2));
        CHECK(rec.all_printed_confirmed());
        FiniteGroup g = construct_group(GroupFamilySpec::hanaki_av(2));
        auto bf = brute_force_data(g);
        CHECK(bf.energy_value.equals_exact(rat_sum(16)));
        CHECK(bf.le_value.equals_exact(rat_sum(16)));
    }
    SECTION("quotient-shape formulas cover the order-16 list") {
        FiniteGroup g = construct_group(GroupFamilySpec::named_product("z2xd8"));
        auto preds = predict(GroupFamilySpec::named_product("z2xd8"), &g);
        const Prediction* e = find_prediction(preds, FormulaId::ZpZp_E);
        REQUIRE(e);
        CHECK(e->energy->equals_exact(rat_sum(16)));
        auto rec = verify_catalog(GroupFamilySpec::named_product("z2xd8"));
        CHECK(rec.all_printed_confirmed());
    }
    SECTION("cap produces a skip") {
        auto rec = verify_catalog(GroupFamilySpec::hanaki_av(3), 60);
        CHECK(rec.skipped);
        CHECK(rec.skip_reason.find("exceeds cap") != std::string::npos);
    }
}

TEST_CASE("verification claims carry the stated formulas") {
    auto preds = predict(GroupFamilySpec::sd8n(3));
    bool found = false;
    for (const auto& p : preds)
        if (p.id == FormulaId::SD8n_odd_spec && p.variant == VariantTag::AsPrinted)
            found = p.claim.find("(-4)^(2n-1)") != std::string::npos;
    CHECK(found);
}
