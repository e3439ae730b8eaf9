#include <catch2/catch_amalgamated.hpp>

#include "ncg/compare.hpp"

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

TEST_CASE("published case values reproduce exactly") {
    SECTION("A_4") {
        auto c = compare_group(GroupFamilySpec::alt(4));
        CHECK(c.energy_value.equals_exact(surd_sum(6, 2, 33)));
        CHECK(c.le_value.equals_exact(rat_sum(224, 11)));
        CHECK(c.verdict == EnergyVerdict::ELess);
    }
    SECTION("Sz(2)") {
        auto c = compare_group(GroupFamilySpec::sz2());
        CHECK(c.energy_value.equals_exact(surd_sum(12, 8, 6)));
        CHECK(c.le_value.equals_exact(rat_sum(690, 19)));
        CHECK(c.verdict == EnergyVerdict::ELess);
    }
    SECTION("SL(2,3)") {
        auto c = compare_group(GroupFamilySpec::sl23());
        CHECK(c.energy_value.equals_exact(surd_sum(16, 8, 7)));
        CHECK(c.le_value.equals_exact(rat_sum(552, 11)));
    }
    SECTION("D_6 x Z_3") {
        auto c = compare_group(GroupFamilySpec::named_product("d6xz3"));
        CHECK(c.energy_value.equals_exact(surd_sum(6, 6, 7)));
        CHECK(c.le_value.equals_exact(rat_sum(594, 15)));
    }
    SECTION("A_4 x Z_2") {
        auto c = compare_group(GroupFamilySpec::named_product("a4xz2"));
        CHECK(c.energy_value.equals_exact(surd_sum(12, 4, 33)));
        CHECK(c.le_value.equals_exact(rat_sum(544, 11)));
    }
    SECTION("A_5") {
        auto c = compare_group(GroupFamilySpec::alt(5));
        CHECK(c.energy_value.to_double() == Catch::Approx(111.89).margin(0.01));
        CHECK(c.le_value.equals_exact(rat_sum(8580, 59)));
        CHECK(c.verdict == EnergyVerdict::ELess);
    }
    SECTION("S_4 mixes surds and cubic roots") {
        auto c = compare_group(GroupFamilySpec::sym(4));
        ExactSum claimed_le = rat_sum(1072, 23);
        claimed_le.add(AlgebraicValue::surd(Rat(0), Rat(4), Int(13)));
        CHECK(c.le_value.equals_exact(claimed_le));
        CHECK(c.energy_value.to_double() == Catch::Approx(35.866 + 4 * std::sqrt(5.0)).margin(0.01));
        CHECK(c.verdict == EnergyVerdict::ELess);
    }
    SECTION("A(2,v) attains equality") {
        auto c = compare_group(GroupFamilySpec::hanaki_av(2));
        CHECK(c.verdict == EnergyVerdict::EEqual);
        CHECK(c.energy_value.equals_exact(rat_sum(16)));
    }
    SECTION("QD_16 by brute force equals the even semidihedral closed form") {
        auto c = compare_group(GroupFamilySpec::qd2n(4));
        CHECK(c.energy_value.equals_exact(surd_sum(6, 2, 57)));
        CHECK(c.le_value.equals_exact(rat_sum(304, 7)));
    }
    SECTION("QD_32 and QD_64 run by brute force and satisfy the comparison") {
        for (long n : {5L, 6L}) {
            auto c = compare_group(GroupFamilySpec::qd2n(n));
            CAPTURE(c.group);
            CHECK(c.provenance != "closed-form");
            CHECK((c.verdict == EnergyVerdict::ELess || c.verdict == EnergyVerdict::EEqual));
            CHECK(c.flags.empty());
        }
    }
}

TEST_CASE("closed form and brute force agree when both run") {
    for (auto spec : {GroupFamilySpec::v8n(3), GroupFamilySpec::sd8n(5), GroupFamilySpec::q4m(6),
                      GroupFamilySpec::frobenius(13, 3), GroupFamilySpec::u6n(4)}) {
        auto c = compare_group(spec);
        CAPTURE(c.group);
        CHECK(c.provenance == "both");
        CHECK(c.flags.empty());
    }
}

TEST_CASE("frobenius side conditions") {
    auto c = frobenius_condition(3, 2);
    CHECK(c.q_divides);
    CHECK(c.q2_lt);
    CHECK(!c.q2_gt);
    c = frobenius_condition(43, 7);
    CHECK(c.q_divides);
    CHECK(c.q2_lt);  // 49 < 51
    c = frobenius_condition(53, 13);
    CHECK(c.q_divides);
    CHECK(c.q2_gt);  // 169 > 67
    c = frobenius_condition(7, 5);
    CHECK(!c.q_divides);
}

TEST_CASE("frobenius scan") {
    auto cases = frobenius_scan(100, 200);
    REQUIRE(!cases.empty());
    bool saw_43_7 = false;
    for (const auto& c : cases) {
        REQUIRE(c.spec.has_value());
        long p = c.spec->p, q = c.spec->q;
        CAPTURE(p, q);
        // the theorem: under q^2 < q+p+1 the verdict is always E <= LE
        if (frobenius_condition(p, q).q2_lt)
            CHECK((c.verdict == EnergyVerdict::ELess || c.verdict == EnergyVerdict::EEqual));
        if (p == 43 && q == 7) {
            saw_43_7 = true;
            CHECK(c.verdict == EnergyVerdict::ELess);
            CHECK(c.energy_value.to_double() == Catch::Approx(578.88).margin(0.01));
            CHECK(c.le_value.equals_exact(rat_sum(934992, 300)));
            bool flagged = false;
            for (const auto& f : c.flags) flagged = flagged || f.find("published remark") != std::string::npos;
            CHECK(flagged);
        }
        if (p == 3 && q == 2) {
            CHECK(c.energy_value.equals_exact(surd_sum(2, 2, 7)));
            CHECK(c.le_value.equals_exact(rat_sum(42, 5)));
            CHECK(c.provenance == "both");
        }
    }
    CHECK(saw_43_7);
}

TEST_CASE("the four remark pairs all compute to E < LE") {
    auto cases = frobenius_scan(89, 0);
    int flagged = 0;
    for (const auto& c : cases) {
        bool has_flag = false;
        for (const auto& f : c.flags) has_flag = has_flag || f.find("published remark") != std::string::npos;
        if (!has_flag) continue;
        ++flagged;
        CHECK(c.verdict == EnergyVerdict::ELess);
    }
    CHECK(flagged == 4);
}

TEST_CASE("case studies carry claims and flags") {
    auto cases = case_studies();
    REQUIRE(cases.size() == 24);
    int checked = 0;
    for (const auto& c : cases) {
        CAPTURE(c.group);
        if (c.claimed_energy) {
            CHECK(c.energy_value.equals_exact(*c.claimed_energy));
            ++checked;
        }
        if (c.claimed_energy_approx) CHECK(c.energy_value.to_double() == Catch::Approx(*c.claimed_energy_approx).margin(0.01));
        if (c.claimed_le) CHECK(c.le_value.equals_exact(*c.claimed_le));
        CHECK((c.verdict == EnergyVerdict::ELess || c.verdict == EnergyVerdict::EEqual));
        if (c.group == "A_5" || c.group == "SL(2,3)") CHECK(!c.flags.empty());
    }
    CHECK(checked >= 20);
}
