#pragma once

#include <string>

#include <json.hpp>

#include "ncg/algebraic.hpp"
#include "ncg/closed_forms.hpp"
#include "ncg/compare.hpp"
#include "ncg/integral.hpp"
#include "ncg/spectrum.hpp"

namespace ncg {

using json = nlohmann::json;

inline std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline json to_json(const AlgebraicValue& v) {
    json j;
    switch (v.kind()) {
        case AlgebraicValue::Kind::Rational:
            j["kind"] = "rational";
            j["value"] = rat_str(v.as_rational());
            break;
        case AlgebraicValue::Kind::Surd: {
            const Surd& s = v.as_surd();
            j["kind"] = "surd";
            j["a"] = rat_str(s.a);
            j["b"] = rat_str(s.b);
            j["d"] = s.d.get_str();
            break;
        }
        case AlgebraicValue::Kind::PolyRoot: {
            const PolyRoot& p = v.as_poly_root();
            j["kind"] = "polyroot";
            json coeffs = json::array();
            for (const auto& c : p.poly.c) coeffs.push_back(c.get_str());
            j["poly"] = coeffs;
            j["interval"] = {rat_str(p.lo), rat_str(p.hi)};
            break;
        }
        case AlgebraicValue::Kind::Approx:
            j["kind"] = "approx";
            j["bound"] = v.as_approx().bound;
            break;
    }
    j["approx"] = v.to_double();
    return j;
}

inline AlgebraicValue algebraic_from_json(const json& j) {
    const std::string kind = j.at("kind");
    if (kind == "rational") return AlgebraicValue::rational(parse_rat(j.at("value")));
    if (kind == "surd")
        return AlgebraicValue::surd(parse_rat(j.at("a")), parse_rat(j.at("b")), Int(std::string(j.at("d"))));
    if (kind == "polyroot") {
        std::vector<Int> c;
        for (const auto& s : j.at("poly")) c.emplace_back(std::string(s));
        return AlgebraicValue::poly_root(IPoly{std::move(c)}, parse_rat(j.at("interval")[0]),
                                         parse_rat(j.at("interval")[1]));
    }
    if (kind == "approx") return AlgebraicValue::approx(j.at("approx"), j.at("bound"));
    throw std::invalid_argument("unknown algebraic value kind: " + kind);
}

inline json to_json(const SpectrumMultiset& s) {
    json j;
    j["kind"] = (s.kind() == SpectrumKind::Adjacency) ? "adjacency" : "laplacian";
    json entries = json::array();
    for (const auto& e : s.entries()) {
        json je = to_json(e.value);
        if (e.mult.fits_slong_p())
            je["mult"] = e.mult.get_si();
        else
            je["mult"] = e.mult.get_str();
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline SpectrumMultiset spectrum_from_json(const json& j) {
    SpectrumKind kind = (j.at("kind") == "adjacency") ? SpectrumKind::Adjacency : SpectrumKind::Laplacian;
    SpectrumMultiset s(kind);
    for (const auto& je : j.at("entries")) {
        Int mult = je.at("mult").is_string() ? Int(std::string(je.at("mult"))) : Int(long(je.at("mult")));
        s.add(algebraic_from_json(je), mult);
    }
    return s;
}

inline json to_json(const ExactSum& s) {
    json j;
    if (auto av = s.to_algebraic())
        j["exact"] = av->to_string();
    else if (s.is_exact())
        j["exact"] = s.to_string();
    else
        j["exact"] = nullptr;
    j["approx"] = s.to_double();
    return j;
}

inline json to_json(const EnergyReport& r) {
    json j;
    j["E"] = to_json(r.energy);
    j["LE"] = to_json(r.laplacian_energy);
    j["mean_degree"] = rat_str(r.mean_degree);
    j["verdict"] = verdict_name(r.verdict);
    return j;
}

inline json to_json(const ComparisonCase& c) {
    json j;
    j["group"] = c.group;
    j["E"] = to_json(c.energy_value);
    j["LE"] = to_json(c.le_value);
    j["verdict"] = verdict_name(c.verdict);
    j["provenance"] = c.provenance;
    j["conditions"] = c.side_condition;
    j["flags"] = c.flags;
    if (c.claimed_energy) j["claimed_E"] = to_json(*c.claimed_energy);
    if (c.claimed_energy_approx) j["claimed_E_approx"] = *c.claimed_energy_approx;
    if (c.claimed_le) j["claimed_LE"] = to_json(*c.claimed_le);
    return j;
}

inline json to_json(const FormulaVerification& v) {
    json j;
    j["formula"] = formula_name(v.id);
    j["variant"] = variant_name(v.variant);
    j["claim"] = v.claim;
    j["status"] = status_name(v.status);
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j;
}

inline json to_json(const VerificationRecord& r) {
    json j;
    j["family"] = r.spec.to_string();
    if (r.skipped) {
        j["status"] = "skipped";
        j["reason"] = r.skip_reason;
        return j;
    }
    j["group"] = r.group_name;
    json results = json::array();
    for (const auto& v : r.results) results.push_back(to_json(v));
    j["results"] = std::move(results);
    return j;
}

/// Markdown table of verification outcomes (formula, claim, status, witness).
inline std::string verification_markdown(const std::vector<VerificationRecord>& records) {
    std::ostringstream os;
    os << "| group | formula | variant | claim | status | witness |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& r : records) {
        if (r.skipped) {
            os << "| " << r.spec.to_string() << " | - | - | - | skipped | " << r.skip_reason << " |\n";
            continue;
        }
        for (const auto& v : r.results) {
            os << "| " << r.group_name << " | " << formula_name(v.id) << " | " << variant_name(v.variant) << " | "
               << v.claim << " | " << status_name(v.status) << " | " << v.witness << " |\n";
        }
    }
    return os.str();
}

inline json to_json(const IntegralityCertificate& c) {
    json j;
    j["shape"] = c.shape.to_string();
    json coeffs = json::array();
    for (const auto& v : c.reduced_charpoly.c) coeffs.push_back(v.get_str());
    j["reduced_charpoly"] = std::move(coeffs);
    json roots = json::array();
    for (const auto& [r, m] : c.integer_roots) roots.push_back({{"root", r.get_str()}, {"mult", m}});
    j["integer_roots"] = std::move(roots);
    j["integral"] = c.integral;
    j["detail"] = c.detail;
    return j;
}

}  // namespace ncg
