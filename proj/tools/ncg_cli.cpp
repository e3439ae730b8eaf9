// Command-line interface: construction, spectra, energies, verification
// sweeps, the perfect-square table and the Frobenius scan.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncg/compare.hpp"
#include "ncg/json_io.hpp"
#include "ncg/ncgraph.hpp"

namespace {

using namespace ncg;

constexpr const char* kVersion = "1.0.0";

struct CliConfig {
    std::string format = "text";
    long cap = 4096;
    double tol = 1e-10;
    std::string output;
    bool meta = false;
};

struct FamilyDoc {
    const char* tag;
    const char* params;
    const char* description;
};

constexpr FamilyDoc kFamilies[] = {
    {"d2m", "m", "dihedral group D_2m (m >= 3)"},
    {"q4m", "m", "dicyclic group Q_4m (m >= 2)"},
    {"sd8n", "n", "semidihedral group SD_8n (n >= 2)"},
    {"qd2n", "n", "quasidihedral 2-group QD_2^n (n >= 4)"},
    {"v8n", "n", "group V_8n = <a,b : a^2n = b^4 = 1, b^-1ab^-1 = bab = a^-1>"},
    {"m2rs", "r s", "metacyclic group M_2rs = <a,b : a^r = b^2s = 1, bab^-1 = a^-1>"},
    {"u6n", "n", "group U_6n = <a,b : a^2n = b^3 = 1, a^-1ba = b^-1>"},
    {"frobenius", "p q", "Frobenius group F_{p,q} of order pq, q | p-1"},
    {"hanakiav", "n", "unitriangular group A(n,v) over GF(2^n), twisted entry (n >= 2)"},
    {"hanakiap", "p n", "unitriangular group A(n,p) over GF(p^n)"},
    {"alt", "n", "alternating group A_n (4 <= n <= 7)"},
    {"sym", "n", "symmetric group S_n (3 <= n <= 7)"},
    {"sl23", "", "special linear group SL(2,3)"},
    {"sz2", "", "Suzuki group Sz(2) = Z_5 : Z_4"},
    {"d6xz3", "", "direct product D_6 x Z_3"},
    {"a4xz2", "", "direct product A_4 x Z_2"},
    {"z2xd8", "", "direct product Z_2 x D_8"},
    {"z2xq8", "", "direct product Z_2 x Q_8"},
    {"m16", "", "modular group of order 16"},
    {"z4rz4", "", "semidirect product Z_4 : Z_4"},
    {"d8sz4", "", "central product D_8 * Z_4"},
    {"sg163", "", "the order-16 group <x,y : x^4 = y^4 = 1, xy = y^-1x^-1, xy^-1 = yx^-1>"},
};

GroupFamilySpec parse_family(const std::string& tag, const std::vector<long>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw CLI::ValidationError("family '" + tag + "' takes " + std::to_string(count) + " integer parameter(s)");
    };
    if (tag == "d2m") {
        need(1);
        return GroupFamilySpec::d2m(params[0]);
    }
    if (tag == "q4m") {
        need(1);
        return GroupFamilySpec::q4m(params[0]);
    }
    if (tag == "sd8n") {
        need(1);
        return GroupFamilySpec::sd8n(params[0]);
    }
    if (tag == "qd2n") {
        need(1);
        return GroupFamilySpec::qd2n(params[0]);
    }
    if (tag == "v8n") {
        need(1);
        return GroupFamilySpec::v8n(params[0]);
    }
    if (tag == "m2rs") {
        need(2);
        return GroupFamilySpec::m2rs(params[0], params[1]);
    }
    if (tag == "u6n") {
        need(1);
        return GroupFamilySpec::u6n(params[0]);
    }
    if (tag == "frobenius") {
        need(2);
        return GroupFamilySpec::frobenius(params[0], params[1]);
    }
    if (tag == "hanakiav") {
        need(1);
        return GroupFamilySpec::hanaki_av(params[0]);
    }
    if (tag == "hanakiap") {
        need(2);
        return GroupFamilySpec::hanaki_ap(params[0], params[1]);
    }
    if (tag == "alt") {
        need(1);
        return GroupFamilySpec::alt(params[0]);
    }
    if (tag == "sym") {
        need(1);
        return GroupFamilySpec::sym(params[0]);
    }
    if (tag == "sl23") {
        need(0);
        return GroupFamilySpec::sl23();
    }
    if (tag == "sz2") {
        need(0);
        return GroupFamilySpec::sz2();
    }
    for (const char* v : {"d6xz3", "a4xz2", "z2xd8", "z2xq8"})
        if (tag == v) {
            need(0);
            return GroupFamilySpec::named_product(tag);
        }
    for (const char* v : {"m16", "z4rz4", "d8sz4", "sg163"})
        if (tag == v) {
            need(0);
            return GroupFamilySpec::order16(tag);
        }
    throw CLI::ValidationError("unknown family '" + tag + "' (see `ncg list-families`)");
}

void emit(const CliConfig& cfg, const std::string& payload) {
    std::string full;
    if (cfg.meta) full = std::string("# ncg ") + kVersion + "\n";
    full += payload;
    if (cfg.output.empty()) {
        std::cout << full;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
    out << full;
}

struct GroupComputation {
    FiniteGroup group;
    BruteForceData data;
};

GroupComputation compute(const GroupFamilySpec& spec, const CliConfig& cfg) {
    Int order = spec.predicted_order();
    if (order > cfg.cap)
        throw std::domain_error("group order " + order.get_str() + " exceeds --cap " + std::to_string(cfg.cap));
    FiniteGroup g = construct_group(spec);
    BruteForceData d = brute_force_data(g, cfg.tol);
    return {std::move(g), std::move(d)};
}

std::string spectrum_csv(const SpectrumMultiset& s) {
    std::ostringstream os;
    os << "value,approx,mult\n";
    for (const auto& e : s.entries())
        os << csv_quote(e.value.to_string()) << "," << e.approx << "," << e.mult.get_str() << "\n";
    return os.str();
}

int run_spectrum(const GroupFamilySpec& spec, const CliConfig& cfg, SpectrumKind kind) {
    GroupComputation c = compute(spec, cfg);
    const bool adjacency = (kind == SpectrumKind::Adjacency);
    const SpectrumMultiset& s = adjacency ? c.data.adjacency : c.data.laplacian;
    if (cfg.format == "json") {
        json j;
        j["group"] = c.group.name();
        j["vertices"] = c.data.graph.vertex_count();
        j["edges"] = c.data.graph.edges.get_str();
        j["spectrum"] = to_json(s);
        j[adjacency ? "E" : "LE"] = to_json(adjacency ? c.data.energy_value : c.data.le_value);
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        emit(cfg, spectrum_csv(s));
    } else {
        std::ostringstream os;
        os << c.group.name() << ": " << c.data.graph.vertex_count() << " vertices, " << c.data.graph.edges.get_str()
           << " edges\n";
        os << (adjacency ? "spec" : "lspec") << " = " << s.to_string() << "\n";
        const ExactSum& en = adjacency ? c.data.energy_value : c.data.le_value;
        os << (adjacency ? "E" : "LE") << " = " << en.to_string() << " ~ " << en.to_double() << "\n";
        emit(cfg, os.str());
    }
    return 0;
}

int run_energy(const GroupFamilySpec& spec, const CliConfig& cfg) {
    GroupComputation c = compute(spec, cfg);
    EnergyReport rep = make_energy_report(c.data.adjacency, c.data.laplacian, 2 * c.data.graph.edges,
                                          Int(c.data.graph.vertex_count()));
    if (cfg.format == "json") {
        json j = to_json(rep);
        j["group"] = c.group.name();
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << c.group.name() << ":\n";
        os << "E  = " << rep.energy.to_string() << " ~ " << rep.energy.to_double() << "\n";
        os << "LE = " << rep.laplacian_energy.to_string() << " ~ " << rep.laplacian_energy.to_double() << "\n";
        os << "mean degree = " << rat_str(rep.mean_degree) << "\n";
        os << "verdict: " << verdict_name(rep.verdict) << "\n";
        emit(cfg, os.str());
    }
    return 0;
}

int run_compare(const GroupFamilySpec& spec, const CliConfig& cfg) {
    ComparisonCase c = compare_group(spec, cfg.cap);
    if (cfg.format == "json") {
        emit(cfg, to_json(c).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << c.group << " [" << c.provenance << "]\n";
        os << "E  = " << c.energy_value.to_string() << " ~ " << c.energy_value.to_double() << "\n";
        os << "LE = " << c.le_value.to_string() << " ~ " << c.le_value.to_double() << "\n";
        os << "verdict: " << verdict_name(c.verdict) << "\n";
        if (!c.side_condition.empty()) os << "condition: " << c.side_condition << "\n";
        for (const auto& f : c.flags) os << "flag: " << f << "\n";
        emit(cfg, os.str());
    }
    return 0;
}

std::string verification_text(const VerificationRecord& rec) {
    std::ostringstream os;
    if (rec.skipped) {
        os << rec.spec.to_string() << ": skipped (" << rec.skip_reason << ")\n";
        return os.str();
    }
    os << rec.group_name << ":\n";
    for (const auto& r : rec.results) {
        os << "  " << formula_name(r.id) << " [" << variant_name(r.variant) << "] " << status_name(r.status);
        if (!r.witness.empty()) os << " -- " << r.witness;
        os << "\n";
    }
    return os.str();
}

int run_verify(bool all, const GroupFamilySpec* spec, const CliConfig& cfg) {
    std::vector<VerificationRecord> records;
    if (all) {
        for (const auto& s : default_verification_sweep()) records.push_back(verify_catalog(s, cfg.cap));
    } else {
        records.push_back(verify_catalog(*spec, cfg.cap));
    }
    bool any_ran = false;
    for (const auto& r : records) any_ran = any_ran || !r.skipped;
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& r : records) j.push_back(to_json(r));
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "markdown") {
        emit(cfg, verification_markdown(records));
    } else {
        std::ostringstream os;
        for (const auto& r : records) os << verification_text(r);
        long confirmed = 0, refuted = 0, corrected = 0;
        for (const auto& r : records)
            for (const auto& v : r.results) {
                if (v.status == VerifyStatus::Confirmed) ++confirmed;
                if (v.status == VerifyStatus::Refuted) ++refuted;
                if (v.status == VerifyStatus::CorrectedVariantConfirmed) ++corrected;
            }
        os << "summary: " << confirmed << " confirmed, " << refuted << " refuted as printed, " << corrected
           << " corrected variants confirmed\n";
        emit(cfg, os.str());
    }
    return any_ran ? 0 : 3;
}

int run_integral_seq(int count, int branch, long scan, const CliConfig& cfg) {
    std::vector<Int> seq = (branch == 0) ? merged_sequence(count) : branch_sequence(branch, count);
    std::optional<std::vector<long>> scan_hits;
    if (scan > 0) scan_hits = exhaustive_square_scan(scan);
    if (cfg.format == "json") {
        json j;
        json terms = json::array();
        for (const auto& t : seq) terms.push_back(t.get_str());
        j["branch"] = branch == 0 ? "merged" : std::to_string(branch);
        j["terms"] = std::move(terms);
        if (scan_hits) {
            json hits = json::array();
            for (long h : *scan_hits) hits.push_back(h);
            j["scan_bound"] = scan;
            j["scan_hits"] = std::move(hits);
        }
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& t : seq) os << t.get_str() << "\n";
        if (scan_hits) {
            os << "exhaustive scan below " << scan << " found " << scan_hits->size() << " solutions:";
            for (long h : *scan_hits) os << " " << h;
            os << "\n";
        }
        emit(cfg, os.str());
    }
    return 0;
}

int run_square_table(int rows, const CliConfig& cfg) {
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& n : merged_sequence(rows)) {
            auto w = square_witnesses(n);
            json row;
            row["n"] = n.get_str();
            row["sqrt(n-1)"] = w->sqrt_n_minus_1.get_str();
            row["sqrt(5n-1)"] = w->sqrt_5n_minus_1.get_str();
            if (n % 2 == 0) row["n/2"] = Int(n / 2).get_str();
            j.push_back(std::move(row));
        }
        emit(cfg, j.dump(2) + "\n");
    } else {
        emit(cfg, square_table_csv(rows));
    }
    return 0;
}

int run_scan_frobenius(long pmax, const CliConfig& cfg) {
    auto cases = frobenius_scan(pmax, cfg.cap < 200 ? cfg.cap : 200);
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& c : cases) j.push_back(to_json(c));
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "p,q,E,LE,verdict,condition,flags\n";
        for (const auto& c : cases) {
            os << c.spec->p << "," << c.spec->q << "," << c.energy_value.to_double() << "," << c.le_value.to_double()
               << "," << verdict_name(c.verdict) << "," << csv_quote(c.side_condition) << ",";
            std::string flags;
            for (const auto& f : c.flags) flags += (flags.empty() ? "" : "; ") + f;
            os << csv_quote(flags) << "\n";
        }
        emit(cfg, os.str());
    } else {
        std::ostringstream os;
        for (const auto& c : cases) {
            os << c.group << ": E = " << c.energy_value.to_string() << " ~ " << c.energy_value.to_double()
               << ", LE = " << c.le_value.to_string() << " ~ " << c.le_value.to_double() << ", "
               << verdict_name(c.verdict) << " (" << c.side_condition << ")";
            for (const auto& f : c.flags) os << "\n    flag: " << f;
            os << "\n";
        }
        emit(cfg, os.str());
    }
    return 0;
}

int run_export(const GroupFamilySpec& spec, bool edges, bool matrix, const CliConfig& cfg) {
    if (edges == matrix) throw CLI::ValidationError("export needs exactly one of --edges / --matrix");
    Int order = spec.predicted_order();
    if (order > cfg.cap)
        throw std::domain_error("group order " + order.get_str() + " exceeds --cap " + std::to_string(cfg.cap));
    NonCommutingGraph gr = build_graph(construct_group(spec));
    if (cfg.format == "json") {
        json j;
        j["group"] = gr.source;
        j["labels"] = gr.labels;
        if (edges) {
            json e = json::array();
            for (int u = 0; u < gr.vertex_count(); ++u)
                for (int v = u + 1; v < gr.vertex_count(); ++v)
                    if (gr.adjacent(u, v)) e.push_back({u, v});
            j["edges"] = std::move(e);
        } else {
            json rows = json::array();
            for (int u = 0; u < gr.vertex_count(); ++u) {
                json row = json::array();
                for (int v = 0; v < gr.vertex_count(); ++v) row.push_back(gr.adjacent(u, v) ? 1 : 0);
                rows.push_back(std::move(row));
            }
            j["matrix"] = std::move(rows);
        }
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    emit(cfg, edges ? edge_list_text(gr) : adjacency_csv(gr));
    return 0;
}

int run_list_families(const CliConfig& cfg) {
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& f : kFamilies)
            j.push_back({{"tag", f.tag}, {"params", f.params}, {"description", f.description}});
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& f : kFamilies) {
            os << f.tag;
            if (f.params[0]) os << " <" << f.params << ">";
            os << "  -  " << f.description << "\n";
        }
        emit(cfg, os.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-commuting graphs of finite groups: spectra, energies, verification"};
    app.fallthrough(true);
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
    app.add_option("--cap", cfg.cap, "max group order for brute-force computation")->check(CLI::Range(6L, 1000000L));
    app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::Range(1e-15, 1e-4));
    app.add_option("--output", cfg.output, "write output to file");
    app.add_flag("--meta", cfg.meta, "prepend a version header");

    std::string family;
    std::vector<long> params;
    bool verify_all = false, export_edges = false, export_matrix = false;
    int seq_count = 10, seq_branch = 0, table_rows = 28;
    long scan_bound = 0, pmax = 200;

    auto* list_cmd = app.add_subcommand("list-families", "list supported group families");
    auto add_family_positionals = [&](CLI::App* cmd) {
        cmd->add_option("family", family, "family tag (see list-families)")->required();
        cmd->add_option("params", params, "family parameters");
    };
    auto* spectrum_cmd = app.add_subcommand("spectrum", "exact adjacency spectrum and energy");
    add_family_positionals(spectrum_cmd);
    auto* laplacian_cmd = app.add_subcommand("laplacian", "exact Laplacian spectrum and Laplacian energy");
    add_family_positionals(laplacian_cmd);
    auto* energy_cmd = app.add_subcommand("energy", "E, LE and the comparison verdict");
    add_family_positionals(energy_cmd);
    auto* compare_cmd = app.add_subcommand("compare", "closed-form vs brute-force E/LE comparison");
    add_family_positionals(compare_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "check published formulas against brute force");
    verify_cmd->add_flag("--all", verify_all, "run the whole agreement sweep");
    verify_cmd->add_option("family", family, "family tag");
    verify_cmd->add_option("params", params, "family parameters");
    auto* seq_cmd = app.add_subcommand("integral-seq", "terms of the perfect-square recurrences");
    seq_cmd->add_option("--count", seq_count, "number of terms")->check(CLI::Range(0, 200));
    seq_cmd->add_option("--branch", seq_branch, "branch 1-3, or 0 for the merged sequence")->check(CLI::Range(0, 3));
    seq_cmd->add_option("--scan", scan_bound, "exhaustively confirm no solutions are missed below this bound");
    auto* table_cmd = app.add_subcommand("square-table", "CSV table n, sqrt(n-1), sqrt(5n-1), n/2");
    table_cmd->add_option("--rows", table_rows, "number of rows")->check(CLI::Range(1, 200));
    auto* scan_cmd = app.add_subcommand("scan-frobenius", "E vs LE over all F_{p,q} with p <= pmax");
    scan_cmd->add_option("--pmax", pmax, "largest p")->check(CLI::Range(3L, 100000L));
    auto* export_cmd = app.add_subcommand("export", "export the non-commuting graph");
    add_family_positionals(export_cmd);
    export_cmd->add_flag("--edges", export_edges, "edge list, one tab-separated pair per line");
    export_cmd->add_flag("--matrix", export_matrix, "adjacency matrix as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (list_cmd->parsed()) return run_list_families(cfg);
        if (spectrum_cmd->parsed()) return run_spectrum(parse_family(family, params), cfg, SpectrumKind::Adjacency);
        if (laplacian_cmd->parsed()) return run_spectrum(parse_family(family, params), cfg, SpectrumKind::Laplacian);
        if (energy_cmd->parsed()) return run_energy(parse_family(family, params), cfg);
        if (compare_cmd->parsed()) return run_compare(parse_family(family, params), cfg);
        if (verify_cmd->parsed()) {
            if (verify_all) return run_verify(true, nullptr, cfg);
            if (family.empty()) throw CLI::ValidationError("verify needs --all or a family");
            GroupFamilySpec spec = parse_family(family, params);
            return run_verify(false, &spec, cfg);
        }
        if (seq_cmd->parsed()) return run_integral_seq(seq_count, seq_branch, scan_bound, cfg);
        if (table_cmd->parsed()) return run_square_table(table_rows, cfg);
        if (scan_cmd->parsed()) return run_scan_frobenius(pmax, cfg);
        if (export_cmd->parsed()) return run_export(parse_family(family, params), export_edges, export_matrix, cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
