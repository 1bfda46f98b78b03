#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simhom/boundary.hpp"
#include "simhom/errors.hpp"
#include "simhom/homology.hpp"
#include "simhom/io.hpp"
#include "simhom/simplex.hpp"
#include "simhom/snf.hpp"

namespace simhom {

namespace {

using json = nlohmann::ordered_json;

/// --file/--builtin pair shared by the complex-consuming subcommands.
struct ComplexSource {
    std::string file;
    std::string builtin;

    void attach(CLI::App* cmd) {
        auto* f = cmd->add_option("--file", file, "complex file (maximal simplices)");
        auto* b = cmd->add_option("--builtin", builtin, "builtin complex name");
        f->excludes(b);
    }

    ComplexDocument load() const {
        if (!builtin.empty()) return builtin_complex(builtin);
        if (file.empty())
            throw CLI::ValidationError("exactly one of --file or --builtin is required");
        std::ifstream in(file);
        if (!in)
            throw CLI::ValidationError("cannot open complex file '" + file + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string stem = file;
        if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
            stem.erase(0, slash + 1);
        if (auto dot = stem.find_last_of('.'); dot != std::string::npos)
            stem.erase(dot);
        return parse_complex(buffer.str(), stem);
    }
};

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

json torsion_to_json(const std::vector<Int>& torsion) {
    json arr = json::array();
    for (const Int& d : torsion) arr.push_back(to_ll(d));
    return arr;
}

json simplex_to_json(const Simplex& s) {
    json arr = json::array();
    for (VertexId v : s.vertices()) arr.push_back(v);
    return arr;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_homology(const ComplexSource& src, std::optional<int> dim, bool as_json) {
    const ComplexDocument doc = src.load();
    const HomologyReport report = make_report(doc.name, doc.to_complex());
    if (as_json) {
        json groups = json::array();
        for (const auto& e : report.entries) {
            if (dim && e.p != *dim) continue;
            groups.push_back(
                {{"p", e.p}, {"betti", e.betti}, {"torsion", torsion_to_json(e.torsion)}});
        }
        emit({{"complex", report.complex_name}, {"groups", groups}, {"euler", report.euler}});
        return 0;
    }
    std::cout << "complex: " << report.complex_name << "\n";
    for (const auto& e : report.entries) {
        if (dim && e.p != *dim) continue;
        std::cout << "H_" << e.p << " = " << group_to_string(e.betti, e.torsion)
                  << "  (" << e.p << "-simplices: " << e.simplex_count
                  << ", boundary rank: " << e.boundary_rank << ")\n";
    }
    std::cout << "euler characteristic: " << report.euler << "\n";
    return 0;
}

int cmd_betti(const ComplexSource& src, std::optional<int> dim, bool as_json) {
    const ComplexDocument doc = src.load();
    const SimplicialComplex k = doc.to_complex();
    std::vector<std::pair<int, long long>> values;
    if (dim) {
        values.emplace_back(*dim, homology_group(k, *dim).betti);
    } else {
        for (const HomologySummary& h : all_homology(k)) values.emplace_back(h.p, h.betti);
    }
    if (as_json) {
        json betti = json::array();
        for (const auto& [p, b] : values) betti.push_back(b);
        emit({{"complex", doc.name}, {"betti", betti}});
        return 0;
    }
    for (const auto& [p, b] : values)
        std::cout << "beta_" << p << " = " << b << "\n";
    return 0;
}

int cmd_boundary_matrix(const ComplexSource& src, int dim, bool as_json) {
    const ComplexDocument doc = src.load();
    const BoundaryMatrix m = boundary_matrix(doc.to_complex(), dim);
    if (as_json) {
        json rows = json::array();
        for (const Simplex& s : m.row_simplices) rows.push_back(simplex_to_json(s));
        json cols = json::array();
        for (const Simplex& s : m.col_simplices) cols.push_back(simplex_to_json(s));
        json triplets = json::array();
        for (const auto& t : m.entries.triplets())
            triplets.push_back({t.row, t.col, to_ll(t.value)});
        emit({{"complex", doc.name},
              {"p", dim},
              {"rows", rows},
              {"cols", cols},
              {"triplets", triplets}});
        return 0;
    }
    std::cout << "# boundary matrix of dimension " << dim << ": "
              << m.entries.rows() << " x " << m.entries.cols() << "\n";
    auto label = [](const Simplex& s) {
        std::string out = "[";
        for (std::size_t i = 0; i < s.vertices().size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(s.vertices()[i]);
        }
        return out + "]";
    };
    std::cout << "# rows:";
    for (const Simplex& s : m.row_simplices) std::cout << " " << label(s);
    std::cout << "\n# cols:";
    for (const Simplex& s : m.col_simplices) std::cout << " " << label(s);
    std::cout << "\n";
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        for (std::size_t j = 0; j < m.entries.cols(); ++j) {
            if (j > 0) std::cout << " ";
            std::cout << m.entries(i, j);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_parity(const std::vector<int>& ordering, bool as_json) {
    const std::size_t inversions = inversion_count(ordering);
    const int sign = inversions % 2 == 0 ? +1 : -1;
    if (as_json) {
        emit({{"parity", sign}, {"inversions", inversions}});
        return 0;
    }
    std::cout << (sign > 0 ? "+1" : "-1") << " (" << (sign > 0 ? "even" : "odd")
              << ", " << inversions << (inversions == 1 ? " inversion" : " inversions")
              << ")\n";
    return 0;
}

int cmd_check_cycle(const ComplexSource& src, const std::string& chain, bool as_json) {
    const bool cycle = is_cycle(src.load().to_complex(), parse_chain(chain));
    if (as_json) emit({{"cycle", cycle}});
    else std::cout << (cycle ? "true" : "false") << "\n";
    return 0;
}

int cmd_check_boundary(const ComplexSource& src, const std::string& chain, bool as_json) {
    const auto witness = boundary_witness(src.load().to_complex(), parse_chain(chain));
    if (as_json) {
        json j = {{"boundary", witness.has_value()}};
        j["witness"] = witness ? json(format_chain(*witness)) : json(nullptr);
        emit(j);
        return 0;
    }
    if (witness) std::cout << "true\nwitness: " << format_chain(*witness) << "\n";
    else std::cout << "false\n";
    return 0;
}

int cmd_homologous(const ComplexSource& src, const std::string& chain1,
                   const std::string& chain2, bool as_json) {
    const SimplicialComplex k = src.load().to_complex();
    const Chain c1 = parse_chain(chain1);
    const Chain c2 = parse_chain(chain2);
    if (c1.dimension() != c2.dimension())
        throw DimensionMismatch("homologous: chains have dimensions " +
                                std::to_string(c1.dimension()) + " and " +
                                std::to_string(c2.dimension()));
    const bool result = homologous(k, c1, c2);
    if (as_json) emit({{"homologous", result}});
    else std::cout << (result ? "true" : "false") << "\n";
    return 0;
}

int cmd_carried_by(const ComplexSource& src, const std::string& chain, bool as_json) {
    const bool carried = carried_by(parse_chain(chain), src.load().to_complex());
    if (as_json) emit({{"carried", carried}});
    else std::cout << (carried ? "true" : "false") << "\n";
    return 0;
}

int cmd_list_builtins(bool as_json) {
    if (as_json) {
        json names = json::array();
        for (const auto& n : builtin_names()) names.push_back(n);
        emit({{"builtins", names}});
        return 0;
    }
    for (const auto& n : builtin_names()) std::cout << n << "\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"simplicial homology groups over the integers"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    ComplexSource hom_src, betti_src, bm_src, cyc_src, bnd_src, homo_src, carry_src;
    std::optional<int> hom_dim, betti_dim;
    int bm_dim = 0;
    std::vector<int> parity_entries;
    std::string cyc_chain, bnd_chain, homo_chain1, homo_chain2, carry_chain;

    auto* hom = app.add_subcommand("homology", "Betti numbers and torsion per dimension");
    hom_src.attach(hom);
    hom->add_option("--dim", hom_dim, "restrict to one dimension");

    auto* bet = app.add_subcommand("betti", "Betti numbers only");
    betti_src.attach(bet);
    bet->add_option("--dim", betti_dim, "restrict to one dimension");

    auto* bm = app.add_subcommand("boundary-matrix", "integer matrix of the boundary map");
    bm_src.attach(bm);
    bm->add_option("--dim", bm_dim, "source dimension p of the map")->required();

    auto* par = app.add_subcommand("parity", "sign of a permutation of 0..p");
    par->add_option("entries", parity_entries, "permutation in list form")
        ->required()
        ->expected(-1);

    auto* cyc = app.add_subcommand("check-cycle", "is the chain a cycle?");
    cyc_src.attach(cyc);
    cyc->add_option("chain", cyc_chain, "chain literal, e.g. '3*[0,1] - [1,2]'")->required();

    auto* bnd = app.add_subcommand("check-boundary", "is the chain a boundary? (prints witness)");
    bnd_src.attach(bnd);
    bnd->add_option("chain", bnd_chain, "chain literal")->required();

    auto* homo = app.add_subcommand("homologous", "do two chains differ by a boundary?");
    homo_src.attach(homo);
    homo->add_option("chain1", homo_chain1, "first chain literal")->required();
    homo->add_option("chain2", homo_chain2, "second chain literal")->required();

    auto* carry = app.add_subcommand("carried-by", "is the chain carried by the complex?");
    carry_src.attach(carry);
    carry->add_option("chain", carry_chain, "chain literal")->required();

    auto* lsb = app.add_subcommand("list-builtins", "names of the builtin complexes");

    // Let the global --json flag appear after the subcommand name too.
    for (CLI::App* sub : {hom, bet, bm, par, cyc, bnd, homo, carry, lsb})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (hom->parsed()) return cmd_homology(hom_src, hom_dim, as_json);
        if (bet->parsed()) return cmd_betti(betti_src, betti_dim, as_json);
        if (bm->parsed()) return cmd_boundary_matrix(bm_src, bm_dim, as_json);
        if (par->parsed()) return cmd_parity(parity_entries, as_json);
        if (cyc->parsed()) return cmd_check_cycle(cyc_src, cyc_chain, as_json);
        if (bnd->parsed()) return cmd_check_boundary(bnd_src, bnd_chain, as_json);
        if (homo->parsed()) return cmd_homologous(homo_src, homo_chain1, homo_chain2, as_json);
        if (carry->parsed()) return cmd_carried_by(carry_src, carry_chain, as_json);
        return cmd_list_builtins(as_json);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UnknownBuiltin& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace simhom
