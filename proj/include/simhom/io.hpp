#pragma once

#include <string>
#include <vector>

#include "simhom/chain.hpp"
#include "simhom/complex.hpp"
#include "simhom/integer.hpp"

namespace simhom {

/// A complex as interchange data: named vertices and the maximal simplices
/// that generate it. Vertex names are arbitrary tokens and map to ids by
/// first appearance, so a document round-trips losslessly through text.
struct ComplexDocument {
    std::string name;
    std::vector<std::vector<std::string>> maximal_simplices;
    std::vector<std::string> vertex_names;

    SimplicialComplex to_complex() const;

    /// One maximal simplex per line, vertices separated by single spaces.
    std::string serialize() const;

    bool operator==(const ComplexDocument&) const = default;
};

/// Parses the complex file format: one maximal simplex per line as
/// whitespace-separated vertex tokens, `#` starts a comment, blank lines
/// ignored. Identical simplices (as vertex sets) are deduplicated keeping
/// the first occurrence. Throws DuplicateVertexInSimplex with the line
/// number on a repeated vertex within a line.
ComplexDocument parse_complex(const std::string& text, std::string name = "");

/// Built-in example complexes (triangle_boundary, filled_triangle,
/// square_boundary, triangulated_square, tetrahedron_surface,
/// solid_tetrahedron, two_triangles, hexagon_boundary, projective_plane,
/// torus). Throws UnknownBuiltin with the valid names for anything else.
ComplexDocument builtin_complex(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Parses the chain literal grammar
///   chain := term (("+"|"-") term)*
///   term  := [int "*"] "[" v ("," v)* "]"
/// where v are vertex ids; whitespace-insensitive. Bracket tuples may be in
/// any vertex order and are canonicalized, e.g. "[2,0]" contributes
/// -1 * [0,2]. All terms must share one dimension.
Chain parse_chain(const std::string& text);

/// Renders a chain back in the literal grammar ("0" for the zero chain).
std::string format_chain(const Chain& c);

/// Per-dimension homology data of one complex, ready for reporting.
/// boundary_rank is the rank of the boundary map out of dimension p, and
/// euler is the alternating simplex-count sum.
struct HomologyReport {
    struct Entry {
        int p = 0;
        long long betti = 0;
        std::vector<Int> torsion;
        std::size_t simplex_count = 0;
        std::size_t boundary_rank = 0;
    };

    std::string complex_name;
    std::vector<Entry> entries; // sorted by p ascending
    long long euler = 0;
};

HomologyReport make_report(const std::string& name, const SimplicialComplex& k);

/// "Z^b + Z_d1 + ..." notation for one group ("0" when trivial).
std::string group_to_string(long long betti, const std::vector<Int>& torsion);

/// Command-line entry point; returns the process exit code
/// (0 success, 1 computation-domain error, 2 usage error).
int run_cli(int argc, const char* const* argv);

} // namespace simhom
