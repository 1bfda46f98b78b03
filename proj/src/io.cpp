#include "simhom/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "simhom/boundary.hpp"
#include "simhom/errors.hpp"
#include "simhom/homology.hpp"
#include "simhom/snf.hpp"

namespace simhom {

SimplicialComplex ComplexDocument::to_complex() const {
    std::map<std::string, VertexId> ids;
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        ids[vertex_names[i]] = static_cast<VertexId>(i);
    std::vector<std::vector<VertexId>> maximal;
    maximal.reserve(maximal_simplices.size());
    for (const auto& tuple : maximal_simplices) {
        std::vector<VertexId> vs;
        vs.reserve(tuple.size());
        for (const auto& name : tuple) vs.push_back(ids.at(name));
        maximal.push_back(std::move(vs));
    }
    return SimplicialComplex::from_maximal(maximal);
}

std::string ComplexDocument::serialize() const {
    std::string out;
    for (const auto& tuple : maximal_simplices) {
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i > 0) out += ' ';
            out += tuple[i];
        }
        out += '\n';
    }
    return out;
}

ComplexDocument parse_complex(const std::string& text, std::string name) {
    ComplexDocument doc;
    doc.name = std::move(name);
    std::map<std::string, VertexId> ids;
    std::set<std::vector<VertexId>> seen; // sorted id tuples, for dedup

    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tuple;
        std::string token;
        while (words >> token) tuple.push_back(token);
        if (tuple.empty()) continue;

        std::vector<VertexId> vs;
        for (const auto& t : tuple) {
            auto [it, inserted] =
                ids.emplace(t, static_cast<VertexId>(doc.vertex_names.size()));
            if (inserted) doc.vertex_names.push_back(t);
            vs.push_back(it->second);
        }
        std::vector<VertexId> sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DuplicateVertexInSimplex(line_no, "repeated vertex in simplex");
        if (seen.insert(sorted).second) doc.maximal_simplices.push_back(tuple);
    }
    return doc;
}

namespace {

ComplexDocument from_id_tuples(std::string name,
                               const std::vector<std::vector<int>>& tuples) {
    std::string text;
    for (const auto& tuple : tuples) {
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i > 0) text += ' ';
            text += "a" + std::to_string(tuple[i]);
        }
        text += '\n';
    }
    return parse_complex(text, std::move(name));
}

std::map<std::string, ComplexDocument> make_builtins() {
    std::map<std::string, ComplexDocument> b;
    b["triangle_boundary"] =
        from_id_tuples("triangle_boundary", {{0, 1}, {1, 2}, {2, 0}});
    b["filled_triangle"] = from_id_tuples("filled_triangle", {{0, 1, 2}});
    b["square_boundary"] =
        from_id_tuples("square_boundary", {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    b["triangulated_square"] =
        from_id_tuples("triangulated_square", {{0, 1, 2}, {0, 2, 3}});
    b["tetrahedron_surface"] = from_id_tuples(
        "tetrahedron_surface", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    b["solid_tetrahedron"] = from_id_tuples("solid_tetrahedron", {{0, 1, 2, 3}});
    b["two_triangles"] = from_id_tuples(
        "two_triangles", {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    b["hexagon_boundary"] = from_id_tuples(
        "hexagon_boundary", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    // Minimal 6-vertex triangulation of the projective plane: 10 triangles,
    // every pair of vertices an edge.
    b["projective_plane"] = from_id_tuples(
        "projective_plane", {{0, 1, 2},
                             {0, 2, 3},
                             {0, 3, 4},
                             {0, 4, 5},
                             {0, 1, 5},
                             {1, 2, 4},
                             {2, 3, 5},
                             {1, 3, 4},
                             {2, 4, 5},
                             {1, 3, 5}});
    // Minimal 7-vertex torus: faces (i, i+1, i+3) and (i, i+2, i+3) mod 7.
    {
        std::vector<std::vector<int>> faces;
        for (int i = 0; i < 7; ++i) {
            faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
            faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
        }
        b["torus"] = from_id_tuples("torus", faces);
    }
    return b;
}

const std::map<std::string, ComplexDocument>& builtins() {
    static const std::map<std::string, ComplexDocument> b = make_builtins();
    return b;
}

} // namespace

ComplexDocument builtin_complex(const std::string& name) {
    const auto& b = builtins();
    auto it = b.find(name);
    if (it == b.end()) {
        std::string msg = "unknown builtin '" + name + "'; valid names:";
        for (const auto& n : builtin_names()) msg += " " + n;
        throw UnknownBuiltin(msg);
    }
    return it->second;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, doc] : builtins()) out.push_back(name);
        return out;
    }();
    return names;
}

namespace {

/// Cursor over a chain literal with whitespace skipping.
class ChainLexer {
public:
    explicit ChainLexer(const std::string& text) : text_(text) {}

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char take() {
        const char c = peek();
        if (c != '\0') ++pos_;
        return c;
    }

    bool take_if(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    long long integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1])))
            throw ParseError("chain literal: expected an integer at position " +
                             std::to_string(start));
        return std::stoll(text_.substr(start, pos_ - start));
    }

    bool digit_ahead() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
    }

    bool at_end() { return peek() == '\0'; }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

Chain parse_chain(const std::string& text) {
    ChainLexer lex(text);
    if (lex.at_end()) throw ParseError("chain literal: empty input");

    bool first = true;
    std::vector<std::pair<OrientedSimplex, Int>> parts;
    while (!lex.at_end()) {
        Int coeff = 1;
        if (first) {
            if (lex.take_if('-')) coeff = -1;
            else lex.take_if('+');
        } else {
            if (lex.take_if('-')) coeff = -1;
            else if (lex.take_if('+')) coeff = 1;
            else
                throw ParseError("chain literal: expected '+' or '-' between terms");
        }
        if (lex.digit_ahead()) {
            coeff *= Int(lex.integer());
            if (!lex.take_if('*'))
                throw ParseError("chain literal: expected '*' after coefficient");
        }
        if (!lex.take_if('['))
            throw ParseError("chain literal: expected '[' to open a simplex");
        std::vector<VertexId> vs;
        do {
            const long long v = lex.integer();
            if (v < 0) throw ParseError("chain literal: vertex ids are non-negative");
            vs.push_back(static_cast<VertexId>(v));
        } while (lex.take_if(','));
        if (!lex.take_if(']'))
            throw ParseError("chain literal: expected ',' or ']' in a simplex");
        parts.emplace_back(OrientedSimplex::from_ordering(vs), coeff);
        first = false;
    }

    const int dim = parts.front().first.base.dimension();
    Chain c(dim);
    for (const auto& [s, n] : parts) {
        if (s.base.dimension() != dim)
            throw DimensionMismatch("chain literal: mixed term dimensions " +
                                    std::to_string(dim) + " and " +
                                    std::to_string(s.base.dimension()));
        c.add_term(s.base, n * s.sign);
    }
    return c;
}

std::string format_chain(const Chain& c) {
    if (c.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, n] : c.terms()) {
        const bool negative = n < 0;
        const Int mag = negative ? Int(-n) : n;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        if (mag != 1) out << mag << "*";
        out << "[";
        for (std::size_t i = 0; i < s.vertices().size(); ++i) {
            if (i > 0) out << ",";
            out << s.vertices()[i];
        }
        out << "]";
        first = false;
    }
    return out.str();
}

HomologyReport make_report(const std::string& name, const SimplicialComplex& k) {
    HomologyReport report;
    report.complex_name = name;
    report.euler = euler_characteristic(k);
    for (int p = 0; p <= k.dim(); ++p) {
        HomologySummary h = homology_group(k, p);
        HomologyReport::Entry e;
        e.p = p;
        e.betti = h.betti;
        e.torsion = std::move(h.torsion);
        e.simplex_count = k.simplex_count(p);
        e.boundary_rank = rank(boundary_matrix(k, p).entries);
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::string group_to_string(long long betti, const std::vector<Int>& torsion) {
    if (betti == 0 && torsion.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    if (betti == 1) {
        out << "Z";
        first = false;
    } else if (betti > 1) {
        out << "Z^" << betti;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) out << " + ";
        out << "Z_" << d;
        first = false;
    }
    return out.str();
}

} // namespace simhom
