#ifndef HESSLCP_DIGRAPH_HPP
#define HESSLCP_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hesslcp/basis.hpp"
#include "hesslcp/error.hpp"
#include "hesslcp/lcp.hpp"
#include "hesslcp/limits.hpp"

namespace hesslcp {

/// plain: arc when (M_B^{-1} q)_i < 0.  lex: arc when the perturbed
/// coordinate is lex-negative, which orients every hypercube edge.
enum class OrientationMode { plain, lex };

inline std::string_view to_string(OrientationMode m) { return m == OrientationMode::plain ? "plain" : "lex"; }

/// Digraph on all subsets of [n] with arcs B -> B xor {i}. Each vertex is
/// a bitmask; its out-arcs are stored as n bits, one per coordinate.
class OrientationDigraph {
public:
    using Vertex = std::uint32_t;

    OrientationDigraph(std::size_t n, OrientationMode mode) : n_(n), mode_(mode), out_(std::size_t{1} << n, 0) {}

    std::size_t n() const noexcept { return n_; }
    OrientationMode mode() const noexcept { return mode_; }
    std::size_t vertex_count() const noexcept { return out_.size(); }

    bool has_arc(Vertex from, std::size_t i) const { return (out_.at(from) >> i) & 1U; }

    /// Arc between two vertices; false when they are not hypercube neighbours.
    bool has_arc(Vertex from, Vertex to) const {
        const Vertex d = from ^ to;
        if (d == 0 || (d & (d - 1)) != 0) return false;
        return (out_.at(from) & d) != 0;
    }

    std::uint32_t out_bits(Vertex v) const { return out_.at(v); }

    std::size_t out_degree(Vertex v) const { return static_cast<std::size_t>(__builtin_popcount(out_.at(v))); }

    std::size_t arc_count() const {
        std::size_t c = 0;
        for (std::uint32_t bits : out_) c += static_cast<std::size_t>(__builtin_popcount(bits));
        return c;
    }

    void set_arc(Vertex from, std::size_t i) { out_.at(from) |= std::uint32_t{1} << i; }

private:
    std::size_t n_;
    OrientationMode mode_;
    std::vector<std::uint32_t> out_;
};

inline OrientationDigraph build_digraph(const LCPInstance& inst, OrientationMode mode = OrientationMode::lex,
                                        std::size_t limit = digraph_limit()) {
    const std::size_t n = inst.size();
    if (n == 0) throw InvalidArgument("build_digraph: n must be at least 1");
    check_size(n, limit > kMaxDigraphLimit ? kMaxDigraphLimit : limit, "build_digraph");
    OrientationDigraph g(n, mode);
    for (OrientationDigraph::Vertex v = 0; v < g.vertex_count(); ++v) {
        const Basis b = Basis::from_mask(v);
        if (mode == OrientationMode::lex) {
            const std::vector<LexSign> s = lex_signs(inst, b);
            for (std::size_t i = 0; i < n; ++i)
                if (s[i] == LexSign::negative) g.set_arc(v, i);
        } else {
            const Vector x = basic_solution(inst, b);
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] < 0) g.set_arc(v, i);
        }
    }
    return g;
}

/// Vertices with no out-arcs, ascending by mask.
inline std::vector<Basis> find_sinks(const OrientationDigraph& g) {
    std::vector<Basis> sinks;
    for (OrientationDigraph::Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.out_bits(v) == 0) sinks.push_back(Basis::from_mask(v));
    return sinks;
}

/// Some directed cycle, closed (first vertex repeated at the end), or
/// nullopt for an acyclic digraph. Iterative depth-first search from each
/// unvisited vertex in mask order; a back edge closes the cycle.
inline std::optional<std::vector<Basis>> find_cycle(const OrientationDigraph& g) {
    using Vertex = OrientationDigraph::Vertex;
    enum Color : std::uint8_t { white, grey, black };
    std::vector<Color> color(g.vertex_count(), white);
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (color[root] != white) continue;
        stack.push_back({root, 0});
        color[root] = grey;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next == g.n()) {
                color[f.v] = black;
                stack.pop_back();
                continue;
            }
            const std::size_t i = f.next++;
            if (!g.has_arc(f.v, i)) continue;
            const Vertex w = f.v ^ (Vertex{1} << i);
            if (color[w] == grey) {
                std::vector<Basis> cycle;
                std::size_t start = 0;
                while (stack[start].v != w) ++start;
                for (std::size_t s = start; s < stack.size(); ++s) cycle.push_back(Basis::from_mask(stack[s].v));
                cycle.push_back(Basis::from_mask(w));
                return cycle;
            }
            if (color[w] == white) {
                color[w] = grey;
                stack.push_back({w, 0});
            }
        }
    }
    return std::nullopt;
}

/// True iff every consecutive pair of the sequence is an arc of g. An
/// open sequence is closed implicitly (last -> first). Throws
/// MalformedCycle when the sequence is too short, leaves [n], or steps
/// between non-neighbouring subsets.
inline bool contains_cycle(const OrientationDigraph& g, const std::vector<Basis>& cycle) {
    if (cycle.size() < 2) throw MalformedCycle("a cycle needs at least 2 vertices");
    std::vector<OrientationDigraph::Vertex> v;
    v.reserve(cycle.size() + 1);
    for (const Basis& b : cycle) {
        if (b.bound() > g.n()) throw MalformedCycle(b.to_string() + " is not a subset of [" + std::to_string(g.n()) + "]");
        v.push_back(static_cast<OrientationDigraph::Vertex>(b.mask()));
    }
    if (v.front() != v.back()) v.push_back(v.front());
    if (v.size() < 3) throw MalformedCycle("a closed cycle needs at least 2 distinct steps");
    bool all = true;
    for (std::size_t s = 0; s + 1 < v.size(); ++s) {
        const auto d = v[s] ^ v[s + 1];
        if (d == 0 || (d & (d - 1)) != 0)
            throw MalformedCycle(Basis::from_mask(v[s]).to_string() + " -> " + Basis::from_mask(v[s + 1]).to_string() + " does not change exactly one index");
        all = all && g.has_arc(v[s], v[s + 1]);
    }
    return all;
}

/// DOT text: nodes in mask order labelled by 1-based index sets, arcs by
/// source mask then coordinate.
inline std::string to_dot(const OrientationDigraph& g, std::string_view name = "orientation") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    os << "  // n = " << g.n() << ", mode = " << to_string(g.mode()) << ", arcs = " << g.arc_count() << "\n";
    for (OrientationDigraph::Vertex v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"" << Basis::from_mask(v).to_string() << "\"";
        if (g.out_bits(v) == 0) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (OrientationDigraph::Vertex v = 0; v < g.vertex_count(); ++v)
        for (std::size_t i = 0; i < g.n(); ++i)
            if (g.has_arc(v, i)) os << "  v" << v << " -> v" << (v ^ (OrientationDigraph::Vertex{1} << i)) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace hesslcp

#endif // HESSLCP_DIGRAPH_HPP
