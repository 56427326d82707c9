#include "bsassign/bsgraph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bsassign/errors.hpp"

namespace bsassign {

bool is_gkm(const Word& word) {
    std::set<int> seen;
    for (int l : word.letters)
        if (!seen.insert(l).second)
            return false;
    return true;
}

BSGraph BSGraph::build(LieType lt, Word word) {
    BSGraph g;
    g.lt_ = lt;
    g.cm_ = cartan_matrix(lt);
    for (int l : word.letters)
        if (l < 1 || l > lt.rank)
            throw std::invalid_argument("word letter " + std::to_string(l) + " out of range for " + lt.name());
    if (word.size() > 20)
        throw std::invalid_argument("word length " + std::to_string(word.size()) + " exceeds the supported 20");
    g.word_ = std::move(word);
    const int d = g.word_.size();
    const int r = lt.rank;
    g.isotropy_.resize(std::size_t{1} << d);
    for (VertexMask v = 0; v < g.vertex_count(); ++v) {
        auto& weights = g.isotropy_[v];
        weights.reserve(d);
        for (int t = 1; t <= d; ++t) {
            // s_{i_d}^{e_d} ... s_{i_t}^{e_t} alpha_{i_t}: innermost first.
            Weight w = Weight::simple_root(g.word_.letters[t - 1], r);
            for (int k = t; k <= d; ++k)
                if (v & (VertexMask{1} << (k - 1)))
                    w = reflect(g.word_.letters[k - 1], w, g.cm_);
            weights.push_back(std::move(w));
        }
    }
    return g;
}

std::shared_ptr<const BSGraph> BSGraph::build_shared(LieType lt, Word word) {
    return std::make_shared<const BSGraph>(build(lt, std::move(word)));
}

const std::vector<Weight>& BSGraph::isotropy_weights(VertexMask v) const {
    assert(v < vertex_count());
    return isotropy_[v];
}

const Weight& BSGraph::edge_label(VertexMask from, int position) const {
    assert(position >= 1 && position <= dim());
    return isotropy_[from][position - 1];
}

std::vector<Edge> BSGraph::edges() const {
    std::vector<Edge> out;
    out.reserve((vertex_count() / 2) * dim());
    for (VertexMask v = 0; v < vertex_count(); ++v) {
        for (int t = 1; t <= dim(); ++t) {
            VertexMask w = v ^ (VertexMask{1} << (t - 1));
            if (v < w)
                out.push_back(Edge{v, w, t});
        }
    }
    return out;
}

std::vector<Weight> BSGraph::label_set() const {
    std::vector<Weight> out;
    for (VertexMask v = 0; v < vertex_count(); ++v) {
        for (const auto& w : isotropy_[v]) {
            Weight n = sign_normalized(w);
            if (std::find(out.begin(), out.end(), n) == out.end())
                out.push_back(std::move(n));
        }
    }
    return out;
}

std::string BSGraph::vertex_name(VertexMask v) const {
    if (dim() == 0)
        return "[]";
    bool digits = true;
    for (int l : word_.letters)
        digits = digits && l <= 9;
    std::ostringstream os;
    for (int t = 1; t <= dim(); ++t) {
        if (!digits && t > 1)
            os << ",";
        os << ((v & (VertexMask{1} << (t - 1))) ? word_.letters[t - 1] : 0);
    }
    return os.str();
}

std::optional<VertexMask> BSGraph::parse_vertex(const std::string& name) const {
    if (dim() == 0)
        return name == "[]" || name.empty() ? std::optional<VertexMask>(0) : std::nullopt;
    std::vector<std::string> parts;
    if (name.find(',') != std::string::npos) {
        std::istringstream is(name);
        std::string part;
        while (std::getline(is, part, ','))
            parts.push_back(part);
    } else {
        for (char c : name)
            parts.emplace_back(1, c);
    }
    if (static_cast<int>(parts.size()) != dim())
        return std::nullopt;
    VertexMask v = 0;
    for (int t = 1; t <= dim(); ++t) {
        const std::string& p = parts[t - 1];
        if (p == "0")
            continue;
        if (p == std::to_string(word_.letters[t - 1]))
            v |= VertexMask{1} << (t - 1);
        else
            return std::nullopt;
    }
    return v;
}

bool is_gkm_by_collinearity(const BSGraph& g) {
    for (VertexMask v = 0; v < g.vertex_count(); ++v) {
        const auto& ws = g.isotropy_weights(v);
        for (std::size_t a = 0; a < ws.size(); ++a)
            for (std::size_t b = a + 1; b < ws.size(); ++b)
                if (collinear(ws[a], ws[b]))
                    return false;
    }
    return true;
}

std::string export_dot(const BSGraph& g, const Polarization* orientation) {
    if (orientation && !is_polarizing(*orientation, g.label_set()))
        throw NotPolarizing("covector vanishes on an edge label of the graph");
    std::ostringstream os;
    os << (orientation ? "digraph" : "graph") << " bs {\n";
    for (VertexMask v = 0; v < g.vertex_count(); ++v)
        os << "  \"" << g.vertex_name(v) << "\";\n";
    for (const Edge& e : g.edges()) {
        const Weight& label = g.edge_label(e.from, e.position);
        if (orientation) {
            bool up = eval(label, *orientation) > 0;
            VertexMask src = up ? e.from : e.to;
            VertexMask dst = up ? e.to : e.from;
            os << "  \"" << g.vertex_name(src) << "\" -> \"" << g.vertex_name(dst) << "\" [label=\""
               << to_text(from_weight(g.edge_label(src, e.position))) << "\"];\n";
        } else {
            os << "  \"" << g.vertex_name(e.from) << "\" -- \"" << g.vertex_name(e.to) << "\" [label=\""
               << to_text(from_weight(label)) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace bsassign
