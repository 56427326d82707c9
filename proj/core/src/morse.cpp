#include "bsassign/morse.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace bsassign {

OrientedGraph::OrientedGraph(std::shared_ptr<const BSGraph> g, Polarization xi)
    : graph_(std::move(g)), xi_(std::move(xi)) {}

OrientedGraph OrientedGraph::orient(std::shared_ptr<const BSGraph> g, Polarization xi) {
    if (xi.rank() != g->lie_type().rank)
        throw std::invalid_argument("covector has " + std::to_string(xi.rank()) + " values, expected " +
                                    std::to_string(g->lie_type().rank));
    if (!is_polarizing(xi, g->label_set()))
        throw NotPolarizing("covector vanishes on an edge label of the graph");
    OrientedGraph og(std::move(g), std::move(xi));

    // Kahn's algorithm; the ascending orientation is acyclic, so the sort
    // must consume every vertex.
    const BSGraph& graph = og.graph();
    const std::size_t n = graph.vertex_count();
    std::vector<int> indegree(n, 0);
    for (VertexMask v = 0; v < n; ++v)
        for (int t = 1; t <= graph.dim(); ++t)
            if (og.ascending(v, t))
                ++indegree[v ^ (VertexMask{1} << (t - 1))];
    std::deque<VertexMask> queue;
    for (VertexMask v = 0; v < n; ++v)
        if (indegree[v] == 0)
            queue.push_back(v);
    while (!queue.empty()) {
        VertexMask v = queue.front();
        queue.pop_front();
        og.topo_.push_back(v);
        for (VertexMask w : og.successors(v))
            if (--indegree[w] == 0)
                queue.push_back(w);
    }
    if (og.topo_.size() != n)
        throw std::logic_error("ascending orientation has a cycle");
    return og;
}

bool OrientedGraph::ascending(VertexMask from, int position) const {
    return eval(graph_->edge_label(from, position), xi_) > 0;
}

std::vector<VertexMask> OrientedGraph::successors(VertexMask v) const {
    std::vector<VertexMask> out;
    for (int t = 1; t <= graph_->dim(); ++t)
        if (ascending(v, t))
            out.push_back(v ^ (VertexMask{1} << (t - 1)));
    return out;
}

std::vector<VertexMask> flow_up(const OrientedGraph& og, VertexMask p) {
    std::vector<bool> seen(og.graph().vertex_count(), false);
    std::deque<VertexMask> queue{p};
    seen[p] = true;
    while (!queue.empty()) {
        VertexMask v = queue.front();
        queue.pop_front();
        for (VertexMask w : og.successors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<VertexMask> out;
    for (VertexMask v = 0; v < seen.size(); ++v)
        if (seen[v])
            out.push_back(v);
    return out;
}

FlowupGenerators flowup_generators(const BasisMatrix& basis, const OrientedGraph& og, VertexMask p,
                                   GroebnerOptions opts) {
    assert(basis.kind == BasisKind::Assignment);
    assert(basis.graph.get() == og.graph_ptr().get());
    const BSGraph& g = *basis.graph;
    const int r = g.lie_type().rank;
    const std::size_t n = g.vertex_count();

    std::vector<VertexMask> up = flow_up(og, p);
    std::vector<VertexMask> complement;
    for (VertexMask v = 0; v < n; ++v)
        if (!std::binary_search(up.begin(), up.end(), v))
            complement.push_back(v);

    // F_J = column J of A^I restricted to the complement rows.
    std::vector<ModuleElement> restricted;
    restricted.reserve(n);
    for (VertexMask j = 0; j < n; ++j) {
        ModuleElement f;
        f.reserve(complement.size());
        for (VertexMask v : complement)
            f.push_back(basis.mat.at(v, j));
        restricted.push_back(std::move(f));
    }

    FlowupGenerators out;
    out.syzygy_coefficients = syzygies(restricted, complement.size(), r, opts);
    for (const ModuleElement& syz : out.syzygy_coefficients) {
        std::vector<Polynomial> values(n, Polynomial(r));
        for (std::size_t v = 0; v < n; ++v)
            for (VertexMask j = 0; j < n; ++j)
                if (!syz[j].is_zero())
                    values[v] = values[v] + basis.mat.at(v, j) * syz[j];
        for (VertexMask v : complement)
            if (!values[v].is_zero())
                throw std::logic_error("flow-up generator does not vanish off the flow-up");
        out.assignments.push_back(Assignment::checked(basis.graph, std::move(values)));
    }
    return out;
}

std::vector<Polynomial> generating_ideal(VertexMask p, std::span<const Assignment> gens) {
    std::vector<Polynomial> out;
    for (const Assignment& eta : gens)
        if (!eta.value(p).is_zero())
            out.push_back(lead_sign_normalized(eta.value(p)));
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        if (int c = cmp_monomial(a.leading_term().mono, b.leading_term().mono); c != 0)
            return c > 0;
        return b.terms().size() < a.terms().size();
    });
    return out;
}

std::vector<Polynomial> minimalize_ideal(std::vector<Polynomial> gens, GroebnerOptions opts) {
    // Drop candidates largest-first so small generators survive.
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<ModuleElement> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i)
                rest.push_back(ModuleElement{gens[j]});
        if (!rest.empty()) {
            GroebnerBasis gb = groebner(rest, 1, gens[i].nvars(), opts);
            if (membership(ModuleElement{gens[i]}, gb).member) {
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
                i = 0;
                continue;
            }
        }
        ++i;
    }
    return gens;
}

const Assignment& MorseGeneratorSet::generator(const GeneratorRef& ref) const {
    return per_vertex[ref.vertex].generators[ref.index];
}

MorseGeneratorSet morse_generators(LieType lt, const Word& word, const Polarization& xi,
                                   GroebnerOptions opts) {
    AssignmentBasisTrace trace = assignment_basis_trace(lt, word);
    const BasisMatrix& basis = trace.basis;
    OrientedGraph og = OrientedGraph::orient(basis.graph, xi);
    const BSGraph& g = *basis.graph;
    const int r = lt.rank;
    const std::size_t n = g.vertex_count();

    MorseGeneratorSet out;
    out.graph = basis.graph;
    out.xi = xi;

    for (VertexMask p = 0; p < n; ++p) {
        MorseVertexReport report;
        report.vertex = p;
        report.flow_up = flow_up(og, p);
        FlowupGenerators raw = flowup_generators(basis, og, p, opts);
        // G_p keeps the generators contributing to the ideal of values at p,
        // sign-normalized so the value at p has a positive lead.
        for (Assignment& eta : raw.assignments) {
            if (eta.value(p).is_zero())
                continue;
            if (eta.value(p).leading_term().coef < 0) {
                std::vector<Polynomial> negated;
                negated.reserve(n);
                for (const Polynomial& q : eta.values())
                    negated.push_back(-q);
                eta = Assignment::unchecked(basis.graph, std::move(negated));
            }
            report.generators.push_back(std::move(eta));
        }
        report.ideal = generating_ideal(p, report.generators);
        report.ideal_minimal = minimalize_ideal(report.ideal, opts);
        report.principal = report.ideal_minimal.size() == 1;
        out.per_vertex.push_back(std::move(report));
    }

    // Greedy minimalization: consider generators for removal largest
    // flow-up first, ties by vertex then index; drop a generator when it
    // lies in the module generated by the remaining ones.
    std::vector<GeneratorRef> order;
    for (const auto& report : out.per_vertex)
        for (std::size_t i = 0; i < report.generators.size(); ++i)
            order.push_back(GeneratorRef{report.vertex, i});
    std::stable_sort(order.begin(), order.end(), [&](const GeneratorRef& a, const GeneratorRef& b) {
        return out.per_vertex[a.vertex].flow_up.size() > out.per_vertex[b.vertex].flow_up.size();
    });

    std::vector<GeneratorRef> survivors = order;
    auto as_element = [&](const GeneratorRef& ref) {
        return ModuleElement(out.generator(ref).values());
    };
    for (const GeneratorRef& candidate : order) {
        std::vector<ModuleElement> rest;
        for (const GeneratorRef& ref : survivors)
            if (!(ref == candidate))
                rest.push_back(as_element(ref));
        GroebnerBasis gb = groebner(rest, n, r, opts);
        if (membership(as_element(candidate), gb).member)
            std::erase(survivors, candidate);
    }
    // The survivors must still generate every A^I column.
    {
        std::vector<ModuleElement> gens;
        for (const GeneratorRef& ref : survivors)
            gens.push_back(as_element(ref));
        GroebnerBasis gb = groebner(gens, n, r, opts);
        for (VertexMask j = 0; j < n; ++j) {
            ModuleElement column;
            for (std::size_t v = 0; v < n; ++v)
                column.push_back(basis.mat.at(v, j));
            MembershipResult m = membership(column, gb);
            if (!m.member)
                throw std::logic_error("minimalized Morse generators do not span the basis");
            ModuleElement recombined(n, Polynomial(r));
            for (std::size_t t = 0; t < gens.size(); ++t)
                for (std::size_t v = 0; v < n; ++v)
                    recombined[v] = recombined[v] + m.cofactors[t] * gens[t][v];
            if (!(recombined == column))
                throw std::logic_error("membership cofactors fail to recombine");
        }
    }
    std::sort(survivors.begin(), survivors.end(), [](const GeneratorRef& a, const GeneratorRef& b) {
        return a.vertex != b.vertex ? a.vertex < b.vertex : a.index < b.index;
    });
    out.minimal = std::move(survivors);
    return out;
}

}  // namespace bsassign
