#pragma once

#include <memory>
#include <span>
#include <vector>

#include "bsassign/assignmod.hpp"
#include "bsassign/bsgraph.hpp"
#include "bsassign/gb.hpp"

namespace bsassign {

/// Gamma_I with every edge oriented ascending by a polarizing covector;
/// acyclic by construction (verified by topological sort).
class OrientedGraph {
public:
    static OrientedGraph orient(std::shared_ptr<const BSGraph> g, Polarization xi);

    const BSGraph& graph() const { return *graph_; }
    const std::shared_ptr<const BSGraph>& graph_ptr() const { return graph_; }
    const Polarization& xi() const { return xi_; }

    /// True iff the arrow from -> from ^ (1 << (position-1)) ascends.
    bool ascending(VertexMask from, int position) const;

    /// Ascending out-neighbors of v.
    std::vector<VertexMask> successors(VertexMask v) const;

    const std::vector<VertexMask>& topological_order() const { return topo_; }

private:
    OrientedGraph(std::shared_ptr<const BSGraph> g, Polarization xi);

    std::shared_ptr<const BSGraph> graph_;
    Polarization xi_;
    std::vector<VertexMask> topo_;
};

/// The flow-up F_p = { q : p <= q }: vertices reachable from p by ascending
/// chains, p included. Sorted by mask.
std::vector<VertexMask> flow_up(const OrientedGraph& og, VertexMask p);

struct FlowupGenerators {
    /// Images eta = sum_J g[J] A_J of the syzygy generators g of the
    /// restricted columns; each vanishes off the flow-up.
    std::vector<Assignment> assignments;
    std::vector<ModuleElement> syzygy_coefficients;
};

/// Restricts every A^I column to the complement of F_p, computes syzygies,
/// and maps each back through A^I.
FlowupGenerators flowup_generators(const BasisMatrix& basis, const OrientedGraph& og,
                                   VertexMask p, GroebnerOptions opts = {});

/// Nonzero values at p among the generators, sign-normalized and sorted
/// descending by leading term.
std::vector<Polynomial> generating_ideal(VertexMask p, std::span<const Assignment> gens);

/// Greedy minimal generating subset of the ideal (drops members lying in
/// the ideal of the rest, largest leading term first).
std::vector<Polynomial> minimalize_ideal(std::vector<Polynomial> gens, GroebnerOptions opts = {});

struct MorseVertexReport {
    VertexMask vertex = 0;
    std::vector<VertexMask> flow_up;
    /// G_p: the flow-up generators with nonzero value at the vertex,
    /// sign-normalized so the value at the vertex has positive lead.
    std::vector<Assignment> generators;
    std::vector<Polynomial> ideal;          // generating_ideal output
    std::vector<Polynomial> ideal_minimal;  // minimalized
    bool principal = false;                 // ideal_minimal.size() == 1
};

struct GeneratorRef {
    VertexMask vertex;
    std::size_t index;  // into MorseVertexReport::generators

    bool operator==(const GeneratorRef&) const = default;
};

struct MorseGeneratorSet {
    std::shared_ptr<const BSGraph> graph;
    Polarization xi;
    std::vector<MorseVertexReport> per_vertex;  // in vertex order
    /// Survivors of the greedy minimalization (largest flow-up first),
    /// which still generate every A^I column.
    std::vector<GeneratorRef> minimal;

    const Assignment& generator(const GeneratorRef& ref) const;
};

/// The full Morse pipeline: orient, per-vertex flow-ups, syzygy generators,
/// generating ideals, global minimalization.
MorseGeneratorSet morse_generators(LieType lt, const Word& word, const Polarization& xi,
                                   GroebnerOptions opts = {});

}  // namespace bsassign
