#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsassign/polynomial.hpp"
#include "bsassign/rootsys.hpp"

namespace bsassign {

/// A word I = [i_1, ..., i_d] of 1-based simple-root indices.
struct Word {
    std::vector<int> letters;

    int size() const { return static_cast<int>(letters.size()); }
    bool operator==(const Word&) const = default;
};

/// True iff the letters are pairwise distinct (the GKM condition).
bool is_gkm(const Word& word);

/// Subwords are bitmasks: bit t-1 set iff position t of the word is on.
/// Vertex order is the mask's integer order, which realizes the increasing
/// right-to-left lexicographic order on subwords.
using VertexMask = std::uint32_t;

struct Edge {
    VertexMask from;
    VertexMask to;
    int position;  // 1-based flipped position
};

/// The decorated digraph Gamma_I: 2^d subword vertices, one-bit-flip edges,
/// root labels, per-vertex isotropy weight lists. Immutable after build.
class BSGraph {
public:
    static BSGraph build(LieType lt, Word word);
    static std::shared_ptr<const BSGraph> build_shared(LieType lt, Word word);

    const LieType& lie_type() const { return lt_; }
    const CartanMatrix& cartan() const { return cm_; }
    const Word& word() const { return word_; }
    int dim() const { return word_.size(); }
    std::size_t vertex_count() const { return std::size_t{1} << word_.size(); }

    /// Position-t entry (t = 1..d) is s_{i_d}^{e_d} ... s_{i_t}^{e_t} alpha_{i_t},
    /// exponents read from v.
    const std::vector<Weight>& isotropy_weights(VertexMask v) const;

    /// Label of the arrow v -> v ^ (1 << (position-1)), exponents read from
    /// the source; equals the position-t isotropy weight at v.
    const Weight& edge_label(VertexMask from, int position) const;

    /// All undirected edges once, with from < to.
    std::vector<Edge> edges() const;

    /// Every weight that occurs as an edge label (sign-normalized, deduplicated).
    std::vector<Weight> label_set() const;

    /// Subword string, e.g. mask 5 for word [2,1,2] renders as "202";
    /// the empty word renders as "[]".
    std::string vertex_name(VertexMask v) const;
    std::optional<VertexMask> parse_vertex(const std::string& name) const;

private:
    LieType lt_;
    CartanMatrix cm_;
    Word word_;
    std::vector<std::vector<Weight>> isotropy_;
};

/// Debug cross-check for is_gkm: pairwise non-collinearity of the isotropy
/// weights at every vertex.
bool is_gkm_by_collinearity(const BSGraph& g);

/// DOT rendering: one undirected edge per pair, or one ascending arrow per
/// pair when an orientation is given. Throws NotPolarizing when the covector
/// vanishes on some label.
std::string export_dot(const BSGraph& g, const Polarization* orientation = nullptr);

}  // namespace bsassign
