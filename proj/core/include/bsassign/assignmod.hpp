#pragma once

#include <memory>
#include <span>
#include <vector>

#include "bsassign/bsgraph.hpp"
#include "bsassign/errors.hpp"
#include "bsassign/matrix.hpp"
#include "bsassign/polynomial.hpp"
#include "bsassign/ratfun.hpp"

namespace bsassign {

/// True iff for every edge the difference of values is divisible by the
/// edge label.
bool is_assignment(const BSGraph& g, std::span<const Polynomial> values);

/// A map from vertices of Gamma_I to polynomials satisfying the edge
/// congruences, stored in vertex order.
class Assignment {
public:
    /// Verifies the edge congruences; throws std::invalid_argument on failure.
    static Assignment checked(std::shared_ptr<const BSGraph> g, std::vector<Polynomial> values);
    /// Caller guarantees validity.
    static Assignment unchecked(std::shared_ptr<const BSGraph> g, std::vector<Polynomial> values);

    const BSGraph& graph() const { return *graph_; }
    const std::shared_ptr<const BSGraph>& graph_ptr() const { return graph_; }
    const std::vector<Polynomial>& values() const { return values_; }
    const Polynomial& value(VertexMask v) const { return values_[v]; }

private:
    Assignment(std::shared_ptr<const BSGraph> g, std::vector<Polynomial> values)
        : graph_(std::move(g)), values_(std::move(values)) {}

    std::shared_ptr<const BSGraph> graph_;
    std::vector<Polynomial> values_;
};

enum class BasisKind { Assignment, Cohomological };

/// Square matrix whose columns are assignments forming a module basis;
/// rows are vertices, columns are indexed by subwords.
struct BasisMatrix {
    BasisKind kind;
    std::shared_ptr<const BSGraph> graph;
    Matrix<Polynomial> mat;

    Assignment column(VertexMask j) const;
};

/// H^I by the block recursion from H^[] = [1]:
/// H^[I,j] = [[H, 0], [s_j H, alpha_j s_j H]].
BasisMatrix cohomology_basis(LieType lt, const Word& word);

/// Closed-formula entry H_J(J'): the product over set bits t of J of
/// s_{i_d}^{e'_d} ... s_{i_{t+1}}^{e'_{t+1}} alpha_{i_t} when J <= J'
/// bitwise, else 0. Used to cross-check the recursion.
Polynomial cohomology_entry(const BSGraph& g, VertexMask col_j, VertexMask row_jp);

/// The factor list of H_J(J') (entry in column col_j, row row_jp).
std::vector<Polynomial> h_diagonal_factors_for(const BSGraph& g, VertexMask col_j, VertexMask row_jp);

/// The diagonal entry H_J(J) as its list of linear factors.
std::vector<Polynomial> h_diagonal_factors(const BSGraph& g, VertexMask j);

/// Result of row reduction over the quotient domain S(t*)/(alpha):
/// in the permuted column order the reduced matrix is [[I, C], [0, 0]].
struct RrefModResult {
    std::vector<std::size_t> column_order;  // basic columns first, then free
    std::size_t rank = 0;
    Matrix<Polynomial> reduced;  // n x n, permuted column order
    Matrix<Polynomial> C;        // rank x (n - rank)
};

/// Fraction-free elimination with unit pivots preferred and a final exact
/// division pass. Throws RrefObstruction when a pivot fails to divide its
/// row, i.e. the reduction cannot be completed with polynomial entries.
RrefModResult rref_mod(const Matrix<Polynomial>& m, const Polynomial& alpha);

struct BasisStep {
    int letter;
    RrefModResult rref;
    Matrix<Polynomial> U;  // in the original (unpermuted) column order
};

struct AssignmentBasisTrace {
    BasisMatrix basis;
    std::vector<BasisStep> steps;
};

/// A^I by the inductive construction: at each appended letter j,
/// A^[I,j] = [[A, 0], [s_j A, s_j A * U]] with U = [[alpha I, -C], [0, I]]
/// read off rref_mod(A, alpha_j). Propagates RrefObstruction.
AssignmentBasisTrace assignment_basis_trace(LieType lt, const Word& word);
BasisMatrix assignment_basis(LieType lt, const Word& word);

/// Coordinates of an assignment in the H^I column basis.
using CoefficientVector = std::vector<RationalFunction>;

/// Solves H c = values by forward substitution in vertex order (H is lower
/// triangular with weight-product diagonal).
CoefficientVector express_in_cohomology(const BasisMatrix& h, std::span<const Polynomial> values);
CoefficientVector express_in_cohomology(const Assignment& eta);

bool is_polynomial_vector(const CoefficientVector& coeffs);

/// True iff every H-coefficient is a polynomial.
bool is_cohomological(const Assignment& eta);

struct DefectReport {
    AssignmentBasisTrace trace;
    Matrix<RationalFunction> v_matrix;           // A = H * V
    std::vector<CoefficientVector> coefficients; // per column of A
    std::vector<VertexMask> defect_columns;      // columns with a non-polynomial coefficient
};

/// H-coefficients of every A^I column, cross-checked against the block
/// recursion V^[I,j] = [[V, 0], [d_j V, (1/alpha_j) s_j V * U]].
DefectReport defect_report(LieType lt, const Word& word);

/// Assignment supported on v with value the product of one sign-normalized
/// representative per collinearity class of the isotropy weights at v.
Assignment delta_vertex(const std::shared_ptr<const BSGraph>& g, VertexMask v);

/// A face fixes the positions in `fixed_positions` to the bits of
/// `fixed_bits`; the remaining positions range over all completions.
struct FaceSpec {
    VertexMask fixed_positions = 0;
    VertexMask fixed_bits = 0;
};

/// Assignment supported on the face, valued at each face vertex by the
/// product of one representative per distinct line among the isotropy
/// weights at the fixed positions. Throws FaceDeltaError when the result
/// fails the edge congruences.
Assignment delta_face(const std::shared_ptr<const BSGraph>& g, FaceSpec face);

/// Localization: sum over vertices of value / product of isotropy weights.
RationalFunction integrate(const Assignment& eta);

/// Dimension over Q of the degree-<=k slice of the assignment module,
/// computed by brute-force linear algebra on the edge congruences.
int assignment_slice_dimension(const BSGraph& g, int k);

/// Dimension of { sum c_J A_J : c_J polynomial, deg(c_J A_J) <= k }.
int basis_span_slice_dimension(const BasisMatrix& basis, int k);

/// Fraction-free (Bareiss) determinant.
Polynomial determinant(const Matrix<Polynomial>& m);

}  // namespace bsassign
