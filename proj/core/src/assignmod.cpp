#include "bsassign/assignmod.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bsassign {

bool is_assignment(const BSGraph& g, std::span<const Polynomial> values) {
    if (values.size() != g.vertex_count())
        return false;
    for (const Edge& e : g.edges()) {
        Polynomial diff = values[e.from] - values[e.to];
        if (diff.is_zero())
            continue;
        if (!exact_divide(diff, from_weight(g.edge_label(e.from, e.position))))
            return false;
    }
    return true;
}

Assignment Assignment::checked(std::shared_ptr<const BSGraph> g, std::vector<Polynomial> values) {
    if (!is_assignment(*g, values))
        throw std::invalid_argument("values violate an edge congruence");
    return Assignment(std::move(g), std::move(values));
}

Assignment Assignment::unchecked(std::shared_ptr<const BSGraph> g, std::vector<Polynomial> values) {
    return Assignment(std::move(g), std::move(values));
}

Assignment BasisMatrix::column(VertexMask j) const {
    std::vector<Polynomial> values;
    values.reserve(mat.rows());
    for (std::size_t v = 0; v < mat.rows(); ++v)
        values.push_back(mat.at(v, j));
    return Assignment::unchecked(graph, std::move(values));
}

BasisMatrix cohomology_basis(LieType lt, const Word& word) {
    auto graph = BSGraph::build_shared(lt, word);
    const CartanMatrix& cm = graph->cartan();
    const int r = lt.rank;
    Matrix<Polynomial> h(1, 1, Polynomial::constant(r, 1));
    for (int l : word.letters) {
        const std::size_t n = h.rows();
        Polynomial alpha = Polynomial::variable(r, l);
        Matrix<Polynomial> next(2 * n, 2 * n, Polynomial(r));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Polynomial s = weyl_act(l, h.at(i, j), cm);
                next.at(i, j) = h.at(i, j);
                next.at(n + i, j) = s;
                next.at(n + i, n + j) = alpha * s;
            }
        }
        h = std::move(next);
    }
    return BasisMatrix{BasisKind::Cohomological, std::move(graph), std::move(h)};
}

Polynomial cohomology_entry(const BSGraph& g, VertexMask col_j, VertexMask row_jp) {
    const int r = g.lie_type().rank;
    if (col_j & ~row_jp)
        return Polynomial(r);
    Polynomial out = Polynomial::constant(r, 1);
    for (const Polynomial& f : h_diagonal_factors_for(g, col_j, row_jp))
        out = out * f;
    return out;
}

namespace {

// Factors s_{i_d}^{e'_d} ... s_{i_{t+1}}^{e'_{t+1}} alpha_{i_t} over the set
// bits t of col_j, with reflection exponents e' read from row_jp.
std::vector<Polynomial> diagonal_factors_impl(const BSGraph& g, VertexMask col_j, VertexMask row_jp) {
    const int d = g.dim();
    std::vector<Polynomial> out;
    for (int t = 1; t <= d; ++t) {
        if (!(col_j & (VertexMask{1} << (t - 1))))
            continue;
        Weight w = Weight::simple_root(g.word().letters[t - 1], g.lie_type().rank);
        for (int k = t + 1; k <= d; ++k)
            if (row_jp & (VertexMask{1} << (k - 1)))
                w = reflect(g.word().letters[k - 1], w, g.cartan());
        out.push_back(from_weight(w));
    }
    return out;
}

}  // namespace

std::vector<Polynomial> h_diagonal_factors_for(const BSGraph& g, VertexMask col_j, VertexMask row_jp) {
    return diagonal_factors_impl(g, col_j, row_jp);
}

std::vector<Polynomial> h_diagonal_factors(const BSGraph& g, VertexMask j) {
    return diagonal_factors_impl(g, j, j);
}

namespace {

std::string dump_matrix(const Matrix<Polynomial>& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : " ") << to_text(m.at(i, j));
        os << " ]\n";
    }
    return os.str();
}

}  // namespace

RrefModResult rref_mod(const Matrix<Polynomial>& m, const Polynomial& alpha) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("rref_mod expects a square matrix");
    const std::size_t n = m.rows();
    RrefModResult res;
    res.reduced = map_entries(m, [&](const Polynomial& p) { return reduce_mod_linear(p, alpha); });
    Matrix<Polynomial>& r = res.reduced;
    res.column_order.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        res.column_order[j] = j;

    auto rotate_column = [&](std::size_t from, std::size_t to) {
        // Moves column `from` to position `to`, shifting the columns between
        // them right so the relative order of the others is preserved.
        if (from == to)
            return;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial moved = r.at(i, from);
            for (std::size_t j = from; j > to; --j)
                r.at(i, j) = r.at(i, j - 1);
            r.at(i, to) = std::move(moved);
        }
        std::size_t moved = res.column_order[from];
        for (std::size_t j = from; j > to; --j)
            res.column_order[j] = res.column_order[j - 1];
        res.column_order[to] = moved;
    };

    std::size_t rank = 0;
    while (true) {
        // Pivot search: any nonzero constant wins; otherwise the entry of
        // least (degree, term count) in scan order.
        bool found = false;
        std::size_t pr = 0, pc = 0;
        int best_deg = 0, best_terms = 0;
        for (std::size_t j = rank; j < n && !(found && best_deg == 0); ++j) {
            for (std::size_t i = rank; i < n; ++i) {
                const Polynomial& e = r.at(i, j);
                if (e.is_zero())
                    continue;
                int deg = e.is_constant() ? 0 : e.degree();
                int nt = static_cast<int>(e.terms().size());
                if (!found || deg < best_deg || (deg == best_deg && nt < best_terms)) {
                    found = true;
                    pr = i;
                    pc = j;
                    best_deg = deg;
                    best_terms = nt;
                    if (deg == 0)
                        break;
                }
            }
        }
        if (!found)
            break;
        rotate_column(pc, rank);
        if (pr != rank)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(r.at(pr, j), r.at(rank, j));

        Polynomial pivot = r.at(rank, rank);
        if (pivot.is_constant()) {
            Rational inv = Rational(1) / pivot.constant_value();
            for (std::size_t j = rank; j < n; ++j)
                r.at(rank, j) = r.at(rank, j) * inv;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == rank || r.at(i, rank).is_zero())
                    continue;
                Polynomial factor = r.at(i, rank);
                for (std::size_t j = rank; j < n; ++j)
                    r.at(i, j) = r.at(i, j) - factor * r.at(rank, j);
            }
        } else {
            // Fraction-free cross-multiplication; divisions deferred to the
            // final pass. Row scaling by a nonzero element is harmless over
            // the quotient domain.
            for (std::size_t i = 0; i < n; ++i) {
                if (i == rank || r.at(i, rank).is_zero())
                    continue;
                Polynomial factor = r.at(i, rank);
                for (std::size_t j = 0; j < n; ++j)
                    r.at(i, j) = pivot * r.at(i, j) - factor * r.at(rank, j);
            }
        }
        ++rank;
    }
    res.rank = rank;

    // Final pass: each basic row divided by its pivot.
    for (std::size_t i = 0; i < rank; ++i) {
        Polynomial pivot = r.at(i, i);
        if (pivot.is_constant() && pivot.constant_value() == 1)
            continue;
        std::vector<Polynomial> divided(n, Polynomial(pivot.nvars()));
        for (std::size_t j = 0; j < n; ++j) {
            if (r.at(i, j).is_zero())
                continue;
            auto q = exact_divide(r.at(i, j), pivot);
            if (!q)
                throw RrefObstruction(
                    "rref over S(t*)/(" + to_text(alpha) + ") is obstructed: pivot " + to_text(pivot) +
                        " of row " + std::to_string(i) + " does not divide entry " + to_text(r.at(i, j)),
                    dump_matrix(r));
            divided[j] = std::move(*q);
        }
        for (std::size_t j = 0; j < n; ++j)
            r.at(i, j) = std::move(divided[j]);
    }

    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            if (!(r.at(i, j) == Polynomial::constant(alpha.nvars(), i == j ? 1 : 0)))
                throw std::logic_error("rref_mod postcondition: basic block is not the identity");
    for (std::size_t i = rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!r.at(i, j).is_zero())
                throw std::logic_error("rref_mod postcondition: non-basic rows must vanish");

    res.C = Matrix<Polynomial>(rank, n - rank, Polynomial(alpha.nvars()));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = rank; j < n; ++j)
            res.C.at(i, j - rank) = r.at(i, j);
    return res;
}

AssignmentBasisTrace assignment_basis_trace(LieType lt, const Word& word) {
    auto graph = BSGraph::build_shared(lt, word);
    const CartanMatrix& cm = graph->cartan();
    const int r = lt.rank;
    AssignmentBasisTrace trace;
    Matrix<Polynomial> a(1, 1, Polynomial::constant(r, 1));
    for (int l : word.letters) {
        const std::size_t n = a.rows();
        Polynomial alpha = Polynomial::variable(r, l);
        RrefModResult rr = rref_mod(a, alpha);
        const std::size_t rank = rr.rank;

        Matrix<Polynomial> u(n, n, Polynomial(r));
        for (std::size_t p = 0; p < rank; ++p) {
            u.at(rr.column_order[p], rr.column_order[p]) = alpha;
            for (std::size_t q = rank; q < n; ++q)
                u.at(rr.column_order[p], rr.column_order[q]) = -rr.C.at(p, q - rank);
        }
        for (std::size_t q = rank; q < n; ++q)
            u.at(rr.column_order[q], rr.column_order[q]) = Polynomial::constant(r, 1);

        Matrix<Polynomial> sa = map_entries(a, [&](const Polynomial& p) { return weyl_act(l, p, cm); });
        Matrix<Polynomial> sau = matmul(sa, u, Polynomial(r));
        Matrix<Polynomial> next(2 * n, 2 * n, Polynomial(r));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next.at(i, j) = a.at(i, j);
                next.at(n + i, j) = sa.at(i, j);
                next.at(n + i, n + j) = sau.at(i, j);
            }
        }
        trace.steps.push_back(BasisStep{l, std::move(rr), std::move(u)});
        a = std::move(next);
    }
    trace.basis = BasisMatrix{BasisKind::Assignment, std::move(graph), std::move(a)};
    return trace;
}

BasisMatrix assignment_basis(LieType lt, const Word& word) {
    return assignment_basis_trace(lt, word).basis;
}

CoefficientVector express_in_cohomology(const BasisMatrix& h, std::span<const Polynomial> values) {
    assert(h.kind == BasisKind::Cohomological);
    const BSGraph& g = *h.graph;
    const std::size_t n = g.vertex_count();
    assert(values.size() == n);
    const int r = g.lie_type().rank;
    CoefficientVector c(n, RationalFunction(Polynomial(r)));
    for (VertexMask v = 0; v < n; ++v) {
        RationalFunction residual{values[v]};
        for (VertexMask u = 0; u < v; ++u) {
            if ((u & v) != u || c[u].is_zero() || h.mat.at(v, u).is_zero())
                continue;
            residual = residual - c[u] * h.mat.at(v, u);
        }
        for (const Polynomial& f : h_diagonal_factors(g, v))
            residual = residual.div_by_linear(f);
        c[v] = std::move(residual);
    }
    return c;
}

CoefficientVector express_in_cohomology(const Assignment& eta) {
    BasisMatrix h = cohomology_basis(eta.graph().lie_type(), eta.graph().word());
    return express_in_cohomology(h, eta.values());
}

bool is_polynomial_vector(const CoefficientVector& coeffs) {
    for (const auto& c : coeffs)
        if (!c.as_polynomial())
            return false;
    return true;
}

bool is_cohomological(const Assignment& eta) { return is_polynomial_vector(express_in_cohomology(eta)); }

DefectReport defect_report(LieType lt, const Word& word) {
    DefectReport report;
    report.trace = assignment_basis_trace(lt, word);
    const BasisMatrix& a = report.trace.basis;
    BasisMatrix h = cohomology_basis(lt, word);
    const BSGraph& g = *a.graph;
    const std::size_t n = g.vertex_count();
    const int r = lt.rank;
    const CartanMatrix& cm = g.cartan();

    for (VertexMask j = 0; j < n; ++j) {
        std::vector<Polynomial> column;
        column.reserve(n);
        for (std::size_t v = 0; v < n; ++v)
            column.push_back(a.mat.at(v, j));
        report.coefficients.push_back(express_in_cohomology(h, column));
        if (!is_polynomial_vector(report.coefficients.back()))
            report.defect_columns.push_back(j);
    }

    // Cross-check: V^[I,j] = [[V, 0], [d_j V, (1/alpha_j) s_j V * U]].
    const RationalFunction zero{Polynomial(r)};
    Matrix<RationalFunction> v(1, 1, RationalFunction(Polynomial::constant(r, 1)));
    for (const BasisStep& step : report.trace.steps) {
        const std::size_t m = v.rows();
        const int l = step.letter;
        Polynomial alpha = Polynomial::variable(r, l);
        Matrix<RationalFunction> sv =
            map_entries(v, [&](const RationalFunction& f) { return weyl_act(l, f, cm); });
        Matrix<RationalFunction> svu = matmul(sv, step.U, zero);
        Matrix<RationalFunction> next(2 * m, 2 * m, zero);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                next.at(i, j) = v.at(i, j);
                next.at(m + i, j) = divided_difference(l, v.at(i, j), cm);
                next.at(m + i, m + j) = svu.at(i, j).div_by_linear(alpha);
            }
        }
        v = std::move(next);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(v.at(i, j) == report.coefficients[j][i]))
                throw std::logic_error("transition-matrix recursion disagrees with forward substitution");
    report.v_matrix = std::move(v);
    return report;
}

namespace {

// One sign-normalized representative per collinearity class.
Polynomial distinct_line_product(const std::vector<Weight>& weights, int r) {
    std::vector<Weight> reps;
    for (const Weight& w : weights) {
        bool seen = false;
        for (const Weight& rep : reps)
            seen = seen || collinear(w, rep);
        if (!seen)
            reps.push_back(sign_normalized(w));
    }
    Polynomial out = Polynomial::constant(r, 1);
    for (const Weight& rep : reps)
        out = out * from_weight(rep);
    return out;
}

}  // namespace

Assignment delta_vertex(const std::shared_ptr<const BSGraph>& g, VertexMask v) {
    const int r = g->lie_type().rank;
    std::vector<Polynomial> values(g->vertex_count(), Polynomial(r));
    values[v] = distinct_line_product(g->isotropy_weights(v), r);
    return Assignment::checked(g, std::move(values));
}

Assignment delta_face(const std::shared_ptr<const BSGraph>& g, FaceSpec face) {
    const int r = g->lie_type().rank;
    const int d = g->dim();
    if (face.fixed_bits & ~face.fixed_positions)
        throw std::invalid_argument("face bits outside the fixed positions");
    if (d < 32 && face.fixed_positions >= (VertexMask{1} << d))
        throw std::invalid_argument("face positions outside the word");
    std::vector<Polynomial> values(g->vertex_count(), Polynomial(r));
    for (VertexMask v = 0; v < g->vertex_count(); ++v) {
        if ((v & face.fixed_positions) != face.fixed_bits)
            continue;
        std::vector<Weight> normal;
        for (int t = 1; t <= d; ++t)
            if (face.fixed_positions & (VertexMask{1} << (t - 1)))
                normal.push_back(g->isotropy_weights(v)[t - 1]);
        values[v] = distinct_line_product(normal, r);
    }
    if (!is_assignment(*g, values))
        throw FaceDeltaError("face delta values fail the edge congruences");
    return Assignment::unchecked(g, std::move(values));
}

RationalFunction integrate(const Assignment& eta) {
    const BSGraph& g = eta.graph();
    const int r = g.lie_type().rank;
    RationalFunction total{Polynomial(r)};
    for (VertexMask v = 0; v < g.vertex_count(); ++v) {
        if (eta.value(v).is_zero())
            continue;
        std::vector<Polynomial> den;
        den.reserve(g.dim());
        for (const Weight& w : g.isotropy_weights(v))
            den.push_back(from_weight(w));
        total = total + RationalFunction::quotient(eta.value(v), den);
    }
    return total;
}

namespace {

std::vector<Monomial> monomials_up_to(int nvars, int k) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    // Lexicographic enumeration by recursion over remaining degree.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return cmp_monomial(a, b) > 0; });
    return out;
}

int rational_matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[row]);
        Rational inv = Rational(1) / rows[row][col];
        for (std::size_t j = col; j < cols; ++j)
            rows[row][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0)
                continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] -= f * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

int assignment_slice_dimension(const BSGraph& g, int k) {
    const int r = g.lie_type().rank;
    const std::size_t n = g.vertex_count();
    const std::vector<Monomial> monos = monomials_up_to(r, k);
    std::map<Monomial, std::size_t> mono_index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        mono_index[monos[i]] = i;
    const std::size_t unknowns = n * monos.size();

    std::vector<std::vector<Rational>> rows;
    for (const Edge& e : g.edges()) {
        Polynomial label = from_weight(g.edge_label(e.from, e.position));
        // f_v - f_w = 0 mod label, expanded over the reduced monomial basis.
        std::map<Monomial, std::vector<Rational>> constraint;
        for (std::size_t mi = 0; mi < monos.size(); ++mi) {
            Polynomial reduced =
                reduce_mod_linear(Polynomial::from_terms(r, {Term{monos[mi], Rational(1)}}), label);
            for (const Term& t : reduced.terms()) {
                auto& row = constraint[t.mono];
                if (row.empty())
                    row.assign(unknowns, Rational(0));
                row[e.from * monos.size() + mi] += t.coef;
                row[e.to * monos.size() + mi] -= t.coef;
            }
        }
        for (auto& [mono, row] : constraint)
            rows.push_back(std::move(row));
    }
    return static_cast<int>(unknowns) - rational_matrix_rank(std::move(rows));
}

int basis_span_slice_dimension(const BasisMatrix& basis, int k) {
    const BSGraph& g = *basis.graph;
    const int r = g.lie_type().rank;
    const std::size_t n = g.vertex_count();
    const std::vector<Monomial> monos = monomials_up_to(r, k);
    std::map<Monomial, std::size_t> mono_index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        mono_index[monos[i]] = i;

    std::vector<std::vector<Rational>> vectors;
    for (VertexMask j = 0; j < n; ++j) {
        int col_degree = -1;
        for (std::size_t v = 0; v < n; ++v) {
            const Polynomial& e = basis.mat.at(v, j);
            if (e.is_zero())
                continue;
            if (!e.is_homogeneous() || (col_degree >= 0 && e.degree() != col_degree))
                throw std::logic_error("basis column is not homogeneous");
            col_degree = e.degree();
        }
        if (col_degree < 0)
            continue;
        for (const Monomial& m : monomials_up_to(r, k - col_degree)) {
            Polynomial mono = Polynomial::from_terms(r, {Term{m, Rational(1)}});
            std::vector<Rational> vec(n * monos.size(), Rational(0));
            for (std::size_t v = 0; v < n; ++v) {
                Polynomial prod = mono * basis.mat.at(v, j);
                for (const Term& t : prod.terms())
                    vec[v * monos.size() + mono_index.at(t.mono)] = t.coef;
            }
            vectors.push_back(std::move(vec));
        }
    }
    return rational_matrix_rank(std::move(vectors));
}

Polynomial determinant(const Matrix<Polynomial>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Polynomial::constant(0, 1);
    const int nv = m.at(0, 0).nvars();
    Matrix<Polynomial> w = m;
    bool negate = false;
    Polynomial prev = Polynomial::constant(nv, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t l = k + 1;
            while (l < n && w.at(l, k).is_zero())
                ++l;
            if (l == n)
                return Polynomial(nv);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(l, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                auto q = exact_divide(num, prev);
                if (!q)
                    throw std::logic_error("Bareiss division failed (arithmetic bug)");
                w.at(i, j) = std::move(*q);
            }
            w.at(i, k) = Polynomial(nv);
        }
        prev = w.at(k, k);
    }
    Polynomial det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

}  // namespace bsassign
