#include "bsassign/gb.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace bsassign {

bool is_zero(const ModuleElement& f) {
    for (const auto& p : f)
        if (!p.is_zero())
            return false;
    return true;
}

namespace {

struct LeadTerm {
    std::size_t component = 0;
    Monomial mono;
    Rational coef;
};

// Components below elim_split form an upper block whose terms dominate every
// lower-block term; within a block, TOP: grevlex on monomials, ties to the
// lower component index.
struct ModuleOrder {
    std::size_t elim_split = 0;

    int cmp(std::size_t c1, const Monomial& m1, std::size_t c2, const Monomial& m2) const {
        const bool u1 = c1 < elim_split, u2 = c2 < elim_split;
        if (u1 != u2)
            return u1 ? 1 : -1;
        if (int c = cmp_monomial(m1, m2); c != 0)
            return c;
        if (c1 != c2)
            return c1 < c2 ? 1 : -1;
        return 0;
    }
};

LeadTerm lead_term(const ModuleElement& f, const ModuleOrder& order) {
    LeadTerm best;
    bool found = false;
    for (std::size_t c = 0; c < f.size(); ++c) {
        if (f[c].is_zero())
            continue;
        const Term& t = f[c].leading_term();
        if (!found || order.cmp(c, t.mono, best.component, best.mono) > 0) {
            best = LeadTerm{c, t.mono, t.coef};
            found = true;
        }
    }
    assert(found);
    return best;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = std::max(a[i], b[i]);
    return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

ModuleElement scaled(const ModuleElement& f, const Monomial& mono, const Rational& coef, int nvars) {
    Polynomial factor = Polynomial::from_terms(nvars, {Term{mono, coef}});
    ModuleElement out;
    out.reserve(f.size());
    for (const auto& p : f)
        out.push_back(p * factor);
    return out;
}

void sub_in_place(ModuleElement& f, const ModuleElement& g) {
    for (std::size_t c = 0; c < f.size(); ++c)
        f[c] = f[c] - g[c];
}

bool single_component(const ModuleElement& f) {
    int nonzero = 0;
    for (const auto& p : f)
        nonzero += p.is_zero() ? 0 : 1;
    return nonzero == 1;
}

struct GBElement {
    ModuleElement value;
    std::vector<Polynomial> expr;  // in terms of the original generators
    LeadTerm lead;
    bool concentrated = false;
};

struct ReduceOutcome {
    ModuleElement normal_form;
    std::vector<Polynomial> cofactors;
};

ReduceOutcome normal_form(const ModuleElement& f, const std::vector<GBElement>& basis, int nvars,
                          const ModuleOrder& order) {
    const std::size_t rank = f.size();
    ReduceOutcome out;
    out.normal_form.assign(rank, Polynomial(nvars));
    out.cofactors.assign(basis.size(), Polynomial(nvars));
    ModuleElement work = f;
    while (!is_zero(work)) {
        LeadTerm lt = lead_term(work, order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const LeadTerm& gl = basis[i].lead;
            if (gl.component != lt.component || !mono_divides(gl.mono, lt.mono))
                continue;
            Monomial q(nvars);
            for (int v = 0; v < nvars; ++v)
                q[v] = lt.mono[v] - gl.mono[v];
            Rational qc = lt.coef / gl.coef;
            Polynomial qpoly = Polynomial::from_terms(nvars, {Term{q, qc}});
            for (std::size_t c = 0; c < rank; ++c)
                work[c] = work[c] - basis[i].value[c] * qpoly;
            out.cofactors[i] = out.cofactors[i] + qpoly;
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial mono = Polynomial::from_terms(nvars, {Term{lt.mono, lt.coef}});
            out.normal_form[lt.component] = out.normal_form[lt.component] + mono;
            work[lt.component] = work[lt.component] - mono;
        }
    }
    return out;
}

struct CoreResult {
    std::vector<GBElement> basis;
};

CoreResult buchberger(const std::vector<ModuleElement>& gens, std::size_t rank, int nvars,
                      const ModuleOrder& order, const GroebnerOptions& opts, bool use_criteria) {
    CoreResult res;
    const std::size_t n = gens.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (gens[j].size() != rank)
            throw std::invalid_argument("module element has rank " + std::to_string(gens[j].size()) +
                                        ", expected " + std::to_string(rank));
        if (is_zero(gens[j]))
            continue;
        GBElement e;
        e.value = gens[j];
        e.expr.assign(n, Polynomial(nvars));
        e.expr[j] = Polynomial::constant(nvars, 1);
        e.lead = lead_term(e.value, order);
        e.concentrated = single_component(e.value);
        res.basis.push_back(std::move(e));
    }

    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (res.basis[i].lead.component == res.basis[j].lead.component)
                pending.insert({i, j});
    };
    for (std::size_t j = 0; j < res.basis.size(); ++j)
        add_pairs(j);

    std::uint64_t processed = 0;
    while (!pending.empty()) {
        // Normal strategy: smallest lcm degree first, ties by index.
        auto best = pending.end();
        int best_deg = 0;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            int deg = total_degree(mono_lcm(res.basis[it->first].lead.mono, res.basis[it->second].lead.mono));
            if (best == pending.end() || deg < best_deg) {
                best = it;
                best_deg = deg;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        if (++processed > opts.pair_budget)
            throw BudgetExceeded("pair budget exceeded (" + std::to_string(opts.pair_budget) + ")");

        const GBElement& gi = res.basis[i];
        const GBElement& gj = res.basis[j];
        if (use_criteria) {
            // Product criterion, valid here only when both elements live in a
            // single component.
            if (gi.concentrated && gj.concentrated && mono_coprime(gi.lead.mono, gj.lead.mono))
                continue;
            // Chain criterion.
            Monomial lcm = mono_lcm(gi.lead.mono, gj.lead.mono);
            bool skip = false;
            for (std::size_t k = 0; k < res.basis.size() && !skip; ++k) {
                if (k == i || k == j || res.basis[k].lead.component != gi.lead.component)
                    continue;
                if (!mono_divides(res.basis[k].lead.mono, lcm))
                    continue;
                auto p1 = std::minmax(i, k);
                auto p2 = std::minmax(j, k);
                if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                    skip = true;
            }
            if (skip)
                continue;
        }

        Monomial lcm = mono_lcm(gi.lead.mono, gj.lead.mono);
        Monomial ui(nvars), uj(nvars);
        for (int v = 0; v < nvars; ++v) {
            ui[v] = lcm[v] - gi.lead.mono[v];
            uj[v] = lcm[v] - gj.lead.mono[v];
        }
        ModuleElement s = scaled(gi.value, ui, Rational(1) / gi.lead.coef, nvars);
        sub_in_place(s, scaled(gj.value, uj, Rational(1) / gj.lead.coef, nvars));
        std::vector<Polynomial> expr_i = scaled(gi.expr, ui, Rational(1) / gi.lead.coef, nvars);
        std::vector<Polynomial> expr_j = scaled(gj.expr, uj, Rational(1) / gj.lead.coef, nvars);
        sub_in_place(expr_i, expr_j);

        if (is_zero(s))
            continue;
        ReduceOutcome red = normal_form(s, res.basis, nvars, order);
        if (is_zero(red.normal_form))
            continue;
        for (std::size_t b = 0; b < res.basis.size(); ++b)
            if (!red.cofactors[b].is_zero())
                for (std::size_t t = 0; t < n; ++t)
                    expr_i[t] = expr_i[t] - red.cofactors[b] * res.basis[b].expr[t];
        GBElement e;
        e.value = std::move(red.normal_form);
        e.expr = std::move(expr_i);
        e.lead = lead_term(e.value, order);
        e.concentrated = single_component(e.value);
        res.basis.push_back(std::move(e));
        add_pairs(res.basis.size() - 1);
    }
    return res;
}

}  // namespace

GroebnerBasis groebner(std::vector<ModuleElement> gens, std::size_t rank, int nvars, GroebnerOptions opts) {
    CoreResult core = buchberger(gens, rank, nvars, ModuleOrder{}, opts, /*use_criteria=*/true);
    std::vector<ModuleElement> elements;
    std::vector<std::vector<Polynomial>> expressions;
    elements.reserve(core.basis.size());
    for (auto& e : core.basis) {
        elements.push_back(std::move(e.value));
        expressions.push_back(std::move(e.expr));
    }
    return GroebnerBasis(rank, nvars, std::move(gens), std::move(elements), std::move(expressions));
}

ReduceResult reduce(const ModuleElement& f, const GroebnerBasis& gb) {
    std::vector<GBElement> basis;
    basis.reserve(gb.elements().size());
    const ModuleOrder order{};
    for (const auto& g : gb.elements()) {
        GBElement e;
        e.value = g;
        e.lead = lead_term(g, order);
        basis.push_back(std::move(e));
    }
    ReduceOutcome out = normal_form(f, basis, gb.nvars(), order);
    return ReduceResult{std::move(out.normal_form), std::move(out.cofactors)};
}

MembershipResult membership(const ModuleElement& f, const GroebnerBasis& gb) {
    ReduceResult red = reduce(f, gb);
    MembershipResult res;
    res.member = is_zero(red.normal_form);
    if (!res.member)
        return res;
    res.cofactors.assign(gb.generators().size(), Polynomial(gb.nvars()));
    for (std::size_t i = 0; i < gb.elements().size(); ++i) {
        if (red.cofactors_gb[i].is_zero())
            continue;
        for (std::size_t j = 0; j < res.cofactors.size(); ++j)
            res.cofactors[j] = res.cofactors[j] + red.cofactors_gb[i] * gb.expressions()[i][j];
    }
    return res;
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, std::size_t rank, int nvars,
                                    GroebnerOptions opts) {
    const std::size_t n = gens.size();
    std::vector<ModuleElement> augmented;
    augmented.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (gens[j].size() != rank)
            throw std::invalid_argument("module element has rank " + std::to_string(gens[j].size()) +
                                        ", expected " + std::to_string(rank));
        ModuleElement e(rank + n, Polynomial(nvars));
        for (std::size_t c = 0; c < rank; ++c)
            e[c] = gens[j][c];
        e[rank + j] = Polynomial::constant(nvars, 1);
        augmented.push_back(std::move(e));
    }
    // Every pair's reduction trace must be emitted, so no pair skipping here.
    CoreResult core =
        buchberger(augmented, rank + n, nvars, ModuleOrder{rank}, opts, /*use_criteria=*/false);
    std::vector<ModuleElement> out;
    for (const auto& e : core.basis) {
        bool upper_zero = true;
        for (std::size_t c = 0; c < rank; ++c)
            upper_zero = upper_zero && e.value[c].is_zero();
        if (!upper_zero)
            continue;
        out.emplace_back(e.value.begin() + static_cast<std::ptrdiff_t>(rank), e.value.end());
    }
    return out;
}

}  // namespace bsassign
