#pragma once

#include <cstdint>
#include <vector>

#include "bsassign/errors.hpp"
#include "bsassign/polynomial.hpp"

namespace bsassign {

/// Element of a rank-k free module over the polynomial ring.
using ModuleElement = std::vector<Polynomial>;

bool is_zero(const ModuleElement& f);

/// Term-over-position order: compare monomials by grevlex, ties broken by
/// lower component index first.
struct ModuleTermRef {
    std::size_t component;
    const Term* term;
};

struct GroebnerOptions {
    std::uint64_t pair_budget = 1'000'000;
};

/// A Groebner basis of the submodule generated by `generators`, with each
/// basis element's expression in the original generators.
class GroebnerBasis {
public:
    GroebnerBasis(std::size_t rank, int nvars, std::vector<ModuleElement> generators,
                  std::vector<ModuleElement> elements,
                  std::vector<std::vector<Polynomial>> expressions)
        : rank_(rank),
          nvars_(nvars),
          generators_(std::move(generators)),
          elements_(std::move(elements)),
          expressions_(std::move(expressions)) {}

    std::size_t rank() const { return rank_; }
    int nvars() const { return nvars_; }
    const std::vector<ModuleElement>& generators() const { return generators_; }
    const std::vector<ModuleElement>& elements() const { return elements_; }
    /// expressions()[i][j]: coefficient of generators()[j] in elements()[i].
    const std::vector<std::vector<Polynomial>>& expressions() const { return expressions_; }

private:
    std::size_t rank_;
    int nvars_;
    std::vector<ModuleElement> generators_;
    std::vector<ModuleElement> elements_;
    std::vector<std::vector<Polynomial>> expressions_;
};

/// Buchberger's algorithm with the product criterion (restricted to pairs of
/// single-component elements, where it is valid over modules) and the chain
/// criterion. Throws BudgetExceeded past opts.pair_budget processed pairs.
GroebnerBasis groebner(std::vector<ModuleElement> gens, std::size_t rank, int nvars,
                       GroebnerOptions opts = {});

struct ReduceResult {
    ModuleElement normal_form;
    /// f = sum cofactors_gb[i] * gb.elements()[i] + normal_form.
    std::vector<Polynomial> cofactors_gb;
};

/// Full normal form (every term reduced); deterministic and idempotent.
ReduceResult reduce(const ModuleElement& f, const GroebnerBasis& gb);

struct MembershipResult {
    bool member = false;
    /// On membership: f = sum cofactors[j] * gb.generators()[j].
    std::vector<Polynomial> cofactors;
};

MembershipResult membership(const ModuleElement& f, const GroebnerBasis& gb);

/// Generators of the first syzygy module of `gens`: Buchberger on the
/// augmented elements (f_j; e_j) with a block elimination order, reading off
/// the elements whose first block vanishes (the e-block carries the
/// reduction trace). Every returned g satisfies sum g[j] * gens[j] = 0.
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, std::size_t rank,
                                    int nvars, GroebnerOptions opts = {});

}  // namespace bsassign
