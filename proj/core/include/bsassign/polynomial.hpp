#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsassign/rational.hpp"
#include "bsassign/rootsys.hpp"

namespace bsassign {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

/// Graded reverse lexicographic with x_1 > x_2 > ... > x_r.
/// Returns <0, 0, >0 for a < b, a == b, a > b.
int cmp_monomial(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coef;

    bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over Q in the simple-root variables.
/// Terms are kept sorted in strictly descending grevlex order with no zero
/// coefficients, so equal polynomials have identical representations.
class Polynomial {
public:
    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Rational c);
    static Polynomial variable(int nvars, int j);  // x_j, 1-based
    /// Merges duplicates and drops zeros.
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].mono) == 0); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// True iff all terms share one total degree (zero counts as homogeneous).
    bool is_homogeneous() const;

    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const;
    Rational constant_value() const;  // requires is_constant()
    Rational coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rational& c) const;

    bool operator==(const Polynomial&) const = default;

private:
    int nvars_;
    std::vector<Term> terms_;
};

/// Embeds a Weight as a homogeneous degree-1 polynomial.
Polynomial from_weight(const Weight& w);

/// Nonzero, homogeneous of degree exactly 1.
bool is_linear_form(const Polynomial& p);

/// Inverse of from_weight; requires is_linear_form.
Weight to_weight(const Polynomial& p);

/// Quotient q with p = q * d, or nullopt when the division is not exact.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

/// Ring morphism x_i -> images[i-1].
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// The automorphism of S(t*) extending s_j on degree-1 elements.
Polynomial weyl_act(int j, const Polynomial& p, const CartanMatrix& cm);

/// (s_j p - p) / alpha_j; the division is always exact (throws
/// std::logic_error if not, which would indicate an arithmetic bug).
Polynomial divided_difference(int j, const Polynomial& p, const CartanMatrix& cm);

/// 1-based index of the highest-index variable with nonzero coefficient in
/// the linear form alpha.
int pivot_variable(const Polynomial& alpha);

/// Canonical representative of p in S(t*)/(alpha): substitutes the pivot
/// variable of alpha by its expression from alpha = 0. The result contains
/// no pivot variable and p - result is divisible by alpha.
Polynomial reduce_mod_linear(const Polynomial& p, const Polynomial& alpha);

/// Flips the overall sign if the leading coefficient is negative.
Polynomial lead_sign_normalized(const Polynomial& p);

/// Renders with variables named a1, a2, ... e.g. "a1^2*a2 - 3/2*a2 + 1".
std::string to_text(const Polynomial& p);

}  // namespace bsassign
