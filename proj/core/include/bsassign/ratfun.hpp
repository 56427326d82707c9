#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsassign/polynomial.hpp"

namespace bsassign {

/// Element of the restricted fraction field: a polynomial numerator over a
/// product of linear forms. Canonical form: denominator factors are monic
/// linear forms sorted descending, and no factor exactly divides the
/// numerator (enforced by repeated trial division); the zero element has an
/// empty denominator.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num) : num_(std::move(num)) {}

    /// num / prod(den_factors); every factor must be a nonzero linear form.
    static RationalFunction quotient(Polynomial num, std::span<const Polynomial> den_factors);

    const Polynomial& num() const { return num_; }
    const std::vector<Polynomial>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// The value as a Polynomial when the reduced denominator is empty.
    std::optional<Polynomial> as_polynomial() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator*(const Polynomial& p) const;
    RationalFunction operator-() const;

    /// Divides by a nonzero linear form.
    RationalFunction div_by_linear(const Polynomial& alpha) const;

    bool operator==(const RationalFunction&) const = default;

private:
    Polynomial num_;
    std::vector<Polynomial> den_;

    void reduce();
};

RationalFunction weyl_act(int j, const RationalFunction& f, const CartanMatrix& cm);
RationalFunction divided_difference(int j, const RationalFunction& f, const CartanMatrix& cm);

std::string to_text(const RationalFunction& f);

}  // namespace bsassign
