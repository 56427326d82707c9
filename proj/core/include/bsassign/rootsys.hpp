#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsassign/rational.hpp"

namespace bsassign {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

/// A classical family or G2, with Bourbaki node numbering.
struct LieType {
    Family family;
    int rank;

    /// Parses "A2", "B3", "G2", ... Throws std::invalid_argument on invalid
    /// family/rank combinations (G requires rank 2, D requires rank >= 3).
    static LieType parse(std::string_view text);

    std::string name() const;
};

/// Integer matrix a with a[i][j] = <alpha_i, alpha_j^vee>, 1-based indices.
class CartanMatrix {
public:
    CartanMatrix() : rank_(0) {}
    CartanMatrix(int rank, std::vector<int> entries);

    int rank() const { return rank_; }
    int entry(int i, int j) const { return entries_[static_cast<std::size_t>(i - 1) * rank_ + (j - 1)]; }

    bool operator==(const CartanMatrix&) const = default;

private:
    int rank_;
    std::vector<int> entries_;
};

CartanMatrix cartan_matrix(LieType lt);

/// An element of t*: the coefficients of beta = sum c_i alpha_i in the
/// simple-root basis.
struct Weight {
    std::vector<Rational> coords;

    static Weight zero(int rank);
    static Weight simple_root(int j, int rank);  // 1-based

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(const Rational& c) const;
    bool operator==(const Weight&) const = default;
};

/// <beta, alpha_j^vee> = sum_i coords(beta)[i] * a[i][j].
Rational pairing(const Weight& beta, int j, const CartanMatrix& cm);

/// s_j(beta) = beta - <beta, alpha_j^vee> alpha_j.
Weight reflect(int j, const Weight& beta, const CartanMatrix& cm);

/// True iff beta and gamma are nonzero multiples of each other.
bool collinear(const Weight& beta, const Weight& gamma);

/// The representative of {beta, -beta} whose lowest-index nonzero
/// coefficient is positive.
Weight sign_normalized(const Weight& beta);

/// A covector xi in t, stored as the r values alpha_i(xi).
struct Polarization {
    std::vector<Rational> values;

    int rank() const { return static_cast<int>(values.size()); }
    bool operator==(const Polarization&) const = default;
};

/// beta(xi) = sum_i coords(beta)[i] * values(xi)[i].
Rational eval(const Weight& beta, const Polarization& xi);

/// The dual reflection, defined by eval(beta, reflect_pol(j, xi)) =
/// eval(reflect(j, beta), xi) for all beta.
Polarization reflect_pol(int j, const Polarization& xi, const CartanMatrix& cm);

/// True iff eval(beta, xi) != 0 for every beta in labels.
bool is_polarizing(const Polarization& xi, std::span<const Weight> labels);

}  // namespace bsassign
