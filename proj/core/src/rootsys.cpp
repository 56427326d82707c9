#include "bsassign/rootsys.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>

namespace bsassign {

namespace {

void require(bool cond, const std::string& message) {
    if (!cond)
        throw std::invalid_argument(message);
}

}  // namespace

LieType LieType::parse(std::string_view text) {
    require(text.size() >= 2, "Lie type must look like A2, B3, ...: '" + std::string(text) + "'");
    char f = text[0];
    require(f == 'A' || f == 'B' || f == 'C' || f == 'D' || f == 'G',
            std::string("unsupported family '") + f + "' (supported: A, B, C, D, G)");
    int rank = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
    require(ec == std::errc{} && ptr == text.data() + text.size() && rank >= 1,
            "invalid rank in Lie type '" + std::string(text) + "'");
    LieType lt{static_cast<Family>(f), rank};
    cartan_matrix(lt);  // validates the family/rank combination
    return lt;
}

std::string LieType::name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanMatrix::CartanMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
    assert(entries_.size() == static_cast<std::size_t>(rank) * rank);
    for (int i = 1; i <= rank_; ++i) {
        assert(entry(i, i) == 2);
        for (int j = 1; j <= rank_; ++j) {
            if (i != j) {
                assert(entry(i, j) <= 0);
                assert((entry(i, j) == 0) == (entry(j, i) == 0));
            }
        }
    }
}

CartanMatrix cartan_matrix(LieType lt) {
    const int r = lt.rank;
    require(r >= 1, "rank must be positive");
    std::vector<int> a(static_cast<std::size_t>(r) * r, 0);
    auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i - 1) * r + (j - 1)] = v; };
    for (int i = 1; i <= r; ++i)
        set(i, i, 2);

    switch (lt.family) {
        case Family::A:
            for (int i = 1; i < r; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            break;
        case Family::B:
            // Bourbaki: alpha_r short; <alpha_{r-1}, alpha_r^vee> = -2.
            for (int i = 1; i < r; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            if (r >= 2)
                set(r - 1, r, -2);
            break;
        case Family::C:
            // Bourbaki: alpha_r long; <alpha_r, alpha_{r-1}^vee> = -2.
            for (int i = 1; i < r; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            if (r >= 2)
                set(r, r - 1, -2);
            break;
        case Family::D:
            require(r >= 3, "type D requires rank >= 3");
            for (int i = 1; i <= r - 2; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            set(r - 2, r, -1);
            set(r, r - 2, -1);
            set(r - 1, r, 0);
            set(r, r - 1, 0);
            break;
        case Family::G:
            require(r == 2, "type G requires rank 2");
            // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3.
            set(1, 2, -1);
            set(2, 1, -3);
            break;
    }
    return CartanMatrix(r, std::move(a));
}

Weight Weight::zero(int rank) { return Weight{std::vector<Rational>(rank, Rational(0))}; }

Weight Weight::simple_root(int j, int rank) {
    assert(j >= 1 && j <= rank);
    Weight w = zero(rank);
    w.coords[j - 1] = 1;
    return w;
}

bool Weight::is_zero() const {
    for (const auto& c : coords)
        if (c != 0)
            return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    assert(coords.size() == o.coords.size());
    Weight w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        w.coords[i] += o.coords[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Weight w = *this;
    for (auto& c : w.coords)
        c = -c;
    return w;
}

Weight Weight::operator*(const Rational& c) const {
    Weight w = *this;
    for (auto& x : w.coords)
        x *= c;
    return w;
}

Rational pairing(const Weight& beta, int j, const CartanMatrix& cm) {
    if (j < 1 || j > cm.rank())
        throw std::out_of_range("simple-root index out of range");
    Rational s(0);
    for (int i = 1; i <= cm.rank(); ++i)
        s += beta.coords[i - 1] * cm.entry(i, j);
    return s;
}

Weight reflect(int j, const Weight& beta, const CartanMatrix& cm) {
    Rational p = pairing(beta, j, cm);
    Weight w = beta;
    w.coords[j - 1] -= p;
    return w;
}

bool collinear(const Weight& beta, const Weight& gamma) {
    if (beta.is_zero() || gamma.is_zero())
        return false;
    // beta = lambda * gamma: cross-ratios must all agree.
    std::size_t k = 0;
    while (gamma.coords[k] == 0) {
        if (beta.coords[k] != 0)
            return false;
        ++k;
    }
    Rational lambda = beta.coords[k] / gamma.coords[k];
    for (std::size_t i = 0; i < beta.coords.size(); ++i)
        if (beta.coords[i] != lambda * gamma.coords[i])
            return false;
    return true;
}

Weight sign_normalized(const Weight& beta) {
    for (const auto& c : beta.coords) {
        if (c > 0)
            return beta;
        if (c < 0)
            return -beta;
    }
    return beta;
}

Rational eval(const Weight& beta, const Polarization& xi) {
    assert(beta.coords.size() == xi.values.size());
    Rational s(0);
    for (std::size_t i = 0; i < xi.values.size(); ++i)
        s += beta.coords[i] * xi.values[i];
    return s;
}

Polarization reflect_pol(int j, const Polarization& xi, const CartanMatrix& cm) {
    if (j < 1 || j > cm.rank())
        throw std::out_of_range("simple-root index out of range");
    Polarization out = xi;
    for (int i = 1; i <= cm.rank(); ++i)
        out.values[i - 1] = xi.values[i - 1] - cm.entry(i, j) * xi.values[j - 1];
    return out;
}

bool is_polarizing(const Polarization& xi, std::span<const Weight> labels) {
    for (const auto& beta : labels)
        if (eval(beta, xi) == 0)
            return false;
    return true;
}

}  // namespace bsassign
