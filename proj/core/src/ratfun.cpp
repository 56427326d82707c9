#include "bsassign/ratfun.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace bsassign {

namespace {

// Monic linear form; scales `content` by the leading coefficient.
Polynomial make_monic(const Polynomial& f, Rational& content) {
    assert(is_linear_form(f));
    const Rational& lc = f.leading_term().coef;
    content *= lc;
    return f * (Rational(1) / lc);
}

bool den_order(const Polynomial& a, const Polynomial& b) {
    if (int c = cmp_monomial(a.leading_term().mono, b.leading_term().mono); c != 0)
        return c > 0;
    const Weight wa = to_weight(a), wb = to_weight(b);
    for (std::size_t i = 0; i < wa.coords.size(); ++i)
        if (wa.coords[i] != wb.coords[i])
            return wa.coords[i] > wb.coords[i];
    return false;
}

}  // namespace

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (std::size_t i = 0; i < den_.size();) {
        if (auto q = exact_divide(num_, den_[i])) {
            num_ = std::move(*q);
            den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
            i = 0;
        } else {
            ++i;
        }
    }
    std::sort(den_.begin(), den_.end(), den_order);
}

RationalFunction RationalFunction::quotient(Polynomial num, std::span<const Polynomial> den_factors) {
    Rational content(1);
    RationalFunction f;
    f.den_.reserve(den_factors.size());
    for (const auto& d : den_factors) {
        if (!is_linear_form(d))
            throw std::invalid_argument("denominator factor must be a nonzero linear form");
        f.den_.push_back(make_monic(d, content));
    }
    f.num_ = num * (Rational(1) / content);
    f.reduce();
    return f;
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
    if (den_.empty())
        return num_;
    return std::nullopt;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    // Common factors of the two denominators are used once.
    std::vector<Polynomial> common, only_this = den_, only_other;
    for (const auto& d : o.den_) {
        auto it = std::find(only_this.begin(), only_this.end(), d);
        if (it != only_this.end()) {
            common.push_back(d);
            only_this.erase(it);
        } else {
            only_other.push_back(d);
        }
    }
    Polynomial n1 = num_;
    for (const auto& d : only_other)
        n1 = n1 * d;
    Polynomial n2 = o.num_;
    for (const auto& d : only_this)
        n2 = n2 * d;
    RationalFunction out;
    out.num_ = n1 + n2;
    out.den_ = common;
    out.den_.insert(out.den_.end(), only_this.begin(), only_this.end());
    out.den_.insert(out.den_.end(), only_other.begin(), only_other.end());
    out.reduce();
    return out;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    RationalFunction out;
    out.num_ = num_ * o.num_;
    out.den_ = den_;
    out.den_.insert(out.den_.end(), o.den_.begin(), o.den_.end());
    out.reduce();
    return out;
}

RationalFunction RationalFunction::operator*(const Polynomial& p) const {
    RationalFunction out = *this;
    out.num_ = out.num_ * p;
    out.reduce();
    return out;
}

RationalFunction RationalFunction::div_by_linear(const Polynomial& alpha) const {
    if (!is_linear_form(alpha))
        throw std::invalid_argument("division requires a nonzero linear form");
    Rational content(1);
    Polynomial monic = make_monic(alpha, content);
    RationalFunction out = *this;
    out.num_ = out.num_ * (Rational(1) / content);
    out.den_.push_back(std::move(monic));
    out.reduce();
    return out;
}

RationalFunction weyl_act(int j, const RationalFunction& f, const CartanMatrix& cm) {
    RationalFunction out(weyl_act(j, f.num(), cm));
    for (const auto& d : f.den())
        out = out.div_by_linear(weyl_act(j, d, cm));
    return out;
}

RationalFunction divided_difference(int j, const RationalFunction& f, const CartanMatrix& cm) {
    RationalFunction diff = weyl_act(j, f, cm) - f;
    if (diff.is_zero())
        return diff;
    return diff.div_by_linear(Polynomial::variable(f.num().nvars(), j));
}

std::string to_text(const RationalFunction& f) {
    if (f.den().empty())
        return to_text(f.num());
    std::ostringstream os;
    os << "(" << to_text(f.num()) << ")/(";
    for (std::size_t i = 0; i < f.den().size(); ++i) {
        if (i)
            os << "*";
        os << "(" << to_text(f.den()[i]) << ")";
    }
    os << ")";
    return os.str();
}

}  // namespace bsassign
