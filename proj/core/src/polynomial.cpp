#include "bsassign/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bsassign {

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

int cmp_monomial(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db ? -1 : 1;
    // grevlex: a > b iff the rightmost nonzero entry of a - b is negative.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

namespace {

struct MonoDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp_monomial(a, b) > 0; }
};

}  // namespace

Polynomial Polynomial::constant(int nvars, Rational c) {
    Polynomial p(nvars);
    if (c != 0)
        p.terms_.push_back(Term{Monomial(nvars, 0), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(int nvars, int j) {
    assert(j >= 1 && j <= nvars);
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[j - 1] = 1;
    p.terms_.push_back(Term{std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    std::map<Monomial, Rational, MonoDesc> acc;
    for (auto& t : terms) {
        assert(static_cast<int>(t.mono.size()) == nvars);
        acc[std::move(t.mono)] += t.coef;
    }
    Polynomial p(nvars);
    for (auto& [m, c] : acc)
        if (c != 0)
            p.terms_.push_back(Term{m, c});
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, total_degree(t.mono));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = total_degree(terms_.front().mono);
    for (const auto& t : terms_)
        if (total_degree(t.mono) != d)
            return false;
    return true;
}

const Term& Polynomial::leading_term() const {
    assert(!terms_.empty());
    return terms_.front();
}

Rational Polynomial::constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rational(0) : terms_.front().coef;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m)
            return t.coef;
    return Rational(0);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    Polynomial out(nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_monomial(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coef + o.terms_[j].coef;
            if (s != 0)
                out.terms_.push_back(Term{terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        out.terms_.push_back(o.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_)
        t.coef = -t.coef;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    std::map<Monomial, Rational, MonoDesc> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m(nvars_);
            for (int v = 0; v < nvars_; ++v)
                m[v] = a.mono[v] + b.mono[v];
            acc[std::move(m)] += a.coef * b.coef;
        }
    }
    Polynomial out(nvars_);
    for (auto& [m, c] : acc)
        if (c != 0)
            out.terms_.push_back(Term{m, c});
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0)
        return Polynomial(nvars_);
    Polynomial out = *this;
    for (auto& t : out.terms_)
        t.coef *= c;
    return out;
}

Polynomial from_weight(const Weight& w) {
    const int r = w.rank();
    std::vector<Term> terms;
    for (int i = 0; i < r; ++i) {
        if (w.coords[i] != 0) {
            Monomial m(r, 0);
            m[i] = 1;
            terms.push_back(Term{std::move(m), w.coords[i]});
        }
    }
    return Polynomial::from_terms(r, std::move(terms));
}

bool is_linear_form(const Polynomial& p) {
    if (p.is_zero())
        return false;
    for (const auto& t : p.terms())
        if (total_degree(t.mono) != 1)
            return false;
    return true;
}

Weight to_weight(const Polynomial& p) {
    assert(is_linear_form(p));
    Weight w = Weight::zero(p.nvars());
    for (const auto& t : p.terms()) {
        for (int v = 0; v < p.nvars(); ++v)
            if (t.mono[v] == 1)
                w.coords[v] = t.coef;
    }
    return w;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero())
        throw std::invalid_argument("exact_divide by zero");
    const int n = p.nvars();
    Polynomial rem = p;
    std::vector<Term> quot;
    const Term& lead = d.leading_term();
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        Monomial q(n);
        for (int v = 0; v < n; ++v) {
            q[v] = lt.mono[v] - lead.mono[v];
            if (q[v] < 0)
                return std::nullopt;
        }
        Rational qc = lt.coef / lead.coef;
        quot.push_back(Term{q, qc});
        Polynomial qmono = Polynomial::from_terms(n, {Term{std::move(q), std::move(qc)}});
        rem = rem - qmono * d;
    }
    return Polynomial::from_terms(n, std::move(quot));
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    const int n = p.nvars();
    assert(static_cast<int>(images.size()) == n);
    // Powers of each image, grown on demand.
    std::vector<std::vector<Polynomial>> powers(n);
    for (int v = 0; v < n; ++v)
        powers[v].push_back(Polynomial::constant(n, 1));
    auto power = [&](int v, int e) -> const Polynomial& {
        while (static_cast<int>(powers[v].size()) <= e)
            powers[v].push_back(powers[v].back() * images[v]);
        return powers[v][e];
    };
    Polynomial out(n);
    for (const auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(n, t.coef);
        for (int v = 0; v < n; ++v)
            if (t.mono[v] > 0)
                prod = prod * power(v, t.mono[v]);
        out = out + prod;
    }
    return out;
}

Polynomial weyl_act(int j, const Polynomial& p, const CartanMatrix& cm) {
    if (j < 1 || j > cm.rank())
        throw std::out_of_range("simple-root index out of range");
    const int n = p.nvars();
    assert(n == cm.rank());
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int i = 1; i <= n; ++i)
        images.push_back(from_weight(reflect(j, Weight::simple_root(i, n), cm)));
    return substitute(p, images);
}

Polynomial divided_difference(int j, const Polynomial& p, const CartanMatrix& cm) {
    Polynomial diff = weyl_act(j, p, cm) - p;
    auto q = exact_divide(diff, Polynomial::variable(p.nvars(), j));
    if (!q)
        throw std::logic_error("divided difference division failed (arithmetic bug)");
    return *q;
}

int pivot_variable(const Polynomial& alpha) {
    assert(is_linear_form(alpha));
    int pivot = 0;
    for (const auto& t : alpha.terms())
        for (int v = 0; v < alpha.nvars(); ++v)
            if (t.mono[v] == 1)
                pivot = std::max(pivot, v + 1);
    return pivot;
}

Polynomial reduce_mod_linear(const Polynomial& p, const Polynomial& alpha) {
    if (!is_linear_form(alpha))
        throw std::invalid_argument("reduce_mod_linear: modulus must be a nonzero linear form");
    const int n = p.nvars();
    const Weight w = to_weight(alpha);
    const int m = pivot_variable(alpha);  // 1-based
    // x_m = -(alpha - c_m x_m) / c_m
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int i = 1; i <= n; ++i)
        images.push_back(Polynomial::variable(n, i));
    Weight rest = w;
    rest.coords[m - 1] = 0;
    images[m - 1] = from_weight(rest * (Rational(-1) / w.coords[m - 1]));
    return substitute(p, images);
}

Polynomial lead_sign_normalized(const Polynomial& p) {
    if (p.is_zero() || p.leading_term().coef > 0)
        return p;
    return -p;
}

std::string to_text(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coef;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        bool has_vars = total_degree(t.mono) > 0;
        if (!has_vars || c != 1) {
            os << to_string(c);
            if (has_vars)
                os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < p.nvars(); ++v) {
            if (t.mono[v] == 0)
                continue;
            if (!first_var)
                os << "*";
            first_var = false;
            os << "a" << (v + 1);
            if (t.mono[v] > 1)
                os << "^" << t.mono[v];
        }
    }
    return os.str();
}

}  // namespace bsassign
