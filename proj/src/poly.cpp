#include "highwater/poly.hpp"

namespace highwater {

Poly::Poly(const Field& field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar::zero(c.field()));
    v[degree] = c;
    return Poly(c.field(), std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

Scalar Poly::lead() const { return c_.empty() ? Scalar::zero(field_) : c_.back(); }

Poly Poly::operator+(const Poly& o) const {
    std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Scalar(field_, -1); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Scalar& s) const {
    std::vector<Scalar> v = c_;
    for (auto& x : v) x *= s;
    return Poly(field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw AlgebraError("polynomial division by zero");
    std::vector<Scalar> r = c_;
    long dd = d.degree();
    if (degree() < dd) return {Poly(field_), *this};
    std::vector<Scalar> q(static_cast<std::size_t>(degree() - dd + 1), Scalar::zero(field_));
    Scalar inv = d.lead().inverse();
    for (long i = degree(); i >= dd; --i) {
        Scalar f = r[static_cast<std::size_t>(i)] * inv;
        if (f.is_zero()) continue;
        q[static_cast<std::size_t>(i - dd)] = f;
        for (long j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {Poly(field_, std::move(q)), Poly(field_, std::move(r))};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::size_t Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    return 0;
}

Poly Poly::strip_valuation() const {
    std::size_t v = valuation();
    return Poly(field_, std::vector<Scalar>(c_.begin() + static_cast<long>(v), c_.end()));
}

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

XGcd xgcd(const Poly& a, const Poly& b) {
    const Field& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Scalar::one(F)), s1(F);
    Poly t0(F), t1 = Poly::constant(Scalar::one(F));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = r0.lead().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

LaurentGcd laurent_gcd(const std::vector<Laurent>& inputs) {
    if (inputs.empty()) throw AlgebraError("laurent_gcd needs at least one input");
    const Field& F = inputs.front().body.field();
    // Work with the plain polynomials P_i = t^{-shift_i} f_i, where shift_i absorbs the low exponent.
    std::vector<long> shift;
    std::vector<Poly> P;
    for (const auto& f : inputs) {
        if (f.body.is_zero()) throw AlgebraError("laurent_gcd input is zero");
        shift.push_back(f.low + static_cast<long>(f.body.valuation()));
        P.push_back(f.body.strip_valuation());
    }
    Poly g = P[0];
    std::vector<Poly> co{Poly::constant(Scalar::one(F))};
    for (std::size_t i = 1; i < P.size(); ++i) {
        XGcd x = xgcd(g, P[i]);
        for (auto& c : co) c = c * x.s;
        co.push_back(x.t);
        g = x.g;
    }
    Scalar inv = g.lead().inverse();
    g = g * inv;
    LaurentGcd out{g, {}};
    for (std::size_t i = 0; i < P.size(); ++i) out.cofactors.push_back({-shift[i], co[i] * inv});
    return out;
}

}  // namespace highwater
