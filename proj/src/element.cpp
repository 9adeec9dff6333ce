#include "highwater/element.hpp"

#include <cstdlib>

#include "highwater/format.hpp"

namespace highwater {

BasisKey BasisKey::s(long j) {
    if (j < 1) throw AlgebraError("s key needs a positive index");
    return {KeyKind::S, j, 0};
}

BasisKey BasisKey::p(int r, long k) {
    if ((r != 1 && r != 2) || k < 3 || k % 3 != 0) throw AlgebraError("p key needs residue 1 or 2 and level in 3N");
    return {KeyKind::P, k, r};
}

std::string BasisKey::to_string() const {
    switch (kind) {
        case KeyKind::A: return "a(" + std::to_string(index) + ")";
        case KeyKind::S: return "s(" + std::to_string(index) + ")";
        case KeyKind::P: return "p(" + std::to_string(residue) + "," + std::to_string(index) + ")";
    }
    return {};
}

void Element::check(const Field& f) const {
    if (!(f == field_))
        throw FieldMismatch("elements over " + field_.name() + " and " + f.name() + " cannot be combined");
}

Scalar Element::coeff(const BasisKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add(const BasisKey& k, const Scalar& c) {
    check(c.field());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::add_a(long i, const Scalar& c) { add(BasisKey::a(i), c); }

void Element::add_s(long j, const Scalar& c) {
    if (j == 0) return;
    add(BasisKey::s(std::labs(j)), c);
}

void Element::add_p(long r, long k, const Scalar& c) {
    k = std::labs(k);
    if (k == 0 || k % 3 != 0) return;
    switch (mod3(r)) {
        case 0:
            add(BasisKey::p(1, k), -c);
            add(BasisKey::p(2, k), -c);
            break;
        case 1: add(BasisKey::p(1, k), c); break;
        default: add(BasisKey::p(2, k), c); break;
    }
}

void Element::add_z(long r, long j, const Scalar& c) {
    add_p(r + 1, j, c);
    add_p(r - 1, j, -c);
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

Element& Element::operator+=(const Element& o) {
    check(o.field_);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check(o.field_);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& s) {
    check(s.field());
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

bool Element::operator==(const Element& o) const {
    check(o.field_);
    return terms_ == o.terms_;
}

Element Element::a_part() const {
    Element out(field_);
    for (const auto& [k, c] : terms_)
        if (k.kind == KeyKind::A) out.terms_.emplace(k, c);
    return out;
}

Element Element::s_part() const {
    Element out(field_);
    for (const auto& [k, c] : terms_)
        if (k.kind == KeyKind::S) out.terms_.emplace(k, c);
    return out;
}

Element Element::p_part() const {
    Element out(field_);
    for (const auto& [k, c] : terms_)
        if (k.kind == KeyKind::P) out.terms_.emplace(k, c);
    return out;
}

bool Element::in_j() const {
    for (const auto& [k, c] : terms_)
        if (k.kind != KeyKind::P) return false;
    return true;
}

std::string Element::to_string() const { return format_element(*this); }

Element a(const Field& F, long i) {
    Element x(F);
    x.add_a(i, Scalar::one(F));
    return x;
}

Element s(const Field& F, long j) {
    if (j < 0) throw AlgebraError("s index must be non-negative");
    Element x(F);
    x.add_s(j, Scalar::one(F));
    return x;
}

Element p(const Field& F, long r, long k) {
    if (k < 0) throw AlgebraError("p level must be non-negative");
    Element x(F);
    x.add_p(r, k, Scalar::one(F));
    return x;
}

Element z(const Field& F, long r, long j) {
    if (j < 0) throw AlgebraError("z level must be non-negative");
    Element x(F);
    x.add_z(r, j, Scalar::one(F));
    return x;
}

Element sigma(const Field& F, long j) { return s(F, j); }

Element first_def_s(const Field& F, long r, long j) { return sigma(F, j) + z(F, r, j); }

namespace {

struct Constants {
    Scalar half, quarter, eighth, three_quarters, three_eighths, three_halves, one;
    explicit Constants(const Field& F)
        : half(F, 1, 2), quarter(F, 1, 4), eighth(F, 1, 8), three_quarters(F, 3, 4), three_eighths(F, 3, 8),
          three_halves(F, 3, 2), one(F, 1) {}
};

// Accumulates c * (basis product of k1 and k2) into out.
void basis_product(Element& out, const Constants& K, const BasisKey& k1, const BasisKey& k2, const Scalar& c) {
    const BasisKey& x = k1.kind <= k2.kind ? k1 : k2;
    const BasisKey& y = k1.kind <= k2.kind ? k2 : k1;
    if (x.kind == KeyKind::A && y.kind == KeyKind::A) {
        long i = x.index, j = y.index, d = std::labs(i - j);
        Scalar h = c * K.half;
        out.add_a(i, h);
        out.add_a(j, h);
        out.add_s(d, c);
        out.add_z(i, d, c);
    } else if (x.kind == KeyKind::A && y.kind == KeyKind::S) {
        long i = x.index, j = y.index;
        Scalar e = c * K.three_eighths;
        out.add_a(i, -(c * K.three_quarters));
        out.add_a(i - j, e);
        out.add_a(i + j, e);
        out.add_s(j, c * K.three_halves);
        out.add_z(i, j, -c);
    } else if (x.kind == KeyKind::A && y.kind == KeyKind::P) {
        long i = x.index, r = y.residue, k = y.index;
        out.add_p(r, k, c * K.three_halves);
        out.add_p(-(i + r), k, -c);
    } else if (x.kind == KeyKind::S && y.kind == KeyKind::S) {
        long j = x.index, l = y.index;
        Scalar q = c * K.three_quarters, e = -(c * K.three_eighths);
        out.add_s(j, q);
        out.add_s(l, q);
        out.add_s(std::labs(j - l), e);
        out.add_s(j + l, e);
    } else if (x.kind == KeyKind::S && y.kind == KeyKind::P) {
        long j = x.index, r = y.residue, k = y.index;
        Scalar q = c * K.three_quarters, e = -(c * K.three_eighths);
        out.add_p(r, j, q);
        out.add_p(r, k, q);
        out.add_p(r, std::labs(j - k), e);
        out.add_p(r, j + k, e);
    } else {
        long r = x.residue, h = x.index, t = y.residue, k = y.index, m = -(r + t);
        Scalar q = c * K.quarter, e = -(c * K.eighth);
        out.add_z(m, h, q);
        out.add_z(m, k, q);
        out.add_z(m, std::labs(h - k), e);
        out.add_z(m, h + k, e);
    }
}

}  // namespace

Element operator*(const Element& x, const Element& y) {
    x.check(y.field_);
    Element out(x.field_);
    if (x.is_zero() || y.is_zero()) return out;
    Constants K(x.field_);
    for (const auto& [k1, c1] : x.terms_)
        for (const auto& [k2, c2] : y.terms_) basis_product(out, K, k1, k2, c1 * c2);
    return out;
}

Element multiply(const Element& x, const Element& y) { return x * y; }

Scalar weight(const Element& x) {
    Scalar w = Scalar::zero(x.field());
    for (const auto& [k, c] : x.terms())
        if (k.kind == KeyKind::A) w += c;
    return w;
}

Scalar frobenius(const Element& x, const Element& y) { return weight(x) * weight(y); }

}  // namespace highwater
