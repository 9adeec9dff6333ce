#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "highwater/scalar.hpp"

namespace highwater {

enum class KeyKind : std::uint8_t { A = 0, S = 1, P = 2 };

/// Basis vector label: a(i) for i in Z, s(j) for j >= 1, p(r,k) for r in {1,2} and k in 3N.
struct BasisKey {
    KeyKind kind;
    long index;
    int residue;  // 1 or 2 for P keys, 0 otherwise

    static BasisKey a(long i) { return {KeyKind::A, i, 0}; }
    static BasisKey s(long j);
    static BasisKey p(int r, long k);

    auto operator<=>(const BasisKey&) const = default;
    std::string to_string() const;
};

/// Residue of n modulo 3 in {0, 1, 2}.
inline int mod3(long n) {
    long r = n % 3;
    return static_cast<int>(r < 0 ? r + 3 : r);
}

/// A finitely supported vector of the infinite-dimensional algebra, tagged with its field.
class Element {
public:
    using Terms = std::map<BasisKey, Scalar>;

    explicit Element(const Field& field) : field_(field) {}

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const BasisKey& k) const;

    /// Adds c times the basis vector k; k must already be a canonical key.
    void add(const BasisKey& k, const Scalar& c);
    /// Adds c*a(i).
    void add_a(long i, const Scalar& c);
    /// Adds c*s(j); s(0) is zero.
    void add_s(long j, const Scalar& c);
    /// Adds c*p(r,k) for any r in Z: zero unless k is a positive multiple of 3, residue 0 rewritten as -p(1,k) - p(2,k).
    void add_p(long r, long k, const Scalar& c);
    /// Adds c*z(r,j) = c*(p(r+1,j) - p(r-1,j)).
    void add_z(long r, long j, const Scalar& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& s);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element x) { return x *= s; }
    friend Element operator*(Element x, const Scalar& s) { return x *= s; }
    /// Algebra product.
    friend Element operator*(const Element& x, const Element& y);

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Parts by key family.
    Element a_part() const;
    Element s_part() const;
    Element p_part() const;
    bool in_j() const;

    /// Printed form, e.g. "1/2*a(0) + 1/2*a(1) + s(1)".
    std::string to_string() const;

private:
    void check(const Field& f) const;
    Field field_;
    Terms terms_;
};

/// Basis-vector constructors. s(0), p(r,k) for k not in 3N, and z(r,j) for j not in 3N are zero.
Element a(const Field& F, long i);
Element s(const Field& F, long j);
Element p(const Field& F, long r, long k);
Element z(const Field& F, long r, long j);
Element sigma(const Field& F, long j);
/// First definition spanning element: sigma(j) + z(r,j).
Element first_def_s(const Field& F, long r, long j);

Element multiply(const Element& x, const Element& y);
/// The weight homomorphism: sum of the a-coefficients.
Scalar weight(const Element& x);
/// The Frobenius form (x,y) = weight(x) weight(y).
Scalar frobenius(const Element& x, const Element& y);

}  // namespace highwater
