#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "highwater/automorphism.hpp"
#include "highwater/element.hpp"
#include "highwater/linalg.hpp"
#include "highwater/poly.hpp"
#include "highwater/report.hpp"

namespace highwater {

/// a-length, s-level and p-level of an element, compared lexicographically.
struct Degrees {
    long a_length = 0;  // m - l + 1 for a-support [l, m]; 0 without a-terms
    long s_level = 0;
    long p_level = 0;
    /// Four times the J-degree 3k + sum of r/4 over the nonzero level-3k residues r; only for nonzero elements of J.
    std::optional<long> j_degree_quarters;

    auto key() const { return std::tuple(a_length, s_level, p_level); }
    bool operator<(const Degrees& o) const { return key() < o.key(); }
    bool operator<=(const Degrees& o) const { return key() <= o.key(); }
};

Degrees degrees(const Element& x);

/// For x a pure-a element with zero weight: (3 sum_i (alpha_{k-i}+alpha_{k+i}) s(i), same sum with p(k mod 3, i)).
std::pair<Element, Element> fold(const Element& x, long k);

/// A nonzero pure-a element of the ideal generated by g (g must lie outside J).
Element pure_a_extract(const Element& g);

/// Polynomial model of the level space: the level-m basis vector maps to E_m(T) = 2 - C_m(T), where
/// C_0 = 2, C_1 = T, C_{m+1} = T C_m - C_{m-1}. Multiplying by s(j) acts as (3/8) E_j(T).
class LevelPoly {
public:
    explicit LevelPoly(const Field& F) : F_(F) {}
    Poly e(long m) const;
    /// sum over (m, c) of c * E_m(T).
    Poly to_poly(const std::map<long, Scalar>& coeffs) const;
    /// Inverse of to_poly; requires f(2) = 0.
    std::map<long, Scalar> from_poly(const Poly& f) const;

private:
    Field F_;
    mutable std::vector<Poly> cache_;
};

/// A nonzero ideal inside J, determined by a monic tuple (beta_3, ..., beta_3k) with beta_3k = 1.
/// Its minimal-J-degree element is sum_m beta_3m p(1, 3m).
class JIdeal {
public:
    JIdeal(const Field& F, std::vector<Scalar> beta);

    const Field& field() const { return F_; }
    /// beta[m - 1] is the coefficient of p(1, 3m).
    const std::vector<Scalar>& tuple() const { return beta_; }
    long k() const { return static_cast<long>(beta_.size()); }
    long codimension() const { return 2 * (k() - 1); }

    Element generator() const;
    /// x, x^tau(0), s(i)x, (s(i)x)^tau(0) for i in 3N, up to p-level up_to.
    std::vector<Element> basis(long up_to) const;
    /// Reduces the p-part to levels below 3k; a- and s-parts are untouched.
    Element reduce(const Element& x) const;
    bool contains(const Element& x) const;
    /// p(r, 3m) for m < k.
    std::vector<BasisKey> quotient_keys() const;

    bool operator==(const JIdeal& o) const { return F_ == o.F_ && beta_ == o.beta_; }

private:
    Field F_;
    std::vector<Scalar> beta_;
    Poly f_;
};

JIdeal j_canonicalize(const Element& g);
JIdeal j_ideal_of(const std::vector<Element>& gens);

/// Spanning family of the ideal generated by a pure-a element of ideal type (pattern alpha_0..alpha_D).
std::vector<Element> minimal_ideal_basis(const std::vector<Scalar>& pattern, long up_to);

struct PatternStructure;

/// An ideal of the algebra, classified as zero, everything, inside J, or given by a pattern.
class Ideal {
public:
    enum class Variant { Zero, Full, InJ, Pattern };

    static Ideal zero(const Field& F);
    static Ideal full(const Field& F);

    Variant variant() const { return variant_; }
    const Field& field() const { return F_; }
    const std::vector<Element>& generators() const { return gens_; }

    /// Pattern variant: the pattern alpha_0..alpha_D (alpha_0 = 1) of the ideal's pure-a part, its symmetry sign,
    /// and the extension subspace beyond the minimal ideal of that pattern.
    const std::vector<Scalar>& pattern() const;
    int epsilon() const;
    std::vector<Element> extension() const;
    bool contains_j() const;
    /// InJ variant.
    const JIdeal& j_ideal() const;

    Element reduce(const Element& x) const;
    bool contains(const Element& x) const { return reduce(x).is_zero(); }
    /// Elements spanning the ideal's intersection with keys up to the bound (indices in [-up_to, up_to]).
    std::vector<Element> basis(long up_to) const;
    /// Canonical representatives of a basis of the quotient (Pattern and Full variants).
    std::vector<Element> quotient_basis() const;
    std::optional<std::size_t> quotient_dim() const;
    /// Dimension of the minimal-ideal quotient the extension lives in (Pattern variant).
    std::size_t window_dim() const;

private:
    friend Ideal ideal_of(const std::vector<Element>& gens);
    explicit Ideal(const Field& F) : F_(F) {}

    Variant variant_ = Variant::Zero;
    Field F_;
    std::vector<Element> gens_;
    std::optional<JIdeal> j_;
    std::shared_ptr<const PatternStructure> m_;
    std::shared_ptr<const EchelonBasis> ext_;
};

Ideal ideal_of(const std::vector<Element>& gens);
Element reduce(const Element& x, const Ideal& I);
bool membership(const Element& x, const Ideal& I);
/// Every basis element (indices up to sample_bound) mapped by f stays in the ideal.
Report aut_invariance_check(const Ideal& I, long sample_bound, const Automorphism& f = tau(1));

const char* variant_name(Ideal::Variant v);

}  // namespace highwater
