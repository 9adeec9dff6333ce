#pragma once

#include <utility>
#include <vector>

#include "highwater/scalar.hpp"

namespace highwater {

/// Dense univariate polynomial, coefficients stored from the constant term upward.
class Poly {
public:
    explicit Poly(const Field& field) : field_(field) {}
    Poly(const Field& field, std::vector<Scalar> coeffs);
    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, std::size_t degree);

    const Field& field() const { return field_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(std::size_t i) const;
    Scalar lead() const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& s) const;
    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly monic() const;
    Scalar eval(const Scalar& x) const;
    /// Lowest index with a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const;
    /// Divides by x^valuation().
    Poly strip_valuation() const;

private:
    void trim();
    Field field_;
    std::vector<Scalar> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct XGcd {
    Poly g, s, t;  // g = s*a + t*b, g monic (or zero)
};
XGcd xgcd(const Poly& a, const Poly& b);

/// t^low * body(t).
struct Laurent {
    long low = 0;
    Poly body;
};

/// Laurent gcd of a family of nonzero Laurent polynomials: the monic generator g (with g(0) != 0)
/// of the ideal they span, plus cofactors q_i with sum q_i * f_i = g.
struct LaurentGcd {
    Poly gcd;
    std::vector<Laurent> cofactors;
};
LaurentGcd laurent_gcd(const std::vector<Laurent>& inputs);

}  // namespace highwater
