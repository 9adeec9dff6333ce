#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "highwater/automorphism.hpp"
#include "highwater/ideals.hpp"
#include "highwater/linalg.hpp"
#include "highwater/report.hpp"

namespace highwater {

/// Finite-dimensional quotient of the algebra (or of J) by an ideal, with its structure constants.
/// Basis labels are single basis keys: surviving a-keys first, then s-keys, then p-keys.
class FiniteAlgebra {
public:
    /// Quotient by a Pattern or Full ideal.
    static FiniteAlgebra of(const Ideal& I);
    /// J / I for an InJ ideal.
    static FiniteAlgebra of_j(const Ideal& I);

    const Field& field() const { return F_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<Element>& basis_labels() const { return labels_; }
    const Ideal& source() const { return source_; }
    bool relative_to_j() const { return in_j_; }

    /// Coordinates of the image of x.
    Vec image(const Element& x) const;
    /// Canonical representative of the class with coordinates v.
    Element lift(const Vec& v) const;
    /// Coordinates of basis_i * basis_j.
    const Vec& structure(std::size_t i, std::size_t j) const { return table_[i][j]; }
    Vec mul(const Vec& x, const Vec& y) const;
    /// Matrix of y -> x y.
    Matrix adjoint(const Vec& x) const;
    /// Matrix of the map induced by f, if f maps the ideal into itself.
    std::optional<Matrix> induced(const Automorphism& f) const;

    /// {field, dim, basis_labels, structure_constants}; row i of structure_constants lists basis_i * basis_j for j <= i.
    nlohmann::json to_json() const;

private:
    FiniteAlgebra(const Ideal& I, bool in_j, std::vector<Element> labels);

    Field F_;
    Ideal source_;
    bool in_j_;
    std::vector<Element> labels_;
    std::map<BasisKey, std::size_t> index_;
    std::vector<std::vector<Vec>> table_;
};

/// Adds p(1,3) to the generators, so the quotient factors through the algebra modulo J.
Ideal collapse_j(const Ideal& I);

/// Ideal (a0 - a(n)) and its quotient; with_j collapses J as well.
Ideal family_h_ideal(long n, const Field& F, bool with_j);
/// Ideal (2a0 - a(-n) - a(n)) and its quotient; with_j collapses J as well.
Ideal family_l_ideal(long n, const Field& F, bool with_j);

struct FamilyRow {
    long n;
    std::size_t h_hat, h, l_hat, l;
};

std::vector<FamilyRow> families(long max_n, const Field& F);
/// Checks the dimension formulas for every row of families(max_n, F).
Report family_report(long max_n, const Field& F);
long expected_h(long n, bool hat);
long expected_l(long n, bool hat);

/// Eigenvectors of an adjoint matrix for the field images of 1, 5/2, 0, 2, 1/2.
/// nullopt when they do not span the whole space.
std::optional<std::vector<std::pair<Scalar, std::vector<Vec>>>> eigenspaces(const Matrix& ad);

/// Map that negates the 1/2-eigenspace of ad_x and fixes the other eigenspaces.
std::optional<Matrix> miyamoto_matrix(const FiniteAlgebra& Q, const Vec& x);

struct AxisOrbit {
    std::vector<Vec> axes;
    bool closed = false;
    /// Order of the group generated by the Miyamoto maps of the orbit, when it stays within the search bound.
    std::optional<std::size_t> group_order;
};

/// Closure of the images of a0 and a1 under the Miyamoto maps of the axes found so far.
/// Stops unclosed once more than cutoff axes are known or an axis has a non-semisimple adjoint.
AxisOrbit axis_orbit(const FiniteAlgebra& Q, std::size_t cutoff);

/// H(n) (with J collapsed) has n axes for n <= max_n; L(1) has p axes in characteristic p and does not
/// close within the cutoff over Q.
Report orbit_report(const Field& F, long max_n, std::size_t cutoff);

/// Exceptional-quotient checks. The characteristic-7 and characteristic-5 cases always run over GF(7) and GF(5);
/// the rest run over F.
Report exceptional_suite(const Field& F = Field::rationals());

}  // namespace highwater
