#pragma once

#include <map>
#include <utility>
#include <vector>

#include "highwater/element.hpp"
#include "highwater/report.hpp"

namespace highwater {

/// Eigenvalues of ad(a(0)) before specialising to a field: 1, 5/2, 0, 2, 1/2.
enum class EigenLabel { One, FiveHalves, Zero, Two, Half };

Scalar eigenvalue(EigenLabel l, const Field& F);
const char* label_name(EigenLabel l);

/// Fusion table for the labels; in characteristic 5 the labels 0 and 5/2 coincide and their rows merge.
class FusionLaw {
public:
    explicit FusionLaw(const Field& F);
    /// Distinct eigenvalues in the field.
    const std::vector<Scalar>& eigenvalues() const { return values_; }
    /// Eigenvalues allowed in a product of a lambda- and a mu-eigenvector.
    std::vector<Scalar> allowed(const Scalar& lambda, const Scalar& mu) const;
    bool is_allowed(const Scalar& lambda, const Scalar& mu, const Scalar& nu) const;

    static std::vector<EigenLabel> label_rule(EigenLabel x, EigenLabel y);

private:
    Field field_;
    std::vector<Scalar> values_;
};

/// Decomposition of an element into ad(a(axis))-eigencomponents.
struct EigenDecomposition {
    Field field;
    std::map<EigenLabel, Element> labelled;  // the 0 and 5/2 parts stay separate here

    /// Components merged by eigenvalue in the field (0 and 5/2 merge in characteristic 5).
    std::vector<std::pair<Scalar, Element>> components() const;
    Element component(const Scalar& lambda) const;
    Element part(EigenLabel l) const;
    Element sum() const;
};

/// Splits x into slices about a(center): slice 0 is the a(center) term; slice i >= 1 collects
/// a(center - i), a(center + i), s(i) and p(., i).
std::map<long, Element> slice_split(const Element& x, long center);

EigenDecomposition eigendecompose(const Element& x, long axis);

/// Checks every product of eigenvectors a(0), u_i, v_i, w_i, z_i, wt_i (1 <= i <= i_max) against the fusion law.
Report fusion_check(long i_max, const Field& F);

/// Eigen route (negate the 1/2-part) against the index route for basis keys up to support_bound.
Report miyamoto_consistency(long axis, long support_bound, const Field& F);

}  // namespace highwater
