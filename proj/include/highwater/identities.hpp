#pragma once

#include "highwater/report.hpp"
#include "highwater/scalar.hpp"

namespace highwater {

/// Closed-form products of the eigenvector families (c, s, z, u, v and their pair forms)
/// for indices 1 <= i, j <= n_max, and products with z(r,j).
Report product_identities(long n_max, const Field& F);

/// Automorphism formulas: reflection images of u, v, w, z, wt written as algebra expressions
/// and translation identities for wt and w, for indices 1 <= i <= i_max.
/// Characteristic-5-only formulas run when F has characteristic 5.
Report reflection_identities(long i_max, const Field& F);

}  // namespace highwater
