#pragma once

#include "highwater/element.hpp"

namespace highwater {

// Eigenvector families of ad(a(0)), indexed by i >= 0. Every family vanishes at i = 0.

/// 2a(0) - a(-i) - a(i).
Element c_vec(const Field& F, long i);
/// 6a(0) - 3(a(-i) + a(i)) + 4s(i) + 4z(0,i); eigenvalue 0.
Element u_vec(const Field& F, long i);
/// 2a(0) - (a(-i) + a(i)) - 4s(i) - 4z(0,i); eigenvalue 2.
Element v_vec(const Field& F, long i);
/// a(-i) - a(i); eigenvalue 1/2.
Element w_vec(const Field& F, long i);
/// z(0,i) = p(1,i) - p(2,i); eigenvalue 5/2.
Element z_vec(const Field& F, long i);
/// p(1,i) + p(2,i) = -p(0,i); eigenvalue 1/2.
Element wt_vec(const Field& F, long i);

enum class Family { C, S, U, V, Z };

Element family_vec(Family f, const Field& F, long i);
/// x_{i,j} = -2(x_i + x_j) + x_{|i-j|} + x_{i+j}; Family::S gives t_{i,j}.
Element pair_vec(Family f, const Field& F, long i, long j);

}  // namespace highwater
