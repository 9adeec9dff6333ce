#include "highwater/derived.hpp"

#include <cstdlib>

namespace highwater {

namespace {
void require_index(long i) {
    if (i < 0) throw AlgebraError("eigenvector index must be non-negative");
}
}  // namespace

Element c_vec(const Field& F, long i) {
    require_index(i);
    return Scalar(F, 2) * a(F, 0) - a(F, -i) - a(F, i);
}

Element u_vec(const Field& F, long i) {
    require_index(i);
    return Scalar(F, 3) * c_vec(F, i) + Scalar(F, 4) * (s(F, i) + z(F, 0, i));
}

Element v_vec(const Field& F, long i) {
    require_index(i);
    return c_vec(F, i) - Scalar(F, 4) * (s(F, i) + z(F, 0, i));
}

Element w_vec(const Field& F, long i) {
    require_index(i);
    return a(F, -i) - a(F, i);
}

Element z_vec(const Field& F, long i) {
    require_index(i);
    return z(F, 0, i);
}

Element wt_vec(const Field& F, long i) {
    require_index(i);
    return p(F, 1, i) + p(F, 2, i);
}

Element family_vec(Family f, const Field& F, long i) {
    switch (f) {
        case Family::C: return c_vec(F, i);
        case Family::S: return s(F, i);
        case Family::U: return u_vec(F, i);
        case Family::V: return v_vec(F, i);
        case Family::Z: return z_vec(F, i);
    }
    return Element(F);
}

Element pair_vec(Family f, const Field& F, long i, long j) {
    return Scalar(F, -2) * (family_vec(f, F, i) + family_vec(f, F, j)) + family_vec(f, F, std::labs(i - j)) +
           family_vec(f, F, i + j);
}

}  // namespace highwater
