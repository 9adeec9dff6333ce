#pragma once

#include "highwater/element.hpp"

namespace highwater {

/// Automorphism induced by the index map i -> sign*i + offset of the infinite dihedral group.
/// Acts on the right: apply(compose(f, g), x) == apply(g, apply(f, x)).
struct Automorphism {
    int sign = 1;
    long offset = 0;

    long map_index(long i) const { return sign * i + offset; }
    bool operator==(const Automorphism&) const = default;
};

/// Reflection i -> two_k - i (the reflection about the point two_k / 2).
Automorphism tau(long two_k);
/// The Miyamoto involution of the axis a(i): reflection about i.
Automorphism miyamoto(long i);
/// Translation i -> i + j.
Automorphism theta(long j);
/// f first, then g.
Automorphism compose(const Automorphism& f, const Automorphism& g);

Element apply(const Automorphism& f, const Element& x);

}  // namespace highwater
