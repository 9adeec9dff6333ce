#include "highwater/automorphism.hpp"

namespace highwater {

Automorphism tau(long two_k) { return {-1, two_k}; }

Automorphism miyamoto(long i) { return tau(2 * i); }

Automorphism theta(long j) { return {1, j}; }

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    return {f.sign * g.sign, g.sign * f.offset + g.offset};
}

Element apply(const Automorphism& f, const Element& x) {
    Element out(x.field());
    Scalar sgn(x.field(), f.sign);
    for (const auto& [k, c] : x.terms()) {
        switch (k.kind) {
            case KeyKind::A: out.add_a(f.map_index(k.index), c); break;
            case KeyKind::S: out.add(k, c); break;
            case KeyKind::P: out.add_p(f.map_index(k.residue), k.index, sgn * c); break;
        }
    }
    return out;
}

}  // namespace highwater
