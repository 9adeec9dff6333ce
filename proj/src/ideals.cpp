#include "highwater/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "highwater/automorphism.hpp"

namespace highwater {

// ---------------------------------------------------------------------------------------------
// Degrees, folding, pure-a extraction

Degrees degrees(const Element& x) {
    Degrees d;
    std::optional<long> lo, hi;
    for (const auto& [k, c] : x.terms()) {
        switch (k.kind) {
            case KeyKind::A:
                if (!lo) lo = k.index;
                hi = k.index;
                break;
            case KeyKind::S: d.s_level = std::max(d.s_level, k.index); break;
            case KeyKind::P: d.p_level = std::max(d.p_level, k.index); break;
        }
    }
    if (lo) d.a_length = *hi - *lo + 1;
    if (!x.is_zero() && x.in_j()) {
        long q = 4 * d.p_level;
        for (int r : {1, 2})
            if (!x.coeff(BasisKey::p(r, d.p_level)).is_zero()) q += r;
        d.j_degree_quarters = q;
    }
    return d;
}

namespace {

std::map<long, Scalar> a_coeffs(const Element& x) {
    std::map<long, Scalar> m;
    for (const auto& [k, c] : x.terms())
        if (k.kind == KeyKind::A) m.emplace(k.index, c);
    return m;
}

// Coefficients alpha_{k-i} + alpha_{k+i} for i >= 1.
std::map<long, Scalar> folded(const std::map<long, Scalar>& alpha, long k) {
    std::map<long, Scalar> out;
    for (const auto& [j, c] : alpha) {
        long i = std::labs(j - k);
        if (i == 0) continue;
        auto [it, ins] = out.try_emplace(i, c);
        if (!ins) it->second += c;
    }
    std::erase_if(out, [](const auto& pr) { return pr.second.is_zero(); });
    return out;
}

}  // namespace

std::pair<Element, Element> fold(const Element& x, long k) {
    const Field& F = x.field();
    if (x != x.a_part()) throw AlgebraError("fold needs a pure-a element");
    if (!weight(x).is_zero()) throw AlgebraError("fold needs an element of weight zero");
    Element sp(F), pp(F);
    Scalar three(F, 3);
    for (const auto& [i, c] : folded(a_coeffs(x), k)) {
        sp.add_s(i, three * c);
        pp.add_p(k, i, three * c);
    }
    return {sp, pp};
}

Element pure_a_extract(const Element& g) {
    const Field& F = g.field();
    if (g.in_j()) throw AlgebraError("pure_a_extract needs an element outside J");
    Element ga = g.a_part();
    if (!ga.is_zero()) {
        if (ga == g) return g;
        return g - apply(theta(3), g);
    }
    Element gs = Scalar(F, 1, 3) * (g + apply(theta(1), g) + apply(theta(2), g));
    Element y = a(F, 0) * gs;
    return y - apply(theta(3), y);
}

// ---------------------------------------------------------------------------------------------
// Level polynomials

Poly LevelPoly::e(long m) const {
    if (m < 0) throw AlgebraError("negative level");
    if (cache_.empty()) {
        cache_.push_back(Poly::constant(Scalar(F_, 2)));
        cache_.push_back(Poly::monomial(Scalar::one(F_), 1));
    }
    Poly T = Poly::monomial(Scalar::one(F_), 1);
    while (static_cast<long>(cache_.size()) <= m) {
        std::size_t n = cache_.size();
        cache_.push_back(T * cache_[n - 1] - cache_[n - 2]);
    }
    return Poly::constant(Scalar(F_, 2)) - cache_[static_cast<std::size_t>(m)];
}

Poly LevelPoly::to_poly(const std::map<long, Scalar>& coeffs) const {
    Poly out(F_);
    for (const auto& [m, c] : coeffs)
        if (!c.is_zero()) out = out + e(m) * c;
    return out;
}

std::map<long, Scalar> LevelPoly::from_poly(const Poly& f) const {
    std::map<long, Scalar> out;
    Poly r = f;
    while (r.degree() >= 1) {
        long d = r.degree();
        Scalar beta = -r.lead();  // E_d has leading coefficient -1
        out.emplace(d, beta);
        r = r - e(d) * beta;
    }
    if (!r.is_zero()) throw AlgebraError("polynomial does not vanish at T = 2");
    return out;
}

namespace {

std::map<long, Scalar> p_levels(const Element& x, int r) {
    std::map<long, Scalar> m;
    for (const auto& [k, c] : x.terms())
        if (k.kind == KeyKind::P && k.residue == r) m.emplace(k.index / 3, c);
    return m;
}

std::map<long, Scalar> s_levels(const Element& x) {
    std::map<long, Scalar> m;
    for (const auto& [k, c] : x.terms())
        if (k.kind == KeyKind::S) m.emplace(k.index, c);
    return m;
}

// Reduces the p-part of x modulo f (x) W, leaving other parts alone.
Element reduce_p(const Element& x, const LevelPoly& lp, const Poly& f) {
    Element out = x.a_part() + x.s_part();
    for (int r : {1, 2}) {
        auto lv = p_levels(x, r);
        if (lv.empty()) continue;
        for (const auto& [m, c] : lp.from_poly(lp.to_poly(lv) % f)) out.add(BasisKey::p(r, 3 * m), c);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Ideals inside J

JIdeal::JIdeal(const Field& F, std::vector<Scalar> beta) : F_(F), beta_(std::move(beta)), f_(F) {
    if (beta_.empty() || !beta_.back().is_one()) throw AlgebraError("J-ideal tuple must be nonempty and end in 1");
    std::map<long, Scalar> m;
    for (std::size_t i = 0; i < beta_.size(); ++i) m.emplace(static_cast<long>(i) + 1, beta_[i]);
    f_ = LevelPoly(F_).to_poly(m);
}

Element JIdeal::generator() const {
    Element x(F_);
    for (std::size_t i = 0; i < beta_.size(); ++i) x.add_p(1, 3 * (static_cast<long>(i) + 1), beta_[i]);
    return x;
}

std::vector<Element> JIdeal::basis(long up_to) const {
    std::vector<Element> out;
    Element x = generator();
    if (3 * k() > up_to) return out;
    out.push_back(x);
    out.push_back(apply(tau(0), x));
    for (long i = 3; 3 * k() + i <= up_to; i += 3) {
        Element y = s(F_, i) * x;
        out.push_back(y);
        out.push_back(apply(tau(0), y));
    }
    return out;
}

Element JIdeal::reduce(const Element& x) const { return reduce_p(x, LevelPoly(F_), f_); }

bool JIdeal::contains(const Element& x) const { return reduce(x).is_zero(); }

std::vector<BasisKey> JIdeal::quotient_keys() const {
    std::vector<BasisKey> out;
    for (long m = 1; m < k(); ++m)
        for (int r : {1, 2}) out.push_back(BasisKey::p(r, 3 * m));
    return out;
}

namespace {

JIdeal j_from_poly(const Field& F, const LevelPoly& lp, const Poly& g) {
    auto m = lp.from_poly(g);
    long top = m.rbegin()->first;
    Scalar inv = m.rbegin()->second.inverse();
    std::vector<Scalar> beta(static_cast<std::size_t>(top), Scalar::zero(F));
    for (const auto& [lvl, c] : m) beta[static_cast<std::size_t>(lvl - 1)] = c * inv;
    return JIdeal(F, std::move(beta));
}

}  // namespace

JIdeal j_ideal_of(const std::vector<Element>& gens) {
    if (gens.empty()) throw AlgebraError("no generators");
    const Field& F = gens.front().field();
    LevelPoly lp(F);
    Poly g(F);
    for (const auto& x : gens) {
        if (x.field() != F) throw FieldMismatch("generators over different fields");
        if (!x.in_j()) throw AlgebraError("generator " + x.to_string() + " is not in J");
        for (int r : {1, 2}) g = gcd(g, lp.to_poly(p_levels(x, r)));
    }
    if (g.is_zero()) throw AlgebraError("the zero ideal has no canonical J-generator");
    return j_from_poly(F, lp, g);
}

JIdeal j_canonicalize(const Element& g) { return j_ideal_of({g}); }

// ---------------------------------------------------------------------------------------------
// Minimal ideals of a pattern

namespace {

std::map<long, Scalar> pattern_map(const std::vector<Scalar>& pattern) {
    std::map<long, Scalar> m;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (!pattern[i].is_zero()) m.emplace(static_cast<long>(i), pattern[i]);
    return m;
}

bool pattern_contains_j(const std::vector<Scalar>& pattern) {
    const Field& F = pattern.front().field();
    std::vector<Scalar> sums(3, Scalar::zero(F));
    for (std::size_t i = 0; i < pattern.size(); ++i) sums[i % 3] += pattern[i];
    return !sums[1].is_zero() || !sums[2].is_zero();
}

std::map<long, Scalar> three_part(const std::map<long, Scalar>& m) {
    std::map<long, Scalar> out;
    for (const auto& [i, c] : m)
        if (i % 3 == 0) out.emplace(i / 3, c);
    return out;
}

void check_pattern(const std::vector<Scalar>& pattern) {
    if (pattern.size() < 2 || pattern.front().is_zero() || pattern.back().is_zero())
        throw AlgebraError("pattern must have nonzero end coefficients and length at least 2");
}

}  // namespace

std::vector<Element> minimal_ideal_basis(const std::vector<Scalar>& pattern, long up_to) {
    check_pattern(pattern);
    const Field& F = pattern.front().field();
    long D = static_cast<long>(pattern.size()) - 1;
    auto alpha = pattern_map(pattern);
    std::vector<Element> out;
    for (long k = -up_to; k + D <= up_to; ++k) {
        Element x(F);
        for (const auto& [i, c] : alpha) x.add_a(i + k, c);
        out.push_back(x);
    }
    bool with_j = pattern_contains_j(pattern);
    for (long k = D / 2; k >= D - up_to; --k) {
        auto c = folded(alpha, k);
        Element y(F);
        for (const auto& [i, v] : c) y.add_s(i, v);
        if (!y.is_zero() && degrees(y).s_level <= up_to) out.push_back(y);
        if (with_j) continue;
        for (int r : {1, 2}) {
            Element pk(F);
            for (const auto& [i, v] : c) pk.add_p(r, i, v);
            if (!pk.is_zero() && degrees(pk).p_level <= up_to) out.push_back(pk);
        }
    }
    if (with_j)
        for (long m = 3; m <= up_to; m += 3)
            for (int r : {1, 2}) out.push_back(p(F, r, m));
    return out;
}

// Minimal ideal of an ideal-type pattern together with its finite quotient model.
struct PatternStructure {
    Field F;
    std::vector<Scalar> alpha;  // alpha_0 = 1, alpha_D = eps
    long D;
    int eps;
    bool j_contained;
    LevelPoly lp;
    Poly sigma;  // generator of the s-part
    Poly f;      // generator of the level space of the p-part
    std::vector<BasisKey> keys;
    std::map<BasisKey, std::size_t> index;
    std::vector<std::size_t> priority;
    std::vector<std::vector<Vec>> table;  // reduced coordinates of keys[i] * keys[j]

    explicit PatternStructure(std::vector<Scalar> a_)
        : F(a_.front().field()), alpha(std::move(a_)), D(static_cast<long>(alpha.size()) - 1), eps(1),
          j_contained(pattern_contains_j(alpha)), lp(F), sigma(F), f(F) {
        if (!alpha.front().is_one()) throw AlgebraError("pattern must start with 1");
        if (alpha.back() == Scalar(F, -1))
            eps = -1;
        else if (!alpha.back().is_one())
            throw AlgebraError("pattern is not of ideal type");
        for (long i = 0; i <= D; ++i)
            if (alpha[static_cast<std::size_t>(i)] != Scalar(F, eps) * alpha[static_cast<std::size_t>(D - i)])
                throw AlgebraError("pattern is not symmetric");
        auto am = pattern_map(alpha);
        for (long k = -3; k <= D + 3; ++k) sigma = gcd(sigma, lp.to_poly(folded(am, k)));
        if (j_contained) {
            f = lp.e(1);
        } else {
            for (long k = -6; k <= D + 6; ++k) f = gcd(f, lp.to_poly(three_part(folded(am, k))));
        }
        for (long i = 0; i < D; ++i) keys.push_back(BasisKey::a(i));
        for (long j = 1; j < sigma.degree(); ++j) keys.push_back(BasisKey::s(j));
        for (long m = 1; m < f.degree(); ++m)
            for (int r : {1, 2}) keys.push_back(BasisKey::p(r, 3 * m));
        for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
        for (std::size_t i = keys.size(); i-- > 0;) priority.push_back(i);
        std::size_t n = keys.size();
        table.assign(n, std::vector<Vec>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Element x(F), y(F);
                x.add(keys[i], Scalar::one(F));
                y.add(keys[j], Scalar::one(F));
                table[i][j] = coords(reduce(x * y));
                table[j][i] = table[i][j];
            }
    }

    std::size_t dim() const { return keys.size(); }

    Element reduce(const Element& x) const {
        if (x.field() != F) throw FieldMismatch("element and ideal over different fields");
        Element out(F);
        auto am = a_coeffs(x);
        while (!am.empty() && am.rbegin()->first >= D) {
            auto [top, c] = *am.rbegin();
            Scalar q = c / alpha.back();
            for (long i = 0; i <= D; ++i) {
                long key = top - D + i;
                auto [it, ins] = am.try_emplace(key, Scalar::zero(F));
                it->second -= q * alpha[static_cast<std::size_t>(i)];
                if (it->second.is_zero()) am.erase(it);
            }
        }
        while (!am.empty() && am.begin()->first < 0) {
            auto [low, c] = *am.begin();
            Scalar q = c / alpha[0];
            for (long i = 0; i <= D; ++i) {
                auto [it, ins] = am.try_emplace(low + i, Scalar::zero(F));
                it->second -= q * alpha[static_cast<std::size_t>(i)];
                if (it->second.is_zero()) am.erase(it);
            }
        }
        for (const auto& [i, c] : am) out.add_a(i, c);
        auto sl = s_levels(x);
        if (!sl.empty())
            for (const auto& [j, c] : lp.from_poly(lp.to_poly(sl) % sigma)) out.add_s(j, c);
        out += reduce_p(x.p_part(), lp, f);
        return out;
    }

    Vec coords(const Element& reduced) const {
        Vec v = zero_vec(F, keys.size());
        for (const auto& [k, c] : reduced.terms()) {
            auto it = index.find(k);
            if (it == index.end()) throw AlgebraError("internal: " + k.to_string() + " is not a surviving key");
            v[it->second] = c;
        }
        return v;
    }

    Element lift(const Vec& v) const {
        Element x(F);
        for (std::size_t i = 0; i < v.size(); ++i) x.add(keys[i], v[i]);
        return x;
    }

    // keys[b] * v in reduced coordinates.
    Vec mul_key(std::size_t b, const Vec& v) const {
        Vec out = zero_vec(F, keys.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            const Vec& t = table[b][j];
            for (std::size_t k = 0; k < t.size(); ++k)
                if (!t[k].is_zero()) out[k] += v[j] * t[k];
        }
        return out;
    }
};

// ---------------------------------------------------------------------------------------------
// Ideal

const char* variant_name(Ideal::Variant v) {
    switch (v) {
        case Ideal::Variant::Zero: return "Zero";
        case Ideal::Variant::Full: return "Full";
        case Ideal::Variant::InJ: return "InJ";
        case Ideal::Variant::Pattern: return "WithPattern";
    }
    return "?";
}

Ideal Ideal::zero(const Field& F) { return Ideal(F); }

Ideal Ideal::full(const Field& F) {
    Ideal I(F);
    I.variant_ = Variant::Full;
    return I;
}

const std::vector<Scalar>& Ideal::pattern() const {
    if (variant_ != Variant::Pattern) throw AlgebraError("ideal has no pattern");
    return m_->alpha;
}

int Ideal::epsilon() const {
    if (variant_ != Variant::Pattern) throw AlgebraError("ideal has no pattern");
    return m_->eps;
}

std::vector<Element> Ideal::extension() const {
    std::vector<Element> out;
    if (variant_ != Variant::Pattern) return out;
    for (const auto& row : ext_->rows()) out.push_back(m_->lift(row));
    return out;
}

bool Ideal::contains_j() const {
    switch (variant_) {
        case Variant::Zero: return false;
        case Variant::Full: return true;
        case Variant::InJ: return j_->k() == 1;
        case Variant::Pattern: return contains(p(F_, 1, 3));
    }
    return false;
}

const JIdeal& Ideal::j_ideal() const {
    if (variant_ != Variant::InJ) throw AlgebraError("ideal is not inside J");
    return *j_;
}

Element Ideal::reduce(const Element& x) const {
    if (x.field() != F_) throw FieldMismatch("element and ideal over different fields");
    switch (variant_) {
        case Variant::Zero: return x;
        case Variant::Full: return Element(F_);
        case Variant::InJ: return j_->reduce(x);
        case Variant::Pattern: return m_->lift(ext_->reduce(m_->coords(m_->reduce(x))));
    }
    return x;
}

std::vector<Element> Ideal::basis(long up_to) const {
    std::vector<Element> out;
    switch (variant_) {
        case Variant::Zero: break;
        case Variant::Full:
            for (long i = -up_to; i <= up_to; ++i) out.push_back(a(F_, i));
            for (long j = 1; j <= up_to; ++j) out.push_back(s(F_, j));
            for (long m = 3; m <= up_to; m += 3)
                for (int r : {1, 2}) out.push_back(p(F_, r, m));
            break;
        case Variant::InJ: out = j_->basis(up_to); break;
        case Variant::Pattern:
            out = minimal_ideal_basis(m_->alpha, up_to);
            for (auto& e : extension()) out.push_back(e);
            break;
    }
    return out;
}

std::vector<Element> Ideal::quotient_basis() const {
    std::vector<Element> out;
    if (variant_ == Variant::Full) return out;
    if (variant_ != Variant::Pattern) throw AlgebraError("quotient is infinite-dimensional");
    std::vector<bool> pivot(m_->dim(), false);
    for (auto pv : ext_->pivots()) pivot[pv] = true;
    for (std::size_t i = 0; i < m_->dim(); ++i) {
        if (pivot[i]) continue;
        Element x(F_);
        x.add(m_->keys[i], Scalar::one(F_));
        out.push_back(x);
    }
    return out;
}

std::optional<std::size_t> Ideal::quotient_dim() const {
    switch (variant_) {
        case Variant::Full: return 0;
        case Variant::Pattern: return m_->dim() - ext_->rank();
        default: return std::nullopt;
    }
}

std::size_t Ideal::window_dim() const { return variant_ == Variant::Pattern ? m_->dim() : 0; }

namespace {

Poly reversed(const Poly& f) {
    auto c = f.coeffs();
    std::reverse(c.begin(), c.end());
    return Poly(f.field(), c);
}

// gcd with the reversed polynomial, scaled so the constant term is 1.
Poly symmetrize(const Poly& g) {
    Poly h = gcd(g, reversed(g)).strip_valuation();
    return h * h.coeff(0).inverse();
}

Poly a_poly(const Element& x, long* low = nullptr) {
    auto m = a_coeffs(x);
    const Field& F = x.field();
    if (m.empty()) return Poly(F);
    long lo = m.begin()->first;
    std::vector<Scalar> c(static_cast<std::size_t>(m.rbegin()->first - lo + 1), Scalar::zero(F));
    for (const auto& [i, v] : m) c[static_cast<std::size_t>(i - lo)] = v;
    if (low) *low = lo;
    return Poly(F, c);
}

Scalar coeff_sum(const Poly& f) {
    Scalar t = Scalar::zero(f.field());
    for (const auto& c : f.coeffs()) t += c;
    return t;
}

}  // namespace

Ideal ideal_of(const std::vector<Element>& gens_in) {
    if (gens_in.empty()) throw AlgebraError("ideal_of needs at least one generator");
    const Field F = gens_in.front().field();
    std::vector<Element> gens;
    for (const auto& g : gens_in) {
        if (g.field() != F) throw FieldMismatch("generators over different fields");
        if (!g.is_zero()) gens.push_back(g);
    }
    Ideal I(F);
    I.gens_ = gens;
    if (gens.empty()) return I;
    auto full = [&] {
        Ideal J = Ideal::full(F);
        J.gens_ = gens;
        return J;
    };
    for (const auto& g : gens)
        if (!weight(g).is_zero()) return full();
    bool all_j = std::all_of(gens.begin(), gens.end(), [](const Element& g) { return g.in_j(); });
    if (all_j) {
        I.variant_ = Ideal::Variant::InJ;
        I.j_ = j_ideal_of(gens);
        return I;
    }

    // Candidate pattern from pure-a elements of the ideal.
    std::vector<Laurent> pure;
    const Element a0 = a(F, 0), a1 = a(F, 1);
    for (const auto& g : gens) {
        for (const Element& h : {g, apply(tau(0), g), apply(tau(1), g), a0 * g, a1 * g}) {
            if (h.is_zero() || h.in_j()) continue;
            long lo = 0;
            Poly f = a_poly(pure_a_extract(h), &lo);
            pure.push_back({lo, f});
        }
    }
    Poly g0 = symmetrize(laurent_gcd(pure).gcd);

    while (true) {
        if (g0.degree() < 1 || !coeff_sum(g0).is_zero()) return full();
        auto M = std::make_shared<PatternStructure>(g0.coeffs());
        auto E = std::make_shared<EchelonBasis>(F, M->dim(), M->priority);
        std::vector<Vec> queue;
        for (const auto& g : gens) {
            Vec v = M->coords(M->reduce(g));
            if (E->insert(v)) queue.push_back(v);
        }
        while (!queue.empty()) {
            Vec v = std::move(queue.back());
            queue.pop_back();
            for (std::size_t b = 0; b < M->dim(); ++b) {
                Vec w = M->mul_key(b, v);
                if (E->insert(w)) queue.push_back(std::move(w));
            }
        }
        if (E->rank() == M->dim()) return full();
        // Pure-a classes in the extension refine the pattern.
        Poly refined = g0;
        for (std::size_t r = 0; r < E->rank(); ++r) {
            if (M->keys[E->pivots()[r]].kind != KeyKind::A) continue;
            Poly f = a_poly(M->lift(E->rows()[r]));
            refined = gcd(refined, f.strip_valuation());
        }
        if (refined.degree() < g0.degree()) {
            g0 = symmetrize(refined);
            continue;
        }
        I.variant_ = Ideal::Variant::Pattern;
        I.m_ = M;
        I.ext_ = E;
        return I;
    }
}

Element reduce(const Element& x, const Ideal& I) { return I.reduce(x); }

bool membership(const Element& x, const Ideal& I) { return I.contains(x); }

Report aut_invariance_check(const Ideal& I, long sample_bound, const Automorphism& f) {
    Report r{"invariance of the ideal under i -> " + std::to_string(f.sign) + "*i + " + std::to_string(f.offset), {}};
    std::size_t bad = 0, total = 0;
    for (const auto& b : I.basis(sample_bound)) {
        ++total;
        if (!I.contains(apply(f, b))) {
            ++bad;
            r.add(b.to_string(), false, "image leaves the ideal");
        }
    }
    r.add(std::to_string(total) + " basis elements map into the ideal", bad == 0);
    return r;
}

}  // namespace highwater
