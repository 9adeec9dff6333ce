#include "highwater/eigen.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

#include "highwater/automorphism.hpp"
#include "highwater/derived.hpp"
#include "highwater/linalg.hpp"

namespace highwater {

Scalar eigenvalue(EigenLabel l, const Field& F) {
    switch (l) {
        case EigenLabel::One: return Scalar(F, 1);
        case EigenLabel::FiveHalves: return Scalar(F, 5, 2);
        case EigenLabel::Zero: return Scalar(F, 0);
        case EigenLabel::Two: return Scalar(F, 2);
        case EigenLabel::Half: return Scalar(F, 1, 2);
    }
    return Scalar(F, 0);
}

const char* label_name(EigenLabel l) {
    switch (l) {
        case EigenLabel::One: return "1";
        case EigenLabel::FiveHalves: return "5/2";
        case EigenLabel::Zero: return "0";
        case EigenLabel::Two: return "2";
        case EigenLabel::Half: return "1/2";
    }
    return "?";
}

namespace {
constexpr EigenLabel kLabels[] = {EigenLabel::One, EigenLabel::FiveHalves, EigenLabel::Zero, EigenLabel::Two,
                                  EigenLabel::Half};
}

std::vector<EigenLabel> FusionLaw::label_rule(EigenLabel x, EigenLabel y) {
    using L = EigenLabel;
    if (static_cast<int>(x) > static_cast<int>(y)) std::swap(x, y);
    switch (x) {
        case L::One:
            if (y == L::Zero) return {};
            return {y};
        case L::FiveHalves:
            switch (y) {
                case L::FiveHalves: return {L::FiveHalves};
                case L::Zero: return {L::FiveHalves};
                case L::Two: return {};
                default: return {L::Half};
            }
        case L::Zero:
            switch (y) {
                case L::Zero: return {L::FiveHalves, L::Zero};
                case L::Two: return {L::FiveHalves, L::Two};
                default: return {L::Half};
            }
        case L::Two:
            if (y == L::Two) return {L::FiveHalves, L::Zero};
            return {L::Half};
        case L::Half: return {L::FiveHalves, L::Zero, L::Two};
    }
    return {};
}

FusionLaw::FusionLaw(const Field& F) : field_(F) {
    for (auto l : kLabels) {
        Scalar v = eigenvalue(l, F);
        if (std::find(values_.begin(), values_.end(), v) == values_.end()) values_.push_back(v);
    }
}

std::vector<Scalar> FusionLaw::allowed(const Scalar& lambda, const Scalar& mu) const {
    std::vector<Scalar> out;
    for (auto x : kLabels) {
        if (eigenvalue(x, field_) != lambda) continue;
        for (auto y : kLabels) {
            if (eigenvalue(y, field_) != mu) continue;
            for (auto r : label_rule(x, y)) {
                Scalar v = eigenvalue(r, field_);
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            }
        }
    }
    return out;
}

bool FusionLaw::is_allowed(const Scalar& lambda, const Scalar& mu, const Scalar& nu) const {
    auto a = allowed(lambda, mu);
    return std::find(a.begin(), a.end(), nu) != a.end();
}

std::vector<std::pair<Scalar, Element>> EigenDecomposition::components() const {
    std::vector<std::pair<Scalar, Element>> out;
    for (const auto& [l, x] : labelled) {
        Scalar v = eigenvalue(l, field);
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& pr) { return pr.first == v; });
        if (it == out.end())
            out.emplace_back(v, x);
        else
            it->second += x;
    }
    std::erase_if(out, [](const auto& pr) { return pr.second.is_zero(); });
    return out;
}

Element EigenDecomposition::component(const Scalar& lambda) const {
    Element out(field);
    for (const auto& [l, x] : labelled)
        if (eigenvalue(l, field) == lambda) out += x;
    return out;
}

Element EigenDecomposition::part(EigenLabel l) const {
    auto it = labelled.find(l);
    return it == labelled.end() ? Element(field) : it->second;
}

Element EigenDecomposition::sum() const {
    Element out(field);
    for (const auto& [l, x] : labelled) out += x;
    return out;
}

std::map<long, Element> slice_split(const Element& x, long center) {
    std::map<long, Element> out;
    for (const auto& [k, c] : x.terms()) {
        long slice = k.kind == KeyKind::A ? std::labs(k.index - center) : k.index;
        out.try_emplace(slice, x.field()).first->second.add(k, c);
    }
    return out;
}

namespace {

// Coordinates (a0, a(-i), a(i), s(i), p(1,i), p(2,i)) of the columns a0, u_i, v_i, w_i, z_i, wt_i.
// Slices with i outside 3N use the leading 4x4 block.
struct SliceSolver {
    Matrix inv6, inv4;
};

Matrix slice_matrix(const Field& F, std::size_t n) {
    static const long cols[6][6] = {
        {1, 0, 0, 0, 0, 0},     // a0
        {6, -3, -3, 4, 4, -4},  // u
        {2, -1, -1, -4, -4, 4}, // v
        {0, 1, -1, 0, 0, 0},    // w
        {0, 0, 0, 0, 1, -1},    // z
        {0, 0, 0, 0, 1, 1},     // wt
    };
    Matrix m(F, n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = Scalar(F, cols[j][i]);
    return m;
}

const SliceSolver& slice_solver(const Field& F) {
    static std::mutex mu;
    static std::map<std::uint64_t, SliceSolver> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(F.characteristic());
    if (it != cache.end()) return it->second;
    Matrix m6 = slice_matrix(F, 6), m4 = slice_matrix(F, 4);
    if (m6.determinant().is_zero() || m4.determinant().is_zero())
        throw AlgebraError("eigenvector coordinate matrix is singular over " + F.name());
    return cache.emplace(F.characteristic(), SliceSolver{*m6.inverse(), *m4.inverse()}).first->second;
}

}  // namespace

EigenDecomposition eigendecompose(const Element& x, long axis) {
    const Field& F = x.field();
    const SliceSolver& solver = slice_solver(F);
    Element y = apply(theta(-axis), x);
    EigenDecomposition d{F, {}};
    for (auto l : kLabels) d.labelled.emplace(l, Element(F));
    Scalar a0_total = y.coeff(BasisKey::a(0));
    for (const auto& [i, part] : slice_split(y, 0)) {
        if (i == 0) continue;
        bool full = i % 3 == 0;
        std::size_t n = full ? 6 : 4;
        Vec coords = zero_vec(F, n);
        coords[1] = part.coeff(BasisKey::a(-i));
        coords[2] = part.coeff(BasisKey::a(i));
        coords[3] = part.coeff(BasisKey::s(i));
        if (full) {
            coords[4] = part.coeff(BasisKey::p(1, i));
            coords[5] = part.coeff(BasisKey::p(2, i));
        }
        Vec sol = (full ? solver.inv6 : solver.inv4).apply(coords);
        a0_total += sol[0];
        d.labelled.at(EigenLabel::Zero) += sol[1] * u_vec(F, i);
        d.labelled.at(EigenLabel::Two) += sol[2] * v_vec(F, i);
        d.labelled.at(EigenLabel::Half) += sol[3] * w_vec(F, i);
        if (full) {
            d.labelled.at(EigenLabel::FiveHalves) += sol[4] * z_vec(F, i);
            d.labelled.at(EigenLabel::Half) += sol[5] * wt_vec(F, i);
        }
    }
    d.labelled.at(EigenLabel::One) += a0_total * a(F, 0);
    for (auto& [l, e] : d.labelled) e = apply(theta(axis), e);
    return d;
}

Report fusion_check(long i_max, const Field& F) {
    Report r{"fusion law over " + F.name() + " for indices up to " + std::to_string(i_max), {}};
    FusionLaw law(F);
    struct Vecn {
        std::string name;
        EigenLabel label;
        Element x;
    };
    std::vector<Vecn> vecs{{"a(0)", EigenLabel::One, a(F, 0)}};
    for (long i = 1; i <= i_max; ++i) {
        std::string n = std::to_string(i);
        vecs.push_back({"u" + n, EigenLabel::Zero, u_vec(F, i)});
        vecs.push_back({"v" + n, EigenLabel::Two, v_vec(F, i)});
        vecs.push_back({"w" + n, EigenLabel::Half, w_vec(F, i)});
        if (i % 3 == 0) {
            vecs.push_back({"z" + n, EigenLabel::FiveHalves, z_vec(F, i)});
            vecs.push_back({"wt" + n, EigenLabel::Half, wt_vec(F, i)});
        }
    }
    Element a0 = a(F, 0);
    std::size_t bad_eigen = 0;
    for (const auto& v : vecs) {
        if (a0 * v.x != eigenvalue(v.label, F) * v.x) {
            ++bad_eigen;
            r.add("eigenvector " + v.name, false, "a(0) * x differs from " + std::string(label_name(v.label)) + " * x");
        }
    }
    r.add("all " + std::to_string(vecs.size()) + " listed vectors are eigenvectors", bad_eigen == 0);
    std::size_t pairs = 0, violations = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i; j < vecs.size(); ++j) {
            ++pairs;
            Element prod = vecs[i].x * vecs[j].x;
            auto dec = eigendecompose(prod, 0);
            Scalar li = eigenvalue(vecs[i].label, F), lj = eigenvalue(vecs[j].label, F);
            bool recon = dec.sum() == prod;
            for (const auto& [nu, comp] : dec.components()) {
                if (!law.is_allowed(li, lj, nu)) {
                    ++violations;
                    r.add(vecs[i].name + " * " + vecs[j].name, false, "component with eigenvalue " + nu.to_string());
                }
            }
            if (!recon) {
                ++violations;
                r.add(vecs[i].name + " * " + vecs[j].name, false, "decomposition does not sum back to the product");
            }
        }
    r.add(std::to_string(pairs) + " products obey the fusion law", violations == 0,
          std::to_string(violations) + " violations");
    return r;
}

Report miyamoto_consistency(long axis, long support_bound, const Field& F) {
    Report r{"Miyamoto involution of a(" + std::to_string(axis) + ") over " + F.name(), {}};
    std::vector<Element> keys;
    for (long i = -support_bound; i <= support_bound; ++i) keys.push_back(a(F, i));
    for (long j = 1; j <= support_bound; ++j) keys.push_back(s(F, j));
    for (long k = 3; k <= support_bound; k += 3) {
        keys.push_back(p(F, 1, k));
        keys.push_back(p(F, 2, k));
    }
    std::size_t mismatches = 0;
    Automorphism m = miyamoto(axis);
    for (const auto& x : keys) {
        auto d = eigendecompose(x, axis);
        Element eig = d.sum() - Scalar(F, 2) * d.part(EigenLabel::Half);
        Element idx = apply(m, x);
        if (eig != idx) {
            ++mismatches;
            r.add(x.to_string(), false, "eigen route " + eig.to_string() + " vs index route " + idx.to_string());
        }
    }
    r.add(std::to_string(keys.size()) + " basis vectors agree", mismatches == 0);
    return r;
}

}  // namespace highwater
