#include "highwater/quotient.hpp"

#include <algorithm>

#include "highwater/derived.hpp"
#include "highwater/eigen.hpp"
#include "highwater/format.hpp"

namespace highwater {

FiniteAlgebra::FiniteAlgebra(const Ideal& I, bool in_j, std::vector<Element> labels)
    : F_(I.field()), source_(I), in_j_(in_j), labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i].terms().begin()->first, i);
    std::size_t n = labels_.size();
    table_.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            table_[i][j] = image(labels_[i] * labels_[j]);
            table_[j][i] = table_[i][j];
        }
}

FiniteAlgebra FiniteAlgebra::of(const Ideal& I) {
    switch (I.variant()) {
        case Ideal::Variant::Zero: throw AlgebraError("the quotient by the zero ideal is infinite-dimensional");
        case Ideal::Variant::InJ:
            throw AlgebraError("an ideal inside J has infinite codimension; use the quotient of J instead");
        default: return FiniteAlgebra(I, false, I.quotient_basis());
    }
}

FiniteAlgebra FiniteAlgebra::of_j(const Ideal& I) {
    if (I.variant() != Ideal::Variant::InJ) throw AlgebraError("the quotient of J needs an ideal inside J");
    std::vector<Element> labels;
    for (const auto& k : I.j_ideal().quotient_keys()) {
        Element x(I.field());
        x.add(k, Scalar::one(I.field()));
        labels.push_back(x);
    }
    return FiniteAlgebra(I, true, labels);
}

Vec FiniteAlgebra::image(const Element& x) const {
    if (in_j_ && !x.in_j()) throw AlgebraError(x.to_string() + " is not in J");
    Vec v = zero_vec(F_, dim());
    const Element red = source_.reduce(x);
    for (const auto& [k, c] : red.terms()) {
        auto it = index_.find(k);
        if (it == index_.end()) throw AlgebraError("internal: reduced element has non-basis key " + k.to_string());
        v[it->second] = c;
    }
    return v;
}

Element FiniteAlgebra::lift(const Vec& v) const {
    Element x(F_);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) x += v[i] * labels_[i];
    return x;
}

Vec FiniteAlgebra::mul(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(F_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            const Vec& t = table_[i][j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (!t[k].is_zero()) out[k] += c * t[k];
        }
    }
    return out;
}

Matrix FiniteAlgebra::adjoint(const Vec& x) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) {
        Vec e = zero_vec(F_, dim());
        e[j] = Scalar::one(F_);
        cols.push_back(mul(x, e));
    }
    return Matrix::from_columns(F_, dim(), cols);
}

std::optional<Matrix> FiniteAlgebra::induced(const Automorphism& f) const {
    for (const auto& g : source_.generators())
        if (!source_.contains(apply(f, g))) return std::nullopt;
    std::vector<Vec> cols;
    for (const auto& b : labels_) cols.push_back(image(apply(f, b)));
    return Matrix::from_columns(F_, dim(), cols);
}

nlohmann::json FiniteAlgebra::to_json() const {
    nlohmann::json labels = nlohmann::json::array(), rows = nlohmann::json::array();
    for (const auto& b : labels_) labels.push_back(b.to_string());
    for (std::size_t i = 0; i < dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j <= i; ++j) {
            nlohmann::json v = nlohmann::json::array();
            for (const auto& c : table_[i][j]) v.push_back(c.to_string());
            row.push_back(v);
        }
        rows.push_back(row);
    }
    return {{"field", F_.characteristic()},
            {"dim", dim()},
            {"relative_to_j", in_j_},
            {"basis_labels", labels},
            {"structure_constants", rows}};
}

Ideal collapse_j(const Ideal& I) {
    auto gens = I.generators();
    gens.push_back(p(I.field(), 1, 3));
    return ideal_of(gens);
}

Ideal family_h_ideal(long n, const Field& F, bool with_j) {
    if (n < 1) throw AlgebraError("family index must be positive");
    std::vector<Element> gens{a(F, 0) - a(F, n)};
    if (with_j) gens.push_back(p(F, 1, 3));
    return ideal_of(gens);
}

Ideal family_l_ideal(long n, const Field& F, bool with_j) {
    if (n < 1) throw AlgebraError("family index must be positive");
    std::vector<Element> gens{Scalar(F, 2) * a(F, 0) - a(F, -n) - a(F, n)};
    if (with_j) gens.push_back(p(F, 1, 3));
    return ideal_of(gens);
}

long expected_h(long n, bool hat) { return n + n / 2 + (hat && n % 3 == 0 ? 2 * (n / 6) : 0); }

long expected_l(long n, bool hat) { return 3 * n - 1 + (hat && n % 3 == 0 ? 2 * ((n - 1) / 3) : 0); }

std::vector<FamilyRow> families(long max_n, const Field& F) {
    std::vector<FamilyRow> rows;
    for (long n = 1; n <= max_n; ++n)
        rows.push_back({n, *family_h_ideal(n, F, false).quotient_dim(), *family_h_ideal(n, F, true).quotient_dim(),
                        *family_l_ideal(n, F, false).quotient_dim(), *family_l_ideal(n, F, true).quotient_dim()});
    return rows;
}

Report family_report(long max_n, const Field& F) {
    Report r{"family dimensions over " + F.name(), {}};
    auto one = [&](const std::string& name, long n, std::size_t got, long want) {
        r.add(name + "(" + std::to_string(n) + ") = " + std::to_string(want), static_cast<long>(got) == want,
              "got " + std::to_string(got));
    };
    for (const auto& row : families(max_n, F)) {
        one("H^", row.n, row.h_hat, expected_h(row.n, true));
        one("H", row.n, row.h, expected_h(row.n, false));
        one("L^", row.n, row.l_hat, expected_l(row.n, true));
        one("L", row.n, row.l, expected_l(row.n, false));
    }
    return r;
}

namespace {

Matrix scalar_matrix(const Scalar& c, std::size_t n) {
    Matrix m(c.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

}  // namespace

std::optional<std::vector<std::pair<Scalar, std::vector<Vec>>>> eigenspaces(const Matrix& ad) {
    const Field& F = ad.field();
    const std::vector<Scalar> values = FusionLaw(F).eigenvalues();
    std::vector<std::pair<Scalar, std::vector<Vec>>> out;
    std::size_t total = 0;
    for (const auto& v : values) {
        auto ns = (ad - scalar_matrix(v, ad.rows())).nullspace();
        total += ns.size();
        if (!ns.empty()) out.emplace_back(v, std::move(ns));
    }
    if (total != ad.rows()) return std::nullopt;
    return out;
}

std::optional<Matrix> miyamoto_matrix(const FiniteAlgebra& Q, const Vec& x) {
    const Field& F = Q.field();
    auto spaces = eigenspaces(Q.adjoint(x));
    if (!spaces) return std::nullopt;
    std::vector<Vec> cols;
    std::vector<bool> negate;
    const Scalar half(F, 1, 2);
    for (const auto& [v, vecs] : *spaces)
        for (const auto& e : vecs) {
            cols.push_back(e);
            negate.push_back(v == half);
        }
    Matrix B = Matrix::from_columns(F, Q.dim(), cols);
    Matrix D = Matrix::identity(F, Q.dim());
    for (std::size_t i = 0; i < negate.size(); ++i)
        if (negate[i]) D(i, i) = Scalar(F, -1);
    return B * D * *B.inverse();
}

AxisOrbit axis_orbit(const FiniteAlgebra& Q, std::size_t cutoff) {
    AxisOrbit orbit;
    const Field& F = Q.field();
    auto known = [&](const Vec& v) { return std::find(orbit.axes.begin(), orbit.axes.end(), v) != orbit.axes.end(); };
    for (const Vec& v : {Q.image(a(F, 0)), Q.image(a(F, 1))})
        if (!known(v)) orbit.axes.push_back(v);
    std::vector<Matrix> taus;
    bool changed = true;
    while (changed) {
        changed = false;
        while (taus.size() < orbit.axes.size()) {
            auto t = miyamoto_matrix(Q, orbit.axes[taus.size()]);
            if (!t) return orbit;
            taus.push_back(std::move(*t));
        }
        for (const auto& t : taus)
            for (std::size_t i = 0; i < orbit.axes.size(); ++i) {
                Vec y = t.apply(orbit.axes[i]);
                if (known(y)) continue;
                orbit.axes.push_back(std::move(y));
                changed = true;
                if (orbit.axes.size() > cutoff) return orbit;
            }
    }
    orbit.closed = true;

    std::vector<Matrix> group{Matrix::identity(F, Q.dim())};
    const std::size_t bound = 4 * cutoff + 4;
    for (std::size_t i = 0; i < group.size(); ++i)
        for (const auto& t : taus) {
            Matrix g = group[i] * t;
            if (std::find(group.begin(), group.end(), g) != group.end()) continue;
            group.push_back(std::move(g));
            if (group.size() > bound) return orbit;
        }
    orbit.group_order = group.size();
    return orbit;
}

namespace {

std::size_t rank_of(const FiniteAlgebra& Q, const std::vector<Element>& xs) {
    std::vector<Vec> cols;
    for (const auto& x : xs) cols.push_back(Q.image(x));
    return Matrix::from_columns(Q.field(), Q.dim(), cols).rank();
}

std::string dim_detail(std::size_t d) { return "dimension " + std::to_string(d); }

void check_dim(Report& r, const std::string& name, const Ideal& I, std::size_t want) {
    auto d = I.quotient_dim();
    r.add(name + " has dimension " + std::to_string(want), d && *d == want,
          d ? dim_detail(*d) : std::string("variant ") + variant_name(I.variant()));
}

void check_eq(Report& r, const std::string& name, const Element& lhs, const Element& rhs) {
    r.add(name, lhs == rhs, lhs == rhs ? "" : lhs.to_string() + " vs " + rhs.to_string());
}

}  // namespace

Report exceptional_suite(const Field& F) {
    Report r{"exceptional quotients", {}};
    auto q = [&](long n, long d) { return Scalar(F, n, d); };
    const Element a0 = a(F, 0), a1 = a(F, 1), am1 = a(F, -1), a2 = a(F, 2), am2 = a(F, -2), s1 = s(F, 1), s2 = s(F, 2);

    // (a) H^2: basis a0, a1, s1 and no 1/2-eigenvectors for a0.
    {
        Ideal I = ideal_of({a0 - a2});
        check_dim(r, "(a) H^2", I, 3);
        FiniteAlgebra Q = FiniteAlgebra::of(I);
        r.add("(a) a0, a1, s1 span H^2", rank_of(Q, {a0, a1, s1}) == 3);
        auto ns = (Q.adjoint(Q.image(a0)) - scalar_matrix(q(1, 2), Q.dim())).nullspace();
        r.add("(a) 1/2-eigenspace of a0 in H^2 is trivial", ns.empty(), dim_detail(ns.size()));
    }
    // (b) L1: two-dimensional, tau(0) acts nontrivially.
    {
        Ideal I = ideal_of({q(2, 1) * a0 - am1 - a1});
        check_dim(r, "(b) L1", I, 2);
        FiniteAlgebra Q = FiniteAlgebra::of(I);
        auto t = Q.induced(tau(0));
        r.add("(b) tau(0) induces a nontrivial map on L1", t && !(*t == Matrix::identity(F, Q.dim())));
    }
    // (c) I_delta: q acts on the quotient as the scalar -(3/4)(delta + 3).
    for (long d : {-3, -1, 0, 1, 2}) {
        std::string tag = "(c) delta = " + std::to_string(d);
        Scalar dl(F, d);
        Ideal I = ideal_of({a0 + dl * a1 - dl * a2 - a(F, 3)});
        check_dim(r, tag + ": quotient", I, 4);
        if (I.variant() != Ideal::Variant::Pattern) continue;
        FiniteAlgebra Q = FiniteAlgebra::of(I);
        r.add(tag + ": a(-1), a0, a1, s1 span the quotient", rank_of(Q, {am1, a0, a1, s1}) == 4);
        Element qe = q(-3, 4) * ((dl + q(1, 1)) * a0 + am1 + a1) + s1;
        Vec qv = Q.image(qe);
        Scalar lambda = q(-3, 4) * (dl + q(3, 1));
        bool ok = true;
        for (std::size_t i = 0; i < Q.dim(); ++i) {
            Vec e = zero_vec(F, Q.dim());
            e[i] = Scalar::one(F);
            Vec want = e;
            for (auto& c : want) c *= lambda;
            ok = ok && Q.mul(qv, e) == want;
        }
        r.add(tag + ": q x = -(3/4)(delta + 3) x on the basis", ok);
    }
    // (d) I_{-3} sits inside (v1).
    {
        Element v1 = v_vec(F, 1), x = am1 - q(3, 1) * a0 + q(3, 1) * a1 - a2;
        Ideal I = ideal_of({v1});
        check_dim(r, "(d) quotient by v1", I, 3);
        check_eq(r, "(d) v1^tau(1) - v1 = a(-1) - 3a0 + 3a1 - a2", apply(tau(1), v1) - v1, x);
        r.add("(d) I_{-3} lies in (v1)", membership(a0 - q(3, 1) * a1 + q(3, 1) * a2 - a(F, 3), I));
        r.add("(d) v1 does not lie in I_{-3}", !membership(v1, ideal_of({x})));
    }
    // (e) y1 and its reflection.
    {
        Element y1 = am2 - q(4, 1) * am1 + q(6, 1) * a0 - q(4, 1) * a1 + a2 - q(16, 1) * s1 + q(4, 1) * s2;
        check_dim(r, "(e) quotient by y1", ideal_of({y1}), 6);
        Element want = am2 - q(5, 1) * am1 + q(10, 1) * a0 - q(10, 1) * a1 + q(5, 1) * a2 - a(F, 3);
        check_eq(r, "(e) y1 - tau(1) y1 is the pure-a pattern of length 6", y1 - apply(tau(1), y1), want);
    }
    // (f) characteristic 7: a0 a2 generates everything in H^4.
    {
        Field F7 = Field::make(7);
        Element b0 = a(F7, 0), y = b0 * a(F7, 2);
        Ideal I4 = ideal_of({b0 - a(F7, 4)});
        check_dim(r, "(f) H^4 over GF(7)", I4, 6);
        Element rel = Scalar(F7, 2) * y - b0 * y - b0;
        r.add("(f) 2 a0a2 - a0(a0a2) = a0 in H^4 over GF(7)", membership(rel, I4), format_element(I4.reduce(rel)));
        Ideal I = ideal_of({b0 - a(F7, 4), y});
        r.add("(f) the ideal of H^4 generated by a0a2 is everything over GF(7)", I.variant() == Ideal::Variant::Full,
              variant_name(I.variant()));
    }
    // (g) characteristic 5: the ideal (x) with quotient of dimension 8.
    {
        Field F5 = Field::make(5);
        Element x = a(F5, 0) - a(F5, 1) + a(F5, 3) - a(F5, 4) + p(F5, 2, 3), a06 = a(F5, 0) - a(F5, 6);
        Ideal I6 = ideal_of({a06});
        check_dim(r, "(g) H^6 over GF(5)", I6, 11);
        check_eq(r, "(g) a0 - a6 = x - x^tau(6) + x^theta(1)", a06, x - apply(tau(6), x) + apply(theta(1), x));
        Element rel = x * x - (s(F5, 1) + s(F5, 2) - s(F5, 3));
        r.add("(g) x^2 = s1 + s2 - s3 in H^6 over GF(5)", membership(rel, I6), format_element(I6.reduce(rel)));
        FiniteAlgebra Q6 = FiniteAlgebra::of(I6);
        r.add("(g) x, x^2, x^theta(1) are independent in H^6", rank_of(Q6, {x, x * x, apply(theta(1), x)}) == 3);
        Ideal Ix = ideal_of({x}), Ix6 = ideal_of({a06, x});
        check_dim(r, "(g) quotient by x over GF(5)", Ix, 8);
        check_dim(r, "(g) quotient by (a0 - a6, x) over GF(5)", Ix6, 8);
        r.add("(g) a0 - a6 lies in (x)", membership(a06, Ix));
    }
    // (h) graded quotients.
    {
        Element w1 = w_vec(F, 1), v1 = v_vec(F, 1), u2 = u_vec(F, 2), v2 = v_vec(F, 2);
        Element rr = am2 - q(2, 1) * am1 + q(2, 1) * a1 - a2;
        check_eq(r, "(h) w1 v1 = -(3/2) r", w1 * v1, q(-3, 2) * rr);
        check_eq(r, "(h) w1^2 = -2 s2", w1 * w1, q(-2, 1) * s2);
        check_eq(r, "(h) -2 s2 = -(1/8)(u2 - 3 v2)", q(-2, 1) * s2, q(-1, 8) * (u2 - q(3, 1) * v2));
        Ideal Ir = ideal_of({rr});
        check_dim(r, "(h) quotient by r", Ir, 6);
        if (Ir.variant() == Ideal::Variant::Pattern) {
            FiniteAlgebra Q = FiniteAlgebra::of(Ir);
            r.add("(h) a(-1), a0, a1, a2, s1, s2 span the quotient by r", rank_of(Q, {am1, a0, a1, a2, s1, s2}) == 6);
        }

        Element x = am1 - a0 - a1 + a2 + q(2, 1) * s2, xm = apply(theta(-1), x);
        check_eq(r, "(h) -(1/2)(v2 + r) = x", q(-1, 2) * (v2 + rr), x);
        check_eq(r, "(h) x^theta(-1) - x = r", xm - x, rr);
        check_eq(r, "(h) -x^theta(-1) - x = v2", -xm - x, v2);
        check_dim(r, "(h) quotient by a(-1) - a0 - a1 + a2 + 2 s2", ideal_of({x}), 5);

        check_dim(r, "(h) quotient by I_{-3}", ideal_of({am1 - q(3, 1) * a0 + q(3, 1) * a1 - a2}), 4);

        Element x3 = q(3, 1) * (am1 - a0 - a1 + a2) - q(2, 1) * s2;
        check_eq(r, "(h) x' = -(1/2)(u2 + 3r)", x3, q(-1, 2) * (u2 + q(3, 1) * rr));
        check_eq(r, "(h) x' - x'^theta(-1) = -3r", x3 - apply(theta(-1), x3), q(-3, 1) * rr);
        check_dim(r, "(h) quotient by 3(a(-1) - a0 - a1 + a2) - 2 s2", ideal_of({x3}), 5);
    }
    return r;
}

Report orbit_report(const Field& F, long max_n, std::size_t cutoff) {
    Report r{"axis orbits over " + F.name(), {}};
    for (long n = 1; n <= max_n; ++n) {
        AxisOrbit o = axis_orbit(FiniteAlgebra::of(family_h_ideal(n, F, true)), cutoff);
        r.add("H(" + std::to_string(n) + ") has " + std::to_string(n) + " axes",
              o.closed && static_cast<long>(o.axes.size()) == n, std::to_string(o.axes.size()) + " found");
    }
    AxisOrbit o = axis_orbit(FiniteAlgebra::of(family_l_ideal(1, F, true)), cutoff);
    std::string found = std::to_string(o.axes.size()) + " found";
    if (F.is_rational())
        r.add("L(1) does not close within " + std::to_string(cutoff) + " axes", !o.closed, found);
    else if (F.characteristic() <= cutoff)
        r.add("L(1) has " + std::to_string(F.characteristic()) + " axes", o.closed && o.axes.size() == F.characteristic(),
              found);
    return r;
}

}  // namespace highwater
