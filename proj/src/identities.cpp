#include "highwater/identities.hpp"

#include <cstdlib>
#include <map>

#include "highwater/automorphism.hpp"
#include "highwater/derived.hpp"

namespace highwater {

namespace {

// Tallies identity checks per group; failures are recorded individually.
class Tally {
public:
    explicit Tally(Report& r) : r_(r) {}
    void check(const std::string& group, const std::string& what, const Element& lhs, const Element& rhs) {
        auto& g = groups_[group];
        ++g.first;
        if (lhs != rhs) {
            ++g.second;
            r_.add(group + ": " + what, false, "lhs " + lhs.to_string() + " vs rhs " + rhs.to_string());
        }
    }
    void finish() {
        for (const auto& [name, g] : groups_)
            r_.add(name + " (" + std::to_string(g.first) + " identities)", g.second == 0,
                   g.second ? std::to_string(g.second) + " failed" : "");
    }

private:
    Report& r_;
    std::map<std::string, std::pair<std::size_t, std::size_t>> groups_;
};

std::string idx(long i, long j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

Report product_identities(long n_max, const Field& F) {
    Report r{"product identities over " + F.name() + " up to " + std::to_string(n_max), {}};
    Tally t(r);
    auto q = [&](long n, long d) { return Scalar(F, n, d); };
    for (long i = 1; i <= n_max; ++i) {
        for (long j = 1; j <= n_max; ++j) {
            bool i3 = i % 3 == 0, ij3 = (i * j) % 3 == 0;
            Element ci = c_vec(F, i), cj = c_vec(F, j);
            Element cij = pair_vec(Family::C, F, i, j), tij = pair_vec(Family::S, F, i, j);
            Element zij = pair_vec(Family::Z, F, i, j), uij = pair_vec(Family::U, F, i, j);
            Element vij = pair_vec(Family::V, F, i, j);
            Element zd = z_vec(F, std::labs(i - j)), zs = z_vec(F, i + j), zj = z_vec(F, j);

            Element cc = q(2, 1) * tij + q(2, 1) * zij;
            if (!i3) cc -= q(3, 1) * (zd + zs);
            t.check("transition c*c", idx(i, j), ci * cj, cc);
            Element cs = q(3, 8) * cij;
            if (!i3) cs -= q(3, 1) * zj;
            t.check("transition c*s", idx(i, j), ci * s(F, j), cs);
            t.check("transition c*z", idx(i, j), ci * zj, i3 ? Element(F) : q(3, 1) * zj);

            t.check("s*s", idx(i, j), s(F, i) * s(F, j), q(-3, 8) * tij);
            if (j % 3 == 0) {
                if (i3) t.check("z*z", idx(i, j), z_vec(F, i) * zj, q(3, 8) * zij);
                t.check("s*z", idx(i, j), s(F, i) * zj, q(-3, 8) * zij);
            }

            t.check("pair form of u", idx(i, j), uij, q(3, 1) * cij + q(4, 1) * tij + q(4, 1) * zij);
            t.check("pair form of v", idx(i, j), vij, cij - q(4, 1) * tij - q(4, 1) * zij);

            Element ui = u_vec(F, i), uj = u_vec(F, j), vi = v_vec(F, i), vj = v_vec(F, j);
            t.check("u*u", idx(i, j), ui * uj, ij3 ? q(3, 1) * uij : q(3, 1) * uij - q(21, 1) * zij);
            t.check("u*v", idx(i, j), ui * vj, ij3 ? q(-3, 1) * vij : q(-3, 1) * vij - q(15, 1) * zij);
            t.check("v*v", idx(i, j), vi * vj, ij3 ? -uij : q(3, 1) * zij - uij);
            t.check("u*z", idx(i, j), ui * zj, i3 ? Element(F) : q(12, 1) * zj);
            t.check("v*z", idx(i, j), vi * zj, Element(F));
        }
    }
    // Products with z(r,j).
    for (long r0 = 0; r0 < 3; ++r0) {
        for (long k = 3; k <= n_max; k += 3) {
            Element zr = z(F, r0, k);
            for (long i = -n_max; i <= n_max; ++i)
                t.check("a*z(r,j)", "a(" + std::to_string(i) + ") z" + idx(r0, k), a(F, i) * zr,
                        q(3, 2) * zr + z(F, -(i + r0), k));
            for (long j = 1; j <= n_max; ++j)
                t.check("s*z(r,k)", "s(" + std::to_string(j) + ") z" + idx(r0, k), s(F, j) * zr,
                        q(3, 4) * (z(F, r0, j) + zr) - q(3, 8) * (z(F, r0, std::labs(j - k)) + z(F, r0, j + k)));
            for (long t0 = 0; t0 < 3; ++t0)
                for (long h = 3; h <= n_max; h += 3) {
                    long m = -(t0 + r0);
                    t.check("p*z(t,k)", "p" + idx(t0, h) + " z" + idx(r0, k), p(F, t0, h) * zr,
                            q(3, 4) * (p(F, m, h) + p(F, m, k)) - q(3, 8) * (p(F, m, std::labs(h - k)) + p(F, m, h + k)));
                    t.check("z*z(t,k)", "z" + idx(t0, h) + " z" + idx(r0, k), z(F, t0, h) * zr,
                            q(-3, 4) * (z(F, m, h) + z(F, m, k)) + q(3, 8) * (z(F, m, std::labs(h - k)) + z(F, m, h + k)));
                }
        }
    }
    t.finish();
    return r;
}

Report reflection_identities(long i_max, const Field& F) {
    Report r{"reflection identities over " + F.name() + " up to " + std::to_string(i_max), {}};
    Tally t(r);
    auto q = [&](long n, long d) { return Scalar(F, n, d); };
    const Automorphism t32 = tau(3), t0 = tau(0), t12 = tau(1), t2 = tau(4), t1 = tau(2);
    const Automorphism t32t0 = compose(t32, t0), t2t1 = compose(t2, t1);
    const Element a3 = a(F, 3), am3 = a(F, -3), s3 = s(F, 3), z3 = z_vec(F, 3), a0 = a(F, 0), a1 = a(F, 1),
                  s1 = s(F, 1);
    auto half_reflection = [&](const Element& w) {
        Element y = a1 * w - q(1, 2) * w;
        return q(4, 3) * (a0 * (a1 * w)) - q(4, 3) * (s1 * w) - q(4, 3) * w - q(2, 1) * y +
               q(4, 3) * (apply(t2, y) - apply(t2t1, y));
    };
    for (long i = 1; i <= i_max; ++i) {
        std::string n = std::to_string(i);
        bool i3 = i % 3 == 0;
        Element ui = u_vec(F, i), vi = v_vec(F, i), wi = w_vec(F, i);
        if (i3) {
            t.check("z, wt under tau(3)", "z" + n, apply(t32, z_vec(F, i)), z_vec(F, i));
            t.check("z, wt under tau(3)", "wt" + n, apply(t32, wt_vec(F, i)), -wt_vec(F, i));
        }
        Element shifted = a(F, 3 - i) + a(F, 3 + i);
        t.check("u, v under tau(3)", "u" + n, apply(t32, ui),
                q(6, 1) * a3 - q(3, 1) * shifted + q(4, 1) * (s(F, i) + z_vec(F, i)));
        t.check("u, v under tau(3)", "v" + n, apply(t32, vi), q(2, 1) * a3 - shifted - q(4, 1) * (s(F, i) + z_vec(F, i)));
        Element c3i = pair_vec(Family::C, F, 3, i);
        t.check("c(3,i) from reflections", "via u" + n, c3i,
                q(1, 3) * (q(-2, 1) * ui + apply(t32, ui) + apply(t32t0, ui)));
        t.check("c(3,i) from reflections", "via v" + n, c3i, q(-2, 1) * vi + apply(t32, vi) + apply(t32t0, vi));
        t.check("tau(3) as an algebra expression", "u" + n, apply(t32, ui),
                ui - q(5, 4) * (a3 * ui) + q(3, 4) * (am3 * ui) + s3 * ui + z3 * ui);
        t.check("tau(3) as an algebra expression", "v" + n, apply(t32, vi),
                q(7, 12) * (a3 * vi) - q(1, 12) * (am3 * vi) + q(1, 3) * (s3 * vi) + q(1, 3) * (z3 * vi));
        t.check("tau(1) on w as an algebra expression", "w" + n, apply(t12, wi), half_reflection(wi));
        for (long k = 1; k <= i_max; ++k) {
            if (k % 3 == 0) continue;
            t.check("s(k) w(i) by translations", idx(k, i), s(F, k) * wi,
                    q(-3, 4) * wi + q(3, 8) * (apply(theta(k), wi) + apply(theta(-k), wi)));
        }
        for (long j = 3; j <= i_max; j += 3) {
            Element x = wi + wt_vec(F, j);
            Element sx = apply(theta(2), x) + apply(theta(-2), x) + apply(theta(4), x) + apply(theta(-4), x);
            t.check("separating w from wt", idx(i, j), sx - q(8, 3) * ((s(F, 2) + s(F, 4)) * x),
                    q(4, 1) * wi - q(6, 1) * wt_vec(F, j));
            if (!i3) t.check("s(i) wt(j)", idx(i, j), s(F, i) * wt_vec(F, j), q(3, 4) * wt_vec(F, j));
        }
        if (i3) {
            Element wt = wt_vec(F, i);
            t.check("wt translation sum", "wt" + n, wt + apply(theta(2), wt) + apply(theta(4), wt), Element(F));
        }
        if (F.characteristic() == 5) {
            t.check("tau(3) on the 0-space (char 5)", "u" + n, apply(t32, ui), ui + q(2, 1) * (am3 * ui) + s3 * ui + z3 * ui);
            if (i3) {
                Element zi = z_vec(F, i), wt = wt_vec(F, i);
                t.check("tau(3) on the 0-space (char 5)", "z" + n, apply(t32, zi), zi + q(2, 1) * (am3 * zi) + s3 * zi + z3 * zi);
                t.check("tau(1) on wt as an algebra expression (char 5)", "wt" + n, apply(t12, wt), half_reflection(wt));
            }
        }
    }
    t.finish();
    return r;
}

}  // namespace highwater
