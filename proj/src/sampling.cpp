#include "highwater/sampling.hpp"

#include <algorithm>

#include "highwater/automorphism.hpp"
#include "highwater/ideals.hpp"

namespace highwater {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Scalar random_coeff(const Field& F, std::mt19937_64& rng) {
    long n = 0;
    while (n == 0) n = uniform(rng, -5, 5);
    Scalar c(F, n, uniform(rng, 1, 4));
    return c.is_zero() ? Scalar::one(F) : c;
}

BasisKey random_key(std::mt19937_64& rng, long bound) {
    switch (uniform(rng, 0, 2)) {
        case 0: return BasisKey::a(uniform(rng, -bound, bound));
        case 1: return BasisKey::s(uniform(rng, 1, bound));
        default: return BasisKey::p(static_cast<int>(uniform(rng, 1, 2)), 3 * uniform(rng, 1, std::max(1L, bound / 3)));
    }
}

const std::vector<std::vector<long>> kPatterns = {
    {1, -1}, {1, 0, -1}, {1, 0, 0, -1}, {-1, 2, -1}, {1, -3, 3, -1}, {1, 1, -1, -1}, {1, 2, -2, -1},
    {1, 0, 0, 0, 0, 0, -1}, {1, -2, 0, 2, -1}, {1, 0, -2, 0, 1},
};

}  // namespace

Element random_element(const Field& F, std::mt19937_64& rng, std::size_t support, long index_bound) {
    Element x(F);
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(support)));
    for (std::size_t i = 0; i < n; ++i) x.add(random_key(rng, index_bound), random_coeff(F, rng));
    return x;
}

Element random_generator(const Field& F, std::mt19937_64& rng, std::size_t support) {
    while (true) {
        Element x(F);
        long mode = uniform(rng, 0, 19);
        if (mode < 2) {
            x = random_element(F, rng, support, 8);
        } else if (mode < 4) {
            long n = uniform(rng, 1, std::min<long>(4, static_cast<long>(support)));
            for (long t = 0; t < n; ++t) x.add_p(uniform(rng, 1, 2), 3 * uniform(rng, 1, 4), random_coeff(F, rng));
        } else {
            const auto& pat = kPatterns[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(kPatterns.size()) - 1))];
            long shifts = uniform(rng, 1, 2);
            for (long t = 0; t < shifts; ++t) {
                Scalar c = random_coeff(F, rng);
                long off = uniform(rng, -3, 3);
                for (std::size_t i = 0; i < pat.size(); ++i) x.add_a(off + static_cast<long>(i), c * Scalar(F, pat[i]));
            }
            long extra = uniform(rng, 0, 3);
            for (long t = 0; t < extra; ++t) {
                if (uniform(rng, 0, 1))
                    x.add_s(uniform(rng, 1, 6), random_coeff(F, rng));
                else
                    x.add_p(uniform(rng, 1, 2), 3 * uniform(rng, 1, 3), random_coeff(F, rng));
            }
        }
        if (!x.is_zero() && x.terms().size() <= support) return x;
    }
}

Report baric_frobenius_check(const Field& F, std::size_t samples, std::size_t support, std::uint64_t seed) {
    Report r{"baric map and Frobenius form over " + F.name(), {}};
    std::mt19937_64 rng(seed);
    std::size_t bad_w = 0, bad_f = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        Element x = random_element(F, rng, support), y = random_element(F, rng, support),
                z = random_element(F, rng, support);
        Element xy = x * y;
        if (weight(xy) != weight(x) * weight(y)) {
            ++bad_w;
            r.add("weight of " + x.to_string() + " times " + y.to_string(), false);
        }
        if (frobenius(xy, z) != frobenius(x, y * z)) {
            ++bad_f;
            r.add("associativity of the form on " + x.to_string() + ", " + y.to_string() + ", " + z.to_string(), false);
        }
    }
    std::string n = std::to_string(samples);
    r.add("weight is multiplicative on " + n + " samples", bad_w == 0);
    r.add("Frobenius form is associative on " + n + " samples", bad_f == 0);
    return r;
}

Report ideal_engine_check(const Field& F, std::size_t samples, std::size_t support, std::uint64_t seed) {
    Report r{"ideal engine on random generators over " + F.name(), {}};
    std::mt19937_64 rng(seed);
    std::size_t bad_basis = 0, bad_gen = 0, bad_inv = 0, bad_axis = 0, proper = 0;
    const Element a0 = a(F, 0);
    for (std::size_t i = 0; i < samples; ++i) {
        Element g = random_generator(F, rng, support);
        Ideal I = ideal_of({g});
        std::string tag = g.to_string() + " (" + variant_name(I.variant()) + ")";
        for (const auto& b : I.basis(12))
            if (!I.contains(b)) {
                ++bad_basis;
                r.add(tag + ": basis element " + b.to_string() + " is not a member", false);
            }
        if (!I.contains(g)) {
            ++bad_gen;
            r.add(tag + ": generator does not reduce to 0", false);
        }
        Report inv = aut_invariance_check(I, 12);
        if (!inv.passed()) {
            ++bad_inv;
            r.add(tag + ": not invariant under tau(1)", false);
        }
        if (I.variant() != Ideal::Variant::Full) {
            ++proper;
            if (I.contains(a0)) {
                ++bad_axis;
                r.add(tag + ": proper ideal contains a0", false);
            }
        }
    }
    std::string n = std::to_string(samples);
    r.add("basis elements are members (" + n + " ideals)", bad_basis == 0);
    r.add("generators reduce to 0 (" + n + " ideals)", bad_gen == 0);
    r.add("tau(1)-invariance (" + n + " ideals)", bad_inv == 0);
    r.add("a0 lies in none of the " + std::to_string(proper) + " proper ideals", bad_axis == 0);
    return r;
}

Report jideal_check(const Field& F, long max_k, std::size_t samples, std::uint64_t seed) {
    Report r{"ideals inside J over " + F.name(), {}};
    std::mt19937_64 rng(seed);
    std::size_t bad_trip = 0, bad_codim = 0;
    for (long k = 1; k <= max_k; ++k)
        for (std::size_t i = 0; i < samples; ++i) {
            std::vector<Scalar> beta;
            for (long m = 1; m < k; ++m) beta.push_back(uniform(rng, 0, 3) == 0 ? Scalar::zero(F) : random_coeff(F, rng));
            beta.push_back(Scalar::one(F));
            JIdeal J(F, beta);
            Element x = J.generator();
            Scalar c = random_coeff(F, rng);
            std::vector<Element> gens{c * x + s(F, 3) * x, apply(tau(0), x), s(F, 6) * x};
            JIdeal back = j_ideal_of(gens);
            if (!(back == J)) {
                ++bad_trip;
                r.add("tuple of " + x.to_string() + " does not round-trip", false);
            }
            if (J.codimension() != 2 * (k - 1) || static_cast<long>(J.quotient_keys().size()) != 2 * (k - 1)) {
                ++bad_codim;
                r.add("codimension of " + x.to_string(), false);
            }
        }
    r.add("tuple -> ideal -> tuple for k <= " + std::to_string(max_k), bad_trip == 0);
    r.add("codimension in J is 2(k-1)", bad_codim == 0);

    Ideal P = ideal_of({p(F, 1, 3)});
    std::vector<Element> all;
    bool every = P.variant() == Ideal::Variant::InJ;
    for (long m = 3; m <= 12; m += 3)
        for (int rr : {1, 2}) {
            all.push_back(p(F, rr, m));
            every = every && P.contains(all.back());
        }
    r.add("(p(1,3)) contains every p(r,k) with k <= 12", every);
    r.add("p(1,3) lies in the ideal of all p(r,k) with k <= 12", ideal_of(all).contains(p(F, 1, 3)));
    return r;
}

}  // namespace highwater
