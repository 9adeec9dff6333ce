#pragma once

// Independent product oracle: the algebra in the basis a(i), s(r, j) with r in Z/3, where
// s(r, j) = s(0, j) for j not in 3N and s(r, 0) = 0. Canonical elements are mapped in through
//   s(j)   -> (1/3) sum_r s(r, j)
//   p(r,j) -> (1/3) (s(r-1, j) - s(r+1, j))
// and products are compared there. Needs characteristic != 3.

#include <map>
#include <tuple>

#include "highwater/element.hpp"

namespace oracle {

using highwater::Element;
using highwater::Field;
using highwater::Scalar;

inline int m3(long n) { return static_cast<int>(((n % 3) + 3) % 3); }

class FirstModel {
public:
    // (0, i, 0) for a(i); (1, j, r) for s(r, j)
    using Key = std::tuple<int, long, int>;

    explicit FirstModel(const Field& F) : F_(F) {}

    void add_a(long i, const Scalar& c) { bump({0, i, 0}, c); }

    void add_s(int r, long j, const Scalar& c) {
        if (j == 0) return;
        bump({1, j, j % 3 == 0 ? m3(r) : 0}, c);
    }

    // s(a, 3h) + s(b, 3h) - s(-(a+b), 3h)
    void add_triple(int a, int b, long j, const Scalar& c) {
        add_s(a, j, c);
        add_s(b, j, c);
        add_s(-(a + b), j, -c);
    }

    const std::map<Key, Scalar>& terms() const { return t_; }
    bool operator==(const FirstModel& o) const { return t_ == o.t_; }

    FirstModel& operator+=(const FirstModel& o) {
        for (const auto& [k, c] : o.t_) bump(k, c);
        return *this;
    }

    static FirstModel from(const Element& x) {
        FirstModel m(x.field());
        const Field& F = x.field();
        Scalar third(F, 1, 3);
        for (const auto& [k, c] : x.terms()) {
            switch (k.kind) {
                case highwater::KeyKind::A: m.add_a(k.index, c); break;
                case highwater::KeyKind::S:
                    for (int r = 0; r < 3; ++r) m.add_s(r, k.index, third * c);
                    break;
                case highwater::KeyKind::P:
                    m.add_s(k.residue - 1, k.index, third * c);
                    m.add_s(k.residue + 1, k.index, -third * c);
                    break;
            }
        }
        return m;
    }

    friend FirstModel operator*(const FirstModel& x, const FirstModel& y) {
        FirstModel out(x.F_);
        for (const auto& [kx, cx] : x.t_)
            for (const auto& [ky, cy] : y.t_) out.basis_product(kx, ky, cx * cy);
        return out;
    }

private:
    void bump(const Key& k, const Scalar& c) {
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }

    static Scalar delta(const Field& F, int r) {
        r = m3(r);
        return Scalar(F, r == 0 ? 0 : (r == 1 ? 1 : -1));
    }

    void basis_product(Key x, Key y, const Scalar& c) {
        const Field& F = F_;
        if (std::get<0>(x) > std::get<0>(y)) std::swap(x, y);
        auto [kx, i, rx] = x;
        auto [ky, j, ry] = y;
        if (kx == 0 && ky == 0) {
            add_a(i, c * Scalar(F, 1, 2));
            add_a(j, c * Scalar(F, 1, 2));
            add_s(m3(i), std::labs(i - j), c);
        } else if (kx == 0) {
            add_a(i, c * Scalar(F, -3, 4));
            add_a(i - j, c * Scalar(F, 3, 8));
            add_a(i + j, c * Scalar(F, 3, 8));
            add_s(ry, j, c * Scalar(F, 3, 2));
            Scalar d = c * delta(F, m3(i) - ry);
            add_s(ry - 1, j, d);
            add_s(ry + 1, j, -d);
        } else if (i % 3 != 0 || j % 3 != 0) {
            add_s(rx, i, c * Scalar(F, 3, 4));
            add_s(ry, j, c * Scalar(F, 3, 4));
            for (int t = 0; t < 3; ++t) {
                add_s(t, std::labs(i - j), c * Scalar(F, -1, 8));
                add_s(t, i + j, c * Scalar(F, -1, 8));
            }
        } else {
            for (long h : {i, j}) add_triple(rx, ry, h, c * Scalar(F, 3, 4));
            for (long h : {std::labs(i - j), i + j}) add_triple(rx, ry, h, c * Scalar(F, -3, 8));
        }
    }

    Field F_;
    std::map<Key, Scalar> t_;
};

}  // namespace oracle
