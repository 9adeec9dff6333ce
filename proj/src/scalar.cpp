#include "highwater/scalar.hpp"

#include <cctype>

namespace highwater {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t reduce_signed(long n, std::uint64_t p) {
    long m = static_cast<long>(static_cast<__int128>(n) % static_cast<__int128>(p));
    if (m < 0) m += static_cast<long>(p);
    return static_cast<std::uint64_t>(m);
}

}  // namespace

Field Field::make(std::uint64_t characteristic) {
    if (characteristic == 0) return Field(0);
    if (characteristic == 2 || characteristic == 3)
        throw FieldError("forbidden characteristic " + std::to_string(characteristic) +
                         ": the product rules need 2 and 3 to be invertible");
    if (characteristic > (1ULL << 62) || !is_prime(characteristic))
        throw FieldError("characteristic " + std::to_string(characteristic) + " is not a supported prime");
    return Field(characteristic);
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(const Field& field, long n) : field_(field) {
    if (field.is_rational())
        value_ = mpq_class(n);
    else
        value_ = reduce_signed(n, field.characteristic());
}

Scalar::Scalar(const Field& field, long num, long den) : field_(field) {
    if (den == 0) throw AlgebraError("zero denominator in scalar literal");
    if (field.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        value_ = q;
    } else {
        std::uint64_t p = field.characteristic();
        std::uint64_t d = reduce_signed(den, p);
        if (d == 0) throw AlgebraError("denominator divisible by the characteristic");
        value_ = mulmod(reduce_signed(num, p), powmod(d, p - 2, p), p);
    }
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || (slash != std::string::npos && (den[0] == '-' || den[0] == '+')))
        throw AlgebraError("malformed scalar literal '" + text + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
    if (d == 0) throw AlgebraError("zero denominator in scalar literal '" + text + "'");
    if (field.is_rational()) {
        mpq_class q(n, d);
        q.canonicalize();
        return Scalar(field, std::variant<mpq_class, std::uint64_t>(q));
    }
    mpz_class p(std::to_string(field.characteristic()));
    mpz_class nm = ((n % p) + p) % p, dm = ((d % p) + p) % p;
    if (dm == 0) throw AlgebraError("denominator divisible by the characteristic in '" + text + "'");
    std::uint64_t a = std::stoull(nm.get_str()), b = std::stoull(dm.get_str());
    std::uint64_t pc = field.characteristic();
    return Scalar(field, std::variant<mpq_class, std::uint64_t>(mulmod(a, powmod(b, pc - 2, pc), pc)));
}

void Scalar::check(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("scalars over " + field_.name() + " and " + o.field_.name() + " cannot be combined");
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, std::variant<mpq_class, std::uint64_t>(mpq_class(-rational())));
    std::uint64_t r = residue();
    return Scalar(field_, std::variant<mpq_class, std::uint64_t>(r == 0 ? 0 : field_.characteristic() - r));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += o.rational();
    } else {
        std::uint64_t p = field_.characteristic();
        auto& r = std::get<std::uint64_t>(value_);
        r = static_cast<std::uint64_t>((static_cast<u128>(r) + o.residue()) % p);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= o.rational();
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = mulmod(r, o.residue(), field_.characteristic());
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw AlgebraError("division by zero");
    if (field_.is_rational()) return Scalar(field_, std::variant<mpq_class, std::uint64_t>(mpq_class(1 / rational())));
    std::uint64_t p = field_.characteristic();
    return Scalar(field_, std::variant<mpq_class, std::uint64_t>(powmod(residue(), p - 2, p)));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check(o);
    return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    check(o);
    if (field_.is_rational()) return rational() == o.rational();
    return residue() == o.residue();
}

bool Scalar::operator<(const Scalar& o) const {
    check(o);
    if (field_.is_rational()) return rational() < o.rational();
    return residue() < o.residue();
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

bool Scalar::prints_negative() const {
    return field_.is_rational() && sgn(rational()) < 0;
}

}  // namespace highwater
