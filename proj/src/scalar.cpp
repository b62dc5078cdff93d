// SPDX-License-Identifier: MIT

#include "htt/scalar.hpp"

#include <climits>
#include <cstdint>
#include <stdexcept>

namespace htt
{

namespace
{

bool is_prime(unsigned long p)
{
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

void Field::set_modulus(unsigned long p)
{
    if (p != 0 && !is_prime(p))
        throw std::invalid_argument("field modulus must be prime: " + std::to_string(p));
    if (p > (1UL << 62)) throw std::invalid_argument("field modulus exceeds 2^62: " + std::to_string(p));
    modulus_ = p;
}

namespace
{

using i128 = Scalar::wide;
__extension__ typedef unsigned __int128 u128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0)
    {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 x) { return x >= INT64_MIN && x <= INT64_MAX; }

mpz_class to_mpz(i128 x)
{
    const bool neg = x < 0;
    u128 u = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & ~0UL));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

// Inverse of a nonzero residue modulo p.
i128 inverse_mod(i128 a, i128 p)
{
    i128 r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0)
    {
        const i128 q = r0 / r1;
        i128 tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return ((t0 % p) + p) % p;
}

}  // namespace

Scalar::Scalar(long value) { assign(value, 1); }

Scalar::Scalar(const mpq_class& value) { assign(value); }

Scalar::Scalar(const Scalar& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
{
}

Scalar& Scalar::operator=(const Scalar& other)
{
    if (this != &other)
    {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Scalar::assign(i128 num, i128 den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    const unsigned long p = Field::modulus();
    big_.reset();
    if (p != 0)
    {
        const i128 m = p;
        const i128 d = ((den % m) + m) % m;
        if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
        const i128 n = ((num % m) + m) % m;
        num_ = static_cast<std::int64_t>(n * inverse_mod(d, m) % m);
        den_ = 1;
        return;
    }
    if (den < 0)
    {
        num = -num;
        den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1)
    {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    if (fits64(num) && fits64(den))
    {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        return;
    }
    assign(mpq_class(to_mpz(num), to_mpz(den)));
}

void Scalar::assign(const mpq_class& q)
{
    mpq_class v = q;
    v.canonicalize();
    const unsigned long p = Field::modulus();
    big_.reset();
    if (p != 0)
    {
        const mpz_class modulus(p);
        mpz_class num = v.get_num() % modulus;
        mpz_class den = v.get_den() % modulus;
        if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
        mpz_class r = (num * inv) % modulus;
        if (r < 0) r += modulus;
        num_ = static_cast<std::int64_t>(r.get_ui());
        den_ = 1;
        return;
    }
    if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p())
    {
        num_ = v.get_num().get_si();
        den_ = v.get_den().get_si();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(v));
}

mpq_class Scalar::value() const
{
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-')
        throw std::invalid_argument("malformed scalar: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in scalar: '" + std::string(text) + "'");
    return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const
{
    if (big_) return big_->get_str(10);
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar out;
    if (big_)
        out.assign(mpq_class(1 / *big_));
    else
        out.assign(den_, num_);
    return out;
}

Scalar Scalar::operator-() const
{
    Scalar out;
    if (big_)
        out.assign(mpq_class(-*big_));
    else
        out.assign(-static_cast<i128>(num_), den_);
    return out;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    if (big_ || other.big_)
        assign(mpq_class(value() + other.value()));
    else if (den_ == 1 && other.den_ == 1)
        assign(static_cast<i128>(num_) + other.num_, 1);
    else
        assign(static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_,
               static_cast<i128>(den_) * other.den_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other)
{
    if (big_ || other.big_)
        assign(mpq_class(value() * other.value()));
    else
        assign(static_cast<i128>(num_) * other.num_, static_cast<i128>(den_) * other.den_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.value() == b.value();
}

}  // namespace htt
