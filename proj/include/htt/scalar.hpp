// SPDX-License-Identifier: MIT
//
// scalar.hpp
//
// Exact scalars: arbitrary-precision rationals by default, or the prime
// field Z/p when a modulus is selected for the session.

#ifndef HTT_SCALAR_HPP
#define HTT_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace htt
{

// Session-wide choice of ground field. Modulus 0 selects the rationals.
class Field
{
public:
    static unsigned long modulus() { return modulus_; }

    // Throws std::invalid_argument unless p is 0 or a prime.
    static void set_modulus(unsigned long p);

private:
    static inline unsigned long modulus_ = 0;
};

// Restores the previous field on scope exit.
class FieldScope
{
public:
    explicit FieldScope(unsigned long p) : previous_(Field::modulus())
    {
        Field::set_modulus(p);
    }
    ~FieldScope() { Field::set_modulus(previous_); }
    FieldScope(const FieldScope&) = delete;
    FieldScope& operator=(const FieldScope&) = delete;

private:
    unsigned long previous_;
};

// Values whose numerator and denominator fit in 64 bits are stored inline;
// larger ones fall back to a GMP rational.
class Scalar
{
public:
    __extension__ typedef __int128 wide;

    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpq_class& value);
    Scalar(const Scalar& other);
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& other);
    Scalar& operator=(Scalar&&) noexcept = default;
    ~Scalar() = default;

    // Accepts "a" or "a/b" with optional leading minus. Throws
    // std::invalid_argument on malformed text or zero denominator.
    static Scalar parse(std::string_view text);

    // Canonical text: "a" or "a/b" in lowest terms, residue in [0,p) mod p.
    std::string str() const;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    mpq_class value() const;

    // Throws std::domain_error on zero.
    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void assign(const mpq_class& q);
    void assign(wide num, wide den);

    // Lowest terms with den_ > 0 when big_ is empty.
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

// (-1)^exponent as a scalar.
inline Scalar sign_of(long exponent)
{
    return Scalar((exponent % 2 == 0) ? 1 : -1);
}

}  // namespace htt

#endif
