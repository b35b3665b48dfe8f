#ifndef CELLFROB_SCALAR_HPP
#define CELLFROB_SCALAR_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cellfrob/errors.hpp"

namespace cellfrob {

/// Exact scalars of the ground field.  Two models are provided: Rational
/// (arbitrary-precision, GMP-backed) and Fp (prime field with runtime
/// modulus).  No operation ever rounds.
template <typename K>
concept FieldScalar =
    std::regular<K> && requires(const K a, const K b) {
        { a + b } -> std::same_as<K>;
        { a - b } -> std::same_as<K>;
        { a * b } -> std::same_as<K>;
        { a / b } -> std::same_as<K>;
        { -a } -> std::same_as<K>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.zero() } -> std::same_as<K>;   // additive identity of a's field
        { a.one() } -> std::same_as<K>;    // multiplicative identity
        { a.str() } -> std::convertible_to<std::string>;
    };

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (mpq_class canonical form).  Serializes as "p/q", "/q"
/// omitted when q = 1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw ParseError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts an optional sign, digits, and an optional "/digits" part.
    static std::optional<Rational> parse(std::string_view s);

    std::string str() const { return v_.get_str(); }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ValidationError("division by zero in rational field");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  private:
    mpq_class v_;
};

/// Element of F_p for a runtime prime p, stored as the reduced representative
/// in [0, p).  A default-constructed Fp is the zero of a not-yet-known field
/// (modulus 0); it combines with any modulus and compares equal to any zero.
/// Mixing two distinct nonzero moduli is a hard error.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t p, std::uint64_t v) : v_(p ? v % p : v), p_(p) {
        if (p >= (1ull << 31))
            throw ValidationError("prime field moduli are limited to 2^31 - 1");
    }

    static Fp from_int(std::uint64_t p, long long v);
    /// Accepts an optional sign and decimal digits; reduces mod p.
    /// Fraction syntax is rejected (emitted files always carry residues).
    static std::optional<Fp> parse(std::uint64_t p, std::string_view s);

    std::string str() const { return std::to_string(v_); }

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp zero() const { return Fp(p_, 0); }
    Fp one() const {
        if (p_ == 0) throw ValidationError("one() on prime-field zero of unknown modulus");
        return Fp(p_, 1);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = common_modulus(a, b);
        if (p == 0) return Fp();
        return Fp(p, add_mod(a.v_, b.v_, p));
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = common_modulus(a, b);
        if (p == 0) return Fp();
        return Fp(p, add_mod(a.v_, p - (b.v_ % p), p));
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = common_modulus(a, b);
        if (p == 0) return Fp();
        return Fp(p, mul_mod(a.v_, b.v_, p));
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        if (b.is_zero()) throw ValidationError("division by zero in prime field");
        return a * b.inverse();
    }
    Fp operator-() const { return p_ ? Fp(p_, p_ - v_) : Fp(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const;

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_)
            throw ValidationError("comparing elements of different prime fields");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  private:
    static std::uint64_t common_modulus(const Fp& a, const Fp& b) {
        if (a.p_ == b.p_) return a.p_;
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        throw ValidationError("mixing elements of different prime fields");
    }
    // residues < p < 2^31, so sums and products fit in 64 bits exactly
    static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return (a + b) % p;
    }
    static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return (a * b) % p;
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t p);

} // namespace cellfrob

#endif
