#include "cellfrob/scalar.hpp"

#include <cctype>

namespace cellfrob {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

std::optional<Rational> Rational::parse(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
}

Fp Fp::from_int(std::uint64_t p, long long v) {
    if (p == 0) throw ValidationError("prime field with modulus 0");
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(p, static_cast<std::uint64_t>(r));
}

std::optional<Fp> Fp::parse(std::uint64_t p, std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    std::uint64_t v = 0;
    for (char c : s) {
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        v %= p; // keep reduced while reading, digits can be arbitrary many
    }
    Fp r(p, v);
    return neg ? -r : r;
}

Fp Fp::inverse() const {
    if (p_ == 0 || v_ == 0) throw ValidationError("inverse of zero in prime field");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw ValidationError("modulus is not prime: found zero divisor");
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(p_, static_cast<std::uint64_t>(t));
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace cellfrob
