#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "lynum/errors.hpp"

namespace lynum {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
///
/// All exact arithmetic in the library is parameterized by one of these.
/// Elements are carried as canonical mpq_class values; for characteristic p
/// they are the integer residues 0..p-1.
class FieldSpec {
public:
    FieldSpec() : char_(0) {}

    explicit FieldSpec(std::uint32_t characteristic) : char_(characteristic) {
        if (char_ != 0 && !is_prime(char_))
            throw InvalidField("characteristic must be 0 or a prime, got " +
                               std::to_string(characteristic));
    }

    std::uint32_t characteristic() const { return char_; }
    bool is_rational() const { return char_ == 0; }

    /// Canonical representative of an exact rational in this field.
    mpq_class canon(const mpq_class& x) const {
        if (char_ == 0) return x;
        long p = static_cast<long>(char_);
        long num = residue(x.get_num(), p);
        long den = residue(x.get_den(), p);
        if (den == 0)
            throw InvalidField("denominator not invertible modulo " + std::to_string(p));
        long r = mul_mod(num, inv_mod(den, p), p);
        return mpq_class(r);
    }

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return canon(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return canon(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return canon(a * b); }
    mpq_class neg(const mpq_class& a) const { return canon(-a); }

    mpq_class div(const mpq_class& a, const mpq_class& b) const {
        if (b == 0) throw Error("division by zero");
        if (char_ == 0) return a / b;
        return canon(a * mpq_class(inv_mod(to_residue(b), static_cast<long>(char_))));
    }

    bool is_zero(const mpq_class& a) const {
        if (char_ == 0) return a == 0;
        return canon(a) == 0;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.char_ == b.char_;
    }

    /// Residue of x in [0, p) assuming x is already canonical (integer 0..p-1).
    long to_residue(const mpq_class& x) const {
        return x.get_num().get_si();
    }

    static long residue(const mpz_class& z, long p) {
        mpz_class r = z % p;
        long v = r.get_si();
        return v < 0 ? v + p : v;
    }

    static long mul_mod(long a, long b, long p) { return (a * b) % p; }

    static long inv_mod(long a, long p) {
        // extended Euclid; a in [1, p)
        long t = 0, newt = 1, r = p, newr = a;
        while (newr != 0) {
            long q = r / newr;
            long tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (r != 1) throw InvalidField("element not invertible");
        return t < 0 ? t + p : t;
    }

    static bool is_prime(std::uint32_t m) {
        if (m < 2) return false;
        if (m % 2 == 0) return m == 2;
        for (std::uint64_t q = 3; q * q <= m; q += 2)
            if (m % q == 0) return false;
        return true;
    }

private:
    std::uint32_t char_;
};

/// Parse a canonical rational string ("5", "-2/3").
inline mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw BadInput("not a rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

} // namespace lynum
