#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypack {

// Exact rational scalar. All region coordinates, areas and construction
// parameters are Rat; floating point is reserved for distances, integrals
// and report approximations.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", "p/q". Rejects anything else (floats never cross this
// boundary).
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    std::size_t slash = text.find('/');
    auto digits_ok = [](const std::string& s, bool sign_ok) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    Rat q;
    if (q.set_str(num + "/" + den, 10) != 0)
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rat: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical form: "p" or "p/q" with q > 1 and gcd(p,q) = 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_d(const Rat& q) { return q.get_d(); }

// base^e for integer e (base != 0).
inline Rat rat_pow(const Rat& base, long e) {
    if (base == 0 && e <= 0) throw std::domain_error("rat_pow: 0 to nonpositive power");
    Rat out;
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), mag);
    out.canonicalize();
    if (e < 0) out = 1 / out;
    return out;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// Largest integer n with n <= q.
inline long rat_floor_long(const Rat& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p()) throw std::overflow_error("rat_floor_long: out of range");
    return z.get_si();
}

}  // namespace hypack
