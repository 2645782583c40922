#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace selfdual {

// All arithmetic in this library is exact. Int/Rat are arbitrary precision;
// no floating point appears anywhere in the computational core.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

// Raised when an internal exact-arithmetic consistency check fails. This
// should never happen; it indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// (g, p, q) with p*a + q*b == g == gcd(a, b).
inline void int_gcdext(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
}

inline Int int_abs(const Int& a) { return abs(a); }

// Exact quotient; throws if b does not divide a.
inline Int divexact(const Int& a, const Int& b) {
    if (b == 0) throw internal_error("divexact: division by zero");
    if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0)
        throw internal_error("divexact: inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Floor quotient (round toward -infinity), used by normal-form reductions.
inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::size_t binomial_size(unsigned long n, unsigned long k) {
    Int b = binomial(n, k);
    if (!b.fits_ulong_p()) throw error("binomial too large for a size");
    return static_cast<std::size_t>(b.get_ui());
}

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

// Divides by the gcd and flips sign so the first nonzero entry is positive.
// Returns false (and leaves v alone) when v is the zero vector.
inline bool make_primitive(IntVec& v) {
    Int g = vec_gcd(v);
    if (g == 0) return false;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0) g = -g;
        break;
    }
    for (Int& x : v) x = divexact(x, g);
    return true;
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

inline std::string to_string(const IntVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + "]";
}

// Deterministic, platform-independent PRNG. std::mt19937_64 is portable but
// the standard distributions are not, so we draw bounded values ourselves.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, n); modulo bias is irrelevant at our ranges.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace selfdual
