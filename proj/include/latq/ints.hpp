#ifndef LATQ_INTS_HPP
#define LATQ_INTS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latq {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Matrices are stored as a list of columns; column vectors are basis vectors.
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int ipow(long base, unsigned long e) { return ipow(Int(base), e); }

// Euclidean remainder in [0, m), m > 0.
inline Int emod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline long emod(long x, long m) {
    long r = x % m;
    if (r < 0) r += m;
    return r;
}

inline Int igcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int ilcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// g = ua + vb with g = gcd(a, b) >= 0.
inline Int igcdext(const Int& a, const Int& b, Int& u, Int& v) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + x.get_str());
    return x.get_si();
}

inline double to_double(const Rat& x) { return x.get_d(); }

inline std::string to_string(const Int& x) { return x.get_str(); }

// Rationals print as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_integral(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_den() == 1;
}

inline Int numerator(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_num();
}

inline Int denominator(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_den();
}

// Signals that an exact enumeration would exceed the configured cap.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
    long cap = 10'000'000;  // elements enumerable before giving up

    void charge(long amount, const char* what) const {
        if (amount > cap) {
            throw BudgetError(std::string(what) + ": needs " + std::to_string(amount) +
                              " > cap " + std::to_string(cap));
        }
    }
};

}  // namespace latq

#endif
