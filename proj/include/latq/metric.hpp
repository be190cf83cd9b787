#ifndef LATQ_METRIC_HPP
#define LATQ_METRIC_HPP

#include <limits>
#include <stdexcept>
#include <string>

#include "latq/ints.hpp"

namespace latq {

// Selects an L_P norm with integer P >= 1, or the sup norm.
// Distances are exchanged as exact P-th powers (d^P) so no radicals appear;
// for the sup norm the value itself is exact.
struct PNorm {
    bool inf = false;
    unsigned p = 2;

    static PNorm finite(unsigned p) {
        if (p < 1) throw std::invalid_argument("PNorm: p must be >= 1");
        return PNorm{false, p};
    }
    static PNorm sup() { return PNorm{true, 0}; }

    bool operator==(const PNorm& o) const { return inf == o.inf && (inf || p == o.p); }

    std::string name() const { return inf ? "inf" : std::to_string(p); }
};

inline PNorm parse_pnorm(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return PNorm::sup();
    long v = std::stol(s);
    if (v < 1) throw std::invalid_argument("P must be >= 1 or inf");
    return PNorm::finite(static_cast<unsigned>(v));
}

// Lee value of a residue r in [0, m): min(r, m - r).
inline Int lee(const Int& r, const Int& m) {
    Int v = emod(r, m);
    Int w = m - v;
    return v <= w ? v : w;
}

inline long lee(long r, long m) {
    long v = emod(r, m);
    long w = m - v;
    return v <= w ? v : w;
}

// P-Lee norm (as d^P for finite P) of an integer vector folded modulo m.
template <typename Vec>
Int plee_norm(const Vec& coords, const Int& m, const PNorm& P) {
    if (P.inf) {
        Int best = 0;
        for (const auto& c : coords) {
            Int l = lee(Int(c), m);
            if (l > best) best = l;
        }
        return best;
    }
    Int acc = 0;
    for (const auto& c : coords) acc += ipow(lee(Int(c), m), P.p);
    return acc;
}

// Plain L_P norm (d^P for finite P) of an exact vector, no folding.
inline Rat lp_norm_pow(const QVec& x, const PNorm& P) {
    if (P.inf) {
        Rat best = 0;
        for (const auto& c : x) {
            Rat v = c >= 0 ? c : Rat(-c);
            if (v > best) best = v;
        }
        return best;
    }
    Rat acc = 0;
    for (const auto& c : x) {
        Rat v = c >= 0 ? c : Rat(-c);
        Rat term = 1;
        for (unsigned i = 0; i < P.p; ++i) term *= v;
        acc += term;
    }
    return acc;
}

}  // namespace latq

#endif
