#ifndef LATQ_ZQ_HPP
#define LATQ_ZQ_HPP

#include <optional>
#include <string>
#include <vector>

#include "latq/ints.hpp"
#include "latq/metric.hpp"

namespace latq {

// Codewords are kept as plain machine-word residues; code moduli stay small
// (q or q^a at desk scale) while all lattice arithmetic upstream is bignum.
using Word = std::vector<long>;

// Residue vector over Z_m, coordinates always reduced into [0, m).
struct ZqVector {
    long m = 0;
    Word coords;

    ZqVector() = default;
    ZqVector(long modulus, Word c);

    int length() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    bool operator==(const ZqVector& o) const { return m == o.m && coords == o.coords; }
};

// Linear code over Z_m given by an ordered generator list. Z_m-modules may
// have no basis for composite m, so nothing here assumes independence and
// generators are never canonicalized.
struct ZqCode {
    long m = 0;
    int n = 0;
    std::vector<ZqVector> gens;

    ZqCode() = default;
    ZqCode(long modulus, int length, std::vector<ZqVector> generators);
};

enum class ChainKind { primal, dual };

// Nested chain of q-ary codes described by one ordered generator list plus
// per-level prefix counts.
//   primal: C_l = <g_1..g_{k_l}>, k_1 >= ... >= k_a >= 0 (generator count k_1)
//   dual:   C_l^perp = <h_1..h_{r_l}>, 0 <= r_1 <= ... <= r_a <= n
struct CodeChain {
    long q = 0;
    int n = 0;
    int a = 0;
    ChainKind kind = ChainKind::primal;
    std::vector<ZqVector> gens;
    std::vector<int> levels;

    CodeChain() = default;
    CodeChain(long q, int n, int a, ChainKind kind, std::vector<ZqVector> gens,
              std::vector<int> levels);

    // Code at chain level l (1-based): primal C_l, dual C_l^perp.
    ZqCode level_code(int l) const;

    // The chain actually fed to Construction D. For primal chains this is
    // C_a c ... c C_1 itself; for dual chains the reversed dual chain
    // C_1^perp c ... c C_a^perp with prefix counts r_a, ..., r_1.
    std::vector<ZqCode> descending_codes() const;
};

ZqVector zq_add(const ZqVector& x, const ZqVector& y);
ZqVector zq_scale(long t, const ZqVector& x);

// Integer lift into [0, m)^n.
IVec lift(const ZqVector& v);
ZqVector reduce_mod(const IVec& x, long m);

// Least t >= 1 with t*v = 0; equals lcm_i m / gcd(m, v_i).
long code_order(const ZqVector& v);

// Componentwise carry indicator of addition in Z_q: 1 where the lifted sum
// reaches q, else 0. Satisfies sigma(x+y) = sigma(x)+sigma(y) - q*(x*y).
ZqVector zero_one_add(const ZqVector& x, const ZqVector& y);

// All codewords, deduplicated, in lexicographic order of coordinates.
std::vector<Word> code_enumerate(const ZqCode& code, const Budget& budget = {});

Int code_cardinality(const ZqCode& code, const Budget& budget = {});

// Exact minimum distance over nonzero codewords: d^P for finite P, d for sup.
Int code_min_distance(const ZqCode& code, const PNorm& P, const Budget& budget = {});

// True iff the only Z_m combination of the generators summing to zero is the
// trivial one. Decided by coefficient sweep over the order box.
bool linearly_independent(const std::vector<ZqVector>& gens, long m, const Budget& budget = {});

// Generators of C^perp = {x : x.y = 0 for all y in C}. Computed through the
// lattice identity m * dual(Lambda_A(C)) = Lambda_A(C^perp) rather than by
// kernel computation over the (possibly non-field) ring; defined in
// constructions.cpp. Satisfies |C| * |C^perp| = m^n.
ZqCode dual_code(const ZqCode& code);

struct ClosureWitness {
    ZqVector c1, c2;
    int level = 0;  // the level l whose pair escaped C_{l-1}
};

// Checks c1 * c2 in C_{l-1} for all pairs of C_l, l = 2..a, over the chain's
// descending codes. Returns the first violating pair otherwise.
std::optional<ClosureWitness> chain_closure_witness(const CodeChain& chain,
                                                    const Budget& budget = {});

inline bool chain_closed_zero_one(const CodeChain& chain, const Budget& budget = {}) {
    return !chain_closure_witness(chain, budget).has_value();
}

}  // namespace latq

#endif
