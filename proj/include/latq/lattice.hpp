#ifndef LATQ_LATTICE_HPP
#define LATQ_LATTICE_HPP

#include <optional>
#include <utility>

#include "latq/ints.hpp"
#include "latq/metric.hpp"

namespace latq {

// Full rank lattice given by basis columns. `period` records (q, a) when
// q^a Z^n is known to lie inside the lattice, which the coset distance
// enumeration exploits.
struct LatticeBasis {
    int n = 0;
    QMat cols;
    std::optional<std::pair<long, int>> period;

    LatticeBasis() = default;
    LatticeBasis(int n, QMat cols, std::optional<std::pair<long, int>> period = std::nullopt);
};

LatticeBasis basis_from_int_columns(const IMat& cols,
                                    std::optional<std::pair<long, int>> period = std::nullopt);
LatticeBasis identity_basis(int n);
LatticeBasis scale_basis(const Rat& c, const LatticeBasis& b);

// Canonical column Hermite Normal Form of an integer column span: lower
// triangular, positive diagonal, entries left of each diagonal reduced into
// [0, diagonal). Input may carry more than n columns; the span must be full
// rank. Two inputs generate the same lattice iff their forms are equal.
IMat hnf_columns(const IMat& cols, int n);

// Canonical form of a (possibly rational) basis; scales to integer columns,
// reduces, and scales back.
LatticeBasis hnf(const LatticeBasis& b);
LatticeBasis hnf_of_columns(const QMat& cols, int n,
                            std::optional<std::pair<long, int>> period = std::nullopt);

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);

// |det M| by exact fraction-free elimination.
Rat volume(const LatticeBasis& b);

// (M^T)^{-1}: generator matrix of the dual lattice.
LatticeBasis dual_basis(const LatticeBasis& b);

// True iff M^{-1} x is integral.
bool member(const QVec& x, const LatticeBasis& b);
bool member(const IVec& x, const LatticeBasis& b);

// Smallest m >= 1 with m Z^n contained in the (integer) lattice.
Int exponent_modulus(const LatticeBasis& b);

// Exact minimum distance, returned as d^P for finite P and d for the sup
// norm. Periodic lattices are handled by folding residues modulo the period;
// otherwise a bounded box search seeded by the shortest basis column runs.
Rat min_distance_pow(const LatticeBasis& b, const PNorm& P, const Budget& budget = {});

struct GainStats {
    Rat d2_squared;
    Rat volume;
    double gamma = 0.0;  // d2^2 / vol^{2/n}
    double delta = 0.0;  // gamma^{n/2} / 2^n
};

GainStats gain_stats(const LatticeBasis& b, const Budget& budget = {});

// Dense exact linear algebra helpers (column-major, small n).
QMat transpose(const QMat& m);
QMat matmul(const QMat& a, const QMat& b);
QVec matvec(const QMat& m, const QVec& x);
QMat inverse(const QMat& m);
Rat determinant(const QMat& m);
QMat to_rational(const IMat& m);

}  // namespace latq

#endif
