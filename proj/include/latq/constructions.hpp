#ifndef LATQ_CONSTRUCTIONS_HPP
#define LATQ_CONSTRUCTIONS_HPP

#include <set>
#include <vector>

#include "latq/lattice.hpp"
#include "latq/zq.hpp"

namespace latq {

// Stacked level matrix D * base: row j of the lifted generator matrix scaled
// by q^{m(j)}, where m(j) counts the levels whose prefix ends before row j.
// Rows are generator rows (base = H_a for dual chains, G_1 for primal ones).
struct LevelMatrix {
    long q = 0;
    int a = 0;
    int n = 0;
    ChainKind kind = ChainKind::primal;
    std::vector<int> levels;
    std::vector<IVec> base;     // lifted generator rows
    std::vector<int> mult;      // m(j) per row
    std::vector<IVec> stacked;  // q^{m(j)} * base row j

    // Multiplicity for any position j >= 1; positions past the last level
    // boundary get the full exponent a.
    int mult_at(int j) const;

    Int qa() const { return ipow(q, static_cast<unsigned long>(a)); }
};

LevelMatrix stack_matrix(const CodeChain& chain);

// Lambda_A(C) = sigma(C) + m Z^n, canonical basis.
LatticeBasis construct_A(const ZqCode& code);

// Lambda_D through the stacked q^a-ary code equivalence.
LatticeBasis construct_D(const CodeChain& chain);

// Membership in the code-formula set Gamma_Dbar, decided by digit peeling
// through C_a, ..., C_1.
bool dbar_member(const IVec& x, const CodeChain& chain, const Budget& budget = {});

// Gamma_Dbar is a lattice iff the chain is closed under zero-one addition.
bool dbar_is_lattice(const CodeChain& chain, const Budget& budget = {});

// Residues of Gamma_Dbar inside [0, q^a)^n.
std::set<Word> dbar_box(const CodeChain& chain, const Budget& budget = {});

struct DprimeResult {
    LatticeBasis basis;
    bool route2_checked = false;  // congruence-enumeration cross-check ran
};

// Construction D' by two independent routes: (1) the HNF of [H^T | q^a I]
// followed by the scaled dual, and (2) direct enumeration of the congruence
// solutions mod q^a fed through Construction A. Route 2 runs whenever the
// solution count fits the budget and any disagreement throws.
DprimeResult construct_Dprime_checked(const CodeChain& chain, const Budget& budget = {});
LatticeBasis construct_Dprime(const CodeChain& chain, const Budget& budget = {});

// All solutions of H x = 0 mod q^a in [0, q^a)^n, via q-adic digit lifting.
std::vector<Word> dprime_congruence_solutions(const CodeChain& chain, const Budget& budget = {});

// Carries the exact rational q^a H^{-1} when it fails to be integral.
class NonIntegralError : public std::runtime_error {
  public:
    NonIntegralError(std::string what, QMat matrix)
        : std::runtime_error(std::move(what)), matrix(std::move(matrix)) {}
    QMat matrix;
};

// The q^a H^{-1} shortcut generator; requires r_a = n and independent
// generators, throws NonIntegralError when the inverse leaves the integers.
LatticeBasis qahinv_generator(const CodeChain& chain, const Budget& budget = {});

// Construction D applied to the reversed dual chain.
LatticeBasis construct_Dperp(const CodeChain& chain);

// Exact check of Lambda_D' = q^a * dual(Lambda_Dperp).
bool t42_check(const CodeChain& chain, const Budget& budget = {});

}  // namespace latq

#endif
