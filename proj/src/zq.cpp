#include "latq/zq.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latq {

namespace {

void check_same_shape(const ZqVector& x, const ZqVector& y, const char* op) {
    if (x.m != y.m) throw std::invalid_argument(std::string(op) + ": modulus mismatch");
    if (x.coords.size() != y.coords.size())
        throw std::invalid_argument(std::string(op) + ": length mismatch");
}

}  // namespace

ZqVector::ZqVector(long modulus, Word c) : m(modulus), coords(std::move(c)) {
    if (m < 1) throw std::invalid_argument("ZqVector: modulus must be positive");
    for (auto& v : coords) v = emod(v, m);
}

bool ZqVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long v) { return v == 0; });
}

ZqCode::ZqCode(long modulus, int length, std::vector<ZqVector> generators)
    : m(modulus), n(length), gens(std::move(generators)) {
    if (m < 1) throw std::invalid_argument("ZqCode: modulus must be positive");
    if (n < 1) throw std::invalid_argument("ZqCode: length must be positive");
    for (const auto& g : gens) {
        if (g.m != m || g.length() != n)
            throw std::invalid_argument("ZqCode: generator shape mismatch");
    }
}

CodeChain::CodeChain(long q_, int n_, int a_, ChainKind kind_, std::vector<ZqVector> gens_,
                     std::vector<int> levels_)
    : q(q_), n(n_), a(a_), kind(kind_), gens(std::move(gens_)), levels(std::move(levels_)) {
    if (q < 2) throw std::invalid_argument("CodeChain: q must be >= 2");
    if (n < 1) throw std::invalid_argument("CodeChain: n must be >= 1");
    if (a < 1) throw std::invalid_argument("CodeChain: a must be >= 1");
    if (static_cast<int>(levels.size()) != a)
        throw std::invalid_argument("CodeChain: levels list must have length a");
    for (const auto& g : gens) {
        if (g.m != q || g.length() != n)
            throw std::invalid_argument("CodeChain: generator shape mismatch");
    }
    const int count = static_cast<int>(gens.size());
    if (kind == ChainKind::primal) {
        for (int i = 0; i + 1 < a; ++i) {
            if (levels[i] < levels[i + 1])
                throw std::invalid_argument("CodeChain: primal levels must be non-increasing");
        }
        if (levels.back() < 0) throw std::invalid_argument("CodeChain: negative level");
        if (levels.front() != count)
            throw std::invalid_argument("CodeChain: primal needs k_1 generators");
    } else {
        for (int i = 0; i + 1 < a; ++i) {
            if (levels[i] > levels[i + 1])
                throw std::invalid_argument("CodeChain: dual levels must be non-decreasing");
        }
        if (levels.front() < 0) throw std::invalid_argument("CodeChain: negative level");
        if (levels.back() > n)
            throw std::invalid_argument("CodeChain: dual needs r_a <= n");
        if (levels.back() != count)
            throw std::invalid_argument("CodeChain: dual needs r_a generators");
    }
}

ZqCode CodeChain::level_code(int l) const {
    if (l < 1 || l > a) throw std::invalid_argument("CodeChain: level out of range");
    std::vector<ZqVector> prefix(gens.begin(), gens.begin() + levels[l - 1]);
    return ZqCode(q, n, std::move(prefix));
}

std::vector<ZqCode> CodeChain::descending_codes() const {
    std::vector<ZqCode> out;
    out.reserve(a);
    if (kind == ChainKind::primal) {
        for (int l = 1; l <= a; ++l) out.push_back(level_code(l));
    } else {
        for (int l = a; l >= 1; --l) out.push_back(level_code(l));
    }
    return out;
}

ZqVector zq_add(const ZqVector& x, const ZqVector& y) {
    check_same_shape(x, y, "zq_add");
    Word out(x.coords.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = emod(x.coords[i] + y.coords[i], x.m);
    return ZqVector(x.m, std::move(out));
}

ZqVector zq_scale(long t, const ZqVector& x) {
    Word out(x.coords.size());
    long tm = emod(t, x.m);
    for (size_t i = 0; i < out.size(); ++i) out[i] = emod(tm * x.coords[i], x.m);
    return ZqVector(x.m, std::move(out));
}

IVec lift(const ZqVector& v) {
    IVec out;
    out.reserve(v.coords.size());
    for (long c : v.coords) out.emplace_back(c);
    return out;
}

ZqVector reduce_mod(const IVec& x, long m) {
    Word out;
    out.reserve(x.size());
    for (const auto& c : x) out.push_back(to_long(emod(c, Int(m))));
    return ZqVector(m, std::move(out));
}

long code_order(const ZqVector& v) {
    long ord = 1;
    for (long c : v.coords) ord = std::lcm(ord, v.m / std::gcd(v.m, c));
    return ord;
}

ZqVector zero_one_add(const ZqVector& x, const ZqVector& y) {
    check_same_shape(x, y, "zero_one_add");
    Word out(x.coords.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = (x.coords[i] + y.coords[i] >= x.m) ? 1 : 0;
    return ZqVector(x.m, std::move(out));
}

std::vector<Word> code_enumerate(const ZqCode& code, const Budget& budget) {
    // Incremental closure: sweep each generator's multiples over the current
    // set. Coefficients only need to run below the generator's order.
    std::set<Word> words;
    words.insert(Word(code.n, 0));
    for (const auto& g : code.gens) {
        long ord = code_order(g);
        std::vector<Word> base(words.begin(), words.end());
        for (long t = 1; t < ord; ++t) {
            ZqVector tg = zq_scale(t, g);
            for (const auto& w : base) {
                Word sum(code.n);
                for (int i = 0; i < code.n; ++i) sum[i] = emod(w[i] + tg.coords[i], code.m);
                words.insert(std::move(sum));
                if (static_cast<long>(words.size()) > budget.cap)
                    throw BudgetError("code_enumerate: cardinality exceeds cap " +
                                      std::to_string(budget.cap));
            }
        }
    }
    return std::vector<Word>(words.begin(), words.end());
}

Int code_cardinality(const ZqCode& code, const Budget& budget) {
    return Int(static_cast<long>(code_enumerate(code, budget).size()));
}

Int code_min_distance(const ZqCode& code, const PNorm& P, const Budget& budget) {
    auto words = code_enumerate(code, budget);
    bool found = false;
    Int best = 0;
    for (const auto& w : words) {
        if (std::all_of(w.begin(), w.end(), [](long v) { return v == 0; })) continue;
        Int norm = plee_norm(w, Int(code.m), P);
        if (!found || norm < best) {
            best = norm;
            found = true;
        }
    }
    if (!found) throw std::domain_error("code_min_distance: zero code has no distance");
    return best;
}

bool linearly_independent(const std::vector<ZqVector>& gens, long m, const Budget& budget) {
    if (gens.empty()) return true;
    const int n = gens.front().length();
    // Sweep coefficients alpha_i in [0, order(g_i)); any alpha with
    // order(g_i) | alpha contributes the zero vector already.
    std::vector<long> ord(gens.size());
    long total = 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].m != m || gens[i].length() != n)
            throw std::invalid_argument("linearly_independent: shape mismatch");
        ord[i] = code_order(gens[i]);
        if (ord[i] < m) return false;  // alpha_i = ord[i] != 0 kills g_i alone
        if (total > budget.cap / m)
            throw BudgetError("linearly_independent: coefficient sweep exceeds cap");
        total *= m;
    }
    std::vector<long> alpha(gens.size(), 0);
    Word acc(n, 0);
    // Odometer sweep maintaining the running combination.
    while (true) {
        size_t pos = 0;
        while (pos < gens.size()) {
            ++alpha[pos];
            for (int i = 0; i < n; ++i)
                acc[i] = emod(acc[i] + gens[pos].coords[i], m);
            if (alpha[pos] < m) break;
            alpha[pos] = 0;  // acc already wrapped around: ord*g = 0
            ++pos;
        }
        if (pos == gens.size()) break;  // full wrap: back at all-zero
        if (std::all_of(acc.begin(), acc.end(), [](long v) { return v == 0; })) return false;
    }
    return true;
}

std::optional<ClosureWitness> chain_closure_witness(const CodeChain& chain,
                                                    const Budget& budget) {
    auto codes = chain.descending_codes();  // C_1 >= C_2 >= ... >= C_a
    std::vector<std::vector<Word>> words(codes.size());
    for (size_t i = 0; i < codes.size(); ++i) words[i] = code_enumerate(codes[i], budget);
    for (int l = 2; l <= chain.a; ++l) {
        const auto& inner = words[l - 1];
        const long pairs = static_cast<long>(inner.size()) * static_cast<long>(inner.size());
        budget.charge(pairs, "chain_closure_witness");
        std::set<Word> parent(words[l - 2].begin(), words[l - 2].end());
        for (const auto& w1 : inner) {
            for (const auto& w2 : inner) {
                ZqVector prod = zero_one_add(ZqVector(chain.q, w1), ZqVector(chain.q, w2));
                if (!parent.count(prod.coords)) {
                    return ClosureWitness{ZqVector(chain.q, w1), ZqVector(chain.q, w2), l};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace latq
