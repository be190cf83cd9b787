#include "latq/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace latq {

namespace {

Rat rat_abs(const Rat& x) { return x >= 0 ? x : Rat(-x); }

Int column_denominator_lcm(const QMat& cols) {
    Int s = 1;
    for (const auto& col : cols)
        for (const auto& e : col) s = ilcm(s, denominator(e));
    return s;
}

}  // namespace

LatticeBasis::LatticeBasis(int n_, QMat cols_, std::optional<std::pair<long, int>> period_)
    : n(n_), cols(std::move(cols_)), period(period_) {
    if (n < 1) throw std::invalid_argument("LatticeBasis: dimension must be positive");
    if (static_cast<int>(cols.size()) != n)
        throw std::invalid_argument("LatticeBasis: need n columns");
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != n)
            throw std::invalid_argument("LatticeBasis: column length mismatch");
}

LatticeBasis basis_from_int_columns(const IMat& cols,
                                    std::optional<std::pair<long, int>> period) {
    return LatticeBasis(static_cast<int>(cols.size()), to_rational(cols), period);
}

LatticeBasis identity_basis(int n) {
    QMat cols(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) cols[i][i] = 1;
    return LatticeBasis(n, std::move(cols));
}

LatticeBasis scale_basis(const Rat& c, const LatticeBasis& b) {
    if (c == 0) throw std::invalid_argument("scale_basis: zero scale");
    QMat cols = b.cols;
    for (auto& col : cols)
        for (auto& e : col) e *= c;
    return LatticeBasis(b.n, std::move(cols));
}

IMat hnf_columns(const IMat& input, int n) {
    IMat work = input;
    for (const auto& col : work)
        if (static_cast<int>(col.size()) != n)
            throw std::invalid_argument("hnf_columns: column length mismatch");

    IMat pivots;
    pivots.reserve(n);
    for (int row = 0; row < n; ++row) {
        // Invariant: every column left in `work` is zero above `row`.
        size_t p = work.size();
        for (size_t j = 0; j < work.size(); ++j) {
            if (work[j][row] != 0) {
                p = j;
                break;
            }
        }
        if (p == work.size()) throw std::invalid_argument("hnf_columns: rank deficient input");
        for (size_t j = p + 1; j < work.size(); ++j) {
            if (work[j][row] == 0) continue;
            Int u, v;
            Int g = igcdext(work[p][row], work[j][row], u, v);
            Int ap = work[p][row] / g, aj = work[j][row] / g;
            for (int i = row; i < n; ++i) {
                Int np = u * work[p][i] + v * work[j][i];
                Int nj = ap * work[j][i] - aj * work[p][i];
                work[p][i] = np;
                work[j][i] = nj;
            }
        }
        IVec pivot = work[p];
        work.erase(work.begin() + static_cast<long>(p));
        if (pivot[row] < 0)
            for (auto& e : pivot) e = -e;
        // Reduce row entries of the already placed columns into [0, diagonal).
        for (auto& prev : pivots) {
            Int k; // floor division so the remainder lands in [0, pivot[row])
            mpz_fdiv_q(k.get_mpz_t(), prev[row].get_mpz_t(), pivot[row].get_mpz_t());
            if (k != 0)
                for (int i = row; i < n; ++i) prev[i] -= k * pivot[i];
        }
        pivots.push_back(std::move(pivot));
    }
    return pivots;
}

LatticeBasis hnf_of_columns(const QMat& cols, int n,
                            std::optional<std::pair<long, int>> period) {
    Int s = column_denominator_lcm(cols);
    IMat icols;
    icols.reserve(cols.size());
    for (const auto& col : cols) {
        IVec c;
        c.reserve(col.size());
        for (const auto& e : col) {
            Rat scaled = e * Rat(s);
            c.push_back(numerator(scaled));
        }
        icols.push_back(std::move(c));
    }
    IMat h = hnf_columns(icols, n);
    QMat out;
    out.reserve(h.size());
    for (const auto& col : h) {
        QVec c;
        c.reserve(col.size());
        for (const auto& e : col) {
            Rat r(e);
            r /= Rat(s);
            c.push_back(r);
        }
        out.push_back(std::move(c));
    }
    return LatticeBasis(n, std::move(out), period);
}

LatticeBasis hnf(const LatticeBasis& b) { return hnf_of_columns(b.cols, b.n, b.period); }

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.n != b.n) return false;
    return hnf(a).cols == hnf(b).cols;
}

Rat determinant(const QMat& m) {
    const int n = static_cast<int>(m.size());
    QMat a = m;  // column-major; elimination works on columns
    Rat det = 1;
    for (int row = 0; row < n; ++row) {
        int p = -1;
        for (int j = row; j < n; ++j) {
            if (a[j][row] != 0) {
                p = j;
                break;
            }
        }
        if (p < 0) return Rat(0);
        if (p != row) {
            std::swap(a[p], a[row]);
            det = -det;
        }
        det *= a[row][row];
        for (int j = row + 1; j < n; ++j) {
            if (a[j][row] == 0) continue;
            Rat f = a[j][row] / a[row][row];
            for (int i = row; i < n; ++i) a[j][i] -= f * a[row][i];
        }
    }
    return det;
}

Rat volume(const LatticeBasis& b) {
    Rat d = determinant(b.cols);
    if (d == 0) throw std::invalid_argument("volume: basis is singular");
    return rat_abs(d);
}

QMat transpose(const QMat& m) {
    const int cols = static_cast<int>(m.size());
    const int rows = cols ? static_cast<int>(m[0].size()) : 0;
    QMat out(rows, QVec(cols));
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) out[i][j] = m[j][i];
    return out;
}

QMat matmul(const QMat& a, const QMat& b) {
    const int n = static_cast<int>(a[0].size());
    QMat out;
    out.reserve(b.size());
    for (const auto& col : b) {
        QVec c(n, Rat(0));
        for (size_t k = 0; k < a.size(); ++k)
            for (int i = 0; i < n; ++i) c[i] += a[k][i] * col[k];
        out.push_back(std::move(c));
    }
    return out;
}

QVec matvec(const QMat& m, const QVec& x) {
    const int n = static_cast<int>(m[0].size());
    QVec out(n, Rat(0));
    for (size_t j = 0; j < m.size(); ++j)
        for (int i = 0; i < n; ++i) out[i] += m[j][i] * x[j];
    return out;
}

QMat inverse(const QMat& m) {
    const int n = static_cast<int>(m.size());
    // Gauss-Jordan on [M | I], column-major.
    QMat a = m;
    QMat inv;
    {
        QMat id(n, QVec(n, Rat(0)));
        for (int i = 0; i < n; ++i) id[i][i] = 1;
        inv = id;
    }
    for (int row = 0; row < n; ++row) {
        int p = -1;
        for (int j = row; j < n; ++j) {
            if (a[j][row] != 0) {
                p = j;
                break;
            }
        }
        if (p < 0) throw std::invalid_argument("inverse: singular matrix");
        if (p != row) {
            std::swap(a[p], a[row]);
            std::swap(inv[p], inv[row]);
        }
        Rat piv = a[row][row];
        for (int i = 0; i < n; ++i) {
            a[row][i] /= piv;
            inv[row][i] /= piv;
        }
        for (int j = 0; j < n; ++j) {
            if (j == row || a[j][row] == 0) continue;
            Rat f = a[j][row];
            for (int i = 0; i < n; ++i) {
                a[j][i] -= f * a[row][i];
                inv[j][i] -= f * inv[row][i];
            }
        }
    }
    return inv;
}

QMat to_rational(const IMat& m) {
    QMat out;
    out.reserve(m.size());
    for (const auto& col : m) {
        QVec c;
        c.reserve(col.size());
        for (const auto& e : col) c.emplace_back(e);
        out.push_back(std::move(c));
    }
    return out;
}

LatticeBasis dual_basis(const LatticeBasis& b) {
    QMat mt = transpose(b.cols);
    return LatticeBasis(b.n, inverse(mt));
}

bool member(const QVec& x, const LatticeBasis& b) {
    QVec y = matvec(inverse(b.cols), x);
    return std::all_of(y.begin(), y.end(), [](const Rat& e) { return is_integral(e); });
}

bool member(const IVec& x, const LatticeBasis& b) {
    QVec q;
    q.reserve(x.size());
    for (const auto& e : x) q.emplace_back(e);
    return member(q, b);
}

Int exponent_modulus(const LatticeBasis& b) {
    QMat inv = inverse(b.cols);
    Int m = 1;
    for (const auto& col : inv)
        for (const auto& e : col) m = ilcm(m, denominator(e));
    return m;
}

namespace {

// Exact min of d^P over the nonzero residues of an integer lattice with
// m Z^n inside it, folded against m; m itself enters as the zero-class term.
Rat coset_min_distance(const IMat& h, const Int& m, const PNorm& P, const Budget& budget) {
    const int n = static_cast<int>(h.size());
    Int total = 1;
    for (int j = 0; j < n; ++j) {
        total *= m / h[j][j];
        if (total > budget.cap)
            throw BudgetError("min_distance: residue enumeration exceeds cap");
    }
    Int best = P.inf ? m : ipow(m, P.p);
    IVec value(n, Int(0));
    // Depth-first sweep over HNF coefficients c_j in [0, m / d_j).
    auto descend = [&](auto&& self, int j) -> void {
        if (j == n) {
            bool zero = std::all_of(value.begin(), value.end(),
                                    [](const Int& v) { return v == 0; });
            if (!zero) {
                Int norm = plee_norm(value, m, P);
                if (norm < best) best = norm;
            }
            return;
        }
        Int reps = m / h[j][j];
        IVec saved = value;
        for (Int c = 0; c < reps; ++c) {
            self(self, j + 1);
            for (int i = 0; i < n; ++i) value[i] = emod(value[i] + h[j][i], m);
        }
        value = saved;
    };
    descend(descend, 0);
    return Rat(best);
}

Rat box_min_distance(const LatticeBasis& b, const PNorm& P, const Budget& budget) {
    const int n = b.n;
    // Any minimizer satisfies ||x||_P <= shortest basis column, so its sup
    // norm is bounded by that too.
    Rat bound_pow;
    bool first = true;
    for (const auto& col : b.cols) {
        Rat v = lp_norm_pow(col, P);
        if (first || v < bound_pow) {
            bound_pow = v;
            first = false;
        }
    }
    double bd = to_double(bound_pow);
    long radius = P.inf ? static_cast<long>(std::floor(bd + 1e-9))
                        : static_cast<long>(std::floor(std::pow(bd, 1.0 / P.p) + 1e-9));
    if (radius < 1) radius = 1;
    double points = std::pow(2.0 * radius + 1.0, n);
    if (points > static_cast<double>(budget.cap))
        throw BudgetError("min_distance: box search exceeds cap");

    QMat inv = inverse(b.cols);
    Rat best = bound_pow;
    std::vector<long> x(n, -radius);
    while (true) {
        bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
        if (!zero) {
            QVec xr;
            xr.reserve(n);
            for (long v : x) xr.emplace_back(v);
            Rat np = lp_norm_pow(xr, P);
            if (np < best && np > 0) {
                QVec y = matvec(inv, xr);
                bool integral = std::all_of(y.begin(), y.end(),
                                            [](const Rat& e) { return is_integral(e); });
                if (integral) best = np;
            }
        }
        int pos = 0;
        while (pos < n && ++x[pos] > radius) x[pos++] = -radius;
        if (pos == n) break;
    }
    return best;
}

}  // namespace

Rat min_distance_pow(const LatticeBasis& b, const PNorm& P, const Budget& budget) {
    // Scale rational bases to an integer lattice, compute there, scale back.
    Int s = column_denominator_lcm(b.cols);
    LatticeBasis scaled = s == 1 ? b : scale_basis(Rat(s), LatticeBasis(b.n, b.cols));
    LatticeBasis canon = hnf(scaled);

    Int m;
    if (b.period && s == 1) {
        m = ipow(b.period->first, static_cast<unsigned long>(b.period->second));
    } else {
        m = exponent_modulus(canon);
    }

    IMat h;
    h.reserve(canon.cols.size());
    for (const auto& col : canon.cols) {
        IVec c;
        c.reserve(col.size());
        for (const auto& e : col) c.push_back(numerator(e));
        h.push_back(std::move(c));
    }

    Rat result;
    try {
        result = coset_min_distance(h, m, P, budget);
    } catch (const BudgetError&) {
        result = box_min_distance(scaled, P, budget);
    }
    if (s != 1) {
        Rat scale_pow = P.inf ? Rat(s) : Rat(ipow(s, P.p));
        result /= scale_pow;
    }
    return result;
}

GainStats gain_stats(const LatticeBasis& b, const Budget& budget) {
    GainStats g;
    g.d2_squared = min_distance_pow(b, PNorm::finite(2), budget);
    g.volume = volume(b);
    double vol = to_double(g.volume);
    g.gamma = to_double(g.d2_squared) / std::pow(vol, 2.0 / b.n);
    g.delta = std::pow(g.gamma, b.n / 2.0) / std::pow(2.0, b.n);
    return g;
}

}  // namespace latq
