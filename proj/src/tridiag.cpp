#include "tridiag.hpp"

#include "dedekind.hpp"

#include <algorithm>

namespace tridiag {

using exact::sgn;

namespace {

const Mat2Q kS{0, -1, 1, 0};

Mat2Q gen(const Rat& c) { return Mat2Q{c, -1, 1, 0}; }

}  // namespace

Mat2Q associated_mat2(const Tridiagonal& c) {
    if (c.empty()) throw exact::ValidationError("associated_mat2: need at least one entry");
    Mat2Q acc = kS;
    for (const Rat& ci : c) acc = mul(acc, gen(ci));
    return acc;
}

int signature_recursive(const Tridiagonal& c) {
    // zeta(c_1..c_j) = zeta(c_1..c_{j-1}) - sgn(g_j) sgn(d_j) with
    // (g_j, d_j) the bottom row of A(c_1..c_j); the empty matrix has zeta 0,
    // and the j = 1 step reproduces the sgn(c_1) base case.
    Mat2Q acc = kS;
    int zeta = 0;
    for (const Rat& ci : c) {
        acc = mul(acc, gen(ci));
        zeta -= sgn(acc.a21) * sgn(acc.a22);
    }
    return zeta;
}

int signature_left_peel(const Tridiagonal& c) {
    // Mirror recursion: zeta(c_1..c_l) = zeta(c_2..c_l) - sgn(g) sgn(a) with
    // (a, g) the left column of A(c_1..c_l). Suffix products are built right
    // to left through the prepend identity
    //   A(c_j..c_l) = (-g', -d'; a' + g' c_j, b' + d' c_j)
    // where (a' b'; g' d') = A(c_{j+1}..c_l) and A(empty) = (0 -1; 1 0).
    int zeta = 0;
    Mat2Q acc = kS;
    for (size_t j = c.size(); j-- > 0;) {
        acc = Mat2Q{-acc.a21, -acc.a22, acc.a11 + acc.a21 * c[j], acc.a12 + acc.a22 * c[j]};
        zeta -= sgn(acc.a21) * sgn(acc.a11);
    }
    return zeta;
}

std::vector<std::vector<Rat>> dense_matrix(const Tridiagonal& c) {
    size_t l = c.size();
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l, Rat(0)));
    for (size_t i = 0; i < l; ++i) {
        m[i][i] = c[i];
        if (i + 1 < l) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    return m;
}

int signature_oracle(const std::vector<std::vector<Rat>>& sym) {
    // Exact congruence diagonalization. Nonzero diagonal pivots contribute
    // their sign; a zero-diagonal pair coupled by a nonzero off-diagonal
    // entry is a hyperbolic block contributing 0.
    std::vector<std::vector<Rat>> a = sym;
    std::vector<size_t> live(a.size());
    for (size_t i = 0; i < a.size(); ++i) live[i] = i;
    int sig = 0;
    while (!live.empty()) {
        size_t pi = live.size();
        for (size_t i = 0; i < live.size(); ++i)
            if (a[live[i]][live[i]] != 0) {
                pi = i;
                break;
            }
        if (pi != live.size()) {
            size_t p = live[pi];
            Rat d = a[p][p];
            sig += sgn(d);
            live.erase(live.begin() + pi);
            for (size_t r : live)
                for (size_t col : live) a[r][col] -= a[r][p] * a[p][col] / d;
            continue;
        }
        // All-zero diagonal: find a coupled pair, or stop (zero block).
        size_t bi = live.size(), bj = live.size();
        for (size_t i = 0; i < live.size() && bi == live.size(); ++i)
            for (size_t j = i + 1; j < live.size(); ++j)
                if (a[live[i]][live[j]] != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi == live.size()) break;
        size_t p = live[bi], q = live[bj];
        Rat b = a[p][q];
        live.erase(live.begin() + bj);
        live.erase(live.begin() + bi);
        for (size_t r : live)
            for (size_t col : live)
                a[r][col] -= (a[r][p] * a[q][col] + a[r][q] * a[p][col]) / b;
    }
    return sig;
}

std::vector<std::vector<Rat>> full_inverse(const std::vector<std::vector<Rat>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Rat>> a = m;
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrix();
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

InverseCorners inverse_corners(const Tridiagonal& c) {
    Mat2Q a = associated_mat2(c);
    if (a.a21 == 0) throw SingularMatrix();
    int parity = (c.size() % 2 == 0) ? -1 : 1;  // (-1)^(l+1)
    return {-a.a11 / a.a21, Rat(parity) / a.a21, -a.a22 / a.a21};
}

std::pair<Rat, Rat> kirby_melvin(const std::vector<Int>& c) {
    Tridiagonal cr;
    cr.reserve(c.size());
    Rat trace(0);
    for (const Int& ci : c) {
        cr.push_back(Rat(ci));
        trace += Rat(ci);
    }
    Mat2Q a = associated_mat2(cr);
    Rat lhs = Rat(3 * signature_recursive(cr)) - trace;
    Rat rhs;
    if (a.a21 != 0) {
        // Integer word => integer associated matrix with det 1, so the
        // fraction a/g is already coprime.
        rhs = dedekind::dedekind_symbol_fast(a.a11 / a.a21) - (a.a11 + a.a22) / a.a21;
    } else {
        rhs = -a.a12 / a.a11;
    }
    if (lhs != rhs)
        throw exact::ConsistencyError("kirby_melvin: recursion and bracket disagree");
    return {lhs, rhs};
}

}  // namespace tridiag
