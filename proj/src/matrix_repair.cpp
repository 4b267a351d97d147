#include <algorithm>
#include <string>
#include <vector>

#include "tdom/errors.hpp"
#include "tdom/matrix.hpp"

namespace tdom {

namespace {

std::vector<bool> grid(int m, int n, bool v = false) {
    return std::vector<bool>(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), v);
}

inline std::size_t cell(int n, int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

}  // namespace

BinaryMatrix breadth_reduce(const BinaryMatrix& a, int t, Verify verify) {
    if (t < 1) throw input_error("breadth_reduce: t must be positive");
    if (!is_t_restricted(a, t)) throw input_error("breadth_reduce: input is not t-restricted");
    const int m = a.row_count(), n = a.col_count();
    if (m == 0 || n == 0) return a;

    // P1/Q1: at least 2t ones strictly above / strictly left.
    // P0/Q0: at least 2t zeroes strictly below / strictly right.
    auto p1q1 = grid(m, n);  // union P1 ∪ Q1
    auto p0q0 = grid(m, n);  // union P0 ∪ Q0
    for (int j = 0; j < n; ++j) {
        int ones_above = 0;
        for (int i = 0; i < m; ++i) {
            if (ones_above >= 2 * t) p1q1[cell(n, i, j)] = true;
            ones_above += a.get(i, j);
        }
        int zeroes_below = 0;
        for (int i = m - 1; i >= 0; --i) {
            if (zeroes_below >= 2 * t) p0q0[cell(n, i, j)] = true;
            zeroes_below += !a.get(i, j);
        }
    }
    for (int i = 0; i < m; ++i) {
        int ones_left = 0;
        for (int j = 0; j < n; ++j) {
            if (ones_left >= 2 * t) p1q1[cell(n, i, j)] = true;
            ones_left += a.get(i, j);
        }
        int zeroes_right = 0;
        for (int j = n - 1; j >= 0; --j) {
            if (zeroes_right >= 2 * t) p0q0[cell(n, i, j)] = true;
            zeroes_right += !a.get(i, j);
        }
    }

    // above_right(i,j): some member of P0 ∪ Q0 at (i0,j0) with i0>=i, j0>=j.
    // below_left(i,j): some member of P1 ∪ Q1 at (i1,j1) with i1<=i, j1<=j.
    auto above_right = grid(m, n);
    for (int i = m - 1; i >= 0; --i)
        for (int j = n - 1; j >= 0; --j)
            above_right[cell(n, i, j)] = p0q0[cell(n, i, j)] ||
                (i + 1 < m && above_right[cell(n, i + 1, j)]) ||
                (j + 1 < n && above_right[cell(n, i, j + 1)]);
    auto below_left = grid(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            below_left[cell(n, i, j)] = p1q1[cell(n, i, j)] ||
                (i > 0 && below_left[cell(n, i - 1, j)]) ||
                (j > 0 && below_left[cell(n, i, j - 1)]);

    RegionDecomposition region = region_decomposition(a);
    BinaryMatrix b = a;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (!region.in_z(i, j)) continue;
            if (!above_right[cell(n, i, j)]) b.set(i, j, true);
            else if (!below_left[cell(n, i, j)]) b.set(i, j, false);
        }

    if (verify != Verify::off) {
        if (!is_t_restricted(b, t))
            throw invariant_error("breadth_reduce: output is not t-restricted");
        if (breadth(b) > 4 * t)
            throw invariant_error("breadth_reduce: output breadth exceeds 4t");
        if (matrix_local_difference(a, b) > 4 * t)
            throw invariant_error("breadth_reduce: local difference exceeds 4t");
    }
    return b;
}

namespace {

// The six rewrite rules for a Z cell, in listed order. Rules 5 and 6 may
// both fire but agree on the value 0; any other overlap is a bug.
struct RuleOutcome {
    int rule = 0;   // 1..6
    bool value = false;
};

RuleOutcome evaluate_rules(const BinaryMatrix& a, const PostBeamIndex& idx, int i, int j, int w,
                           bool cross_check) {
    const int pm = idx.p_minus(i, j), pp = idx.p_plus(i, j);
    const int qm = idx.q_minus(i, j), qp = idx.q_plus(i, j);
    const int post_mult = idx.post_mult[static_cast<std::size_t>(j)];
    const int beam_mult = idx.beam_mult[static_cast<std::size_t>(i)];
    const bool aij = a.get(i, j);

    const bool fire[7] = {
        false,
        pm >= w && qm >= w,
        pp >= w && qp >= w,
        pm < w && pp < w && post_mult >= 2 * w,
        qm < w && qp < w && beam_mult >= 2 * w,
        pm < w && pp < w && post_mult < 2 * w,
        qm < w && qp < w && beam_mult < 2 * w,
    };
    const bool value[7] = {false, true, false, aij, aij, false, false};

    int first = 0;
    for (int r = 1; r <= 6; ++r)
        if (fire[r]) { first = r; break; }
    if (first == 0)
        throw invariant_error("monotone_repair: no rule applies at a Z cell");

    if (cross_check) {
        for (int r = 1; r <= 6; ++r)
            for (int s = r + 1; s <= 6; ++s)
                if (fire[r] && fire[s] && !(r == 5 && s == 6))
                    throw invariant_error("monotone_repair: rules " + std::to_string(r) + " and " +
                                          std::to_string(s) + " both fire");
        for (int r = 1; r <= 6; ++r)
            if (fire[r] && value[r] != value[first])
                throw invariant_error("monotone_repair: conflicting rule values");
    }
    return {first, value[first]};
}

}  // namespace

BinaryMatrix monotone_repair(const BinaryMatrix& a, int t, int w, Verify verify) {
    if (t < 0 || w < 0 || 2 * w < t + 1)
        throw input_error("monotone_repair: requires t,w >= 0 and 2w >= t+1");
    if (!is_t_restricted(a, t)) throw input_error("monotone_repair: input is not t-restricted");
    if (breadth(a) > w) throw input_error("monotone_repair: breadth exceeds w");
    const int m = a.row_count(), n = a.col_count();
    if (m == 0 || n == 0) return a;

    RegionDecomposition region = region_decomposition(a);
    PostBeamIndex idx = build_post_beam_index(a, region);

    BinaryMatrix b = a;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (!region.in_z(i, j)) continue;
            if (verify == Verify::full) {
                // Tail bound: a long tail on one axis forces a short one on
                // the other, else a diagonal of Z cells would exceed w.
                if (std::min(idx.p_minus(i, j), idx.q_plus(i, j)) >= w ||
                    std::min(idx.q_minus(i, j), idx.p_plus(i, j)) >= w)
                    throw invariant_error("monotone_repair: diagonal tail bound fails at a Z cell");
            }
            b.set(i, j, evaluate_rules(a, idx, i, j, w, verify == Verify::full).value);
        }

    if (verify != Verify::off) {
        if (!is_inclusive(b)) throw invariant_error("monotone_repair: output is not inclusive");
        const long long bound = 2LL * (t + w) * w * w * w;
        if (matrix_local_difference(a, b) > bound)
            throw invariant_error("monotone_repair: local difference exceeds 2(t+w)w^3");
    }
    return b;
}

BinaryMatrix repair_matrix(const BinaryMatrix& a, int t, Verify verify) {
    if (t < 0) throw input_error("repair_matrix: t must be nonnegative");
    if (!is_t_restricted(a, t)) throw input_error("repair_matrix: input is not t-restricted");
    if (t == 0) {
        // 0-restricted means monotone; nothing to do.
        if (!is_monotone(a)) throw invariant_error("repair_matrix: 0-restricted input not monotone");
        return a;
    }
    BinaryMatrix reduced = breadth_reduce(a, t, verify);
    BinaryMatrix b = monotone_repair(reduced, t, 4 * t, verify);
    if (verify != Verify::off) {
        const long long tq = static_cast<long long>(t) * t * t * t;
        if (matrix_local_difference(a, b) > 640 * tq + 4 * t)
            throw invariant_error("repair_matrix: local difference exceeds 640t^4 + 4t");
    }
    return b;
}

}  // namespace tdom
