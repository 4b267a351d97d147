#include "tdom/matrix.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

#include "tdom/errors.hpp"

namespace tdom {

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : m_(rows), n_(cols), words_((static_cast<std::size_t>(cols) + 63) / 64) {
    if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be nonnegative");
    bits_.assign(static_cast<std::size_t>(m_) * words_, 0);
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string> rows) {
    return from_rows(std::vector<std::string>(rows));
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    const int m = static_cast<int>(rows.size());
    const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
    BinaryMatrix a(m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw input_error("from_rows: ragged rows");
        for (int j = 0; j < n; ++j) {
            char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') throw input_error("from_rows: entries must be 0 or 1");
            if (c == '1') a.set(i, j, true);
        }
    }
    return a;
}

void BinaryMatrix::check_cell(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= n_) throw input_error("matrix index out of range");
}

bool BinaryMatrix::get(int i, int j) const {
    check_cell(i, j);
    return (bits_[static_cast<std::size_t>(i) * words_ + (static_cast<std::size_t>(j) >> 6)] >> (j & 63)) & 1ULL;
}

void BinaryMatrix::set(int i, int j, bool value) {
    check_cell(i, j);
    std::uint64_t& w = bits_[static_cast<std::size_t>(i) * words_ + (static_cast<std::size_t>(j) >> 6)];
    if (value) w |= 1ULL << (j & 63); else w &= ~(1ULL << (j & 63));
}

void BinaryMatrix::toggle(int i, int j) {
    check_cell(i, j);
    bits_[static_cast<std::size_t>(i) * words_ + (static_cast<std::size_t>(j) >> 6)] ^= 1ULL << (j & 63);
}

std::span<const std::uint64_t> BinaryMatrix::row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_, words_};
}

int BinaryMatrix::row_sum(int i) const {
    int c = 0;
    for (std::uint64_t w : row(i)) c += std::popcount(w);
    return c;
}

int BinaryMatrix::col_sum(int j) const {
    int c = 0;
    for (int i = 0; i < m_; ++i) c += get(i, j);
    return c;
}

long long BinaryMatrix::support_size() const {
    long long c = 0;
    for (int i = 0; i < m_; ++i) c += row_sum(i);
    return c;
}

long long RegionDecomposition::z_size() const {
    long long c = 0;
    for (Region r : cells_) c += (r == Region::Z);
    return c;
}

RegionDecomposition region_decomposition(const BinaryMatrix& a) {
    const int m = a.row_count(), n = a.col_count();
    RegionDecomposition region(m, n);
    // X(i,j): the rectangle [0..i]x[0..j] is all zeroes.
    std::vector<bool> prev(static_cast<std::size_t>(n), true);
    for (int i = 0; i < m; ++i) {
        bool left = true;
        for (int j = 0; j < n; ++j) {
            bool here = !a.get(i, j) && left && prev[static_cast<std::size_t>(j)];
            if (here) region.set(i, j, Region::X);
            left = here;
            prev[static_cast<std::size_t>(j)] = here;
        }
    }
    // Y(i,j): the rectangle [i..m-1]x[j..n-1] is all ones.
    std::fill(prev.begin(), prev.end(), true);
    for (int i = m - 1; i >= 0; --i) {
        bool right = true;
        for (int j = n - 1; j >= 0; --j) {
            bool here = a.get(i, j) && right && prev[static_cast<std::size_t>(j)];
            if (here) region.set(i, j, Region::Y);
            right = here;
            prev[static_cast<std::size_t>(j)] = here;
        }
    }
    return region;
}

int breadth(const BinaryMatrix& a) {
    const int m = a.row_count(), n = a.col_count();
    RegionDecomposition region = region_decomposition(a);
    int best = 0;
    for (int c = -(m - 1); c <= n - 1; ++c) {
        int count = 0;
        for (int i = std::max(0, -c); i < m && i + c < n; ++i)
            if (region.in_z(i, i + c)) ++count;
        best = std::max(best, count);
    }
    return best;
}

bool is_monotone(const BinaryMatrix& a) {
    const int m = a.row_count(), n = a.col_count();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (a.get(i, j)) {
                if (i + 1 < m && !a.get(i + 1, j)) return false;
                if (j + 1 < n && !a.get(i, j + 1)) return false;
            }
    return true;
}

namespace {

int pair_violations(std::span<const std::uint64_t> earlier, std::span<const std::uint64_t> later) {
    int c = 0;
    for (std::size_t w = 0; w < earlier.size(); ++w) c += std::popcount(earlier[w] & ~later[w]);
    return c;
}

BinaryMatrix transpose(const BinaryMatrix& a) {
    BinaryMatrix t(a.col_count(), a.row_count());
    for (int i = 0; i < a.row_count(); ++i)
        for (int j = 0; j < a.col_count(); ++j)
            if (a.get(i, j)) t.set(j, i, true);
    return t;
}

}  // namespace

int min_restriction(const BinaryMatrix& a) {
    int worst = 0;
    for (int i = 0; i < a.row_count(); ++i)
        for (int k = i + 1; k < a.row_count(); ++k)
            worst = std::max(worst, pair_violations(a.row(i), a.row(k)));
    BinaryMatrix t = transpose(a);
    for (int j = 0; j < t.row_count(); ++j)
        for (int k = j + 1; k < t.row_count(); ++k)
            worst = std::max(worst, pair_violations(t.row(j), t.row(k)));
    return worst;
}

bool is_t_restricted(const BinaryMatrix& a, int t) {
    if (t < 0) throw input_error("is_t_restricted: t must be nonnegative");
    return min_restriction(a) <= t;
}

bool is_inclusive(const BinaryMatrix& a) {
    for (int i = 0; i < a.row_count(); ++i)
        for (int k = i + 1; k < a.row_count(); ++k)
            if (pair_violations(a.row(i), a.row(k)) > 0 && pair_violations(a.row(k), a.row(i)) > 0)
                return false;
    return true;
}

SortedMonotone sort_to_monotone(const BinaryMatrix& a) {
    if (!is_inclusive(a)) throw input_error("sort_to_monotone: matrix is not inclusive");
    SortedMonotone out;
    out.row_order.resize(static_cast<std::size_t>(a.row_count()));
    out.col_order.resize(static_cast<std::size_t>(a.col_count()));
    std::iota(out.row_order.begin(), out.row_order.end(), 0);
    std::iota(out.col_order.begin(), out.col_order.end(), 0);
    std::stable_sort(out.row_order.begin(), out.row_order.end(),
                     [&](int x, int y) { return a.row_sum(x) < a.row_sum(y); });
    std::vector<int> colsum(static_cast<std::size_t>(a.col_count()));
    for (int j = 0; j < a.col_count(); ++j) colsum[static_cast<std::size_t>(j)] = a.col_sum(j);
    std::stable_sort(out.col_order.begin(), out.col_order.end(),
                     [&](int x, int y) { return colsum[static_cast<std::size_t>(x)] < colsum[static_cast<std::size_t>(y)]; });
    out.matrix = BinaryMatrix(a.row_count(), a.col_count());
    for (int i = 0; i < a.row_count(); ++i)
        for (int j = 0; j < a.col_count(); ++j)
            if (a.get(out.row_order[static_cast<std::size_t>(i)], out.col_order[static_cast<std::size_t>(j)]))
                out.matrix.set(i, j, true);
    if (!is_monotone(out.matrix))
        throw invariant_error("sort_to_monotone: reordered matrix is not monotone");
    return out;
}

int matrix_local_difference(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.row_count() != b.row_count() || a.col_count() != b.col_count())
        throw input_error("matrix_local_difference: dimensions must match");
    int worst = 0;
    std::vector<int> coldiff(static_cast<std::size_t>(a.col_count()), 0);
    for (int i = 0; i < a.row_count(); ++i) {
        auto ra = a.row(i);
        auto rb = b.row(i);
        int rowdiff = 0;
        for (std::size_t w = 0; w < ra.size(); ++w) {
            std::uint64_t x = ra[w] ^ rb[w];
            rowdiff += std::popcount(x);
            while (x) {
                coldiff[w * 64 + static_cast<std::size_t>(std::countr_zero(x))]++;
                x &= x - 1;
            }
        }
        worst = std::max(worst, rowdiff);
    }
    for (int d : coldiff) worst = std::max(worst, d);
    return worst;
}

PostBeamIndex build_post_beam_index(const BinaryMatrix& a, const RegionDecomposition& region) {
    const int m = a.row_count(), n = a.col_count();
    PostBeamIndex idx;
    idx.post_lo.assign(static_cast<std::size_t>(n), 0);
    idx.post_hi.assign(static_cast<std::size_t>(n), -1);
    idx.post_mult.assign(static_cast<std::size_t>(n), 0);
    idx.beam_lo.assign(static_cast<std::size_t>(m), 0);
    idx.beam_hi.assign(static_cast<std::size_t>(m), -1);
    idx.beam_mult.assign(static_cast<std::size_t>(m), 0);

    // Z meets each line in an interval, because X cells form a prefix and Y
    // cells a suffix of every column and row.
    for (int j = 0; j < n; ++j) {
        int lo = m, hi = -1, count = 0;
        for (int i = 0; i < m; ++i)
            if (region.in_z(i, j)) {
                lo = std::min(lo, i);
                hi = std::max(hi, i);
                ++count;
            }
        if (count > 0 && count != hi - lo + 1)
            throw invariant_error("post is not contiguous");
        idx.post_lo[static_cast<std::size_t>(j)] = lo;
        idx.post_hi[static_cast<std::size_t>(j)] = hi;
    }
    for (int i = 0; i < m; ++i) {
        int lo = n, hi = -1, count = 0;
        for (int j = 0; j < n; ++j)
            if (region.in_z(i, j)) {
                lo = std::min(lo, j);
                hi = std::max(hi, j);
                ++count;
            }
        if (count > 0 && count != hi - lo + 1)
            throw invariant_error("beam is not contiguous");
        idx.beam_lo[static_cast<std::size_t>(i)] = lo;
        idx.beam_hi[static_cast<std::size_t>(i)] = hi;
    }

    // Parallel posts share the same Z interval and the same entries there;
    // group by that key and read multiplicity off the group size.
    using Key = std::tuple<int, int, std::vector<std::uint64_t>>;
    std::map<Key, std::vector<int>> post_groups, beam_groups;
    for (int j = 0; j < n; ++j) {
        int lo = idx.post_lo[static_cast<std::size_t>(j)], hi = idx.post_hi[static_cast<std::size_t>(j)];
        if (hi < lo) continue;
        std::vector<std::uint64_t> entries((static_cast<std::size_t>(hi - lo) + 64) / 64, 0);
        for (int i = lo; i <= hi; ++i)
            if (a.get(i, j)) entries[static_cast<std::size_t>(i - lo) >> 6] |= 1ULL << ((i - lo) & 63);
        post_groups[{lo, hi, std::move(entries)}].push_back(j);
    }
    for (auto& [key, cols] : post_groups)
        for (int j : cols) idx.post_mult[static_cast<std::size_t>(j)] = static_cast<int>(cols.size());
    for (int i = 0; i < m; ++i) {
        int lo = idx.beam_lo[static_cast<std::size_t>(i)], hi = idx.beam_hi[static_cast<std::size_t>(i)];
        if (hi < lo) continue;
        std::vector<std::uint64_t> entries((static_cast<std::size_t>(hi - lo) + 64) / 64, 0);
        for (int j = lo; j <= hi; ++j)
            if (a.get(i, j)) entries[static_cast<std::size_t>(j - lo) >> 6] |= 1ULL << ((j - lo) & 63);
        beam_groups[{lo, hi, std::move(entries)}].push_back(i);
    }
    for (auto& [key, rows] : beam_groups)
        for (int i : rows) idx.beam_mult[static_cast<std::size_t>(i)] = static_cast<int>(rows.size());
    return idx;
}

}  // namespace tdom
