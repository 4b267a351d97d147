#include <doctest.h>

#include "tdom/errors.hpp"
#include "tdom/matrix.hpp"
#include "tdom/oracles.hpp"
#include "tdom/rng.hpp"

using namespace tdom;

namespace {

// All 512 3x3 matrices, by support mask.
BinaryMatrix mat3(int mask) {
    BinaryMatrix a(3, 3);
    for (int c = 0; c < 9; ++c)
        if (mask >> c & 1) a.set(c / 3, c % 3, true);
    return a;
}

bool down_closed(const BinaryMatrix& a, const RegionDecomposition& r, Region which) {
    for (int i = 0; i < a.row_count(); ++i)
        for (int j = 0; j < a.col_count(); ++j) {
            if (r.at(i, j) != which) continue;
            if (which == Region::X) {
                if (i > 0 && r.at(i - 1, j) != Region::X) return false;
                if (j > 0 && r.at(i, j - 1) != Region::X) return false;
            } else {
                if (i + 1 < a.row_count() && r.at(i + 1, j) != Region::Y) return false;
                if (j + 1 < a.col_count() && r.at(i, j + 1) != Region::Y) return false;
            }
        }
    return true;
}

BinaryMatrix random_matrix(SplitMix64& rng, int m, int n) {
    BinaryMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.next_bit()) a.set(i, j, true);
    return a;
}

}  // namespace

TEST_CASE("region decomposition on the worked examples") {
    BinaryMatrix diag = BinaryMatrix::from_rows({"10", "01"});
    auto r = region_decomposition(diag);
    CHECK(r.at(0, 0) == Region::Z);
    CHECK(r.at(0, 1) == Region::Z);
    CHECK(r.at(1, 0) == Region::Z);
    CHECK(r.at(1, 1) == Region::Y);

    BinaryMatrix zero(3, 4);
    auto rz = region_decomposition(zero);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) CHECK(rz.at(i, j) == Region::X);

    BinaryMatrix mono = BinaryMatrix::from_rows({"001", "011", "111"});
    CHECK(region_decomposition(mono).z_size() == 0);
}

TEST_CASE("region decomposition properties, exhaustive 3x3") {
    for (int mask = 0; mask < 512; ++mask) {
        BinaryMatrix a = mat3(mask);
        auto r = region_decomposition(a);
        CHECK(down_closed(a, r, Region::X));
        CHECK(down_closed(a, r, Region::Y));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (r.at(i, j) == Region::X) CHECK_FALSE(a.get(i, j));
                if (r.at(i, j) == Region::Y) CHECK(a.get(i, j));
                // Maximality: a cell qualifies exactly when its whole
                // corner rectangle does.
                bool rect_zero = true, rect_one = true;
                for (int p = 0; p <= i; ++p)
                    for (int q = 0; q <= j; ++q) rect_zero &= !a.get(p, q);
                for (int p = i; p < 3; ++p)
                    for (int q = j; q < 3; ++q) rect_one &= a.get(p, q);
                CHECK((r.at(i, j) == Region::X) == rect_zero);
                CHECK((r.at(i, j) == Region::Y) == rect_one);
            }
    }
}

TEST_CASE("breadth on the worked examples") {
    CHECK(breadth(BinaryMatrix::from_rows({"001", "011", "111"})) == 0);
    CHECK(breadth(BinaryMatrix::from_rows({"10", "01"})) == 1);
    // The antidiagonal 2x2: the top-left zero cell is down-closed all by
    // itself, so it lands in X and only three cells remain in Z.
    CHECK(breadth(BinaryMatrix::from_rows({"01", "10"})) == 1);
    CHECK(region_decomposition(BinaryMatrix::from_rows({"01", "10"})).at(0, 0) == Region::X);
}

TEST_CASE("monotone, restriction and breadth coincide at zero, exhaustive 3x3") {
    for (int mask = 0; mask < 512; ++mask) {
        BinaryMatrix a = mat3(mask);
        bool mono = is_monotone(a);
        CHECK(mono == (min_restriction(a) == 0));
        CHECK(mono == (breadth(a) == 0));
        CHECK(is_t_restricted(a, 0) == mono);
    }
}

TEST_CASE("monotone, restriction and breadth coincide at zero, randomized sizes") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        int m = 1 + static_cast<int>(rng.next_below(12));
        int n = 1 + static_cast<int>(rng.next_below(12));
        // Staircases with a few extra flips, so both verdicts occur.
        BinaryMatrix a = gen_t_restricted(m, n, static_cast<int>(rng.next_below(2)), rng.next());
        bool mono = is_monotone(a);
        CHECK(mono == (min_restriction(a) == 0));
        CHECK(mono == (breadth(a) == 0));
    }
}

TEST_CASE("restriction counts") {
    CHECK(min_restriction(BinaryMatrix::from_rows({"001", "011", "111"})) == 0);
    CHECK(min_restriction(BinaryMatrix::from_rows({"10", "01"})) == 1);
    BinaryMatrix row(1, 8);
    for (int j = 0; j < 4; ++j) row.set(0, j, true);
    CHECK(min_restriction(row) == 1);
    CHECK(is_t_restricted(row, 1));
    CHECK_FALSE(is_t_restricted(row, 0));
}

TEST_CASE("inclusive matrices and sorting to monotone") {
    BinaryMatrix mono = BinaryMatrix::from_rows({"011", "111"});
    CHECK(is_inclusive(mono));
    CHECK_FALSE(is_inclusive(BinaryMatrix::from_rows({"01", "10"})));

    BinaryMatrix a = BinaryMatrix::from_rows({"10", "11"});
    CHECK(is_inclusive(a));
    auto sorted = sort_to_monotone(a);
    CHECK(sorted.matrix == BinaryMatrix::from_rows({"01", "11"}));
    CHECK(sorted.row_order == std::vector<int>{0, 1});
    CHECK(sorted.col_order == std::vector<int>{1, 0});

    CHECK_THROWS_AS(sort_to_monotone(BinaryMatrix::from_rows({"01", "10"})), input_error);
}

TEST_CASE("inclusive iff sortable to monotone, exhaustive 3x3") {
    for (int mask = 0; mask < 512; ++mask) {
        BinaryMatrix a = mat3(mask);
        if (is_inclusive(a)) {
            auto sorted = sort_to_monotone(a);
            CHECK(is_monotone(sorted.matrix));
        } else {
            CHECK_THROWS_AS(sort_to_monotone(a), input_error);
        }
    }
}

TEST_CASE("matrix local difference") {
    BinaryMatrix a = BinaryMatrix::from_rows({"10", "01"});
    CHECK(matrix_local_difference(a, a) == 0);
    CHECK(matrix_local_difference(a, BinaryMatrix::from_rows({"00", "01"})) == 1);
    CHECK(matrix_local_difference(BinaryMatrix::from_rows({"11", "00"}),
                                  BinaryMatrix::from_rows({"00", "00"})) == 2);
    CHECK_THROWS_AS(matrix_local_difference(a, BinaryMatrix(2, 3)), input_error);
}

TEST_CASE("matrix local difference is a metric on seeded triples") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        int m = 1 + static_cast<int>(rng.next_below(6));
        int n = 1 + static_cast<int>(rng.next_below(6));
        BinaryMatrix a = random_matrix(rng, m, n);
        BinaryMatrix b = random_matrix(rng, m, n);
        BinaryMatrix c = random_matrix(rng, m, n);
        CHECK(matrix_local_difference(a, b) == matrix_local_difference(b, a));
        CHECK((matrix_local_difference(a, b) == 0) == (a == b));
        CHECK(matrix_local_difference(a, c) <=
              matrix_local_difference(a, b) + matrix_local_difference(b, c));
    }
}

TEST_CASE("degenerate dimensions are monotone, inclusive and 0-restricted") {
    for (auto [m, n] : {std::pair{0, 0}, std::pair{0, 5}, std::pair{5, 0}}) {
        BinaryMatrix a(m, n);
        CHECK(is_monotone(a));
        CHECK(is_inclusive(a));
        CHECK(min_restriction(a) == 0);
        CHECK(breadth(a) == 0);
    }
}

TEST_CASE("bitset row logic matches a naive reference across word boundaries") {
    SplitMix64 rng(97);
    auto naive_restriction = [](const BinaryMatrix& a) {
        int worst = 0;
        for (int i = 0; i < a.row_count(); ++i)
            for (int k = i + 1; k < a.row_count(); ++k) {
                int c = 0;
                for (int j = 0; j < a.col_count(); ++j) c += a.get(i, j) && !a.get(k, j);
                worst = std::max(worst, c);
            }
        for (int j = 0; j < a.col_count(); ++j)
            for (int k = j + 1; k < a.col_count(); ++k) {
                int c = 0;
                for (int i = 0; i < a.row_count(); ++i) c += a.get(i, j) && !a.get(i, k);
                worst = std::max(worst, c);
            }
        return worst;
    };
    for (int cols : {63, 64, 65, 70}) {
        BinaryMatrix a(12, cols), b(12, cols);
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < cols; ++j) {
                if (rng.next_below(4) == 0) a.set(i, j, true);
                if (rng.next_below(4) == 0) b.set(i, j, true);
            }
        CHECK(min_restriction(a) == naive_restriction(a));
        int naive_diff = 0;
        for (int i = 0; i < 12; ++i) {
            int c = 0;
            for (int j = 0; j < cols; ++j) c += a.get(i, j) != b.get(i, j);
            naive_diff = std::max(naive_diff, c);
        }
        for (int j = 0; j < cols; ++j) {
            int c = 0;
            for (int i = 0; i < 12; ++i) c += a.get(i, j) != b.get(i, j);
            naive_diff = std::max(naive_diff, c);
        }
        CHECK(matrix_local_difference(a, b) == naive_diff);
        CHECK(a.row_sum(0) == [&] {
            int c = 0;
            for (int j = 0; j < cols; ++j) c += a.get(0, j);
            return c;
        }());
    }
}

TEST_CASE("post and beam index on the diagonal example") {
    BinaryMatrix a = BinaryMatrix::from_rows({"10", "01"});
    auto region = region_decomposition(a);
    auto idx = build_post_beam_index(a, region);
    // Column 0 holds Z cells in rows 0..1, column 1 only row 0.
    CHECK(idx.post_lo[0] == 0);
    CHECK(idx.post_hi[0] == 1);
    CHECK(idx.post_lo[1] == 0);
    CHECK(idx.post_hi[1] == 0);
    CHECK(idx.post_mult[0] == 1);
    CHECK(idx.post_mult[1] == 1);
    CHECK(idx.beam_mult[0] == 1);
    CHECK(idx.beam_mult[1] == 1);
    CHECK(idx.p_minus(0, 0) == 0);
    CHECK(idx.p_plus(0, 0) == 1);
    CHECK(idx.q_minus(0, 0) == 0);
    CHECK(idx.q_plus(0, 0) == 1);
    CHECK(idx.p_minus(1, 0) == 1);
    CHECK(idx.q_plus(1, 0) == 0);
}

TEST_CASE("parallel posts are counted by multiplicity") {
    // Columns 1 and 2 intersect Z in the same rows with equal entries.
    BinaryMatrix a = BinaryMatrix::from_rows({"1000", "0001"});
    auto region = region_decomposition(a);
    auto idx = build_post_beam_index(a, region);
    CHECK(idx.post_mult[1] == 2);
    CHECK(idx.post_mult[2] == 2);
}
