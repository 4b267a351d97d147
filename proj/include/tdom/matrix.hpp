#ifndef TDOM_MATRIX_HPP
#define TDOM_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tdom {

// 0/1 matrix with bitset rows. Entries are addressed 0-based.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);
    // Convenience: rows given as strings of '0'/'1', e.g. {"10","01"}.
    static BinaryMatrix from_rows(std::initializer_list<std::string> rows);
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);

    int row_count() const { return m_; }
    int col_count() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool get(int i, int j) const;
    void set(int i, int j, bool value);
    void toggle(int i, int j);

    std::span<const std::uint64_t> row(int i) const;
    int row_sum(int i) const;
    int col_sum(int j) const;
    long long support_size() const;

    bool operator==(const BinaryMatrix& other) const = default;

private:
    void check_cell(int i, int j) const;

    int m_ = 0;
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class Region : std::uint8_t { X, Y, Z };

// Partition of the index grid: X is the maximal down-closed all-zero region,
// Y the maximal up-closed all-one region, Z the rest.
class RegionDecomposition {
public:
    RegionDecomposition() = default;
    RegionDecomposition(int rows, int cols) : m_(rows), n_(cols),
        cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Region::Z) {}

    int row_count() const { return m_; }
    int col_count() const { return n_; }
    Region at(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
    }
    void set(int i, int j, Region r) {
        cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] = r;
    }
    bool in_z(int i, int j) const { return at(i, j) == Region::Z; }
    long long z_size() const;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<Region> cells_;
};

// Per-cell Z offsets and post/beam multiplicities. Posts (column ∩ Z) and
// beams (row ∩ Z) are contiguous, so an interval per column/row suffices:
// p_minus(i,j) = i - post_lo[j], etc. Multiplicity counts identical
// parallel posts (same Z rows, same entries), the post itself included.
struct PostBeamIndex {
    std::vector<int> post_lo, post_hi, post_mult;  // per column; lo > hi when empty
    std::vector<int> beam_lo, beam_hi, beam_mult;  // per row

    int p_minus(int i, int j) const { return i - post_lo[static_cast<std::size_t>(j)]; }
    int p_plus(int i, int j) const { return post_hi[static_cast<std::size_t>(j)] - i; }
    int q_minus(int i, int j) const { return j - beam_lo[static_cast<std::size_t>(i)]; }
    int q_plus(int i, int j) const { return beam_hi[static_cast<std::size_t>(i)] - j; }
};

enum class Verify { off, post, full };

RegionDecomposition region_decomposition(const BinaryMatrix& a);

PostBeamIndex build_post_beam_index(const BinaryMatrix& a, const RegionDecomposition& region);

// Max number of Z cells on any diagonal j = i + c; zero exactly when the
// matrix is monotone.
int breadth(const BinaryMatrix& a);

bool is_monotone(const BinaryMatrix& a);

// Largest count, over ordered row pairs i<i' and column pairs j<j', of
// positions holding 1 in the earlier line and 0 in the later one.
int min_restriction(const BinaryMatrix& a);
bool is_t_restricted(const BinaryMatrix& a, int t);

// Row supports pairwise nested (column nesting follows).
bool is_inclusive(const BinaryMatrix& a);

struct SortedMonotone {
    BinaryMatrix matrix;
    std::vector<int> row_order;  // row_order[k] = original row at new position k
    std::vector<int> col_order;
};

// Reorders rows and columns of an inclusive matrix by ascending support size
// (ties by original index); the result is monotone.
SortedMonotone sort_to_monotone(const BinaryMatrix& a);

// Max over all rows and all columns of the number of differing entries.
int matrix_local_difference(const BinaryMatrix& a, const BinaryMatrix& b);

// Rewrites Z cells so the result is t-restricted with breadth at most 4t,
// within local difference 4t of the input. Requires t >= 1 and a
// t-restricted input.
BinaryMatrix breadth_reduce(const BinaryMatrix& a, int t, Verify verify = Verify::post);

// Six-rule rewrite of Z cells producing an inclusive matrix within local
// difference 2(t+w)w^3. Requires a t-restricted input of breadth at most w,
// with 2w >= t+1.
BinaryMatrix monotone_repair(const BinaryMatrix& a, int t, int w, Verify verify = Verify::post);

// Full matrix repair: breadth reduction then the six-rule rewrite at w = 4t.
// Output is inclusive within local difference 644 t^4 of the input. A
// 0-restricted input is already monotone and is returned unchanged.
BinaryMatrix repair_matrix(const BinaryMatrix& a, int t, Verify verify = Verify::post);

}  // namespace tdom

#endif
