#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mindist/gf.hpp"

namespace mindist {

// Dense byte matrix over a small field. All search inner loops at the scales
// this tool targets fit comfortably in this representation.
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    DenseMat() = default;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t* row(int r) { return a.data() + static_cast<size_t>(r) * cols; }
    const uint8_t* row(int r) const { return a.data() + static_cast<size_t>(r) * cols; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const DenseMat&) const = default;
};

// Result of in-place Gauss-Jordan elimination. Rows are physically permuted
// so pivot rows come first (in pivot order); rows npivots.. are zero on the
// eliminated column set.
struct Elimination {
    std::vector<int> pivot_cols;  // pivot_cols[i] is the column of pivot row i
    std::vector<int> free_cols;   // eliminated columns without a pivot
    int rank = 0;
};

// Reduces M over the columns in `col_order` (full reduction, unit pivots).
// Row operations are mirrored onto *companion when given.
Elimination eliminate(const Field& f, DenseMat& m, std::span<const int> col_order,
                      DenseMat* companion = nullptr);

int rank_of(const Field& f, DenseMat m);

// Basis of {x : M x = 0}, one vector per free column.
std::vector<std::vector<uint8_t>> kernel_basis(const Field& f, DenseMat m);

// Row-space membership tests against a fixed set of spanning vectors.
class SpanMembership {
  public:
    SpanMembership(const Field& f, DenseMat rows);
    int rank() const { return elim_.rank; }
    int cols() const { return rr_.cols; }
    bool contains(std::span<const uint8_t> v) const;

  private:
    const Field* f_;
    DenseMat rr_;
    Elimination elim_;
};

// dst += coef * src (elementwise over the field)
void addmul_row(const Field& f, std::span<uint8_t> dst, std::span<const uint8_t> src,
                uint8_t coef);

// Solves H x = t with the columns in `unknown_cols` free and every other
// column fixed by the caller. Built once per column split and reused across
// many right-hand sides; this is the workhorse behind erasure completion,
// shortening, window re-encoding and covering-set enumeration.
class ErasureSolver {
  public:
    ErasureSolver(const Field& f, const DenseMat& h, std::vector<int> unknown_cols);

    int rank() const { return elim_.rank; }
    int corank() const { return static_cast<int>(elim_.free_cols.size()); }
    const std::vector<int>& unknown_cols() const { return unknown_; }
    const std::vector<int>& free_cols() const { return elim_.free_cols; }

    // R*H with pivot rows first; rows rank().. vanish on the unknown columns.
    const DenseMat& transformed() const { return ht_; }
    int null_row_begin() const { return elim_.rank; }

    // R*t for a syndrome target in original row order.
    std::vector<uint8_t> transform_target(std::span<const uint8_t> t) const;

    // Visits every full-length x with H x = t (t given transformed; empty
    // means zero) agreeing with `known` on the non-unknown columns (sparse
    // nonzero entries; every unlisted known column is zero). The visited span
    // is scratch owned by the solver and valid only during the call.
    // Returns the number of completions visited; *hit_cap is set when
    // `limit` stopped the enumeration early.
    uint64_t for_each_completion(std::span<const std::pair<int, uint8_t>> known,
                                 std::span<const uint8_t> target_t, uint64_t limit,
                                 const std::function<bool(std::span<const uint8_t>)>& visit,
                                 bool* hit_cap = nullptr) const;

  private:
    const Field* f_;
    DenseMat ht_;    // transformed H
    DenseMat rop_;   // accumulated row operations
    DenseMat emat_;  // rank x corank slice of ht_ at (pivot rows, free cols)
    Elimination elim_;
    std::vector<int> unknown_;
    int ncols_ = 0;
    mutable std::vector<uint8_t> scratch_x_, scratch_s_, scratch_p_;
};

}  // namespace mindist
