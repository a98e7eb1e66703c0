#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mindist/gf.hpp"
#include "mindist/linalg.hpp"

namespace mindist {

// Packed dense mirror of a parity-check matrix: one machine word per 64
// columns per bit plane, plane p holding bit p of the element index
// (2 planes for GF(4), ceil(log2 q) otherwise).
struct PackedMatrix {
    int rows = 0, cols = 0, planes = 0, words = 0;
    std::vector<uint64_t> bits;  // [row][plane][word]

    uint8_t get(int r, int c) const;
    const uint64_t* plane(int r, int p) const {
        return bits.data() + (static_cast<size_t>(r) * planes + p) * words;
    }
};

// r x n parity-check matrix over GF(q): sparse rows of (column, coefficient)
// with strictly increasing columns, plus a packed dense view built on demand.
class ParityCheckMatrix {
  public:
    ParityCheckMatrix() = default;
    ParityCheckMatrix(int q, int rows, int cols);
    static ParityCheckMatrix from_dense(int q, const DenseMat& m);

    int q() const { return q_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, uint8_t v);  // v nonzero; keeps columns sorted
    uint8_t at(int r, int c) const;
    const std::vector<std::pair<int, uint8_t>>& row_entries(int r) const { return rows_sp_[r]; }
    int row_weight(int r) const { return static_cast<int>(rows_sp_[r].size()); }
    int col_weight(int c) const;
    int max_row_weight() const;
    int max_col_weight() const;

    DenseMat dense_bytes() const;
    const PackedMatrix& packed() const;  // cached
    bool packed_agrees() const;          // sparse and dense views agree entrywise

    bool operator==(const ParityCheckMatrix& rhs) const {
        return q_ == rhs.q_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && rows_sp_ == rhs.rows_sp_;
    }

  private:
    int q_ = 2, rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<int, uint8_t>>> rows_sp_;
    mutable std::optional<PackedMatrix> packed_;
};

// q-ary length-n vector with weight/support accessors.
struct Codeword {
    int q = 2;
    std::vector<uint8_t> entries;

    Codeword() = default;
    Codeword(int q_, std::vector<uint8_t> e) : q(q_), entries(std::move(e)) {}

    int n() const { return static_cast<int>(entries.size()); }
    int weight() const;
    std::vector<int> support() const;
};

class LinearCode {
  public:
    LinearCode() = default;
    explicit LinearCode(ParityCheckMatrix h);

    const ParityCheckMatrix& h() const { return h_; }
    int q() const { return h_.q(); }
    int n() const { return h_.cols(); }
    int rank() const { return rank_; }
    int dim() const { return h_.cols() - rank_; }

  private:
    ParityCheckMatrix h_;
    int rank_ = 0;
};

std::vector<uint8_t> syndrome(const ParityCheckMatrix& h, const Codeword& c);

// Gauss-Jordan form of the submatrix of H on column set J. The reduced matrix
// has rows permuted pivots-first: the |J|-b pivot columns are unit columns,
// the b dependent columns carry arbitrary entries in the pivot rows, and all
// columns vanish on the pivot-free rows at the bottom. b = dim of the
// shortened code on J.
struct GaussElimResult {
    DenseMat reduced;             // rows x |J|
    int rank = 0;
    int corank = 0;               // b
    std::vector<int> pivot_cols;  // indices into J, per pivot row
    std::vector<int> dependent_cols;
};
GaussElimResult gaussian_eliminate(const ParityCheckMatrix& h, std::span<const int> j);
GaussElimResult gaussian_eliminate(const ParityCheckMatrix& h);  // all columns

// Shortened code C_J = { c_J : c in C, c zero outside J }.
LinearCode shorten(const LinearCode& c, std::span<const int> j);

struct CompletionList {
    std::vector<Codeword> words;
    bool truncated = false;
};
// All codewords agreeing with `values` on positions I (empty when the
// constraints are inconsistent). Output capped at `limit` completions.
CompletionList erasure_complete(const LinearCode& c, std::span<const int> i,
                                std::span<const uint8_t> values, uint64_t limit = 1ull << 20);

// n-qubit stabilizer code given by stabilizer generators over GF(4).
// Internally everything linear-algebraic runs on the binary symplectic form
// of length 2n; the GF(4) view is presentation. Redundant (dependent)
// generator lists are accepted: all rows are kept as checks, while k is
// computed from the symplectic rank.
class StabilizerCode {
  public:
    StabilizerCode() = default;
    explicit StabilizerCode(std::vector<QuatVector> generators);

    int n() const { return n_; }
    int k() const { return n_ - rank_; }
    int rank() const { return rank_; }
    const std::vector<QuatVector>& generators() const { return gens_; }

    // generator j as a length-2n column vector (u bits at 2i, v bits at 2i+1)
    DenseMat generator_colvecs() const;
    // membership test for the stabilizer span C
    const SpanMembership& stabilizer_span() const;
    // basis of the symplectic dual C^perp (cached); vectors are length-2n
    const std::vector<std::vector<uint8_t>>& dual_basis() const;

  private:
    int n_ = 0, rank_ = 0;
    std::vector<QuatVector> gens_;
    mutable std::optional<SpanMembership> span_;
    mutable std::optional<std::vector<std::vector<uint8_t>>> dual_;
};

// CSS code: binary X/Z parity-check halves with Gx Gz^T = 0.
struct CssCode {
    ParityCheckMatrix gx, gz;
    int n() const { return gx.cols(); }
};

StabilizerCode css_to_stabilizer(const CssCode& css);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;   // each names the offending pair
    std::vector<std::string> notes;    // non-fatal observations
};
ValidationReport validate_stabilizer(const StabilizerCode& s);
ValidationReport validate_css(const CssCode& css);

// True iff c is a logical (distance-relevant) vector, i.e. nonzero and not in
// the stabilizer span. The caller guarantees c is in C^perp.
bool quantum_weight_filter(const QuatVector& c, const StabilizerCode& s);

}  // namespace mindist
