#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mindist/code.hpp"
#include "mindist/linalg.hpp"

namespace mindist {

// Uniform search-engine view of a code. A candidate vector is a symbol per
// block; each block maps to cpb columns of the scalar check matrix H over the
// base field. Classical q-ary codes have one column per block and symbols are
// field elements. Stabilizer codes have base field GF(2), two columns per
// block (the symplectic u/v bits of a GF(4) symbol) and H rows are the
// plane-swapped generators, so H*x is the vector of trace inner products.
// Weight always means the number of nonzero blocks.
struct BlockCode {
    const Field* f = nullptr;  // base scalar field
    int n = 0;                 // blocks
    int cpb = 1;               // columns per block
    int nsym = 2;              // block alphabet size (q, or 4 for stabilizer)
    DenseMat h;                // checks: rows x (n*cpb)
    std::optional<SpanMembership> avoid;  // accepted vectors must lie outside
    bool quantum = false;                 // presentation hint (Pauli output)

    int ncols() const { return n * cpb; }
    int rows() const { return h.rows; }

    void put_symbol(std::span<uint8_t> x, int block, int sym) const;
    int symbol_at(std::span<const uint8_t> x, int block) const;
    int block_weight(std::span<const uint8_t> x) const;
    bool accepted(std::span<const uint8_t> x) const {
        return !avoid || !avoid->contains(x);
    }

    // sum over the block's columns of h(row, col) * colval(sym)
    uint8_t check_contribution(int row, int block, int sym) const;
    std::vector<int> row_block_support(int row) const;

    std::vector<uint8_t> to_symbols(std::span<const uint8_t> x) const;  // per block
    std::vector<uint8_t> to_cols(std::span<const uint8_t> syms) const;

    // rank of H (cached on first use by the engines via make_* helpers)
    int h_rank() const;

  private:
    mutable int rank_ = -1;
};

BlockCode make_block_code(const LinearCode& c);
BlockCode make_block_code(const StabilizerCode& s);
// Binary code ker(H) with codewords in rowspace(avoid_rows) rejected; used
// for the X/Z sides of CSS codes.
BlockCode make_block_code_avoid(const ParityCheckMatrix& h, const ParityCheckMatrix& avoid_rows);

}  // namespace mindist
