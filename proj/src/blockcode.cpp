#include "mindist/blockcode.hpp"

namespace mindist {

void BlockCode::put_symbol(std::span<uint8_t> x, int block, int sym) const {
    if (cpb == 1) {
        x[block] = static_cast<uint8_t>(sym);
    } else {
        x[2 * block] = static_cast<uint8_t>(sym & 1);
        x[2 * block + 1] = static_cast<uint8_t>((sym >> 1) & 1);
    }
}

int BlockCode::symbol_at(std::span<const uint8_t> x, int block) const {
    if (cpb == 1) return x[block];
    return x[2 * block] + 2 * x[2 * block + 1];
}

int BlockCode::block_weight(std::span<const uint8_t> x) const {
    int w = 0;
    if (cpb == 1) {
        for (int j = 0; j < n; ++j)
            if (x[j]) ++w;
    } else {
        for (int j = 0; j < n; ++j)
            if (x[2 * j] | x[2 * j + 1]) ++w;
    }
    return w;
}

uint8_t BlockCode::check_contribution(int row, int block, int sym) const {
    if (cpb == 1) return f->mul(h.at(row, block), static_cast<uint8_t>(sym));
    uint8_t acc = 0;
    if (sym & 1) acc = f->add(acc, h.at(row, 2 * block));
    if (sym & 2) acc = f->add(acc, h.at(row, 2 * block + 1));
    return acc;
}

std::vector<int> BlockCode::row_block_support(int row) const {
    std::vector<int> supp;
    for (int j = 0; j < n; ++j) {
        bool nz = false;
        for (int c = 0; c < cpb; ++c)
            if (h.at(row, cpb * j + c)) nz = true;
        if (nz) supp.push_back(j);
    }
    return supp;
}

std::vector<uint8_t> BlockCode::to_symbols(std::span<const uint8_t> x) const {
    std::vector<uint8_t> s(n);
    for (int j = 0; j < n; ++j) s[j] = static_cast<uint8_t>(symbol_at(x, j));
    return s;
}

std::vector<uint8_t> BlockCode::to_cols(std::span<const uint8_t> syms) const {
    std::vector<uint8_t> x(ncols(), 0);
    for (int j = 0; j < n; ++j) put_symbol(x, j, syms[j]);
    return x;
}

int BlockCode::h_rank() const {
    if (rank_ < 0) rank_ = rank_of(*f, h);
    return rank_;
}

BlockCode make_block_code(const LinearCode& c) {
    BlockCode b;
    b.f = &Field::get(c.q());
    b.n = c.n();
    b.cpb = 1;
    b.nsym = c.q();
    b.h = c.h().dense_bytes();
    return b;
}

BlockCode make_block_code(const StabilizerCode& s) {
    BlockCode b;
    b.f = &Field::get(2);
    b.n = s.n();
    b.cpb = 2;
    b.nsym = 4;
    b.quantum = true;
    const auto& gens = s.generators();
    b.h = DenseMat(static_cast<int>(gens.size()), 2 * s.n());
    for (size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < s.n(); ++j) {
            // syndrome row = plane-swapped generator, so H x is the trace
            // inner product with g_i
            b.h.at(static_cast<int>(i), 2 * j) = gens[i].v_bit(j) ? 1 : 0;
            b.h.at(static_cast<int>(i), 2 * j + 1) = gens[i].u_bit(j) ? 1 : 0;
        }
    b.avoid.emplace(Field::get(2), s.generator_colvecs());
    return b;
}

BlockCode make_block_code_avoid(const ParityCheckMatrix& h, const ParityCheckMatrix& avoid_rows) {
    if (h.q() != 2 || avoid_rows.q() != 2)
        throw ConfigError("avoid-space block codes are binary");
    BlockCode b;
    b.f = &Field::get(2);
    b.n = h.cols();
    b.cpb = 1;
    b.nsym = 2;
    b.h = h.dense_bytes();
    b.avoid.emplace(Field::get(2), avoid_rows.dense_bytes());
    return b;
}

}  // namespace mindist
