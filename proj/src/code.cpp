#include "mindist/code.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace mindist {

uint8_t PackedMatrix::get(int r, int c) const {
    uint8_t v = 0;
    for (int p = 0; p < planes; ++p)
        v |= static_cast<uint8_t>(((plane(r, p)[c >> 6] >> (c & 63)) & 1) << p);
    return v;
}

ParityCheckMatrix::ParityCheckMatrix(int q, int rows, int cols)
    : q_(q), rows_(rows), cols_(cols), rows_sp_(rows) {
    Field::get(q);  // validates q
}

ParityCheckMatrix ParityCheckMatrix::from_dense(int q, const DenseMat& m) {
    ParityCheckMatrix h(q, m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c)) h.set(r, c, m.at(r, c));
    return h;
}

void ParityCheckMatrix::set(int r, int c, uint8_t v) {
    auto& row = rows_sp_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
    packed_.reset();
}

uint8_t ParityCheckMatrix::at(int r, int c) const {
    const auto& row = rows_sp_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : 0;
}

int ParityCheckMatrix::col_weight(int c) const {
    int w = 0;
    for (int r = 0; r < rows_; ++r)
        if (at(r, c)) ++w;
    return w;
}

int ParityCheckMatrix::max_row_weight() const {
    int w = 0;
    for (int r = 0; r < rows_; ++r) w = std::max(w, row_weight(r));
    return w;
}

int ParityCheckMatrix::max_col_weight() const {
    std::vector<int> w(cols_, 0);
    for (int r = 0; r < rows_; ++r)
        for (auto [c, v] : rows_sp_[r]) ++w[c];
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

DenseMat ParityCheckMatrix::dense_bytes() const {
    DenseMat m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (auto [c, v] : rows_sp_[r]) m.at(r, c) = v;
    return m;
}

const PackedMatrix& ParityCheckMatrix::packed() const {
    if (!packed_) {
        PackedMatrix p;
        p.rows = rows_;
        p.cols = cols_;
        p.planes = (q_ == 4) ? 2 : std::bit_width(static_cast<unsigned>(q_ - 1));
        p.words = (cols_ + 63) / 64;
        p.bits.assign(static_cast<size_t>(p.rows) * p.planes * p.words, 0);
        for (int r = 0; r < rows_; ++r)
            for (auto [c, v] : rows_sp_[r])
                for (int pl = 0; pl < p.planes; ++pl)
                    if ((v >> pl) & 1) {
                        uint64_t* w = p.bits.data() +
                                      (static_cast<size_t>(r) * p.planes + pl) * p.words;
                        w[c >> 6] |= 1ull << (c & 63);
                    }
        packed_ = std::move(p);
    }
    return *packed_;
}

bool ParityCheckMatrix::packed_agrees() const {
    const PackedMatrix& p = packed();
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (p.get(r, c) != at(r, c)) return false;
    return true;
}

int Codeword::weight() const {
    int w = 0;
    for (uint8_t e : entries)
        if (e) ++w;
    return w;
}

std::vector<int> Codeword::support() const {
    std::vector<int> s;
    for (int j = 0; j < n(); ++j)
        if (entries[j]) s.push_back(j);
    return s;
}

LinearCode::LinearCode(ParityCheckMatrix h) : h_(std::move(h)) {
    rank_ = rank_of(Field::get(h_.q()), h_.dense_bytes());
}

std::vector<uint8_t> syndrome(const ParityCheckMatrix& h, const Codeword& c) {
    if (c.n() != h.cols() || c.q != h.q())
        throw std::domain_error("syndrome: dimension or field mismatch");
    const Field& f = Field::get(h.q());
    std::vector<uint8_t> s(h.rows(), 0);
    if (h.q() == 2) {
        // packed fast path
        const PackedMatrix& p = h.packed();
        std::vector<uint64_t> cw(p.words, 0);
        for (int j = 0; j < c.n(); ++j)
            if (c.entries[j]) cw[j >> 6] |= 1ull << (j & 63);
        for (int r = 0; r < h.rows(); ++r) {
            uint64_t acc = 0;
            const uint64_t* row = p.plane(r, 0);
            for (int w = 0; w < p.words; ++w) acc ^= row[w] & cw[w];
            s[r] = static_cast<uint8_t>(std::popcount(acc) & 1);
        }
        return s;
    }
    for (int r = 0; r < h.rows(); ++r) {
        uint8_t acc = 0;
        for (auto [col, v] : h.row_entries(r))
            if (c.entries[col]) acc = f.add(acc, f.mul(v, c.entries[col]));
        s[r] = acc;
    }
    return s;
}

GaussElimResult gaussian_eliminate(const ParityCheckMatrix& h, std::span<const int> j) {
    const Field& f = Field::get(h.q());
    DenseMat sub(h.rows(), static_cast<int>(j.size()));
    for (int r = 0; r < h.rows(); ++r)
        for (int c = 0; c < static_cast<int>(j.size()); ++c) sub.at(r, c) = h.at(r, j[c]);
    std::vector<int> order(j.size());
    for (size_t i = 0; i < j.size(); ++i) order[i] = static_cast<int>(i);
    Elimination e = eliminate(f, sub, order);
    GaussElimResult out;
    out.rank = e.rank;
    out.corank = static_cast<int>(j.size()) - e.rank;
    out.pivot_cols = e.pivot_cols;
    out.dependent_cols = e.free_cols;
    out.reduced = std::move(sub);
    return out;
}

GaussElimResult gaussian_eliminate(const ParityCheckMatrix& h) {
    std::vector<int> all(h.cols());
    for (int i = 0; i < h.cols(); ++i) all[i] = i;
    return gaussian_eliminate(h, all);
}

LinearCode shorten(const LinearCode& c, std::span<const int> j) {
    ParityCheckMatrix hj(c.q(), c.h().rows(), static_cast<int>(j.size()));
    for (int r = 0; r < c.h().rows(); ++r)
        for (int col = 0; col < static_cast<int>(j.size()); ++col) {
            uint8_t v = c.h().at(r, j[col]);
            if (v) hj.set(r, col, v);
        }
    return LinearCode(hj);
}

CompletionList erasure_complete(const LinearCode& c, std::span<const int> i,
                                std::span<const uint8_t> values, uint64_t limit) {
    const Field& f = Field::get(c.q());
    const int n = c.n();
    std::vector<bool> is_known(n, false);
    for (int pos : i) is_known[pos] = true;
    std::vector<int> unknown;
    for (int col = 0; col < n; ++col)
        if (!is_known[col]) unknown.push_back(col);

    ErasureSolver solver(f, c.h().dense_bytes(), unknown);
    std::vector<std::pair<int, uint8_t>> known;
    for (size_t t = 0; t < i.size(); ++t)
        if (values[t]) known.push_back({i[t], values[t]});

    CompletionList out;
    bool cap = false;
    solver.for_each_completion(known, {}, limit,
                               [&](std::span<const uint8_t> x) {
                                   out.words.emplace_back(
                                       c.q(), std::vector<uint8_t>(x.begin(), x.end()));
                                   return true;
                               },
                               &cap);
    out.truncated = cap;
    return out;
}

StabilizerCode::StabilizerCode(std::vector<QuatVector> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw ValidationError("stabilizer code needs at least one generator");
    n_ = gens_[0].n();
    for (const auto& g : gens_)
        if (g.n() != n_) throw ValidationError("stabilizer generators have unequal lengths");
    rank_ = rank_of(Field::get(2), generator_colvecs());
    if (rank_ > n_) throw ValidationError("stabilizer rank exceeds qubit count");
}

DenseMat StabilizerCode::generator_colvecs() const {
    DenseMat m(static_cast<int>(gens_.size()), 2 * n_);
    for (size_t i = 0; i < gens_.size(); ++i)
        for (int j = 0; j < n_; ++j) {
            m.at(static_cast<int>(i), 2 * j) = gens_[i].u_bit(j) ? 1 : 0;
            m.at(static_cast<int>(i), 2 * j + 1) = gens_[i].v_bit(j) ? 1 : 0;
        }
    return m;
}

const SpanMembership& StabilizerCode::stabilizer_span() const {
    if (!span_) span_.emplace(Field::get(2), generator_colvecs());
    return *span_;
}

const std::vector<std::vector<uint8_t>>& StabilizerCode::dual_basis() const {
    if (!dual_) {
        // checks: tip(g_i, x) = 0, i.e. rows with u/v planes swapped
        DenseMat checks(static_cast<int>(gens_.size()), 2 * n_);
        for (size_t i = 0; i < gens_.size(); ++i)
            for (int j = 0; j < n_; ++j) {
                checks.at(static_cast<int>(i), 2 * j) = gens_[i].v_bit(j) ? 1 : 0;
                checks.at(static_cast<int>(i), 2 * j + 1) = gens_[i].u_bit(j) ? 1 : 0;
            }
        dual_ = kernel_basis(Field::get(2), checks);
    }
    return *dual_;
}

StabilizerCode css_to_stabilizer(const CssCode& css) {
    if (css.gx.q() != 2 || css.gz.q() != 2)
        throw ValidationError("CSS halves must be binary");
    if (css.gx.cols() != css.gz.cols())
        throw ValidationError("CSS halves have unequal lengths");
    std::vector<QuatVector> gens;
    const int n = css.gx.cols();
    for (int r = 0; r < css.gx.rows(); ++r) {
        QuatVector g(n);
        for (auto [c, v] : css.gx.row_entries(r)) {
            (void)v;
            g.set(c, 2);  // X -> w
        }
        gens.push_back(g);
    }
    for (int r = 0; r < css.gz.rows(); ++r) {
        QuatVector g(n);
        for (auto [c, v] : css.gz.row_entries(r)) {
            (void)v;
            g.set(c, 1);  // Z -> 1
        }
        gens.push_back(g);
    }
    return StabilizerCode(std::move(gens));
}

ValidationReport validate_stabilizer(const StabilizerCode& s) {
    ValidationReport rep;
    const auto& g = s.generators();
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (trace_inner_product(g[i], g[j]) != 0) {
                rep.ok = false;
                rep.issues.push_back("generators " + std::to_string(i) + " and " +
                                     std::to_string(j) + " anticommute");
            }
    if (s.rank() < static_cast<int>(g.size()))
        rep.notes.push_back("generator list is redundant (rank " + std::to_string(s.rank()) +
                            " of " + std::to_string(g.size()) + " rows)");
    return rep;
}

ValidationReport validate_css(const CssCode& css) {
    ValidationReport rep;
    const Field& f2 = Field::get(2);
    for (int i = 0; i < css.gx.rows(); ++i)
        for (int j = 0; j < css.gz.rows(); ++j) {
            uint8_t acc = 0;
            for (auto [c, v] : css.gx.row_entries(i)) {
                (void)v;
                if (css.gz.at(j, c)) acc = f2.add(acc, 1);
            }
            if (acc) {
                rep.ok = false;
                rep.issues.push_back("Gx row " + std::to_string(i) + " and Gz row " +
                                     std::to_string(j) + " overlap oddly (Gx Gz^T != 0)");
            }
        }
    return rep;
}

bool quantum_weight_filter(const QuatVector& c, const StabilizerCode& s) {
    if (c.weight() == 0) return false;
    std::vector<uint8_t> colvec(2 * s.n(), 0);
    for (int j = 0; j < s.n(); ++j) {
        colvec[2 * j] = c.u_bit(j) ? 1 : 0;
        colvec[2 * j + 1] = c.v_bit(j) ? 1 : 0;
    }
    return !s.stabilizer_span().contains(colvec);
}

}  // namespace mindist
