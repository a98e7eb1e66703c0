#include "mindist/gf.hpp"

#include <algorithm>
#include <bit>

namespace mindist {

bool field_supported(int q) {
    for (int s : kSupportedFields)
        if (s == q) return true;
    return false;
}

namespace {

struct FieldDef {
    int q, p, deg;
    // modulus digits in base p, lowest degree first, length deg (the monic
    // leading coefficient is implicit): x^deg = -(c0 + c1 x + ...)
    std::array<int, 3> c;
    const char* text;
};

const FieldDef* find_def(int q) {
    static const FieldDef defs[] = {
        {2, 2, 1, {0, 0, 0}, ""},
        {3, 3, 1, {0, 0, 0}, ""},
        {4, 2, 2, {1, 1, 0}, "x^2+x+1"},
        {5, 5, 1, {0, 0, 0}, ""},
        {7, 7, 1, {0, 0, 0}, ""},
        {8, 2, 3, {1, 1, 0}, "x^3+x+1"},
        {9, 3, 2, {2, 2, 0}, "x^2+2x+2"},
    };
    for (const auto& d : defs)
        if (d.q == q) return &d;
    return nullptr;
}

void to_digits(int v, int p, int deg, int* out) {
    for (int i = 0; i < deg; ++i) {
        out[i] = v % p;
        v /= p;
    }
}

int from_digits(const int* d, int p, int deg) {
    int v = 0;
    for (int i = deg - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

}  // namespace

Field::Field(int q) {
    const FieldDef* def = find_def(q);
    if (!def) throw ConfigError("unsupported field order q=" + std::to_string(q));
    q_ = q;
    p_ = def->p;
    deg_ = def->deg;
    modulus_ = def->text;

    add_.assign(static_cast<size_t>(q) * q, 0);
    mul_.assign(static_cast<size_t>(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    conj_.assign(q, 0);

    int da[3], db[3], prod[6];
    for (int a = 0; a < q; ++a) {
        to_digits(a, p_, deg_, da);
        for (int b = 0; b < q; ++b) {
            to_digits(b, p_, deg_, db);
            int sum[3];
            for (int i = 0; i < deg_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[idx(a, b)] = static_cast<uint8_t>(from_digits(sum, p_, deg_));

            // polynomial product, reduced by x^deg = -(c0 + c1 x + ...)
            std::fill(prod, prod + 2 * deg_, 0);
            for (int i = 0; i < deg_; ++i)
                for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int i = 2 * deg_ - 2; i >= deg_; --i) {
                int coef = prod[i];
                if (coef == 0) continue;
                prod[i] = 0;
                for (int j = 0; j < deg_; ++j) {
                    int red = (p_ - def->c[j]) % p_;  // x^deg -> -c_j x^j
                    prod[i - deg_ + j] = (prod[i - deg_ + j] + coef * red) % p_;
                }
            }
            mul_[idx(a, b)] = static_cast<uint8_t>(from_digits(prod, p_, deg_));
        }
    }
    for (int a = 0; a < q; ++a) {
        to_digits(a, p_, deg_, da);
        int nd[3];
        for (int i = 0; i < deg_; ++i) nd[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<uint8_t>(from_digits(nd, p_, deg_));
        conj_[a] = static_cast<uint8_t>(a);
        for (int b = 1; b < q && a != 0; ++b)
            if (mul_[idx(a, b)] == 1) inv_[a] = static_cast<uint8_t>(b);
    }
    if (q == 4) {  // swap w and w̄
        conj_[2] = 3;
        conj_[3] = 2;
    }
}

const Field& Field::get(int q) {
    static const Field f2(2), f3(3), f4(4), f5(5), f7(7), f8(8), f9(9);
    switch (q) {
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        case 5: return f5;
        case 7: return f7;
        case 8: return f8;
        case 9: return f9;
        default: throw ConfigError("unsupported field order q=" + std::to_string(q));
    }
}

uint8_t field_arith(int q, uint8_t a, uint8_t b, FieldOp op) {
    const Field& f = Field::get(q);
    if (a >= q || (op == FieldOp::Add || op == FieldOp::Mul ? b >= q : false))
        throw std::domain_error("field element out of range");
    switch (op) {
        case FieldOp::Add: return f.add(a, b);
        case FieldOp::Mul: return f.mul(a, b);
        case FieldOp::Inv: return f.inv(a);
        case FieldOp::Conj: return f.conj(a);
    }
    throw std::domain_error("bad field op");
}

QuatVector::QuatVector(int n) : n_(n), u_((n + 63) / 64, 0), v_((n + 63) / 64, 0) {}

QuatVector QuatVector::from_symbols(const std::vector<uint8_t>& syms) {
    QuatVector q(static_cast<int>(syms.size()));
    for (size_t j = 0; j < syms.size(); ++j) q.set(static_cast<int>(j), syms[j]);
    return q;
}

uint8_t QuatVector::get(int j) const {
    int u = static_cast<int>((u_[j >> 6] >> (j & 63)) & 1);
    int v = static_cast<int>((v_[j >> 6] >> (j & 63)) & 1);
    return static_cast<uint8_t>(u + 2 * v);
}

void QuatVector::set(int j, uint8_t sym) {
    uint64_t mask = 1ull << (j & 63);
    if (sym & 1)
        u_[j >> 6] |= mask;
    else
        u_[j >> 6] &= ~mask;
    if (sym & 2)
        v_[j >> 6] |= mask;
    else
        v_[j >> 6] &= ~mask;
}

bool QuatVector::u_bit(int j) const { return (u_[j >> 6] >> (j & 63)) & 1; }
bool QuatVector::v_bit(int j) const { return (v_[j >> 6] >> (j & 63)) & 1; }

QuatVector QuatVector::conj() const {
    QuatVector c(*this);
    for (size_t w = 0; w < u_.size(); ++w) c.u_[w] ^= v_[w];
    return c;
}

void QuatVector::operator^=(const QuatVector& rhs) {
    if (rhs.n_ != n_) throw std::domain_error("quaternary vector length mismatch");
    for (size_t w = 0; w < u_.size(); ++w) {
        u_[w] ^= rhs.u_[w];
        v_[w] ^= rhs.v_[w];
    }
}

bool QuatVector::operator==(const QuatVector& rhs) const {
    return n_ == rhs.n_ && u_ == rhs.u_ && v_ == rhs.v_;
}

int QuatVector::weight() const {
    int w = 0;
    for (size_t i = 0; i < u_.size(); ++i) w += std::popcount(u_[i] | v_[i]);
    return w;
}

std::vector<uint8_t> QuatVector::symbols() const {
    std::vector<uint8_t> s(n_);
    for (int j = 0; j < n_; ++j) s[j] = get(j);
    return s;
}

int trace_inner_product(const QuatVector& e1, const QuatVector& e2) {
    if (e1.n() != e2.n()) throw std::domain_error("trace inner product length mismatch");
    uint64_t acc = 0;
    const auto &u1 = e1.u_words(), &v1 = e1.v_words();
    const auto &u2 = e2.u_words(), &v2 = e2.v_words();
    for (size_t w = 0; w < u1.size(); ++w) acc ^= (u1[w] & v2[w]) ^ (v1[w] & u2[w]);
    return std::popcount(acc) & 1;
}

}  // namespace mindist
