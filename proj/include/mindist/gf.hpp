#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mindist/errors.hpp"

namespace mindist {

inline constexpr std::array<int, 7> kSupportedFields = {2, 3, 4, 5, 7, 8, 9};

bool field_supported(int q);

// Table-driven arithmetic for GF(q), q in {2,3,4,5,7,8,9}.
//
// Prime-power fields are built from fixed irreducible polynomials so that
// element indices are reproducible everywhere:
//   GF(4) = GF(2)[x]/(x^2 + x + 1)
//   GF(8) = GF(2)[x]/(x^3 + x + 1)
//   GF(9) = GF(3)[x]/(x^2 + 2x + 2)
// An element is indexed by its coefficient digits in base p, lowest degree
// first. For GF(4) this matches the symplectic reading e = u + wv with
// index u + 2v, i.e. 0, 1, w, w̄ are 0, 1, 2, 3.
class Field {
  public:
    static const Field& get(int q);  // ConfigError for unsupported q

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return deg_; }
    const std::string& modulus() const { return modulus_; }  // human-readable

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }
    // GF(4) conjugation swaps w and w̄; identity for every other field so
    // classical code paths can call it unconditionally.
    uint8_t conj(uint8_t a) const { return conj_[a]; }

    const uint8_t* mul_row(uint8_t a) const { return &mul_[static_cast<size_t>(a) * q_]; }
    const uint8_t* add_row(uint8_t a) const { return &add_[static_cast<size_t>(a) * q_]; }

  private:
    explicit Field(int q);
    size_t idx(uint8_t a, uint8_t b) const { return static_cast<size_t>(a) * q_ + b; }

    int q_ = 0, p_ = 0, deg_ = 1;
    std::string modulus_;
    std::vector<uint8_t> add_, mul_, neg_, inv_, conj_;
};

enum class FieldOp { Add, Mul, Inv, Conj };

// Dispatch wrapper used by the CLI and bindings; b is ignored for Inv/Conj.
uint8_t field_arith(int q, uint8_t a, uint8_t b, FieldOp op);

// Length-n GF(4) vector as two bit planes, e = u + wv. Vector addition is
// plane-wise XOR, which is what every inner search loop does.
class QuatVector {
  public:
    QuatVector() = default;
    explicit QuatVector(int n);
    static QuatVector from_symbols(const std::vector<uint8_t>& syms);

    int n() const { return n_; }
    uint8_t get(int j) const;
    void set(int j, uint8_t sym);  // sym = u + 2v
    bool u_bit(int j) const;
    bool v_bit(int j) const;

    QuatVector conj() const;                  // u + w̄v, i.e. (u^v, v)
    void operator^=(const QuatVector& rhs);   // GF(2)-linear vector addition
    bool operator==(const QuatVector& rhs) const;

    int weight() const;  // nonzero symbols
    std::vector<uint8_t> symbols() const;

    const std::vector<uint64_t>& u_words() const { return u_; }
    const std::vector<uint64_t>& v_words() const { return v_; }

  private:
    int n_ = 0;
    std::vector<uint64_t> u_, v_;
};

// GF(2)-valued symplectic pairing; 0 iff the Pauli operators commute.
int trace_inner_product(const QuatVector& e1, const QuatVector& e2);

}  // namespace mindist
