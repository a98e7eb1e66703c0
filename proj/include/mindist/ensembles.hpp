#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mindist/code.hpp"

namespace mindist {

// Counter-free 64-bit generator with a fixed, documented algorithm so that
// sampled codes are bit-identical across platforms and languages:
// splitmix64 (Steele/Lea/Flood finalizer over a Weyl sequence).
inline constexpr const char* kRngId = "splitmix64-v1";

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : s_(seed) {}
    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Unbiased via rejection of the top partial range.
    uint64_t bounded(uint64_t n);

  private:
    uint64_t s_;
};

enum class EnsembleKind { A, B, RandomLinear, RandomStabilizer };
EnsembleKind ensemble_kind_from_name(const std::string& name);
std::string ensemble_kind_name(EnsembleKind k);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::A;
    int n = 0;
    int l = 0;  // column weight (A/B)
    int m = 0;  // row weight (A/B)
    int k = 0;  // dimension (random kinds)
    int q = 2;
    uint64_t seed = 0;
};

struct SampleOutput {
    EnsembleSpec spec;
    std::optional<LinearCode> code;
    std::optional<StabilizerCode> stab;
};

// Deterministic in (spec, seed). Kind A uses the configuration model (l stubs
// per column, m per row, uniform matching) with whole-sample rejection of
// parallel edges, retry budget 1000. Kind B stacks l independently
// column-permuted copies of [I I ... I]. Nonzero coefficients for q > 2 are
// uniform on GF(q)\{0}. random-stabilizer grows a symplectically
// self-orthogonal basis by sampling uniformly from the running dual
// complement and rejecting dependent picks.
SampleOutput sample_ensemble(const EnsembleSpec& spec);

}  // namespace mindist
