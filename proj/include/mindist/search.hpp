#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mindist/blockcode.hpp"
#include "mindist/code.hpp"

namespace mindist {

enum class Algo { Brute, SW, MB, PB, CS, IC };
Algo algo_from_name(const std::string& name);  // brute|sw|mb|pb|cs|ic
std::string algo_name(Algo a);

struct SearchBudget {
    int max_weight = 0;                     // 0 -> block length
    uint64_t max_candidates = 1ull << 26;   // per work unit, and brute-force refusal bound
    double wall_clock_s = 0.0;              // 0 -> unlimited (caps break reproducibility)
    uint64_t seed = 0;                      // randomized CS subset draws
    int jobs = 1;
    int window = 0;       // SW/PB window length override (blocks)
    int rho = 0;          // CS subset size override (blocks)
    int corank_cap = 0;   // CS: skip sets with larger co-rank; 0 -> default
    uint64_t completion_limit = 1ull << 20;  // erasure-completion cap per candidate
};

// `distance` is set when a witness was found (then it is an upper bound, and
// the exact distance when `exact`). `lower_bound` is always valid:
// the code has no nonzero accepted word lighter than it.
struct SearchResult {
    std::optional<int> distance;
    int lower_bound = 1;
    bool exact = false;
    std::vector<uint8_t> witness;  // per-block symbols; empty if none found
    uint64_t trials = 0;
    bool truncated = false;
    std::vector<std::string> notes;
};

// All engines honor an optional syndrome target (original row order): they
// then search for the lightest x with H x = syndrome (coset leader) instead
// of the lightest nonzero codeword, and the stabilizer logical filter is not
// applied. Results are independent of budget.jobs.
//
// trials counts elementary candidates examined: enumerated span elements
// (brute), attempted completions (SW/PB), half-window vectors (MB/PB),
// kernel combinations (CS), extension attempts (IC).
SearchResult brute_force_distance(const BlockCode& code, const SearchBudget& budget,
                                  const std::vector<uint8_t>* syndrome = nullptr);
SearchResult sw_distance(const BlockCode& code, const SearchBudget& budget,
                         const std::vector<uint8_t>* syndrome = nullptr);
SearchResult mb_distance(const BlockCode& code, const SearchBudget& budget,
                         const std::vector<uint8_t>* syndrome = nullptr);
SearchResult pb_distance(const BlockCode& code, const SearchBudget& budget,
                         const std::vector<uint8_t>* syndrome = nullptr);
SearchResult cs_distance(const BlockCode& code, const SearchBudget& budget,
                         const std::vector<uint8_t>* syndrome = nullptr);
SearchResult ic_distance(const BlockCode& code, const SearchBudget& budget);

SearchResult run_search(Algo a, const BlockCode& code, const SearchBudget& budget,
                        const std::vector<uint8_t>* syndrome = nullptr);

// Convenience entry points on the user-facing code types.
SearchResult classical_distance(const LinearCode& c, Algo a, const SearchBudget& budget,
                                const std::vector<uint8_t>* syndrome = nullptr);
SearchResult stabilizer_distance(const StabilizerCode& s, Algo a, const SearchBudget& budget,
                                 const std::vector<uint8_t>* syndrome = nullptr);
// X side: lightest c with Gz c = 0 outside rowspace(Gx); Z side symmetric.
SearchResult css_side_distance(const CssCode& css, char side, Algo a, const SearchBudget& budget);
SearchResult css_distance(const CssCode& css, Algo a, const SearchBudget& budget);

// Covering-set trial count T(n, rho, d) = C(n,d)/C(rho,d).
double coverage_count(int n, int rho, int d);

// Irreducible-cluster enumeration: every codeword of block weight <= max_weight
// that is not a sum of two nonzero codewords with disjoint supports, one
// representative per scalar-multiple class (stabilizer lists keep every
// additive-code element that is irreducible, including stabilizer members).
struct IrreducibleList {
    std::vector<std::vector<uint8_t>> codewords;  // per-block symbols
    uint64_t trials = 0;
    bool truncated = false;
};
IrreducibleList ic_irreducible_list(const BlockCode& code, int max_weight,
                                    const SearchBudget& budget);

// Definition check by shortened-code enumeration on the support.
bool is_irreducible(const BlockCode& code, std::span<const uint8_t> symbols);

// Lexicographically smallest scalar multiple, used to deduplicate collinear
// codewords.
std::vector<uint8_t> canonical_scalar_key(const BlockCode& code,
                                          std::span<const uint8_t> symbols);

// q-ary strings of length v whose every non-empty subset sum is nonzero.
struct AiStringSet {
    int q = 0, v = 0;
    std::vector<std::vector<uint8_t>> strings;
    uint64_t a_v = 0;  // strings.size()
    uint64_t n_v = 0;  // a_v / (q-1)
};
AiStringSet enumerate_ai_strings(int q, int v);

}  // namespace mindist
