#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

namespace mindist {

// Runs fn(0..count-1) on up to `jobs` threads. Work items must be independent
// and must not touch shared mutable state; results go into per-index slots.
// The first exception thrown by any item is re-thrown on the calling thread.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

// Lexicographic enumeration of w-subsets of {0..n-1}. `idx` holds the current
// subset; returns false when exhausted.
inline bool first_combination(std::vector<int>& idx, int n, int w) {
    if (w > n || w < 0) return false;
    idx.resize(w);
    for (int i = 0; i < w; ++i) idx[i] = i;
    return true;
}
inline bool next_combination(std::vector<int>& idx, int n) {
    int w = static_cast<int>(idx.size());
    if (w == 0) return false;
    int i = w - 1;
    while (i >= 0 && idx[i] == n - w + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

double binomial_d(int n, int k);       // as double, 0 when k out of range
double log2_binomial(int n, int k);    // via lgamma, safe for large n

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace mindist
