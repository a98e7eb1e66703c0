#include "mindist/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mindist/util.hpp"

namespace mindist {

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&] {
            int i;
            while ((i = next.fetch_add(1)) < count) {
                if (failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

double binomial_d(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double log2_binomial(int n, int k) {
    if (k < 0 || k > n) return -1e300;
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
           std::log(2.0);
}

void addmul_row(const Field& f, std::span<uint8_t> dst, std::span<const uint8_t> src,
                uint8_t coef) {
    if (coef == 0) return;
    const uint8_t* mrow = f.mul_row(coef);
    for (size_t i = 0; i < dst.size(); ++i) dst[i] = f.add(dst[i], mrow[src[i]]);
}

Elimination eliminate(const Field& f, DenseMat& m, std::span<const int> col_order,
                      DenseMat* companion) {
    Elimination e;
    int npiv = 0;
    for (int c : col_order) {
        int prow = -1;
        for (int r = npiv; r < m.rows; ++r)
            if (m.at(r, c) != 0) {
                prow = r;
                break;
            }
        if (prow < 0) {
            e.free_cols.push_back(c);
            continue;
        }
        if (prow != npiv) {
            std::swap_ranges(m.row(prow), m.row(prow) + m.cols, m.row(npiv));
            if (companion)
                std::swap_ranges(companion->row(prow), companion->row(prow) + companion->cols,
                                 companion->row(npiv));
        }
        uint8_t piv = m.at(npiv, c);
        if (piv != 1) {
            uint8_t s = f.inv(piv);
            const uint8_t* mrow = f.mul_row(s);
            for (int j = 0; j < m.cols; ++j) m.at(npiv, j) = mrow[m.at(npiv, j)];
            if (companion)
                for (int j = 0; j < companion->cols; ++j)
                    companion->at(npiv, j) = mrow[companion->at(npiv, j)];
        }
        for (int r = 0; r < m.rows; ++r) {
            if (r == npiv) continue;
            uint8_t v = m.at(r, c);
            if (v == 0) continue;
            uint8_t s = f.neg(v);
            addmul_row(f, {m.row(r), static_cast<size_t>(m.cols)},
                       {m.row(npiv), static_cast<size_t>(m.cols)}, s);
            if (companion)
                addmul_row(f, {companion->row(r), static_cast<size_t>(companion->cols)},
                           {companion->row(npiv), static_cast<size_t>(companion->cols)}, s);
        }
        e.pivot_cols.push_back(c);
        ++npiv;
    }
    e.rank = npiv;
    return e;
}

int rank_of(const Field& f, DenseMat m) {
    std::vector<int> order(m.cols);
    for (int i = 0; i < m.cols; ++i) order[i] = i;
    return eliminate(f, m, order).rank;
}

std::vector<std::vector<uint8_t>> kernel_basis(const Field& f, DenseMat m) {
    std::vector<int> order(m.cols);
    for (int i = 0; i < m.cols; ++i) order[i] = i;
    Elimination e = eliminate(f, m, order);
    std::vector<std::vector<uint8_t>> basis;
    basis.reserve(e.free_cols.size());
    for (int fc : e.free_cols) {
        std::vector<uint8_t> v(m.cols, 0);
        v[fc] = 1;
        for (int i = 0; i < e.rank; ++i) v[e.pivot_cols[i]] = f.neg(m.at(i, fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

SpanMembership::SpanMembership(const Field& f, DenseMat rows) : f_(&f), rr_(std::move(rows)) {
    std::vector<int> order(rr_.cols);
    for (int i = 0; i < rr_.cols; ++i) order[i] = i;
    elim_ = eliminate(f, rr_, order);
}

bool SpanMembership::contains(std::span<const uint8_t> v) const {
    if (static_cast<int>(v.size()) != rr_.cols)
        throw std::domain_error("membership test length mismatch");
    std::vector<uint8_t> w(v.begin(), v.end());
    for (int i = 0; i < elim_.rank; ++i) {
        uint8_t c = w[elim_.pivot_cols[i]];
        if (c == 0) continue;
        addmul_row(*f_, w, {rr_.row(i), static_cast<size_t>(rr_.cols)}, f_->neg(c));
    }
    return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

ErasureSolver::ErasureSolver(const Field& f, const DenseMat& h, std::vector<int> unknown_cols)
    : f_(&f), ht_(h), unknown_(std::move(unknown_cols)), ncols_(h.cols) {
    rop_ = DenseMat(h.rows, h.rows);
    for (int r = 0; r < h.rows; ++r) rop_.at(r, r) = 1;
    elim_ = eliminate(f, ht_, unknown_, &rop_);
    emat_ = DenseMat(elim_.rank, corank());
    for (int i = 0; i < elim_.rank; ++i)
        for (int j = 0; j < corank(); ++j) emat_.at(i, j) = ht_.at(i, elim_.free_cols[j]);
    scratch_x_.assign(ncols_, 0);
    scratch_s_.assign(h.rows, 0);
    scratch_p_.assign(elim_.rank, 0);
}

std::vector<uint8_t> ErasureSolver::transform_target(std::span<const uint8_t> t) const {
    if (static_cast<int>(t.size()) != rop_.rows)
        throw std::domain_error("syndrome target length mismatch");
    std::vector<uint8_t> out(rop_.rows, 0);
    for (int r = 0; r < rop_.rows; ++r) {
        uint8_t acc = 0;
        const uint8_t* row = rop_.row(r);
        for (int c = 0; c < rop_.cols; ++c)
            if (row[c] && t[c]) acc = f_->add(acc, f_->mul(row[c], t[c]));
        out[r] = acc;
    }
    return out;
}

uint64_t ErasureSolver::for_each_completion(
    std::span<const std::pair<int, uint8_t>> known, std::span<const uint8_t> target_t,
    uint64_t limit, const std::function<bool(std::span<const uint8_t>)>& visit,
    bool* hit_cap) const {
    if (hit_cap) *hit_cap = false;
    const int r = ht_.rows;
    const int rank = elim_.rank;
    const int b = corank();

    // s = R*t - sum of known columns of R*H
    std::vector<uint8_t>& s = scratch_s_;
    if (target_t.empty())
        std::fill(s.begin(), s.end(), 0);
    else
        std::copy(target_t.begin(), target_t.end(), s.begin());
    for (auto [c, v] : known) {
        if (v == 0) continue;
        const uint8_t* mrow = f_->mul_row(f_->neg(v));
        for (int i = 0; i < r; ++i) s[i] = f_->add(s[i], mrow[ht_.at(i, c)]);
    }
    for (int i = rank; i < r; ++i)
        if (s[i] != 0) return 0;  // inconsistent

    std::vector<uint8_t>& x = scratch_x_;
    std::fill(x.begin(), x.end(), 0);
    for (auto [c, v] : known) x[c] = v;

    // particular solution in the pivot coordinates
    std::vector<uint8_t>& p = scratch_p_;
    for (int i = 0; i < rank; ++i) p[i] = s[i];

    const int q = f_->q();
    std::vector<uint8_t> digits(b, 0);
    uint64_t visited = 0;
    while (true) {
        for (int i = 0; i < rank; ++i) x[elim_.pivot_cols[i]] = p[i];
        ++visited;
        if (!visit({x.data(), x.size()})) return visited;
        if (visited >= limit) {
            // more states left?
            bool more = false;
            for (int j = 0; j < b; ++j)
                if (digits[j] != q - 1) {
                    more = true;
                    break;
                }
            if (more && hit_cap) *hit_cap = true;
            return visited;
        }
        // odometer step over the free columns
        int j = 0;
        for (; j < b; ++j) {
            uint8_t oldv = digits[j];
            uint8_t newv = (oldv + 1 == q) ? 0 : oldv + 1;
            digits[j] = newv;
            uint8_t delta = f_->sub(newv, oldv);
            x[elim_.free_cols[j]] = newv;
            const uint8_t* mrow = f_->mul_row(f_->neg(delta));
            for (int i = 0; i < rank; ++i) p[i] = f_->add(p[i], mrow[emat_.at(i, j)]);
            if (newv != 0) break;  // no carry
        }
        if (j == b) return visited;  // wrapped around completely
    }
}

}  // namespace mindist
