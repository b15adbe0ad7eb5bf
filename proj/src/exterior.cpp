#include "exterior.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qsu2 {

std::vector<int> word_arrangement(const Word& w, int k) {
    std::vector<int> arr(k);
    std::iota(arr.begin(), arr.end(), 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int j = *it;
        if (j < 1 || j >= k) throw std::invalid_argument("letter out of range");
        std::swap(arr[j - 1], arr[j]);
    }
    return arr;
}

int count_inversions(const std::vector<int>& arr) {
    int n = 0;
    for (size_t i = 0; i < arr.size(); ++i)
        for (size_t j = i + 1; j < arr.size(); ++j)
            if (arr[i] > arr[j]) ++n;
    return n;
}

std::vector<Word> canonical_words(int k) {
    std::vector<Word> out = {{}};
    for (int n = 2; n <= k; ++n) {
        std::vector<Word> next;
        next.reserve(out.size() * n);
        for (const Word& w : out)
            for (int j = n; j >= 1; --j) {
                Word nw = w;
                for (int t = n - 1; t >= j; --t) nw.push_back(t);
                next.push_back(std::move(nw));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Word> all_reduced_words(std::vector<int> arrangement) {
    int k = (int)arrangement.size();
    if (count_inversions(arrangement) == 0) return {{}};
    std::vector<Word> out;
    for (int j = 1; j < k; ++j) {
        if (arrangement[j - 1] > arrangement[j]) {
            std::swap(arrangement[j - 1], arrangement[j]);
            for (Word w : all_reduced_words(arrangement)) {
                Word full = {j};
                full.insert(full.end(), w.begin(), w.end());
                out.push_back(std::move(full));
            }
            std::swap(arrangement[j - 1], arrangement[j]);
        }
    }
    return out;
}

SpMatZ word_operator(Dir d, int k, const Word& w) {
    SpMatZ out = SpMatZ::identity(tensor_dim(k));
    for (int j : w) out = out * sigma_lift(d, k, j);
    return out;
}

namespace {

SpMatZ build_antisym_step(Dir d, int k, const SpMatZ& prev_antisym) {
    if (k <= 1) return SpMatZ::identity(tensor_dim(k));
    SpMatZ prev = prev_antisym.kron(SpMatZ::identity(4));
    // T_k = 1 - s_{k-1} + s_{k-1}s_{k-2} - ... = 1 - s_{k-1}(1 - s_{k-2}(...)),
    // built inside out.
    SpMatZ t = SpMatZ::identity(tensor_dim(k));
    for (int j = 1; j <= k - 1; ++j)
        t = SpMatZ::identity(tensor_dim(k)) - sigma_lift(d, k, j) * t;
    return prev * t;
}

} // namespace

const SpMatZ& antisym(Dir d, int k) {
    if (k < 0 || k > 5) throw std::invalid_argument("antisymmetrizer degree out of range");
    static std::map<std::pair<int, int>, SpMatZ> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    int ds = d == Dir::Plus ? 0 : 1;
    auto it = cache.find({ds, k});
    if (it == cache.end()) {
        for (int n = 0; n <= k; ++n)
            if (!cache.count({ds, n}))
                cache.emplace(std::make_pair(ds, n),
                              build_antisym_step(d, n, n >= 1 ? cache.at({ds, n - 1})
                                                              : SpMatZ()));
        it = cache.find({ds, k});
    }
    return it->second;
}

SpMatZ antisym_literal(Dir d, int k) {
    SpMatZ acc(tensor_dim(k), tensor_dim(k));
    for (const Word& w : canonical_words(k)) {
        SpMatZ op = word_operator(d, k, w);
        acc = (w.size() % 2 == 0) ? acc + op : acc - op;
    }
    return acc;
}

namespace {

// Minimal representatives of the right cosets (S_k x S_l) \ S_{k+l}: the
// arrangements that riffle 0..k-1 (in order) into chosen slots and
// k..k+l-1 (in order) into the remaining slots.
void riffles(int k, int l, std::vector<std::vector<int>>& out) {
    int n = k + l;
    std::vector<int> pick(n, 0);
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    // Enumerate k-subsets of positions in lexicographic order.
    for (;;) {
        std::vector<int> arr(n, -1);
        for (int t = 0; t < k; ++t) arr[idx[t]] = t;
        int v = k;
        for (int p = 0; p < n; ++p)
            if (arr[p] < 0) arr[p] = v++;
        out.push_back(std::move(arr));
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
}

Word greedy_reduced_word(std::vector<int> arr) {
    Word w;
    for (;;) {
        int j = -1;
        for (size_t p = 1; p < arr.size(); ++p)
            if (arr[p - 1] > arr[p]) { j = (int)p; break; }
        if (j < 0) return w;
        w.push_back(j);
        std::swap(arr[j - 1], arr[j]);
    }
}

SpMatZ build_shuffle(Dir d, int k, int l, bool invert) {
    int n = k + l;
    std::vector<std::vector<int>> arrs;
    riffles(k, l, arrs);
    SpMatZ acc(tensor_dim(n), tensor_dim(n));
    for (auto& arr : arrs) {
        if (invert) {
            std::vector<int> inv(arr.size());
            for (size_t p = 0; p < arr.size(); ++p) inv[arr[p]] = (int)p;
            arr = inv;
        }
        Word w = greedy_reduced_word(arr);
        SpMatZ op = word_operator(d, n, w);
        acc = (w.size() % 2 == 0) ? acc + op : acc - op;
    }
    return acc;
}

const SpMatZ& shuffle_cached(Dir d, int k, int l, bool invert) {
    if (k < 0 || l < 0 || k + l > 5) throw std::invalid_argument("shuffle degrees out of range");
    static std::map<std::tuple<int, int, int, int>, SpMatZ> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(d == Dir::Plus ? 0 : 1, k, l, invert ? 1 : 0);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_shuffle(d, k, l, invert)).first;
    return it->second;
}

} // namespace

const SpMatZ& shuffle_sum(Dir d, int k, int l) { return shuffle_cached(d, k, l, true); }

const SpMatZ& shuffle_sum_left(Dir d, int k, int l) { return shuffle_cached(d, k, l, false); }

std::vector<ScalarQ> apply_op(const SpMatZ& op, const std::vector<ScalarQ>& v) {
    if ((int)v.size() != op.cols) throw std::invalid_argument("apply_op: size mismatch");
    std::vector<ScalarQ> out(op.rows);
    for (int r = 0; r < op.rows; ++r) {
        ScalarQ acc;
        for (auto& [c, val] : op.row[r])
            if (!v[c].is_zero()) acc = acc + val.to_scalar() * v[c];
        out[r] = acc;
    }
    return out;
}

std::vector<std::pair<int, std::vector<int>>> charge_blocks(int k) {
    std::map<int, std::vector<int>> by_charge;
    for (int idx = 0; idx < tensor_dim(k); ++idx)
        by_charge[tensor_charge(idx, k)].push_back(idx);
    return {by_charge.begin(), by_charge.end()};
}

namespace {

MatQ extract_block(const SpMatZ& op, const std::vector<int>& idxs) {
    std::map<int, int> pos;
    for (size_t t = 0; t < idxs.size(); ++t) pos[idxs[t]] = (int)t;
    MatQ blk((int)idxs.size(), (int)idxs.size());
    for (size_t t = 0; t < idxs.size(); ++t)
        for (auto& [c, v] : op.row[idxs[t]]) {
            auto it = pos.find(c);
            if (it == pos.end()) {
                if (!v.is_zero())
                    throw std::logic_error("operator does not preserve charge blocks");
                continue;
            }
            blk.at((int)t, it->second) = v.to_scalar();
        }
    return blk;
}

} // namespace

int operator_rank(const SpMatZ& op, int k) {
    int rank = 0;
    for (auto& [charge, idxs] : charge_blocks(k)) {
        MatQ blk = extract_block(op, idxs);
        rank += rank_destructive(blk);
    }
    return rank;
}

int eigenspace_dim(const SpMatZ& op, int k, const ScalarQ& lambda) {
    int dim = 0;
    for (auto& [charge, idxs] : charge_blocks(k)) {
        MatQ blk = extract_block(op, idxs);
        for (size_t t = 0; t < idxs.size(); ++t) blk.at((int)t, (int)t) -= lambda;
        dim += (int)idxs.size() - rank_destructive(blk);
    }
    return dim;
}

std::vector<std::vector<ScalarQ>> operator_kernel(const SpMatZ& op, int k) {
    std::vector<std::vector<ScalarQ>> out;
    int n = tensor_dim(k);
    for (auto& [charge, idxs] : charge_blocks(k)) {
        MatQ blk = extract_block(op, idxs);
        for (auto& v : kernel_basis(std::move(blk))) {
            std::vector<ScalarQ> full(n);
            for (size_t t = 0; t < idxs.size(); ++t) full[idxs[t]] = v[t];
            out.push_back(std::move(full));
        }
    }
    return out;
}

} // namespace qsu2
