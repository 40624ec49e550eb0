#include "klr/qdim.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace klr {

namespace {

// Rows where the current subshape accepts a box while staying inside la:
// the grown column must not exceed the row above, and la must contain it.
template <typename Fn>
void for_each_growth(const Partition& la, const std::vector<int>& cur, Fn&& fn) {
    const int rows = la.rows();
    for (int r = 1; r <= rows; ++r) {
        const int col = cur[r - 1] + 1;
        if (col > la.part(r)) continue;
        if (r > 1 && col > cur[r - 2]) continue;
        fn(r, col);
    }
}

// d_below of the just-placed box (r, col), on the grown subshape cur.
int growth_degree(const Charge& ch, const std::vector<int>& cur, int rows_used, int r, int col) {
    const int i = residue(ch, Node{r, col});
    int balance = 0;
    for (int s = r + 1; s <= rows_used + 1; ++s) {
        const int len = s <= rows_used ? cur[s - 1] : 0;
        const int above = cur[s - 2];
        if (len < above && residue(ch, Node{s, len + 1}) == i) ++balance;
        const int below = s < rows_used ? cur[s] : 0;
        if (len > below && len > 0 && residue(ch, Node{s, len}) == i) --balance;
    }
    return ((i == 0 || i == ch.ell) ? 2 : 1) * balance;
}

struct Walker {
    const Charge& ch;
    const Partition& la;
    const std::vector<int>* nu = nullptr;  // residue constraint, optional
    std::vector<int> cur;
    std::vector<int> seq;
    int rows_used = 0;

    template <typename Leaf>
    void walk(int step, int n, int deg, Leaf&& leaf) {
        if (step == n) {
            leaf(deg, seq);
            return;
        }
        for_each_growth(la, cur, [&](int r, int col) {
            const int i = residue(ch, Node{r, col});
            if (nu && (*nu)[step] != i) return;
            ++cur[r - 1];
            const int prev_rows = rows_used;
            rows_used = std::max(rows_used, r);
            seq.push_back(i);
            walk(step + 1, n, deg + growth_degree(ch, cur, rows_used, r, col),
                 std::forward<Leaf>(leaf));
            seq.pop_back();
            rows_used = prev_rows;
            --cur[r - 1];
        });
    }
};

}  // namespace

LaurentPoly kq(const Charge& ch, const Partition& la, const std::vector<int>& nu) {
    LaurentPoly out;
    if (static_cast<int>(nu.size()) != la.size()) return out;
    Walker w{ch, la, &nu, std::vector<int>(la.rows(), 0), {}, 0};
    w.walk(0, la.size(), 0, [&](int deg, const std::vector<int>&) { out.add_term(1, deg); });
    return out;
}

LaurentPoly kq_total(const Charge& ch, const Partition& la) {
    LaurentPoly out;
    Walker w{ch, la, nullptr, std::vector<int>(la.rows(), 0), {}, 0};
    w.walk(0, la.size(), 0, [&](int deg, const std::vector<int>&) { out.add_term(1, deg); });
    return out;
}

std::map<std::vector<int>, LaurentPoly> kq_by_sequence(const Charge& ch, const Partition& la) {
    std::map<std::vector<int>, LaurentPoly> out;
    Walker w{ch, la, nullptr, std::vector<int>(la.rows(), 0), {}, 0};
    w.walk(0, la.size(), 0,
           [&](int deg, const std::vector<int>& seq) { out[seq].add_term(1, deg); });
    return out;
}

bool is_nonzero_block(const Charge& ch, const RootVector& beta) {
    if (beta.size() != ch.ell + 1)
        throw std::invalid_argument("content vector has the wrong rank");
    if (!beta.nonnegative()) return false;
    return !partitions_of_content(ch, beta).empty();
}

std::vector<std::vector<int>> block_sequences(const Charge& ch, const RootVector& beta) {
    std::set<std::vector<int>> seqs;
    for (const Partition& la : partitions_of_content(ch, beta))
        for (const auto& [seq, poly] : kq_by_sequence(ch, la)) seqs.insert(seq);
    return std::vector<std::vector<int>>(seqs.begin(), seqs.end());
}

namespace {

void check_block_word(const Charge& ch, const RootVector& beta, const std::vector<int>& nu) {
    if (static_cast<int>(nu.size()) != beta.height())
        throw std::invalid_argument("word length differs from the block height");
    RootVector counts = RootVector::zero(ch.ell + 1);
    for (int r : nu) {
        if (r < 0 || r > ch.ell) throw std::invalid_argument("residue out of range");
        ++counts[r];
    }
    if (counts != beta) throw std::invalid_argument("word content differs from the block");
}

}  // namespace

LaurentPoly graded_dim(const Charge& ch, const RootVector& beta, const std::vector<int>& nu,
                       const std::vector<int>& nu2) {
    if (beta.size() != ch.ell + 1)
        throw std::invalid_argument("content vector has the wrong rank");
    check_block_word(ch, beta, nu);
    check_block_word(ch, beta, nu2);
    LaurentPoly out;
    for (const Partition& la : partitions_of_content(ch, beta)) {
        const LaurentPoly left = kq(ch, la, nu);
        if (left.is_zero()) continue;
        out += left * kq(ch, la, nu2);
    }
    return out;
}

LaurentPoly graded_dim_block(const Charge& ch, const RootVector& beta) {
    if (beta.size() != ch.ell + 1)
        throw std::invalid_argument("content vector has the wrong rank");
    LaurentPoly out;
    for (const Partition& la : partitions_of_content(ch, beta)) {
        const LaurentPoly total = kq_total(ch, la);
        out += total * total;
    }
    return out;
}

}  // namespace klr
