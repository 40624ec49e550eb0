#include "klr/blocks.hpp"

#include "klr/qdim.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace klr {

std::optional<Decomposition> decompose(const CartanDatum& dd, int k, const RootVector& beta) {
    if (!dd.valid_node(k)) throw std::out_of_range("node out of range");
    if (beta.size() != dd.size()) throw std::invalid_argument("rank mismatch");

    auto dom = dominantize(dd, Weight{k, beta});
    if (!dom) return std::nullopt;

    // A dominant weight of level one pairs to 1 against exactly one coroot.
    int fingerprint = -1;
    for (int j = 0; j <= dd.ell(); ++j) {
        const long long p = pairing(dd, j, dom->weight);
        if (p == 0) continue;
        if (p != 1 || fingerprint >= 0) return std::nullopt;
        fingerprint = j;
    }
    if (fingerprint < 0) return std::nullopt;

    const int i = std::abs(fingerprint - k);
    if (i % 2 != 0) return std::nullopt;
    const Sign sign = fingerprint < k ? Sign::minus : Sign::plus;

    const RootVector shifted = dom->weight.beta + xi(dd, k, sign, i);
    const long long m = shifted[0];
    if (m < 0 || 2 * m < i) return std::nullopt;
    if (shifted != m * delta(dd)) return std::nullopt;

    WeylWord word;
    word.letters.assign(dom->word.letters.rbegin(), dom->word.letters.rend());
    return Decomposition{std::move(word), sign, i, static_cast<int>(m)};
}

const char* rep_type_name(RepTypeKind kind) {
    switch (kind) {
        case RepTypeKind::zero: return "zero";
        case RepTypeKind::simple: return "simple";
        case RepTypeKind::finite: return "finite";
        case RepTypeKind::tame: return "tame";
        case RepTypeKind::wild: return "wild";
    }
    return "unknown";
}

RepType classify(const CartanDatum& dd, int k, const RootVector& beta) {
    const auto dec = decompose(dd, k, beta);
    if (!dec) return RepType{RepTypeKind::zero, 0};
    if (dec->i == 0 && dec->m == 0) return RepType{RepTypeKind::simple, 0};
    if (dec->i == 2 && dec->m == 1) {
        const int simples = dec->sign == Sign::plus ? k + 1 : dd.ell() - k + 1;
        return RepType{RepTypeKind::finite, simples};
    }
    if (dec->i == 0 && dec->m == 1 && dd.ell() == 2) return RepType{RepTypeKind::tame, 0};
    return RepType{RepTypeKind::wild, 0};
}

BrauerLineData defect1_profile(const CartanDatum& dd, int k, Sign sign) {
    xi(dd, k, sign, 2);  // validates that the block exists in this direction

    const int ell = dd.ell();
    const Charge ch{k, ell};
    BrauerLineData data;

    if (sign == Sign::plus) {
        // Spechts (2^{k-j+1}, 1^{2j}) for j = k+1 down to 0; the hook-free
        // shape (2^{k+1}) at j = 0 is the one non-Kleshchev label.
        for (int j = k + 1; j >= 0; --j) {
            std::vector<int> parts(k - j + 1, 2);
            parts.insert(parts.end(), 2 * j, 1);
            data.spechts.push_back(Partition(parts));
        }
    } else {
        // Spechts (ell-k+j+1, ell-k-j+1) for j = 0 up to ell-k+1; the last
        // one degenerates to a single row and is the non-Kleshchev label.
        for (int j = 0; j <= ell - k + 1; ++j) {
            std::vector<int> parts = {ell - k + j + 1, ell - k - j + 1};
            data.spechts.push_back(Partition(parts));
        }
    }

    data.num_simples = static_cast<int>(data.spechts.size()) - 1;
    data.simples.assign(data.spechts.begin(), data.spechts.end() - 1);
    for (const Partition& la : data.simples)
        data.idempotents.push_back(residue_sequence(ch, initial_tableau(la)));

    const int m = data.num_simples;
    data.matrix.assign(m + 1, std::vector<LaurentPoly>(m));
    for (int r = 0; r <= m; ++r) {
        if (r < m) data.matrix[r][r] = LaurentPoly::constant(1);
        if (r >= 1) data.matrix[r][r - 1] = LaurentPoly::term(1, 1);
    }

    for (int c = 0; c < m; ++c) {
        std::vector<int> heart;
        if (c - 1 >= 0) heart.push_back(c - 1);
        if (c + 1 < m) heart.push_back(c + 1);
        data.radical_layers.push_back({{c}, heart, {c}});
    }
    return data;
}

WitnessReport wildness_witness(const Charge& ch, const RootVector& beta,
                               const std::vector<int>& nu1, const std::vector<int>& nu2) {
    const std::vector<int>* nus[2] = {&nu1, &nu2};
    WitnessReport report;
    report.hypothesis_ok = true;
    report.quiver_wild = true;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            report.dim[a][b] = graded_dim(ch, beta, *nus[a], *nus[b]);
            report.c[a][b] = report.dim[a][b].coeff(2);

            LaurentPoly rem = report.dim[a][b];
            if (a == b) rem -= LaurentPoly::constant(1);
            rem -= LaurentPoly::term(report.c[a][b], 2);
            report.remainder[a][b] = rem;

            if (!rem.nonneg_coeffs() || (!rem.is_zero() && rem.min_exp() < 3))
                report.hypothesis_ok = false;
            if (report.c[a][b] < 1) report.quiver_wild = false;
        }
    }
    report.quiver_wild = report.quiver_wild && report.hypothesis_ok;
    return report;
}

namespace {

void asc(std::vector<int>& w, int from, int to) {
    for (int i = from; i <= to; ++i) w.push_back(i);
}

void desc(std::vector<int>& w, int from, int to) {
    for (int i = from; i >= to; --i) w.push_back(i);
}

}  // namespace

WitnessPair delta_block_witness(const CartanDatum& dd, int k) {
    const int ell = dd.ell();
    if (ell < 3 || k < 1 || 2 * k > ell)
        throw std::invalid_argument("witness words need ell >= 3 and 1 <= k <= ell/2");
    if (ell == 3) return {{1, 2, 3, 2, 0, 1}, {1, 0, 1, 2, 3, 2}};

    std::vector<int> e1;
    if (k == 1) {
        // the (k-1, k) pair must precede the climb, or the word collapses to
        // the rank-three pattern and loses a loop at its vertex
        e1 = {1, 2, 0, 1};
        asc(e1, 2, ell);
        desc(e1, ell - 1, 3);
    } else {
        asc(e1, k, ell);
        desc(e1, ell - 1, k + 1);
        e1.push_back(k - 1);
        e1.push_back(k);
        desc(e1, k - 2, 0);
        asc(e1, 1, k - 1);
    }

    std::vector<int> e2;
    asc(e2, k, ell);
    desc(e2, ell - 1, k + 2);
    desc(e2, k - 1, 0);
    asc(e2, 1, k + 1);
    return {e1, e2};
}

WitnessPair xi4_block_witness(const CartanDatum& dd, int k, Sign sign) {
    const int ell = dd.ell();
    std::vector<int> e1, e2;
    if (sign == Sign::plus) {
        if (k < 1 || k + 4 > ell)
            throw std::invalid_argument("witness words need 1 <= k <= ell - 4");
        desc(e1, k, 0);
        asc(e1, 1, k + 3);
        e1.push_back(k + 1);
        e1.push_back(k + 2);
        desc(e1, k, 0);
        asc(e1, 1, k + 1);

        asc(e2, k, k + 3);
        desc(e2, k - 1, 0);
        asc(e2, 1, k + 2);
        e2.push_back(k);
        e2.push_back(k + 1);
        desc(e2, k - 1, 0);
        asc(e2, 1, k);
    } else {
        if (k < 4 || k + 2 > ell)
            throw std::invalid_argument("witness words need 4 <= k <= ell - 2");
        for (int j = k; j <= ell; ++j) desc(e1, j, j - 3);
        for (int r : {ell - 1, ell - 2, ell, ell - 1}) e1.push_back(r);

        for (int j = k; j <= ell - 2; ++j) desc(e2, j, j - 3);
        for (int r : {ell - 1, ell, ell - 1, ell - 2, ell - 3, ell - 4, ell - 2, ell - 3,
                      ell - 1, ell, ell - 1, ell - 2})
            e2.push_back(r);
    }
    return {e1, e2};
}

WitnessPair two_delta_rank2_witness() {
    return {{1, 0, 1, 2, 1, 0, 1, 2}, {1, 2, 0, 1, 2, 1, 0, 1}};
}

RootVector dynkin_flip(const CartanDatum& dd, const RootVector& beta) {
    if (beta.size() != dd.size()) throw std::invalid_argument("rank mismatch");
    RootVector out = RootVector::zero(dd.size());
    for (int i = 0; i <= dd.ell(); ++i) out[i] = beta[dd.ell() - i];
    return out;
}

int dynkin_flip_node(const CartanDatum& dd, int k) {
    if (!dd.valid_node(k)) throw std::out_of_range("node out of range");
    return dd.ell() - k;
}

}  // namespace klr
