#pragma once

#include "klr/cartan.hpp"
#include "klr/laurent.hpp"
#include "klr/partitions.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace klr {

// Orbit data of a nonzero block:
//   Lambda_k - beta = act(word, Lambda_k + xi(k, sign, i) - m * delta).
struct Decomposition {
    WeylWord word;
    Sign sign = Sign::plus;
    int i = 0;
    int m = 0;
};

// Recovers the orbit data by dominantizing Lambda_k - beta; nullopt when
// Lambda_k - beta is not a weight of the highest-weight module.
std::optional<Decomposition> decompose(const CartanDatum& dd, int k, const RootVector& beta);

enum class RepTypeKind { zero, simple, finite, tame, wild };
const char* rep_type_name(RepTypeKind kind);

struct RepType {
    RepTypeKind kind = RepTypeKind::zero;
    int num_simples = 0;  // set for finite blocks only
    friend bool operator==(const RepType&, const RepType&) = default;
};

RepType classify(const CartanDatum& dd, int k, const RootVector& beta);

// Brauer-line description of a defect-one block delta - xi(k, sign, 2).
// Rows of the decomposition matrix follow spechts; columns follow simples
// (= spechts without its last, non-Kleshchev, label).  The matrix is lower
// bidiagonal: 1 on the diagonal, q on the subdiagonal.
struct BrauerLineData {
    int num_simples = 0;
    std::vector<std::vector<int>> idempotents;  // residue words, one per simple
    std::vector<Partition> spechts;
    std::vector<Partition> simples;
    std::vector<std::vector<LaurentPoly>> matrix;
    // Radical layers of each projective: {top, heart, socle} as simple indices.
    std::vector<std::vector<std::vector<int>>> radical_layers;
};

BrauerLineData defect1_profile(const CartanDatum& dd, int k, Sign sign);

// Two-idempotent Gabriel-quiver probe of a block.  c holds the q^2
// coefficients of dim - identity; the hypothesis is that each remainder
// dim - delta_ij - c_ij q^2 has nonnegative coefficients supported in
// degrees >= 3, and the quiver criterion asks for loops at both vertices
// plus arrows in both directions.
struct WitnessReport {
    LaurentPoly dim[2][2];
    Int c[2][2];
    LaurentPoly remainder[2][2];
    bool hypothesis_ok = false;
    bool quiver_wild = false;
};

WitnessReport wildness_witness(const Charge& ch, const RootVector& beta,
                               const std::vector<int>& nu1, const std::vector<int>& nu2);

using WitnessPair = std::pair<std::vector<int>, std::vector<int>>;

// Residue-word pairs used to probe wild blocks.
WitnessPair delta_block_witness(const CartanDatum& dd, int k);              // beta = delta, ell >= 3
WitnessPair xi4_block_witness(const CartanDatum& dd, int k, Sign sign);     // beta = 2 delta - xi(k, sign, 4)
WitnessPair two_delta_rank2_witness();                                      // beta = 2 delta, ell = 2

// Diagram flip i -> ell - i on root coefficients and nodes.
RootVector dynkin_flip(const CartanDatum& dd, const RootVector& beta);
int dynkin_flip_node(const CartanDatum& dd, int k);

}  // namespace klr
