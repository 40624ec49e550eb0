#pragma once

#include "klr/laurent.hpp"
#include "klr/partitions.hpp"

#include <map>
#include <vector>

namespace klr {

// Graded count of the standard tableaux of shape la whose residue sequence
// is nu; zero when nu is not realizable in la.
LaurentPoly kq(const Charge& ch, const Partition& la, const std::vector<int>& nu);

// Graded count of all standard tableaux of shape la.
LaurentPoly kq_total(const Charge& ch, const Partition& la);

// One enumeration of the tableaux of la, keyed by residue sequence; summing
// the values gives kq_total.
std::map<std::vector<int>, LaurentPoly> kq_by_sequence(const Charge& ch, const Partition& la);

// True iff some partition has content beta (equivalently, the block carries
// at least one nonzero idempotent).
bool is_nonzero_block(const Charge& ch, const RootVector& beta);

// Every realizable residue sequence of content beta, ascending lexicographic.
std::vector<std::vector<int>> block_sequences(const Charge& ch, const RootVector& beta);

// Graded dimension of the (nu, nu2) slot of the block of content beta:
// sum over partitions of content beta of kq(la, nu) * kq(la, nu2).
// Throws if nu or nu2 is not a length-ht(beta) word of content beta.
LaurentPoly graded_dim(const Charge& ch, const RootVector& beta,
                       const std::vector<int>& nu, const std::vector<int>& nu2);

// Graded dimension of the whole block: sum of kq_total(la)^2.
LaurentPoly graded_dim_block(const Charge& ch, const RootVector& beta);

}  // namespace klr
