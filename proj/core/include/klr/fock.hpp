#pragma once

#include "klr/laurent.hpp"
#include "klr/partitions.hpp"

#include <map>
#include <optional>
#include <vector>

namespace klr {

struct SignatureEntry {
    Node node;
    bool addable = false;  // '+' when addable, '-' when removable
    friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

// All addable and removable i-nodes, top to bottom.
std::vector<SignatureEntry> signature(const Charge& ch, const Partition& la, int i);

// Removes every removable immediately followed by an addable, repeatedly;
// what survives is a run of addables followed by a run of removables.
std::vector<SignatureEntry> reduced_signature(const Charge& ch, const Partition& la, int i);

std::optional<Node> good_node(const Charge& ch, const Partition& la, int i);    // first removable left in the reduced signature
std::optional<Node> cogood_node(const Charge& ch, const Partition& la, int i);  // last addable left in the reduced signature

std::optional<Partition> e_tilde(const Charge& ch, const Partition& la, int i);
std::optional<Partition> f_tilde(const Charge& ch, const Partition& la, int i);

// True iff la lies in the connected crystal component of the empty partition.
bool is_kleshchev(const Charge& ch, const Partition& la);

struct CrystalEdge {
    Partition from;
    int colour = 0;
    Partition to;
    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
    Charge charge;
    int n_max = 0;
    std::vector<Partition> vertices;  // sorted by (size, parts)
    std::vector<CrystalEdge> edges;   // sorted by (from, colour)
    bool contains(const Partition& la) const;
};

// Breadth-first closure of the empty partition under the arrow operators,
// truncated to partitions of at most n_max boxes.
CrystalGraph crystal(const Charge& ch, int n_max);

// Formal linear combination of partitions with Laurent coefficients.
using FockVector = std::map<Partition, LaurentPoly>;

FockVector e_act(const Charge& ch, const FockVector& v, int i);
FockVector f_act(const Charge& ch, const FockVector& v, int i);
FockVector q_d_act(const Charge& ch, const FockVector& v);
FockVector q_alpha_act(const Charge& ch, const FockVector& v, int i);

}  // namespace klr
