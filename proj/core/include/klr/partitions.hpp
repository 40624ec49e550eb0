#pragma once

#include "klr/cartan.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace klr {

// Box position in English convention; rows grow downwards, both 1-based.
struct Node {
    int row = 0;
    int col = 0;
    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

// Fock-space charge.  Residues are kappa + col - row folded onto 0..ell:
// the fold is 2ell-periodic and reflects ell+1..2ell-1 back to ell-1..1.
struct Charge {
    int kappa = 0;
    int ell = 2;
};

int fold_residue(int ell, long long x);
int residue(const Charge& ch, const Node& a);

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const;
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int r) const;  // 1-based; 0 beyond the last row
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Node& a) const;

    Partition with(const Node& a) const;     // pre: a is addable
    Partition without(const Node& a) const;  // pre: a is removable

    std::string str() const;  // "(3,2,1)"; "()" when empty

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::vector<Node> addable_nodes(const Partition& la);    // top to bottom
std::vector<Node> removable_nodes(const Partition& la);  // top to bottom

RootVector content(const Charge& ch, const Partition& la);
int zero_node_count(const Charge& ch, const Partition& la);

// Number of addable minus removable i-nodes (unscaled; equals the pairing of
// the coroot h_i against the Fock weight of la).
int d_stat(const Charge& ch, const Partition& la, int i);

// Signed count of addable minus removable i-nodes strictly below/above the
// row of a, scaled by the symmetrizer entry of i = residue(a).  pre: a in la.
int d_below(const Charge& ch, const Partition& la, const Node& a);
int d_above(const Charge& ch, const Partition& la, const Node& a);

// Standard tableau stored as the insertion order of its boxes; entry m+1
// lives at order()[m], and every prefix of the order is a partition shape.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<Node> order);

    int size() const { return static_cast<int>(order_.size()); }
    const Node& node_of(int entry) const { return order_[entry - 1]; }
    const std::vector<Node>& order() const { return order_; }
    Partition shape() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<Node> order_;
};

StandardTableau initial_tableau(const Partition& la);
std::vector<int> residue_sequence(const Charge& ch, const StandardTableau& t);

// Sum over insertion steps of d_below evaluated on the grown shape.
int degree(const Charge& ch, const StandardTableau& t);

// Enumerates standard tableaux of shape la by recursive removal of the
// largest entry from the removable corners, corners taken top to bottom.
void for_each_standard_tableau(const Partition& la,
                               const std::function<void(const StandardTableau&)>& fn);
std::vector<StandardTableau> standard_tableaux(const Partition& la);

// All partitions whose multiset of box residues matches beta, in descending
// lexicographic order.  pre: beta has ell+1 nonnegative coefficients.
std::vector<Partition> partitions_of_content(const Charge& ch, const RootVector& beta);

// True iff nu is the residue sequence of some standard tableau.
bool realizable(const Charge& ch, const std::vector<int>& nu);

}  // namespace klr
