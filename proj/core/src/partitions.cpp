#include "klr/partitions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klr {

int fold_residue(int ell, long long x) {
    const int period = 2 * ell;
    int m = static_cast<int>(((x % period) + period) % period);
    return m <= ell ? m : period - m;
}

int residue(const Charge& ch, const Node& a) {
    return fold_residue(ch.ell, static_cast<long long>(ch.kappa) + a.col - a.row);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (parts_[r] < 0) throw std::invalid_argument("negative part");
        if (r > 0 && parts_[r] > parts_[r - 1])
            throw std::invalid_argument("parts must decrease weakly");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
}

int Partition::part(int r) const {
    if (r < 1) throw std::out_of_range("rows are 1-based");
    return r <= rows() ? parts_[r - 1] : 0;
}

bool Partition::contains(const Node& a) const {
    return a.row >= 1 && a.row <= rows() && a.col >= 1 && a.col <= parts_[a.row - 1];
}

Partition Partition::with(const Node& a) const {
    std::vector<int> parts = parts_;
    if (a.row == rows() + 1) {
        parts.push_back(0);
    } else if (a.row < 1 || a.row > rows()) {
        throw std::invalid_argument("node is not addable");
    }
    if (parts[a.row - 1] + 1 != a.col) throw std::invalid_argument("node is not addable");
    ++parts[a.row - 1];
    return Partition(parts);
}

Partition Partition::without(const Node& a) const {
    if (a.row < 1 || a.row > rows() || parts_[a.row - 1] != a.col)
        throw std::invalid_argument("node is not removable");
    std::vector<int> parts = parts_;
    --parts[a.row - 1];
    return Partition(parts);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (int r = 0; r < rows(); ++r) {
        if (r) os << ',';
        os << parts_[r];
    }
    os << ')';
    return os.str();
}

std::vector<Node> addable_nodes(const Partition& la) {
    std::vector<Node> out;
    for (int r = 1; r <= la.rows() + 1; ++r)
        if (r == 1 || la.part(r) < la.part(r - 1)) out.push_back(Node{r, la.part(r) + 1});
    return out;
}

std::vector<Node> removable_nodes(const Partition& la) {
    std::vector<Node> out;
    for (int r = 1; r <= la.rows(); ++r)
        if (la.part(r) > la.part(r + 1)) out.push_back(Node{r, la.part(r)});
    return out;
}

RootVector content(const Charge& ch, const Partition& la) {
    RootVector beta = RootVector::zero(ch.ell + 1);
    for (int r = 1; r <= la.rows(); ++r)
        for (int c = 1; c <= la.part(r); ++c) ++beta[residue(ch, Node{r, c})];
    return beta;
}

int zero_node_count(const Charge& ch, const Partition& la) {
    int n = 0;
    for (int r = 1; r <= la.rows(); ++r)
        for (int c = 1; c <= la.part(r); ++c)
            if (residue(ch, Node{r, c}) == 0) ++n;
    return n;
}

int d_stat(const Charge& ch, const Partition& la, int i) {
    int n = 0;
    for (const Node& a : addable_nodes(la))
        if (residue(ch, a) == i) ++n;
    for (const Node& a : removable_nodes(la))
        if (residue(ch, a) == i) --n;
    return n;
}

namespace {

// Addable-minus-removable i-node count over the rows strictly inside
// (row_lo, row_hi), exclusive on both sides.
int node_balance(const Charge& ch, const Partition& la, int i, int row_lo, int row_hi) {
    int n = 0;
    for (const Node& a : addable_nodes(la))
        if (a.row > row_lo && a.row < row_hi && residue(ch, a) == i) ++n;
    for (const Node& a : removable_nodes(la))
        if (a.row > row_lo && a.row < row_hi && residue(ch, a) == i) --n;
    return n;
}

int symmetrizer(const Charge& ch, int i) { return (i == 0 || i == ch.ell) ? 2 : 1; }

}  // namespace

int d_below(const Charge& ch, const Partition& la, const Node& a) {
    const int i = residue(ch, a);
    return symmetrizer(ch, i) * node_balance(ch, la, i, a.row, la.rows() + 2);
}

int d_above(const Charge& ch, const Partition& la, const Node& a) {
    const int i = residue(ch, a);
    return symmetrizer(ch, i) * node_balance(ch, la, i, 0, a.row);
}

StandardTableau::StandardTableau(std::vector<Node> order) : order_(std::move(order)) {
    std::vector<int> parts;
    for (const Node& a : order_) {
        if (a.row < 1 || a.row > static_cast<int>(parts.size()) + 1)
            throw std::invalid_argument("insertion order leaves the diagram");
        if (a.row == static_cast<int>(parts.size()) + 1) parts.push_back(0);
        if (a.col != parts[a.row - 1] + 1 ||
            (a.row > 1 && parts[a.row - 1] + 1 > parts[a.row - 2]))
            throw std::invalid_argument("insertion order leaves the diagram");
        ++parts[a.row - 1];
    }
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    for (const Node& a : order_) {
        if (a.row == static_cast<int>(parts.size()) + 1) parts.push_back(0);
        ++parts[a.row - 1];
    }
    return Partition(parts);
}

StandardTableau initial_tableau(const Partition& la) {
    std::vector<Node> order;
    for (int r = 1; r <= la.rows(); ++r)
        for (int c = 1; c <= la.part(r); ++c) order.push_back(Node{r, c});
    return StandardTableau(order);
}

std::vector<int> residue_sequence(const Charge& ch, const StandardTableau& t) {
    std::vector<int> nu;
    nu.reserve(t.order().size());
    for (const Node& a : t.order()) nu.push_back(residue(ch, a));
    return nu;
}

int degree(const Charge& ch, const StandardTableau& t) {
    int deg = 0;
    Partition shape;
    for (const Node& a : t.order()) {
        shape = shape.with(a);
        deg += d_below(ch, shape, a);
    }
    return deg;
}

namespace {

void enumerate_by_removal(std::vector<int>& parts, std::vector<Node>& order, int pos,
                          const std::function<void(const StandardTableau&)>& fn) {
    if (pos == 0) {
        fn(StandardTableau(order));
        return;
    }
    const int rows = static_cast<int>(parts.size());
    for (int r = 1; r <= rows; ++r) {
        const int next = r < rows ? parts[r] : 0;
        if (parts[r - 1] == next) continue;
        order[pos - 1] = Node{r, parts[r - 1]};
        --parts[r - 1];
        const bool dropped = parts.back() == 0;
        if (dropped) parts.pop_back();
        enumerate_by_removal(parts, order, pos - 1, fn);
        if (dropped) parts.push_back(0);
        ++parts[r - 1];
    }
}

}  // namespace

void for_each_standard_tableau(const Partition& la,
                               const std::function<void(const StandardTableau&)>& fn) {
    std::vector<int> parts = la.parts();
    std::vector<Node> order(la.size());
    enumerate_by_removal(parts, order, la.size(), fn);
}

std::vector<StandardTableau> standard_tableaux(const Partition& la) {
    std::vector<StandardTableau> out;
    for_each_standard_tableau(la, [&](const StandardTableau& t) { out.push_back(t); });
    return out;
}

namespace {

void enumerate_by_rows(const Charge& ch, std::vector<int>& rows, int remaining,
                       std::vector<long long>& budget, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(rows));
        return;
    }
    const int row = static_cast<int>(rows.size()) + 1;
    const int cap = rows.empty() ? remaining : std::min(rows.back(), remaining);
    for (int len = cap; len >= 1; --len) {
        int placed = 0;
        bool ok = true;
        for (int c = 1; c <= len; ++c) {
            const int res = residue(ch, Node{row, c});
            if (budget[res] == 0) {
                ok = false;
                break;
            }
            --budget[res];
            ++placed;
        }
        if (ok) {
            rows.push_back(len);
            enumerate_by_rows(ch, rows, remaining - len, budget, out);
            rows.pop_back();
        }
        for (int c = 1; c <= placed; ++c) ++budget[residue(ch, Node{row, c})];
    }
}

}  // namespace

std::vector<Partition> partitions_of_content(const Charge& ch, const RootVector& beta) {
    if (beta.size() != ch.ell + 1)
        throw std::invalid_argument("content vector has the wrong rank");
    if (!beta.nonnegative())
        throw std::invalid_argument("content coefficients must be nonnegative");
    std::vector<long long> budget(beta.coeffs());
    std::vector<int> rows;
    std::vector<Partition> out;
    enumerate_by_rows(ch, rows, static_cast<int>(beta.height()), budget, out);
    return out;
}

bool realizable(const Charge& ch, const std::vector<int>& nu) {
    std::set<Partition> frontier = {Partition()};
    for (int r : nu) {
        std::set<Partition> next;
        for (const Partition& la : frontier)
            for (const Node& a : addable_nodes(la))
                if (residue(ch, a) == r) next.insert(la.with(a));
        frontier = std::move(next);
        if (frontier.empty()) return false;
    }
    return true;
}

}  // namespace klr
