#include "klr/fock.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace klr {

std::vector<SignatureEntry> signature(const Charge& ch, const Partition& la, int i) {
    std::vector<SignatureEntry> out;
    for (const Node& a : addable_nodes(la))
        if (residue(ch, a) == i) out.push_back(SignatureEntry{a, true});
    for (const Node& a : removable_nodes(la))
        if (residue(ch, a) == i) out.push_back(SignatureEntry{a, false});
    std::sort(out.begin(), out.end(),
              [](const SignatureEntry& x, const SignatureEntry& y) { return x.node < y.node; });
    return out;
}

std::vector<SignatureEntry> reduced_signature(const Charge& ch, const Partition& la, int i) {
    std::vector<SignatureEntry> stack;
    for (const SignatureEntry& e : signature(ch, la, i)) {
        if (e.addable && !stack.empty() && !stack.back().addable)
            stack.pop_back();
        else
            stack.push_back(e);
    }
    return stack;
}

std::optional<Node> good_node(const Charge& ch, const Partition& la, int i) {
    for (const SignatureEntry& e : reduced_signature(ch, la, i))
        if (!e.addable) return e.node;
    return std::nullopt;
}

std::optional<Node> cogood_node(const Charge& ch, const Partition& la, int i) {
    std::optional<Node> last;
    for (const SignatureEntry& e : reduced_signature(ch, la, i))
        if (e.addable) last = e.node;
    return last;
}

std::optional<Partition> e_tilde(const Charge& ch, const Partition& la, int i) {
    if (auto a = good_node(ch, la, i)) return la.without(*a);
    return std::nullopt;
}

std::optional<Partition> f_tilde(const Charge& ch, const Partition& la, int i) {
    if (auto a = cogood_node(ch, la, i)) return la.with(*a);
    return std::nullopt;
}

bool is_kleshchev(const Charge& ch, const Partition& la) {
    Partition cur = la;
    while (!cur.empty()) {
        bool moved = false;
        for (int i = 0; i <= ch.ell && !moved; ++i) {
            if (auto smaller = e_tilde(ch, cur, i)) {
                cur = std::move(*smaller);
                moved = true;
            }
        }
        if (!moved) return false;
    }
    return true;
}

namespace {

bool vertex_before(const Partition& x, const Partition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.parts() < y.parts();
}

}  // namespace

bool CrystalGraph::contains(const Partition& la) const {
    return std::binary_search(vertices.begin(), vertices.end(), la, vertex_before);
}

CrystalGraph crystal(const Charge& ch, int n_max) {
    CrystalGraph g;
    g.charge = ch;
    g.n_max = n_max;

    std::set<Partition> seen = {Partition()};
    std::deque<Partition> queue = {Partition()};
    while (!queue.empty()) {
        Partition la = std::move(queue.front());
        queue.pop_front();
        if (la.size() == n_max) continue;
        for (int i = 0; i <= ch.ell; ++i) {
            auto bigger = f_tilde(ch, la, i);
            if (!bigger) continue;
            g.edges.push_back(CrystalEdge{la, i, *bigger});
            if (seen.insert(*bigger).second) queue.push_back(std::move(*bigger));
        }
    }

    g.vertices.assign(seen.begin(), seen.end());
    std::sort(g.vertices.begin(), g.vertices.end(), vertex_before);
    std::sort(g.edges.begin(), g.edges.end(), [](const CrystalEdge& x, const CrystalEdge& y) {
        if (x.from != y.from) return x.from < y.from;
        return x.colour < y.colour;
    });
    return g;
}

namespace {

void accumulate(FockVector& v, const Partition& la, const LaurentPoly& c) {
    auto [it, inserted] = v.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

}  // namespace

FockVector e_act(const Charge& ch, const FockVector& v, int i) {
    FockVector out;
    for (const auto& [la, c] : v)
        for (const Node& a : removable_nodes(la))
            if (residue(ch, a) == i)
                accumulate(out, la.without(a), c * LaurentPoly::term(1, d_below(ch, la, a)));
    return out;
}

FockVector f_act(const Charge& ch, const FockVector& v, int i) {
    FockVector out;
    for (const auto& [la, c] : v) {
        for (const Node& a : addable_nodes(la)) {
            if (residue(ch, a) != i) continue;
            Partition bigger = la.with(a);
            accumulate(out, bigger, c * LaurentPoly::term(1, -d_above(ch, bigger, a)));
        }
    }
    return out;
}

FockVector q_d_act(const Charge& ch, const FockVector& v) {
    FockVector out;
    for (const auto& [la, c] : v)
        out.emplace(la, c * LaurentPoly::term(1, -zero_node_count(ch, la)));
    return out;
}

FockVector q_alpha_act(const Charge& ch, const FockVector& v, int i) {
    FockVector out;
    for (const auto& [la, c] : v)
        out.emplace(la, c * LaurentPoly::term(1, d_stat(ch, la, i)));
    return out;
}

}  // namespace klr
