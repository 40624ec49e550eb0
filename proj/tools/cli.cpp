#include "cli.hpp"

#include "klr/blocks.hpp"
#include "klr/fock.hpp"
#include "klr/qdim.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace klr::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1, std::min(jobs, static_cast<int>(count)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

CommandResult usage_error(const std::string& message) {
    return {2, "error: " + message + "\n"};
}

bool validate_common(const Query& q, bool needs_beta, CommandResult& out) {
    if (q.ell < 2) {
        out = usage_error("--ell must be at least 2");
        return false;
    }
    if (q.k < 0 || q.k > q.ell) {
        out = usage_error("--k must lie between 0 and ell");
        return false;
    }
    if (!needs_beta) return true;
    if (static_cast<int>(q.beta.size()) != q.ell + 1) {
        out = usage_error("--beta needs exactly ell + 1 entries");
        return false;
    }
    for (long long c : q.beta)
        if (c < 0) {
            out = usage_error("--beta entries must be nonnegative");
            return false;
        }
    return true;
}

std::string partition_label(const Partition& la) {
    std::ostringstream os;
    os << '(';
    for (int r = 1; r <= la.rows(); ++r) {
        if (r > 1) os << ',';
        os << la.part(r);
    }
    os << ')';
    return os.str();
}

std::string sequence_label(const std::vector<int>& nu) {
    std::ostringstream os;
    for (std::size_t j = 0; j < nu.size(); ++j) {
        if (j) os << ' ';
        os << nu[j];
    }
    return os.str();
}

std::string format_or(const Query& q, const char* fallback) {
    return q.format.empty() ? fallback : q.format;
}

LaurentPoly poly(std::initializer_list<std::pair<int, int>> coeff_exp) {
    LaurentPoly p;
    for (auto [c, e] : coeff_exp) p += LaurentPoly::term(c, e);
    return p;
}

}  // namespace

CommandResult run_classify(const Query& q) {
    CommandResult bad;
    if (!validate_common(q, true, bad)) return bad;
    const std::string format = format_or(q, "json");
    if (format != "json" && format != "plain")
        return usage_error("classify supports --format json or plain");

    CartanDatum dd(q.ell);
    const RootVector beta(q.beta);
    const auto dec = decompose(dd, q.k, beta);
    const RepType rt = classify(dd, q.k, beta);

    if (format == "plain") {
        std::ostringstream os;
        os << rep_type_name(rt.kind);
        if (rt.kind == RepTypeKind::finite) os << " (" << rt.num_simples << " simples)";
        os << '\n';
        return {0, os.str()};
    }

    ordered_json j;
    j["ell"] = q.ell;
    j["k"] = q.k;
    j["beta"] = q.beta;
    j["nonzero"] = dec.has_value();
    j["defect"] = defect(dd, q.k, beta);
    if (dec) {
        ordered_json d;
        d["sign"] = dec->sign == Sign::plus ? "+" : "-";
        d["i"] = dec->i;
        d["m"] = dec->m;
        d["word"] = dec->word.letters;
        j["decomposition"] = std::move(d);
    }
    j["rep_type"] = rep_type_name(rt.kind);
    if (rt.kind == RepTypeKind::finite) j["num_simples"] = rt.num_simples;
    return {0, j.dump(2) + "\n"};
}

CommandResult run_dims(const Query& q) {
    CommandResult bad;
    if (!validate_common(q, true, bad)) return bad;
    const std::string format = format_or(q, "csv");
    if (format != "csv" && format != "json" && format != "plain")
        return usage_error("dims supports --format csv, json or plain");

    const Charge ch{q.k, q.ell};
    const RootVector beta(q.beta);

    if (q.nu) {
        const std::vector<int>& nu2 = q.nu2 ? *q.nu2 : *q.nu;
        LaurentPoly dim;
        try {
            dim = graded_dim(ch, beta, *q.nu, nu2);
        } catch (const std::invalid_argument& e) {
            return usage_error(e.what());
        }
        if (format == "json") {
            ordered_json j;
            j["ell"] = q.ell;
            j["k"] = q.k;
            j["beta"] = q.beta;
            j["nu"] = *q.nu;
            j["nu2"] = nu2;
            j["dim"] = dim.str();
            return {0, j.dump(2) + "\n"};
        }
        return {0, dim.str() + "\n"};
    }
    if (q.nu2) return usage_error("--nu2 requires --nu");

    const std::vector<Partition> block = partitions_of_content(ch, beta);
    if (block.empty()) return {1, "zero block: no partition has this content\n"};

    // one tableau walk per partition; the merge below is order-independent
    std::vector<std::map<std::vector<int>, LaurentPoly>> counts(block.size());
    parallel_for(block.size(), q.jobs,
                 [&](std::size_t idx) { counts[idx] = kq_by_sequence(ch, block[idx]); });

    std::vector<std::vector<int>> nus;
    for (const auto& per : counts)
        for (const auto& [nu, p] : per) nus.push_back(nu);
    std::sort(nus.begin(), nus.end());
    nus.erase(std::unique(nus.begin(), nus.end()), nus.end());

    const std::size_t n = nus.size();
    std::vector<std::vector<LaurentPoly>> dims(n, std::vector<LaurentPoly>(n));
    parallel_for(n, q.jobs, [&](std::size_t a) {
        for (std::size_t b = 0; b < n; ++b) {
            LaurentPoly total;
            for (const auto& per : counts) {
                auto pa = per.find(nus[a]);
                if (pa == per.end()) continue;
                auto pb = per.find(nus[b]);
                if (pb == per.end()) continue;
                total += pa->second * pb->second;
            }
            dims[a][b] = std::move(total);
        }
    });

    if (format == "json") {
        ordered_json j;
        j["ell"] = q.ell;
        j["k"] = q.k;
        j["beta"] = q.beta;
        j["sequences"] = nus;
        ordered_json rows = ordered_json::array();
        for (std::size_t a = 0; a < n; ++a) {
            ordered_json row = ordered_json::array();
            for (std::size_t b = 0; b < n; ++b) row.push_back(dims[a][b].str());
            rows.push_back(std::move(row));
        }
        j["dims"] = std::move(rows);
        return {0, j.dump(2) + "\n"};
    }

    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) labels[a] = sequence_label(nus[a]);

    std::ostringstream os;
    if (format == "csv") {
        for (std::size_t b = 0; b < n; ++b) os << ',' << labels[b];
        os << '\n';
        for (std::size_t a = 0; a < n; ++a) {
            os << labels[a];
            for (std::size_t b = 0; b < n; ++b) os << ',' << dims[a][b].str();
            os << '\n';
        }
        return {0, os.str()};
    }

    // plain: pad every column to its widest cell
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    for (std::size_t b = 0; b < n; ++b) cells[0][b + 1] = labels[b];
    for (std::size_t a = 0; a < n; ++a) {
        cells[a + 1][0] = labels[a];
        for (std::size_t b = 0; b < n; ++b) cells[a + 1][b + 1] = dims[a][b].str();
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        for (std::size_t c = 0; c <= n; ++c) {
            if (c) os << "  ";
            os << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        os << '\n';
    }
    return {0, os.str()};
}

CommandResult run_crystal(const Query& q) {
    CommandResult bad;
    if (!validate_common(q, false, bad)) return bad;
    if (q.n_max < 0) return usage_error("--nmax must be nonnegative");
    const std::string format = format_or(q, "dot");
    if (format != "dot" && format != "json")
        return usage_error("crystal supports --format dot or json");

    const Charge ch{q.k, q.ell};
    const CrystalGraph graph = crystal(ch, q.n_max);

    if (format == "json") {
        ordered_json j;
        j["ell"] = q.ell;
        j["kappa"] = q.k;
        j["n_max"] = q.n_max;
        ordered_json verts = ordered_json::array();
        for (const Partition& la : graph.vertices) verts.push_back(la.parts());
        j["vertices"] = std::move(verts);
        ordered_json edges = ordered_json::array();
        for (const CrystalEdge& e : graph.edges) {
            ordered_json edge;
            edge["from"] = e.from.parts();
            edge["to"] = e.to.parts();
            edge["colour"] = e.colour;
            edges.push_back(std::move(edge));
        }
        j["edges"] = std::move(edges);
        return {0, j.dump(2) + "\n"};
    }

    std::ostringstream os;
    os << "digraph crystal {\n";
    for (const Partition& la : graph.vertices) os << "  \"" << partition_label(la) << "\";\n";
    for (const CrystalEdge& e : graph.edges)
        os << "  \"" << partition_label(e.from) << "\" -> \"" << partition_label(e.to)
           << "\" [label=\"" << e.colour << "\"];\n";
    os << "}\n";
    return {0, os.str()};
}

namespace {

bool tables_tame() {
    CartanDatum dd(2);
    Charge ch{1, 2};
    const RootVector beta = delta(dd);
    const std::vector<std::vector<int>> nus = {
        {1, 2, 1, 0}, {1, 2, 0, 1}, {1, 0, 2, 1}, {1, 0, 1, 2}};
    const LaurentPoly corner = poly({{1, 0}, {1, 4}});
    const LaurentPoly middle = poly({{1, 0}, {1, 2}, {1, 4}});
    const LaurentPoly q2 = poly({{1, 2}});
    const LaurentPoly zero;
    const LaurentPoly expect[4][4] = {{corner, q2, q2, zero},
                                      {q2, middle, middle, q2},
                                      {q2, middle, middle, q2},
                                      {zero, q2, q2, corner}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (graded_dim(ch, beta, nus[a], nus[b]) != expect[a][b]) return false;
    return true;
}

bool tables_onedelta() {
    const LaurentPoly one_loop = poly({{1, 0}, {1, 2}, {1, 4}});
    const LaurentPoly two_loops = poly({{1, 0}, {2, 2}, {1, 4}});
    const LaurentPoly q2 = poly({{1, 2}});
    for (int ell = 3; ell <= 6; ++ell) {
        CartanDatum dd(ell);
        for (int k = 1; 2 * k <= ell; ++k) {
            Charge ch{k, ell};
            auto [e1, e2] = delta_block_witness(dd, k);
            WitnessReport r = wildness_witness(ch, delta(dd), e1, e2);
            const LaurentPoly& first = ell == 3 ? one_loop : two_loops;
            if (r.dim[0][0] != first || r.dim[1][1] != two_loops) return false;
            if (r.dim[0][1] != q2 || r.dim[1][0] != q2) return false;
            if (!r.quiver_wild) return false;
        }
    }
    return true;
}

bool tables_xik2() {
    const LaurentPoly diag = poly({{1, 0}, {1, 2}});
    const LaurentPoly next = poly({{1, 1}});
    for (auto [ell, k] : {std::pair<int, int>{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
        CartanDatum dd(ell);
        Charge ch{k, ell};
        for (Sign sign : {Sign::plus, Sign::minus}) {
            const int target = k + sign_value(sign) * 2;
            if (target < 0 || target > ell) continue;
            BrauerLineData data = defect1_profile(dd, k, sign);
            const RootVector beta = delta(dd) - xi(dd, k, sign, 2);
            for (int a = 0; a < data.num_simples; ++a)
                for (int b = 0; b < data.num_simples; ++b) {
                    const int gap = a > b ? a - b : b - a;
                    const LaurentPoly expect =
                        gap == 0 ? diag : (gap == 1 ? next : LaurentPoly());
                    if (graded_dim(ch, beta, data.idempotents[a], data.idempotents[b]) !=
                        expect)
                        return false;
                }
        }
    }
    return true;
}

bool tables_xik4() {
    const LaurentPoly two_loops = poly({{1, 0}, {2, 2}, {1, 4}});
    const LaurentPoly q2 = poly({{1, 2}});
    for (int ell = 5; ell <= 8; ++ell) {
        CartanDatum dd(ell);
        for (Sign sign : {Sign::plus, Sign::minus}) {
            const int lo = sign == Sign::plus ? 1 : 4;
            const int hi = sign == Sign::plus ? ell - 4 : ell - 2;
            for (int k = lo; k <= hi; ++k) {
                Charge ch{k, ell};
                auto [e1, e2] = xi4_block_witness(dd, k, sign);
                const RootVector beta = 2 * delta(dd) - xi(dd, k, sign, 4);
                WitnessReport r = wildness_witness(ch, beta, e1, e2);
                if (r.dim[0][0] != two_loops || r.dim[1][1] != two_loops) return false;
                if (r.dim[0][1] != q2 || r.dim[1][0] != q2) return false;
                if (!r.quiver_wild) return false;
            }
        }
    }
    return true;
}

bool tables_twodelta() {
    CartanDatum dd(2);
    Charge ch{1, 2};
    auto [e1, e2] = two_delta_rank2_witness();
    WitnessReport r = wildness_witness(ch, 2 * delta(dd), e1, e2);
    return r.dim[0][0] == poly({{1, 0}, {2, 2}, {2, 4}, {2, 6}, {1, 8}}) &&
           r.dim[1][1] == poly({{1, 0}, {2, 2}, {3, 4}, {2, 6}, {1, 8}}) &&
           r.dim[0][1] == poly({{1, 2}, {2, 4}, {1, 6}}) && r.dim[1][0] == r.dim[0][1] &&
           r.quiver_wild;
}

}  // namespace

CommandResult run_tables(const std::string& selector, int jobs) {
    struct Check {
        const char* name;
        const char* what;
        bool (*run)();
    };
    static const Check all[] = {
        {"tame-table", "rank-two defect-two 4x4 dimension table", tables_tame},
        {"onedelta", "single-delta certificates, ell 3..6", tables_onedelta},
        {"xik2", "defect-one idempotent chain pattern", tables_xik2},
        {"xik4", "truncated double-delta certificates, ell 5..8", tables_xik4},
        {"twodelta", "rank-two double-delta certificates", tables_twodelta},
    };

    std::vector<const Check*> picked;
    for (const Check& c : all)
        if (selector == "all" || selector == c.name) picked.push_back(&c);
    if (picked.empty()) return usage_error("unknown selector '" + selector + "'");

    std::vector<char> ok(picked.size(), 0);
    parallel_for(picked.size(), jobs, [&](std::size_t i) { ok[i] = picked[i]->run() ? 1 : 0; });

    std::ostringstream os;
    bool failed = false;
    for (std::size_t i = 0; i < picked.size(); ++i) {
        os << (ok[i] ? "pass" : "FAIL") << ' ' << picked[i]->name << ": " << picked[i]->what
           << '\n';
        if (!ok[i]) failed = true;
    }
    return {failed ? 1 : 0, os.str()};
}

}  // namespace klr::cli
