#include "cli.hpp"

#include "klr/partitions.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

int emit(const klr::cli::CommandResult& result) {
    std::fputs(result.output.c_str(), result.exit_code == 2 ? stderr : stdout);
    return result.exit_code;
}

// --k gives a node directly; --charge gives any integer, reduced by folding
void add_node_options(CLI::App* sub, std::optional<int>& k, std::optional<long long>& charge) {
    auto* group = sub->add_option_group("node", "highest-weight node");
    group->add_option("--k", k, "node index, 0..ell");
    group->add_option("--charge", charge, "charge; reduced to a node by folding");
    group->require_option(1);
}

void resolve_node(klr::cli::Query& q, const std::optional<int>& k,
                  const std::optional<long long>& charge) {
    if (charge)
        q.k = klr::fold_residue(q.ell, static_cast<int>(*charge));
    else
        q.k = *k;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blocks of level-one cyclotomic KLR algebras in affine type C:\n"
                 "classification, graded dimensions, crystal graphs, reference tables"};
    app.require_subcommand(1);

    int exit_code = 0;

    // classify
    auto* classify = app.add_subcommand("classify", "representation type of a block");
    klr::cli::Query cq;
    std::optional<int> ck;
    std::optional<long long> ccharge;
    classify->add_option("--ell", cq.ell, "rank, at least 2")->required();
    add_node_options(classify, ck, ccharge);
    classify->add_option("--beta", cq.beta, "content, ell + 1 comma-separated entries")
        ->required()
        ->delimiter(',');
    classify->add_option("--format", cq.format, "json (default) or plain")
        ->check(CLI::IsMember({"json", "plain"}));
    classify->callback([&] {
        resolve_node(cq, ck, ccharge);
        exit_code = emit(klr::cli::run_classify(cq));
    });

    // dims
    auto* dims = app.add_subcommand("dims", "graded dimensions of idempotent truncations");
    klr::cli::Query dq;
    std::optional<int> dk;
    std::optional<long long> dcharge;
    std::vector<int> nu, nu2;
    dims->add_option("--ell", dq.ell, "rank, at least 2")->required();
    add_node_options(dims, dk, dcharge);
    dims->add_option("--beta", dq.beta, "content, ell + 1 comma-separated entries")
        ->required()
        ->delimiter(',');
    auto* nu_opt =
        dims->add_option("--nu", nu, "left residue sequence; omit for the full table")
            ->delimiter(',');
    dims->add_option("--nu2", nu2, "right residue sequence; defaults to --nu")
        ->delimiter(',')
        ->needs(nu_opt);
    dims->add_option("--format", dq.format, "csv (default), json or plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}));
    dims->add_option("--jobs", dq.jobs, "worker threads for the enumeration")
        ->envname("KLR_JOBS")
        ->check(CLI::PositiveNumber);
    dims->callback([&] {
        resolve_node(dq, dk, dcharge);
        if (nu_opt->count()) dq.nu = nu;
        if (!nu2.empty()) dq.nu2 = nu2;
        exit_code = emit(klr::cli::run_dims(dq));
    });

    // crystal
    auto* crystal = app.add_subcommand("crystal", "highest-weight crystal up to a size bound");
    klr::cli::Query gq;
    std::optional<int> gk;
    std::optional<long long> gcharge;
    crystal->add_option("--ell", gq.ell, "rank, at least 2")->required();
    add_node_options(crystal, gk, gcharge);
    crystal->add_option("--nmax", gq.n_max, "largest partition size to expand (default 6)");
    crystal->add_option("--format", gq.format, "dot (default) or json")
        ->check(CLI::IsMember({"dot", "json"}));
    crystal->callback([&] {
        resolve_node(gq, gk, gcharge);
        exit_code = emit(klr::cli::run_crystal(gq));
    });

    // tables
    auto* tables = app.add_subcommand("tables", "re-derive the reference dimension tables");
    std::string selector = "all";
    int jobs = 1;
    tables->add_option("selector", selector,
                       "all, tame-table, onedelta, xik2, xik4 or twodelta");
    tables->add_option("--jobs", jobs, "worker threads across table checks")
        ->envname("KLR_JOBS")
        ->check(CLI::PositiveNumber);
    tables->callback([&] { exit_code = emit(klr::cli::run_tables(selector, jobs)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}
