// Command-line front end: solve / verify / search / catalog / batch.
// Exit codes: 0 solved or OK, 1 usage or parse error, 2 nonexistent,
// 3 unknown, 4 certificate failure.
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "opstar/catalog.hpp"
#include "opstar/document.hpp"
#include "opstar/solver.hpp"

namespace {

using namespace opstar;

constexpr int kExitSolved = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonexistent = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitBadCertificate = 4;

std::string witness_name(SolveOutcome::Witness w) {
    switch (w) {
        case SolveOutcome::Witness::KnownException: return "known-exception";
        case SolveOutcome::Witness::ExhaustiveSearchLog: return "exhaustive-search";
        case SolveOutcome::Witness::OpenCase: return "open-case";
        case SolveOutcome::Witness::BudgetExhausted: return "budget-exhausted";
        default: return "none";
    }
}

std::string type_name(const CycleType& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s;
}

int emit_outcome(const SolveOutcome& o, const std::string& format, bool trace) {
    if (trace) std::cerr << "trace: " << to_string(o.trace) << "\n";
    if (o.status == SolveOutcome::Status::Solved) {
        SolutionDocument doc = make_document(o);
        if (!doc.certified) {
            std::cerr << "internal error: solution failed certification\n";
            return kExitBadCertificate;
        }
        std::cout << (format == "text" ? to_text(doc) : to_json(doc));
        return kExitSolved;
    }
    const bool nonex = o.status == SolveOutcome::Status::Nonexistent;
    const std::string status = nonex ? "nonexistent" : "unknown";
    if (format == "text")
        std::cout << "status: " << status << "\nreason: " << witness_name(o.witness) << "\n";
    else
        std::cout << "{\n  \"status\": \"" << status << "\",\n  \"reason\": \""
                  << witness_name(o.witness) << "\"\n}\n";
    return nonex ? kExitNonexistent : kExitUnknown;
}

SearchBudget make_budget(unsigned seed, long long nodes, const std::string& cache_dir) {
    SearchBudget b;
    b.seed = seed;
    if (nodes > 0) {
        b.starter_nodes = nodes;
        b.exhaustive_nodes = nodes;
    }
    b.cache_dir = cache_dir;
    return b;
}

int run_batch(int min_n, int max_n, unsigned seed, unsigned jobs) {
    const std::vector<CycleType> types = enumerate_cycle_types(min_n, max_n);
    struct Row {
        std::string verdict, strategy;
        long long millis = 0;
    };
    std::vector<Row> rows(types.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < types.size();) {
            SearchBudget b = make_budget(seed, 0, "-");  // no cache: parallel workers
            auto t0 = std::chrono::steady_clock::now();
            SolveOutcome o = solve(types[i], b);
            auto dt = std::chrono::steady_clock::now() - t0;
            Row& r = rows[i];
            r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
            switch (o.status) {
                case SolveOutcome::Status::Solved:
                    r.verdict = verify_decomposition(o.dec, types[i]).ok ? "solved"
                                                                         : "certificate-failed";
                    break;
                case SolveOutcome::Status::Nonexistent: r.verdict = "nonexistent"; break;
                default: r.verdict = "unknown"; break;
            }
            r.strategy = o.trace.empty() ? "" : o.trace.front().rule;
        }
    };
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    std::cout << "type,verdict,strategy,millis\n";
    for (size_t i = 0; i < types.size(); ++i)
        std::cout << '"' << type_name(types[i]) << "\"," << rows[i].verdict << ','
                  << rows[i].strategy << ',' << rows[i].millis << '\n';
    for (const Row& r : rows)
        if (r.verdict == "certificate-failed") return kExitBadCertificate;
    return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructive solver and verifier for decompositions of the complete "
                 "symmetric digraph into 2-factors of a fixed cycle type"};
    app.require_subcommand(1);

    std::vector<int> lengths;
    std::string format = "json", cache_dir, path;
    unsigned seed = 1, jobs = 0;
    long long budget = 0;
    bool trace = false, list_only = false;
    int max_n = 13, min_n = 2, exhaust_cap = 10;

    CLI::App* c_solve = app.add_subcommand("solve", "Solve one instance");
    c_solve->add_option("lengths", lengths, "cycle lengths (each >= 2)")->required();
    c_solve->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    c_solve->add_option("--budget", budget, "search node budget");
    c_solve->add_option("--seed", seed, "seed for all randomized search");
    c_solve->add_option("--cache-dir", cache_dir, "result cache directory ('-' disables)");
    c_solve->add_flag("--trace", trace, "print the strategy trace to stderr");

    CLI::App* c_verify = app.add_subcommand("verify", "Verify a solution document");
    c_verify->add_option("path", path, "JSON solution document")->required();

    CLI::App* c_search = app.add_subcommand("search", "Search without constructions");
    c_search->add_option("lengths", lengths)->required();
    c_search->add_option("--budget", budget, "search node budget");
    c_search->add_option("--seed", seed);
    c_search->add_option("--exhaust-cap", exhaust_cap, "max order for full exhaustion");
    c_search->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    c_search->add_flag("--trace", trace);

    CLI::App* c_catalog = app.add_subcommand("catalog", "Inspect the starter catalog");
    c_catalog->add_flag("--list", list_only, "list all catalog types");
    c_catalog->add_option("lengths", lengths);
    c_catalog->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI::App* c_batch = app.add_subcommand("batch", "Solve every type up to an order");
    c_batch->add_option("--max-n", max_n)->required();
    c_batch->add_option("--min-n", min_n);
    c_batch->add_option("--seed", seed);
    c_batch->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_solve) {
            for (int m : lengths)
                if (m < 2) {
                    std::cerr << "usage error: cycle lengths must be >= 2\n";
                    return kExitUsage;
                }
            return emit_outcome(solve(lengths, make_budget(seed, budget, cache_dir)), format,
                                trace);
        }
        if (*c_verify) {
            std::ifstream in(path);
            if (!in) {
                std::cerr << "cannot open " << path << "\n";
                return kExitUsage;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            SolutionDocument doc;
            try {
                doc = from_json(ss.str());
            } catch (const OpError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitUsage;
            }
            CertificateReport rep =
                verify_decomposition(document_decomposition(doc), doc.cycle_type);
            if (rep.ok) {
                std::cout << "certificate ok: OP*(" << type_name(doc.cycle_type) << "), "
                          << doc.factors.size() << " factors\n";
                return kExitSolved;
            }
            for (const auto& [kind, detail] : rep.failures)
                std::cout << to_string(kind) << ": " << detail << "\n";
            return kExitBadCertificate;
        }
        if (*c_search) {
            for (int m : lengths)
                if (m < 2) {
                    std::cerr << "usage error: cycle lengths must be >= 2\n";
                    return kExitUsage;
                }
            return emit_outcome(
                brute_force_search(lengths, make_budget(seed, budget, "-"), exhaust_cap), format,
                trace);
        }
        if (*c_catalog) {
            if (list_only || lengths.empty()) {
                for (const CycleType& t : catalog_types()) std::cout << type_name(t) << "\n";
                return kExitSolved;
            }
            std::optional<CatalogEntry> e = catalog_lookup(canonical_type(lengths));
            if (!e) {
                std::cerr << "type is not in the catalog\n";
                return kExitUnknown;
            }
            SolveOutcome o;
            o.status = SolveOutcome::Status::Solved;
            o.dec = catalog_expand(*e);
            o.trace.push_back({"catalog", canonical_type(lengths), {}});
            return emit_outcome(o, format, trace);
        }
        if (*c_batch) return run_batch(min_n, max_n, seed, jobs);
    } catch (const OpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
