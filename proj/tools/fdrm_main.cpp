#include "fdrm/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fdrm;
using nlohmann::json;

// Splits a prime power into (p, e); anything else is a usage error.
std::pair<int, int> factor_prime_power(long long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int e = 0;
    long long r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw std::invalid_argument("q must be a prime power");
    return {(int)p, e};
}

FieldPtr field_for(long long q) {
    auto [p, e] = factor_prime_power(q);
    return Field::get(p, e);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
}

std::string format_set(const std::vector<int>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

int run_tdelta(const std::string& diagram, const std::string& profile_path, int delta) {
    if (!diagram.empty()) {
        auto res = tdelta_ferrers(FerrersDiagram::parse(diagram), delta);
        std::cout << res.value << " (i=" << res.argmin_i << ")\n";
    } else {
        Profile P = profile_from_json(read_json_file(profile_path));
        auto res = tdelta_profile(P, delta);
        std::cout << res.value << " (I=" << format_set(res.lines.rows)
                  << ", J=" << format_set(res.lines.cols) << ")\n";
    }
    return 0;
}

int run_construct(const std::string& diagram, int delta, long long q, const std::string& method,
                  const std::string& out_path) {
    FerrersDiagram F = FerrersDiagram::parse(diagram);
    FieldPtr f = field_for(q);
    ConstructionResult res{MatrixSpace(f, F.k(), F.m()), method,
                           tdelta_ferrers(F, delta).value, false, false};
    if (method == "auto") {
        res = construct_auto(F, delta, f);
    } else if (method == "mrd") {
        for (int r : F.row_cards())
            if (r != F.m())
                throw std::invalid_argument("--method mrd needs a full rectangular diagram");
        res.space = mrd(f, F.k(), F.m(), delta);
    } else if (method == "intersect") {
        res.space = intersect_construction(F, delta, f);
    } else if (method == "diagonal") {
        res.space = diagonal_construction(F, delta, f);
    } else if (method == "square") {
        if (delta != F.k() || F.k() != F.m())
            throw std::invalid_argument("--method square needs delta = k = m");
        std::string tag;
        res.space = square_construction(F, f, &tag);
        res.method = tag;
    } else {
        throw std::invalid_argument("unknown method " + method);
    }
    res.attains_bound = res.space.dim() == res.tdelta;
    write_output(to_json(res), out_path);
    return 0;
}

int run_anticode(const std::string& diagram, const std::string& profile_path, int delta,
                 long long q, const std::string& out_path) {
    Profile P = diagram.empty() ? profile_from_json(read_json_file(profile_path))
                                : Profile::from_diagram(FerrersDiagram::parse(diagram));
    auto res = anticode_max(P, delta, field_for(q));
    write_output(to_json(res), out_path);
    return 0;
}

int run_verify(const std::string& space_path, int delta, bool anticode, const std::string& mode,
               long long samples, unsigned seed, int jobs) {
    MatrixSpace S = space_from_json(read_json_file(space_path));
    VerifyMode vm;
    if (mode == "exhaustive")
        vm = VerifyMode::exhaustive;
    else if (mode == "sample")
        vm = VerifyMode::sample;
    else
        throw std::invalid_argument("mode must be exhaustive or sample");
    VerifyReport rep = anticode ? verify_anticode(S, delta, vm, samples, seed, jobs)
                                : verify_delta_space(S, delta, vm, samples, seed, jobs);
    std::cout << to_json(rep).dump(2) << "\n";
    return rep.ok ? 0 : 1;
}

int run_lexicode(int n, int k, int d, std::string seed_bits) {
    if (seed_bits.empty()) seed_bits = std::string(k, '1') + std::string(n - k, '0');
    for (const auto& w : lexicode(n, k, d, PivotVector(seed_bits))) std::cout << w.bits() << "\n";
    return 0;
}

int run_multilevel(int n, int k, int delta, long long q, const std::string& pivots_path,
                   const std::string& distance, long long pairs, unsigned seed,
                   const std::string& emit_path, int jobs) {
    (void)jobs;
    std::ifstream in(pivots_path);
    if (!in) throw std::invalid_argument("cannot open " + pivots_path);
    std::vector<PivotVector> pivots;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        PivotVector v(line);
        if (v.n() != n || v.weight() != k)
            throw std::invalid_argument("pivot " + line + " does not have length n and weight k");
        pivots.push_back(std::move(v));
    }
    SubspaceCode C = multilevel_build(pivots, delta, field_for(q));
    DistanceCertificate cert;
    if (distance == "structured")
        cert = min_distance_structured(C);
    else if (distance == "exact")
        cert = min_distance_exact(C);
    else if (distance == "sampled")
        cert = min_distance_sampled(C, pairs, seed);
    else
        throw std::invalid_argument("distance must be structured, exact or sampled");
    std::cout << code_summary_json(C, cert).dump(2) << "\n";
    if (!emit_path.empty()) {
        json words = json::array();
        for (size_t i = 0; i < C.levels.size(); ++i)
            for (const auto& N : level_codewords(C, (int)i)) words.push_back(to_json(N));
        std::ofstream out(emit_path);
        if (!out) throw std::invalid_argument("cannot write " + emit_path);
        out << words.dump(2) << "\n";
    }
    return 0;
}

int run_table(long long q) {
    factor_prime_power(q);
    for (const auto& row : table_rows())
        std::cout << "n=" << row.n << " k=" << row.k << " delta=" << row.delta
                  << " |C|=" << eval_table_row(row, q).get_str() << " = "
                  << table_row_poly_text(row) << "\n";
    return 0;
}

int run_search(const std::string& diagram, int delta, long long q, long long budget) {
    auto res = search_max_dim(FerrersDiagram::parse(diagram), delta, field_for(q), budget);
    std::cout << to_json(res).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-metric codes on Ferrers diagrams: constructions, anticodes, "
                 "multilevel subspace codes and brute-force certification"};
    app.require_subcommand(1);

    std::string diagram, profile_path, method = "auto", out_path, space_path, mode = "exhaustive";
    std::string seed_bits, pivots_path, distance = "structured", emit_path;
    int delta = 1, n = 0, k = 0, d = 0, jobs = 1;
    long long q = 2, samples = 10000, pairs = 10000, budget = 5'000'000;
    unsigned seed = 1;
    bool anticode = false;

    auto* c_tdelta = app.add_subcommand("tdelta", "Dimension bound of a diagram or profile");
    auto* td_d = c_tdelta->add_option("--diagram", diagram, "Diagram text, e.g. 6,3,2,2@6");
    auto* td_p = c_tdelta->add_option("--profile", profile_path, "Profile JSON file");
    c_tdelta->add_option("--delta", delta, "Minimum rank")->required();
    td_d->excludes(td_p);

    auto* c_construct = app.add_subcommand("construct", "Build a minimum-rank space on a diagram");
    c_construct->add_option("--diagram", diagram)->required();
    c_construct->add_option("--delta", delta)->required();
    c_construct->add_option("--q", q)->required();
    c_construct->add_option("--method", method, "auto|mrd|intersect|diagonal|square");
    c_construct->add_option("--out", out_path, "Also write the JSON result here");

    auto* c_anticode = app.add_subcommand("anticode", "Build a maximum bounded-rank space");
    auto* ac_d = c_anticode->add_option("--diagram", diagram);
    auto* ac_p = c_anticode->add_option("--profile", profile_path);
    c_anticode->add_option("--delta", delta)->required();
    c_anticode->add_option("--q", q)->required();
    c_anticode->add_option("--out", out_path);
    ac_d->excludes(ac_p);

    auto* c_verify = app.add_subcommand("verify", "Check the rank of every element of a space");
    c_verify->add_option("--space", space_path, "MatrixSpace JSON file")->required();
    c_verify->add_option("--delta", delta)->required();
    c_verify->add_flag("--anticode", anticode, "Require rank <= delta instead of >= delta");
    c_verify->add_option("--mode", mode, "exhaustive|sample");
    c_verify->add_option("--samples", samples);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--jobs", jobs);

    auto* c_lexicode = app.add_subcommand("lexicode", "Greedy constant-weight binary code");
    c_lexicode->add_option("--n", n)->required();
    c_lexicode->add_option("--k", k)->required();
    c_lexicode->add_option("--d", d)->required();
    c_lexicode->add_option("--seed", seed_bits, "First codeword (default 1^k 0^(n-k))");

    auto* c_multilevel = app.add_subcommand("multilevel", "Assemble a subspace code from pivots");
    c_multilevel->add_option("--n", n)->required();
    c_multilevel->add_option("--k", k)->required();
    c_multilevel->add_option("--delta", delta)->required();
    c_multilevel->add_option("--q", q)->required();
    c_multilevel->add_option("--pivots", pivots_path, "File of 0/1 lines")->required();
    c_multilevel->add_option("--distance", distance, "structured|exact|sampled");
    c_multilevel->add_option("--pairs", pairs, "Pair count for sampled distance");
    c_multilevel->add_option("--seed", seed);
    c_multilevel->add_option("--emit", emit_path, "Write all codewords to this JSON file");
    c_multilevel->add_option("--jobs", jobs);

    auto* c_table = app.add_subcommand("table", "Reference subspace-code cardinalities");
    c_table->add_option("--q", q)->required();

    auto* c_search = app.add_subcommand("search", "Exhaustive maximum-dimension search");
    c_search->add_option("--diagram", diagram)->required();
    c_search->add_option("--delta", delta)->required();
    c_search->add_option("--q", q)->required();
    c_search->add_option("--budget", budget, "Node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_tdelta->parsed()) {
            if (diagram.empty() && profile_path.empty())
                throw std::invalid_argument("need --diagram or --profile");
            return run_tdelta(diagram, profile_path, delta);
        }
        if (c_construct->parsed()) return run_construct(diagram, delta, q, method, out_path);
        if (c_anticode->parsed()) {
            if (diagram.empty() && profile_path.empty())
                throw std::invalid_argument("need --diagram or --profile");
            return run_anticode(diagram, profile_path, delta, q, out_path);
        }
        if (c_verify->parsed())
            return run_verify(space_path, delta, anticode, mode, samples, seed, jobs);
        if (c_lexicode->parsed()) return run_lexicode(n, k, d, seed_bits);
        if (c_multilevel->parsed())
            return run_multilevel(n, k, delta, q, pivots_path, distance, pairs, seed, emit_path,
                                  jobs);
        if (c_table->parsed()) return run_table(q);
        if (c_search->parsed()) return run_search(diagram, delta, q, budget);
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
