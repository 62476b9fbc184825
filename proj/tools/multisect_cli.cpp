/**
 * Command-line interface: verification suites, handle-decomposition tables,
 * and cube-complex checks for the symmetric multisections of T^n.
 *
 * Exit codes: 0 all selected checks pass, 1 a check or comparison failed,
 * 2 configuration error (bad flags, or an exhaustive run that would not
 * terminate at desk scale).  MULTISECT_THREADS caps internal parallelism.
 */
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "multisect/attachment.hpp"
#include "multisect/central.hpp"
#include "multisect/cubulation.hpp"
#include "multisect/euler.hpp"
#include "multisect/handles.hpp"
#include "multisect/identities.hpp"
#include "multisect/multisection.hpp"

using namespace multisect;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int thread_cap() {
    if (const char* env = std::getenv("MULTISECT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

struct Config {
    int k = 0;
    int n = 0;
    std::vector<int> I;
    std::string suite = "all";
    std::string depth = "symbolic";
    std::string format = "text";
    std::string order = "value";
    std::string golden;
    std::string sigma;
    std::string file;
    int limit = -1;
};

/// Reconcile --k and --n (n = 2k-1); returns false on contradiction.
bool resolve_dims(Config& cfg, std::string& err) {
    if (cfg.n && cfg.n % 2 == 0) {
        err = "--n must be odd (n = 2k-1)";
        return false;
    }
    if (cfg.n && !cfg.k) cfg.k = (cfg.n + 1) / 2;
    if (cfg.k && !cfg.n) cfg.n = 2 * cfg.k - 1;
    if (cfg.k && cfg.n != 2 * cfg.k - 1) {
        err = "--k and --n disagree (need n = 2k-1)";
        return false;
    }
    return true;
}

// -------------------------------------------------------------------------
// verify
// -------------------------------------------------------------------------

struct Suite {
    bool all_pass = true;
    void line(bool pass, const std::string& name, const std::string& detail) {
        std::cout << (pass ? "[pass] " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        all_pass = all_pass && pass;
    }
};

void run_cover(Suite& s, int k) {
    const auto rep = verify_cover(k);
    long long expect = 1;
    for (int i = 0; i < 2 * k - 2; ++i) expect *= k;
    bool sizes_ok = true;
    std::ostringstream d;
    d << "k=" << k << " sizes";
    for (long long v : rep.sizes) {
        sizes_ok = sizes_ok && v == expect;
        d << ' ' << v;
    }
    d << " (want " << expect << " each)";
    s.line(rep.covers && rep.partitions && sizes_ok, "cover/partition", d.str());
}

void run_xi(Suite& s, int k, const std::vector<IndexSet>& sets, bool exhaustive) {
    std::vector<std::string> details(sets.size());
    std::vector<char> ok(sets.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < sets.size(); i = next++) {
            const auto& I = sets[i];
            const auto formula = formula_XI(k, I);
            bool pass;
            std::ostringstream d;
            d << "k=" << k << " I={";
            for (size_t t = 0; t < I.elems.size(); ++t) d << (t ? "," : "") << I.elems[t];
            d << "} " << formula.size() << " faces";
            if (exhaustive) {
                pass = formula == oracle_XI(k, I) && oracle_XI_dim_sharp(k, I);
                d << (pass ? ", formula = oracle, dim sharp" : ", MISMATCH vs oracle");
            } else {
                const auto sum = complex_summary(formula, k);
                pass = sum.top_dim == 2 * k - I.ell();
                d << ", top dim " << sum.top_dim << " (want " << 2 * k - I.ell() << ")";
            }
            details[i] = d.str();
            ok[i] = pass;
        }
    };
    std::vector<std::thread> pool;
    const int nt = std::min<int>(thread_cap(), (int)sets.size());
    for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (size_t i = 0; i < sets.size(); ++i) s.line(ok[i], "X_I", details[i]);
}

void run_identities(Suite& s, int k) {
    const auto c1 = combo1(k);
    s.line(c1.holds(), "combo1",
           "k=" + std::to_string(k) + " nested sum = k^(n-1) = spanning trees of K_{k,k}");
    const auto c2 = combo2(k, k <= 4);
    s.line(c2.holds(), "combo2", "k=" + std::to_string(k) + " binomial identity");
}

void run_negative(Suite& s, int n) {
    if (n >= 5) {
        const auto rep = negative_handle_partition(n);
        s.line(rep.dim_X0_Xlast == 2 && rep.union_form_ok, "handle-partition control",
               "n=" + std::to_string(n) + " dim(X_0 ∩ X_{k'-1}) = " +
                   std::to_string(rep.dim_X0_Xlast) + " (too big, as expected)");
    }
    if (n == 5) {
        const auto rep = negative_sum_decomposition();
        s.line(rep.covers && rep.dim_X0_X2 == 3, "coordinate-sum control",
               "dim(X_0 ∩ X_2) = " + std::to_string(rep.dim_X0_X2) + " (trisection needs 2)");
    }
}

void run_order(Suite& s) {
    // Removing i from V moves the set earlier iff #{j in V : j > i} is even.
    bool ok = true;
    for (int m = 1; m <= 5 && ok; ++m) {
        std::vector<int> V(m);
        for (int i = 0; i < m; ++i) V[i] = i + 1;
        for (int i : V) {
            std::vector<int> W;
            for (int j : V)
                if (j != i) W.push_back(j);
            const int above = (int)std::count_if(V.begin(), V.end(), [&](int j) { return j > i; });
            if (eorder_less(W, V) != (above % 2 == 0)) ok = false;
        }
    }
    s.line(ok, "ordering law", "parity criterion, |V| <= 5");
}

int cmd_verify(const Config& cfg0) {
    Config cfg = cfg0;
    std::string err;
    if (!resolve_dims(cfg, err)) {
        std::cerr << "error: " << err << "\n";
        return kExitConfig;
    }
    if (!cfg.k) cfg.k = 3;
    cfg.n = 2 * cfg.k - 1;
    const bool exhaustive = cfg.depth == "exhaustive";
    if (exhaustive && cfg.n >= 9) {
        std::cerr << "error: exhaustive verification is refused for n >= 9 "
                  << "(the k^n lattice does not fit a desk-scale run)\n";
        return kExitConfig;
    }

    Suite s;
    if (cfg.suite == "cover" || cfg.suite == "all") run_cover(s, cfg.k);
    if (cfg.suite == "xi" || cfg.suite == "all") {
        std::vector<IndexSet> sets;
        if (!cfg.I.empty()) {
            auto [simple, shift] = IndexSet(cfg.k, cfg.I).canonicalize();
            if (shift)
                std::cerr << "note: index set canonicalized (shift " << shift << ")\n";
            sets.push_back(simple);
        } else {
            for (const auto& I : IndexSet::all_simple_proper(cfg.k)) sets.push_back(I);
        }
        run_xi(s, cfg.k, sets, exhaustive);
    }
    if (cfg.suite == "identities" || cfg.suite == "all") run_identities(s, cfg.k);
    if (cfg.suite == "negative" || cfg.suite == "all") run_negative(s, cfg.n);
    if (cfg.suite == "order" || cfg.suite == "all") run_order(s);
    return s.all_pass ? kExitPass : kExitFail;
}

// -------------------------------------------------------------------------
// handles
// -------------------------------------------------------------------------

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

/// Golden table rows with the documented misprint corrections applied.
std::vector<std::string> golden_with_errata(const std::string& dir, const std::string& table) {
    auto rows = split_lines(slurp_file(dir + "/golden/" + table + ".csv"));
    std::map<int, std::string> fixes;
    for (const auto& row : split_lines(slurp_file(dir + "/golden/errata.csv"))) {
        std::istringstream is(row);
        std::string t, z, printed, corrected;
        std::getline(is, t, ',');
        std::getline(is, z, ',');
        std::getline(is, printed, ',');
        std::getline(is, corrected, ',');
        if (t == table) fixes[std::stoi(z)] = corrected;
    }
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto fix = fixes.find(std::stoi(rows[i]));
        if (fix == fixes.end()) continue;
        const auto second_comma = rows[i].find(',', rows[i].find(',') + 1);
        rows[i] = rows[i].substr(0, second_comma + 1) + fix->second;
    }
    return rows;
}

/// Text table in the published column order: J, i*, U, V, V-, Y_z^*, h, z, glue to.
void print_text_table(const std::vector<HandleRecord>& records) {
    using handle_detail::int_list_str;
    std::vector<std::array<std::string, 9>> rows;
    rows.push_back({"J", "i*", "U", "V", "V-", "Y_z^*", "h", "z", "glue to"});
    for (const auto& r : records)
        rows.push_back({int_list_str(r.desc.J, ' '), std::to_string(r.desc.i_star),
                        int_list_str(r.desc.U, ' '), int_list_str(r.desc.V, ' '),
                        int_list_str(r.desc.Vminus, ' '), rep_str(r), std::to_string(r.h),
                        std::to_string(r.z), int_list_str(r.glue, ';')});
    std::array<size_t, 9> width{};
    for (const auto& row : rows)
        for (int c = 0; c < 9; ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        for (int c = 0; c < 9; ++c)
            std::cout << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
        std::cout << "\n";
    }
}

int cmd_handles(const Config& cfg0) {
    Config cfg = cfg0;
    std::string err;
    if (!resolve_dims(cfg, err) || !cfg.k) {
        std::cerr << "error: " << (err.empty() ? "--k or --n required" : err) << "\n";
        return kExitConfig;
    }
    IndexSet I(cfg.k, cfg.I);
    auto [simple, shift] = I.canonicalize();
    if (shift) {
        std::cerr << "note: I canonicalized to the simple translate {";
        for (size_t t = 0; t < simple.elems.size(); ++t)
            std::cerr << (t ? "," : "") << simple.elems[t];
        std::cerr << "} (shift " << shift << "); X_I is its translate by (" << shift << ",...,"
                  << shift << ")\n";
    }
    if (simple.full()) {
        std::cerr << "error: I must be proper (use the central decomposition for I = Z_k)\n";
        return kExitConfig;
    }
    const auto policy = cfg.order == "offset" ? OrderPolicy::OffsetMajor : OrderPolicy::ValueAsc;
    const auto records = decompose(simple, policy, cfg.limit);

    if (!cfg.golden.empty()) {
        const auto want = golden_with_errata(MULTISECT_DATA_DIR, cfg.golden);
        auto have = split_lines(golden_csv(std::vector<HandleRecord>(
            records.begin(),
            records.begin() + std::min(records.size(), want.empty() ? size_t(0) : want.size() - 1))));
        bool match = want.size() == have.size() + 0;
        size_t diffs = 0;
        for (size_t i = 0; i < std::min(want.size(), have.size()); ++i)
            if (want[i] != have[i]) {
                if (++diffs <= 10)
                    std::cerr << "diff line " << i << ":\n  golden:   " << want[i]
                              << "\n  computed: " << have[i] << "\n";
                match = false;
            }
        if (want.size() != have.size()) {
            std::cerr << "row count: golden " << want.size() - 1 << ", computed "
                      << have.size() - 1 << "\n";
            match = false;
        }
        std::cout << (match ? "golden match: " : "golden MISMATCH: ") << cfg.golden << " ("
                  << records.size() << " rows computed)\n";
        return match ? kExitPass : kExitFail;
    }

    if (cfg.format == "csv")
        std::cout << records_csv(records);
    else if (cfg.format == "json")
        std::cout << records_json(records);
    else
        print_text_table(records);
    return kExitPass;
}

// -------------------------------------------------------------------------
// cubulate
// -------------------------------------------------------------------------

std::vector<int> parse_sigma(const std::string& text, int n, std::string& err) {
    if (text == "identity") {
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        return id;
    }
    std::vector<int> v;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(std::stoi(tok));
    if ((int)v.size() != n) {
        err = "--sigma needs " + std::to_string(n) + " entries";
        return {};
    }
    // Accept 0-based (contains 0) or 1-based (contains n) images.
    if (std::find(v.begin(), v.end(), 0) == v.end() &&
        std::find(v.begin(), v.end(), n) != v.end())
        for (int& x : v) --x;
    if (!is_permutation(v)) {
        err = "--sigma is not a permutation";
        return {};
    }
    return v;
}

int cmd_cubulate(const Config& cfg0) {
    Config cfg = cfg0;
    DirectedCubeComplex c;
    if (!cfg.file.empty()) {
        try {
            c = parse_complex(slurp_file(cfg.file));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitFail;
        }
    } else if (!cfg.sigma.empty()) {
        if (!cfg.n) {
            std::cerr << "error: --sigma needs --n\n";
            return kExitConfig;
        }
        std::string err;
        const auto sigma = parse_sigma(cfg.sigma, cfg.n, err);
        if (!err.empty()) {
            std::cerr << "error: " << err << "\n";
            return kExitConfig;
        }
        c = from_permutation(cfg.n, sigma);
        if (!permutation_even(sigma))
            std::cout << "note: sigma is odd (the twist construction assumes even sigma)\n";
    } else {
        std::cerr << "error: give --file or --sigma\n";
        return kExitConfig;
    }

    const auto val = validate_directed(c);
    if (!val.ok) {
        std::cout << "invalid directed cube complex:\n";
        for (const auto& v : val.violations) std::cout << "  - " << v << "\n";
        return kExitFail;
    }
    std::cout << "valid directed cube complex: n=" << c.n << " cubes=" << c.cubes
              << "; quotient cells by dim:";
    for (auto v : val.cells_by_dim) std::cout << ' ' << v;
    std::cout << "\n";

    bool ok = true;
    if (c.n == 3) {
        const auto link = vertex_link_check(c);
        std::cout << "vertex links: " << (link.ok ? "all 2-spheres" : "NOT all 2-spheres");
        for (const auto& l : link.links) std::cout << " (chi=" << l.chi << ")";
        std::cout << "\n";
        ok = ok && link.ok;
    }
    const auto h1 = homology_h1(c);
    std::cout << "H_1 = ";
    if (h1.rank == 0 && h1.torsion.empty()) std::cout << "0";
    for (long long i = 0; i < h1.rank; ++i) std::cout << (i ? " + Z" : "Z");
    for (long long t : h1.torsion) std::cout << " + Z/" << t;
    std::cout << "  (d.d = 0: " << (h1.boundary_squares_zero ? "yes" : "NO") << ")\n";
    ok = ok && h1.valid && h1.boundary_squares_zero;

    const int k = cfg.k ? cfg.k : (c.n + 1) / 2;
    if (c.n == 2 * k - 1) {
        const auto lift = lift_multisection(c, k);
        std::cout << "lifted multisection (k=" << k
                  << "): boundary match " << (lift.boundary_match ? "yes" : "NO") << "\n";
        for (int i = 0; i < (int)lift.pieces.size(); ++i) {
            const auto& p = lift.pieces[i];
            std::cout << "  X'_" << i << ": chi=" << p.chi << " components=" << p.components;
            if (p.genus) std::cout << " genus=" << *p.genus;
            std::cout << "\n";
        }
        ok = ok && lift.boundary_match;
    }
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric multisections of odd-dimensional tori: verification and tables"};
    app.require_subcommand(1);
    Config cfg;

    auto add_dims = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "pieces (torus side length)");
        sub->add_option("--n", cfg.n, "dimension, n = 2k-1 (odd)");
    };

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_dims(verify);
    verify->add_option("--suite", cfg.suite, "cover|xi|identities|negative|order|all")
        ->check(CLI::IsMember({"cover", "xi", "identities", "negative", "order", "all"}));
    verify->add_option("--I", cfg.I, "restrict the xi suite to one index set")->delimiter(',');
    verify->add_option("--depth", cfg.depth, "symbolic|exhaustive")
        ->check(CLI::IsMember({"symbolic", "exhaustive"}));

    auto* handles = app.add_subcommand("handles", "emit a handle-decomposition table");
    add_dims(handles);
    handles->add_option("--I", cfg.I, "index set, e.g. 0,2")->delimiter(',')->required();
    handles->add_option("--order", cfg.order, "value|offset row ordering")
        ->check(CLI::IsMember({"value", "offset"}));
    handles->add_option("--limit", cfg.limit, "emit only the first rows");
    handles->add_option("--format", cfg.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    handles->add_option("--golden", cfg.golden, "compare against a golden table (basename)");

    auto* cubulate = app.add_subcommand("cubulate", "validate a directed cube complex");
    add_dims(cubulate);
    cubulate->add_option("--sigma", cfg.sigma, "'identity' or comma-separated permutation");
    cubulate->add_option("--file", cfg.file, "cube-complex text file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg);
        if (handles->parsed()) return cmd_handles(cfg);
        if (cubulate->parsed()) return cmd_cubulate(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
