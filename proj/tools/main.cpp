#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "domino/corner.hpp"
#include "domino/counting.hpp"
#include "domino/families.hpp"
#include "domino/reduction.hpp"
#include "domino/verify.hpp"

using namespace domino;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kFrontier = 3, kDisagree = 4, kMismatch = 5 };

Region load_region(const std::string& arg) {
    if (arg.find(':') != std::string::npos) return FamilySpec::parse(arg).build();
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + arg + "'");
    std::stringstream text;
    text << in.rdbuf();
    return parse_region_auto(text.str());
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

int run_count(const std::string& input, const std::string& method) {
    const Region r = load_region(input);
    if (method == "brute") {
        std::cout << count_tilings_bruteforce(r) << '\n';
    } else if (method == "kasteleyn") {
        if (r.size() != std::size_t(r.width()) * std::size_t(r.height()))
            throw std::runtime_error("the product formula needs a full rectangle");
        std::cout << kasteleyn_rectangle(r.height(), r.width()) << '\n';
    } else {
        std::cout << count_tilings(r) << '\n';
    }
    return kOk;
}

int run_residue(const std::string& input, int m, const std::string& method, const std::string& trace_path,
                bool parity_recursion) {
    if (method != "dp" && m != 2 && m != 4) {
        std::cerr << "error: --method " << method << " needs --mod 2 or 4\n";
        return kParse;
    }
    const Region r = load_region(input);
    ReduceOptions opts;
    opts.parity_recursion = parity_recursion || m == 2;
    Trace trace;
    auto reduced = [&] { return m == 4 ? residue_mod4(r, opts, &trace) : residue_mod2(r, opts, &trace); };

    int value = 0;
    if (method == "dp") {
        value = residue(r, m).value;
    } else if (method == "reduce") {
        value = reduced().value;
    } else {
        const int dp = residue(r, m).value;
        value = reduced().value;
        if (dp != value) {
            std::cerr << "error: dp gives " << dp << ", reduction gives " << value << '\n';
            return kDisagree;
        }
        std::cerr << "trace steps: " << trace.steps.size() << '\n';
    }
    if (!trace_path.empty()) emit(trace_path, trace.to_json() + "\n");
    std::cout << value << '\n';
    return kOk;
}

int run_corners(const std::string& input, int p_max, bool pairs) {
    const Region r = load_region(input);
    for (const auto& c : find_corners(r, p_max)) std::cout << to_string(c) << '\n';
    if (pairs)
        for (const auto& pr : certified_pairs(r, p_max)) std::cout << "pair " << to_string(pr) << '\n';
    return kOk;
}

int run_axes(const std::string& input) {
    for (const auto& a : find_symmetry_axes(load_region(input))) std::cout << to_string(a) << '\n';
    return kOk;
}

int run_gen(const std::string& spec, const std::string& format) {
    const Region r = FamilySpec::parse(spec).build();
    std::cout << (format == "json" ? region_to_json(r) + "\n" : render_region(r));
    return kOk;
}

int run_verify(const std::string& theorem_name, const std::string& suite, int max_cells, std::uint64_t seed,
               int fuzz_count, const std::string& out) {
    const auto theorem = parse_theorem(theorem_name);
    if (!theorem) {
        std::cerr << "error: unknown theorem '" << theorem_name << "'\n";
        return kParse;
    }
    const auto corpus = suite == "families" ? family_corpus(max_cells > 0 ? max_cells : 60)
                                            : fuzz_corpus(seed, fuzz_count, max_cells > 0 ? max_cells : 36);
    const auto rows = verify_theorem(*theorem, corpus);
    emit(out, to_csv(rows));
    const auto failures = std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.pass(); });
    std::cerr << rows.size() << " instances, " << failures << " failures\n";
    return failures ? kMismatch : kOk;
}

int run_table(char family, char variant, int kmax, int pmax, int max_cells, bool summary, const std::string& out) {
    struct Entry {
        int k, p;
        std::size_t cells;
        int closed, exact;
    };
    std::vector<Entry> entries;
    for (int k = 1; k <= kmax; ++k)
        for (int p = 1; p <= pmax; ++p) {
            const Region r = family == 'T' ? t_variant_region(variant, k, p) : d_variant_region(variant, k, p);
            if (max_cells > 0 && int(r.size()) > max_cells) continue;
            const int closed = (family == 'T' ? t_residue(variant, k, p) : d_residue(variant, k, p)).value;
            entries.push_back({k, p, r.size(), closed, residue(r, 4).value});
        }
    int mismatches = 0;
    for (const auto& e : entries)
        if (e.closed != e.exact) {
            ++mismatches;
            std::cerr << "mismatch: " << family << '(' << variant << ") k=" << e.k << " p=" << e.p
                      << " closed form " << e.closed << ", exact " << e.exact << '\n';
        }

    std::string text;
    if (summary) {
        // D(b) depends on p only through its parity; other tables get one row per p.
        const bool by_parity = family == 'D' && variant == 'b';
        std::map<std::string, std::map<int, int>> rows;
        std::vector<std::string> order;
        for (const auto& e : entries) {
            const std::string name = by_parity ? (e.p % 2 ? "p odd" : "p even") : "p=" + std::to_string(e.p);
            if (!rows.count(name)) order.push_back(name);
            rows[name].emplace(e.k, e.closed);
        }
        std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
            if (by_parity) return a == "p odd" && b != "p odd";
            return std::stoi(a.substr(2)) < std::stoi(b.substr(2));
        });
        for (const auto& name : order) {
            text += name;
            for (const auto& [k, v] : rows[name]) text += ',' + std::to_string(v);
            text += '\n';
        }
    } else {
        text = "# domino-table v1\nfamily,variant,k,p,cells,closed,exact,result\n";
        for (const auto& e : entries)
            text += std::string(1, family) + ',' + variant + ',' + std::to_string(e.k) + ',' + std::to_string(e.p) +
                    ',' + std::to_string(e.cells) + ',' + std::to_string(e.closed) + ',' +
                    std::to_string(e.exact) + ',' + (e.closed == e.exact ? "pass" : "FAIL") + '\n';
    }
    emit(out, text);
    return mismatches ? kMismatch : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact domino tiling counts and congruence reductions"};
    app.require_subcommand(1);

    std::string input, method = "dp", trace_path, format = "ascii", out, theorem, suite = "families";
    int modulus = 4, p_max = 64, max_cells = 0, kmax = 10, pmax = 4, fuzz_count = 1000;
    std::uint64_t seed = 1;
    bool pairs = false, parity_recursion = false, summary = false;
    std::string family = "D", variant = "b";

    auto* count = app.add_subcommand("count", "Exact number of domino tilings");
    count->add_option("input", input, "Region file or family spec such as rect:4,8")->required();
    count->add_option("--method", method, "dp, brute or kasteleyn")
        ->check(CLI::IsMember({"dp", "brute", "kasteleyn"}));

    auto* res = app.add_subcommand("residue", "Tiling count modulo m");
    res->add_option("input", input, "Region file or family spec")->required();
    res->add_option("-m,--mod", modulus, "Modulus")->check(CLI::Range(2, 1 << 30));
    res->add_option("--method", method, "dp, reduce or both")->check(CLI::IsMember({"dp", "reduce", "both"}));
    res->add_option("--trace", trace_path, "Write the reduction trace as JSON to this path");
    res->add_flag("--parity-recursion", parity_recursion, "Evaluate doubled terms with the parity rules");

    auto* corners = app.add_subcommand("corners", "List maximal corners");
    corners->add_option("input", input, "Region file or family spec")->required();
    corners->add_option("--p-max", p_max, "Largest staircase depth")->check(CLI::PositiveNumber);
    corners->add_flag("--pairs", pairs, "Also list certified reflective pairs");

    auto* axes = app.add_subcommand("axes", "List reflection axes");
    axes->add_option("input", input, "Region file or family spec")->required();

    auto* gen = app.add_subcommand("gen", "Print a family region");
    gen->add_option("spec", input, "Family spec")->required();
    gen->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

    auto* verify = app.add_subcommand("verify", "Check a congruence on every instance of a corpus");
    verify->add_option("--theorem", theorem, "4open, 4wall, 2open, 2wall, k2kk, k2k1k or doublewall")->required();
    verify->add_option("--suite", suite, "families or fuzz")->check(CLI::IsMember({"families", "fuzz"}));
    verify->add_option("--max-cells", max_cells, "Largest region (default 60 for families, 36 for fuzz)");
    verify->add_option("--seed", seed, "Fuzz seed");
    verify->add_option("--count", fuzz_count, "Number of fuzzed regions")->check(CLI::PositiveNumber);
    verify->add_option("--out", out, "Write the CSV here instead of stdout");

    auto* table = app.add_subcommand("table", "Closed-form residues against exact counts");
    table->add_option("--family", family, "T or D")->check(CLI::IsMember({"T", "D"}));
    table->add_option("--variant", variant, "a, b, c or d")->check(CLI::IsMember({"a", "b", "c", "d"}));
    table->add_option("--kmax", kmax, "Largest k")->check(CLI::PositiveNumber);
    table->add_option("--pmax", pmax, "Largest p")->check(CLI::PositiveNumber);
    table->add_option("--max-cells", max_cells, "Skip regions larger than this");
    table->add_flag("--summary", summary, "One row of closed-form residues per p (per parity of p for D b)");
    table->add_option("--out", out, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*count) return run_count(input, method);
        if (*res) return run_residue(input, modulus, method, trace_path, parity_recursion);
        if (*corners) return run_corners(input, p_max, pairs);
        if (*axes) return run_axes(input);
        if (*gen) return run_gen(input, format);
        if (*verify) return run_verify(theorem, suite, max_cells, seed, fuzz_count, out);
        if (*table) {
            if (family == "D" && variant == "d") {
                std::cerr << "error: D has variants a, b and c\n";
                return kParse;
            }
            return run_table(family[0], variant[0], kmax, pmax, max_cells, summary, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case ErrorCode::FrontierTooWide: return kFrontier;
        case ErrorCode::ParseError:
        case ErrorCode::BadCharacter:
        case ErrorCode::EmptyRegion:
        case ErrorCode::Disconnected: return kParse;
        default: return kFailure;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
