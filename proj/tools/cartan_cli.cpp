/* Command-line front end: divisor multisets (whole-group and blockwise),
 * the part-splitting map, the strict-partition abacus, partition
 * enumeration and counting, and a self-verification matrix.
 */

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartan/cartan.hpp"

namespace {

using namespace cartan;
using nlohmann::ordered_json;

std::string quoted(const partition& lam) { return '"' + lam.to_string() + '"'; }

ordered_json parts_json(const partition& lam) {
    ordered_json arr = ordered_json::array();
    for (unsigned v : lam.parts())
        arr.push_back(v);
    return arr;
}

ordered_json multiset_json(const divisor_multiset& d) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, m] : d.entries()) {
        ordered_json entry;
        entry["exponent"] = e;
        entry["multiplicity"] = m;
        arr.push_back(std::move(entry));
    }
    return arr;
}

void multiset_table(std::ostream& os, const divisor_multiset& d, unsigned p,
                    const char* indent) {
    os << indent << "exponent  multiplicity  divisor\n";
    for (const auto& [e, m] : d.entries())
        os << indent << std::setw(8) << e << "  " << std::setw(12) << m << "  " << p << "^" << e
           << "\n";
}

struct divisors_options {
    std::uint64_t n = 0;
    unsigned p = 2;
    std::string format = "table";
    bool by_block = false;
    bool verify = true;
    std::string output;
};

int run_divisors(const divisors_options& opt) {
    require_prime(opt.p);
    if (opt.by_block && opt.p != 2) {
        std::cerr << "error: --by-block is only defined for p = 2\n";
        return 2;
    }
    const divisor_multiset divisors = cartan_divisors(opt.n, opt.p);
    if (opt.verify) {
        const divisor_multiset oracle = oracle_divisors(opt.n, opt.p);
        if (divisors != oracle) {
            std::cerr << "verification failed for n=" << opt.n << " p=" << opt.p << ": "
                      << divisors.to_string() << " by length formula vs " << oracle.to_string()
                      << " by centralizer valuation\n";
            return 1;
        }
    }
    std::vector<block_label> labels;
    std::vector<divisor_multiset> blocks;
    if (opt.by_block)
        for (const auto& label : block_labels(opt.n)) {
            labels.push_back(label);
            blocks.push_back(block_divisors(opt.n, label.index));
        }

    std::ostringstream out;
    if (opt.format == "json") {
        ordered_json doc;
        doc["n"] = opt.n;
        doc["p"] = opt.p;
        doc["divisors"] = multiset_json(divisors);
        if (opt.by_block) {
            ordered_json arr = ordered_json::array();
            for (std::size_t i = 0; i < labels.size(); ++i) {
                ordered_json b;
                b["r"] = labels[i].nodes;
                b["w"] = labels[i].weight;
                b["two_core"] = parts_json(labels[i].core_2());
                b["h_core"] = parts_json(labels[i].core_h());
                b["divisors"] = multiset_json(blocks[i]);
                arr.push_back(std::move(b));
            }
            doc["blocks"] = std::move(arr);
        }
        out << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        out << "partition,glaisher_image,exponent,two_core,h_core\n";
        for_each_partition(opt.n, restriction::p_regular, opt.p, [&](const partition& lam) {
            out << quoted(lam) << ',' << quoted(glaisher_map(lam, opt.p)) << ','
                << divisor_exponent(lam, opt.p) << ',';
            if (opt.p == 2)
                out << quoted(two_core(lam).core);
            out << ',';
            if (opt.p == 2)
                out << quoted(h_core(lam).core);
            out << '\n';
        });
    } else {
        out << "n=" << opt.n << " p=" << opt.p << "  divisors " << divisors.total() << "  det "
            << opt.p << "^" << divisors.determinant_exponent() << "\n";
        if (!opt.by_block) {
            multiset_table(out, divisors, opt.p, "");
        } else {
            for (std::size_t i = 0; i < labels.size(); ++i) {
                out << "block r=" << labels[i].nodes << " w=" << labels[i].weight << "  2-core "
                    << labels[i].core_2().to_string() << "  H-core "
                    << labels[i].core_h().to_string() << "\n";
                multiset_table(out, blocks[i], opt.p, "  ");
            }
        }
    }

    if (opt.output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream file(opt.output);
        if (!file)
            throw std::invalid_argument("cannot open '" + opt.output + "' for writing");
        file << out.str();
    }
    return 0;
}

int run_glaisher(const std::string& text, unsigned p) {
    const partition lam = parse_partition(text);
    const partition image = glaisher_map(lam, p);
    std::cout << image.to_string() << "  exponent " << divisor_exponent(lam, p) << "  (length "
              << lam.length() << " -> " << image.length() << ")\n";
    return 0;
}

int run_abacus(const std::string& text, bool trace) {
    const partition lam = parse_partition(text);
    const abacus_state start = abacus_state::from_partition(lam);
    std::cout << render_abacus(start);
    const h_core_result res = h_core(lam);
    if (trace) {
        abacus_state current = start;
        for (const h_move& mv : res.trace) {
            current = apply_move(current, mv);
            std::cout << to_string(mv.kind) << " position " << mv.position << "  weight "
                      << mv.weight() << "  -> " << current.to_partition().to_string() << "\n";
        }
    }
    std::cout << "H-core: " << res.core.to_string() << "  H-weight: " << res.weight << "\n";
    return 0;
}

struct partitions_options {
    std::uint64_t n = 0;
    std::string kind = "all";
    unsigned p = 0;
    bool count = false;
};

int run_partitions(const partitions_options& opt) {
    restriction r = restriction::none;
    bool needs_p = false;
    if (opt.kind == "strict") {
        r = restriction::strict;
    } else if (opt.kind == "odd") {
        r = restriction::odd;
    } else if (opt.kind == "regular") {
        r = restriction::p_regular;
        needs_p = true;
    } else if (opt.kind == "class-regular") {
        r = restriction::p_class_regular;
        needs_p = true;
    }
    if (needs_p && opt.p == 0)
        throw std::invalid_argument("--p is required for kind '" + opt.kind + "'");
    if (opt.count) {
        big_int count;
        if (r == restriction::none)
            count = count_partitions(opt.n);
        else if (r == restriction::strict || r == restriction::odd)
            count = count_strict(opt.n);
        else
            count = p_class_regular_partition_numbers(opt.n, opt.p).back();
        std::cout << count << "\n";
        return 0;
    }
    for_each_partition(opt.n, r, opt.p,
                       [](const partition& lam) { std::cout << lam.to_string() << "\n"; });
    return 0;
}

struct verify_options {
    std::uint64_t nmax = 0;
    std::vector<unsigned> p_set{2, 3, 5, 7};
    unsigned trials = 200;
    std::uint64_t seed = 12345;
};

int run_verify(const verify_options& opt) {
    for (unsigned p : opt.p_set)
        require_prime(p);
    const bool with_2 = std::find(opt.p_set.begin(), opt.p_set.end(), 2u) != opt.p_set.end();

    using row_fn = std::function<std::optional<checks::check_result>(std::uint64_t)>;
    const auto over_primes = [&](checks::check_result (*fn)(std::uint64_t, unsigned)) {
        return [&opt, fn](std::uint64_t n) -> std::optional<checks::check_result> {
            for (unsigned p : opt.p_set) {
                const auto r = fn(n, p);
                if (!r.ok)
                    return r;
            }
            return checks::check_result{};
        };
    };
    const std::vector<std::pair<std::string, row_fn>> rows = {
        {"glaisher_bijection", over_primes(checks::glaisher_bijection)},
        {"divisor_oracle_match", over_primes(checks::divisor_oracle_match)},
        {"exponent_closed_form", over_primes(checks::exponent_closed_form)},
        {"e_invariant_scaling", over_primes(checks::e_invariant_scaling)},
        {"counting_identity", [](std::uint64_t n) { return checks::counting_identity(n); }},
        {"count_by_enumeration",
         [](std::uint64_t n) -> std::optional<checks::check_result> {
             if (n > 40)
                 return std::nullopt;
             return checks::count_by_enumeration(n);
         }},
        {"abacus_confluence",
         [&opt](std::uint64_t n) {
             return checks::abacus_confluence(n, opt.trials, opt.seed);
         }},
        {"stalemate_closed_form", [](std::uint64_t n) { return checks::stalemate_closed_form(n); }},
        {"weight_law", [](std::uint64_t n) { return checks::weight_law(n); }},
        {"proposition_counts", [](std::uint64_t n) { return checks::proposition_counts(n); }},
        {"block_formula_match", [](std::uint64_t n) { return checks::block_formula_match(n); }},
        {"block_partition_of_whole",
         [](std::uint64_t n) { return checks::block_partition_of_whole(n); }},
        {"parity_determination", [](std::uint64_t n) { return checks::parity_determination(n); }},
        {"staircase_unfolding",
         [](std::uint64_t n) { return checks::staircase_unfolding(unsigned(n)); }},
        {"weight_only_dependence",
         [](std::uint64_t n) { return checks::weight_only_dependence(n); }},
        {"reference_table",
         [with_2](std::uint64_t n) -> std::optional<checks::check_result> {
             if (n != 7 || !with_2)
                 return std::nullopt;
             return checks::reference_table_n7();
         }},
    };

    std::size_t name_width = 0;
    for (const auto& [name, fn] : rows)
        name_width = std::max(name_width, name.size());

    struct failure {
        std::string check;
        std::uint64_t n;
        std::string detail;
    };
    std::optional<failure> first_failure;

    std::vector<std::string> cells(rows.size(), std::string(opt.nmax + 1, ' '));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::uint64_t n = 0; n <= opt.nmax; ++n) {
            const auto result = rows[i].second(n);
            if (!result) {
                cells[i][n] = '-';
            } else if (result->ok) {
                cells[i][n] = '.';
            } else {
                cells[i][n] = 'X';
                if (!first_failure)
                    first_failure = failure{rows[i].first, n, result->detail};
            }
        }

    const std::string margin(name_width + 2, ' ');
    if (opt.nmax >= 10) {
        std::cout << margin;
        for (std::uint64_t n = 0; n <= opt.nmax; ++n)
            std::cout << (n >= 10 ? char('0' + n / 10 % 10) : ' ');
        std::cout << "\n";
    }
    std::cout << margin;
    for (std::uint64_t n = 0; n <= opt.nmax; ++n)
        std::cout << char('0' + n % 10);
    std::cout << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::cout << std::setw(int(name_width)) << std::left << rows[i].first << "  " << cells[i]
                  << "\n";
    std::cout << "columns are n = 0.." << opt.nmax << ": '.' pass, 'X' fail, '-' not run\n";

    if (first_failure) {
        std::cout << "FAIL " << first_failure->check << " at n=" << first_failure->n << ": "
                  << first_failure->detail << "\n";
        return 1;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elementary divisors of the p-Cartan matrix of the symmetric group S_n"};
    app.require_subcommand(1);

    divisors_options dopt;
    CLI::App* div = app.add_subcommand("divisors", "Divisor multiset of S_n at a prime p");
    div->add_option("n", dopt.n, "Number of letters")->required();
    div->add_option("p", dopt.p, "Prime")->required();
    div->add_option("--format", dopt.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    div->add_flag("--by-block", dopt.by_block, "Split the multiset into 2-blocks (p = 2 only)");
    div->add_flag("--verify,!--no-verify", dopt.verify,
                  "Cross-check against the centralizer oracle");
    div->add_option("--output", dopt.output, "Write to this file instead of standard output");

    std::string glaisher_partition;
    unsigned glaisher_p = 0;
    CLI::App* gla =
        app.add_subcommand("glaisher", "Image, exponent and lengths of a p-regular partition");
    gla->add_option("partition", glaisher_partition, "Comma-separated decreasing parts")
        ->required();
    gla->add_option("--p", glaisher_p, "Prime")->required();

    std::string abacus_partition;
    bool abacus_trace = false;
    CLI::App* aba =
        app.add_subcommand("abacus", "Render a strict partition and reduce it to its H-core");
    aba->add_option("partition", abacus_partition, "Comma-separated decreasing distinct parts")
        ->required();
    aba->add_flag("--trace", abacus_trace, "Print every move of the reduction");

    partitions_options popt;
    CLI::App* par = app.add_subcommand("partitions", "Enumerate or count partitions of n");
    par->add_option("n", popt.n, "Number to partition")->required();
    par->add_option("--kind", popt.kind, "all, strict, odd, regular or class-regular")
        ->check(CLI::IsMember({"all", "strict", "odd", "regular", "class-regular"}))
        ->capture_default_str();
    par->add_option("--p", popt.p, "Prime for the regular and class-regular kinds");
    par->add_flag("--count", popt.count, "Print only the count");

    verify_options vopt;
    CLI::App* ver = app.add_subcommand("verify", "Run every cross-check for n up to n-max");
    ver->add_option("n-max", vopt.nmax, "Largest n to check")->required();
    ver->add_option("--p-set", vopt.p_set, "Primes to include")
        ->delimiter(',')
        ->capture_default_str();
    ver->add_option("--trials", vopt.trials, "Random move orders per strict partition")
        ->capture_default_str();
    ver->add_option("--seed", vopt.seed, "Seed for the random move orders")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (div->parsed())
            return run_divisors(dopt);
        if (gla->parsed())
            return run_glaisher(glaisher_partition, glaisher_p);
        if (aba->parsed())
            return run_abacus(abacus_partition, abacus_trace);
        if (par->parsed())
            return run_partitions(popt);
        if (ver->parsed())
            return run_verify(vopt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
