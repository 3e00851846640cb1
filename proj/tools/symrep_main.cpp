#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "symrep/json_io.hpp"

using namespace symrep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct Options {
    bool json = false;
    bool serial = false;
    int cap_enum = kDefaultEnumCap;
    int cap_vars = kDefaultVarCap;
    std::uint64_t seed = 2026;
};

Exec exec_mode(const Options& opt) { return opt.serial ? Exec::serial : Exec::parallel; }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::pair<int, int> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw InputError("empty range: " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw InputError("expected N or LO..HI, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw InputError("range endpoint out of range in '" + text + "'");
    }
}

std::string bracketed(const Partition& p) { return "(" + p.to_string() + ")"; }

void print_decomposition(const Decomposition& v, const Options& opt) {
    if (opt.json) {
        print_json(to_json(v));
        return;
    }
    for (const auto& [shape, mult] : v.mults)
        std::cout << bracketed(shape) << ": " << mult.get_str() << '\n';
    std::cout << "dimension: " << v.dimension().get_str() << '\n';
}

std::vector<Polynomial> read_generators(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw InputError("invalid JSON in " + path);
        std::vector<Polynomial> out;
        for (const auto& entry : j) out.push_back(polynomial_from_json(entry));
        return out;
    }
    std::istringstream stream(text);
    return parse_polynomial_list(stream, n);
}

Decomposition read_decomposition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw InputError("invalid JSON in " + path);
    return decomposition_from_json(j);
}

int cmd_partitions(const Options& opt, const std::string& d_text, std::optional<int> max_parts,
                   bool count_only, bool a070, const std::string& metatype_text,
                   const std::vector<std::string>& dominates_args) {
    if (!metatype_text.empty()) {
        Partition m = metatype(parse_padded_partition(metatype_text));
        if (opt.json)
            print_json(Json{{"metatype", to_json(m)}});
        else
            std::cout << bracketed(m) << '\n';
        return kExitOk;
    }
    if (!dominates_args.empty()) {
        bool yes = dominates(parse_partition(dominates_args[0]),
                             parse_partition(dominates_args[1]));
        if (opt.json)
            print_json(Json{{"dominates", yes}});
        else
            std::cout << (yes ? "true" : "false") << '\n';
        return kExitOk;
    }
    if (d_text.empty()) throw InputError("pass --d, --metatype or --dominates");
    auto [d_lo, d_hi] = parse_range(d_text);
    if (d_lo != d_hi) throw InputError("pass a single degree to --d");
    int d = d_lo;
    if (a070) {
        Int s = a000070(d);
        if (opt.json)
            print_json(Json{{"d", d}, {"a000070", s.get_str()}});
        else
            std::cout << s.get_str() << '\n';
        return kExitOk;
    }
    if (count_only) {
        Int c = partition_count(d);
        if (opt.json)
            print_json(Json{{"d", d}, {"count", c.get_str()}});
        else
            std::cout << c.get_str() << '\n';
        return kExitOk;
    }
    auto parts = enumerate_partitions(d, max_parts);
    if (opt.json) {
        Json arr = Json::array();
        for (const auto& p : parts) arr.push_back(to_json(p));
        print_json(Json{{"d", d}, {"partitions", arr}});
    } else {
        for (const auto& p : parts) std::cout << bracketed(p) << '\n';
    }
    return kExitOk;
}

int cmd_kostka(const Options& opt, const std::string& shape_text,
               const std::string& content_text, const std::string& method,
               bool list_ssyt) {
    Partition shape = parse_partition(shape_text);
    Partition content = parse_partition(content_text);

    std::optional<Int> by_recursion, by_enumeration;
    if (method == "recursion" || method == "both") by_recursion = kostka(shape, content);
    if (method == "enumerate" || method == "both")
        by_enumeration = kostka_bruteforce(shape, content, opt.cap_enum);
    bool agree = !by_recursion || !by_enumeration || *by_recursion == *by_enumeration;
    Int value = by_recursion ? *by_recursion : *by_enumeration;

    Json tableaux = Json::array();
    if (list_ssyt)
        for (const auto& t : enumerate_ssyt(shape, content, opt.cap_enum))
            tableaux.push_back(to_json(t));

    if (opt.json) {
        Json j{{"shape", to_json(shape)},
               {"content", to_json(content)},
               {"method", method},
               {"value", value.get_str()},
               {"agree", agree}};
        if (list_ssyt) j["tableaux"] = tableaux;
        print_json(j);
    } else {
        std::cout << value.get_str() << '\n';
        if (list_ssyt)
            for (const auto& t : enumerate_ssyt(shape, content, opt.cap_enum))
                std::cout << '\n' << tableau_ascii(t.rows);
        if (!agree)
            std::cerr << "recursion " << by_recursion->get_str() << " != enumeration "
                      << by_enumeration->get_str() << '\n';
    }
    return agree ? kExitOk : kExitVerificationFailure;
}

int cmd_specht_dim(const Options& opt, const std::string& shape_text, bool list_syt) {
    Partition shape = parse_partition(shape_text);
    Int dim = specht_dim(shape);
    if (opt.json) {
        Json j{{"shape", to_json(shape)}, {"dim", dim.get_str()}};
        if (list_syt) {
            Json arr = Json::array();
            for (const auto& t : enumerate_syt(shape, opt.cap_enum))
                arr.push_back(to_json(t));
            j["tableaux"] = arr;
        }
        print_json(j);
    } else {
        std::cout << dim.get_str() << '\n';
        if (list_syt)
            for (const auto& t : enumerate_syt(shape, opt.cap_enum))
                std::cout << '\n' << tableau_ascii(t.rows);
    }
    return kExitOk;
}

int cmd_character_table(const Options& opt, int n) {
    CharacterTable table = character_table(n, opt.cap_enum);
    if (opt.json) {
        print_json(to_json(table));
        return kExitOk;
    }
    std::cout << "classes:";
    for (const auto& c : table.classes()) std::cout << ' ' << bracketed(c.type);
    std::cout << "\nsizes:  ";
    for (const auto& c : table.classes()) std::cout << ' ' << c.size.get_str();
    std::cout << '\n';
    for (std::size_t s = 0; s < table.shapes().size(); ++s) {
        std::cout << bracketed(table.shapes()[s]) << ':';
        for (std::size_t c = 0; c < table.classes().size(); ++c)
            std::cout << ' ' << table.value(s, c).get_str();
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_decompose_rd(const Options& opt, int n, int d) {
    print_decomposition(decompose_rd(n, d), opt);
    return kExitOk;
}

int cmd_max_submodule(const Options& opt, std::optional<int> n, std::optional<int> d,
                      const std::string& decomp_file, const std::string& r_text) {
    Int r(r_text);
    Decomposition v = decomp_file.empty()
                          ? decompose_rd(n.value_or(0), d.value_or(0))
                          : read_decomposition(decomp_file);
    print_decomposition(maximal_r_generated(v, r), opt);
    return kExitOk;
}

int cmd_min_generators(const Options& opt, std::optional<int> n, std::optional<int> d,
                       const std::string& decomp_file) {
    Decomposition v = decomp_file.empty()
                          ? decompose_rd(n.value_or(0), d.value_or(0))
                          : read_decomposition(decomp_file);
    Int r = min_generators(v);
    if (opt.json)
        print_json(Json{{"min_generators", r.get_str()}});
    else
        std::cout << r.get_str() << '\n';
    return kExitOk;
}

int cmd_min_generators_ideal(const Options& opt, int n, const std::string& gens_file) {
    auto gens = read_generators(gens_file, n);
    Int r = min_symmetric_generators(gens, opt.cap_vars);
    if (opt.json)
        print_json(Json{{"min_symmetric_generators", r.get_str()},
                        {"principal", r == 1}});
    else
        std::cout << r.get_str() << '\n';
    return kExitOk;
}

int cmd_construct_j(const Options& opt, int n, int d, const std::string& emit) {
    if (emit == "basis") {
        SubspaceBasis jd = construct_jd(n, d);
        if (opt.json) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < jd.rank(); ++i)
                rows.push_back(to_json(jd.row_polynomial(i)));
            print_json(Json{{"n", n}, {"d", d}, {"dim", jd.rank()}, {"basis", rows}});
        } else {
            for (std::size_t i = 0; i < jd.rank(); ++i) {
                std::cout << jd.row_polynomial(i).to_string() << ";\n";
            }
        }
        return kExitOk;
    }
    if (emit == "generator") {
        GeneratorCertificate cert =
            sample_principal_generator(n, d, opt.seed, std::max(opt.cap_vars, n));
        if (opt.json)
            print_json(to_json(cert));
        else
            std::cout << cert.generator.to_string();
        return cert.principal ? kExitOk : kExitVerificationFailure;
    }
    if (emit != "report") throw InputError("--emit must be basis, generator or report");

    SubspaceBasis jd = construct_jd(n, d);
    Decomposition decomp =
        decompose_submodule(jd, character_table(n, std::max(opt.cap_enum, n)));
    GeneratorCertificate cert =
        sample_principal_generator(n, d, opt.seed, std::max(opt.cap_vars, n));
    Int rd_dim = binomial(n + d - 1, d);
    Int quotient_dim = rd_dim - static_cast<long>(jd.rank());

    // coefficient sums of every basis row, keyed by exponent pattern
    bool sums_ok = true;
    std::map<Partition, Rat> totals;
    for (std::size_t i = 0; i < jd.rank(); ++i)
        for (const auto& [a, s] : check_coefficient_sums(jd.row_polynomial(i))) {
            if (a.size() != 1 && s != 0) sums_ok = false;
            totals[a] += s;
        }
    Json sums = Json::array();
    for (const auto& [a, total] : totals)
        sums.push_back(Json{{"pattern", to_json(a)}, {"basis_sum", total.get_str()}});

    if (opt.json) {
        print_json(Json{{"n", n},
                        {"d", d},
                        {"dim", jd.rank()},
                        {"ambient_dim", rd_dim.get_str()},
                        {"quotient_dim", quotient_dim.get_str()},
                        {"expected_quotient_dim", expected_hilbert(n, d, d).get_str()},
                        {"decomposition", to_json(decomp)},
                        {"coefficient_sums_zero_off_power", sums_ok},
                        {"coefficient_sums", sums},
                        {"generator", to_json(cert)}});
    } else {
        std::cout << "dim: " << jd.rank() << " of " << rd_dim.get_str() << '\n'
                  << "quotient dim: " << quotient_dim.get_str() << " (expected "
                  << expected_hilbert(n, d, d).get_str() << ")\n"
                  << "coefficient sums vanish off the power pattern: "
                  << (sums_ok ? "true" : "false") << '\n'
                  << "principal: " << (cert.principal ? "true" : "false") << " (generator found in "
                  << cert.attempts << " attempt(s))\n";
    }
    return cert.principal && sums_ok ? kExitOk : kExitVerificationFailure;
}

int cmd_check_bound(const Options& opt, int d, const std::string& r_text,
                    const std::string& n_text) {
    Int r(r_text);
    auto [n_lo, n_hi] = parse_range(n_text);
    KostkaCache cache;
    Json arr = Json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        BoundCheck check = check_bound(n, d, r, cache);
        if (opt.json) {
            arr.push_back(to_json(check));
        } else {
            if (n_lo != n_hi) std::cout << "n=" << n << ' ';
            std::cout << "equality=" << (check.equality ? "true" : "false")
                      << " threshold=" << (check.threshold_holds ? "true" : "false")
                      << '\n';
        }
    }
    if (opt.json) print_json(n_lo == n_hi ? arr.front() : arr);
    return kExitOk;
}

int cmd_hilbert(const Options& opt, int n, int d, std::optional<int> i) {
    if (opt.json) {
        if (i) {
            print_json(Json{{"n", n}, {"d", d}, {"i", *i},
                            {"value", expected_hilbert(n, d, *i).get_str()}});
        } else {
            Json arr = Json::array();
            for (int k = 0; k <= d + 1; ++k)
                arr.push_back(Json{{"i", k}, {"value", expected_hilbert(n, d, k).get_str()}});
            print_json(Json{{"n", n}, {"d", d}, {"values", arr}});
        }
    } else {
        if (i) {
            std::cout << expected_hilbert(n, d, *i).get_str() << '\n';
        } else {
            for (int k = 0; k <= d + 1; ++k)
                std::cout << "i=" << k << ": " << expected_hilbert(n, d, k).get_str()
                          << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify_inequality(const Options& opt, const std::string& n_text) {
    auto [n_lo, n_hi] = parse_range(n_text);
    bool theorem_holds = true;
    Json arr = Json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        auto report = verify_kostka_inequality(n, exec_mode(opt),
                                               std::max(opt.cap_enum + 2, n));
        // the lone documented exception: (2,2) against itself at n=4
        std::vector<InequalityCell> expected;
        if (n == 4) {
            KostkaCache cache;
            Partition sq({2, 2});
            expected.push_back(InequalityCell{sq, sq, Int(3) * kostka(sq, sq, cache),
                                              Int(1) * specht_dim(sq)});
        }
        if (report.violations != expected) theorem_holds = false;
        if (opt.json)
            arr.push_back(to_json(report));
        else
            std::cout << "n=" << n << " checked=" << report.checked
                      << " violations=" << report.violations.size() << '\n';
    }
    if (opt.json)
        print_json(Json{{"theorem_holds", theorem_holds}, {"reports", arr}});
    else
        std::cout << (theorem_holds ? "only the documented exception violates"
                                    : "UNEXPECTED VIOLATIONS")
                  << '\n';
    return theorem_holds ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_appendix(const Options& opt) {
    AppendixReport report = reproduce_appendix_tables();
    if (opt.json)
        print_json(to_json(report));
    else
        std::cout << (report.matches ? "tables match" : "TABLE MISMATCH") << '\n';
    return report.matches ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_main_inequality(const Options& opt, int d, int n) {
    MainInequalityReport report = verify_main_inequality(n, d, exec_mode(opt));
    if (opt.json)
        print_json(to_json(report));
    else
        std::cout << "n=" << n << " d=" << d << " shapes=" << report.rows.size()
                  << " violations=" << report.violations.size() << '\n';
    return report.violations.empty() ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_bound_grid(const Options& opt, const std::string& d_text, int n_span) {
    auto [d_lo, d_hi] = parse_range(d_text);
    BoundGridReport report = verify_bound_grid(d_lo, d_hi, n_span, exec_mode(opt));
    if (opt.json)
        print_json(to_json(report));
    else
        std::cout << "cells=" << report.checked
                  << " inconsistent=" << report.inconsistent << '\n';
    return report.inconsistent == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_elementary(const Options& opt, int n_max, int l_max, int p_max) {
    ElementaryReport report =
        verify_elementary_inequality(n_max, l_max, p_max, exec_mode(opt));
    if (opt.json)
        print_json(to_json(report));
    else
        std::cout << "checked=" << report.checked << " skipped=" << report.skipped
                  << " violations=" << report.violations.size() << '\n';
    return report.violations.empty() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric-group structure of polynomial spaces: partitions, "
                 "Kostka numbers, characters, module decompositions and the "
                 "extremal principal symmetric ideal"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--serial", opt.serial, "single-thread reference kernels");
    app.add_option("--cap", opt.cap_enum, "enumeration cap on the weight");
    app.add_option("--var-cap", opt.cap_vars, "cap on variables for orbit spans");
    app.add_option("--seed", opt.seed, "seed for randomized generators");

    std::string d_text, shape_text, content_text, metatype_text;
    std::string method = "recursion", emit = "report";
    std::string decomp_file, gens_file, r_text = "1", n_text;
    std::vector<std::string> dominates_args;
    std::optional<int> max_parts, opt_n, opt_d, opt_i;
    int n = 0, d = 0, n_span = 12;
    int n_max = 30, l_max = 8, p_max = 8;
    bool count_only = false, a070 = false, list_ssyt = false, list_syt = false;

    auto* sc_partitions = app.add_subcommand("partitions", "enumerate and relate partitions");
    sc_partitions->add_option("--d", d_text, "weight to partition");
    sc_partitions->add_option("--max-parts", max_parts, "limit the number of parts");
    sc_partitions->add_flag("--count", count_only, "print the count only");
    sc_partitions->add_flag("--a000070", a070, "print the partial sum of counts below --d");
    sc_partitions->add_option("--metatype", metatype_text,
                              "value multiplicities of a padded partition 'a;n=L'");
    sc_partitions->add_option("--dominates", dominates_args, "two partitions to compare")
        ->expected(2);

    auto* sc_kostka = app.add_subcommand("kostka", "Kostka number of a shape and content");
    sc_kostka->add_option("--shape", shape_text)->required();
    sc_kostka->add_option("--content", content_text)->required();
    sc_kostka->add_option("--method", method, "recursion, enumerate or both")
        ->check(CLI::IsMember({"recursion", "enumerate", "both"}));
    sc_kostka->add_flag("--list-ssyt", list_ssyt, "emit the semistandard tableaux");

    auto* sc_specht = app.add_subcommand("specht-dim", "dimension of an irreducible");
    sc_specht->add_option("--shape", shape_text)->required();
    sc_specht->add_flag("--list-syt", list_syt, "emit the standard tableaux");

    auto* sc_table = app.add_subcommand("character-table", "character table of S_n");
    sc_table->add_option("--n", n)->required();

    auto* sc_rd = app.add_subcommand("decompose-rd",
                                     "decomposition of the degree-d polynomial space");
    sc_rd->add_option("--n", n)->required();
    sc_rd->add_option("--d", d)->required();

    auto* sc_max = app.add_subcommand("max-submodule",
                                      "largest submodule generated by r elements");
    sc_max->add_option("--n", opt_n);
    sc_max->add_option("--d", opt_d);
    sc_max->add_option("--decomposition", decomp_file, "decomposition JSON file");
    sc_max->add_option("--r", r_text)->required();

    auto* sc_min = app.add_subcommand("min-generators",
                                      "fewest generators of a decomposed module");
    sc_min->add_option("--n", opt_n);
    sc_min->add_option("--d", opt_d);
    sc_min->add_option("--decomposition", decomp_file, "decomposition JSON file");

    auto* sc_min_ideal = app.add_subcommand(
        "min-generators-ideal", "fewest symmetric generators of a polynomial span");
    sc_min_ideal->add_option("--n", n)->required();
    sc_min_ideal->add_option("--gens", gens_file, "polynomial file")->required();

    auto* sc_j = app.add_subcommand("construct-j",
                                    "degree-d piece of the extremal principal ideal");
    sc_j->add_option("--n", n)->required();
    sc_j->add_option("--d", d)->required();
    sc_j->add_option("--emit", emit, "basis, generator or report")
        ->check(CLI::IsMember({"basis", "generator", "report"}));

    auto* sc_bound = app.add_subcommand("check-bound",
                                        "dimension target for r-generated submodules");
    sc_bound->add_option("--d", d)->required();
    sc_bound->add_option("--r", r_text)->required();
    sc_bound->add_option("--n", n_text, "single n or LO..HI")->required();

    auto* sc_hilbert = app.add_subcommand("hilbert",
                                          "expected quotient dimensions by degree");
    sc_hilbert->add_option("--n", n)->required();
    sc_hilbert->add_option("--d", d)->required();
    sc_hilbert->add_option("--i", opt_i, "single degree to evaluate");

    auto* sc_verify = app.add_subcommand("verify", "exhaustive theorem checks");
    sc_verify->require_subcommand(1);
    auto* sc_v_ineq = sc_verify->add_subcommand("inequality",
                                                "multiplicity bound over all shape pairs");
    sc_v_ineq->add_option("--n", n_text, "single n or LO..HI")->required();
    auto* sc_v_appendix = sc_verify->add_subcommand("appendix", "frozen worked tables");
    auto* sc_v_main = sc_verify->add_subcommand("main-inequality",
                                                "degree-d multiplicity bound");
    sc_v_main->add_option("--d", d)->required();
    sc_v_main->add_option("--n", n)->required();
    auto* sc_v_grid = sc_verify->add_subcommand("bound-grid",
                                                "equality-iff-threshold grid");
    sc_v_grid->add_option("--d", d_text, "single d or LO..HI")->required();
    sc_v_grid->add_option("--n-span", n_span, "how many n above d to sweep");
    auto* sc_v_elem = sc_verify->add_subcommand("elementary",
                                                "factorial form of the base inequality");
    sc_v_elem->add_option("--n-max", n_max);
    sc_v_elem->add_option("--l-max", l_max);
    sc_v_elem->add_option("--p-max", p_max);

    try {
        app.parse(argc, argv);

        if (sc_partitions->parsed())
            return cmd_partitions(opt, d_text, max_parts, count_only, a070,
                                  metatype_text, dominates_args);
        if (sc_kostka->parsed())
            return cmd_kostka(opt, shape_text, content_text, method, list_ssyt);
        if (sc_specht->parsed()) return cmd_specht_dim(opt, shape_text, list_syt);
        if (sc_table->parsed()) return cmd_character_table(opt, n);
        if (sc_rd->parsed()) return cmd_decompose_rd(opt, n, d);
        if (sc_max->parsed()) {
            if (decomp_file.empty() && (!opt_n || !opt_d))
                throw InputError("pass --decomposition or both --n and --d");
            return cmd_max_submodule(opt, opt_n, opt_d, decomp_file, r_text);
        }
        if (sc_min->parsed()) {
            if (decomp_file.empty() && (!opt_n || !opt_d))
                throw InputError("pass --decomposition or both --n and --d");
            return cmd_min_generators(opt, opt_n, opt_d, decomp_file);
        }
        if (sc_min_ideal->parsed()) return cmd_min_generators_ideal(opt, n, gens_file);
        if (sc_j->parsed()) return cmd_construct_j(opt, n, d, emit);
        if (sc_bound->parsed()) return cmd_check_bound(opt, d, r_text, n_text);
        if (sc_hilbert->parsed()) return cmd_hilbert(opt, n, d, opt_i);
        if (sc_verify->parsed()) {
            if (sc_v_ineq->parsed()) return cmd_verify_inequality(opt, n_text);
            if (sc_v_appendix->parsed()) return cmd_verify_appendix(opt);
            if (sc_v_main->parsed()) return cmd_verify_main_inequality(opt, d, n);
            if (sc_v_grid->parsed()) return cmd_verify_bound_grid(opt, d_text, n_span);
            if (sc_v_elem->parsed()) return cmd_verify_elementary(opt, n_max, l_max, p_max);
        }
        throw InputError("no subcommand selected");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}
