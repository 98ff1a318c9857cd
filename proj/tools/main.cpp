// emblat: embedded-subset lattices, partition combinatorics and games in
// partition function form, from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "emblat/embedded.hpp"
#include "emblat/games.hpp"
#include "emblat/json_io.hpp"
#include "emblat/lattice.hpp"
#include "emblat/partition.hpp"

using nlohmann::json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << text;
}

emblat::EmbeddedSubset parse_element(const std::string& text, int n) {
    return emblat::embedded_from_json(json::parse(text), n);
}

std::string maybe_float(const emblat::Bigint& v, bool want) {
    return want ? v.str() + " (" + std::to_string(v.to_double()) + ")" : v.str();
}

std::string maybe_float(const emblat::Rational& v, bool want) {
    return want ? v.str() + " (" + std::to_string(v.to_double()) + ")" : v.str();
}

struct CheckOptions {
    std::string game_path = "-";
    std::string property;
    int k = 2;
    std::optional<int> bound;
};

int run_check(const CheckOptions& opt) {
    const emblat::Game game = emblat::game_from_json(json::parse(read_input(opt.game_path)));
    emblat::CheckResult res;
    if (opt.property == "monotone") {
        res = emblat::check_monotone(game);
    } else if (opt.property == "supermodular") {
        res = emblat::check_supermodular(game);
    } else if (opt.property == "submodular") {
        res = emblat::check_submodular(game);
    } else if (opt.property == "additive") {
        res = emblat::check_additive(game);
    } else if (opt.property == "k-monotone") {
        res = emblat::check_k_monotone(game, opt.k);
    } else if (opt.property == "infty-monotone") {
        res = emblat::check_infty_monotone(game, opt.bound);
    } else if (opt.property == "belief") {
        res = emblat::check_belief(game, opt.bound);
    } else if (opt.property == "invertible-belief") {
        res = emblat::check_invertible_belief(game, opt.bound);
    } else if (opt.property == "minitive") {
        res = emblat::check_minitive(game);
    } else {
        throw std::invalid_argument("unknown property: " + opt.property);
    }
    if (res.ok) {
        std::cout << opt.property << ": true\n";
        return 0;
    }
    std::cout << opt.property << ": false";
    if (res.witness) {
        std::cout << " [";
        for (std::size_t i = 0; i < res.witness->elements.size(); ++i)
            std::cout << (i ? ", " : "") << res.witness->elements[i].str();
        std::cout << "] " << res.witness->note;
    }
    std::cout << "\n";
    return kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice of embedded subsets and games in partition function form"};
    app.require_subcommand(1);

    // enumerate
    int enum_n = 3;
    std::string enum_format = "table";
    auto* cmd_enum = app.add_subcommand("enumerate", "list all lattice elements by height");
    cmd_enum->add_option("--n", enum_n, "ground set size")->required();
    cmd_enum->add_option("--format", enum_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    // table
    int table_min = 1, table_max = 8;
    auto* cmd_table = app.add_subcommand("table", "element and chain counts per n");
    cmd_table->add_option("--min", table_min, "first n");
    cmd_table->add_option("--max", table_max, "last n");

    // chains
    int chains_n = 0;
    std::string chains_from, chains_to;
    bool chains_oracle = false, chains_uncorrected = false, chains_float = false;
    auto* cmd_chains = app.add_subcommand("chains", "count maximal chains between two elements");
    cmd_chains->add_option("--n", chains_n, "ground set size")->required();
    cmd_chains->add_option("--from", chains_from, "lower element (JSON), default bottom");
    cmd_chains->add_option("--to", chains_to, "upper element (JSON), default top");
    cmd_chains->add_flag("--oracle", chains_oracle, "use the cover-DAG dynamic program");
    cmd_chains->add_flag("--uncorrected", chains_uncorrected,
                         "evaluate the uncorrected interval-formula variant (audit)");
    cmd_chains->add_flag("--float", chains_float, "append decimal rendering");

    // moebius
    int mob_n = 0;
    std::string mob_from, mob_to;
    bool mob_float = false;
    auto* cmd_mob = app.add_subcommand("moebius", "Moebius function between two elements");
    cmd_mob->add_option("--n", mob_n, "ground set size")->required();
    cmd_mob->add_option("--from", mob_from, "lower element (JSON), default bottom");
    cmd_mob->add_option("--to", mob_to, "upper element (JSON), default top");
    cmd_mob->add_flag("--float", mob_float, "append decimal rendering");

    // transform
    std::string tr_input = "-";
    bool tr_inverse = false;
    auto* cmd_tr = app.add_subcommand(
        "transform", "Moebius transform of a game (or zeta transform with --inverse)");
    cmd_tr->add_option("--game", tr_input, "game JSON file, - for stdin");
    cmd_tr->add_flag("--inverse", tr_inverse, "treat input as a Moebius vector, output the game");

    // check
    CheckOptions check_opt;
    auto* cmd_check = app.add_subcommand("check", "check a game property; exit 1 on false");
    cmd_check->add_option("--game", check_opt.game_path, "game JSON file, - for stdin");
    cmd_check
        ->add_option("--property", check_opt.property,
                     "monotone|supermodular|submodular|additive|k-monotone|infty-monotone|"
                     "belief|invertible-belief|minitive")
        ->required();
    cmd_check->add_option("--k", check_opt.k, "k for k-monotone");
    int check_bound = 0;
    auto* bound_opt = cmd_check->add_option("--bound", check_bound,
                                            "bound for infty-monotone/belief (default |L|-2)");

    // valuations
    int val_n = 3;
    bool val_fix = false, val_float = false;
    auto* cmd_val = app.add_subcommand("valuations", "basis of the valuation space");
    cmd_val->add_option("--n", val_n, "ground set size")->required();
    cmd_val->add_flag("--fix-bottom-zero", val_fix, "add the equation f(bottom) = 0");
    cmd_val->add_flag("--float", val_float, "append decimal rendering");

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "generate games");
    cmd_gen->require_subcommand(1);
    int gu_n = 3;
    std::string gu_element;
    auto* gen_unan = cmd_gen->add_subcommand("unanimity", "unanimity game u_e");
    gen_unan->add_option("--n", gu_n, "ground set size")->required();
    gen_unan->add_option("--element", gu_element, "element e (JSON)")->required();

    int gm_n = 3;
    std::string gm_chain, gm_masses;
    auto* gen_min = cmd_gen->add_subcommand("minitive", "minitive game from chain masses");
    gen_min->add_option("--n", gm_n, "ground set size")->required();
    gen_min->add_option("--chain", gm_chain, "JSON array of elements")->required();
    gen_min->add_option("--masses", gm_masses, "JSON array of rationals")->required();

    std::string gc_alpha = "0", gc_beta = "0";
    auto* gen_cx = cmd_gen->add_subcommand(
        "counterexample", "two-parameter n=3 family (alpha at atoms, beta at height 2)");
    gen_cx->add_option("--alpha", gc_alpha, "atom value")->required();
    gen_cx->add_option("--beta", gc_beta, "height-2 value")->required();

    int gr_n = 3;
    std::uint64_t gr_seed = 0;
    std::string gr_mode = "uniform";
    auto* gen_rand = cmd_gen->add_subcommand("random", "seeded random game");
    gen_rand->add_option("--n", gr_n, "ground set size")->required();
    gen_rand->add_option("--seed", gr_seed, "seed")->required();
    gen_rand->add_option("--mode", gr_mode, "uniform or belief")
        ->check(CLI::IsMember({"uniform", "belief"}));

    // export
    int exp_n = 3;
    std::string exp_format = "dot", exp_output;
    auto* cmd_exp = app.add_subcommand("export", "Hasse diagram as DOT or JSON");
    cmd_exp->add_option("--n", exp_n, "ground set size")->required();
    cmd_exp->add_option("--format", exp_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    cmd_exp->add_option("--output", exp_output, "output file, default stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_enum->parsed()) {
            const emblat::EmbeddedLattice L = emblat::EmbeddedLattice::build(enum_n);
            if (enum_format == "json") {
                std::cout << emblat::lattice_to_json(L).dump(2) << "\n";
            } else {
                int prev_height = -1;
                for (int i = 0; i < L.size(); ++i) {
                    if (L.height(i) != prev_height) {
                        prev_height = L.height(i);
                        std::cout << "# height " << prev_height << "\n";
                    }
                    std::cout << i << "\t" << L.element(i).str() << "\n";
                }
                std::cout << "# " << L.size() << " elements, " << L.cover_edge_count()
                          << " cover edges\n";
            }
        } else if (cmd_table->parsed()) {
            std::cout << "n\telements\tmaximal chains\n";
            for (int n = table_min; n <= table_max; ++n) {
                std::cout << n << "\t" << emblat::embedded_element_count(n).str() << "\t"
                          << emblat::embedded_chain_count_total(n).str() << "\n";
            }
        } else if (cmd_chains->parsed()) {
            const emblat::EmbeddedSubset from = chains_from.empty()
                                                    ? emblat::EmbeddedSubset::bottom(chains_n)
                                                    : parse_element(chains_from, chains_n);
            const emblat::EmbeddedSubset to = chains_to.empty()
                                                  ? emblat::EmbeddedSubset::top(chains_n)
                                                  : parse_element(chains_to, chains_n);
            if (chains_uncorrected) {
                std::cout << maybe_float(emblat::count_chains_embedded_uncorrected(from, to),
                                         chains_float)
                          << "\n";
            } else if (chains_oracle) {
                const emblat::EmbeddedLattice L = emblat::EmbeddedLattice::build(chains_n);
                std::cout << maybe_float(
                                 L.count_maximal_chains_oracle(L.index_of(from), L.index_of(to)),
                                 chains_float)
                          << "\n";
            } else {
                std::cout << maybe_float(emblat::count_chains_embedded(from, to), chains_float)
                          << "\n";
            }
        } else if (cmd_mob->parsed()) {
            const emblat::EmbeddedSubset from = mob_from.empty()
                                                    ? emblat::EmbeddedSubset::bottom(mob_n)
                                                    : parse_element(mob_from, mob_n);
            const emblat::EmbeddedSubset to = mob_to.empty() ? emblat::EmbeddedSubset::top(mob_n)
                                                             : parse_element(mob_to, mob_n);
            std::cout << maybe_float(emblat::moebius_embedded(from, to), mob_float) << "\n";
        } else if (cmd_tr->parsed()) {
            const json in = json::parse(read_input(tr_input));
            if (tr_inverse) {
                const emblat::MoebiusVector m = emblat::moebius_from_json(in);
                std::cout << emblat::game_to_json(emblat::zeta_transform(m)).dump(2) << "\n";
            } else {
                const emblat::Game g = emblat::game_from_json(in);
                std::cout << emblat::moebius_to_json(emblat::moebius_transform(g)).dump(2)
                          << "\n";
            }
        } else if (cmd_check->parsed()) {
            if (*bound_opt) check_opt.bound = check_bound;
            return run_check(check_opt);
        } else if (cmd_val->parsed()) {
            const emblat::EmbeddedLattice L = emblat::EmbeddedLattice::build(val_n);
            const emblat::ValuationSpace vs = emblat::valuation_space(L, val_fix);
            std::cout << "dimension " << vs.dimension << "\n";
            for (std::size_t b = 0; b < vs.basis.size(); ++b) {
                std::cout << "basis[" << b << "]:";
                for (int i = 0; i < L.size(); ++i)
                    std::cout << " " << maybe_float(vs.basis[b][i], val_float);
                std::cout << "\n";
            }
            if (vs.strictly_monotone_example) {
                std::cout << "strictly monotone valuation:";
                for (int i = 0; i < L.size(); ++i)
                    std::cout << " " << maybe_float((*vs.strictly_monotone_example)[i], val_float);
                std::cout << "\n";
            }
        } else if (cmd_gen->parsed()) {
            emblat::LatticePtr lat;
            std::optional<emblat::Game> game;
            if (gen_unan->parsed()) {
                lat = emblat::build_lattice_shared(gu_n);
                game = emblat::unanimity_game(lat, parse_element(gu_element, gu_n));
            } else if (gen_min->parsed()) {
                lat = emblat::build_lattice_shared(gm_n);
                std::vector<emblat::EmbeddedSubset> chain;
                for (const auto& e : json::parse(gm_chain))
                    chain.push_back(emblat::embedded_from_json(e, gm_n));
                std::vector<emblat::Rational> masses;
                for (const auto& m : json::parse(gm_masses))
                    masses.push_back(emblat::rational_from_json(m));
                game = emblat::generate_minitive(lat, chain, masses);
            } else if (gen_cx->parsed()) {
                lat = emblat::build_lattice_shared(3);
                game = emblat::twoparam_belief(lat, emblat::Rational::parse(gc_alpha),
                                               emblat::Rational::parse(gc_beta));
            } else {
                lat = emblat::build_lattice_shared(gr_n);
                game = emblat::random_game(lat, gr_seed,
                                           gr_mode == "belief"
                                               ? emblat::RandomGameMode::nonneg_moebius
                                               : emblat::RandomGameMode::uniform_values);
            }
            std::cout << emblat::game_to_json(*game).dump(2) << "\n";
        } else if (cmd_exp->parsed()) {
            const emblat::EmbeddedLattice L = emblat::EmbeddedLattice::build(exp_n);
            if (exp_format == "json")
                write_output(exp_output, emblat::lattice_to_json(L).dump(2) + "\n");
            else
                write_output(exp_output, emblat::lattice_to_dot(L));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
