#include "eklr/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "eklr/json_io.hpp"

namespace eklr {

namespace {

struct RunConfig {
    int eps = 1;
    std::string charges = "0";
    int level = 1;
    int window = 4;
    int length = 0;
    int bound = 4;
    uint64_t seed = 1;
    std::string format = "json";
    std::string shape;
    std::string partition;
    std::string dual_partition;
    std::string residue = "0";
    std::string word;
    std::string src, tgt;
    std::string suite = "all";
    std::string flavors;
};

std::vector<Residue> parse_word(const std::string& csv) {
    std::vector<Residue> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(Residue::parse(tok));
    }
    return out;
}

void print_scalar(std::ostream& out, const Scalar& s, const std::string& format) {
    if (format == "json")
        out << to_json(s).dump() << "\n";
    else
        out << s.to_string() << "\n";
}

template <class V>
void print_vector(std::ostream& out, const V& v, const std::string& format) {
    if (format == "json")
        out << to_json(v).dump() << "\n";
    else if (format == "csv") {
        out << "partition,coeff\n";
        for (const auto& [p, c] : v.terms) out << p.to_string() << "," << c.to_string() << "\n";
    } else
        out << v.to_string() << "\n";
}

int print_report(std::ostream& out, const VerifyReport& rep, const std::string& format,
                 bool header = true) {
    if (format == "json") {
        out << to_json(rep).dump() << "\n";
    } else if (format == "csv") {
        if (header) out << "suite,passed,checks\n";
        out << rep.suite << "," << (rep.passed ? "1" : "0") << "," << rep.checks << "\n";
    } else {
        out << "[" << rep.suite << "] " << rep.statement << "\n";
        out << "  checks: " << rep.checks << "  result: " << (rep.passed ? "pass" : "FAIL")
            << "\n";
        for (const auto& f : rep.failures) out << "  counterexample: " << f << "\n";
    }
    return rep.passed ? 0 : 1;
}

ChargeVector charges_of(const RunConfig& cfg) {
    ChargeVector cv = ChargeVector::parse(cfg.charges);
    if (auto bad = cv.validate_generic())
        throw MathError("charge vector is not generic at pair (" + std::to_string(bad->first) +
                        "," + std::to_string(bad->second) + ")");
    return cv;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for the quantum electrical algebra, its Fock spaces and "
                 "the graded arc-diagram calculus",
                 "eklr"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* c) {
        c->add_option("--format", cfg.format, "output format: json, csv or text");
        c->add_option("--epsilon", cfg.eps, "sign parameter, +1 or -1")
            ->check(CLI::IsMember({1, -1}));
    };

    // tableaux
    CLI::App* tab = app.add_subcommand("tableaux", "walks on multipartitions");
    CLI::App* tab_count = tab->add_subcommand("count", "count walks of a given length and shape");
    CLI::App* tab_list = tab->add_subcommand("list", "list walks of a given length and shape");
    for (CLI::App* c : {tab_count, tab_list}) {
        c->add_option("--level", cfg.level, "number of components");
        c->add_option("--length", cfg.length, "walk length")->required();
        c->add_option("--shape", cfg.shape, "final shape, components separated by |");
        c->add_option("--charges", cfg.charges, "charge vector (symbolic d1,d2 or rationals)");
        add_common(c);
    }

    // fock
    CLI::App* fock = app.add_subcommand("fock", "Fock space actions and involutions");
    CLI::App* f_act = fock->add_subcommand("act", "apply one generator to a basis vector");
    CLI::App* f_word = fock->add_subcommand("word", "apply a generator word to a basis vector");
    CLI::App* f_bar = fock->add_subcommand("bar", "bar image of a basis vector");
    CLI::App* f_tau = fock->add_subcommand("tau", "transpose intertwiner image of a basis vector");
    CLI::App* f_pair = fock->add_subcommand("pair", "pair a dual vector against a vector");
    for (CLI::App* c : {f_act, f_word, f_bar, f_tau, f_pair}) {
        c->add_option("--charge", cfg.charges, "charge (rational or d1)");
        c->add_option("--partition", cfg.partition, "partition, comma separated parts");
        add_common(c);
    }
    f_act->add_option("--i", cfg.residue, "generator index (residue)")->required();
    f_word->add_option("--word", cfg.word, "comma separated residues")->required();
    f_pair->add_option("--dual-partition", cfg.dual_partition, "dual side partition");
    f_pair->add_option("--dual-word", cfg.word, "word applied to the dual side first");

    // klr
    CLI::App* klr = app.add_subcommand("klr", "graded arc-diagram calculus");
    CLI::App* k_gdim = klr->add_subcommand("gdim", "graded dimension between residue sequences");
    CLI::App* k_act = klr->add_subcommand("act", "degrees of the induced action on standards");
    CLI::App* k_rel = klr->add_subcommand("verify-relations",
                                          "graded-dimension identities of the defining relations");
    for (CLI::App* c : {k_gdim, k_act, k_rel}) {
        c->add_option("--level", cfg.level, "number of components");
        c->add_option("--charges", cfg.charges, "charge vector");
        add_common(c);
    }
    k_gdim->add_option("--src", cfg.src, "source residue sequence")->required();
    k_gdim->add_option("--tgt", cfg.tgt, "target residue sequence")->required();
    k_act->add_option("--partition", cfg.partition, "partition, comma separated parts");
    k_act->add_option("--i", cfg.residue, "generator index (residue)")->required();
    k_rel->add_option("--bound", cfg.bound, "maximal target sequence length");

    // verify
    CLI::App* ver = app.add_subcommand("verify", "relation and consistency suites");
    ver->add_option("suite", cfg.suite,
                    "suite name or 'all'; names: " + [] {
                        std::string s;
                        for (const auto& n : verify_suite_names()) s += n + " ";
                        return s;
                    }());
    ver->add_option("--window", cfg.window, "index window for basis tuples");
    ver->add_option("--seed", cfg.seed, "seed for randomized checks");
    ver->add_option("--flavors", cfg.flavors,
                    "restrict tensor suites to one connective pattern, e.g. 2,1");
    add_common(ver);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (tab_count->parsed() || tab_list->parsed()) {
            CLI::App* active = tab_count->parsed() ? tab_count : tab_list;
            if (active->count("--charges")) charges_of(cfg);
            Multipartition shape = Multipartition::parse(cfg.shape, cfg.level);
            auto all = enumerate_tableaux(cfg.length, shape);
            if (tab_count->parsed()) {
                if (cfg.format == "json")
                    out << Json{{"count", all.size()}}.dump() << "\n";
                else
                    out << all.size() << "\n";
            } else {
                if (cfg.format == "json") {
                    Json a = Json::array();
                    for (const auto& t : all) a.push_back(to_json(t));
                    out << a.dump() << "\n";
                } else {
                    for (const auto& t : all) out << t.to_string() << "\n";
                }
            }
            return 0;
        }
        if (f_act->parsed() || f_word->parsed()) {
            ChargeVector cv = charges_of(cfg);
            if (cv.level() == 1) {
                FockVector v =
                    FockVector::basis(Partition::parse(cfg.partition), cv.charge(1), cfg.eps);
                FockVector r = f_act->parsed()
                                   ? act_generator(v, Residue::parse(cfg.residue))
                                   : act_word(v, parse_word(cfg.word));
                print_vector(out, r, cfg.format);
            } else {
                MultiFockVector v = MultiFockVector::basis(
                    Multipartition::parse(cfg.partition, cv.level()), cv, cfg.eps);
                MultiFockVector r = f_act->parsed()
                                        ? multi_act(v, Residue::parse(cfg.residue))
                                        : multi_act_word(v, parse_word(cfg.word));
                print_vector(out, r, cfg.format);
            }
            return 0;
        }
        if (f_bar->parsed() || f_tau->parsed()) {
            ChargeVector cv = charges_of(cfg);
            Partition lam = Partition::parse(cfg.partition);
            DualFockVector r = f_bar->parsed() ? bar_fock(lam, cv.charge(1), cfg.eps)
                                               : tau_fock(lam, cv.charge(1), cfg.eps);
            print_vector(out, r, cfg.format);
            return 0;
        }
        if (f_pair->parsed()) {
            ChargeVector cv = charges_of(cfg);
            DualFockVector w =
                DualFockVector::basis(Partition::parse(cfg.dual_partition), cv.charge(1), cfg.eps);
            if (!cfg.word.empty()) w = dual_act_word(w, parse_word(cfg.word));
            FockVector v = FockVector::basis(Partition::parse(cfg.partition), cv.charge(1), cfg.eps);
            print_scalar(out, pairing(w, v), cfg.format);
            return 0;
        }
        if (k_gdim->parsed()) {
            ChargeVector cv = charges_of(cfg);
            LaurentPoly g =
                graded_hom_dim(parse_word(cfg.src), parse_word(cfg.tgt), cv, cfg.eps);
            if (cfg.format == "json")
                out << to_json(g).dump() << "\n";
            else
                out << g.to_string() << "\n";
            return 0;
        }
        if (k_act->parsed()) {
            ChargeVector cv = charges_of(cfg);
            auto acts = eklr_act(Partition::parse(cfg.partition), Residue::parse(cfg.residue),
                                 cv.charge(1), cfg.eps);
            if (cfg.format == "json") {
                Json a = Json::array();
                for (const auto& [mu, d] : acts)
                    a.push_back({{"partition", to_json(mu)}, {"degree", d}});
                out << a.dump() << "\n";
            } else {
                for (const auto& [mu, d] : acts)
                    out << mu.to_string() << " degree " << d << "\n";
            }
            return 0;
        }
        if (k_rel->parsed()) {
            ChargeVector cv = charges_of(cfg);
            VerifyReport rep;
            rep.suite = "gdim";
            rep.statement =
                "graded-dimension identities of the defining relations on projective classes";
            const Residue& d0 = cv.charge(1);
            for (const auto& [i, j] :
                 std::vector<std::pair<Residue, Residue>>{{d0, d0.plus(1)},
                                                          {d0, d0.plus(-1)},
                                                          {d0, d0.plus(2)}}) {
                auto sub = relations_gdim_check(i, j, cfg.bound, cv, cfg.eps);
                rep.checks += sub.cases;
                if (!sub.passed)
                    for (const auto& f : sub.failures) rep.fail(f);
            }
            return print_report(out, rep, cfg.format);
        }
        if (ver->parsed()) {
            int rc = 0;
            std::vector<std::string> names =
                cfg.suite == "all" ? verify_suite_names() : std::vector<std::string>{cfg.suite};
            bool first = true;
            for (const auto& name : names) {
                VerifyReport rep =
                    run_verify_suite(name, cfg.window, cfg.eps, cfg.seed, cfg.flavors);
                rc |= print_report(out, rep, cfg.format, first);
                first = false;
            }
            return rc;
        }
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand executed\n" << app.help();
    return 2;
}

}  // namespace eklr
