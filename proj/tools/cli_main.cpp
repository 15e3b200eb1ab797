// Command-line front end: exact chromatic symmetric functions of posets and
// part listings, listing reductions, enumeration and verification sweeps.
//
// Exit codes: 0 success, 1 mathematical counterexample found, 2 usage or
// input error.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "csfkit/chromatic.hpp"
#include "csfkit/io_json.hpp"
#include "csfkit/listing.hpp"
#include "csfkit/modular.hpp"
#include "csfkit/parallel.hpp"
#include "csfkit/poset.hpp"
#include "csfkit/symfunc.hpp"
#include "csfkit/verify.hpp"

namespace {

using namespace csfkit;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

PartListing load_listing(const std::string& text) {
    if (looks_like_json(text)) return listing_from_json(nlohmann::json::parse(text));
    std::string trimmed = text;
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r'))
        trimmed.pop_back();
    return parse_listing(trimmed);
}

PosetClass parse_class(const std::string& name) {
    if (name == "all") return PosetClass::All;
    if (name == "3p1free") return PosetClass::ThreePlusOneFree;
    if (name == "both") return PosetClass::BothFree;
    throw CLI::ValidationError("--class", "expected one of: all, 3p1free, both");
}

unsigned parse_reductions(const std::string& csv) {
    unsigned flags = kReduceNone;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "split")
            flags |= kReduceSplit;
        else if (item == "dual")
            flags |= kReduceDual;
        else if (item == "ududud" || item == "udu_dud")
            flags |= kReduceUduDud;
        else
            throw CLI::ValidationError("--reductions", "expected: split, dual, udu_dud");
    }
    return flags;
}

void print_symfunc(const SymFunc& f, bool as_json) {
    if (as_json)
        std::cout << symfunc_to_json(f).dump() << "\n";
    else
        std::cout << sf_to_text(f) << "\n";
}

int run_verify_modular(long samples, int max_size, std::uint64_t seed) {
    VerificationReport report = verify_modular_random(samples, max_size, seed);
    if (!report.pass()) {
        std::cout << report_to_json_string(report) << "\n";
        return 1;
    }
    std::cout << "modular: " << report.checked << "/" << samples << " identities hold\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic symmetric function toolkit"};
    app.require_subcommand(1);

    // csf
    std::string poset_file, listing_file, listing_str;
    bool have_listing_str = false;
    std::string basis = "m";
    bool as_json = false;
    auto* cmd_csf = app.add_subcommand("csf", "Chromatic symmetric function of a poset or listing");
    auto* opt_poset = cmd_csf->add_option("--poset", poset_file, "poset JSON file");
    auto* opt_listing = cmd_csf->add_option("--listing", listing_file, "listing file (text or JSON)");
    auto* opt_listing_str =
        cmd_csf->add_option("--listing-str", listing_str, "listing as a command-line string");
    opt_poset->excludes(opt_listing)->excludes(opt_listing_str);
    opt_listing->excludes(opt_listing_str);
    cmd_csf->add_option("--basis", basis, "output basis: m or e")
        ->check(CLI::IsMember({"m", "e"}));
    cmd_csf->add_flag("--json", as_json, "JSON output");

    // expand3free
    std::string graph_literal_arg;
    auto* cmd_expand = app.add_subcommand(
        "expand3free", "Elementary-basis expansion for a two-level poset given as a graph");
    cmd_expand->add_option("--graph", graph_literal_arg, "graph literal, e.g. 4x2:1-1,2-1")->required();
    cmd_expand->add_flag("--json", as_json, "JSON output");

    // reduce
    auto* cmd_reduce =
        app.add_subcommand("reduce", "Rewrite a listing as a convex combination of vertex-only listings");
    auto* ropt_listing = cmd_reduce->add_option("--listing", listing_file, "listing file");
    auto* ropt_listing_str =
        cmd_reduce->add_option("--listing-str", listing_str, "listing as a string");
    ropt_listing->excludes(ropt_listing_str);
    cmd_reduce->add_flag("--json", as_json, "JSON output");

    // verify modular
    long samples = 100;
    int max_size = 8;
    std::uint64_t seed = 0;
    auto* cmd_verify = app.add_subcommand("verify", "Identity checks");
    auto* cmd_modular = cmd_verify->add_subcommand("modular", "Random modular-law identities");
    cmd_modular->add_option("--samples", samples, "number of random contexts");
    cmd_modular->add_option("--max-size", max_size, "total vertex bound per context");
    cmd_modular->add_option("--seed", seed, "RNG seed");
    cmd_verify->require_subcommand(1);

    // enumerate
    int n = 0;
    std::string cls_name = "all";
    bool count_only = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "Posets up to isomorphism");
    cmd_enum->add_option("--n", n, "vertex count")->required();
    cmd_enum->add_option("--class", cls_name, "all | 3p1free | both");
    cmd_enum->add_flag("--count-only", count_only, "print only the count");

    // check-epos
    std::string reductions_csv;
    int jobs = 0;
    auto* cmd_epos = app.add_subcommand("check-epos", "e-positivity sweep over a poset class");
    cmd_epos->add_option("--n", n, "vertex count")->required();
    cmd_epos->add_option("--class", cls_name, "all | 3p1free | both");
    cmd_epos->add_option("--reductions", reductions_csv, "comma list: split,dual");
    cmd_epos->add_option("--jobs", jobs, "worker threads (default: all processors)");

    // counts
    int max_n = 7;
    auto* cmd_counts = app.add_subcommand("counts", "Class counts by vertex count");
    cmd_counts->add_option("--max-n", max_n, "largest vertex count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_csf->parsed()) {
            have_listing_str = opt_listing_str->count() > 0;
            int sources = (opt_poset->count() ? 1 : 0) + (opt_listing->count() ? 1 : 0) +
                          (have_listing_str ? 1 : 0);
            if (sources != 1) {
                std::cerr << "csf: exactly one of --poset, --listing, --listing-str required\n";
                return 2;
            }
            SymFunc f;
            if (opt_poset->count())
                f = csf_poset(poset_from_json(nlohmann::json::parse(read_file(poset_file))));
            else if (opt_listing->count())
                f = csf_listing(load_listing(read_file(listing_file)));
            else
                f = csf_listing(parse_listing(listing_str));
            print_symfunc(to_basis(f, basis == "e" ? Basis::E : Basis::M), as_json);
            return 0;
        }
        if (cmd_expand->parsed()) {
            SymFunc f = three_free_e_expansion(parse_graph_literal(graph_literal_arg));
            print_symfunc(f, as_json);
            return 0;
        }
        if (cmd_reduce->parsed()) {
            if ((ropt_listing->count() ? 1 : 0) + (ropt_listing_str->count() ? 1 : 0) != 1) {
                std::cerr << "reduce: exactly one of --listing, --listing-str required\n";
                return 2;
            }
            PartListing listing = ropt_listing->count() ? load_listing(read_file(listing_file))
                                                        : parse_listing(listing_str);
            LinListing reduced = reduce_listing(listing);
            if (as_json) {
                nlohmann::json terms = nlohmann::json::array();
                for (const auto& [c, term] : reduced.terms())
                    terms.push_back(nlohmann::json{{"coeff", rat_to_string(c)},
                                                   {"listing", serialize_listing(term)}});
                std::cout << nlohmann::json{{"terms", terms}}.dump() << "\n";
            } else {
                for (const auto& [c, term] : reduced.terms())
                    std::cout << rat_to_string(c) << " * " << serialize_listing(term) << "\n";
            }
            return 0;
        }
        if (cmd_modular->parsed()) return run_verify_modular(samples, max_size, seed);
        if (cmd_enum->parsed()) {
            std::vector<Poset> reps = enumerate_posets(n, parse_class(cls_name));
            if (count_only) {
                std::cout << reps.size() << "\n";
            } else {
                for (const Poset& p : reps) std::cout << poset_to_json(p).dump() << "\n";
            }
            return 0;
        }
        if (cmd_epos->parsed()) {
            VerificationReport report =
                check_epositivity(n, parse_class(cls_name), parse_reductions(reductions_csv), jobs);
            std::cout << report_to_json_string(report) << "\n";
            return report.pass() ? 0 : 1;
        }
        if (cmd_counts->parsed()) {
            Table1 t = table1_counts(max_n);
            auto print_row = [](const std::string& label, const std::vector<long>& row) {
                std::cout << label;
                for (std::size_t k = 1; k < row.size(); ++k) std::cout << " " << row[k];
                std::cout << "\n";
            };
            print_row("all", t.all);
            print_row("3p1free", t.three_plus_one_free);
            print_row("both", t.both_free);
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
