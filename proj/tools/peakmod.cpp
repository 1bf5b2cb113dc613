#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "peakmod/bijections.hpp"
#include "peakmod/counting.hpp"
#include "peakmod/enumeration.hpp"
#include "peakmod/render.hpp"
#include "peakmod/statistics.hpp"
#include "peakmod/transforms.hpp"
#include "peakmod/verify.hpp"

using namespace peakmod;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct FamilyArgs {
    int k = 1;
    std::optional<int> down_size;
    std::optional<int> length;
    std::string levels;
    int end_height = 0;
    std::optional<std::uint64_t> limit;
    int jobs = 1;

    FamilySpec spec() const { return FamilySpec::make(k, parse_levels(levels), end_height); }

    FamilyQuery query() const {
        if (down_size.has_value() == length.has_value()) {
            throw Error(ErrorCode::InvalidArgument, "give exactly one of --down-size and --length");
        }
        return down_size ? FamilyQuery::by_down_size(spec(), *down_size) : FamilyQuery::by_length(spec(), *length);
    }

    EnumerationLimits limits() const {
        EnumerationLimits l = EnumerationLimits::from_env();
        if (limit) l.max_objects = *limit;
        return l;
    }
};

void add_family(CLI::App* cmd, FamilyArgs& a) {
    cmd->add_option("--k", a.k, "Down-step drop k")->check(CLI::PositiveNumber);
    cmd->add_option("--down-size", a.down_size, "Number of down-steps")->check(CLI::NonNegativeNumber);
    cmd->add_option("--length", a.length, "Total length |P|")->check(CLI::NonNegativeNumber);
    cmd->add_option("--levels", a.levels, "Level alphabet a:c[,a:c]*");
    cmd->add_option("--end-height", a.end_height, "Final height m")->check(CLI::NonNegativeNumber);
    cmd->add_option("--limit", a.limit, "Maximum number of generated objects");
    cmd->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

// "-" reads the whole of stdin.
std::string read_arg(const std::string& value) {
    std::string text = value;
    if (value == "-") text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    return text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
}

struct PathArgs {
    int k = 1;
    std::string levels;
    int end_height = 0;
    std::string path;

    LatticePath parse() const {
        return parse_path(read_arg(path), FamilySpec::make(k, parse_levels(levels), end_height));
    }
};

CLI::Option* add_path(CLI::App* cmd, PathArgs& a, bool required = true) {
    cmd->add_option("--k", a.k, "Down-step drop k")->check(CLI::PositiveNumber);
    cmd->add_option("--levels", a.levels, "Level alphabet a:c[,a:c]*");
    cmd->add_option("--end-height", a.end_height, "Final height m")->check(CLI::NonNegativeNumber);
    auto* opt = cmd->add_option("--path", a.path, "Path text, or - for stdin");
    if (required) opt->required();
    return opt;
}

std::string series_output(const TruncSeries& s, const std::string& format) {
    return format == "json" ? s.to_json() + "\n" : s.to_text();
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"Lattice paths with peak statistics modulo k"};
    app.require_subcommand(1);

    // enumerate
    FamilyArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "List every path of a family, one per line");
    add_family(enumerate, en);

    // histogram
    FamilyArgs hi;
    std::string hi_variant = "plain";
    std::string hi_format = "json";
    auto* hist = app.add_subcommand("histogram", "Tally statistic vectors over a family");
    add_family(hist, hi);
    hist->add_option("--variant", hi_variant, "plain|weak|plain-starred|weak-starred");
    hist->add_option("--format", hi_format)->check(CLI::IsMember({"json", "csv"}));

    // stats
    PathArgs st;
    std::string st_variant = "plain";
    auto* stats = app.add_subcommand("stats", "Statistic vector of one path");
    add_path(stats, st);
    stats->add_option("--variant", st_variant, "plain|weak|plain-starred|weak-starred");

    // count
    auto* count = app.add_subcommand("count", "Closed-form counts and generating functions");
    count->require_subcommand(1);
    int c_k = 1, c_n = 1, c_m = 0, c_order = 5;
    int c_r = 0;
    std::vector<int> c_vec;
    std::string c_levels, c_format = "text";
    bool c_plain = false;
    auto* c_joint = count->add_subcommand("joint", "Paths with (pk_0..pk_{k-1},dd) = r");
    auto* c_lagrange = count->add_subcommand("lagrange", "Same count read off the Lagrange form");
    for (auto* c : {c_joint, c_lagrange}) {
        c->add_option("--k", c_k)->check(CLI::PositiveNumber);
        c->add_option("--n", c_n)->required()->check(CLI::PositiveNumber);
        c->add_option("--r", c_vec)->required()->delimiter(',');
    }
    auto* c_marginal = count->add_subcommand("marginal", "Paths on which one statistic equals r");
    auto* c_pk = count->add_subcommand("pk", "Paths with r non-rightmost peaks");
    for (auto* c : {c_marginal, c_pk}) {
        c->add_option("--k", c_k)->check(CLI::PositiveNumber);
        c->add_option("--n", c_n)->required()->check(CLI::PositiveNumber);
        c->add_option("--r", c_r)->required()->check(CLI::NonNegativeNumber);
    }
    auto* c_narayana = count->add_subcommand("narayana", "N(n,r): Dyck paths with r peaks");
    c_narayana->add_option("--n", c_n)->required()->check(CLI::PositiveNumber);
    c_narayana->add_option("--r", c_r)->required();
    auto* c_fuss = count->add_subcommand("fuss-catalan", "Number of k-Dyck paths of down-size n");
    c_fuss->add_option("--k", c_k)->check(CLI::PositiveNumber);
    c_fuss->add_option("--n", c_n)->required()->check(CLI::NonNegativeNumber);
    auto* c_ballot = count->add_subcommand("ballot", "Ballot paths with (pk*_0..pk*_{k-1},dd) = s");
    c_ballot->add_option("--k", c_k)->check(CLI::PositiveNumber);
    c_ballot->add_option("--m", c_m)->required()->check(CLI::NonNegativeNumber);
    c_ballot->add_option("--n", c_n)->required()->check(CLI::PositiveNumber);
    c_ballot->add_option("--s", c_vec)->required()->delimiter(',');
    auto* c_series = count->add_subcommand("series", "Truncated solution of the path equation");
    auto* c_bseries = count->add_subcommand("ballot-series", "Truncated ballot generating function");
    for (auto* c : {c_series, c_bseries}) {
        c->add_option("--k", c_k)->check(CLI::PositiveNumber);
        c->add_option("--order", c_order)->check(CLI::NonNegativeNumber);
        c->add_option("--levels", c_levels, "Level alphabet a:c[,a:c]*; x then marks length");
        c->add_option("--format", c_format)->check(CLI::IsMember({"text", "json"}));
    }
    c_series->add_flag("--no-markers", c_plain, "Set every marker to 1");
    c_bseries->add_option("--m", c_m)->required()->check(CLI::NonNegativeNumber);

    // map
    auto* map = app.add_subcommand("map", "Bijections and transforms");
    map->require_subcommand(1);
    PathArgs mp;
    std::string m_tree;
    int m_power = 1, m_height = 0;
    std::optional<int> m_arity;
    bool m_labels = false;
    std::vector<int> m_sigma;
    auto* m_psi = map->add_subcommand("psi", "Path to (k+1)-ary tree");
    add_path(m_psi, mp);
    m_psi->add_flag("--labels", m_labels, "Label nodes by the features they come from");
    auto* m_psi_inv = map->add_subcommand("psi-inv", "(k+1)-ary tree to path");
    m_psi_inv->add_option("--k", mp.k)->check(CLI::PositiveNumber);
    m_psi_inv->add_option("--tree", m_tree, "Tree JSON, or - for stdin")->required();
    auto* m_kappa = map->add_subcommand("kappa", "Cyclic shift");
    add_path(m_kappa, mp);
    m_kappa->add_option("--power", m_power);
    auto* m_lift = map->add_subcommand("lift", "Same steps from a higher start");
    add_path(m_lift, mp);
    m_lift->add_option("--height", m_height)->required()->check(CLI::NonNegativeNumber);
    auto* m_deutsch = map->add_subcommand("deutsch", "Peak/double-descent involution on Dyck paths");
    add_path(m_deutsch, mp);
    auto* m_permute = map->add_subcommand("permute", "Permute statistic slots of a path, or subtree positions of a tree");
    auto* m_permute_path = add_path(m_permute, mp, false);
    auto* m_permute_tree = m_permute->add_option("--tree", m_tree, "Tree JSON, or - for stdin");
    m_permute->add_option("--arity", m_arity, "Tree arity (default k+1)");
    m_permute->add_option("--sigma", m_sigma, "Permutation of 1..m, comma separated")->required()->delimiter(',');

    // verify
    std::string v_suite;
    VerifyOptions v_opts;
    std::optional<std::uint64_t> v_limit;
    std::string v_format = "text";
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", v_suite)->required()->check(CLI::IsMember(suites));
    verify->add_option("--k", v_opts.k)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", v_opts.max_n)->check(CLI::NonNegativeNumber);
    verify->add_option("--max-m", v_opts.max_m)->check(CLI::NonNegativeNumber);
    verify->add_option("--max-length", v_opts.max_length)->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", v_opts.jobs)->check(CLI::PositiveNumber);
    verify->add_option("--limit", v_limit);
    verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));

    // render
    PathArgs rp;
    std::string r_tree, r_format = "ascii";
    std::optional<int> r_arity;
    bool r_labels = false, r_psi = false;
    auto* render = app.add_subcommand("render", "Draw a path or a tree");
    auto* r_path_opt = add_path(render, rp, false);
    auto* r_tree_opt = render->add_option("--tree", r_tree, "Tree JSON, or - for stdin");
    render->add_option("--arity", r_arity, "Tree arity (default k+1)");
    render->add_option("--format", r_format)->check(CLI::IsMember({"ascii", "svg"}));
    render->add_flag("--labels", r_labels, "Mark peaks and double descents");
    render->add_flag("--psi", r_psi, "Draw the labelled tree of the path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) {
            auto print = [](const LatticePath& p) { std::cout << render_path(p) << '\n'; };
            if (en.jobs == 1) {
                for_each_path(en.query(), print, en.limits());
            } else {
                for (const auto& p : collect_paths(en.query(), en.limits(), en.jobs)) print(p);
            }
        } else if (*hist) {
            const FamilyQuery q = hi.query();
            const Histogram h = histogram(q, parse_variant(hi_variant), hi.limits(), hi.jobs);
            std::cout << (hi_format == "csv" ? h.to_csv() : h.to_json() + "\n");
        } else if (*stats) {
            std::cout << stat_vector_json(stat_vector(st.parse(), parse_variant(st_variant))) << '\n';
        } else if (*count) {
            if (*c_joint) std::cout << count_joint(c_k, c_n, c_vec) << '\n';
            if (*c_lagrange) std::cout << lagrange_coefficient(c_k, c_n, c_vec) << '\n';
            if (*c_marginal) std::cout << count_marginal(c_k, c_n, c_r) << '\n';
            if (*c_pk) std::cout << count_pk(c_k, c_n, c_r) << '\n';
            if (*c_narayana) std::cout << narayana(c_n, c_r) << '\n';
            if (*c_fuss) std::cout << fuss_catalan(c_k, c_n) << '\n';
            if (*c_ballot) {
                const FamilySpec spec = FamilySpec::ballot(c_k, c_m);
                std::cout << count_ballot_joint(c_k, spec.ell(), spec.residue(), c_n, c_vec) << '\n';
            }
            if (*c_series) {
                if (c_levels.empty()) {
                    std::cout << series_output(solve_f(c_k, c_order, !c_plain), c_format);
                } else {
                    if (c_plain) throw Error(ErrorCode::InvalidArgument, "--no-markers needs a pure family");
                    std::cout << series_output(solve_f_kac(FamilySpec::make(c_k, parse_levels(c_levels), 0), c_order),
                                               c_format);
                }
            }
            if (*c_bseries) {
                const TruncSeries g = c_levels.empty()
                                          ? solve_g(c_k, c_m, c_order)
                                          : solve_g_kac(FamilySpec::make(c_k, parse_levels(c_levels), 0), c_m, c_order);
                std::cout << series_output(g, c_format);
            }
        } else if (*map) {
            if (*m_psi) {
                const LatticePath p = mp.parse();
                std::cout << tree_to_json(m_labels ? psi_with_labels(p) : psi(p)) << '\n';
            } else if (*m_psi_inv) {
                std::cout << render_path(psi_inv(tree_from_json(read_arg(m_tree), mp.k + 1), mp.k)) << '\n';
            } else if (*m_kappa) {
                std::cout << render_path(kappa(mp.parse(), m_power)) << '\n';
            } else if (*m_lift) {
                const LatticePath p = lift(mp.parse(), m_height);
                nlohmann::ordered_json j;
                j["path"] = render_path(p);
                j["start_height"] = p.start_height();
                j["heights"] = height_profile(p);
                std::cout << j.dump() << '\n';
            } else if (*m_deutsch) {
                std::cout << render_path(deutsch(mp.parse())) << '\n';
            } else if (*m_permute) {
                if (m_permute_path->count() + m_permute_tree->count() != 1) {
                    throw Error(ErrorCode::InvalidArgument, "give exactly one of --path and --tree");
                }
                if (m_permute_tree->count()) {
                    const PositionalTree t = tree_from_json(read_arg(m_tree), m_arity.value_or(mp.k + 1));
                    std::cout << tree_to_json(permute_subtrees(t, m_sigma)) << '\n';
                } else {
                    std::cout << render_path(stat_permuter(mp.parse(), m_sigma)) << '\n';
                }
            }
        } else if (*verify) {
            v_opts.limits = EnumerationLimits::from_env();
            if (v_limit) v_opts.limits.max_objects = *v_limit;
            std::vector<std::string> run = v_suite == "all" ? suite_names() : std::vector<std::string>{v_suite};
            bool ok = true;
            for (const std::string& name : run) {
                const VerifyReport rep = run_suite(name, v_opts);
                std::cout << (v_format == "json" ? rep.to_json() + "\n" : rep.to_text());
                ok = ok && rep.ok();
            }
            return ok ? 0 : kExitVerifyFailed;
        } else if (*render) {
            if (r_path_opt->count() + r_tree_opt->count() != 1) {
                throw Error(ErrorCode::InvalidArgument, "give exactly one of --path and --tree");
            }
            if (r_tree_opt->count() || r_psi) {
                const PositionalTree t = !r_tree_opt->count() ? psi_with_labels(rp.parse())
                                                        : tree_from_json(read_arg(r_tree), r_arity.value_or(rp.k + 1));
                std::cout << (r_format == "svg" ? render_tree_svg(t) : render_tree_ascii(t));
            } else {
                const LatticePath p = rp.parse();
                std::cout << (r_format == "svg" ? render_path_svg(p, r_labels) : render_path_ascii(p, r_labels));
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::ResourceLimit ? kExitResource : kExitUsage;
    }
    std::cout.flush();
    return 0;
}
