#include "ramsey/cli.hpp"

#include "ramsey/certify.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/rbc.hpp"
#include "ramsey/witnesses.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

namespace ramsey {

namespace {

namespace fs = std::filesystem;

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct Options {
    std::string witness_dir;
    std::string witness_file;

    std::string family;
    std::string output;

    std::string rbc_path;
    std::string red;
    std::string blue;
    std::string cert_path;

    std::string base;
    std::string witness_key;
    std::string factor = "complete:2";
    bool as_red = false;

    std::string which = "all";

    std::size_t order = 0;
    std::string avoid;
    std::string avoid_c;
    std::uint64_t budget = 100000;
    std::uint64_t seed = 1;

    std::string graph;
    std::string pattern;
};

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

template <class T>
std::string join_list(const std::vector<T>& v, const char* sep = " ") {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s << (i ? sep : "") << v[i];
    }
    return s.str();
}

int to_int(std::string_view s, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (!s.empty()) {
        const auto pos = s.find(sep);
        if (pos != 0) {
            out.push_back(s.substr(0, pos));
        }
        if (pos == std::string_view::npos) {
            break;
        }
        s.remove_prefix(pos + 1);
    }
    return out;
}

fs::path witness_root(const Options& o) { return o.witness_dir.empty() ? default_witness_dir() : fs::path(o.witness_dir); }

// A witness reference is a registry key such as k3k5, or a graph6 file.
Graph resolve_witness(const Options& o, std::string_view ref) {
    if (!o.witness_file.empty()) {
        return load_graph6_file(o.witness_file);
    }
    if (auto key = parse_witness_key(ref)) {
        return bundled_witness(*key, witness_root(o)).graph();
    }
    if (fs::exists(fs::path(ref))) {
        return load_graph6_file(fs::path(ref));
    }
    throw PreconditionError("unknown witness '" + std::string(ref) + "': not a registry key or a readable file");
}

// Accepts either a path to a graph6 file or an inline graph6 string.
Graph load_graph_argument(const std::string& arg) {
    if (fs::exists(arg)) {
        return load_graph6_file(arg);
    }
    return from_graph6(arg);
}

Metadata construction_metadata(const Construction& c) {
    std::vector<std::string> blocks;
    for (const auto& b : c.blocks) {
        blocks.push_back(b.name + ":" + std::to_string(b.first) + ":" + std::to_string(b.size));
    }
    return {
        {"family", std::string(family_name(c.family))},
        {"spec", c.spec},
        {"params", join_ints(c.params)},
        {"claimed_bound", std::to_string(c.claimed_bound)},
        {"red_target", to_string(c.red_target)},
        {"blue_target", to_string(c.blue_target)},
        {"blocks", join_list(blocks)},
    };
}

ConstructionDescriptor descriptor_from_metadata(const RbcFile& file) {
    ConstructionDescriptor d;
    if (auto family = file.meta("family"); !family.empty()) {
        d.family = family;
    }
    d.spec = file.meta("spec");
    const auto params = file.meta("params");
    for (auto p : split(params, ',')) {
        d.params.push_back(to_int(p, "params entry"));
    }
    if (auto bound = file.meta("claimed_bound"); !bound.empty()) {
        d.claimed_bound = to_int(bound, "claimed_bound");
    }
    const auto blocks = file.meta("blocks");
    for (auto b : split(blocks, ' ')) {
        const auto parts = split(b, ':');
        if (parts.size() != 3) {
            throw ParseError("bad block metadata '" + std::string(b) + "'");
        }
        d.blocks.push_back({std::string(parts[0]), static_cast<Vertex>(to_int(parts[1], "block start")),
                            static_cast<std::size_t>(to_int(parts[2], "block size"))});
    }
    return d;
}

void describe(std::ostream& out, const Certificate& cert) {
    out << "order " << cert.order << '\n';
    out << "red " << to_string(cert.red_target) << " blue "
        << (cert.blue_target ? to_string(*cert.blue_target) : std::string("-")) << '\n';
    if (cert.verified()) {
        out << "verified\n";
    } else {
        const auto& ce = *cert.counterexample;
        out << "refuted: " << (ce.color == Color::Red ? "red " : "blue ")
            << to_string(ce.color == Color::Red ? cert.red_target : *cert.blue_target) << " on "
            << join_list(ce.vertices) << '\n';
    }
    out << "sha256 " << cert.coloring_sha << '\n';
}

void write_certificate(const fs::path& path, const Certificate& cert) {
    write_text_file(path, to_json(cert).dump(2) + "\n");
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    const auto c = build_from_spec(o.family, [&](std::string_view ref) { return resolve_witness(o, ref); });
    for (const auto& w : c.warnings) {
        err << "warning: " << w << '\n';
    }
    const auto text = to_rbc(c.coloring, construction_metadata(c));
    if (o.output.empty()) {
        out << text;
        return kExitOk;
    }
    write_text_file(o.output, text);
    out << "order " << c.coloring.order() << '\n';
    out << "claimed_bound " << c.claimed_bound << '\n';
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    const auto file = read_rbc_file(o.rbc_path);
    const auto red_text = o.red.empty() ? file.meta("red_target") : o.red;
    const auto blue_text = o.blue.empty() ? file.meta("blue_target") : o.blue;
    if (red_text.empty() || blue_text.empty()) {
        throw ParseError("no target pattern: pass --red and --blue");
    }
    const auto cert = verify(file.coloring, parse_pattern(red_text), parse_pattern(blue_text),
                             descriptor_from_metadata(file));
    const auto cert_path = o.cert_path.empty() ? fs::path(o.rbc_path + ".cert.json") : fs::path(o.cert_path);
    write_certificate(cert_path, cert);
    describe(out, cert);
    return cert.verified() ? kExitOk : kExitRefuted;
}

int cmd_blowup(const Options& o, std::ostream& out, std::ostream&) {
    if (o.base.empty() == o.witness_key.empty()) {
        throw ParseError("blowup needs exactly one of a base graph or --witness");
    }
    const auto base = o.witness_key.empty() ? load_graph_argument(o.base) : resolve_witness(o, o.witness_key);
    Graph factor;
    if (o.factor.starts_with("complete:")) {
        const int k = to_int(std::string_view(o.factor).substr(9), "factor size");
        if (k < 1) {
            throw PreconditionError("factor complete:k needs k >= 1");
        }
        factor = complete_graph(static_cast<std::size_t>(k));
    } else {
        factor = load_graph_argument(o.factor);
    }
    const auto g = blow_up(base, factor);
    std::string text;
    if (o.as_red) {
        text = to_rbc(TwoColoring(g), {{"family", "blowup"}, {"claimed_bound", std::to_string(g.order() + 1)}});
    } else {
        text = to_graph6(g) + "\n";
    }
    if (o.output.empty()) {
        out << text;
    } else {
        write_text_file(o.output, text);
        out << "order " << g.order() << '\n';
    }
    return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.which != "all" && o.which != "w5w6" && o.which != "w7") {
        throw ParseError("table must be one of w5w6, w7, all");
    }
    bool ok = true;
    for (const auto& row : compute_tables()) {
        if (o.which != "all" && o.which != row.name) {
            continue;
        }
        out << row.name << '\n';
        out << "  n         " << join_list(row.n) << '\n';
        out << "  derived   " << join_list(row.derived) << '\n';
        out << "  published " << join_list(row.published) << '\n';
        if (row.ok()) {
            out << "  match\n";
        } else {
            ok = false;
            err << row.name << ": mismatch at n = " << join_list(row.mismatched_n, ", ") << '\n';
        }
    }
    return ok ? kExitOk : kExitRefuted;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream&) {
    TabuOptions t;
    t.order = o.order;
    t.avoid = parse_pattern(o.avoid);
    t.avoid_complement = parse_pattern(o.avoid_c);
    t.budget = o.budget;
    t.seed = o.seed;
    validate(t.avoid);
    validate(t.avoid_complement);
    if (t.order > t.order_cap) {
        throw PreconditionError("order " + std::to_string(t.order) + " exceeds the search cap " +
                                std::to_string(t.order_cap));
    }
    const auto found = tabu_search_witness(t);
    if (!found) {
        out << "no witness within " << o.budget << " steps (seed " << o.seed << ")\n";
        return kExitBudgetExhausted;
    }
    const auto cert = verify_ramsey_witness(*found, t.avoid, t.avoid_complement);
    if (!cert.verified()) {
        throw std::logic_error("search returned a graph that fails verification");
    }
    const auto g6 = to_graph6(*found);
    if (!o.output.empty()) {
        write_text_file(o.output, g6 + "\n");
    }
    const auto cert_path = !o.cert_path.empty() ? o.cert_path : o.output.empty() ? "" : o.output + ".cert.json";
    if (!cert_path.empty()) {
        write_certificate(cert_path, cert);
    }
    out << "found order " << t.order << " seed " << o.seed << '\n';
    out << g6 << '\n';
    return kExitOk;
}

int cmd_oracle_check(const Options& o, std::ostream& out, std::ostream&) {
    const auto g = load_graph_argument(o.graph);
    const auto p = parse_pattern(o.pattern);
    validate(p);
    const bool detector = contains_pattern(g, p);
    const bool brute = oracle::oracle_contains(g, p);
    out << "detector " << (detector ? "contains" : "avoids") << ' ' << to_string(p) << '\n';
    out << "oracle   " << (brute ? "contains" : "avoids") << ' ' << to_string(p) << '\n';
    out << (detector == brute ? "agree" : "DISAGREE") << '\n';
    return detector == brute ? kExitOk : kExitRefuted;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ramsey lower-bound constructions and certificates", "ramsey"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--witness-dir", o.witness_dir, "Root of the witness registry");
    app.add_option("--witness-file", o.witness_file, "graph6 file overriding any witness lookup");

    auto* construct = app.add_subcommand("construct", "Build a family coloring and write it as .rbc");
    construct->add_option("family", o.family, "Family spec, e.g. fan:4,4 or kipas-3mod4:5")->required();
    construct->add_option("-o,--output", o.output, "Output .rbc path (stdout when omitted)");

    auto* verify_cmd = app.add_subcommand("verify", "Check an .rbc coloring against two targets");
    verify_cmd->add_option("coloring", o.rbc_path, ".rbc file")->required();
    verify_cmd->add_option("--red", o.red, "Red target pattern (default from file metadata)");
    verify_cmd->add_option("--blue", o.blue, "Blue target pattern (default from file metadata)");
    verify_cmd->add_option("--cert", o.cert_path, "Certificate path (default <coloring>.cert.json)");

    auto* blowup = app.add_subcommand("blowup", "Lexicographic product of a base graph with a factor");
    blowup->add_option("base", o.base, "Base graph: graph6 file or string");
    blowup->add_option("--witness", o.witness_key, "Registry witness key, e.g. k3k5");
    blowup->add_option("--factor", o.factor, "complete:<k> or a graph6 file");
    blowup->add_flag("--as-red", o.as_red, "Write an .rbc coloring whose red graph is the blow-up");
    blowup->add_option("-o,--output", o.output, "Output path (stdout when omitted)");

    auto* table = app.add_subcommand("table", "Derive the wheel-versus-clique rows and diff them");
    table->add_option("which", o.which, "w5w6, w7 or all");

    auto* search = app.add_subcommand("search", "Tabu search for a Ramsey witness graph");
    search->add_option("--order", o.order, "Number of vertices")->required();
    search->add_option("--avoid", o.avoid, "Pattern the graph must avoid")->required();
    search->add_option("--avoid-c", o.avoid_c, "Pattern the complement must avoid")->required();
    search->add_option("--budget", o.budget, "Maximum number of edge flips");
    search->add_option("--seed", o.seed, "Random seed");
    search->add_option("-o,--output", o.output, "graph6 output path");
    search->add_option("--cert", o.cert_path, "Certificate path (default <output>.cert.json)");

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare detector and brute force on one graph");
    oracle_cmd->add_option("graph", o.graph, "graph6 file or string")->required();
    oracle_cmd->add_option("--pattern", o.pattern, "Target pattern")->required();

    std::vector<std::string> argv_storage{"ramsey"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*construct) {
            return cmd_construct(o, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(o, out, err);
        }
        if (*blowup) {
            return cmd_blowup(o, out, err);
        }
        if (*table) {
            return cmd_table(o, out, err);
        }
        if (*search) {
            return cmd_search(o, out, err);
        }
        return cmd_oracle_check(o, out, err);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInputError;
}

} // namespace ramsey
