// Command-line front end: property checks, family generators, unfold/fold,
// and the named verification tasks.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "theta/enumerate.hpp"
#include "theta/families.hpp"
#include "theta/forbidden.hpp"
#include "theta/hamilton.hpp"
#include "theta/harness.hpp"
#include "theta/metrics.hpp"
#include "theta/multigraph.hpp"
#include "theta/simple_graph.hpp"
#include "theta/unfoldment.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// A graph file holds either one graph6 line or the native "n m" edge list.
theta::SimpleGraph load_graph(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream is(text);
    std::string first;
    while (std::getline(is, first) && first.empty()) {}
    std::istringstream probe(first);
    int a, b;
    if (probe >> a >> b) return theta::edge_list_decode(text);
    return theta::graph6_decode(first);
}

theta::LinkAssignment parse_links(const std::string& text, int edges) {
    if (text.empty())
        return theta::LinkAssignment(edges, theta::PureLinkSpec::triangle());
    theta::LinkAssignment out;
    std::string buf;
    std::istringstream is(text);
    while (std::getline(is, buf, ',')) {
        if (buf.empty()) continue;
        if (buf == "t" || buf == "T") out.push_back(theta::PureLinkSpec::triangle());
        else if (buf[0] == 'p' || buf[0] == 'P')
            out.push_back(theta::PureLinkSpec::path(std::stoi(buf.substr(1))));
        else throw std::invalid_argument("bad link spec token: " + buf);
    }
    return out;
}

// Chain grammar: B(l1,l2) and T(k), separated by spaces or semicolons.
std::vector<theta::ChainPart> parse_chain(const std::string& text) {
    std::vector<theta::ChainPart> parts;
    std::string s = text;
    for (char& ch : s)
        if (ch == ';' || ch == ',' || ch == '(' || ch == ')') ch = ' ';
    std::istringstream is(s);
    std::string kind;
    while (is >> kind) {
        if (kind == "B" || kind == "b") {
            int l1, l2;
            if (!(is >> l1 >> l2)) throw std::invalid_argument("chain: B needs two lengths");
            parts.push_back(theta::ChainPart::bipath(l1, l2));
        } else if (kind == "T" || kind == "t") {
            int k;
            if (!(is >> k)) throw std::invalid_argument("chain: T needs a vertex count");
            parts.push_back(theta::ChainPart::triangle_chain(k));
        } else {
            throw std::invalid_argument("chain: unknown part kind " + kind);
        }
    }
    return parts;
}

void print_labels(const theta::LabelMap& labels) {
    for (const auto& [name, v] : labels) std::cout << "# label " << name << "=" << v << "\n";
}

void print_graph(const theta::SimpleGraph& g) {
    if (g.n() <= 62) std::cout << theta::graph6_encode(g) << "\n";
    else std::cout << theta::edge_list_encode(g);
}

int cmd_check(const std::string& what, const std::string& file, const std::string& forbid) {
    theta::SimpleGraph g = load_graph(file);
    if (what == "theta") {
        auto t = theta::spanning_theta(g);
        if (t && theta::verify_theta(g, *t)) {
            std::cout << theta::theta_encode(*t) << "\n";
            return kExitPass;
        }
        std::cout << "none\n";
        return kExitViolation;
    }
    if (what == "hamilton") {
        auto c = theta::hamilton_cycle(g);
        if (c) {
            std::cout << "cycle";
            for (int v : *c) std::cout << ' ' << v;
            std::cout << "\n";
            return kExitPass;
        }
        std::cout << "none\n";
        return kExitViolation;
    }
    if (what == "free") {
        if (forbid.empty()) throw std::invalid_argument("check free requires --forbid");
        for (const auto& spec : theta::parse_forbidden_list(forbid)) {
            auto hit = theta::find_induced(g, theta::make_forbidden(spec));
            if (hit) {
                std::cout << "contains";
                for (int v : hit->map) std::cout << ' ' << v;
                std::cout << "\n";
                return kExitViolation;
            }
        }
        std::cout << "free\n";
        return kExitPass;
    }
    if (what == "metrics") {
        auto m = theta::structural_metrics(g);
        std::cout << "n " << g.n() << "\n"
                  << "edges " << g.edge_count() << "\n"
                  << "connectivity " << theta::vertex_connectivity(g) << "\n"
                  << "independence " << m.alpha << "\n"
                  << "min-degree " << m.min_degree << "\n"
                  << "cycle " << (m.is_cycle ? 1 : 0) << "\n"
                  << "complete " << (m.is_complete ? 1 : 0) << "\n"
                  << "locally-connected " << (m.locally_connected ? 1 : 0) << "\n"
                  << "two-cuts " << theta::list_two_cuts(g).size() << "\n";
        return kExitPass;
    }
    throw std::invalid_argument("unknown check kind: " + what);
}

int cmd_gen(const std::string& family, int k, int k1, int k2, int k3,
            const std::string& links, const std::string& chain) {
    if (family.empty()) throw std::invalid_argument("gen requires --family");
    char head = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
    if (family == "brousek") {
        theta::LabelMap labels;
        theta::SimpleGraph g = theta::gen_brousek(k1, k2, k3, &labels);
        print_labels(labels);
        print_graph(g);
        return kExitPass;
    }
    if (head == 'M' || head == 'N') {
        theta::MultiGraph f = theta::gen_catalog(theta::parse_catalog_id(family));
        std::cout << theta::multigraph_encode(f);
        return kExitPass;
    }
    int idx = std::stoi(family.substr(1));
    if (head == 'G') {
        theta::LabelMap labels;
        theta::SimpleGraph g = theta::gen_G(idx, k, &labels);
        print_labels(labels);
        print_graph(g);
        return kExitPass;
    }
    if (head == 'H') {
        theta::HFamilySpec spec;
        spec.index = idx;
        spec.links = links.empty() ? theta::LinkAssignment{} : parse_links(links, 0);
        spec.chain = chain.empty() ? std::vector<theta::ChainPart>{} : parse_chain(chain);
        theta::LabelMap labels;
        theta::SimpleGraph g = theta::gen_H(spec, &labels);
        print_labels(labels);
        print_graph(g);
        return kExitPass;
    }
    if (head == 'L') {
        std::vector<theta::PureLinkSpec> specs =
            links.empty() ? std::vector<theta::PureLinkSpec>(idx == 1 ? 3 : 2,
                                                             theta::PureLinkSpec::triangle())
                          : parse_links(links, 0);
        theta::LabelMap labels;
        theta::Link link = theta::gen_link(idx, specs, &labels);
        print_labels(labels);
        std::cout << "# ends x=" << link.x << " y=" << link.y << "\n";
        print_graph(link.graph);
        return kExitPass;
    }
    throw std::invalid_argument("unknown family: " + family);
}

int cmd_unfold(const std::string& file, const std::string& links, bool x0y0) {
    theta::MultiGraph f = theta::multigraph_decode(read_file(file));
    theta::LinkAssignment assign = parse_links(links, f.edge_count());
    if (static_cast<int>(assign.size()) != f.edge_count())
        throw std::invalid_argument("unfold: need one link spec per edge");
    if (f.is_semi_loopless()) {
        auto link = theta::unfold_semi(f, assign, x0y0 || f.e0_is_loop());
        std::cout << theta::colored_encode(link.graph, link.colors);
        std::cout << "ends: " << link.x0 << ' ' << link.y0 << "\n";
    } else {
        auto cg = theta::unfold(f, assign);
        std::cout << theta::colored_encode(cg.graph, cg.colors);
    }
    return kExitPass;
}

int cmd_fold(const std::string& file) {
    auto [g, colors] = theta::colored_decode(read_file(file));
    bool semi = false;
    for (theta::Color c : colors) semi = semi || c == theta::Color::Black;
    theta::MultiGraph f = semi ? theta::fold_semi(g, colors) : theta::fold(g, colors);
    std::cout << theta::multigraph_encode(f);
    return kExitPass;
}

int cmd_verify(const std::string& task, const theta::HarnessParams& params, bool wall) {
    theta::VerificationReport rep = theta::run_verification(task, params);
    std::cout << theta::serialize_report(rep, wall);
    return rep.pass() ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning-theta toolkit"};
    app.require_subcommand(1);

    std::string check_kind, check_file, forbid;
    auto* check = app.add_subcommand("check", "decide a property of a graph file");
    check->add_option("kind", check_kind, "theta|hamilton|free|metrics")->required();
    check->add_option("file", check_file, "graph6 or edge-list file")->required();
    check->add_option("--forbid", forbid, "pattern list, e.g. \"K1,3;N1,2,3\"");

    std::string family, links, chain;
    int k = -1, k1 = 2, k2 = 2, k3 = 2;
    auto* gen = app.add_subcommand("gen", "emit a named family member");
    gen->add_option("--family", family, "M1..M7,N1,N2,H1..H7,G1..G9,L1..L3,brousek")->required();
    gen->add_option("--k", k, "size parameter for G families");
    gen->add_option("--k1", k1, "Brousek parameter");
    gen->add_option("--k2", k2, "Brousek parameter");
    gen->add_option("--k3", k3, "Brousek parameter");
    gen->add_option("--links", links, "pure-link specs, e.g. t,p2,t");
    gen->add_option("--chain", chain, "chain parts, e.g. \"B(0,0)\" or \"T(4);B(1,2)\"");

    std::string unfold_file, unfold_links;
    bool x0y0 = false;
    auto* unfold = app.add_subcommand("unfold", "unfold a multigraph file");
    unfold->add_option("file", unfold_file)->required();
    unfold->add_option("--links", unfold_links, "pure-link specs, one per edge");
    unfold->add_flag("--x0y0-edge", x0y0, "include the x0y0 edge (semi-loopless input)");

    std::string fold_file;
    auto* fold = app.add_subcommand("fold", "fold a colored graph file");
    fold->add_option("file", fold_file)->required();

    std::string task, config;
    theta::HarnessParams params;
    bool wall = false;
    auto* verify = app.add_subcommand("verify", "run a named verification task");
    verify->add_option("task", task, "task id")->required();
    verify->add_option("--max-n", params.max_n, "vertex cap override");
    verify->add_option("--max-mult", params.max_mult, "multiplicity cap override");
    verify->add_option("--samples", params.samples, "sampled assignments");
    verify->add_option("--seed", params.seed, "sampling seed");
    verify->add_option("--config", config, "key-value config file (flags win)");
    verify->add_flag("--wall", wall, "append wall time to the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) return cmd_check(check_kind, check_file, forbid);
        if (*gen) return cmd_gen(family, k, k1, k2, k3, links, chain);
        if (*unfold) return cmd_unfold(unfold_file, unfold_links, x0y0);
        if (*fold) return cmd_fold(fold_file);
        if (*verify) {
            if (!config.empty()) {
                std::ifstream in(config);
                if (!in) throw std::invalid_argument("cannot open config: " + config);
                theta::HarnessParams base = theta::parse_config(in);
                // CLI flags override config values they explicitly set.
                if (params.max_n < 0) params.max_n = base.max_n;
                if (params.max_mult < 0) params.max_mult = base.max_mult;
                if (verify->count("--samples") == 0) params.samples = base.samples;
                if (verify->count("--seed") == 0) params.seed = base.seed;
            }
            return cmd_verify(task, params, wall);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
