#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supercluster/errors.hpp"
#include "supercluster/seed.hpp"
#include "supercluster/server.hpp"
#include "supercluster/superfrieze.hpp"
#include "supercluster/verify.hpp"

using namespace supercluster;

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

Json read_json(const std::string& file) {
    std::string text;
    if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open '" + file + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(file + ": " + e.what());
    }
}

std::vector<std::size_t> parse_sequence(const std::string& list, std::size_t n) {
    std::vector<std::size_t> seq;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad vertex '" + item + "' in sequence");
        }
        if (used != item.size() || v < 1 || v > static_cast<long>(n)) {
            throw IndexOutOfRange("vertex '" + item + "' is not in 1.." + std::to_string(n));
        }
        seq.push_back(static_cast<std::size_t>(v - 1));
    }
    return seq;
}

int report(const SweepReport& r) {
    std::cout << r.to_json().dump(2) << '\n';
    return r.ok() ? kOk : kCounterexample;
}

void add_sweep_flags(CLI::App* cmd, SweepOptions& opt, std::size_t default_len) {
    opt.max_len = default_len;
    cmd->add_option("--random", opt.count, "number of random instances")->capture_default_str();
    cmd->add_option("--max-n", opt.params.max_n, "largest even vertex count")->capture_default_str();
    cmd->add_option("--max-m", opt.params.max_m, "largest odd vertex count")->capture_default_str();
    cmd->add_option("--max-b", opt.params.max_b, "largest |b_ij|")->capture_default_str();
    cmd->add_option("--max-c", opt.params.max_c, "largest |c(i,j,k)|")->capture_default_str();
    cmd->add_option("--max-len", opt.max_len, "longest mutation sequence")->capture_default_str();
    cmd->add_option("--rng-seed", opt.rng_seed, "base seed of the sweep")->capture_default_str();
    cmd->add_option("--budget", opt.max_log10, "cut sequences once the growth bound passes 10^budget")
        ->capture_default_str();
    cmd->add_option("--workers", opt.workers, "worker threads (0: all cores)")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster algebras with Grassmann variables: mutations, friezes and checks"};
    app.require_subcommand(1);

    std::string file;
    long vertex = 0;
    std::string sequence;

    auto* quiver = app.add_subcommand("quiver", "quiver operations");
    quiver->require_subcommand(1);
    auto* qmut = quiver->add_subcommand("mutate", "mutate a quiver JSON at one vertex");
    qmut->add_option("-i,--input", file, "quiver JSON file, - for stdin")->required();
    qmut->add_option("-k,--vertex", vertex, "even vertex (one based)")->required();

    auto* seed = app.add_subcommand("seed", "seed operations");
    seed->require_subcommand(1);
    auto* smut = seed->add_subcommand("mutate-seq", "run a mutation sequence on a seed or quiver JSON");
    smut->add_option("-i,--input", file, "seed or quiver JSON file, - for stdin")->required();
    smut->add_option("-s,--sequence", sequence, "comma separated vertices, e.g. 1,2,1")->required();

    std::size_t width = 1;
    std::string values;
    long periods = 1;
    bool frieze_json = false;
    auto* frieze = app.add_subcommand("frieze", "superfriezes");
    frieze->require_subcommand(1);
    auto* fgen = frieze->add_subcommand("gen", "generate a superfrieze");
    fgen->add_option("--width", width, "width m")->required();
    fgen->add_option("--values", values,
                     R"(initial diagonal as JSON {"even":[m strings],"odd":[m+1 strings]} in x1..xm, xi1..xi(m+1))");
    fgen->add_option("--periods", periods, "number of periods m+3 to generate")->capture_default_str();
    fgen->add_flag("--json", frieze_json, "print frieze JSON instead of the text layout");

    std::size_t terms = 8;
    bool super = false;
    auto* somos = app.add_subcommand("somos", "Somos-4 terms from the period-1 quiver");
    somos->add_option("--terms", terms, "number of terms")->capture_default_str();
    somos->add_flag("--super", super, "keep the odd vertices; terms print as a+bε with ε = xi1 xi2");

    SweepOptions laurent_opt, form_opt, reduction_opt;
    form_opt.params.max_n = 4;
    form_opt.params.max_m = 3;
    auto* verify = app.add_subcommand("verify", "randomized and symbolic checks; exit 1 on a counterexample");
    verify->require_subcommand(1);
    auto* vl = verify->add_subcommand("laurent", "Laurent phenomenon along random mutation sequences");
    add_sweep_flags(vl, laurent_opt, 8);
    auto* vf = verify->add_subcommand("form", "invariance of the presymplectic form under single mutations");
    add_sweep_flags(vf, form_opt, 1);
    auto* vr = verify->add_subcommand("reduction", "super mutation against the colored reduction");
    add_sweep_flags(vr, reduction_opt, 6);
    std::size_t verify_width = 1;
    auto* vz = verify->add_subcommand("frieze", "superfrieze properties for symbolic initial data");
    vz->add_option("--width", verify_width, "width m")->required();
    auto* vp = verify->add_subcommand("replay", "re-run a counterexample payload");
    vp->add_option("-i,--input", file, "payload JSON file, - for stdin")->required();

    int port = default_port();
    std::string host = "127.0.0.1";
    std::size_t undo_depth = 256;
    auto* serve = app.add_subcommand("serve", "HTTP session API");
    serve->add_option("--port", port, "port (default from SUPERCLUSTER_PORT, else 8080)")->capture_default_str();
    serve->add_option("--host", host, "bind address")->capture_default_str();
    serve->add_option("--undo-depth", undo_depth, "undo stack depth per session")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*qmut) {
            const ExtendedQuiver q = quiver_from_json(read_json(file));
            if (const auto problems = validate(q); !problems.empty()) throw InvalidQuiver(problems.front());
            if (vertex < 1 || vertex > static_cast<long>(q.n())) throw IndexOutOfRange("vertex out of range");
            std::cout << quiver_to_json(mutate(q, static_cast<std::size_t>(vertex - 1))).dump(2) << '\n';
            return kOk;
        }
        if (*smut) {
            const Seed s = seed_from_json(read_json(file));
            if (const auto problems = validate(s.quiver()); !problems.empty()) throw InvalidQuiver(problems.front());
            const Seed r = mutation_sequence(s, parse_sequence(sequence, s.quiver().n()));
            Json rendered = Json::array();
            const VariableNames names = r.quiver().display_names();
            for (const auto& c : r.cluster()) rendered.push_back(render(c, names));
            std::cout << Json{{"seed", seed_to_json(r)}, {"rendered", rendered}}.dump(2) << '\n';
            return kOk;
        }
        if (*fgen) {
            if (width < 1 || width > 15) throw InvalidWidth("width must be in 1..15");
            if (periods < 1) throw InvalidWidth("periods must be at least 1");
            const Signature sig{width, width + 1};
            std::vector<SuperLaurentPoly> even, odd;
            if (values.empty()) {
                for (std::size_t k = 0; k < width; ++k) even.push_back(SuperLaurentPoly::even_var(sig, k));
                for (std::size_t k = 0; k <= width; ++k) odd.push_back(SuperLaurentPoly::odd_var(sig, k));
            } else {
                const Json v = Json::parse(values);
                for (const auto& e : v.at("even")) even.push_back(parse_poly(e.get<std::string>(), sig));
                for (const auto& o : v.at("odd")) odd.push_back(parse_poly(o.get<std::string>(), sig));
            }
            const long n = static_cast<long>(width + 3);
            const SuperFrieze F = generate(width, even, odd, 0, periods * n - 1);
            if (frieze_json) {
                std::cout << frieze_to_json(F).dump(2) << '\n';
            } else {
                std::cout << render_frieze(F, VariableNames::standard(sig), 0, periods * n - 1);
            }
            return kOk;
        }
        if (*somos) {
            const auto seq = somos_terms(terms, super);
            for (std::size_t t = 0; t < seq.size(); ++t) {
                if (t > 0) std::cout << ' ';
                std::cout << (super ? render_dual(seq[t]) : render(seq[t]));
            }
            std::cout << '\n';
            return kOk;
        }
        if (*vl) return report(verify_laurent(laurent_opt));
        if (*vf) return report(verify_form(form_opt));
        if (*vr) return report(verify_reduction(reduction_opt));
        if (*vz) return report(verify_frieze(verify_width));
        if (*vp) return report(replay(read_json(file)));
        if (*serve) {
            SessionStore store(undo_depth);
            httplib::Server server;
            install_routes(server, store);
            std::cerr << "listening on " << host << ':' << port << '\n';
            if (!server.listen(host, port)) {
                std::cerr << "cannot bind " << host << ':' << port << '\n';
                return kUsage;
            }
            return kOk;
        }
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotDivisible& e) {
        std::cout << Json{{"failure", e.what()}}.dump(2) << '\n';
        return kCounterexample;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
