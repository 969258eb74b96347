// nlie: counts, enumeration, rewriting, oracle runs, tables and the comparison report.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "nlie/nlie.hpp"

namespace {

using namespace nlie;

std::string method_tag(Method m, int n) {
    if (m == Method::Ladder && n == 2) return "[LADDER -> WITT]";
    return "[" + to_string(m) + "]";
}

EnumerationMode parse_mode(const std::string& s) {
    if (s == "full" || s == "FULL_RULE3") return EnumerationMode::FullRule3;
    if (s == "left" || s == "LEFT_NORMED") return EnumerationMode::LeftNormed;
    throw DomainError("unknown mode '" + s + "' (expected full or left)");
}

Evaluator make_evaluator() { return Evaluator({}, OracleCache::from_environment()); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Basic commutators and graded dimensions of free n-Lie algebras"};
    app.require_subcommand(1);

    int n = 0, d = 0, w = 0;
    std::string method;

    auto* count = app.add_subcommand("count", "Number of basic commutators of weight w by one method");
    count->add_option("--n", n, "arity")->required();
    count->add_option("--d", d, "number of generators")->required();
    count->add_option("--w", w, "weight")->required();
    count->add_option("--method", method,
                      "witt, necklace, weight2, ladder, ladder-recursive, ladder-literal, eq14, eq15, eq16, "
                      "enum-full, enum-left, oracle, via-lie")
        ->required();

    std::string mode = "full", fmt = "text";
    auto* enumerate = app.add_subcommand("enumerate", "List basic commutators of weight w");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--d", d)->required();
    enumerate->add_option("--w", w)->required();
    enumerate->add_option("--mode", mode, "full or left")->capture_default_str();
    enumerate->add_option("--format", fmt, "text or json")->capture_default_str();

    std::string expr;
    bool show_trace = false;
    std::size_t cap = CollectOptions{}.max_steps;
    auto* rewrite = app.add_subcommand("rewrite", "Collect a bracket expression into basic commutators");
    rewrite->add_option("--n", n)->required();
    rewrite->add_option("expr", expr, "bracket expression, e.g. [x1,[x3,x2,x1],x2]")->required();
    rewrite->add_flag("--trace", show_trace, "print the rewrite steps to stderr");
    rewrite->add_option("--cap", cap, "Jacobi step budget")->capture_default_str();

    int which = 0;
    auto* table = app.add_subcommand("table", "Reference tables as CSV");
    table->add_option("--which", which, "2, 3, 4 or 5")->required();

    int w_max = 0;
    auto* compare = app.add_subcommand("compare", "Every method side by side, with disagreement flags");
    compare->add_option("--n", n)->required();
    compare->add_option("--d", d)->required();
    compare->add_option("--w-max", w_max)->required();

    auto* oracle = app.add_subcommand("oracle", "Graded dimension by exact rank, as a JSON record");
    oracle->add_option("--n", n)->required();
    oracle->add_option("--d", d)->required();
    oracle->add_option("--w", w)->required();

    int i = 0, c = 0;
    auto* lcs = app.add_subcommand("lcs", "dim F^i / F^(i+c) of the lower central series");
    lcs->add_option("--n", n)->required();
    lcs->add_option("--d", d)->required();
    lcs->add_option("--i", i)->required();
    lcs->add_option("--c", c)->required();
    lcs->add_option("--method", method)->required();

    auto* breakdown = app.add_subcommand("breakdown", "Decomposition of the nonbasic commutators of weight w");
    breakdown->add_option("--n", n)->required();
    breakdown->add_option("--d", d)->required();
    breakdown->add_option("--w", w)->required();
    breakdown->add_option("--method", method)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            Evaluator ev = make_evaluator();
            const Method m = parse_method(method);
            std::cout << format(ev.require(m, n, d, w)) << ' ' << method_tag(m, n) << '\n';
        } else if (enumerate->parsed()) {
            const bool json = fmt == "json";
            if (!json && fmt != "text") throw DomainError("unknown format '" + fmt + "' (expected text or json)");
            for (const auto& b : enumerate_basic(n, d, w, parse_mode(mode))) {
                if (json)
                    std::cout << nlohmann::json{{"term", format(b.term)}, {"weight", b.weight}, {"length", b.length}}
                                     .dump()
                              << '\n';
                else
                    std::cout << format(b.term) << '\n';
            }
        } else if (rewrite->parsed()) {
            CollectResult r = collect(parse(expr, n), n, CollectOptions{cap});
            std::cout << format(r.value) << '\n';
            if (show_trace) {
                for (const auto& s : r.trace.steps) {
                    std::cerr << to_string(s.rule) << " at /";
                    for (std::size_t k = 0; k < s.path.size(); ++k) std::cerr << (k ? "/" : "") << s.path[k];
                    std::cerr << ' ' << s.before << " -> " << s.after << '\n';
                }
            }
            if (r.trace.capped) {
                std::cerr << "warning: step budget exhausted or cycle met; result may contain nonbasic terms\n";
                return 3;
            }
        } else if (table->parsed()) {
            std::cout << nlie::table(which);
        } else if (compare->parsed()) {
            Evaluator ev = make_evaluator();
            std::cout << compare_report(n, d, w_max, ev);
        } else if (oracle->parsed()) {
            Evaluator ev = make_evaluator();
            std::cout << to_json(ev.oracle_record(n, d, w)).dump() << '\n';
        } else if (lcs->parsed()) {
            Evaluator ev = make_evaluator();
            std::cout << lcs_quotient_dim(n, d, i, c, parse_method(method), ev).get_str() << '\n';
        } else if (breakdown->parsed()) {
            Evaluator ev = make_evaluator();
            const Method m = parse_method(method);
            auto b = nonbasic_breakdown(n, d, w, [&](int k) {
                Rational v = ev.require(m, n, d, k);
                if (v.get_den() != 1) throw DomainError("non-integral count from " + to_string(m));
                return Integer(v.get_num());
            });
            nlohmann::json j{{"n", n},
                             {"d", d},
                             {"w", w},
                             {"method", to_string(m)},
                             {"total", b.total.get_str()},
                             {"basic", b.basic.get_str()},
                             {"nonbasic", b.nonbasic.get_str()}};
            if (b.kappa) {
                j["L_prime"] = b.l_prime->get_str();
                j["L_double_prime"] = b.l_double_prime->get_str();
                j["L_star"] = b.l_star->get_str();
                j["kappa"] = b.kappa->get_str();
                j["telescopes"] = b.telescopes;
                j["kappa_matches_basic"] = b.kappa_matches_basic;
                j["parts_match_nonbasic"] = b.parts_match_nonbasic;
            }
            std::cout << j.dump() << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
