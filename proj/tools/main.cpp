#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "negsimp/alpha.hpp"
#include "negsimp/parse.hpp"
#include "negsimp/print.hpp"

using namespace negsimp;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"negation simplifier for typed logic goals"};
    std::string properties_path, goal_path, model_path, format = "text";
    bool naive = false, trace = false, count_tests = false, oracle = false;
    long long max_steps = 100000;

    app.add_option("--properties", properties_path, "property declaration file");
    app.add_option("--goal", goal_path, "goal file")->required();
    app.add_option("--model", model_path, "finite model file");
    app.add_flag("--naive", naive, "re-scan all atoms after each extraction");
    app.add_flag("--trace", trace, "print every derivation step");
    app.add_flag("--count-tests", count_tests, "print extractability test counters");
    app.add_flag("--oracle", oracle, "check frontier equivalence on the model");
    app.add_option("--max-steps", max_steps, "derivation step limit")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    CLI11_PARSE(app, argc, argv);

    if (oracle && model_path.empty()) {
        std::cerr << "error: --oracle requires --model\n";
        return 1;
    }

    try {
        Session session;
        PropertyStore store;
        seed_builtins(store);
        if (!properties_path.empty())
            for (auto& p : parse_properties(slurp(properties_path))) store.declare(std::move(p));

        ParsedGoal parsed = parse_goal(slurp(goal_path), session);
        GoalFormula g0;
        g0.env = parsed.env;
        g0.lits.push_back(Literal::mk_neg(init_neg(parsed.conj, parsed.locals)));

        EngineOptions opt;
        opt.naive = naive;
        opt.max_steps = max_steps;
        opt.trace = trace;
        Engine engine(session, store, opt);
        Frontier fr = engine.to_frontier(g0);

        if (trace)
            for (const auto& line : engine.trace()) std::cout << "% " << line << "\n";

        if (format == "structured")
            std::cout << frontier_json(fr, session) << "\n";
        else
            std::cout << frontier_text(fr, session);

        if (count_tests) {
            const auto& c = engine.counts();
            const auto& k = session.counters();
            std::cout << "tests: total=" << c.tests_total << " futile=" << c.tests_futile
                      << " sqvt_calls=" << k.sqvt_calls << "\n";
        }

        if (!fr.complete) {
            std::cerr << "error: step limit exceeded\n";
            return 2;
        }

        if (oracle) {
            FiniteModel m = parse_model(slurp(model_path));
            Verdict v = check_equivalence(g0, fr.forms, m, session);
            if (v.pass()) {
                std::cout << "oracle: equivalent on model\n";
            } else {
                std::cout << "oracle: counterexample " << v.witness << "\n";
                return 3;
            }
        }
        return 0;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
