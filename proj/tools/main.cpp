// Command-line front end: Cartan data in, derived relations / normal forms /
// automorphism groups / posets / verification reports out.

#include <fstream>
#include <memory>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uqp/braiding.hpp"
#include "uqp/builtins.hpp"
#include "uqp/errors.hpp"
#include "uqp/expr.hpp"
#include "uqp/hspec.hpp"
#include "uqp/json_io.hpp"
#include "uqp/poset.hpp"
#include "uqp/symmetrizer.hpp"
#include "uqp/verify.hpp"

namespace {

// exit-code classes: 1 usage, 2 parse, 3 math-verification failure, 4 resource bound
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitResource = 4;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitUsage, "cannot open file '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

uqp::CartanData load_cartan(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return uqp::cartan_from_json(text);
    } catch (const std::exception& e) {
        throw CliError{kExitParse, std::string("bad Cartan data: ") + e.what()};
    }
}

const uqp::Presentation& load_algebra(const std::string& name) {
    // a name ending in .json is read as a presentation file
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
        static std::vector<std::unique_ptr<uqp::Presentation>> loaded;
        const std::string text = read_file(name);
        try {
            loaded.push_back(std::make_unique<uqp::Presentation>(uqp::presentation_from_json(text)));
        } catch (const std::exception& e) {
            throw CliError{kExitParse, std::string("bad presentation file: ") + e.what()};
        }
        return *loaded.back();
    }
    try {
        return uqp::builtin_presentation(name);
    } catch (const std::exception& e) {
        throw CliError{kExitUsage, e.what()};
    }
}

uqp::AlgebraElement parse_element(const std::string& text, const uqp::Presentation& p) {
    try {
        return uqp::eval_element(uqp::parse_expr(text), p);
    } catch (const uqp::SyntaxError& e) {
        throw CliError{kExitParse, std::string(e.what()) + " (expected " + e.expected + ")"};
    } catch (const std::exception& e) {
        throw CliError{kExitParse, e.what()};
    }
}

int run_relations(const std::string& cartan_path, int max_degree, int degree_limit,
                  bool parallel) {
    auto cd = load_cartan(cartan_path);
    uqp::NicholsLimits limits;
    limits.max_degree = degree_limit;
    limits.parallel = parallel;
    auto rb = uqp::minimal_relations(uqp::braiding_from_cartan(cd), max_degree, limits);
    std::cout << uqp::relations_to_json(rb) << "\n";
    return 0;
}

int run_hilbert(const std::string& cartan_path, int max_degree, const std::string& oracle,
                int degree_limit, bool parallel) {
    auto cd = load_cartan(cartan_path);
    auto b = uqp::braiding_from_cartan(cd);
    uqp::NicholsLimits limits;
    limits.max_degree = degree_limit;
    limits.parallel = parallel;
    auto dims = uqp::nichols_dimension_table(max_degree, b, limits);

    std::ostringstream os;
    os << "{\"dimensions\":[";
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << "]";
    if (oracle == "pbw") {
        std::string match;
        if (cd.a == uqp::CartanData::a2().a && cd.d == uqp::CartanData::a2().d) match = "heisenberg";
        if (cd.a == uqp::CartanData::b2().a && cd.d == uqp::CartanData::b2().d) match = "b2";
        if (match.empty())
            throw CliError{kExitUsage, "no builtin presentation matches this Cartan data"};
        auto counts = uqp::hilbert_count(uqp::builtin_presentation(match), max_degree);
        bool agree = true;
        for (int m = 0; m <= max_degree; ++m)
            if (dims[static_cast<std::size_t>(m)] != counts[static_cast<std::size_t>(m)]) agree = false;
        os << ",\"oracle\":\"" << match << "\",\"agrees\":" << (agree ? "true" : "false");
        if (!agree) {
            std::cout << os.str() << "}\n";
            return kExitVerify;
        }
    }
    os << "}";
    std::cout << os.str() << "\n";
    return 0;
}

int run_normal_form(const std::string& algebra, const std::string& expr_text,
                    const std::string& format) {
    const auto& p = load_algebra(algebra);
    auto a = parse_element(expr_text, p);
    if (format == "json")
        std::cout << uqp::element_to_json(a) << "\n";
    else
        std::cout << a.str() << "\n";
    return 0;
}

int run_central(const std::string& algebra, const std::string& expr_text,
                const std::string& format) {
    const auto& p = load_algebra(algebra);
    auto a = parse_element(expr_text, p);
    bool central = uqp::is_central(a);
    auto rep = uqp::q_normality(a);
    if (format == "json") {
        std::ostringstream os;
        os << "{\"central\":" << (central ? "true" : "false")
           << ",\"q_normal\":" << (rep.ok ? "true" : "false") << ",\"entries\":[";
        bool first = true;
        for (const auto& e : rep.entries) {
            os << (first ? "" : ",") << "{\"generator\":\"" << e.gen << "\",";
            if (e.ok)
                os << "\"lambda\":\"" << e.lambda.str() << "\"}";
            else
                os << "\"residual\":\"" << e.residual.str() << "\"}";
            first = false;
        }
        os << "]}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "central: " << (central ? "yes" : "no") << "\n";
        std::cout << "q-normal: " << (rep.ok ? "yes" : "no") << "\n";
        for (const auto& e : rep.entries) {
            if (e.ok)
                std::cout << "  " << e.gen << ": lambda = " << e.lambda.str() << "\n";
            else
                std::cout << "  " << e.gen << ": residual = " << e.residual.str() << "\n";
        }
    }
    return 0;
}

int run_autgroup(const std::string& cartan_path) {
    auto cd = load_cartan(cartan_path);
    auto b = uqp::braiding_from_cartan(cd);
    std::cout << "{\"lemma_conditions\":" << uqp::lemma_conditions_to_json(uqp::lemma_conditions(b))
              << ",\"glvc\":" << uqp::group_description_to_json(uqp::glvc_structure(b))
              << ",\"hopf\":" << uqp::group_description_to_json(uqp::hopf_aut_bosonization(cd))
              << "}\n";
    return 0;
}

int run_poset(const std::string& which, const std::string& format) {
    if (which == "bruhat") {
        auto p = uqp::bruhat_poset();
        if (format == "dot")
            std::cout << p.to_dot("bruhat");
        else
            std::cout << uqp::poset_to_json(p) << "\n";
        return 0;
    }
    if (which == "hspec") {
        auto h = uqp::hspec_poset();
        if (format == "dot")
            std::cout << h.poset.to_dot("hspec");
        else
            std::cout << uqp::hspec_to_json(h) << "\n";
        return 0;
    }
    throw CliError{kExitUsage, "--which must be bruhat or hspec"};
}

int run_verify(const std::string& suite) {
    if (suite != "paper") throw CliError{kExitUsage, "unknown suite '" + suite + "'"};
    auto results = uqp::run_verify_suite();
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << (r.ok ? "PASS" : "FAIL") << "  [" << r.section << "] " << r.name;
        if (!r.ok && !r.detail.empty()) std::cout << "  -- " << r.detail;
        std::cout << "\n";
        if (!r.ok) ++failed;
    }
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed == 0 ? 0 : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in nilpotent quantum enveloping algebras"};
    app.require_subcommand(1);

    std::string cartan_path, algebra, expr_text, format = "text", oracle, which, suite = "paper";
    int max_degree = 4;
    int degree_limit = 8;
    bool parallel = false;

    auto* relations = app.add_subcommand("relations", "derive minimal relations from Cartan data");
    relations->add_option("--cartan", cartan_path, "Cartan data JSON file")->required();
    relations->add_option("--max-degree", max_degree, "highest tensor degree to inspect")->required();
    relations->add_option("--degree-limit", degree_limit, "resource bound on the tensor degree");
    relations->add_flag("--parallel", parallel, "evaluate independent blocks concurrently");

    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions from the symmetrizer ranks");
    hilbert->add_option("--cartan", cartan_path, "Cartan data JSON file")->required();
    hilbert->add_option("--max-degree", max_degree, "highest degree")->required();
    hilbert->add_option("--oracle", oracle, "cross-check against a builtin PBW count (pbw)");
    hilbert->add_option("--degree-limit", degree_limit, "resource bound on the tensor degree");
    hilbert->add_flag("--parallel", parallel, "evaluate independent blocks concurrently");

    auto* nf = app.add_subcommand("normal-form", "rewrite an expression to its PBW normal form");
    nf->add_option("--algebra", algebra, "builtin presentation name")->required();
    nf->add_option("--expr", expr_text, "expression over the generators")->required();
    nf->add_option("--format", format, "text (default) or json");

    auto* central = app.add_subcommand("central", "centrality / q-normality report");
    central->add_option("--algebra", algebra, "builtin presentation name")->required();
    central->add_option("--expr", expr_text, "expression over the generators")->required();
    central->add_option("--format", format, "text (default) or json");

    auto* autgroup = app.add_subcommand("autgroup", "lemma conditions and automorphism groups");
    autgroup->add_option("--cartan", cartan_path, "Cartan data JSON file")->required();

    auto* poset = app.add_subcommand("poset", "Bruhat order or the graded prime spectrum");
    poset->add_option("--which", which, "bruhat or hspec")->required();
    poset->add_option("--format", format, "json (default) or dot");

    auto* verify = app.add_subcommand("verify", "run the registered verification battery");
    verify->add_option("--suite", suite, "suite name (paper)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : 0;
    }

    try {
        if (relations->parsed())
            return run_relations(cartan_path, max_degree, degree_limit, parallel);
        if (hilbert->parsed())
            return run_hilbert(cartan_path, max_degree, oracle, degree_limit, parallel);
        if (nf->parsed()) return run_normal_form(algebra, expr_text, format);
        if (central->parsed()) return run_central(algebra, expr_text, format);
        if (autgroup->parsed()) return run_autgroup(cartan_path);
        if (poset->parsed()) return run_poset(which, format == "text" ? "json" : format);
        if (verify->parsed()) return run_verify(suite);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const uqp::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const uqp::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
