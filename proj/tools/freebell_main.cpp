// Command-line front end: every computation in the library as a
// deterministic, scriptable command with text/JSON/DOT output.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "freebell/bell.hpp"
#include "freebell/bellhopf.hpp"
#include "freebell/checks.hpp"
#include "freebell/composition.hpp"
#include "freebell/fqsym.hpp"
#include "freebell/qpoly.hpp"
#include "freebell/qsym.hpp"
#include "freebell/serialize.hpp"
#include "freebell/word.hpp"

namespace {

using namespace freebell;

std::string y_monomial(const Composition& c) {
    bool wide = false;
    for (int p : c.parts())
        if (p > 9) wide = true;
    std::string s = "Y";
    for (int i = 0; i < c.length(); ++i) {
        if (i && wide) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

std::string render(const bell::YPolyZ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + " ";
        out += y_monomial(k);
    }
    return out;
}

std::string render(const bell::YPolyQ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string s = c.to_string();
        if (s != "1") {
            if (s.find('+') != std::string::npos || s.find('-') != std::string::npos)
                s = "(" + s + ")";
            out += s + " ";
        }
        out += y_monomial(k);
    }
    return out;
}

int check_degree(int n, int bound) {
    if (n < 1 || n > bound) {
        std::cerr << "error: --n must be between 1 and " << bound
                  << " (raise --max-degree to go further)\n";
        return 2;
    }
    return 0;
}

int cmd_bell(int n, int bound, const std::string& variant, const std::string& format) {
    if (int rc = check_degree(n, bound)) return rc;
    if (variant == "classic") {
        auto p = bell::bell_prepend(n);
        if (format == "json")
            std::cout << serialize::to_json(p).dump(2) << "\n";
        else
            std::cout << render(p) << "\n";
        return 0;
    }
    if (variant == "triangle") {
        QPoly row = bell::bell_triangle(n);
        if (format == "json")
            std::cout << nlohmann::json{{"n", n}, {"row", row.to_string()}}.dump(2) << "\n";
        else
            std::cout << row.to_string() << "\n";
        return 0;
    }
    bell::YPolyQ p;
    if (variant == "qprime")
        p = bell::bell_append_q(n);
    else if (variant == "qdoubleprime")
        p = bell::bell_prepend_q(n);
    else  // qdet
        p = bell::quasideterminant_bell_q(n);
    if (format == "json")
        std::cout << serialize::to_json(p).dump(2) << "\n";
    else
        std::cout << render(p) << "\n";
    return 0;
}

int cmd_dualimm(const std::string& shape, const std::string& route,
                const std::string& format) {
    Composition c = Composition::parse(shape);
    auto emit = [&](const qsym::Element& e) {
        if (format == "json")
            std::cout << serialize::to_json(e).dump(2) << "\n";
        else
            std::cout << e.to_string() << "\n";
    };
    if (route != "all") {
        qsym::DualImmaculateRoute r = route == "barcomb"
                                          ? qsym::DualImmaculateRoute::BarComb
                                          : route == "iterated"
                                                ? qsym::DualImmaculateRoute::IteratedSucc
                                                : qsym::DualImmaculateRoute::Tableaux;
        emit(qsym::dual_immaculate(c, r));
        return 0;
    }
    auto a = qsym::dual_immaculate(c, qsym::DualImmaculateRoute::BarComb);
    auto b = qsym::dual_immaculate(c, qsym::DualImmaculateRoute::IteratedSucc);
    auto t = qsym::dual_immaculate(c, qsym::DualImmaculateRoute::Tableaux);
    if (a != b || b != t) {
        std::cerr << "error: construction routes disagree for " << c.to_string() << "\n"
                  << "  barcomb:  " << a.to_string() << "\n"
                  << "  iterated: " << b.to_string() << "\n"
                  << "  tableaux: " << t.to_string() << "\n";
        return 1;
    }
    emit(t);
    return 0;
}

int cmd_ccoeff(const std::string& shape, const std::string& form,
               const std::string& format) {
    Composition c = Composition::parse(shape);
    if (form == "qpoly") {
        QPoly p = bell::c_coefficient_qpoly(c);
        if (format == "json")
            std::cout << nlohmann::json{{"shape", c.to_string()}, {"coeff", p.to_string()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << p.to_string() << "\n";
    } else if (form == "fqsym") {
        auto e = bell::c_coefficient_fqsym(c);
        if (format == "json")
            std::cout << serialize::to_json(e).dump(2) << "\n";
        else
            std::cout << e.to_string() << "\n";
    } else {  // qsym
        auto e = bell::c_coefficient_qsym(c);
        if (format == "json")
            std::cout << serialize::to_json(e).dump(2) << "\n";
        else
            std::cout << e.to_string() << "\n";
    }
    return 0;
}

int cmd_freebell(int n, int bound, const std::string& format) {
    if (int rc = check_degree(n, bound)) return rc;
    auto e = bell::free_bell(n);
    if (format == "json")
        std::cout << serialize::to_json(e, n).dump(2) << "\n";
    else
        std::cout << e.to_string() << "\n";
    return 0;
}

int cmd_classes(int n, int bound, const std::string& format) {
    if (int rc = check_degree(n, bound)) return rc;
    if (format == "json") {
        std::cout << serialize::classes_json(n).dump(2) << "\n";
        return 0;
    }
    for (const auto& c : bellhopf::bell_classes_cached(n)) {
        std::cout << c.partition.to_string() << "  min=" << c.weak_min.to_string()
                  << "  max=" << c.weak_max.to_string() << "  size=" << c.members.size()
                  << "\n";
    }
    return 0;
}

int cmd_poset(const std::string& sigma, const std::string& format) {
    Permutation p = Permutation::parse(sigma);
    auto poset = bellhopf::BellPoset::from_columns(bellhopf::column_insert(p));
    if (format == "dot") {
        std::cout << bellhopf::to_dot(poset);
    } else if (format == "json") {
        std::cout << serialize::poset_json(poset).dump(2) << "\n";
    } else {
        std::cout << "columns: " << bellhopf::column_insert(p).to_string() << "\n";
        for (const auto& e : poset.hasse_edges())
            std::cout << e.lower << " < " << e.upper << "  ("
                      << (e.column ? "column" : "cross") << ")\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format) {
    auto results = checks::run_suite(suite);
    bool ok = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) {
            arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            ok = ok && r.pass;
        }
        std::cout << nlohmann::json{{"suite", suite}, {"checks", arr}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  " << r.detail
                      << "\n";
            ok = ok && r.pass;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bell polynomial calculus: noncommutative and q-analogues, free "
                 "lifts, dual immaculate functions, and set-partition congruence classes"};
    app.require_subcommand(1);

    int n = 0;
    int max_degree = 8;
    std::string variant = "classic", route = "all", form = "qpoly", shape, sigma;
    std::string suite = "all";
    std::string format = "text";

    auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& allowed) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    auto* bell_cmd =
        app.add_subcommand("bell", "noncommutative Bell polynomial of a given degree");
    bell_cmd->add_option("--n", n, "degree")->required();
    bell_cmd->add_option("--max-degree", max_degree, "degree bound")->capture_default_str();
    bell_cmd
        ->add_option("--variant", variant,
                     "classic | qprime | qdoubleprime | triangle | qdet")
        ->check(CLI::IsMember({"classic", "qprime", "qdoubleprime", "triangle", "qdet"}))
        ->capture_default_str();
    add_format(bell_cmd, {"text", "json"});

    auto* dualimm_cmd =
        app.add_subcommand("dualimm", "dual immaculate function of a composition");
    dualimm_cmd->add_option("--shape", shape, "composition, e.g. 2,2,1")->required();
    dualimm_cmd->add_option("--route", route, "barcomb | iterated | tableaux | all")
        ->check(CLI::IsMember({"barcomb", "iterated", "tableaux", "all"}))
        ->capture_default_str();
    add_format(dualimm_cmd, {"text", "json"});

    auto* ccoeff_cmd = app.add_subcommand(
        "ccoeff", "coefficient of a Y-monomial in the free Bell polynomial");
    ccoeff_cmd->add_option("--shape", shape, "composition, e.g. 2,2,1")->required();
    ccoeff_cmd->add_option("--form", form, "qpoly | fqsym | qsym")
        ->check(CLI::IsMember({"qpoly", "fqsym", "qsym"}))
        ->capture_default_str();
    add_format(ccoeff_cmd, {"text", "json"});

    auto* freebell_cmd =
        app.add_subcommand("freebell", "free Bell polynomial of a given degree");
    freebell_cmd->add_option("--n", n, "degree")->required();
    freebell_cmd->add_option("--max-degree", max_degree, "degree bound")
        ->capture_default_str();
    add_format(freebell_cmd, {"text", "json"});

    auto* classes_cmd =
        app.add_subcommand("classes", "congruence classes of a symmetric group");
    classes_cmd->add_option("--n", n, "degree")->required();
    classes_cmd->add_option("--max-degree", max_degree, "degree bound")
        ->capture_default_str();
    add_format(classes_cmd, {"text", "json"});

    auto* poset_cmd =
        app.add_subcommand("poset", "poset attached to the insertion of a permutation");
    poset_cmd->add_option("--sigma", sigma, "permutation, e.g. 3126457")->required();
    add_format(poset_cmd, {"dot", "text", "json"});

    auto* verify_cmd = app.add_subcommand("verify", "run an acceptance suite");
    verify_cmd->add_option("--suite", suite, "all | bell | dendriform | dualimm | hopf")
        ->check(CLI::IsMember({"all", "bell", "dendriform", "dualimm", "hopf"}))
        ->capture_default_str();
    add_format(verify_cmd, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (bell_cmd->parsed()) return cmd_bell(n, max_degree, variant, format);
        if (dualimm_cmd->parsed()) return cmd_dualimm(shape, route, format);
        if (ccoeff_cmd->parsed()) return cmd_ccoeff(shape, form, format);
        if (freebell_cmd->parsed()) return cmd_freebell(n, max_degree, format);
        if (classes_cmd->parsed()) return cmd_classes(n, max_degree, format);
        if (poset_cmd->parsed()) return cmd_poset(sigma, format);
        if (verify_cmd->parsed()) return cmd_verify(suite, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
