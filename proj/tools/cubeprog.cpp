// cubeprog: construct, verify and classify arithmetic progressions of
// three cubes over quadratic fields Q(sqrt(D)), exactly.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeprog/analytic.hpp"
#include "cubeprog/elliptic.hpp"
#include "cubeprog/progression.hpp"
#include "cubeprog/table.hpp"

using json = nlohmann::ordered_json;
using namespace cubeprog;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string approx(const Rational& q) {
    mpf_class v(q, 128);
    char* buf = nullptr;
    gmp_asprintf(&buf, "%.20Fg", v.get_mpf_t());
    std::string out = buf;
    free(buf);
    return out;
}

std::string approx(const QuadElem& q) {
    return approx(q.a()) + " + " + approx(q.b()) + "*sqrt(" + to_string(q.d()) + ")";
}

json to_json(const QuadElem& v) {
    return json{{"a", to_string(v.a())}, {"b", to_string(v.b())}, {"d", to_string(v.d())},
                {"text", v.str()}};
}

json to_json(const APTriple<QuadElem>& t) {
    return json{{"x0", to_json(t.x0)}, {"x1", to_json(t.x1)}, {"x2", to_json(t.x2)}};
}

Integer parse_integer_arg(const std::string& s, const std::string& what) {
    auto v = parse_integer(s);
    if (!v) throw std::invalid_argument(what + ": expected an integer, got '" + s + "'");
    return *v;
}

Rational parse_rational_arg(const std::string& s, const std::string& what) {
    auto v = parse_rational(s);
    if (!v) throw std::invalid_argument(what + ": expected p, -p or p/q, got '" + s + "'");
    return *v;
}

int env_thread_cap() {
    const char* raw = std::getenv("CUBEPROG_THREADS");
    if (!raw) return 0;
    try {
        int n = std::stoi(raw);
        return n < 0 ? 0 : n;
    } catch (const std::exception&) {
        return 0;
    }
}

void emit(const json& payload, bool as_json) {
    if (as_json) std::cout << payload.dump(2) << "\n";
}

std::string status_line(Status s) {
    switch (s) {
        case Status::Exists: return "Exists (unconditional)";
        case Status::ExistsUnderBSD: return "ExistsUnderBSD (assuming the Birch & Swinnerton-Dyer conjecture)";
        case Status::NotExists: return "NotExists (unconditional)";
        case Status::Unknown: return "Unknown (no implemented criterion applies)";
    }
    return "?";
}

void print_witness_text(const Verdict& v, bool show_approx) {
    if (!v.witness) return;
    const auto& w = *v.witness;
    std::cout << "witness progression over Q(sqrt(" << to_string(v.D) << ")):\n";
    std::cout << "  x0 = " << w.x0.str() << "\n";
    std::cout << "  x1 = " << w.x1.str() << "\n";
    std::cout << "  x2 = " << w.x2.str() << "\n";
    std::cout << "  cubes in progression: " << (is_ap(w) ? "yes" : "NO") << ", trivial: "
              << (is_trivial_ap(w) ? "YES" : "no") << "\n";
    if (show_approx) {
        std::cout << "  approx x0 = " << approx(w.x0) << "\n";
        std::cout << "  approx x1 = " << approx(w.x1) << "\n";
        std::cout << "  approx x2 = " << approx(w.x2) << "\n";
    }
}

int cmd_classify(const std::string& d_arg, const std::vector<std::string>& point_arg,
                 bool as_json, bool show_approx) {
    Integer D = parse_integer_arg(d_arg, "classify");
    Verdict v = classify(D);

    std::string witness_source;
    if (!point_arg.empty()) {
        Point<Rational> p(parse_rational_arg(point_arg[0], "classify --point"),
                          parse_rational_arg(point_arg[1], "classify --point"));
        v = upgrade_with_witness(v, p);
        witness_source = "user";
    } else if (v.status != Status::NotExists) {
        if (auto row = witness_for(D)) {
            v = upgrade_with_witness(v, row->point());
            witness_source = "table";
        }
    }

    json out{{"command", "classify"}, {"D", to_string(D)}, {"status", to_string(v.status)},
             {"conditional", v.status == Status::ExistsUnderBSD}};
    json crits = json::array();
    for (const auto& c : v.criteria) {
        crits.push_back(json{{"tag", c.tag}, {"direction", to_string(c.direction)},
                             {"detail", c.detail}});
    }
    out["criteria"] = crits;
    if (v.witness) {
        out["witness"] = to_json(*v.witness);
        out["witness"]["source"] = witness_source;
        out["witness"]["is_ap"] = is_ap(*v.witness);
        out["witness"]["is_trivial"] = is_trivial_ap(*v.witness);
    } else {
        out["witness"] = nullptr;
    }
    if (as_json) {
        emit(out, true);
        return kExitOk;
    }

    std::cout << "D = " << to_string(D) << " (squarefree)\n";
    std::cout << "non-trivial progression of three cubes over Q(sqrt(" << to_string(D)
              << ")): " << status_line(v.status) << "\n";
    std::cout << "criteria:\n";
    for (const auto& c : v.criteria) {
        std::cout << "  " << c.tag << " [" << to_string(c.direction) << "]: " << c.detail << "\n";
    }
    if (!witness_source.empty()) {
        std::cout << "witness source: "
                  << (witness_source == "table" ? "bundled table row" : "user-supplied point")
                  << "\n";
    }
    print_witness_text(v, show_approx);
    return kExitOk;
}

int cmd_ad(const std::string& d_arg, bool verbose, bool as_json) {
    Integer d = parse_integer_arg(d_arg, "ad");
    ADResult r = a_d(d);
    json out{{"command", "ad"}, {"d", to_string(d)}, {"value", to_string(r.value)},
             {"triple_count", std::to_string(r.triple_count())}};
    if (verbose) {
        json sols = json::array();
        for (const auto& s : r.solutions) {
            sols.push_back(json{{"m", to_string(s.m)}, {"n", to_string(s.n)}, {"k", to_string(s.k)}});
        }
        out["solutions"] = sols;
    }
    if (as_json) {
        emit(out, true);
        return kExitOk;
    }
    std::cout << "A_" << to_string(d) << " = " << to_string(r.value) << "  ("
              << r.triple_count() << " lattice solutions)\n";
    if (verbose) {
        for (const auto& s : r.solutions) {
            std::cout << "  (m, n, k) = (" << to_string(s.m) << ", " << to_string(s.n) << ", "
                      << to_string(s.k) << ")\n";
        }
    }
    return kExitOk;
}

int cmd_torsion(const std::string& d_arg, bool as_json) {
    Integer D = parse_integer_arg(d_arg, "torsion");
    TorsionGroup<QuadElem> g = torsion_over_quadratic(D);
    const Curve E = curve_E();

    std::string structure;
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (i) structure += " x ";
        structure += "Z/" + std::to_string(g.invariant_factors[i]);
    }
    if (structure.empty()) structure = "trivial";

    json out{{"command", "torsion"}, {"D", to_string(D)}, {"curve", E.str()},
             {"field", "Q(sqrt(" + to_string(D) + "))"}, {"structure", structure}};
    json factors = json::array();
    for (int f : g.invariant_factors) factors.push_back(std::to_string(f));
    out["invariant_factors"] = factors;
    json gens = json::array();
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        gens.push_back(json{{"order", std::to_string(g.invariant_factors[i])},
                            {"x", to_json(g.generators[i].x())},
                            {"y", to_json(g.generators[i].y())}});
    }
    out["generators"] = gens;
    if (as_json) {
        emit(out, true);
        return kExitOk;
    }
    std::cout << "torsion of " << E.str() << " over Q(sqrt(" << to_string(D)
              << ")): " << structure << "\n";
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        std::cout << "  order " << g.invariant_factors[i] << ": " << g.generators[i].str() << "\n";
    }
    return kExitOk;
}

int cmd_ap(const std::string& d_arg, const std::string& x_arg, const std::string& y_arg,
           bool as_json, bool show_approx) {
    Integer D = parse_integer_arg(d_arg, "ap");
    Rational x = parse_rational_arg(x_arg, "ap");
    Rational y = parse_rational_arg(y_arg, "ap");
    Curve twist = curve_E_twist(D);
    Point<Rational> p(x, y);
    if (!is_on_curve(twist, p)) {
        Rational residual = y * y - (x * x * x + twist.B());
        throw std::invalid_argument("point (" + to_string(x) + ", " + to_string(y) +
                                    ") is not on " + twist.str() + "; residual y^2 - (x^3 " +
                                    (twist.B() < 0 ? "- " : "+ ") + to_string(abs(twist.B())) +
                                    ") = " + to_string(residual));
    }
    auto order = point_order(twist, p);
    APTriple<QuadElem> t = ap_from_twist_point(D, p);
    QuadElem c0 = t.x0 * t.x0 * t.x0;
    QuadElem c1 = t.x1 * t.x1 * t.x1;
    QuadElem c2 = t.x2 * t.x2 * t.x2;
    QuadElem diff = c1 - c0;

    json out{{"command", "ap"}, {"D", to_string(D)},
             {"point", json{{"x", to_string(x)}, {"y", to_string(y)}}},
             {"curve", twist.str()},
             {"order", order ? std::to_string(*order) : "infinite"}};
    out["triple"] = to_json(t);
    out["cubes"] = json{{"c0", to_json(c0)}, {"c1", to_json(c1)}, {"c2", to_json(c2)}};
    out["common_difference"] = to_json(diff);
    out["is_ap"] = is_ap(t);
    out["is_trivial"] = is_trivial_ap(t);
    if (as_json) {
        emit(out, true);
        return kExitOk;
    }
    std::cout << "point (" << to_string(x) << ", " << to_string(y) << ") on " << twist.str()
              << "\n";
    std::cout << "order: " << (order ? std::to_string(*order) : "infinite") << "\n";
    std::cout << "progression roots over Q(sqrt(" << to_string(D) << ")):\n";
    std::cout << "  x0 = " << t.x0.str() << "\n";
    std::cout << "  x1 = " << t.x1.str() << "\n";
    std::cout << "  x2 = " << t.x2.str() << "\n";
    std::cout << "cubes:\n";
    std::cout << "  x0^3 = " << c0.str() << "\n";
    std::cout << "  x1^3 = " << c1.str() << "\n";
    std::cout << "  x2^3 = " << c2.str() << "\n";
    std::cout << "common difference: " << diff.str() << "\n";
    std::cout << "is_ap: " << (is_ap(t) ? "true" : "false")
              << ", trivial: " << (is_trivial_ap(t) ? "true" : "false") << "\n";
    if (show_approx) {
        std::cout << "approx cubes: " << approx(c0) << " | " << approx(c1) << " | " << approx(c2)
                  << "\n";
    }
    return kExitOk;
}

int cmd_verify_table(bool as_json) {
    auto checks = verify_table(env_thread_cap());
    const auto& rows = witness_table();
    std::size_t passed = 0;
    json jrows = json::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        passed += c.pass();
        jrows.push_back(json{{"D", to_string(rows[i].D)},
                             {"x", to_string(rows[i].x)},
                             {"y", to_string(rows[i].y)},
                             {"on_curve", c.on_curve},
                             {"infinite_order", c.infinite_order},
                             {"ap_valid", c.ap_valid},
                             {"nontrivial", c.nontrivial},
                             {"pass", c.pass()}});
    }
    json out{{"command", "verify-table"}, {"rows", jrows},
             {"passed", std::to_string(passed)}, {"total", std::to_string(checks.size())}};
    if (as_json) {
        emit(out, true);
    } else {
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const auto& c = checks[i];
            std::cout << "D=" << to_string(rows[i].D) << "\ton_curve="
                      << (c.on_curve ? "ok" : "FAIL") << " order="
                      << (c.infinite_order ? "inf" : "FAIL") << " ap="
                      << (c.ap_valid ? "ok" : "FAIL") << " nontrivial="
                      << (c.nontrivial ? "ok" : "FAIL") << "\t"
                      << (c.pass() ? "PASS" : "FAIL") << "\n";
        }
        std::cout << passed << "/" << checks.size() << " rows pass\n";
    }
    return passed == checks.size() ? kExitOk : kExitVerificationFailure;
}

int cmd_search(const std::string& d_arg, const std::string& h_arg, const std::string& c_arg,
               bool as_json) {
    Integer D = parse_integer_arg(d_arg, "search");
    Integer H = parse_integer_arg(h_arg, "search --height");
    Integer Cmax = parse_integer_arg(c_arg, "search --denom");
    if (H <= 0 || Cmax <= 0) {
        throw std::invalid_argument("search: bounds must be positive");
    }
    Curve twist = curve_E_twist(D);

    std::optional<Point<Rational>> found;
    for (Integer c(1); c <= Cmax && !found; ++c) {
        Integer c2 = c * c;
        for (Integer a = -H * c2; a <= H * c2; ++a) {
            if (c > 1) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
                if (g != 1) continue;
            }
            Rational x = make_rational(a, c2);
            Rational rhs = x * x * x + twist.B();
            auto y = rational_sqrt_exact(rhs);
            if (!y) continue;
            Point<Rational> p(x, *y);
            if (point_order(twist, p)) continue;   // torsion proves nothing
            found = p;
            break;
        }
    }

    json out{{"command", "search"}, {"D", to_string(D)}, {"height", to_string(H)},
             {"denom", to_string(Cmax)}};
    if (found) {
        out["found"] = json{{"x", to_string(found->x())}, {"y", to_string(found->y())},
                            {"order", "infinite"}};
    } else {
        out["found"] = nullptr;
    }
    if (as_json) {
        emit(out, true);
        return kExitOk;
    }
    std::cout << "search on " << twist.str() << ", x = a/c^2 with c <= " << to_string(Cmax)
              << ", |a| <= " << to_string(H) << "*c^2\n";
    if (found) {
        std::cout << "found: (" << to_string(found->x()) << ", " << to_string(found->y())
                  << "), infinite order\n";
    } else {
        std::cout << "none found (not a proof of non-existence)\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic progressions of three cubes over quadratic fields"};
    app.require_subcommand(1);

    std::string arg_d, arg_x, arg_y, arg_h, arg_c;
    std::vector<std::string> arg_point;
    bool flag_json = false, flag_verbose = false, flag_approx = false;

    auto* classify_cmd = app.add_subcommand("classify",
        "decide existence of a non-trivial progression of three cubes over Q(sqrt(D))");
    classify_cmd->add_option("D", arg_d, "squarefree integer")->required();
    classify_cmd->add_option("--point", arg_point, "rational point x y on y^2 = x^3 - 27 D^3")
        ->expected(2);
    classify_cmd->add_flag("--json", flag_json, "machine-readable output");
    classify_cmd->add_flag("--approx", flag_approx, "also print labeled decimal approximations");

    auto* ad_cmd = app.add_subcommand("ad", "signed lattice count A_d over m^2+n^2+k^2 = d");
    ad_cmd->add_option("d", arg_d, "positive squarefree integer coprime with 6")->required();
    ad_cmd->add_flag("--verbose", flag_verbose, "list the lattice solutions");
    ad_cmd->add_flag("--json", flag_json, "machine-readable output");

    auto* torsion_cmd = app.add_subcommand("torsion",
        "torsion of y^2 = x^3 - 27 over Q(sqrt(D))");
    torsion_cmd->add_option("D", arg_d, "squarefree integer, not 0 or 1")->required();
    torsion_cmd->add_flag("--json", flag_json, "machine-readable output");

    auto* ap_cmd = app.add_subcommand("ap",
        "build the progression attached to a rational point on y^2 = x^3 - 27 D^3");
    ap_cmd->add_option("D", arg_d, "squarefree integer, not 0 or 1")->required();
    ap_cmd->add_option("x", arg_x, "x-coordinate (p/q or integer)")->required();
    ap_cmd->add_option("y", arg_y, "y-coordinate (p/q or integer)")->required();
    ap_cmd->add_flag("--json", flag_json, "machine-readable output");
    ap_cmd->add_flag("--approx", flag_approx, "also print labeled decimal approximations");

    auto* verify_cmd = app.add_subcommand("verify-table",
        "re-verify every bundled witness row exactly");
    verify_cmd->add_flag("--json", flag_json, "machine-readable output");

    auto* search_cmd = app.add_subcommand("search",
        "naive search for an infinite-order rational point on y^2 = x^3 - 27 D^3");
    search_cmd->add_option("D", arg_d, "squarefree integer")->required();
    search_cmd->add_option("--height", arg_h, "numerator bound per denominator class")->required();
    search_cmd->add_option("--denom", arg_c, "denominator bound (x = a/c^2, c <= bound)")->required();
    search_cmd->add_flag("--json", flag_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(arg_d, arg_point, flag_json, flag_approx);
        if (ad_cmd->parsed()) return cmd_ad(arg_d, flag_verbose, flag_json);
        if (torsion_cmd->parsed()) return cmd_torsion(arg_d, flag_json);
        if (ap_cmd->parsed()) return cmd_ap(arg_d, arg_x, arg_y, flag_json, flag_approx);
        if (verify_cmd->parsed()) return cmd_verify_table(flag_json);
        if (search_cmd->parsed()) return cmd_search(arg_d, arg_h, arg_c, flag_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
