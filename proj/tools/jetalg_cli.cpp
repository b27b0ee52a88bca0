// jetalg: command-line front end over the JSON formats.
//
// Exit codes: 0 success, 1 a verification (or fit) failed, 2 bad input or usage.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "jetalg/ideals.hpp"
#include "jetalg/lie.hpp"
#include "jetalg/poly_fit.hpp"
#include "jetalg/serialize.hpp"
#include "jetalg/suites.hpp"

using namespace jetalg;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct CliConfig {
    std::uint64_t seed = 0;
    std::int64_t window_radius = 3;
    std::int64_t degree_cap = 6;
    int trials = 16;
    std::string format = "json";
};

bool text(const CliConfig &c) { return c.format == "text"; }

// An argument is inline JSON, "-" for stdin, or a file path.
json load_json(const std::string &arg) {
    std::string body;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (arg == "-") {
        body.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        body = arg;
    } else {
        std::ifstream in(arg);
        if (!in)
            throw Error("cannot open '" + arg + "'");
        body.assign(std::istreambuf_iterator<char>(in), {});
    }
    return json::parse(body);
}

std::vector<std::string> split_pair(const std::string &s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw Error("expected a pair 'a,b', got '" + s + "'");
    return {s.substr(0, comma), s.substr(comma + 1)};
}

RationalPair parse_rational_pair(const std::string &s) {
    const auto parts = split_pair(s);
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

LatticePoint parse_point(const std::string &s) {
    const auto parts = split_pair(s);
    const Rational a = parse_rational(parts[0]), b = parse_rational(parts[1]);
    if (!is_integer(a) || !is_integer(b) || !a.get_num().fits_slong_p() || !b.get_num().fits_slong_p())
        throw Error("lattice point entries must be integers, got '" + s + "'");
    return {a.get_num().get_si(), b.get_num().get_si()};
}

std::string show(const AnyElement &x) {
    return std::visit([](const auto &e) {
        std::ostringstream os;
        os << e;
        return os.str();
    }, x);
}

AElement bracket_a(const AElement &, const AElement &) { return {}; }

AnyElement bracket_any(const AnyElement &x, const AnyElement &y) {
    return std::visit(
        [](const auto &a, const auto &b) -> AnyElement {
            using A = std::decay_t<decltype(a)>;
            using B = std::decay_t<decltype(b)>;
            if constexpr (!std::is_same_v<A, B>) {
                throw Error("elements belong to different algebras");
            } else if constexpr (std::is_same_v<A, GElement>) {
                return bracket_g(a, b);
            } else if constexpr (std::is_same_v<A, AElement>) {
                return bracket_a(a, b);
            } else if constexpr (std::is_same_v<A, GAElement>) {
                return bracket_semidirect(a, b);
            } else if constexpr (std::is_same_v<A, LElement>) {
                return bracket_l(a, b);
            } else {
                return bracket_bplus(a, b);
            }
        },
        x, y);
}

AnyElement defect_any(const AnyElement &x, const AnyElement &y, const AnyElement &z) {
    AnyElement a = bracket_any(x, bracket_any(y, z));
    AnyElement b = bracket_any(y, bracket_any(z, x));
    AnyElement c = bracket_any(z, bracket_any(x, y));
    return std::visit(
        [&](auto u) -> AnyElement {
            using T = decltype(u);
            u += std::get<T>(b);
            u += std::get<T>(c);
            return u;
        },
        a);
}

AnyElement load_element(const std::string &arg, const std::string &algebra) {
    AnyElement x = element_from_json(load_json(arg));
    if (!algebra.empty() && algebra_name(x) != algebra)
        throw Error("element is in " + algebra_name(x) + ", expected " + algebra);
    return x;
}

void print_element(const CliConfig &cfg, const AnyElement &x) {
    if (text(cfg))
        std::cout << show(x) << '\n';
    else
        std::cout << element_to_json(x).dump() << '\n';
}

void print_bool(const CliConfig &cfg, const char *key, bool value) {
    if (text(cfg))
        std::cout << key << ": " << (value ? "true" : "false") << '\n';
    else
        std::cout << json{{key, value}}.dump() << '\n';
}

void print_matrix(const CliConfig &cfg, const QMatrix &a) {
    if (text(cfg))
        std::cout << a << '\n';
    else
        std::cout << matrix_to_json(a).dump() << '\n';
}

void print_family(const CliConfig &cfg, const PolyOperatorFamily &f) {
    if (!text(cfg)) {
        std::cout << family_to_json(f).dump() << '\n';
        return;
    }
    std::cout << "degree " << f.degree() << '\n';
    for (const auto &[i, d] : f.coeffs)
        std::cout << "D" << i << " = " << d << '\n';
}

GAElement as_ga(const AnyElement &x) {
    if (const auto *g = std::get_if<GElement>(&x))
        return {*g, {}};
    if (const auto *a = std::get_if<AElement>(&x))
        return {{}, *a};
    if (const auto *ga = std::get_if<GAElement>(&x))
        return *ga;
    throw Error("act needs an element of G, A or GA");
}

int run_verify(const CliConfig &cfg, const std::string &suite, const std::string &spec_arg) {
    std::optional<JetModuleSpec> spec;
    if (!spec_arg.empty())
        // B-spec generators are not validated here; the suite reports relation failures itself.
        spec = spec_from_json(load_json(spec_arg), false);
    const SuiteConfig sc{cfg.seed, cfg.window_radius, cfg.degree_cap, cfg.trials};
    const auto results = run_suite(suite, sc, spec);
    for (const auto &r : results) {
        if (text(cfg))
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << '/' << r.check << " (seed " << r.seed
                      << "): " << r.detail << '\n';
        else
            std::cout << json{{"suite", r.suite}, {"check", r.check}, {"pass", r.pass}, {"seed", r.seed},
                              {"detail", r.detail}}
                             .dump()
                      << '\n';
    }
    return all_pass(results) ? kOk : kFailed;
}

int run_classify(const CliConfig &cfg, const std::string &a_arg, const std::string &b_arg) {
    const JetModuleSpec a = spec_from_json(load_json(a_arg));
    if (b_arg.empty()) {
        if (a.is_f()) {
            print_bool(cfg, "irreducible", f_is_irreducible(a));
            return kOk;
        }
        const auto report = bplus_indecomposable(a.b().rep, cfg.trials, cfg.seed);
        if (text(cfg)) {
            std::cout << "indecomposable: " << to_string(report.verdict) << " (commutant dimension "
                      << report.commutant_dim << ")\n";
        } else {
            json out{{"indecomposable", to_string(report.verdict)}, {"commutant_dim", report.commutant_dim}};
            if (report.idempotent)
                out["idempotent"] = matrix_to_json(*report.idempotent);
            std::cout << out.dump() << '\n';
        }
        return kOk;
    }
    const JetModuleSpec b = spec_from_json(load_json(b_arg));
    if (!a.is_f() || !b.is_f())
        throw Error("classify compares F-specs only");
    print_bool(cfg, "isomorphic", f_isomorphic(a, b));
    return kOk;
}

int run_fit(const CliConfig &cfg, const std::string &spec_arg) {
    const JetModuleSpec spec = spec_from_json(load_json(spec_arg));
    const OperatorSampler sampler = [&spec](LatticePoint m) { return extract_L(spec, m); };
    try {
        print_family(cfg, fit_family(sampler, cfg.degree_cap, spec.dim()));
    } catch (const FitError &e) {
        if (text(cfg))
            std::cout << "fit failed: " << e.what() << '\n';
        else
            std::cout << json{{"error", "no polynomial fit within cap"},
                              {"cap", e.cap},
                              {"point", json::array({e.point.m1, e.point.m2})},
                              {"residual", matrix_to_json(e.residual)}}
                             .dump()
                      << '\n';
        return kFailed;
    }
    return kOk;
}

JetModuleSpec build_module(const std::string &kind, const std::string &alpha, const std::string &lambda,
                           std::optional<std::int64_t> n, const std::string &rep_arg, const std::string &sl2_arg) {
    const Rational l = parse_rational(lambda);
    const RationalPair a = alpha.empty() ? RationalPair{0, 0} : parse_rational_pair(alpha);
    const auto sl2 = [&]() -> SL2Rep {
        if (!sl2_arg.empty())
            return sl2_from_json(load_json(sl2_arg));
        if (!n)
            throw Error("give --n or --sl2");
        return sl2_irrep(*n);
    };
    if (kind == "F") {
        if (!rep_arg.empty())
            throw Error("--rep is for B-specs; F-specs take --n or --sl2");
        return make_f_spec(a, l, sl2());
    }
    if (!rep_arg.empty())
        return make_b_spec(l, bplus_rep_from_json(load_json(rep_arg)));
    return make_b_spec(l, bplus_from_sl2(sl2(), a));
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact arithmetic for the Virasoro-like algebra, its jet modules and B_+"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for randomized checks");
    app.add_option("--window", cfg.window_radius, "Window radius for verification loops")->check(CLI::Range(1, 1000));
    app.add_option("--cap", cfg.degree_cap, "Degree cap for polynomial fits")->check(CLI::Range(0, 1000));
    app.add_option("--trials", cfg.trials, "Random trials per check")->check(CLI::Range(1, 100000000));
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::function<int()> action;

    std::string algebra;
    std::vector<std::string> elems;
    auto *bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
    bracket->add_option("elements", elems, "Two element JSONs (inline, file, or -)")->required()->expected(2);
    bracket->add_option("--algebra", algebra)->check(CLI::IsMember({"G", "A", "GA", "L", "Bplus"}));
    bracket->callback([&] {
        action = [&] {
            print_element(cfg, bracket_any(load_element(elems[0], algebra), load_element(elems[1], algebra)));
            return kOk;
        };
    });

    std::vector<std::string> triple;
    auto *jacobi = app.add_subcommand("jacobi-defect", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]]");
    jacobi->add_option("elements", triple, "Three element JSONs")->required()->expected(3);
    jacobi->add_option("--algebra", algebra)->check(CLI::IsMember({"G", "A", "GA", "L", "Bplus"}));
    jacobi->callback([&] {
        action = [&] {
            print_element(cfg, defect_any(load_element(triple[0], algebra), load_element(triple[1], algebra),
                                          load_element(triple[2], algebra)));
            return kOk;
        };
    });

    std::string one;
    std::string ideal = "I";
    std::int64_t k = 2;
    auto *itest = app.add_subcommand("ideal-test", "Membership in I_k, [L,L] or J_k");
    itest->add_option("x", one)->required();
    itest->add_option("--ideal", ideal)->check(CLI::IsMember({"I", "derived", "J"}));
    itest->add_option("--k", k);
    itest->callback([&] {
        action = [&] {
            bool member = false;
            if (ideal == "J") {
                member = in_ideal_Jk(std::get<BPlusElement>(load_element(one, "Bplus")), k);
            } else {
                const auto x = std::get<LElement>(load_element(one, "L"));
                member = ideal == "I" ? in_ideal_Ik(x, k) : in_derived(x);
            }
            if (text(cfg))
                std::cout << (member ? "member" : "not a member") << '\n';
            else
                std::cout << json{{"ideal", ideal}, {"k", k}, {"member", member}}.dump() << '\n';
            return kOk;
        };
    });

    auto *project = app.add_subcommand("project", "Projection onto sl2 + Q z1 + Q z2");
    project->add_option("x", one)->required();
    project->callback([&] {
        action = [&] {
            const ReductiveElement r = project_reductive(std::get<LElement>(load_element(one, "L")));
            if (text(cfg))
                std::cout << r.sl2() << " + " << to_string(r.z1()) << "*z1 + " << to_string(r.z2()) << "*z2\n";
            else
                std::cout << reductive_to_json(r).dump() << '\n';
            return kOk;
        };
    });

    int c = 1;
    std::int64_t s = 0, l = 1;
    auto *diff = app.add_subcommand("diff", "Difference derivative sum (-1)^(l-i) C(l,i) L(s+i, c)");
    diff->add_option("--c", c)->check(CLI::IsMember({0, 1}));
    diff->add_option("--s", s);
    diff->add_option("--l", l)->check(CLI::Range(0, 10000));
    diff->callback([&] {
        action = [&] {
            print_element(cfg, diff_derivative(c, s, l));
            return kOk;
        };
    });

    std::string kind, alpha, lambda = "1", rep_arg, sl2_arg;
    std::optional<std::int64_t> irrep_n;
    auto *mk = app.add_subcommand("mkmodule", "Build a jet module spec");
    mk->add_option("kind", kind)->required()->check(CLI::IsMember({"F", "B"}));
    mk->add_option("--alpha", alpha, "a1,a2 (F-specs, or B-specs built from an sl2 module)");
    mk->add_option("--lambda", lambda);
    mk->add_option("--n", irrep_n, "Use the irreducible sl2 module of dimension n+1")->check(CLI::Range(0, 1000));
    mk->add_option("--sl2", sl2_arg, "SL2Rep JSON");
    mk->add_option("--rep", rep_arg, "BPlusRep JSON (B-specs)");
    mk->callback([&] {
        action = [&] {
            const JetModuleSpec spec = build_module(kind, alpha, lambda, irrep_n, rep_arg, sl2_arg);
            std::cout << spec_to_json(spec).dump() << '\n';
            return kOk;
        };
    });

    std::string spec_arg, elem_arg, vec_arg;
    auto *act = app.add_subcommand("act", "Apply an element of G, A or GA to a module vector");
    act->add_option("spec", spec_arg)->required();
    act->add_option("element", elem_arg)->required();
    act->add_option("vector", vec_arg)->required();
    act->callback([&] {
        action = [&] {
            const JetModuleSpec spec = spec_from_json(load_json(spec_arg));
            const GAElement x = as_ga(element_from_json(load_json(elem_arg)));
            const ModuleVector v = vector_from_json(load_json(vec_arg));
            const ModuleVector out = act_element(spec, x, v);
            if (text(cfg)) {
                for (const auto &[g, u] : out.support()) {
                    std::cout << g << ':';
                    for (const auto &q : u)
                        std::cout << ' ' << to_string(q);
                    std::cout << '\n';
                }
            } else {
                std::cout << vector_to_json(out).dump() << '\n';
            }
            return kOk;
        };
    });

    std::string m_arg;
    auto *extract = app.add_subcommand("extract-l", "The operator L(m) on V_0");
    extract->add_option("spec", spec_arg)->required();
    auto *m_opt = extract->add_option("--m", m_arg, "m1,m2");
    extract->add_option("--element", elem_arg, "L element JSON (linear extension)")->excludes(m_opt);
    extract->callback([&] {
        action = [&] {
            const JetModuleSpec spec = spec_from_json(load_json(spec_arg));
            if (!elem_arg.empty())
                print_matrix(cfg, extract_L(spec, std::get<LElement>(load_element(elem_arg, "L"))));
            else if (!m_arg.empty())
                print_matrix(cfg, extract_L(spec, parse_point(m_arg)));
            else
                throw Error("give --m or --element");
            return kOk;
        };
    });

    std::string suite;
    auto *verify = app.add_subcommand("verify", "Run a property suite (JSON lines, one check per line)");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--spec", spec_arg, "Spec for the jet and fit suites");
    verify->callback([&] { action = [&] { return run_verify(cfg, suite, spec_arg); }; });

    auto *fit = app.add_subcommand("fit", "Recover L(m) = sum m^i/i! D_i by exact interpolation");
    fit->add_option("spec", spec_arg)->required();
    fit->callback([&] { action = [&] { return run_fit(cfg, spec_arg); }; });

    std::vector<std::string> specs;
    auto *classify = app.add_subcommand(
        "classify", "Isomorphism of two F-specs; with one spec, irreducibility (F) or indecomposability (B)");
    classify->add_option("specs", specs)->required()->expected(1, 2);
    classify->callback([&] {
        action = [&] { return run_classify(cfg, specs[0], specs.size() > 1 ? specs[1] : std::string()); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        return action();
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
}
