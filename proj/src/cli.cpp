#include "lhom/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lhom/chain.hpp"
#include "lhom/lhomology.hpp"
#include "lhom/oracle.hpp"
#include "lhom/predict.hpp"
#include "lhom/scx.hpp"

namespace lhom {
namespace cli {

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

Complex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scx(buf.str());
}

Coefficients parse_coeff(const std::string& s) {
    auto c = Coefficients::parse(s);
    if (!c) throw std::runtime_error("bad coefficient ring '" + s + "'");
    return *c;
}

json complex_meta(const Complex& K) {
    json m;
    m["vertices"] = K.vertex_count();
    m["f_vector"] = K.f_vector();
    return m;
}

json groups_json(const BigradedGroups& g) {
    json arr = json::array();
    for (const auto& [bd, m] : g.entries) {
        json e;
        e["s"] = bd.first;
        e["t"] = bd.second;
        e["rank"] = m.rank;
        json tor = json::array();
        for (const Int& d : m.torsion) tor.push_back(d.convert_to<long long>());
        e["torsion"] = tor;
        arr.push_back(e);
    }
    return arr;
}

json invariants_document(const std::string& command, const Complex& K,
                         const BigradedGroups& g) {
    json doc;
    doc["tool"] = "lhom";
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["reduced"] = g.reduced;
    doc["coefficients"] = g.coeff.str();
    doc["page"] = g.page;
    doc["complex"] = complex_meta(K);
    doc["groups"] = groups_json(g);
    return doc;
}

void print_groups_table(std::ostream& out, const BigradedGroups& g) {
    out << "(s,t)  group  [coeff " << g.coeff.str() << ", "
        << (g.reduced ? "reduced" : "unreduced") << ", page " << g.page << "]\n";
    if (g.entries.empty()) out << "  all zero\n";
    for (const auto& [bd, m] : g.entries)
        out << "  (" << bd.first << "," << bd.second << ")  " << m.str() << "\n";
}

void emit_complex(const Complex& K, const std::string& output, std::ostream& out) {
    std::string text = emit_scx(K);
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(output);
    if (!f) throw std::runtime_error("cannot write '" + output + "'");
    f << text;
}

Simplex parse_simplex_names(const Complex& K, const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec + " ") {
        if (ch == ' ' || ch == ',' || ch == '\t') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    Simplex s;
    for (const std::string& name : parts) {
        auto id = K.vertex_id(name);
        if (!id) throw std::runtime_error("unknown vertex '" + name + "'");
        s.push_back(*id);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::runtime_error("repeated vertex in simplex");
    return s;
}

struct CheckResult {
    bool pass = true;
    void report(std::ostream& out, const std::string& name, bool ok,
                const std::string& note = "") {
        out << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!note.empty()) out << "  (" << note << ")";
        out << "\n";
        pass = pass && ok;
    }
};

int check_ex7(std::ostream& out, int n, const Coefficients& coeff) {
    CheckResult r;
    for (StandardKind kind : {StandardKind::Full, StandardKind::Boundary}) {
        Complex K = standard_complex(kind, n);
        auto pred = predict_example7(kind, n, coeff);
        BigradedGroups got = l_homology(K, coeff, true);
        r.report(out,
                 std::string(kind == StandardKind::Full ? "full" : "boundary") +
                     " n=" + std::to_string(n),
                 pred.groups.same_groups(got));
    }
    if (n >= 1) {
        auto cert = example7_certificate(n, coeff);
        r.report(out, "certificate sum_i [phi]_{sigma_i}",
                 cert.is_cycle && cert.generates);
    }
    return r.pass ? 0 : 2;
}

int check_thm4(std::ostream& out, const Complex& K, const Coefficients& coeff) {
    CheckResult r;
    for (bool reduced : {true, false}) {
        BigradedGroups a = e1_page(K, coeff, reduced).groups();
        BigradedGroups b = oracle::e1_direct(K, coeff, reduced);
        r.report(out, std::string("e1_page vs e1_direct ") +
                          (reduced ? "reduced" : "unreduced"),
                 a.same_groups(b));
        auto ru = reduced_unreduced_check(K, coeff);
        if (reduced) r.report(out, "reduced/unreduced exact sequence", ru.pass, ru.details);
    }
    return r.pass ? 0 : 2;
}

int check_thm6(std::ostream& out, const Complex& K, const Coefficients& coeff) {
    CheckResult r;
    auto tot = total_homology(K, coeff, true);
    bool conv = tot.by_degree.size() == 1 && tot.by_degree.count(0) &&
                tot.by_degree.at(0).rank == 1 && tot.by_degree.at(0).torsion.empty();
    r.report(out, "total homology = G in degree 0", conv);
    r.report(out, "theorem 6 generator is a cycle", tot.generator_is_cycle);
    r.report(out, "theorem 6 generator generates", tot.generator_generates);
    auto ed = essential_dimension(K, coeff);
    if (ed) {
        auto pred = predict_theorem6(K, coeff);
        BigradedGroups got = l_homology(K, coeff, true);
        r.report(out, "corroborated formula matches computation",
                 pred.corroborated.same_groups(got));
        bool literal = pred.literal.same_groups(got);
        out << "INFO  literal formula " << (literal ? "matches" : "differs") << "\n";
        if (!literal) out << pred.literal.diff(got);
    } else {
        out << "INFO  no essential dimension; theorem not applicable\n";
    }
    return r.pass ? 0 : 2;
}

int check_thm11(std::ostream& out, const Coefficients& coeff) {
    CheckResult r;
    Complex s1 = standard_complex(StandardKind::Boundary, 2);
    Complex pt = standard_complex(StandardKind::Full, 0);
    Complex dis = disjoint_union(s1, pt);
    BigradedGroups pred = predict_combination(
        CombKind::Disjoint, l_homology(s1, coeff, false), l_homology(pt, coeff, false),
        coeff);
    r.report(out, "disjoint union additivity", pred.same_groups(l_homology(dis, coeff, false)));

    Complex w = wedge(s1, s1);
    BigradedGroups got = l_homology(w, coeff, true);
    r.report(out, "wedge: main path vs oracle",
             got.same_groups(oracle::e2_direct(w, coeff, true)));
    BigradedGroups paper = predict_combination(
        CombKind::Wedge, l_homology(s1, coeff, true), l_homology(s1, coeff, true), coeff);
    out << "INFO  paper wedge formula "
        << (paper.same_groups(got) ? "matches" : "differs") << "\n";
    if (!paper.same_groups(got)) out << paper.diff(got);
    return r.pass ? 0 : 2;
}

int check_thm12(std::ostream& out, const Coefficients& field) {
    CheckResult r;
    if (!field.is_field()) throw std::runtime_error("check thm12 needs a field");
    Complex s0 = standard_complex(StandardKind::Boundary, 1);
    Complex four = join(s0, s0);
    BigradedGroups pred = predict_combination(
        CombKind::Join, l_homology(s0, field, true), l_homology(s0, field, true), field);
    r.report(out, "join S0 * S0", pred.same_groups(l_homology(four, field, true)));

    Complex s1 = standard_complex(StandardKind::Boundary, 2);
    BigradedGroups conep = predict_combination(
        CombKind::Cone, l_homology(s1, Coefficients::Z(), true), BigradedGroups{},
        Coefficients::Z());
    r.report(out, "cone over Z",
             conep.same_groups(l_homology(cone(s1), Coefficients::Z(), true)));

    BigradedGroups prod = predict_combination(
        CombKind::Product, l_homology(s1, field, false), l_homology(s1, field, false),
        field);
    r.report(out, "product S1 x S1",
             prod.same_groups(l_homology(cartesian_product(s1, s1), field, false)));
    return r.pass ? 0 : 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"L-homology of finite simplicial complexes"};
    app.require_subcommand(1);

    std::string file, file_b, coeff_s = "Z", out_fmt = "table", output, simplex_spec;
    bool unreduced = false;
    int page = 2, n = 3;
    unsigned long long seed = 42;
    int trials = 200, max_vertices = 8, max_dim = 3;

    auto add_common = [&](CLI::App* c, bool with_file = true) {
        if (with_file) c->add_option("file", file, "input .scx file")->required();
        c->add_option("--coeff", coeff_s, "coefficient ring: Z, Q or F<p>");
        c->add_flag("--unreduced", unreduced, "use the unreduced theory");
        c->add_flag_callback("--reduced", [&] { unreduced = false; },
                             "use the reduced theory (default)");
        c->add_option("--out", out_fmt, "output format: table or json")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a complex");
    validate->add_option("file", file)->required();

    CLI::App* info = app.add_subcommand("info", "basic complex data");
    add_common(info);

    CLI::App* hom = app.add_subcommand("homology", "simplicial (co)homology");
    add_common(hom);

    CLI::App* lh = app.add_subcommand("lh", "bigraded L-homology");
    add_common(lh);
    lh->add_option("--page", page, "spectral page (default 2 = L-homology)");

    CLI::App* construct = app.add_subcommand("construct", "build complexes");
    std::string kind;
    construct->add_option("kind", kind, "join|cone|product|wedge|disjoint|full|boundary")
        ->required();
    construct->add_option("a", file, "first input / unused for full|boundary");
    construct->add_option("b", file_b, "second input");
    construct->add_option("--n", n, "dimension for full|boundary");
    construct->add_option("--output", output, "write .scx here instead of stdout");

    CLI::App* subdivide = app.add_subcommand("subdivide", "stellar subdivision");
    subdivide->add_option("file", file)->required();
    subdivide->add_option("--simplex", simplex_spec, "vertex names, e.g. \"a b\"")
        ->required();
    subdivide->add_option("--output", output);

    CLI::App* compare = app.add_subcommand("compare", "compare L-homology of two complexes");
    compare->add_option("a", file)->required();
    compare->add_option("b", file_b)->required();
    compare->add_option("--coeff", coeff_s);
    compare->add_flag("--unreduced", unreduced);
    compare->add_option("--out", out_fmt);

    CLI::App* check = app.add_subcommand("check", "verify a theorem on examples");
    std::string what;
    check->add_option("what", what, "thm4|thm6|ex7|thm11|thm12")->required();
    check->add_option("--file", file, "complex for thm4/thm6 (default boundary of the 3-simplex)");
    check->add_option("--n", n, "simplex size for ex7");
    check->add_option("--coeff", coeff_s);

    CLI::App* fuzz = app.add_subcommand("fuzz", "stellar-invariance fuzzer");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--trials", trials);
    fuzz->add_option("--max-vertices", max_vertices);
    fuzz->add_option("--max-dim", max_dim);
    fuzz->add_option("--out", out_fmt);

    CLI::App* ocheck = app.add_subcommand("oracle-check", "main path vs oracles");
    ocheck->add_option("file", file)->required();
    ocheck->add_option("--coeff", coeff_s);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        const bool reduced = !unreduced;
        if (validate->parsed()) {
            Complex K = load_complex(file);
            lhom::validate(K);
            out << "ok: " << K.vertex_count() << " vertices, dim " << K.dim() << "\n";
            return 0;
        }
        if (info->parsed()) {
            Complex K = load_complex(file);
            if (out_fmt == "json") {
                json doc = complex_meta(K);
                doc["dim"] = K.dim();
                doc["euler_characteristic"] = K.euler_characteristic();
                json maxs = json::array();
                for (const Simplex& s : K.maximal_simplices())
                    maxs.push_back(simplex_str(K, s));
                doc["maximal_simplices"] = maxs;
                out << doc.dump(2) << "\n";
            } else {
                out << "vertices: " << K.vertex_count() << "\ndim: " << K.dim()
                    << "\neuler: " << K.euler_characteristic() << "\nf-vector:";
                for (long f : K.f_vector()) out << " " << f;
                out << "\nmaximal:";
                for (const Simplex& s : K.maximal_simplices())
                    out << " " << simplex_str(K, s);
                out << "\n";
            }
            return 0;
        }
        if (hom->parsed()) {
            Complex K = load_complex(file);
            Coefficients coeff = parse_coeff(coeff_s);
            auto H = homology(K, coeff, reduced);
            if (out_fmt == "json") {
                json doc;
                doc["tool"] = "lhom";
                doc["version"] = kVersion;
                doc["command"] = "homology";
                doc["reduced"] = reduced;
                doc["coefficients"] = coeff.str();
                doc["complex"] = complex_meta(K);
                json arr = json::array();
                for (const auto& [k, m] : H) {
                    json e;
                    e["degree"] = k;
                    e["rank"] = m.rank;
                    json tor = json::array();
                    for (const Int& d : m.torsion) tor.push_back(d.convert_to<long long>());
                    e["torsion"] = tor;
                    arr.push_back(e);
                }
                doc["groups"] = arr;
                out << doc.dump(2) << "\n";
            } else {
                if (H.empty()) out << "all zero\n";
                for (const auto& [k, m] : H) out << "H_" << k << " = " << m.str() << "\n";
            }
            return 0;
        }
        if (lh->parsed()) {
            Complex K = load_complex(file);
            Coefficients coeff = parse_coeff(coeff_s);
            BigradedGroups g = page == 2 ? l_homology(K, coeff, reduced)
                                         : spectral_page(K, coeff, page, reduced);
            if (out_fmt == "json")
                out << invariants_document("lh", K, g).dump(2) << "\n";
            else
                print_groups_table(out, g);
            return 0;
        }
        if (construct->parsed()) {
            if (kind == "full" || kind == "boundary") {
                Complex K = standard_complex(
                    kind == "full" ? StandardKind::Full : StandardKind::Boundary, n);
                emit_complex(K, output, out);
                return 0;
            }
            if (file.empty()) throw std::runtime_error("construct " + kind + " needs inputs");
            Complex A = load_complex(file);
            if (kind == "cone") {
                emit_complex(cone(A), output, out);
                return 0;
            }
            if (file_b.empty()) throw std::runtime_error("construct " + kind + " needs two inputs");
            Complex B = load_complex(file_b);
            Complex R = kind == "join"      ? join(A, B)
                        : kind == "product" ? cartesian_product(A, B)
                        : kind == "wedge"   ? wedge(A, B)
                        : kind == "disjoint"
                            ? disjoint_union(A, B)
                            : throw std::runtime_error("unknown construct kind '" + kind + "'");
            emit_complex(R, output, out);
            return 0;
        }
        if (subdivide->parsed()) {
            Complex K = load_complex(file);
            Simplex s = parse_simplex_names(K, simplex_spec);
            emit_complex(stellar_subdivision(K, s), output, out);
            return 0;
        }
        if (compare->parsed()) {
            Complex A = load_complex(file);
            Complex B = load_complex(file_b);
            Coefficients coeff = parse_coeff(coeff_s);
            BigradedGroups ga = l_homology(A, coeff, reduced);
            BigradedGroups gb = l_homology(B, coeff, reduced);
            bool equal = ga.same_groups(gb);
            if (out_fmt == "json") {
                json doc;
                doc["equal"] = equal;
                doc["a"] = invariants_document("compare", A, ga);
                doc["b"] = invariants_document("compare", B, gb);
                out << doc.dump(2) << "\n";
            } else {
                out << (equal ? "equal" : "different") << "\n";
                print_groups_table(out, ga);
                print_groups_table(out, gb);
                if (!equal) out << ga.diff(gb);
            }
            return equal ? 0 : 2;
        }
        if (check->parsed()) {
            Coefficients coeff = parse_coeff(coeff_s);
            if (what == "ex7") return check_ex7(out, n, coeff);
            if (what == "thm11") return check_thm11(out, coeff);
            if (what == "thm12")
                return check_thm12(out, coeff.is_field() ? coeff : Coefficients::Q());
            Complex K = file.empty() ? standard_complex(StandardKind::Boundary, 3)
                                     : load_complex(file);
            if (what == "thm4") return check_thm4(out, K, coeff);
            if (what == "thm6") return check_thm6(out, K, coeff);
            throw std::runtime_error("unknown check '" + what + "'");
        }
        if (fuzz->parsed()) {
            oracle::FuzzReport rep =
                oracle::fuzz_invariance(seed, trials, max_vertices, max_dim);
            if (out_fmt == "json") {
                json doc;
                doc["seed"] = rep.seed;
                doc["trials"] = rep.trials;
                doc["max_vertices"] = rep.max_vertices;
                doc["max_dim"] = rep.max_dim;
                doc["failures"] = rep.failures;
                doc["r_witness_found"] = rep.r_witness_found;
                doc["r_witness"] = rep.r_witness;
                json arr = json::array();
                for (const auto& t : rep.trial_results) {
                    json e;
                    e["index"] = t.index;
                    e["complex"] = t.complex_desc;
                    e["sigma"] = t.sigma;
                    e["lh_ok"] = t.lh_ok;
                    e["r_differs"] = t.r_differs;
                    if (!t.lh_ok) e["failure"] = t.failure;
                    arr.push_back(e);
                }
                doc["trials_detail"] = arr;
                out << doc.dump(2) << "\n";
            } else {
                out << "seed " << rep.seed << ", " << rep.trials << " trials, "
                    << rep.failures << " failures, R-witness "
                    << (rep.r_witness_found ? "found" : "not found") << "\n";
                if (rep.r_witness_found) out << "witness: " << rep.r_witness << "\n";
                for (const auto& t : rep.trial_results)
                    if (!t.lh_ok)
                        out << "trial " << t.index << " FAILED:\n" << t.failure;
            }
            return rep.failures == 0 ? 0 : 2;
        }
        if (ocheck->parsed()) {
            Complex K = load_complex(file);
            Coefficients coeff = parse_coeff(coeff_s);
            CheckResult r;
            for (bool red : {true, false}) {
                r.report(out, std::string("e1_page vs e1_direct ") +
                                  (red ? "reduced" : "unreduced"),
                         e1_page(K, coeff, red).groups().same_groups(
                             oracle::e1_direct(K, coeff, red)));
                r.report(out, std::string("l_homology vs e2_direct ") +
                                  (red ? "reduced" : "unreduced"),
                         l_homology(K, coeff, red)
                             .same_groups(oracle::e2_direct(K, coeff, red)));
            }
            return r.pass ? 0 : 2;
        }
        err << "no command given\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace lhom
