// sympleib: command-line front end.
// Exit codes: 0 all requested checks hold, 1 a mathematical check fails, 2 bad input or usage.

#include "sympleib/catalog.hpp"
#include "sympleib/core.hpp"
#include "sympleib/io.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace sympleib;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::string json_out;
};

struct Outcome {
    int code = 0;
    json report = json::object();
};

std::string term_text(const Rational& c, const std::string& label, bool first)
{
    std::string s;
    Rational a = abs(c);
    if (c < 0)
        s = first ? "-" : " - ";
    else if (!first)
        s = " + ";
    if (a != 1)
        s += to_string(a) + " ";
    return s + label;
}

std::string vector_text(const Vector& v, const std::vector<std::string>& labels)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0)
            s += term_text(v[k], labels[k], s.empty());
    return s.empty() ? "0" : s;
}

std::string form_text(const SkewForm& w, const std::vector<std::string>& labels)
{
    std::string s;
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = i + 1; j < w.dim(); ++j)
            if (w.at(i, j) != 0)
                s += term_text(w.at(i, j), labels[i] + "^" + labels[j], s.empty());
    return s.empty() ? "0" : s;
}

void print_table(std::ostream& out, const Algebra& A, const std::string& op)
{
    const auto& l = A.labels();
    bool any = false;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            Vector v = A.product(i, j);
            if (is_zero(v))
                continue;
            out << "  " << l[i] << op << l[j] << " = " << vector_text(v, l) << "\n";
            any = true;
        }
    if (!any)
        out << "  (all products zero)\n";
}

json checks_json(const Report& r)
{
    json a = json::array();
    for (const auto& c : r.checks)
        a.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    return a;
}

void print_checks(std::ostream& out, const Report& r)
{
    for (const auto& c : r.checks) {
        out << (c.holds ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty())
            out << ": " << c.detail;
        out << "\n";
    }
}

json subspace_json(const Subspace& s)
{
    json a = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r)
        a.push_back(io_detail::vector_json(s.basis_vector(r)));
    return a;
}

const SkewForm& need_form(const AlgebraFile& f, const std::string& path)
{
    if (!f.form)
        throw InputError(path + ": this command needs a \"form\" in the algebra file");
    return *f.form;
}

Side parse_side(const std::string& s)
{
    if (s == "left")
        return Side::left;
    if (s == "right")
        return Side::right;
    return Side::bi;
}

Outcome cmd_check(const std::string& path, bool left, bool right, bool symmetric, bool lsym, bool lie)
{
    if (!(left || right || symmetric || lsym || lie))
        throw CLI::ValidationError("check", "request at least one of --left --right --symmetric --lsym --lie");
    AlgebraFile f = load_algebra(path);
    Report r;
    if (left)
        r.add("left-leibniz", is_left_leibniz(f.algebra));
    if (right)
        r.add("right-leibniz", is_right_leibniz(f.algebra));
    if (symmetric)
        r.add("symmetric-leibniz", is_symmetric_leibniz(f.algebra));
    if (lsym)
        r.add("left-symmetric", is_left_symmetric(f.algebra));
    if (lie)
        r.add("lie", is_lie(f.algebra));
    print_checks(std::cout, r);
    return {r.all_pass() ? 0 : 1, {{"command", "check"}, {"pass", r.all_pass()}, {"checks", checks_json(r)}}};
}

Outcome cmd_omega(const std::string& mode, const std::string& path, Side side, std::uint64_t seed)
{
    AlgebraFile f = load_algebra(path);
    const Algebra& A = f.algebra;
    const auto& labels = A.labels();
    if (mode == "verify") {
        const SkewForm& w = need_form(f, path);
        Report r;
        r.add("symplectic-" + to_string(side), is_symplectic(A, w, side));
        if (side == Side::bi)
            r.add("bi-symplectic", is_bi_symplectic(A, w));
        std::cout << "form: " << form_text(w, labels) << "\n";
        print_checks(std::cout, r);
        return {r.all_pass() ? 0 : 1,
                {{"command", "omega verify"}, {"side", to_string(side)}, {"pass", r.all_pass()},
                 {"checks", checks_json(r)}}};
    }
    Subspace space = solve_symplectic_forms(A, side);
    std::cout << "side: " << to_string(side) << "\n";
    std::cout << "solution space dimension: " << space.dim() << "\n";
    json basis = json::array();
    for (std::size_t r = 0; r < space.dim(); ++r) {
        SkewForm b = skew_from_coordinates(A.dim(), space.basis_vector(r));
        std::cout << "  basis " << r + 1 << ": " << form_text(b, labels) << "\n";
        basis.push_back(algebra_to_json(Algebra(A.dim()), &b)["form"]);
    }
    auto rep = find_nondegenerate(A.dim(), space, seed);
    json out = {{"command", "omega solve"}, {"side", to_string(side)}, {"seed", seed},
                {"dimension", space.dim()}, {"basis", basis}};
    if (rep) {
        std::cout << "nondegenerate representative: " << form_text(*rep, labels) << "\n";
        out["representative"] = algebra_to_json(Algebra(A.dim()), &*rep)["form"];
    } else {
        std::cout << "no nondegenerate representative found\n";
        out["representative"] = nullptr;
    }
    out["pass"] = rep.has_value();
    return {rep ? 0 : 1, out};
}

Outcome cmd_star(const std::string& path, Side side)
{
    AlgebraFile f = load_algebra(path);
    const SkewForm& w = need_form(f, path);
    auto r = is_symplectic(f.algebra, w, side);
    if (!r.holds) {
        std::cerr << "not symplectic on the " << to_string(side) << " side: " << describe(r) << "\n";
        return {1, {{"command", "star"}, {"pass", false}, {"detail", describe(r)}}};
    }
    Algebra s = side == Side::right ? star_right(f.algebra, w) : star_left(f.algebra, w);
    s.set_labels(f.algebra.labels());
    std::cout << print_algebra(s);
    return {0, {{"command", "star"}, {"pass", true}, {"star", algebra_to_json(s)}}};
}

Outcome cmd_core(const std::string& path)
{
    AlgebraFile f = load_algebra(path);
    const SkewForm& w = need_form(f, path);
    auto s = is_symplectic_left(f.algebra, w);
    if (!s.holds) {
        std::cout << "FAIL " << describe(s) << "\n";
        return {1, {{"command", "core"}, {"pass", false}, {"detail", describe(s)}}};
    }
    CoreDecomposition dec = core(f.algebra, w);
    Report props = verify_core_properties(f.algebra, w, dec);
    const Algebra& g = dec.g.algebra;
    std::cout << "dim I = " << dec.I.dim() << "\n";
    for (std::size_t r = 0; r < dec.I.dim(); ++r)
        std::cout << "  I: " << vector_text(dec.I.basis_vector(r), f.algebra.labels()) << "\n";
    std::cout << "dim I-perp = " << dec.Iperp.dim() << "\n";
    for (std::size_t r = 0; r < dec.Iperp.dim(); ++r)
        std::cout << "  I-perp: " << vector_text(dec.Iperp.basis_vector(r), f.algebra.labels()) << "\n";
    std::cout << "g: dim " << g.dim() << (g.is_zero() ? ", abelian" : "") << "\n";
    print_table(std::cout, g, ".");
    std::cout << "  omega_g = " << form_text(dec.g.form, g.labels()) << "\n";
    std::cout << "h_dim = " << dec.h_dim << "\n";
    print_checks(std::cout, props);
    json out = {{"command", "core"},
                {"pass", props.all_pass()},
                {"dim_I", dec.I.dim()},
                {"I", subspace_json(dec.I)},
                {"Iperp", subspace_json(dec.Iperp)},
                {"g", algebra_to_json(g, &dec.g.form)},
                {"g_lift", json::array()},
                {"h_dim", dec.h_dim},
                {"checks", checks_json(props)}};
    for (std::size_t r = 0; r < dec.g_lift.rows(); ++r)
        out["g_lift"].push_back(io_detail::vector_json(dec.g_lift.row(r)));
    return {props.all_pass() ? 0 : 1, out};
}

/// (h, g, h*) -> (g, h, h*)
Algebra g_first(const Algebra& A, std::size_t p, std::size_t m)
{
    std::vector<std::size_t> perm;
    for (std::size_t a = 0; a < m; ++a)
        perm.push_back(p + a);
    for (std::size_t X = 0; X < p; ++X)
        perm.push_back(X);
    for (std::size_t X = 0; X < p; ++X)
        perm.push_back(p + m + X);
    Algebra B = permute(A, perm);
    std::vector<std::string> labels;
    for (auto i : perm)
        labels.push_back(A.labels()[i]);
    B.set_labels(labels);
    return B;
}

SkewForm g_first(const SkewForm& w, std::size_t p, std::size_t m)
{
    const std::size_t n = w.dim();
    std::vector<std::size_t> perm;
    for (std::size_t a = 0; a < m; ++a)
        perm.push_back(p + a);
    for (std::size_t X = 0; X < p; ++X)
        perm.push_back(X);
    for (std::size_t X = 0; X < p; ++X)
        perm.push_back(p + m + X);
    Matrix W(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            W(i, j) = w.at(perm[i], perm[j]);
    return SkewForm(W);
}

Outcome cmd_extend(const std::string& path, const std::string& system, bool build, bool star, bool gfirst)
{
    ExtensionFile e = load_extension(path);
    Report r = system == "full" ? check_full_system(e.g, e.data) : check_reduced_system(e.g, e.data);
    // emitted files own stdout; the report then goes to stderr
    std::ostream& log = (build || star) ? std::cerr : std::cout;
    log << "system: " << system << " (p = " << e.data.p << ", dim g = " << e.data.m << ")\n";
    print_checks(log, r);
    json out = {{"command", "extend"}, {"system", system}, {"pass", r.all_pass()}, {"checks", checks_json(r)}};
    if (!r.all_pass())
        return {1, out};
    if (build || star) {
        // one document on stdout: the star product when asked for, else the product
        BuiltSymplectic b = build_double_extension(e.g, e.data);
        const std::size_t p = e.data.p, m = e.data.m;
        SkewForm w = gfirst ? g_first(b.form, p, m) : b.form;
        Algebra A = gfirst ? g_first(b.algebra, p, m) : b.algebra;
        out["built"] = algebra_to_json(A, &w);
        if (star) {
            Algebra lf = build_left_symmetric(e.g, e.data);
            lf.set_labels(b.algebra.labels());
            if (gfirst)
                lf = g_first(lf, p, m);
            out["star"] = algebra_to_json(lf, &w);
            A = lf;
        }
        std::cout << print_algebra(A, &w);
    }
    return {0, out};
}

Params parse_params(const std::vector<std::string>& kvs)
{
    Params p;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("parameter \"" + kv + "\" is not of the form name=value");
        try {
            p[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw InputError("parameter " + kv.substr(0, eq) + ": " + e.what());
        }
    }
    return p;
}

json params_json(const Params& p)
{
    json j = json::object();
    for (const auto& [k, v] : p)
        j[k] = to_string(v);
    return j;
}

std::string params_text(const Params& p)
{
    std::string s;
    for (const auto& [k, v] : p)
        s += (s.empty() ? "" : " ") + k + "=" + to_string(v);
    return s;
}

Outcome cmd_catalog_list()
{
    json a = json::array();
    for (const auto& f : families()) {
        std::cout << f.id;
        if (!f.params.empty()) {
            std::cout << "  params:";
            for (const auto& n : f.params)
                std::cout << " " << n;
        }
        std::cout << "  claims:";
        json claims = json::array();
        for (Claim c : f.claims) {
            std::cout << " " << to_string(c);
            claims.push_back(to_string(c));
        }
        std::cout << "\n";
        json cons = json::array();
        for (const auto& c : f.constraints)
            cons.push_back(c.text);
        json branches = json::array();
        for (const auto& b : f.branches)
            branches.push_back(b.name);
        a.push_back({{"id", f.id},
                     {"summary", f.summary},
                     {"params", f.params},
                     {"defaults", params_json(f.defaults)},
                     {"constraints", cons},
                     {"branches", branches},
                     {"claims", claims},
                     {"notes", f.notes}});
    }
    return {0, {{"command", "catalog list"}, {"families", a}}};
}

Outcome cmd_catalog_build(const std::string& id, const std::vector<std::string>& kvs, bool extension)
{
    const FamilySpec& f = family(id);
    Params p = complete_params(f, parse_params(kvs));
    Instance inst = instantiate(id, p);
    if (extension) {
        if (!inst.extension)
            throw InputError(id + " is not generated from extension data");
        ExtensionFile ef{inst.extension->g, inst.extension->data};
        std::cout << print_extension(ef);
        return {0, {{"command", "catalog build"}, {"id", id}, {"params", params_json(p)},
                    {"extension", extension_to_json(ef)}}};
    }
    std::cout << print_algebra(inst.algebra, &inst.form);
    return {0, {{"command", "catalog build"}, {"id", id}, {"params", params_json(p)},
                {"algebra", algebra_to_json(inst.algebra, &inst.form)}}};
}

Outcome cmd_catalog_verify(const std::string& id, const std::vector<std::string>& kvs, std::size_t samples,
                           bool sampled, std::uint64_t seed)
{
    const FamilySpec& f = family(id);
    if (!sampled) {
        Params p = complete_params(f, parse_params(kvs));
        Report r = verify(id, p);
        std::cout << id << " " << params_text(p) << "\n";
        print_checks(std::cout, r);
        return {r.all_pass() ? 0 : 1, {{"command", "catalog verify"}, {"id", id}, {"params", params_json(p)},
                                       {"pass", r.all_pass()}, {"checks", checks_json(r)}}};
    }
    if (!kvs.empty())
        throw CLI::ValidationError("--params", "cannot be combined with --samples");
    VerificationRun run = sample_verify(id, seed, samples);
    json rs = json::array();
    for (const auto& s : run.results) {
        std::cout << "sample " << s.index << (s.branch.empty() ? "" : " [" + s.branch + "]") << " "
                  << params_text(s.params) << ": " << (s.report.all_pass() ? "PASS" : "FAIL");
        if (const Check* bad = s.report.first_failure())
            std::cout << " (" << bad->name << ": " << bad->detail << ")";
        std::cout << "\n";
        rs.push_back({{"index", s.index},
                      {"branch", s.branch},
                      {"params", params_json(s.params)},
                      {"pass", s.report.all_pass()},
                      {"checks", checks_json(s.report)}});
    }
    std::cout << id << ": " << run.passed() << "/" << run.results.size() << " samples pass (seed " << seed
              << ")\n";
    return {run.all_pass() ? 0 : 1, {{"command", "catalog verify"},
                                     {"id", id},
                                     {"seed", seed},
                                     {"samples", samples},
                                     {"passed", run.passed()},
                                     {"pass", run.all_pass()},
                                     {"results", rs}}};
}

struct CoutRedirect {
    std::streambuf* saved = nullptr;
    explicit CoutRedirect(std::streambuf* to)
    {
        if (to)
            saved = std::cout.rdbuf(to);
    }
    ~CoutRedirect()
    {
        if (saved)
            std::cout.rdbuf(saved);
    }
};

void write_json(const std::string& path, const json& j)
{
    if (path.empty())
        return;
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks and constructions for symplectic Leibniz algebras"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "seed for randomized commands")->capture_default_str();
    app.add_option("--json-out", g.json_out, "write a structured report to this path (- for stdout)");

    std::string file, mode, side = "left", system = "reduced", id;
    bool left = false, right = false, symmetric = false, lsym = false, lie = false;
    bool build = false, star = false, gfirst = false, as_extension = false;
    std::optional<std::uint64_t> local_seed;
    std::optional<std::size_t> samples;
    std::vector<std::string> kvs;

    auto* check = app.add_subcommand("check", "evaluate algebra identities");
    check->add_option("file", file, "AlgebraFile")->required();
    check->add_flag("--left", left, "left Leibniz");
    check->add_flag("--right", right, "right Leibniz");
    check->add_flag("--symmetric", symmetric, "symmetric Leibniz");
    check->add_flag("--lsym", lsym, "left-symmetric");
    check->add_flag("--lie", lie, "Lie");

    auto* omega = app.add_subcommand("omega", "solve for or verify symplectic forms");
    omega->add_option("mode", mode, "solve | verify")->required()->check(CLI::IsMember({"solve", "verify"}));
    omega->add_option("file", file, "AlgebraFile")->required();
    omega->add_option("--side", side)->check(CLI::IsMember({"left", "right", "bi"}))->capture_default_str();
    omega->add_option("--seed", local_seed, "seed for the representative search");

    auto* starc = app.add_subcommand("star", "print the star product as an AlgebraFile");
    starc->add_option("file", file, "AlgebraFile with form")->required();
    starc->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();

    auto* corec = app.add_subcommand("core", "core decomposition of a symplectic left Leibniz algebra");
    corec->add_option("file", file, "AlgebraFile with form")->required();

    auto* extend = app.add_subcommand("extend", "check and build double extensions");
    extend->add_option("file", file, "ExtensionFile")->required();
    extend->add_option("--system", system)->check(CLI::IsMember({"full", "reduced"}))->capture_default_str();
    extend->add_flag("--build", build, "print the built algebra with its form");
    extend->add_flag("--star", star, "print the left-symmetric product (with the form) instead of the product");
    extend->add_flag("--g-first", gfirst, "emit in basis order (g, h, h*)");

    auto* cat = app.add_subcommand("catalog", "catalog of families");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list family ids");
    auto* cat_build = cat->add_subcommand("build", "print an instance");
    cat_build->add_option("id", id)->required();
    cat_build->add_option("--params", kvs, "name=value ...");
    cat_build->add_flag("--extension", as_extension, "print the ExtensionFile the instance is built from");
    auto* cat_verify = cat->add_subcommand("verify", "check a family's claims");
    cat_verify->add_option("id", id)->required();
    cat_verify->add_option("--params", kvs, "name=value ... (single instance)");
    cat_verify->add_option("--samples", samples, "number of random samples");
    cat_verify->add_option("--seed", local_seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::uint64_t seed = local_seed.value_or(g.seed);
    Outcome out;
    try {
        {
            // with --json-out - the report replaces the text output
            std::ostringstream discard;
            CoutRedirect quiet(g.json_out == "-" ? discard.rdbuf() : nullptr);
            if (*check)
                out = cmd_check(file, left, right, symmetric, lsym, lie);
            else if (*omega)
                out = cmd_omega(mode, file, parse_side(side), seed);
            else if (*starc)
                out = cmd_star(file, parse_side(side));
            else if (*corec)
                out = cmd_core(file);
            else if (*extend)
                out = cmd_extend(file, system, build, star, gfirst);
            else if (*cat_list)
                out = cmd_catalog_list();
            else if (*cat_build)
                out = cmd_catalog_build(id, kvs, as_extension);
            else if (*cat_verify)
                out = cmd_catalog_verify(id, kvs, samples.value_or(0), samples.has_value(), seed);
        }
        write_json(g.json_out, out.report);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return out.code;
}
