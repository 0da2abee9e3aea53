#pragma once

// JSON file formats: AlgebraFile (structure constants + optional form) and
// ExtensionFile (g plus the data F, G, theta, psi, xi, Omega). Indices are
// 1-based, rationals are strings "p/q" or integers.

#include "sympleib/extension.hpp"

#include "json.hpp"

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympleib {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent input (exit code 2 in the CLI).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AlgebraFile {
    Algebra algebra;
    std::optional<SkewForm> form;
};

struct ExtensionFile {
    SymplecticLie g;
    ExtensionData data;
};

namespace io_detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& msg)
{
    throw InputError("schema error at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

inline std::string child(const std::string& path, const std::string& key)
{
    return path + "/" + key;
}

inline std::string child(const std::string& path, std::size_t i)
{
    return path + "/" + std::to_string(i);
}

inline json parse_text(const std::string& text, const std::string& source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        auto pos = what.find("syntax error");
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         (pos == std::string::npos ? what : what.substr(pos)));
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Rational rational(const json& j, const std::string& path)
{
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            schema_error(path, e.what());
        }
    }
    if (j.is_number_integer())
        return Rational(mpz_class(j.dump()));
    if (j.is_number_float())
        schema_error(path, "floating point numbers are not allowed; write \"p/q\"");
    schema_error(path, "expected a rational (string \"p/q\" or integer)");
}

inline std::size_t count(const json& j, const std::string& path, std::size_t min = 0)
{
    if (!j.is_number_integer() || j.get<long long>() < static_cast<long long>(min))
        schema_error(path, "expected an integer >= " + std::to_string(min));
    return j.get<std::size_t>();
}

/// 1-based index in [1, n], returned 0-based.
inline std::size_t index(const json& j, const std::string& path, std::size_t n)
{
    if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > static_cast<long long>(n))
        schema_error(path, "expected an index in 1.." + std::to_string(n));
    return j.get<std::size_t>() - 1;
}

inline const json& field(const json& obj, const char* key, const std::string& path)
{
    if (!obj.contains(key))
        schema_error(path, std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

inline void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : keys)
            known = known || it.key() == k;
        if (!known)
            schema_error(child(path, it.key()), "unknown field");
    }
}

inline const json& array(const json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt)
{
    if (!j.is_array())
        schema_error(path, "expected an array");
    if (size && j.size() != *size)
        schema_error(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
    return j;
}

inline Vector vector(const json& j, const std::string& path, std::size_t n)
{
    array(j, path, n);
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = rational(j[i], child(path, i));
    return v;
}

/// Rows of rationals.
inline Matrix matrix(const json& j, const std::string& path, std::size_t n)
{
    array(j, path, n);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        Vector row = vector(j[r], child(path, r), n);
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = row[c];
    }
    return m;
}

inline json rational_json(const Rational& r)
{
    return to_string(r);
}

inline json vector_json(const Vector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(rational_json(x));
    return a;
}

inline json matrix_json(const Matrix& m)
{
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        a.push_back(vector_json(m.row(r)));
    return a;
}

} // namespace io_detail

inline AlgebraFile algebra_from_json(const json& j, const std::string& path = "")
{
    using namespace io_detail;
    if (!j.is_object())
        schema_error(path, "expected an object");
    only_keys(j, {"dim", "labels", "products", "form"}, path);
    const std::size_t n = count(field(j, "dim", path), child(path, "dim"));
    AlgebraFile out{Algebra(n), std::nullopt};
    if (j.contains("labels")) {
        const auto& lab = array(j["labels"], child(path, "labels"), n);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
            if (!lab[i].is_string())
                schema_error(child(child(path, "labels"), i), "expected a string");
            labels.push_back(lab[i].get<std::string>());
        }
        out.algebra.set_labels(std::move(labels));
    }
    if (j.contains("products")) {
        const std::string pp = child(path, "products");
        const auto& prods = array(j["products"], pp);
        std::vector<bool> seen(n * n, false);
        for (std::size_t t = 0; t < prods.size(); ++t) {
            const std::string ep = child(pp, t);
            const json& e = prods[t];
            if (!e.is_object())
                schema_error(ep, "expected an object");
            only_keys(e, {"left", "right", "value"}, ep);
            std::size_t i = index(field(e, "left", ep), child(ep, "left"), n);
            std::size_t k = index(field(e, "right", ep), child(ep, "right"), n);
            if (seen[i * n + k])
                schema_error(ep, "duplicate product entry");
            seen[i * n + k] = true;
            out.algebra.set_product(i, k, vector(field(e, "value", ep), child(ep, "value"), n));
        }
    }
    if (j.contains("form")) {
        const std::string fp = child(path, "form");
        const auto& entries = array(j["form"], fp);
        Matrix w(n, n);
        std::vector<bool> seen(n * n, false);
        for (std::size_t t = 0; t < entries.size(); ++t) {
            const std::string ep = child(fp, t);
            const json& e = entries[t];
            if (!e.is_object())
                schema_error(ep, "expected an object");
            only_keys(e, {"i", "j", "value"}, ep);
            std::size_t a = index(field(e, "i", ep), child(ep, "i"), n);
            std::size_t b = index(field(e, "j", ep), child(ep, "j"), n);
            if (a >= b)
                schema_error(ep, "form entries need i < j");
            if (seen[a * n + b])
                schema_error(ep, "duplicate form entry");
            seen[a * n + b] = true;
            Rational v = rational(field(e, "value", ep), child(ep, "value"));
            w(a, b) = v;
            w(b, a) = -v;
        }
        out.form = SkewForm(std::move(w));
    }
    return out;
}

/// Canonical form: nonzero products in (left, right) order, form entries i < j.
inline json algebra_to_json(const Algebra& A, const SkewForm* form = nullptr)
{
    using namespace io_detail;
    const std::size_t n = A.dim();
    json j;
    j["dim"] = n;
    if (A.labels() != default_labels(n))
        j["labels"] = A.labels();
    json prods = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Vector v = A.product(i, k);
            if (!is_zero(v))
                prods.push_back({{"left", i + 1}, {"right", k + 1}, {"value", vector_json(v)}});
        }
    j["products"] = prods;
    if (form) {
        check_same_size(form->dim(), n, "algebra/form");
        json f = json::array();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (form->at(a, b) != 0)
                    f.push_back({{"i", a + 1}, {"j", b + 1}, {"value", rational_json(form->at(a, b))}});
        j["form"] = f;
    }
    return j;
}

inline std::string print_algebra(const Algebra& A, const SkewForm* form = nullptr)
{
    return algebra_to_json(A, form).dump(2) + "\n";
}

inline AlgebraFile parse_algebra(const std::string& text, const std::string& source = "<input>")
{
    return algebra_from_json(io_detail::parse_text(text, source));
}

inline AlgebraFile load_algebra(const std::string& path)
{
    return parse_algebra(io_detail::read_file(path), path);
}

/// g_path is resolved relative to base_dir.
inline ExtensionFile extension_from_json(const json& j, const std::filesystem::path& base_dir = {})
{
    using namespace io_detail;
    if (!j.is_object())
        schema_error("", "expected an object");
    only_keys(j, {"g", "g_path", "p", "F", "G", "theta", "psi", "xi", "omega"}, "");
    if (j.contains("g") == j.contains("g_path"))
        schema_error("", "exactly one of \"g\" and \"g_path\" is required");
    AlgebraFile gf;
    if (j.contains("g")) {
        gf = algebra_from_json(j["g"], "/g");
    } else {
        if (!j["g_path"].is_string())
            schema_error("/g_path", "expected a string");
        std::filesystem::path gp = j["g_path"].get<std::string>();
        if (gp.is_relative())
            gp = base_dir / gp;
        gf = load_algebra(gp.string());
    }
    if (!gf.form)
        schema_error(j.contains("g") ? "/g" : "/g_path", "g needs a form");
    SymplecticLie gs;
    try {
        gs = SymplecticLie::make(gf.algebra, *gf.form);
    } catch (const std::invalid_argument& e) {
        schema_error(j.contains("g") ? "/g" : "/g_path", e.what());
    }
    const std::size_t m = gs.dim();
    const std::size_t p = count(field(j, "p", ""), "/p");
    ExtensionData d = ExtensionData::zero(p, m);
    for (const char* key : {"F", "G"}) {
        if (!j.contains(key))
            continue;
        const std::string kp = std::string("/") + key;
        array(j[key], kp, p);
        auto& target = std::string(key) == "F" ? d.F : d.G;
        for (std::size_t X = 0; X < p; ++X)
            target[X] = matrix(j[key][X], child(kp, X), m);
    }
    for (const char* key : {"theta", "psi", "xi"}) {
        if (!j.contains(key))
            continue;
        const std::string kp = std::string("/") + key;
        auto& target = std::string(key) == "theta" ? d.theta : std::string(key) == "psi" ? d.psi : d.xi;
        array(j[key], kp, p);
        for (std::size_t X = 0; X < p; ++X) {
            array(j[key][X], child(kp, X), p);
            for (std::size_t Y = 0; Y < p; ++Y)
                target[X][Y] = vector(j[key][X][Y], child(child(kp, X), Y), m);
        }
    }
    if (j.contains("omega")) {
        array(j["omega"], "/omega", p);
        for (std::size_t X = 0; X < p; ++X) {
            array(j["omega"][X], child("/omega", X), p);
            for (std::size_t Y = 0; Y < p; ++Y) {
                Vector v = vector(j["omega"][X][Y], child(child("/omega", X), Y), p);
                for (std::size_t Z = 0; Z < p; ++Z)
                    d.omega(X, Y, Z) = v[Z];
            }
        }
    }
    return {std::move(gs), std::move(d)};
}

inline json extension_to_json(const ExtensionFile& e)
{
    using namespace io_detail;
    const auto& d = e.data;
    json j;
    j["g"] = algebra_to_json(e.g.g, &e.g.form);
    j["p"] = d.p;
    json F = json::array(), G = json::array();
    for (std::size_t X = 0; X < d.p; ++X) {
        F.push_back(matrix_json(d.F[X]));
        G.push_back(matrix_json(d.G[X]));
    }
    j["F"] = F;
    j["G"] = G;
    auto table = [&](const std::vector<std::vector<Vector>>& t) {
        json a = json::array();
        for (const auto& row : t) {
            json r = json::array();
            for (const auto& v : row)
                r.push_back(vector_json(v));
            a.push_back(r);
        }
        return a;
    };
    j["theta"] = table(d.theta);
    j["psi"] = table(d.psi);
    j["xi"] = table(d.xi);
    json om = json::array();
    for (std::size_t X = 0; X < d.p; ++X) {
        json r = json::array();
        for (std::size_t Y = 0; Y < d.p; ++Y) {
            Vector v(d.p);
            for (std::size_t Z = 0; Z < d.p; ++Z)
                v[Z] = d.omega(X, Y, Z);
            r.push_back(vector_json(v));
        }
        om.push_back(r);
    }
    j["omega"] = om;
    return j;
}

inline std::string print_extension(const ExtensionFile& e)
{
    return extension_to_json(e).dump(2) + "\n";
}

inline ExtensionFile parse_extension(const std::string& text, const std::string& source = "<input>",
                                     const std::filesystem::path& base_dir = {})
{
    return extension_from_json(io_detail::parse_text(text, source), base_dir);
}

inline ExtensionFile load_extension(const std::string& path)
{
    return parse_extension(io_detail::read_file(path), path, std::filesystem::path(path).parent_path());
}

} // namespace sympleib
