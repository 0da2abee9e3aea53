#pragma once

#include "sympleib/exactlin.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sympleib {

struct Witness {
    std::vector<std::size_t> indices; // 0-based basis indices, in the order the identity names them
    Vector defect;
};

struct IdentityReport {
    std::string identity;
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }
};

inline IdentityReport pass(std::string identity)
{
    return {std::move(identity), true, std::nullopt};
}

inline IdentityReport fail(std::string identity, std::vector<std::size_t> idx, Vector defect)
{
    return {std::move(identity), false, Witness{std::move(idx), std::move(defect)}};
}

inline std::string format_vector(const Vector& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(v[i]);
    }
    return s + "]";
}

inline std::string format_indices(const std::vector<std::size_t>& idx)
{
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(idx[i] + 1);
    }
    return s + ")";
}

inline std::string describe(const IdentityReport& r)
{
    if (r.holds)
        return r.identity + ": holds";
    std::string s = r.identity + ": fails";
    if (r.witness)
        s += " at " + format_indices(r.witness->indices) + ", defect " + format_vector(r.witness->defect);
    return s;
}

/// One named check of a multi-part report.
struct Check {
    std::string name;
    bool holds = true;
    std::string detail; // witness text on failure
};

struct Report {
    std::vector<Check> checks;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.holds)
                return false;
        return true;
    }
    const Check* first_failure() const
    {
        for (const auto& c : checks)
            if (!c.holds)
                return &c;
        return nullptr;
    }
    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
    void add(std::string name, bool holds, std::string detail = {})
    {
        checks.push_back({std::move(name), holds, std::move(detail)});
    }
    void add(const std::string& name, const IdentityReport& r)
    {
        checks.push_back({name, r.holds, r.holds ? std::string() : describe(r)});
    }
};

} // namespace sympleib
