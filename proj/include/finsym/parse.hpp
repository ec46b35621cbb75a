#pragma once

// Mini-language for groups, manifolds and targets:
//   groups     Z1 | Z<n> | Z2xZ4 | S3 | D4 | Q8
//   manifolds  point | circle | interval | disk | klein | pants | cylinder
//              | sphere:n | torus:n | surface:g | rp:n
//              combined with '*' (product) and '+' (disjoint union, binds loosest)
//   targets    B<n>:<abelian group> | BG:<group>

#include <cstdint>
#include <string>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/chain_complex.hpp"
#include "finsym/error.hpp"
#include "finsym/finite_group.hpp"
#include "finsym/path_integral.hpp"

namespace finsym::parse {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::int64_t to_int(const std::string& s, const std::string& context) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) {
            throw InputError("");
        }
        return v;
    } catch (const std::exception&) {
        throw InputError("expected an integer in '" + context + "', got '" + s + "'");
    }
}

}  // namespace detail

inline FiniteAbelianGroup abelian_group(const std::string& text) {
    if (text == "1" || text == "0" || text == "trivial") {
        return FiniteAbelianGroup{};
    }
    std::vector<std::int64_t> orders;
    for (const auto& part : detail::split(text, 'x')) {
        if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z')) {
            throw InputError("unknown abelian group '" + text + "' (expected e.g. Z2 or Z2xZ4)");
        }
        const auto n = detail::to_int(part.substr(1), text);
        if (n < 1) {
            throw InputError("cyclic factor must have order >= 1 in '" + text + "'");
        }
        orders.push_back(n);
    }
    return FiniteAbelianGroup::from_cyclic_orders(orders);
}

inline FiniteGroup group(const std::string& text) {
    if (text == "S3") {
        return groups::symmetric3();
    }
    if (text == "D4") {
        return groups::dihedral4();
    }
    if (text == "Q8") {
        return groups::quaternion8();
    }
    const auto a = abelian_group(text);
    const auto g = groups::from_abelian(a);
    return FiniteGroup(g.cayley(), g.identity(), text);
}

inline ChainComplex manifold_atom(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const bool has_param = colon != std::string::npos;
    auto param = [&]() -> std::size_t {
        if (!has_param) {
            throw InputError("manifold '" + name + "' needs a parameter, e.g. " + name + ":2");
        }
        const auto v = detail::to_int(text.substr(colon + 1), text);
        if (v < 0) {
            throw InputError("negative manifold parameter in '" + text + "'");
        }
        return static_cast<std::size_t>(v);
    };
    auto no_param = [&](ChainComplex c) {
        if (has_param) {
            throw InputError("manifold '" + name + "' takes no parameter");
        }
        return c;
    };
    if (name == "point") return no_param(presets::point());
    if (name == "circle") return no_param(presets::circle());
    if (name == "interval") return no_param(presets::interval());
    if (name == "disk") return no_param(presets::disk());
    if (name == "klein") return no_param(presets::klein());
    if (name == "pants") return no_param(presets::pants());
    if (name == "cylinder") return no_param(product(presets::circle(), presets::interval()));
    if (name == "sphere") return presets::sphere(param());
    if (name == "torus") return presets::torus(param());
    if (name == "surface") return presets::surface(param());
    if (name == "rp") return presets::rp(param());
    throw InputError("unknown manifold '" + name + "'");
}

inline ChainComplex manifold(const std::string& text) {
    if (text.empty()) {
        throw InputError("empty manifold description");
    }
    ChainComplex total;
    bool first_summand = true;
    for (const auto& summand : detail::split(text, '+')) {
        ChainComplex piece;
        bool first_factor = true;
        for (const auto& factor : detail::split(summand, '*')) {
            const ChainComplex atom = manifold_atom(factor);
            piece = first_factor ? atom : product(piece, atom);
            first_factor = false;
        }
        total = first_summand ? piece : disjoint_union(total, piece);
        first_summand = false;
    }
    return total;
}

inline PiFiniteTarget target(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || text.size() < 3 || text[0] != 'B') {
        throw InputError("target must look like B2:Z2 or BG:S3, got '" + text + "'");
    }
    const std::string level = text.substr(1, colon - 1);
    const std::string grp = text.substr(colon + 1);
    if (level == "G") {
        return ClassifyingSpace{group(grp)};
    }
    const auto n = detail::to_int(level, text);
    if (n < 1) {
        throw InputError("target degree must be >= 1 in '" + text + "'");
    }
    if (n == 1 && (grp == "S3" || grp == "D4" || grp == "Q8")) {
        return ClassifyingSpace{group(grp)};
    }
    return EilenbergMacLane{abelian_group(grp), static_cast<std::size_t>(n)};
}

}  // namespace finsym::parse
