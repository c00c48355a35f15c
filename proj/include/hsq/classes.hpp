#pragma once

// The closed set of bipartite root classes the toolkit recognizes, shared by
// the recognizers, the brute-force oracles and the CLI.

#include <optional>
#include <string_view>

namespace hsq {

enum class RootClass {
    star_convex,
    star_biconvex,
    convex,
    biconvex,
    chordal_bipartite,
    tree,
    balanced_bisplit,
};

inline constexpr RootClass all_root_classes[] = {
    RootClass::star_convex,     RootClass::star_biconvex, RootClass::convex,
    RootClass::biconvex,        RootClass::chordal_bipartite,
    RootClass::tree,            RootClass::balanced_bisplit,
};

inline const char* to_string(RootClass c) {
    switch (c) {
        case RootClass::star_convex: return "star_convex";
        case RootClass::star_biconvex: return "star_biconvex";
        case RootClass::convex: return "convex";
        case RootClass::biconvex: return "biconvex";
        case RootClass::chordal_bipartite: return "chordal_bipartite";
        case RootClass::tree: return "tree";
        case RootClass::balanced_bisplit: return "balanced_bisplit";
    }
    return "?";
}

inline std::optional<RootClass> parse_root_class(std::string_view s) {
    for (RootClass c : all_root_classes)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

} // namespace hsq
