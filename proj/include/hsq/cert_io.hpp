#pragma once

// JSON serialization for root certificates and the edge-clique-cover
// artifacts.  The certificate schema is stable and fully keyed:
//
//   {
//     "class":        one of the class tags,
//     "witness_kind": fixed string derived from class (and forest flag),
//     "root":         {"nx": .., "ny": .., "edges": [[x,y], ..]},
//     "center":       [{"side": "x"|"y", "vertex": int}, ..],
//     "orderings":    [{"side": "x"|"y", "perm": [..]}, ..],
//     "chain":        {"cliques": [[..], ..], "left": [..], "right": [..]},
//     "dl":           {"row_perm": [..], "col_perm": [..]} or null,
//     "forest":       bool,
//     "partition":    {"x1": [..], "x2": [..], "y1": [..], "y2": [..],
//                      "matching": [[x,y], ..]} or null
//   }
//
// Clique covers are bare JSON lists of vertex lists.  Bisplit roots carry
// the bigraph plus their defining partition.  All emitters are
// byte-for-byte deterministic; malformed certificate input raises E_CERT.

#include <array>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hsq/classes.hpp"
#include "hsq/error.hpp"
#include "hsq/halfsquare.hpp"
#include "hsq/hardness.hpp"
#include "hsq/io.hpp"

namespace hsq {

inline const char* witness_kind_name(RootClass c, bool forest) {
    switch (c) {
        case RootClass::star_convex: return "star_center";
        case RootClass::star_biconvex: return "star_center_pair";
        case RootClass::convex: return "clique_chain";
        case RootClass::biconvex: return "clique_chain_with_vertex_order";
        case RootClass::chordal_bipartite: return "gamma_free_doubly_lexical";
        case RootClass::tree: return forest ? "incidence_forest" : "incidence_tree";
        case RootClass::balanced_bisplit: return "bisplit_partition";
    }
    return "?";
}

namespace detail {

// Message without the leading "TOKEN: " prefix, for re-tokenized rethrows.
inline std::string bare_message(const error& e) {
    std::string msg = e.what();
    const std::string prefix = e.token() + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    return msg;
}

inline json side_json(Side s) { return json(side_name(s)); }

inline Side side_from_json(const json& j) {
    require(j.is_string(), E_CERT, "side must be a string");
    const std::string s = j.get<std::string>();
    if (s == "x") return Side::X;
    if (s == "y") return Side::Y;
    throw error(E_CERT, "side must be \"x\" or \"y\", got \"" + s + "\"");
}

inline json int_list_json(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x);
    return a;
}

inline std::vector<int> int_list_from_json(const json& j, const char* what,
                                           const char* token = E_CERT) {
    require(j.is_array(), token, std::string(what) + " must be a list");
    std::vector<int> out;
    for (const auto& e : j) {
        require(e.is_number_integer(), token,
                std::string(what) + " must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

inline json pair_list_json(const std::vector<std::pair<int, int>>& v) {
    json a = json::array();
    for (auto [x, y] : v) a.push_back({x, y});
    return a;
}

inline std::vector<std::pair<int, int>> pair_list_from_json(
    const json& j, const char* what, const char* token = E_CERT) {
    require(j.is_array(), token, std::string(what) + " must be a list");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                    e[1].is_number_integer(),
                token, std::string(what) + " entries must be integer pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

inline json vertex_lists_json(const std::vector<std::vector<int>>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(int_list_json(v));
    return a;
}

inline std::vector<std::vector<int>> vertex_lists_from_json(
    const json& j, const char* what, const char* token = E_CERT) {
    require(j.is_array(), token, std::string(what) + " must be a list");
    std::vector<std::vector<int>> out;
    for (const auto& e : j) out.push_back(int_list_from_json(e, what, token));
    return out;
}

} // namespace detail

// ---- certificates ---------------------------------------------------------

inline json certificate_to_json(const RootCertificate& cert) {
    json j;
    j["class"] = to_string(cert.class_tag);
    j["witness_kind"] = witness_kind_name(cert.class_tag, cert.forest);
    j["root"] = bigraph_to_json(cert.root);
    j["center"] = json::array();
    for (const auto& w : cert.centers)
        j["center"].push_back(
            {{"side", detail::side_json(w.side)}, {"vertex", w.center}});
    j["orderings"] = json::array();
    for (const auto& so : cert.orderings)
        j["orderings"].push_back({{"side", detail::side_json(so.side)},
                                  {"perm", detail::int_list_json(so.perm)}});
    j["chain"] = {{"cliques", detail::vertex_lists_json(cert.chain.cliques)},
                  {"left", detail::int_list_json(cert.chain.left)},
                  {"right", detail::int_list_json(cert.chain.right)}};
    if (cert.dl)
        j["dl"] = {{"row_perm", detail::int_list_json(cert.dl->row_perm)},
                   {"col_perm", detail::int_list_json(cert.dl->col_perm)}};
    else
        j["dl"] = nullptr;
    j["forest"] = cert.forest;
    if (cert.partition)
        j["partition"] = {
            {"x1", detail::int_list_json(cert.partition->x1)},
            {"x2", detail::int_list_json(cert.partition->x2)},
            {"y1", detail::int_list_json(cert.partition->y1)},
            {"y2", detail::int_list_json(cert.partition->y2)},
            {"matching", detail::pair_list_json(cert.partition->matching)}};
    else
        j["partition"] = nullptr;
    return j;
}

inline RootCertificate certificate_from_json(const json& j) {
    require(j.is_object(), E_CERT, "certificate must be a json object");
    require(j.contains("class") && j.at("class").is_string(), E_CERT,
            "certificate needs a class tag");
    auto tag = parse_root_class(j.at("class").get<std::string>());
    require(tag.has_value(), E_CERT,
            "unknown class tag: " + j.at("class").get<std::string>());
    RootCertificate cert;
    cert.class_tag = *tag;
    require(j.contains("root"), E_CERT, "certificate needs a root");
    try {
        cert.root = bigraph_from_json(j.at("root"));
    } catch (const error& e) {
        throw error(E_CERT, detail::bare_message(e));
    }
    if (j.contains("forest")) {
        require(j.at("forest").is_boolean(), E_CERT, "forest must be a bool");
        cert.forest = j.at("forest").get<bool>();
    }
    if (j.contains("witness_kind")) {
        require(j.at("witness_kind").is_string(), E_CERT,
                "witness_kind must be a string");
        require(j.at("witness_kind").get<std::string>() ==
                    witness_kind_name(cert.class_tag, cert.forest),
                E_CERT, "witness_kind does not match the class tag");
    }
    if (j.contains("center"))
        for (const auto& e : j.at("center")) {
            require(e.is_object() && e.contains("side") && e.contains("vertex") &&
                        e.at("vertex").is_number_integer(),
                    E_CERT, "center entries need side and vertex");
            cert.centers.push_back({detail::side_from_json(e.at("side")),
                                    e.at("vertex").get<int>()});
        }
    if (j.contains("orderings"))
        for (const auto& e : j.at("orderings")) {
            require(e.is_object() && e.contains("side") && e.contains("perm"),
                    E_CERT, "ordering entries need side and perm");
            cert.orderings.push_back(
                {detail::side_from_json(e.at("side")),
                 detail::int_list_from_json(e.at("perm"), "perm")});
        }
    if (j.contains("chain") && !j.at("chain").is_null()) {
        const auto& c = j.at("chain");
        require(c.is_object() && c.contains("cliques") && c.contains("left") &&
                    c.contains("right"),
                E_CERT, "chain needs cliques, left, right");
        cert.chain.cliques =
            detail::vertex_lists_from_json(c.at("cliques"), "chain cliques");
        cert.chain.left = detail::int_list_from_json(c.at("left"), "chain left");
        cert.chain.right =
            detail::int_list_from_json(c.at("right"), "chain right");
    }
    if (j.contains("dl") && !j.at("dl").is_null()) {
        const auto& d = j.at("dl");
        require(d.is_object() && d.contains("row_perm") && d.contains("col_perm"),
                E_CERT, "dl needs row_perm and col_perm");
        DoublyLexOrdering dl;
        dl.row_perm = detail::int_list_from_json(d.at("row_perm"), "row_perm");
        dl.col_perm = detail::int_list_from_json(d.at("col_perm"), "col_perm");
        dl.gamma_free = true;
        cert.dl = std::move(dl);
    }
    if (j.contains("partition") && !j.at("partition").is_null()) {
        const auto& p = j.at("partition");
        require(p.is_object() && p.contains("x1") && p.contains("x2") &&
                    p.contains("y1") && p.contains("y2") && p.contains("matching"),
                E_CERT, "partition needs x1, x2, y1, y2, matching");
        BisplitPartition bp;
        bp.x1 = detail::int_list_from_json(p.at("x1"), "x1");
        bp.x2 = detail::int_list_from_json(p.at("x2"), "x2");
        bp.y1 = detail::int_list_from_json(p.at("y1"), "y1");
        bp.y2 = detail::int_list_from_json(p.at("y2"), "y2");
        bp.matching = detail::pair_list_from_json(p.at("matching"), "matching");
        cert.partition = std::move(bp);
    }
    return cert;
}

inline void write_certificate(std::ostream& out, const RootCertificate& cert) {
    out << certificate_to_json(cert).dump(2) << "\n";
}

inline RootCertificate read_certificate(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw error(E_CERT, e.what());
    }
    return certificate_from_json(j);
}

// ---- clique covers --------------------------------------------------------

inline json cover_to_json(const CliqueCover& cover) {
    return detail::vertex_lists_json(cover.cliques);
}

inline CliqueCover cover_from_json(const json& j) {
    return CliqueCover{detail::vertex_lists_from_json(j, "cover", E_PARSE)};
}

inline void write_cover(std::ostream& out, const CliqueCover& cover) {
    out << cover_to_json(cover).dump(2) << "\n";
}

inline CliqueCover read_cover(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw error(E_PARSE, e.what());
    }
    return cover_from_json(j);
}

// ---- balanced bisplit roots -----------------------------------------------

inline json bisplit_root_to_json(const BalancedBisplitRoot& root) {
    json j;
    j["bigraph"] = bigraph_to_json(root.b);
    j["x1"] = detail::int_list_json(root.x1);
    j["x2"] = detail::int_list_json(root.x2);
    j["y1"] = detail::int_list_json(root.y1);
    j["y2"] = detail::int_list_json(root.y2);
    j["matching"] = detail::pair_list_json(root.matching);
    return j;
}

inline BalancedBisplitRoot bisplit_root_from_json(const json& j) {
    require(j.is_object() && j.contains("bigraph") && j.contains("x1") &&
                j.contains("x2") && j.contains("y1") && j.contains("y2") &&
                j.contains("matching"),
            E_PARSE, "bisplit root needs bigraph, x1, x2, y1, y2, matching");
    BalancedBisplitRoot root;
    root.b = bigraph_from_json(j.at("bigraph"));
    root.x1 = detail::int_list_from_json(j.at("x1"), "x1", E_PARSE);
    root.x2 = detail::int_list_from_json(j.at("x2"), "x2", E_PARSE);
    root.y1 = detail::int_list_from_json(j.at("y1"), "y1", E_PARSE);
    root.y2 = detail::int_list_from_json(j.at("y2"), "y2", E_PARSE);
    root.matching =
        detail::pair_list_from_json(j.at("matching"), "matching", E_PARSE);
    return root;
}

inline void write_bisplit_root(std::ostream& out, const BalancedBisplitRoot& r) {
    out << bisplit_root_to_json(r).dump(2) << "\n";
}

inline BalancedBisplitRoot read_bisplit_root(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw error(E_PARSE, e.what());
    }
    return bisplit_root_from_json(j);
}

} // namespace hsq
