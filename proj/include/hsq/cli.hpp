#pragma once

// Command line front end.  Exit codes over all subcommands: 0 = yes/ok,
// 1 = no/fail, 2 = error; every error is one line "E_TOKEN: prose" on
// stderr.  All output is deterministic byte for byte for a given input.
//
//   recognize   --class <tag> -i g.txt [--cert c.json] [--forest]
//   build-root  --class <tag> -i g.txt [-o out] [--format f] [--cert c.json]
//   half-square -i b.txt --side x|y [-o out] [--format f]
//   verify-root -i g.txt --cert c.json
//   ecc solve|reduce|build-root|extract  -k <k> -i g.txt [...]
//   oracle check --class <tag> -i g.txt [--wmax w]
//   oracle sweep --n <n> --class <tag>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsq/cert_io.hpp"
#include "hsq/oracle.hpp"

namespace hsq::cli {

namespace cdetail {

inline std::string single_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

inline const char* obstruction_kind_name(Obstruction::Kind k) {
    switch (k) {
        case Obstruction::Kind::claw: return "claw";
        case Obstruction::Kind::hole: return "hole";
        case Obstruction::Kind::k_sun: return "k_sun";
        case Obstruction::Kind::diamond: return "diamond";
        case Obstruction::Kind::extra_big_component: return "extra_big_component";
        case Obstruction::Kind::no_universal_vertex: return "no_universal_vertex";
        case Obstruction::Kind::non_split_quotient: return "non_split_quotient";
        case Obstruction::Kind::not_interval: return "not_interval";
        case Obstruction::Kind::not_cop: return "not_cop";
    }
    return "?";
}

inline std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string edge_list_string(const Graph& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(g.edges()[i].first) + '-' +
             std::to_string(g.edges()[i].second);
    }
    return s + "]";
}

inline Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), E_IO, "cannot open " + path);
    return read_graph_any(f);
}

inline BipartiteGraph load_bigraph(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), E_IO, "cannot open " + path);
    return read_bigraph_any(f);
}

inline RootCertificate load_certificate(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), E_IO, "cannot open " + path);
    return read_certificate(f);
}

inline CliqueCover load_cover(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), E_IO, "cannot open " + path);
    return read_cover(f);
}

inline BalancedBisplitRoot load_bisplit_root(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), E_IO, "cannot open " + path);
    return read_bisplit_root(f);
}

// Runs `fn` against stdout or the -o file.
inline void emit(const std::string& opath, std::ostream& stdout_,
                 const std::function<void(std::ostream&)>& fn) {
    if (opath.empty()) {
        fn(stdout_);
        return;
    }
    std::ofstream f(opath);
    require(f.good(), E_IO, "cannot open " + opath + " for writing");
    fn(f);
}

inline void write_graph_as(std::ostream& out, const Graph& g,
                           const std::string& fmt) {
    if (fmt == "text") write_graph_text(out, g);
    else if (fmt == "json") out << graph_to_json(g).dump(2) << "\n";
    else if (fmt == "dot") write_graph_dot(out, g);
    else throw error(E_USAGE, "unknown format: " + fmt);
}

inline void write_bigraph_as(std::ostream& out, const BipartiteGraph& b,
                             const std::string& fmt) {
    if (fmt == "text") write_bigraph_text(out, b);
    else if (fmt == "json") out << bigraph_to_json(b).dump(2) << "\n";
    else if (fmt == "dot") write_bigraph_dot(out, b);
    else throw error(E_USAGE, "unknown format: " + fmt);
}

inline RootClass class_of(const std::string& s) {
    auto tag = parse_root_class(s);
    require(tag.has_value(), E_USAGE, "unknown class tag: " + s);
    return *tag;
}

inline Side side_of(const std::string& s) {
    if (s == "x") return Side::X;
    if (s == "y") return Side::Y;
    throw error(E_USAGE, "side must be x or y, got " + s);
}

// The one recognizer entry point per class.  Balanced bisplit recognition
// is NP-complete, so it runs the exact bounded search and refuses with
// E_BUDGET instead of guessing; the other six are polynomial constructions.
inline RecognitionOutcome recognize_class(const Graph& g, RootClass tag,
                                          bool forest) {
    switch (tag) {
        case RootClass::star_convex: return hs_star_convex(g);
        case RootClass::star_biconvex: return hs_star_biconvex(g);
        case RootClass::convex: return hs_convex(g);
        case RootClass::biconvex: return hs_biconvex(g);
        case RootClass::chordal_bipartite: return hs_chordal_bipartite(g);
        case RootClass::tree: return hs_tree(g, forest);
        case RootClass::balanced_bisplit: break;
    }
    auto rs = brute_root_search(g, RootClass::balanced_bisplit);
    require(rs.verdict != Verdict::Refused, E_BUDGET,
            "balanced bisplit search exceeds the exact budget");
    RecognitionOutcome rc;
    if (rs.verdict == Verdict::Yes) {
        RootCertificate cert;
        cert.root = *rs.root;
        cert.class_tag = RootClass::balanced_bisplit;
        auto bb = is_balanced_bisplit(cert.root);
        require(bb.balanced_bisplit, E_INVARIANT,
                "search produced a root without a bisplit partition");
        cert.partition = bb.partition;
        VerifyOutcome vo = verify_root(g, cert);
        require(vo.ok, E_INVARIANT, "constructed certificate rejected: " + vo.reason);
        rc.yes = true;
        rc.certificate = std::move(cert);
    }
    return rc;
}

inline void print_no_line(std::ostream& out, RootClass tag,
                          const RecognitionOutcome& rc) {
    out << "no class=" << to_string(tag);
    if (rc.obstruction) {
        out << " obstruction=" << obstruction_kind_name(rc.obstruction->kind);
        if (rc.obstruction->refused) {
            out << " witness=refused";
        } else {
            if (!rc.obstruction->vertices.empty())
                out << " vertices=" << join(rc.obstruction->vertices);
            if (!rc.obstruction->cols.empty())
                out << " cols=" << join(rc.obstruction->cols);
        }
    }
    out << "\n";
}

inline int do_recognize(const Graph& g, RootClass tag, bool forest,
                        const std::string& cert_path, int verify_level,
                        std::ostream& out) {
    RecognitionOutcome rc = recognize_class(g, tag, forest);
    if (!rc.yes) {
        print_no_line(out, tag, rc);
        return 1;
    }
    const RootCertificate& cert = *rc.certificate;
    if (verify_level > 0) {
        VerifyOutcome vo = verify_root(g, cert);
        require(vo.ok, E_INVARIANT, "certificate failed re-verification: " + vo.reason);
    }
    out << "yes class=" << to_string(tag) << " root=" << cert.root.nx() << "x"
        << cert.root.ny() << "\n";
    if (!cert_path.empty())
        emit(cert_path, out, [&](std::ostream& o) { write_certificate(o, cert); });
    return 0;
}

inline int do_build_root(const Graph& g, RootClass tag, bool forest,
                         const std::string& fmt, const std::string& opath,
                         const std::string& cert_path, int verify_level,
                         std::ostream& out) {
    RecognitionOutcome rc = recognize_class(g, tag, forest);
    if (!rc.yes) {
        print_no_line(out, tag, rc);
        return 1;
    }
    const RootCertificate& cert = *rc.certificate;
    if (verify_level > 0) {
        VerifyOutcome vo = verify_root(g, cert);
        require(vo.ok, E_INVARIANT, "certificate failed re-verification: " + vo.reason);
    }
    emit(opath, out, [&](std::ostream& o) { write_bigraph_as(o, cert.root, fmt); });
    if (!cert_path.empty())
        emit(cert_path, out, [&](std::ostream& o) { write_certificate(o, cert); });
    return 0;
}

inline int do_half_square(const BipartiteGraph& b, Side side,
                          const std::string& fmt, const std::string& opath,
                          std::ostream& out) {
    Graph g = half_square(b, side);
    emit(opath, out, [&](std::ostream& o) { write_graph_as(o, g, fmt); });
    return 0;
}

inline int do_verify_root(const Graph& g, const RootCertificate& cert,
                          std::ostream& out) {
    VerifyOutcome vo = verify_root(g, cert);
    if (vo.ok) {
        out << "ok\n";
        return 0;
    }
    out << "fail: " << vo.reason << "\n";
    return 1;
}

inline int do_ecc_solve(const Graph& g, int k, const std::string& opath,
                        std::ostream& out) {
    auto cover = solve_ecc({g, k});
    if (!cover) {
        out << "none\n";
        return 1;
    }
    emit(opath, out, [&](std::ostream& o) { write_cover(o, *cover); });
    return 0;
}

inline int do_ecc_reduce(const Graph& g, int k, const std::string& fmt,
                         const std::string& opath, std::ostream& out) {
    ReductionOutput red = reduce_ecc({g, k});
    emit(opath, out, [&](std::ostream& o) { write_graph_as(o, red.g_prime, fmt); });
    return 0;
}

inline int do_ecc_build(const Graph& g, int k, const std::string& cover_path,
                        const std::string& opath, std::ostream& out) {
    ReductionOutput red = reduce_ecc({g, k});
    CliqueCover cover = load_cover(cover_path);
    BalancedBisplitRoot root = build_root_from_cover(red, cover);
    emit(opath, out, [&](std::ostream& o) { write_bisplit_root(o, root); });
    return 0;
}

inline int do_ecc_extract(const Graph& g, int k, const std::string& root_path,
                          const std::string& opath, std::ostream& out) {
    ReductionOutput red = reduce_ecc({g, k});
    BalancedBisplitRoot root = load_bisplit_root(root_path);
    CliqueCover cover = extract_cover_from_root(red, root);
    emit(opath, out, [&](std::ostream& o) { write_cover(o, cover); });
    return 0;
}

inline int do_oracle_check(const Graph& g, RootClass tag, int wmax,
                           std::ostream& out) {
    RootSearchOutcome rs = brute_root_search(g, tag, wmax);
    require(rs.verdict != Verdict::Refused, E_BUDGET,
            "root search refused: instance exceeds the exact search budget");
    if (rs.verdict == Verdict::Yes) {
        out << "yes root=" << rs.root->nx() << "x" << rs.root->ny() << "\n";
        return 0;
    }
    out << "no\n";
    return 1;
}

// Every n x n bigraph, for the bisplit ground truth at tiny sizes.
inline bool bisplit_scan(const Graph& g) {
    const int n = g.n();
    const int cells = n * n;
    for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
        std::vector<Edge> be;
        for (int c = 0; c < cells; ++c)
            if (mask >> c & 1) be.push_back({c / n, c % n});
        BipartiteGraph b(n, n, std::move(be));
        if (is_balanced_bisplit(b).balanced_bisplit &&
            half_square(b, Side::X) == g)
            return true;
    }
    return false;
}

inline int do_oracle_sweep(int n, RootClass tag, std::ostream& out) {
    require(n >= 0 && n <= 7, E_BUDGET, "sweep supports n <= 7");
    if (tag == RootClass::balanced_bisplit)
        require(n <= 4, E_BUDGET,
                "balanced bisplit sweep scans all roots, supports n <= 4");
    long long checked = 0, disagreements = 0, refusals = 0;
    auto report = [&](const Graph& g, bool oracle_says, bool recog_says) {
        if (oracle_says == recog_says) return;
        ++disagreements;
        out << "disagree class=" << to_string(tag)
            << " graph=" << cdetail::edge_list_string(g) << " oracle="
            << (oracle_says ? "yes" : "no") << " recognizer="
            << (recog_says ? "yes" : "no") << "\n";
    };
    enumerate_graphs(n, false, [&](const Graph& g) {
        ++checked;
        switch (tag) {
            case RootClass::star_convex:
                report(g, brute_star_convex_condition(g) == Verdict::Yes,
                       hs_star_convex(g).yes);
                break;
            case RootClass::star_biconvex:
                report(g, brute_star_biconvex_condition(g) == Verdict::Yes,
                       hs_star_biconvex(g).yes);
                break;
            case RootClass::convex: {
                Verdict v = brute_interval(g);
                if (v == Verdict::Refused) { ++refusals; break; }
                report(g, v == Verdict::Yes, hs_convex(g).yes);
                break;
            }
            case RootClass::biconvex: {
                Verdict v = brute_unit_interval(g);
                if (v == Verdict::Refused) { ++refusals; break; }
                report(g, v == Verdict::Yes, hs_biconvex(g).yes);
                break;
            }
            case RootClass::chordal_bipartite: {
                Verdict v = brute_strongly_chordal(g);
                if (v == Verdict::Refused) { ++refusals; break; }
                report(g, v == Verdict::Yes, hs_chordal_bipartite(g).yes);
                break;
            }
            case RootClass::tree: {
                Verdict v = brute_block(g);
                if (v == Verdict::Refused) { ++refusals; break; }
                report(g, v == Verdict::Yes, hs_tree(g, true).yes);
                report(g, v == Verdict::Yes && components(g).size() <= 1,
                       hs_tree(g, false).yes);
                break;
            }
            case RootClass::balanced_bisplit: {
                auto rs = brute_root_search(g, RootClass::balanced_bisplit);
                require(rs.verdict != Verdict::Refused, E_BUDGET,
                        "bisplit search refused inside the sweep");
                report(g, bisplit_scan(g), rs.verdict == Verdict::Yes);
                break;
            }
        }
    });
    out << "checked " << checked << " graphs on " << n << " vertices: "
        << disagreements << " disagreements, " << refusals << " refusals\n";
    return disagreements == 0 ? 0 : 1;
}

} // namespace cdetail

// Parses argv (program name excluded) and runs one subcommand.  All regular
// output goes to `out`; the single-line error channel is `err`.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"certifying half-square toolkit"};
    app.name("hsq");
    app.require_subcommand(1);

    std::string in_path, out_path, cert_path, cover_path, root_path;
    std::string class_s, side_s, format = "text";
    int k = 0, wmax = 6, sweep_n = 0, verify_level = 1;
    bool forest = false;

    CLI::App* rec = app.add_subcommand("recognize",
                                       "decide membership, emit a certificate");
    rec->add_option("--class", class_s, "root class tag")->required();
    rec->add_option("-i,--input", in_path, "graph file")->required();
    rec->add_option("--cert", cert_path, "write the certificate here on yes");
    rec->add_flag("--forest", forest, "tree class: allow a forest root");
    rec->add_option("--verify-level", verify_level,
                    "0 = trust construction, 1 = re-verify (default)");

    CLI::App* bro = app.add_subcommand("build-root",
                                       "construct and print a root");
    bro->add_option("--class", class_s, "root class tag")->required();
    bro->add_option("-i,--input", in_path, "graph file")->required();
    bro->add_option("-o,--output", out_path, "output file (default stdout)");
    bro->add_option("--format", format, "text|json|dot");
    bro->add_option("--cert", cert_path, "also write the full certificate");
    bro->add_flag("--forest", forest, "tree class: allow a forest root");
    bro->add_option("--verify-level", verify_level,
                    "0 = trust construction, 1 = re-verify (default)");

    CLI::App* hsq = app.add_subcommand("half-square",
                                       "square a bipartite graph onto one side");
    hsq->add_option("-i,--input", in_path, "bigraph file")->required();
    hsq->add_option("--side", side_s, "x or y")->required();
    hsq->add_option("-o,--output", out_path, "output file (default stdout)");
    hsq->add_option("--format", format, "text|json|dot");

    CLI::App* ver = app.add_subcommand("verify-root",
                                       "check a certificate against a graph");
    ver->add_option("-i,--input", in_path, "graph file")->required();
    ver->add_option("--cert", cert_path, "certificate file")->required();

    CLI::App* ecc = app.add_subcommand("ecc", "edge clique cover toolchain");
    ecc->require_subcommand(1);
    CLI::App* esolve = ecc->add_subcommand("solve", "exact cover search");
    esolve->add_option("-k", k, "clique budget")->required();
    esolve->add_option("-i,--input", in_path, "graph file")->required();
    esolve->add_option("-o,--output", out_path, "cover file (default stdout)");
    CLI::App* ered = ecc->add_subcommand("reduce", "append k universal vertices");
    ered->add_option("-k", k, "clique budget")->required();
    ered->add_option("-i,--input", in_path, "graph file")->required();
    ered->add_option("-o,--output", out_path, "output file (default stdout)");
    ered->add_option("--format", format, "text|json|dot");
    CLI::App* ebuild = ecc->add_subcommand("build-root",
                                           "cover to balanced bisplit root");
    ebuild->add_option("-k", k, "clique budget")->required();
    ebuild->add_option("-i,--input", in_path, "graph file")->required();
    ebuild->add_option("--cover", cover_path, "cover file")->required();
    ebuild->add_option("-o,--output", out_path, "root file (default stdout)");
    CLI::App* eext = ecc->add_subcommand("extract",
                                         "balanced bisplit root to cover");
    eext->add_option("-k", k, "clique budget")->required();
    eext->add_option("-i,--input", in_path, "graph file")->required();
    eext->add_option("--root", root_path, "root file")->required();
    eext->add_option("-o,--output", out_path, "cover file (default stdout)");

    CLI::App* orc = app.add_subcommand("oracle", "brute-force ground truth");
    orc->require_subcommand(1);
    CLI::App* ocheck = orc->add_subcommand("check", "search for a root");
    ocheck->add_option("--class", class_s, "root class tag")->required();
    ocheck->add_option("-i,--input", in_path, "graph file")->required();
    ocheck->add_option("--wmax", wmax, "largest Y side to try (default 6)");
    CLI::App* osweep = orc->add_subcommand("sweep",
                                           "recognizer vs oracle disagreement report");
    osweep->add_option("--n", sweep_n, "vertex count to sweep")->required();
    osweep->add_option("--class", class_s, "root class tag")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "E_USAGE: " << cdetail::single_line(e.what()) << "\n";
        return 2;
    }

    try {
        if (rec->parsed())
            return cdetail::do_recognize(cdetail::load_graph(in_path),
                                         cdetail::class_of(class_s), forest,
                                         cert_path, verify_level, out);
        if (bro->parsed())
            return cdetail::do_build_root(cdetail::load_graph(in_path),
                                          cdetail::class_of(class_s), forest,
                                          format, out_path, cert_path,
                                          verify_level, out);
        if (hsq->parsed())
            return cdetail::do_half_square(cdetail::load_bigraph(in_path),
                                           cdetail::side_of(side_s), format,
                                           out_path, out);
        if (ver->parsed())
            return cdetail::do_verify_root(cdetail::load_graph(in_path),
                                           cdetail::load_certificate(cert_path),
                                           out);
        if (esolve->parsed())
            return cdetail::do_ecc_solve(cdetail::load_graph(in_path), k,
                                         out_path, out);
        if (ered->parsed())
            return cdetail::do_ecc_reduce(cdetail::load_graph(in_path), k,
                                          format, out_path, out);
        if (ebuild->parsed())
            return cdetail::do_ecc_build(cdetail::load_graph(in_path), k,
                                         cover_path, out_path, out);
        if (eext->parsed())
            return cdetail::do_ecc_extract(cdetail::load_graph(in_path), k,
                                           root_path, out_path, out);
        if (ocheck->parsed())
            return cdetail::do_oracle_check(cdetail::load_graph(in_path),
                                            cdetail::class_of(class_s), wmax,
                                            out);
        if (osweep->parsed())
            return cdetail::do_oracle_sweep(sweep_n,
                                            cdetail::class_of(class_s), out);
        throw error(E_USAGE, "no subcommand selected");
    } catch (const error& e) {
        err << cdetail::single_line(e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "E_INVARIANT: unexpected failure: "
            << cdetail::single_line(e.what()) << "\n";
        return 2;
    }
}

} // namespace hsq::cli
