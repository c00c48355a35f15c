#pragma once

// Ordering machinery shared by the recognizers:
//
//  * consecutive_ones: PQ-tree reduction (Booth-Lueker templates, expressed as
//    a recursive split of partial nodes).  Exact for arbitrary 0-1 matrices.
//  * doubly_lexical: alternating stable sorts of rows and columns until a
//    fixpoint.  Each changing pass strictly increases the integer potential
//    sum 2^rowpos * 2^colpos over the 1-entries, so the loop terminates, and
//    a fixpoint is by definition doubly lexically ordered.
//
// Ordering convention, fixed across the library: rows and columns, read as
// 0-1 vectors whose LAST position is most significant, are nondecreasing.
// A Gamma pattern is rows i<j and columns k<l with entries
// (i,k)=(i,l)=(j,k)=1 and (j,l)=0.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "hsq/error.hpp"
#include "hsq/graph.hpp"

namespace hsq {

// ---------------------------------------------------------------------------
// PQ-tree
// ---------------------------------------------------------------------------

namespace pq {

enum class Kind { Leaf, P, Q };
enum class Label { Empty, Full, Partial };

struct Node {
    Kind kind = Kind::Leaf;
    int col = -1;             // leaves only
    std::vector<int> child;   // P and Q nodes
};

// One PQ-tree over columns 0..ncols-1.  reduce() intersects the represented
// order set with "this column set is consecutive"; returns false when the
// set becomes empty.
class Tree {
public:
    explicit Tree(int ncols) : ncols_(ncols) {
        if (ncols_ == 0) { root_ = -1; return; }
        std::vector<int> leaves;
        for (int c = 0; c < ncols_; ++c) {
            nodes_.push_back({Kind::Leaf, c, {}});
            leaves.push_back(c);
        }
        if (ncols_ == 1) {
            root_ = 0;
        } else {
            nodes_.push_back({Kind::P, -1, leaves});
            root_ = ncols_;
        }
    }

    bool reduce(const std::vector<int>& set) {
        if (static_cast<int>(set.size()) <= 1 || static_cast<int>(set.size()) >= ncols_)
            return true;
        in_set_.assign(ncols_, 0);
        for (int c : set) in_set_[c] = 1;
        s_size_ = static_cast<int>(set.size());
        full_.assign(nodes_.size(), 0);
        count_fulls(root_);
        int proot = root_;
        for (;;) {
            int next = -1;
            for (int c : nodes_[proot].child)
                if (full_[c] == s_size_) { next = c; break; }
            if (next < 0) break;
            proot = next;
        }
        return apply_root(proot);
    }

    std::vector<int> frontier() const {
        std::vector<int> out;
        if (root_ >= 0) collect(root_, out);
        return out;
    }

private:
    int ncols_;
    int root_;
    std::vector<Node> nodes_;
    std::vector<char> in_set_;
    std::vector<int> full_;
    int s_size_ = 0;

    int count_fulls(int v) {
        // full_ may be shorter than nodes_ after splices within this pass;
        // it is sized before each reduce, and new nodes are only created
        // after counting, so indexing is safe.
        const Node& nd = nodes_[v];
        int f = 0;
        if (nd.kind == Kind::Leaf) {
            f = in_set_[nd.col];
        } else {
            for (int c : nd.child) f += count_fulls(c);
        }
        full_[v] = f;
        return f;
    }

    Label label(int v) const {
        int f = full_[v];
        if (f == 0) return Label::Empty;
        return f == leaf_count(v) ? Label::Full : Label::Partial;
    }

    int leaf_count(int v) const {
        const Node& nd = nodes_[v];
        if (nd.kind == Kind::Leaf) return 1;
        int c = 0;
        for (int ch : nd.child) c += leaf_count(ch);
        return c;
    }

    void collect(int v, std::vector<int>& out) const {
        const Node& nd = nodes_[v];
        if (nd.kind == Kind::Leaf) {
            out.push_back(nd.col);
            return;
        }
        for (int c : nd.child) collect(c, out);
    }

    int make(Kind k, std::vector<int> child) {
        nodes_.push_back({k, -1, std::move(child)});
        return static_cast<int>(nodes_.size()) - 1;
    }

    // Wraps a label group: empty -> none, one -> itself, many -> new P node.
    static void append_group(std::vector<int>& out, std::vector<int>& group, Tree& t) {
        if (group.size() == 1) out.push_back(group[0]);
        else if (group.size() > 1) out.push_back(t.make(Kind::P, group));
    }

    struct Split {
        std::vector<int> empty_side, full_side;  // both nonempty for a partial node
    };

    // Turns a partial node into an ordered child sequence: empty part first,
    // full part last.  The node itself dissolves into its parent.
    std::optional<Split> split(int v) {
        const Node nd = nodes_[v];  // copy: nodes_ may reallocate below
        if (nd.kind == Kind::Leaf) return std::nullopt;  // leaves are never partial
        if (nd.kind == Kind::P) {
            std::vector<int> empties, fulls, partials;
            for (int c : nd.child) {
                switch (label(c)) {
                    case Label::Empty: empties.push_back(c); break;
                    case Label::Full: fulls.push_back(c); break;
                    case Label::Partial: partials.push_back(c); break;
                }
            }
            if (partials.size() > 1) return std::nullopt;
            Split s;
            append_group(s.empty_side, empties, *this);
            if (!partials.empty()) {
                auto inner = split(partials[0]);
                if (!inner) return std::nullopt;
                s.empty_side.insert(s.empty_side.end(), inner->empty_side.begin(),
                                    inner->empty_side.end());
                s.full_side = std::move(inner->full_side);
            }
            append_group(s.full_side, fulls, *this);
            return s;
        }
        // Q node: children must read empties*, <=1 partial, fulls* in one of
        // the two directions.
        std::vector<int> ch = nd.child;
        for (int attempt = 0; attempt < 2; ++attempt) {
            if (attempt == 1) std::reverse(ch.begin(), ch.end());
            int m = static_cast<int>(ch.size());
            int i = 0;
            while (i < m && label(ch[i]) == Label::Empty) ++i;
            int part = -1;
            if (i < m && label(ch[i]) == Label::Partial) part = ch[i++];
            int first_full = i;
            while (i < m && label(ch[i]) == Label::Full) ++i;
            if (i == m) {
                Split s;
                for (int j = 0; j < first_full; ++j)
                    if (ch[j] != part) s.empty_side.push_back(ch[j]);
                if (part >= 0) {
                    auto inner = split(part);
                    if (!inner) return std::nullopt;
                    s.empty_side.insert(s.empty_side.end(), inner->empty_side.begin(),
                                        inner->empty_side.end());
                    s.full_side = std::move(inner->full_side);
                }
                for (int j = first_full; j < m; ++j) s.full_side.push_back(ch[j]);
                if (!s.empty_side.empty() && !s.full_side.empty()) return s;
                return std::nullopt;  // a genuinely partial node yields both sides
            }
        }
        return std::nullopt;
    }

    bool apply_root(int proot) {
        if (label(proot) == Label::Full) return true;  // subtree is exactly the set
        Node nd = nodes_[proot];  // copy
        if (nd.kind == Kind::Leaf) return true;        // handled by the guards above
        if (nd.kind == Kind::P) {
            std::vector<int> empties, fulls, partials;
            for (int c : nd.child) {
                switch (label(c)) {
                    case Label::Empty: empties.push_back(c); break;
                    case Label::Full: fulls.push_back(c); break;
                    case Label::Partial: partials.push_back(c); break;
                }
            }
            if (partials.size() > 2) return false;
            if (partials.empty()) {
                if (fulls.size() <= 1) return true;  // already consecutive
                int gather = make(Kind::P, fulls);
                std::vector<int> nc = empties;
                nc.push_back(gather);
                replace(proot, Kind::P, std::move(nc));
                return true;
            }
            std::vector<int> q_children;
            auto s1 = split(partials[0]);
            if (!s1) return false;
            q_children.insert(q_children.end(), s1->empty_side.begin(), s1->empty_side.end());
            q_children.insert(q_children.end(), s1->full_side.begin(), s1->full_side.end());
            append_group(q_children, fulls, *this);
            if (partials.size() == 2) {
                auto s2 = split(partials[1]);
                if (!s2) return false;
                q_children.insert(q_children.end(), s2->full_side.rbegin(),
                                  s2->full_side.rend());
                q_children.insert(q_children.end(), s2->empty_side.rbegin(),
                                  s2->empty_side.rend());
            }
            if (empties.empty()) {
                replace(proot, Kind::Q, std::move(q_children));
            } else {
                int qn = q_children.size() == 1 ? q_children[0]
                                                : make(Kind::Q, std::move(q_children));
                std::vector<int> nc = empties;
                nc.push_back(qn);
                replace(proot, Kind::P, std::move(nc));
            }
            return true;
        }
        // Q root: pattern empties*, partial?, fulls*, partial?, empties*.
        const std::vector<int>& ch = nd.child;
        const int m = static_cast<int>(ch.size());
        std::vector<int> fullpos, partpos;
        for (int j = 0; j < m; ++j) {
            if (label(ch[j]) == Label::Full) fullpos.push_back(j);
            else if (label(ch[j]) == Label::Partial) partpos.push_back(j);
        }
        if (partpos.size() > 2) return false;
        int lo, hi;  // the closed block that will hold the set
        if (!fullpos.empty()) {
            lo = fullpos.front();
            hi = fullpos.back();
            if (hi - lo + 1 != static_cast<int>(fullpos.size())) return false;
            for (int p : partpos)
                if (p != lo - 1 && p != hi + 1) return false;
            for (int p : partpos) {
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
        } else {
            if (partpos.size() != 2 || partpos[1] != partpos[0] + 1) return false;
            lo = partpos[0];
            hi = partpos[1];
        }
        std::vector<int> nc(ch.begin(), ch.begin() + lo);
        for (int j = lo; j <= hi; ++j) {
            if (label(ch[j]) != Label::Partial) {
                nc.push_back(ch[j]);
                continue;
            }
            auto s = split(ch[j]);
            if (!s) return false;
            // Left flank: empty side faces outward (left); right flank mirrors.
            if (j == lo) {
                nc.insert(nc.end(), s->empty_side.begin(), s->empty_side.end());
                nc.insert(nc.end(), s->full_side.begin(), s->full_side.end());
            } else {
                nc.insert(nc.end(), s->full_side.rbegin(), s->full_side.rend());
                nc.insert(nc.end(), s->empty_side.rbegin(), s->empty_side.rend());
            }
        }
        nc.insert(nc.end(), ch.begin() + hi + 1, ch.end());
        replace(proot, Kind::Q, std::move(nc));
        return true;
    }

    void replace(int v, Kind k, std::vector<int> child) {
        nodes_[v].kind = k;
        nodes_[v].col = -1;
        nodes_[v].child = std::move(child);
    }
};

} // namespace pq

// ---------------------------------------------------------------------------
// consecutive_ones
// ---------------------------------------------------------------------------

struct CopOutcome {
    std::optional<std::vector<int>> order;  // order[pos] = column id
    // Failure: an irreducible conflicting sub-instance (row indices into the
    // input, column ids).  Deleting any single listed row makes it orderable.
    std::vector<int> conflict_rows, conflict_cols;
    bool ok() const { return order.has_value(); }
};

namespace detail {

inline bool cop_feasible(const std::vector<std::vector<int>>& rows, int ncols) {
    pq::Tree t(ncols);
    for (const auto& r : rows)
        if (!t.reduce(r)) return false;
    return true;
}

} // namespace detail

inline CopOutcome consecutive_ones(const std::vector<std::vector<int>>& rows_in, int ncols) {
    require(ncols >= 0, E_INVARIANT, "consecutive_ones: negative column count");
    std::vector<std::vector<int>> rows = rows_in;
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        for (int c : r)
            require(c >= 0 && c < ncols, E_INVARIANT, "consecutive_ones: column out of range");
    }

    pq::Tree t(ncols);
    bool ok = true;
    for (const auto& r : rows)
        if (!t.reduce(r)) { ok = false; break; }

    CopOutcome out;
    if (ok) {
        auto order = t.frontier();
        // Final self-check: every row contiguous under the computed order.
        std::vector<int> pos(ncols);
        for (int p = 0; p < ncols; ++p) pos[order[p]] = p;
        for (const auto& r : rows) {
            if (r.empty()) continue;
            int lo = ncols, hi = -1;
            for (int c : r) { lo = std::min(lo, pos[c]); hi = std::max(hi, pos[c]); }
            require(hi - lo + 1 == static_cast<int>(r.size()), E_INVARIANT,
                    "consecutive_ones: internal engine error (non-contiguous row)");
        }
        out.order = std::move(order);
        return out;
    }

    // Minimize a conflicting witness: alternate greedy row and column drops
    // until neither pass removes anything.  Feasibility is monotone under
    // both kinds of deletion, so the result is 1-minimal in rows and columns.
    std::vector<int> live;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) live.push_back(i);
    std::vector<char> col_live(ncols, 1);
    auto restricted = [&](int skip_row, int skip_col) {
        std::vector<std::vector<int>> rest;
        for (int i : live) {
            if (i == skip_row) continue;
            std::vector<int> rr;
            for (int c : rows[i])
                if (col_live[c] && c != skip_col) rr.push_back(c);
            rest.push_back(std::move(rr));
        }
        return rest;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < live.size();) {
            if (!detail::cop_feasible(restricted(live[i], -1), ncols)) {
                live.erase(live.begin() + static_cast<long>(i));
                changed = true;
            } else {
                ++i;
            }
        }
        for (int c = 0; c < ncols; ++c) {
            if (!col_live[c]) continue;
            bool used = false;
            for (int i : live)
                for (int cc : rows[i])
                    if (cc == c) used = true;
            if (!used) { col_live[c] = 0; continue; }
            if (!detail::cop_feasible(restricted(-1, c), ncols)) {
                col_live[c] = 0;
                changed = true;
            }
        }
    }
    out.conflict_rows = live;
    for (int c = 0; c < ncols; ++c)
        if (col_live[c]) out.conflict_cols.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------
// Doubly lexical ordering
// ---------------------------------------------------------------------------

// Row-major 0-1 matrix with bit rows.
struct Matrix01 {
    int rows = 0, cols = 0;
    std::vector<bits::Row> row_bits;

    Matrix01() = default;
    Matrix01(int r, int c) : rows(r), cols(c), row_bits(r, bits::make(c)) {}

    bool get(int r, int c) const { return bits::test(row_bits[r], c); }
    void set(int r, int c) { bits::set(row_bits[r], c); }
};

inline Matrix01 closed_neighborhood_matrix(const Graph& g) {
    Matrix01 m(g.n(), g.n());
    for (int v = 0; v < g.n(); ++v) m.row_bits[v] = g.closed_row(v);
    return m;
}

inline Matrix01 biadjacency_matrix(const BipartiteGraph& b) {
    Matrix01 m(b.nx(), b.ny());
    for (int x = 0; x < b.nx(); ++x) m.row_bits[x] = b.row(Side::X, x);
    return m;
}

struct DoublyLexOrdering {
    std::vector<int> row_perm, col_perm;  // perm[pos] = original index
    bool gamma_free = true;
    // Positions in the ordered matrix of the first Gamma found (i<j, k<l),
    // meaningful when !gamma_free.
    std::array<int, 4> gamma_at{-1, -1, -1, -1};
};

namespace detail {

// a < b with the last position most significant.
inline bool revsig_less(const bits::Row& a, const bits::Row& b) {
    for (std::size_t w = a.size(); w-- > 0;) {
        if (a[w] != b[w]) return a[w] < b[w];
    }
    return false;
}

} // namespace detail

// Checks the fixed convention on an explicitly permuted matrix.
inline bool is_doubly_lex_ordered(const Matrix01& m, const std::vector<int>& row_perm,
                                  const std::vector<int>& col_perm) {
    std::vector<bits::Row> prows(m.rows, bits::make(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int k = 0; k < m.cols; ++k)
            if (m.get(row_perm[i], col_perm[k])) bits::set(prows[i], k);
    for (int i = 0; i + 1 < m.rows; ++i)
        if (detail::revsig_less(prows[i + 1], prows[i])) return false;
    std::vector<bits::Row> pcols(m.cols, bits::make(m.rows));
    for (int k = 0; k < m.cols; ++k)
        for (int i = 0; i < m.rows; ++i)
            if (m.get(row_perm[i], col_perm[k])) bits::set(pcols[k], i);
    for (int k = 0; k + 1 < m.cols; ++k)
        if (detail::revsig_less(pcols[k + 1], pcols[k])) return false;
    return true;
}

// Gamma scan of an explicitly permuted matrix; returns positions (i,j,k,l) of
// the first Gamma in column-pair order, or nullopt.
inline std::optional<std::array<int, 4>> find_gamma(const Matrix01& m,
                                                    const std::vector<int>& row_perm,
                                                    const std::vector<int>& col_perm) {
    std::vector<bits::Row> pcols(m.cols, bits::make(m.rows));
    for (int k = 0; k < m.cols; ++k)
        for (int i = 0; i < m.rows; ++i)
            if (m.get(row_perm[i], col_perm[k])) bits::set(pcols[k], i);
    for (int k = 0; k < m.cols; ++k)
        for (int l = k + 1; l < m.cols; ++l) {
            bits::Row both = bits::and_(pcols[k], pcols[l]);
            bits::Row only_k = bits::minus(pcols[k], pcols[l]);
            int i = bits::first(both);
            int j = bits::last(only_k);
            if (i >= 0 && j > i) return std::array<int, 4>{i, j, k, l};
        }
    return std::nullopt;
}

inline DoublyLexOrdering doubly_lexical(const Matrix01& m) {
    DoublyLexOrdering out;
    out.row_perm.resize(m.rows);
    out.col_perm.resize(m.cols);
    std::iota(out.row_perm.begin(), out.row_perm.end(), 0);
    std::iota(out.col_perm.begin(), out.col_perm.end(), 0);

    // Column-major copy for the column pass.
    Matrix01 mt(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.get(r, c)) mt.set(c, r);

    auto pass = [](const Matrix01& mat, std::vector<int>& perm, const std::vector<int>& other) {
        // Sort `perm` (over mat's rows) by the row vectors read under the
        // `other` ordering of mat's columns, last position most significant.
        std::vector<bits::Row> keys(mat.rows, bits::make(mat.cols));
        for (int r = 0; r < mat.rows; ++r)
            for (int p = 0; p < mat.cols; ++p)
                if (bits::test(mat.row_bits[r], other[p])) bits::set(keys[r], p);
        std::vector<int> before = perm;
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            return detail::revsig_less(keys[a], keys[b]);
        });
        return perm != before;
    };

    for (int round = 0;; ++round) {
        require(round < 1000000, E_INVARIANT, "doubly_lexical: no fixpoint (bug)");
        bool r = pass(m, out.row_perm, out.col_perm);
        bool c = pass(mt, out.col_perm, out.row_perm);
        if (!r && !c) break;
    }

    auto gamma = find_gamma(m, out.row_perm, out.col_perm);
    out.gamma_free = !gamma.has_value();
    if (gamma) out.gamma_at = *gamma;
    return out;
}

} // namespace hsq
