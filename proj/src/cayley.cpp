#include "sumclique/cayley.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "sumclique/errors.hpp"

namespace sumclique {

std::uint32_t AdjacencyMatrix::degree(std::uint32_t v) const {
    const std::uint64_t* r = row(v);
    std::uint32_t d = 0;
    for (std::uint32_t w = 0; w < words_per_row; ++w) d += std::popcount(r[w]);
    return d;
}

std::uint64_t AdjacencyMatrix::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint32_t v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

AdjacencyMatrix AdjacencyMatrix::complement() const {
    AdjacencyMatrix c(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (!test(i, j)) c.set_edge(i, j);
    return c;
}

CayleyGraph build_cayley_sum_graph(const GroupSet& a) {
    const GroupSpec& g = a.group;
    if (g.order > kMaxCayleyVertices)
        throw PreconditionError("cayley graph limited to groups of order <= " + std::to_string(kMaxCayleyVertices));
    CayleyGraph cg;
    cg.group = g;
    cg.generator = a;
    cg.adj = AdjacencyMatrix(g.order);
    for (Element i = 0; i < g.order; ++i)
        for (Element j = i + 1; j < g.order; ++j)
            if (a.bits.test(add_raw(g, i, j))) cg.adj.set_edge(i, j);

    // Regularity law: j -> i + j is a bijection, so i has |A| neighbors
    // counting itself when 2i lands in A.
    std::uint64_t card = a.card();
    for (Element i = 0; i < g.order; ++i) {
        std::uint64_t expected = card - (a.bits.test(add_raw(g, i, i)) ? 1 : 0);
        if (cg.adj.degree(i) != expected)
            throw std::logic_error("cayley regularity violated at vertex " + std::to_string(i));
    }
    return cg;
}

GroupSet paley_set(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw PreconditionError("paley set requires an odd prime modulus");
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) throw PreconditionError("paley set requires a prime modulus; " + std::to_string(n) + " is composite");
    GroupSpec g = GroupSpec::cyclic(n);
    GroupSet s(g);
    for (std::uint64_t x = 1; x < n; ++x) s.bits.set(static_cast<Element>((x * x) % n));
    return s;
}

bool is_clique(const CayleyGraph& g, const GroupSet& x) {
    if (!(g.group == x.group)) throw PreconditionError("clique query set lives in a different group");
    std::vector<Element> e = x.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!g.adj.test(e[i], e[j])) return false;
    return true;
}

namespace {

// Tomita-style exact search: candidates kept as word arrays, greedy coloring
// produces per-vertex upper bounds, vertices expanded in reverse color order.
class MaxCliqueSolver {
  public:
    MaxCliqueSolver(const AdjacencyMatrix& g, std::uint64_t budget) : g_(g), n_(g.n), w_(g.words_per_row), budget_(budget) {
        order_by_degeneracy();
        adj_.assign(std::size_t(n_) * w_, 0);
        for (std::uint32_t i = 0; i < n_; ++i) {
            std::uint64_t* dst = &adj_[std::size_t(i) * w_];
            for (std::uint32_t v = 0; v < n_; ++v)
                if (v != i && g_.test(perm_[i], perm_[v])) dst[v >> 6] |= std::uint64_t(1) << (v & 63);
        }
        pstack_.assign(std::size_t(n_ + 1) * w_, 0);
        mstack_.assign(std::size_t(n_ + 1) * w_, 0);
        seq_.assign(std::size_t(n_ + 1) * n_, 0);
        col_.assign(std::size_t(n_ + 1) * n_, 0);
        rstack_.assign(n_ + 1, 0);
        ubuf_.assign(w_, 0);
        qbuf_.assign(w_, 0);
    }

    CliqueResult run() {
        CliqueResult res;
        if (n_ == 0) {
            res.omega = 0;
            res.exact = true;
            return res;
        }
        greedy_seed();
        std::uint64_t* root = &pstack_[0];
        for (std::uint32_t v = 0; v < n_; ++v) root[v >> 6] |= std::uint64_t(1) << (v & 63);
        expand(0);
        res.omega = best_;
        res.nodes = nodes_;
        res.exact = !exhausted_;
        res.witness.reserve(best_);
        for (std::uint32_t v : best_witness_) res.witness.push_back(perm_[v]);
        std::sort(res.witness.begin(), res.witness.end());
        return res;
    }

  private:
    void order_by_degeneracy() {
        std::vector<std::uint32_t> deg(n_);
        std::vector<bool> removed(n_, false);
        for (std::uint32_t v = 0; v < n_; ++v) deg[v] = g_.degree(v);
        std::vector<std::uint32_t> order(n_);
        for (std::uint32_t step = 0; step < n_; ++step) {
            std::uint32_t best = n_, bestdeg = ~0u;
            for (std::uint32_t v = 0; v < n_; ++v)
                if (!removed[v] && deg[v] < bestdeg) {
                    bestdeg = deg[v];
                    best = v;
                }
            removed[best] = true;
            order[step] = best;
            for (std::uint32_t u = 0; u < n_; ++u)
                if (!removed[u] && g_.test(best, u)) --deg[u];
        }
        // Last removed first: dense-core vertices get low indices.
        perm_.assign(n_, 0);
        for (std::uint32_t i = 0; i < n_; ++i) perm_[i] = order[n_ - 1 - i];
    }

    const std::uint64_t* adj_row(std::uint32_t v) const { return &adj_[std::size_t(v) * w_]; }

    void greedy_seed() {
        std::vector<std::uint64_t> cand(w_, 0);
        for (std::uint32_t v = 0; v < n_; ++v) cand[v >> 6] |= std::uint64_t(1) << (v & 63);
        std::vector<std::uint32_t> r;
        for (std::uint32_t v = 0; v < n_;) {
            if ((cand[v >> 6] >> (v & 63)) & 1u) {
                r.push_back(v);
                const std::uint64_t* av = adj_row(v);
                for (std::uint32_t w = 0; w < w_; ++w) cand[w] &= av[w];
            }
            ++v;
        }
        best_ = static_cast<std::uint32_t>(r.size());
        best_witness_ = std::move(r);
    }

    bool empty_words(const std::uint64_t* p) const {
        for (std::uint32_t w = 0; w < w_; ++w)
            if (p[w]) return false;
        return true;
    }

    void expand(std::uint32_t rsize) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        std::uint64_t* p = &pstack_[std::size_t(rsize) * w_];
        std::uint16_t* seq = &seq_[std::size_t(rsize) * n_];
        std::uint16_t* col = &col_[std::size_t(rsize) * n_];

        // Greedy coloring of the candidate set; classes appended in order, so
        // color values along seq are nondecreasing.
        std::uint32_t cnt = 0, c = 0;
        std::copy(p, p + w_, ubuf_.begin());
        while (true) {
            bool empty = true;
            for (std::uint32_t w = 0; w < w_; ++w)
                if (ubuf_[w]) {
                    empty = false;
                    break;
                }
            if (empty) break;
            ++c;
            std::copy(ubuf_.begin(), ubuf_.end(), qbuf_.begin());
            for (std::uint32_t w = 0; w < w_; ++w) {
                while (qbuf_[w]) {
                    std::uint32_t v = (w << 6) + std::countr_zero(qbuf_[w]);
                    seq[cnt] = static_cast<std::uint16_t>(v);
                    col[cnt] = static_cast<std::uint16_t>(c);
                    ++cnt;
                    ubuf_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
                    qbuf_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
                    const std::uint64_t* av = adj_row(v);
                    for (std::uint32_t w2 = w; w2 < w_; ++w2) qbuf_[w2] &= ~av[w2];
                }
            }
        }

        std::uint64_t* m = &mstack_[std::size_t(rsize) * w_];
        std::copy(p, p + w_, m);
        for (std::uint32_t i = cnt; i-- > 0;) {
            if (rsize + col[i] <= best_) return;  // colors nondecreasing: rest pruned too
            std::uint32_t v = seq[i];
            m[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
            rstack_[rsize] = v;
            std::uint64_t* pn = &pstack_[std::size_t(rsize + 1) * w_];
            const std::uint64_t* av = adj_row(v);
            for (std::uint32_t w = 0; w < w_; ++w) pn[w] = m[w] & av[w];
            if (empty_words(pn)) {
                if (rsize + 1 > best_) {
                    best_ = rsize + 1;
                    best_witness_.assign(rstack_.begin(), rstack_.begin() + rsize + 1);
                }
            } else {
                expand(rsize + 1);
                if (exhausted_) return;
            }
        }
    }

    const AdjacencyMatrix& g_;
    std::uint32_t n_, w_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::uint32_t best_ = 0;
    std::vector<std::uint32_t> best_witness_;
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint64_t> adj_, pstack_, mstack_, ubuf_, qbuf_;
    std::vector<std::uint16_t> seq_, col_;
    std::vector<std::uint32_t> rstack_;
};

}  // namespace

CliqueResult max_clique(const AdjacencyMatrix& g, std::uint64_t node_budget, bool complement) {
    if (node_budget == 0) throw PreconditionError("node budget must be positive");
    if (complement) {
        AdjacencyMatrix c = g.complement();
        return MaxCliqueSolver(c, node_budget).run();
    }
    return MaxCliqueSolver(g, node_budget).run();
}

namespace {

struct CliqueCounter {
    const AdjacencyMatrix& g;
    std::uint64_t cap;
    std::uint64_t steps = 0;
    std::uint64_t count = 0;
    std::uint32_t w;
    std::vector<std::uint64_t> stack;

    CliqueCounter(const AdjacencyMatrix& g_, std::uint64_t cap_) : g(g_), cap(cap_), w(g_.words_per_row) {
        stack.assign(std::size_t(g.n + 1) * w, 0);
    }

    void rec(std::uint32_t depth, std::uint32_t need) {
        if (++steps > cap) throw BudgetExceededError("count_cliques_of_size exceeded its node cap");
        const std::uint64_t* p = &stack[std::size_t(depth) * w];
        std::uint32_t avail = 0;
        for (std::uint32_t i = 0; i < w; ++i) avail += std::popcount(p[i]);
        if (avail < need) return;
        if (need == 1) {
            count += avail;
            return;
        }
        std::uint64_t* pn = &stack[std::size_t(depth + 1) * w];
        for (std::uint32_t wi = 0; wi < w; ++wi) {
            std::uint64_t word = p[wi];
            while (word) {
                std::uint32_t v = (wi << 6) + std::countr_zero(word);
                word &= word - 1;
                const std::uint64_t* av = g.row(v);
                // candidates after v only, to count each set once
                pn[wi] = (p[wi] & av[wi]) & ~((std::uint64_t(2) << (v & 63)) - 1);
                for (std::uint32_t k = wi + 1; k < w; ++k) pn[k] = p[k] & av[k];
                for (std::uint32_t k = 0; k < wi; ++k) pn[k] = 0;
                rec(depth + 1, need - 1);
            }
        }
    }
};

}  // namespace

std::uint64_t count_cliques_of_size(const AdjacencyMatrix& g, std::uint32_t k, std::uint64_t node_cap) {
    if (k < 1) throw PreconditionError("clique size must be >= 1");
    if (k > g.n) return 0;
    CliqueCounter cc(g, node_cap);
    std::uint64_t* root = &cc.stack[0];
    for (std::uint32_t v = 0; v < g.n; ++v) root[v >> 6] |= std::uint64_t(1) << (v & 63);
    cc.rec(0, k);
    return cc.count;
}

std::string edge_list_text(const AdjacencyMatrix& g) {
    std::ostringstream out;
    for (std::uint32_t i = 0; i < g.n; ++i)
        for (std::uint32_t j = i + 1; j < g.n; ++j)
            if (g.test(i, j)) out << i << " " << j << "\n";
    return out.str();
}

}  // namespace sumclique
