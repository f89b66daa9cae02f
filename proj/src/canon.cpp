#include "bei/canon.hpp"

#include <algorithm>
#include <numeric>

#include "bei/graph_io.hpp"

namespace bei {

namespace {

// Ordered partition of the vertex set into cells.
struct Partition {
    std::array<Mask, kMaxVertices> cell{};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

using Rows = std::array<Mask, kMaxVertices>;

// Splits cell `x` by the number of neighbours each vertex has in `w`. Pieces replace
// the cell in place, ordered by ascending neighbour count. Returns true on a split.
bool split_cell(const Graph& g, Partition& p, int x, Mask w) {
    const Mask cell = p.cell[x];
    std::array<Mask, kMaxVertices + 1> bucket{};
    int lo = kMaxVertices;
    int hi = 0;
    for (Mask rest = cell; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        int c = std::popcount(g.row(v) & w);
        bucket[c] |= bit(v);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    if (lo == hi) return false;
    int pieces = 0;
    for (int c = lo; c <= hi; ++c) pieces += bucket[c] != 0;
    for (int i = p.count - 1; i > x; --i) p.cell[i + pieces - 1] = p.cell[i];
    int at = x;
    for (int c = lo; c <= hi; ++c) {
        if (bucket[c]) p.cell[at++] = bucket[c];
    }
    p.count += pieces - 1;
    return true;
}

void refine(const Graph& g, Partition& p) {
    const int n = g.order();
    bool changed = true;
    while (changed && !p.discrete(n)) {
        changed = false;
        for (int s = 0; s < p.count; ++s) {
            const Mask w = p.cell[s];
            for (int x = 0; x < p.count; ++x) {
                if (std::popcount(p.cell[x]) > 1 && split_cell(g, p, x, w)) changed = true;
            }
        }
    }
}

int target_cell(const Partition& p) {
    int best = -1;
    int best_size = kMaxVertices + 1;
    for (int i = 0; i < p.count; ++i) {
        int size = std::popcount(p.cell[i]);
        if (size > 1 && size < best_size) {
            best = i;
            best_size = size;
        }
    }
    return best;
}

Partition individualize(const Partition& p, int x, int v) {
    Partition q;
    q.count = p.count + 1;
    for (int i = 0; i < x; ++i) q.cell[i] = p.cell[i];
    q.cell[x] = bit(v);
    q.cell[x + 1] = p.cell[x] & ~bit(v);
    for (int i = x + 1; i < p.count; ++i) q.cell[i + 1] = p.cell[i];
    return q;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
}

class LabelingSearch {
public:
    explicit LabelingSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run() {
        Partition root;
        if (n_ > 0) {
            root.cell[0] = low_bits(n_);
            root.count = 1;
        }
        visit(root);

        CanonicalLabeling out;
        out.order = best_lab_;
        out.position.assign(n_, 0);
        for (int i = 0; i < n_; ++i) out.position[best_lab_[i]] = i;
        out.graph = Graph(n_);
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                if ((best_rows_[i] >> j) & 1U) out.graph.add_edge(i, j);
            }
        }
        out.generators = std::move(generators_);
        return out;
    }

private:
    // Returns the level to unwind to after an automorphism was found, or -1.
    int visit(Partition p) {
        refine(g_, p);
        const int level = static_cast<int>(prefix_.size());
        if (p.discrete(n_)) return leaf(p);

        const int x = target_cell(p);
        std::vector<int> explored;
        for (Mask rest = p.cell[x]; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (!explored.empty() && equivalent_to_explored(v, explored)) continue;
            prefix_.push_back(v);
            int jump = visit(individualize(p, x, v));
            prefix_.pop_back();
            explored.push_back(v);
            if (jump >= 0 && jump < level) return jump;
        }
        return -1;
    }

    int leaf(const Partition& p) {
        std::vector<int> lab(n_);
        std::array<int, kMaxVertices> pos{};
        for (int i = 0; i < n_; ++i) {
            lab[i] = std::countr_zero(p.cell[i]);
            pos[lab[i]] = i;
        }
        Rows rows{};
        for (int i = 0; i < n_; ++i) {
            Mask row = 0;
            for (Mask rest = g_.row(lab[i]); rest; rest &= rest - 1) {
                row |= bit(pos[std::countr_zero(rest)]);
            }
            rows[i] = row;
        }

        if (first_lab_.empty()) {
            first_lab_ = best_lab_ = lab;
            first_rows_ = best_rows_ = rows;
            first_prefix_ = best_prefix_ = prefix_;
            return -1;
        }
        if (same_rows(rows, first_rows_)) {
            record_automorphism(first_lab_, lab);
            return common_prefix(first_prefix_);
        }
        int cmp = compare_rows(rows, best_rows_);
        if (cmp > 0) {
            best_lab_ = lab;
            best_rows_ = rows;
            best_prefix_ = prefix_;
            return -1;
        }
        if (cmp == 0) {
            record_automorphism(best_lab_, lab);
            return common_prefix(best_prefix_);
        }
        return -1;
    }

    bool same_rows(const Rows& a, const Rows& b) const {
        return std::equal(a.begin(), a.begin() + n_, b.begin());
    }

    int compare_rows(const Rows& a, const Rows& b) const {
        for (int i = 0; i < n_; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }

    int common_prefix(const std::vector<int>& other) const {
        std::size_t k = 0;
        while (k < prefix_.size() && k < other.size() && prefix_[k] == other[k]) ++k;
        return static_cast<int>(k);
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        Permutation gamma(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            gamma[from[i]] = to[i];
            identity = identity && from[i] == to[i];
        }
        if (!identity) generators_.push_back(std::move(gamma));
    }

    // Is v in the orbit of an explored sibling under automorphisms fixing the prefix?
    bool equivalent_to_explored(int v, const std::vector<int>& explored) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        bool any = false;
        for (const Permutation& gamma : generators_) {
            bool fixes = std::all_of(prefix_.begin(), prefix_.end(),
                                     [&](int u) { return gamma[u] == u; });
            if (!fixes) continue;
            any = true;
            for (int u = 0; u < n_; ++u) unite(parent, u, gamma[u]);
        }
        if (!any) return false;
        int root = find_root(parent, v);
        return std::any_of(explored.begin(), explored.end(),
                           [&](int e) { return find_root(parent, e) == root; });
    }

    const Graph& g_;
    int n_;
    std::vector<int> prefix_;
    std::vector<int> first_lab_;
    std::vector<int> best_lab_;
    std::vector<int> first_prefix_;
    std::vector<int> best_prefix_;
    Rows first_rows_{};
    Rows best_rows_{};
    std::vector<Permutation> generators_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return LabelingSearch(g).run(); }

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{to_graph6(canonical_labeling(g).graph)};
}

std::vector<int> orbit_representatives(int n, const std::vector<Permutation>& gens) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Permutation& gamma : gens) {
        for (int u = 0; u < n; ++u) unite(parent, u, gamma[u]);
    }
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = find_root(parent, v);
    return rep;
}

bool DedupStore::insert(const CanonicalForm& form) {
    std::lock_guard lock(mutex_);
    return forms_.insert(form.bytes).second;
}

bool DedupStore::contains(const CanonicalForm& form) const {
    std::lock_guard lock(mutex_);
    return forms_.count(form.bytes) != 0;
}

std::size_t DedupStore::size() const {
    std::lock_guard lock(mutex_);
    return forms_.size();
}

std::vector<CanonicalForm> DedupStore::sorted() const {
    std::lock_guard lock(mutex_);
    std::vector<CanonicalForm> out;
    out.reserve(forms_.size());
    for (const auto& f : forms_) out.push_back(CanonicalForm{f});
    return out;
}

void DedupStore::merge(const DedupStore& other) {
    if (&other == this) return;
    std::scoped_lock lock(mutex_, other.mutex_);
    forms_.insert(other.forms_.begin(), other.forms_.end());
}

} // namespace bei
