#ifndef SYZYGY_COMPLEX_HPP
#define SYZYGY_COMPLEX_HPP

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"

/**
 * Simplicial complexes stored by their facet lists, together with the
 * combinatorial operations on them: membership, face enumeration, links,
 * induced subcomplexes, Alexander duals, minimal nonfaces, cone detection
 * and order complexes of finite posets.
 *
 * Two degenerate complexes are kept distinct throughout:
 *   - the void complex, which has no faces at all (empty facet list), and
 *   - the irrelevant complex {emptyset}, whose single facet is the empty
 *     face.  Only the latter has reduced homology in degree -1.
 */
namespace syzygy {

namespace detail {

/** Invoke fn(Face) for every subset of `of` with exactly k vertices. */
template <class Fn>
inline void for_each_subset_of_size(Face of, int k, Fn&& fn)
{
    std::vector<int> verts = of.vertices();
    int m = static_cast<int>(verts.size());
    if (k < 0 || k > m)
        return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Face f;
        for (int i : idx)
            f = f.with(verts[static_cast<std::size_t>(i)]);
        fn(f);
        // advance the combination
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/** Drop every set that properly contains another set of the list. */
inline std::vector<Face> inclusion_minimal(std::vector<Face> sets)
{
    std::sort(sets.begin(), sets.end(),
              [](Face a, Face b) { return a.mask() < b.mask(); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Face> out;
    for (Face f : sets) {
        bool minimal = true;
        for (Face g : sets) {
            if (g != f && g.subset_of(f)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.push_back(f);
    }
    return out;
}

/** Drop every set that is properly contained in another set of the list. */
inline std::vector<Face> inclusion_maximal(std::vector<Face> sets)
{
    std::sort(sets.begin(), sets.end(),
              [](Face a, Face b) { return a.mask() < b.mask(); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Face> out;
    for (Face f : sets) {
        bool maximal = true;
        for (Face g : sets) {
            if (g != f && f.subset_of(g)) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(f);
    }
    return out;
}

}  // namespace detail

class SimplicialComplex {
  public:
    /** The complex with no faces at all. */
    static SimplicialComplex void_complex(VertexSet ground)
    {
        return SimplicialComplex(std::move(ground), {});
    }

    /** The complex whose only face is the empty face. */
    static SimplicialComplex irrelevant(VertexSet ground)
    {
        return SimplicialComplex(std::move(ground), {Face()});
    }

    static SimplicialComplex full_simplex(VertexSet ground)
    {
        Face all = ground.full();
        return SimplicialComplex(std::move(ground), {all});
    }

    /**
     * Builds a complex from an arbitrary list of generating faces: the list
     * is deduplicated, reduced to its inclusion-maximal members and sorted
     * in face-lex order.  An empty list yields the void complex.
     */
    static SimplicialComplex from_facets(VertexSet ground, std::vector<Face> faces)
    {
        Face all = ground.full();
        for (Face f : faces) {
            if (!f.subset_of(all))
                throw std::invalid_argument("facet uses a vertex outside the ground set");
        }
        faces = detail::inclusion_maximal(std::move(faces));
        std::sort(faces.begin(), faces.end(), FaceLexLess{});
        return SimplicialComplex(std::move(ground), std::move(faces));
    }

    const VertexSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    /** Facets in face-lex order; empty for the void complex. */
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }

    /** Dimension; -1 for the irrelevant complex, -2 as void sentinel. */
    int dim() const
    {
        if (is_void())
            return -2;
        int d = -1;
        for (Face f : facets_)
            d = std::max(d, f.size() - 1);
        return d;
    }

    /** Face membership: s is a face iff it lies inside some facet. */
    bool membership(Face s) const
    {
        for (Face f : facets_) {
            if (s.subset_of(f))
                return true;
        }
        return false;
    }

    /**
     * All faces with exactly d+1 vertices, in face-lex order.  d = -1 yields
     * the empty face for every nonvoid complex and nothing for the void one.
     */
    std::vector<Face> faces_of_dim(int d) const
    {
        if (is_void() || d < -1)
            return {};
        if (d == -1)
            return {Face()};
        std::set<std::uint64_t> seen;
        std::vector<Face> out;
        for (Face f : facets_) {
            detail::for_each_subset_of_size(f, d + 1, [&](Face s) {
                if (seen.insert(s.mask()).second)
                    out.push_back(s);
            });
        }
        std::sort(out.begin(), out.end(), FaceLexLess{});
        return out;
    }

    /** Union of all facets: the vertices that actually occur in the complex. */
    Face vertex_support() const
    {
        Face u;
        for (Face f : facets_)
            u = u | f;
        return u;
    }

    bool operator==(const SimplicialComplex& other) const
    {
        return ground_ == other.ground_ && facets_ == other.facets_;
    }
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

  private:
    SimplicialComplex(VertexSet ground, std::vector<Face> facets)
        : ground_(std::move(ground)), facets_(std::move(facets))
    {
    }

    VertexSet ground_;
    std::vector<Face> facets_;
};

/**
 * Link of a face A: all faces G disjoint from A with G u A in K.  The ground
 * set is unchanged.  A must be a face of K.
 */
inline SimplicialComplex link(const SimplicialComplex& K, Face A)
{
    if (!K.membership(A))
        throw std::invalid_argument("link: A is not a face of the complex");
    std::vector<Face> gens;
    for (Face f : K.facets()) {
        if (A.subset_of(f))
            gens.push_back(f.minus(A));
    }
    return SimplicialComplex::from_facets(K.ground(), std::move(gens));
}

/**
 * Induced subcomplex on the vertex subset C: all faces of K contained in C.
 * The result lives on the restricted ground set (names kept, indices
 * compacted in ascending original order).
 */
inline SimplicialComplex induced(const SimplicialComplex& K, Face C)
{
    if (!C.subset_of(K.ground().full()))
        throw std::invalid_argument("induced: C is not a subset of the ground set");
    std::vector<int> verts = C.vertices();
    std::vector<std::string> names;
    names.reserve(verts.size());
    std::vector<int> new_index(static_cast<std::size_t>(K.n()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        names.push_back(K.ground().name(verts[i]));
        new_index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    }
    VertexSet sub_ground{std::move(names)};
    if (K.is_void())
        return SimplicialComplex::void_complex(std::move(sub_ground));
    std::vector<Face> gens;
    for (Face f : K.facets()) {
        Face cut = f & C;
        Face remapped;
        for (int v : cut.vertices())
            remapped = remapped.with(new_index[static_cast<std::size_t>(v)]);
        gens.push_back(remapped);
    }
    return SimplicialComplex::from_facets(std::move(sub_ground), std::move(gens));
}

/**
 * Inclusion-minimal subsets of the ground set that are not faces of K, in
 * face-lex order.  Computed as the minimal transversals of the facet
 * complements (a set misses every facet exactly when it hits every facet
 * complement).  The void complex has the empty face as its only minimal
 * nonface; the full simplex has none.
 */
namespace detail {

/**
 * Inclusion-minimal sets hitting every member of `sets` (Berge's sequential
 * algorithm).  With no sets the empty face is the unique answer; if any set
 * is empty there is no transversal at all.  Result is in face-lex order.
 */
inline std::vector<Face> minimal_transversals(const std::vector<Face>& sets)
{
    std::vector<Face> transversals = {Face()};
    for (Face e : sets) {
        std::vector<Face> next;
        for (Face t : transversals) {
            if (t.intersects(e)) {
                next.push_back(t);
            } else {
                for (int v : e.vertices())
                    next.push_back(t.with(v));
            }
        }
        transversals = detail::inclusion_minimal(std::move(next));
    }
    std::sort(transversals.begin(), transversals.end(), FaceLexLess{});
    return transversals;
}

}  // namespace detail

inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& K)
{
    Face all = K.ground().full();
    std::vector<Face> edges;
    edges.reserve(K.facets().size());
    for (Face f : K.facets())
        edges.push_back(all.minus(f));
    return detail::minimal_transversals(edges);
}

/**
 * Alexander dual: the complex whose faces are the complements of the
 * nonfaces of K, so its facets are the complements of the minimal nonfaces.
 * The dual of the full simplex is void and vice versa; the operation is an
 * involution on every complex over a fixed ground set.
 */
inline SimplicialComplex alexander_dual(const SimplicialComplex& K)
{
    Face all = K.ground().full();
    std::vector<Face> gens;
    for (Face nf : minimal_nonfaces(K))
        gens.push_back(all.minus(nf));
    return SimplicialComplex::from_facets(K.ground(), std::move(gens));
}

/**
 * If every facet shares a common vertex the complex is a cone and all its
 * reduced homology vanishes.  Returns the smallest such apex, or nullopt.
 * Undefined for the void complex (error); the irrelevant complex is not a
 * cone.
 */
inline std::optional<int> is_cone(const SimplicialComplex& K)
{
    if (K.is_void())
        throw std::invalid_argument("is_cone: void complex");
    Face common = K.ground().full();
    for (Face f : K.facets())
        common = common & f;
    if (common.empty())
        return std::nullopt;
    return common.smallest();
}

/**
 * Connected components of the occupied vertices, each as a vertex set, in
 * face-lex order.  Vertices outside every facet belong to no component.
 */
inline std::vector<Face> components(const SimplicialComplex& K)
{
    std::vector<int> parent(static_cast<std::size_t>(K.n()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (Face f : K.facets()) {
        std::vector<int> vs = f.vertices();
        for (std::size_t i = 1; i < vs.size(); ++i)
            unite(vs[0], vs[i]);
    }
    std::map<int, Face> comp;
    for (int v : K.vertex_support().vertices())
        comp[find(v)] = comp[find(v)].with(v);
    std::vector<Face> out;
    out.reserve(comp.size());
    for (auto& [root, face] : comp)
        out.push_back(face);
    std::sort(out.begin(), out.end(), FaceLexLess{});
    return out;
}

inline bool is_connected(const SimplicialComplex& K)
{
    return components(K).size() <= 1;
}

/**
 * Relabels vertices: old index i becomes perm[i].  perm must be a
 * permutation of 0..n-1.  Names travel with their vertices.
 */
inline SimplicialComplex relabel_vertices(const SimplicialComplex& K,
                                          const std::vector<int>& perm)
{
    int n = K.n();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel_vertices: permutation size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("relabel_vertices: not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        names[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = K.ground().name(i);
    std::vector<Face> gens;
    gens.reserve(K.facets().size());
    for (Face f : K.facets()) {
        Face g;
        for (int v : f.vertices())
            g = g.with(perm[static_cast<std::size_t>(v)]);
        gens.push_back(g);
    }
    return SimplicialComplex::from_facets(VertexSet(std::move(names)), std::move(gens));
}

/**
 * A finite poset given by labelled elements and a strict order matrix.
 * less[i][j] means element i strictly precedes element j.
 */
struct Poset {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> less;

    int size() const { return static_cast<int>(labels.size()); }

    /** Throws std::invalid_argument unless `less` is a strict partial order. */
    void validate() const
    {
        int m = size();
        if (static_cast<int>(less.size()) != m)
            throw std::invalid_argument("poset: relation size mismatch");
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(less[static_cast<std::size_t>(i)].size()) != m)
                throw std::invalid_argument("poset: relation size mismatch");
            if (less[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])
                throw std::invalid_argument("poset: relation is not irreflexive");
        }
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                    less[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                    throw std::invalid_argument("poset: relation is not antisymmetric");
                if (!less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    continue;
                for (int k = 0; k < m; ++k) {
                    if (less[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
                        !less[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                        throw std::invalid_argument("poset: relation is not transitive");
                }
            }
        }
    }
};

/**
 * Order complex of a poset: vertices are the elements, faces are the chains,
 * facets are the maximal chains.  The empty poset yields the irrelevant
 * complex (the empty chain is still a face).
 */
inline SimplicialComplex order_complex(const Poset& P)
{
    P.validate();
    VertexSet ground{P.labels};
    int m = P.size();
    if (m == 0)
        return SimplicialComplex::irrelevant(std::move(ground));

    auto lt = [&](int i, int j) {
        return P.less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    // covers[i]: the j with i < j and nothing strictly between
    std::vector<std::vector<int>> covers(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (!lt(i, j))
                continue;
            bool cover = true;
            for (int k = 0; k < m; ++k) {
                if (lt(i, k) && lt(k, j)) {
                    cover = false;
                    break;
                }
            }
            if (cover)
                covers[static_cast<std::size_t>(i)].push_back(j);
        }
    }

    std::vector<Face> chains;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int v) -> void {
        stack.push_back(v);
        if (covers[static_cast<std::size_t>(v)].empty()) {
            chains.push_back(Face::from_vertices(stack));
        } else {
            for (int w : covers[static_cast<std::size_t>(v)])
                self(self, w);
        }
        stack.pop_back();
    };
    for (int i = 0; i < m; ++i) {
        bool minimal = true;
        for (int j = 0; j < m; ++j) {
            if (lt(j, i)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            dfs(dfs, i);
    }
    return SimplicialComplex::from_facets(std::move(ground), std::move(chains));
}

}  // namespace syzygy

#endif  // SYZYGY_COMPLEX_HPP
