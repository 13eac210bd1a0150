#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <syzygy/complex.hpp>

#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using namespace syzygy;
using testsupport::oracle_alexander_dual_facets;
using testsupport::oracle_faces_of_dim;
using testsupport::oracle_is_face;
using testsupport::oracle_minimal_nonfaces;

namespace {

Face face_of(const VertexSet& vs, const std::string& letters)
{
    Face f;
    for (char c : letters) {
        auto idx = vs.index_of(std::string(1, c));
        REQUIRE(idx.has_value());
        f = f.with(*idx);
    }
    return f;
}

/** The running example: a two-apex suspension of a hollow triangle plus an edge. */
SimplicialComplex run_example_complex()
{
    VertexSet vs = VertexSet::lettered("abcde");
    std::vector<Face> facets = {
        face_of(vs, "acd"), face_of(vs, "ace"), face_of(vs, "ade"),
        face_of(vs, "bcd"), face_of(vs, "bce"), face_of(vs, "bde"),
        face_of(vs, "ab"),
    };
    return SimplicialComplex::from_facets(vs, facets);
}

/** Its Alexander dual: one edge and a hollow triangle. */
SimplicialComplex four_edge_complex()
{
    VertexSet vs = VertexSet::lettered("abcde");
    std::vector<Face> facets = {face_of(vs, "ab"), face_of(vs, "cd"),
                                face_of(vs, "ce"), face_of(vs, "de")};
    return SimplicialComplex::from_facets(vs, facets);
}

SimplicialComplex pentagon()
{
    VertexSet vs = VertexSet::numbered(5);
    std::vector<Face> facets = {Face::of({0, 1}), Face::of({1, 2}), Face::of({2, 3}),
                                Face::of({3, 4}), Face::of({0, 4})};
    return SimplicialComplex::from_facets(vs, facets);
}

}  // namespace

TEST_CASE("face lex order", "[combinatorics]")
{
    Face e;
    Face a01 = Face::of({0, 1});
    Face a012 = Face::of({0, 1, 2});
    Face a02 = Face::of({0, 2});
    Face a1 = Face::of({1});
    REQUIRE(face_lex_less(e, a01));
    REQUIRE(face_lex_less(a01, a012));
    REQUIRE(face_lex_less(a012, a02));
    REQUIRE(face_lex_less(a01, a1));
    REQUIRE_FALSE(face_lex_less(a1, a01));
    REQUIRE_FALSE(face_lex_less(a02, a012));

    // strict total order on random faces
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Face a{testsupport::pick(rng, 1u << 6)};
        Face b{testsupport::pick(rng, 1u << 6)};
        Face c{testsupport::pick(rng, 1u << 6)};
        REQUIRE_FALSE(face_lex_less(a, a));
        if (a != b)
            REQUIRE(face_lex_less(a, b) != face_lex_less(b, a));
        if (face_lex_less(a, b) && face_lex_less(b, c))
            REQUIRE(face_lex_less(a, c));
    }
}

TEST_CASE("void and irrelevant complexes are distinct", "[combinatorics]")
{
    VertexSet vs = VertexSet::lettered("ab");
    SimplicialComplex v = SimplicialComplex::void_complex(vs);
    SimplicialComplex irr = SimplicialComplex::irrelevant(vs);
    REQUIRE(v.is_void());
    REQUIRE_FALSE(v.is_irrelevant());
    REQUIRE(irr.is_irrelevant());
    REQUIRE_FALSE(irr.is_void());
    REQUIRE(v != irr);
    REQUIRE_FALSE(v.membership(Face()));
    REQUIRE(irr.membership(Face()));
    REQUIRE(irr.dim() == -1);
    REQUIRE(v.faces_of_dim(-1).empty());
    REQUIRE(irr.faces_of_dim(-1) == std::vector<Face>{Face()});
}

TEST_CASE("from_facets canonicalizes", "[combinatorics]")
{
    VertexSet vs = VertexSet::lettered("abcd");
    // dominated faces and duplicates disappear; facets come out face-lex sorted
    std::vector<Face> gens = {face_of(vs, "cd"), face_of(vs, "ab"), face_of(vs, "a"),
                              face_of(vs, "ab"), Face()};
    SimplicialComplex K = SimplicialComplex::from_facets(vs, gens);
    std::vector<Face> expect = {face_of(vs, "ab"), face_of(vs, "cd")};
    REQUIRE(K.facets() == expect);
    REQUIRE(K.dim() == 1);
    REQUIRE_THROWS_AS(
        SimplicialComplex::from_facets(VertexSet::lettered("ab"), {Face::of({5})}),
        std::invalid_argument);
}

TEST_CASE("membership and face enumeration", "[combinatorics]")
{
    SimplicialComplex K = four_edge_complex();
    const VertexSet& vs = K.ground();
    REQUIRE(K.membership(face_of(vs, "ab")));
    REQUIRE(K.membership(face_of(vs, "e")));
    REQUIRE(K.membership(Face()));
    REQUIRE_FALSE(K.membership(face_of(vs, "abc")));
    REQUIRE_FALSE(K.membership(face_of(vs, "ac")));

    std::vector<Face> verts = K.faces_of_dim(0);
    REQUIRE(verts.size() == 5);
    std::vector<Face> edges = K.faces_of_dim(1);
    std::vector<Face> expect = {face_of(vs, "ab"), face_of(vs, "cd"), face_of(vs, "ce"),
                                face_of(vs, "de")};
    REQUIRE(edges == expect);
    REQUIRE(K.faces_of_dim(2).empty());
}

TEST_CASE("link examples", "[combinatorics]")
{
    SimplicialComplex K = four_edge_complex();
    const VertexSet& vs = K.ground();

    SimplicialComplex lk_c = link(K, face_of(vs, "c"));
    std::vector<Face> expect = {face_of(vs, "d"), face_of(vs, "e")};
    REQUIRE(lk_c.facets() == expect);
    REQUIRE(lk_c.ground() == vs);

    REQUIRE(link(K, Face()) == K);
    REQUIRE(link(K, face_of(vs, "ab")).is_irrelevant());
    REQUIRE_THROWS_AS(link(K, face_of(vs, "ac")), std::invalid_argument);
}

TEST_CASE("induced subcomplex examples", "[combinatorics]")
{
    SimplicialComplex K = four_edge_complex();
    const VertexSet& vs = K.ground();

    SimplicialComplex sub = induced(K, face_of(vs, "bcde"));
    REQUIRE(sub.n() == 4);
    REQUIRE(sub.ground().name(0) == "b");
    const VertexSet& svs = sub.ground();
    std::vector<Face> expect = {face_of(svs, "b"), face_of(svs, "cd"), face_of(svs, "ce"),
                                face_of(svs, "de")};
    REQUIRE(sub.facets() == expect);

    SimplicialComplex empty_sub = induced(K, Face());
    REQUIRE(empty_sub.n() == 0);
    REQUIRE(empty_sub.is_irrelevant());

    REQUIRE(induced(SimplicialComplex::void_complex(vs), face_of(vs, "ab")).is_void());
}

TEST_CASE("minimal nonfaces of the four-edge complex", "[combinatorics]")
{
    SimplicialComplex K = four_edge_complex();
    const VertexSet& vs = K.ground();
    std::vector<Face> expect = {face_of(vs, "ac"), face_of(vs, "ad"), face_of(vs, "ae"),
                                face_of(vs, "bc"), face_of(vs, "bd"), face_of(vs, "be"),
                                face_of(vs, "cde")};
    REQUIRE(minimal_nonfaces(K) == expect);
}

TEST_CASE("minimal nonfaces of the pentagon are its chords", "[combinatorics]")
{
    SimplicialComplex K = pentagon();
    std::vector<Face> expect = {Face::of({0, 2}), Face::of({0, 3}), Face::of({1, 3}),
                                Face::of({1, 4}), Face::of({2, 4})};
    REQUIRE(minimal_nonfaces(K) == expect);
}

TEST_CASE("minimal nonfaces of degenerate complexes", "[combinatorics]")
{
    VertexSet vs = VertexSet::lettered("abc");
    REQUIRE(minimal_nonfaces(SimplicialComplex::void_complex(vs)) ==
            std::vector<Face>{Face()});
    REQUIRE(minimal_nonfaces(SimplicialComplex::full_simplex(vs)).empty());
    // unused ground vertices show up as singleton nonfaces
    SimplicialComplex K = SimplicialComplex::from_facets(vs, {face_of(vs, "ab")});
    std::vector<Face> expect = {face_of(vs, "c")};
    REQUIRE(minimal_nonfaces(K) == expect);
}

TEST_CASE("alexander dual of the running example", "[combinatorics]")
{
    SimplicialComplex G = run_example_complex();
    SimplicialComplex Gd = alexander_dual(G);
    REQUIRE(Gd == four_edge_complex());
    REQUIRE(alexander_dual(Gd) == G);
}

TEST_CASE("alexander dual degenerate cases", "[combinatorics]")
{
    VertexSet vs = VertexSet::lettered("abc");
    REQUIRE(alexander_dual(SimplicialComplex::full_simplex(vs)).is_void());
    REQUIRE(alexander_dual(SimplicialComplex::void_complex(vs)) ==
            SimplicialComplex::full_simplex(vs));
    // dual of {emptyset} is the simplex boundary
    SimplicialComplex bd = alexander_dual(SimplicialComplex::irrelevant(vs));
    std::vector<Face> expect = {face_of(vs, "ab"), face_of(vs, "ac"), face_of(vs, "bc")};
    REQUIRE(bd.facets() == expect);
    REQUIRE(alexander_dual(bd).is_irrelevant());
}

TEST_CASE("cone detection", "[combinatorics]")
{
    VertexSet vs = VertexSet::lettered("abcd");
    SimplicialComplex star =
        SimplicialComplex::from_facets(vs, {face_of(vs, "ab"), face_of(vs, "ac"),
                                            face_of(vs, "ad")});
    REQUIRE(is_cone(star) == std::optional<int>{0});
    REQUIRE_FALSE(is_cone(four_edge_complex()).has_value());
    REQUIRE_FALSE(is_cone(SimplicialComplex::irrelevant(vs)).has_value());
    REQUIRE_THROWS_AS(is_cone(SimplicialComplex::void_complex(vs)), std::invalid_argument);
}

TEST_CASE("components", "[combinatorics]")
{
    SimplicialComplex K = four_edge_complex();
    const VertexSet& vs = K.ground();
    std::vector<Face> comps = components(K);
    std::vector<Face> expect = {face_of(vs, "ab"), face_of(vs, "cde")};
    REQUIRE(comps == expect);
    REQUIRE_FALSE(is_connected(K));
    REQUIRE(is_connected(run_example_complex()));
}

TEST_CASE("order complex examples", "[combinatorics]")
{
    // a chain makes a simplex
    Poset chain{{"p", "q", "r"},
                {{false, true, true}, {false, false, true}, {false, false, false}}};
    SimplicialComplex sc = order_complex(chain);
    REQUIRE(sc.facets() == std::vector<Face>{Face::of({0, 1, 2})});

    // an antichain makes isolated points
    Poset anti{{"p", "q", "r"},
               {{false, false, false}, {false, false, false}, {false, false, false}}};
    REQUIRE(order_complex(anti).faces_of_dim(0).size() == 3);
    REQUIRE(order_complex(anti).dim() == 0);

    // the empty poset makes the irrelevant complex
    REQUIRE(order_complex(Poset{{}, {}}).is_irrelevant());

    // diamond: two maximal chains through incomparable middles
    Poset diamond{{"0", "x", "y", "1"},
                  {{false, true, true, true},
                   {false, false, false, true},
                   {false, false, false, true},
                   {false, false, false, false}}};
    SimplicialComplex dc = order_complex(diamond);
    std::vector<Face> expect = {Face::of({0, 1, 3}), Face::of({0, 2, 3})};
    REQUIRE(dc.facets() == expect);

    // rejects a non-transitive relation
    Poset bad{{"p", "q", "r"},
              {{false, true, false}, {false, false, true}, {false, false, false}}};
    REQUIRE_THROWS_AS(order_complex(bad), std::invalid_argument);
}

TEST_CASE("random complexes agree with brute-force oracles", "[combinatorics][property]")
{
    std::mt19937_64 rng(20240815);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(testsupport::pick(rng, 4));  // 3..6
        SimplicialComplex K = testsupport::random_complex(rng, n, 6);

        // membership against the raw definition
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            REQUIRE(K.membership(Face{m}) == oracle_is_face(K.facets(), Face{m}));
        }
        // face enumeration per dimension
        for (int d = -1; d <= n; ++d) {
            REQUIRE(K.faces_of_dim(d) == oracle_faces_of_dim(n, K.facets(), d));
        }
        // minimal nonfaces and dual
        REQUIRE(minimal_nonfaces(K) == oracle_minimal_nonfaces(n, K.facets()));
        REQUIRE(alexander_dual(K).facets() == oracle_alexander_dual_facets(n, K.facets()));
        // duality is an involution
        REQUIRE(alexander_dual(alexander_dual(K)) == K);

        // minimal nonfaces form an antichain of nonfaces
        std::vector<Face> mnf = minimal_nonfaces(K);
        for (std::size_t i = 0; i < mnf.size(); ++i) {
            REQUIRE_FALSE(K.membership(mnf[i]));
            for (std::size_t j = 0; j < mnf.size(); ++j) {
                if (i != j)
                    REQUIRE_FALSE(mnf[i].subset_of(mnf[j]));
            }
        }
    }
}

TEST_CASE("link and induced satisfy their defining property", "[combinatorics][property]")
{
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(testsupport::pick(rng, 3));  // 3..5
        SimplicialComplex K = testsupport::random_complex(rng, n, 5);

        // pick a face of K
        std::vector<Face> candidates;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            if (K.membership(Face{m}))
                candidates.push_back(Face{m});
        }
        Face A = candidates[testsupport::pick(rng, candidates.size())];
        SimplicialComplex lk = link(K, A);
        REQUIRE(lk.ground() == K.ground());
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            Face G{m};
            bool in_link = !G.intersects(A) && K.membership(G | A);
            REQUIRE(lk.membership(G) == in_link);
        }

        // induced subcomplex: faces of K inside C, renamed
        Face C{testsupport::pick(rng, std::uint64_t{1} << n)};
        SimplicialComplex sub = induced(K, C);
        std::vector<int> cv = C.vertices();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << cv.size()); ++m) {
            Face local{m};
            Face global;
            for (int k : local.vertices())
                global = global.with(cv[static_cast<std::size_t>(k)]);
            REQUIRE(sub.membership(local) == K.membership(global));
        }
    }
}

TEST_CASE("relabeling preserves structure counts", "[combinatorics][property]")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(testsupport::pick(rng, 3));
        SimplicialComplex K = testsupport::random_complex(rng, n, 6);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(testsupport::pick(rng, static_cast<std::uint64_t>(i + 1)));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
        SimplicialComplex R = relabel_vertices(K, perm);
        REQUIRE(R.facets().size() == K.facets().size());
        REQUIRE(R.dim() == K.dim());
        REQUIRE(minimal_nonfaces(R).size() == minimal_nonfaces(K).size());
        for (int d = -1; d <= K.dim(); ++d)
            REQUIRE(R.faces_of_dim(d).size() == K.faces_of_dim(d).size());
    }
}
