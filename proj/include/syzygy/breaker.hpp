#ifndef SYZYGY_BREAKER_HPP
#define SYZYGY_BREAKER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "complex.hpp"
#include "field.hpp"
#include "homology.hpp"
#include "monomial.hpp"
#include "parallel.hpp"

/**
 * Constructive cycle breaking.
 *
 * A non-bounding top-dimensional cycle can be pushed into the link of any
 * face of its support, with explicit signs, and stays non-bounding there
 * (descend).  Building on that, a complex with H~_{a+b-2} != 0 can be split
 * into a pair of faces (F, G) whose links carry homology in degrees a-2 and
 * b-2 (break_on_links), and dually a complex with homology in degree
 * n-a-b-1 can be covered by vertex sets (C, D) whose induced subcomplexes
 * carry homology in degrees |C|-a-1 and |D|-b-1 (break_induced, plus the
 * closed-form constructions break_disconnected / break_graph_cycle).
 *
 * Every certificate emitted here is re-verified through the homology
 * engine before it is returned; the verifiers are independent and never
 * trust the construction.  search_* enumerate certificates, or complement
 * pairs in the lcm lattice, and flag splits where none exists.
 */
namespace syzygy {

// --------------------------------------------------------------------------
// serializable chains

/** A chain with field-agnostic string coefficients, for certificates. */
struct SparseChain {
    int dim = 0;
    std::vector<std::pair<Face, std::string>> terms;  // face-lex ascending

    bool operator==(const SparseChain&) const = default;
};

template <class Fld>
SparseChain to_sparse(const Fld& K, const Chain<Fld>& c)
{
    SparseChain out;
    out.dim = c.dim;
    out.terms.reserve(c.terms.size());
    for (const auto& [f, a] : c.terms)
        out.terms.emplace_back(f, K.str(a));
    return out;
}

/** Inverse of to_sparse; rejects duplicate faces and zero coefficients. */
template <class Fld>
Chain<Fld> from_sparse(const Fld& K, const SparseChain& s)
{
    Chain<Fld> out;
    out.dim = s.dim;
    for (const auto& [f, lit] : s.terms) {
        typename Fld::Element a = K.parse(lit);
        if (K.is_zero(a))
            throw parse_error("chain literal has a zero coefficient");
        if (!out.terms.emplace(f, std::move(a)).second)
            throw parse_error("chain literal repeats a face");
    }
    return out;
}

// --------------------------------------------------------------------------
// link descent

/** A cycle pushed into the link of a face of its support. */
template <class Fld>
struct LinkDescent {
    Face source;                             // the face A that was removed
    int support_count = 0;                   // support facets containing A
    Chain<Fld> sigma;                        // Sigma_A, a cycle in link(K, A)
    std::map<Face, int, FaceLexLess> signs;  // support facet F_j -> epsilon_j
};

/**
 * Restrict `cycle` to the support facets containing A and strip A from
 * them: Sigma_A = sum epsilon_j a_j (F_j minus A).  The sign epsilon_j is
 * the parity of the permutation that moves the A-vertices of F_j to the
 * front, i.e. sum over v in A of (rank of v in F_j) - (rank of v in A).
 * The result is always a cycle in link(K, A) of dimension dim - |A|;
 * for |A| = dim + 1 it is a chain on the empty face.
 */
template <class Fld>
LinkDescent<Fld> descend(const Fld& fld, const SimplicialComplex& K,
                         const Chain<Fld>& cycle, Face A)
{
    validate_chain(fld, K, cycle);
    if (!is_cycle(fld, cycle))
        throw std::invalid_argument("descend: chain is not a cycle");
    bool in_support = false;
    for (const auto& [f, a] : cycle.terms)
        in_support = in_support || A.subset_of(f);
    if (!in_support)
        throw std::invalid_argument("descend: face is not in the support complex");

    LinkDescent<Fld> out;
    out.source = A;
    out.sigma.dim = cycle.dim - A.size();
    for (const auto& [f, a] : cycle.terms) {
        if (!A.subset_of(f))
            continue;
        int parity = 0;
        for (int v : A.vertices())
            parity += f.rank_of(v) - A.rank_of(v);
        const int eps = (parity % 2 == 0) ? 1 : -1;
        out.signs.emplace(f, eps);
        out.sigma.terms.emplace(f.minus(A), eps == 1 ? a : fld.neg(a));
        ++out.support_count;
    }

    SimplicialComplex lk = link(K, A);
    validate_chain(fld, lk, out.sigma);
    if (!is_cycle(fld, out.sigma))
        throw verification_error("descend: descended chain is not a cycle");
    return out;
}

/**
 * The intersection of all facets of K containing A.  When A is a face of
 * the support complex of a non-bounding top-dimensional cycle this equals
 * A; the equality is asserted, so a failure signals a precondition
 * violation or an implementation bug.
 */
template <class Fld>
Face facet_intersection_check(const Fld& fld, const SimplicialComplex& K,
                              const Chain<Fld>& cycle, Face A)
{
    validate_chain(fld, K, cycle);
    if (!is_cycle(fld, cycle))
        throw std::invalid_argument("facet_intersection_check: chain is not a cycle");
    bool in_support = false;
    for (const auto& [f, a] : cycle.terms)
        in_support = in_support || A.subset_of(f);
    if (!in_support)
        throw std::invalid_argument(
            "facet_intersection_check: face is not in the support complex");

    Face meet = K.ground().full();
    for (Face f : K.facets()) {
        if (A.subset_of(f))
            meet = meet & f;
    }
    if (meet != A)
        throw verification_error(
            "facet_intersection_check: intersection of the enclosing facets "
            "exceeds the face");
    return meet;
}

// --------------------------------------------------------------------------
// certificates

/** A verified answer to the link-splitting question on a complex. */
struct BreakCertificateLink {
    int a = 0, b = 0;
    Face F, G;
    std::vector<int> A, B;  // indices into facets(): F resp. G are their meets
    int witness_f = 0;      // dim H~_{a-2}(link(K, F))
    int witness_g = 0;      // dim H~_{b-2}(link(K, G))
    std::optional<SparseChain> sigma_f, sigma_g;  // non-bounding witnesses
};

/** A verified answer to the induced-subcomplex question on a complex. */
struct BreakCertificateInduced {
    int a = 0, b = 0;
    Face C, D;
    int witness_c = 0;  // dim H~_{|C|-a-1}(K induced on C)
    int witness_d = 0;  // dim H~_{|D|-b-1}(K induced on D)
};

/**
 * Independent re-check of a link certificate: F and G are the meets of the
 * listed facets, they are disjoint, their union is a nonface, both links
 * carry the claimed homology, and any attached chains are non-bounding
 * cycles of the right dimension in those links.  Never throws.
 */
inline bool verify_certificate_link(const SimplicialComplex& K,
                                    const BreakCertificateLink& cert,
                                    const FieldSpec& spec)
{
    try {
        if (cert.a < 1 || cert.b < 1)
            return false;
        if (cert.A.empty() || cert.B.empty())
            return false;
        const auto& facets = K.facets();
        const int q = static_cast<int>(facets.size());
        Face f_meet = K.ground().full();
        for (int j : cert.A) {
            if (j < 0 || j >= q)
                return false;
            f_meet = f_meet & facets[static_cast<std::size_t>(j)];
        }
        Face g_meet = K.ground().full();
        for (int j : cert.B) {
            if (j < 0 || j >= q)
                return false;
            g_meet = g_meet & facets[static_cast<std::size_t>(j)];
        }
        if (f_meet != cert.F || g_meet != cert.G)
            return false;
        if (cert.F.intersects(cert.G))
            return false;
        if (K.membership(cert.F | cert.G))
            return false;

        SimplicialComplex lk_f = link(K, cert.F);
        SimplicialComplex lk_g = link(K, cert.G);
        if (reduced_homology_dim(lk_f, cert.a - 2, spec) != cert.witness_f ||
            reduced_homology_dim(lk_g, cert.b - 2, spec) != cert.witness_g)
            return false;
        if (cert.witness_f == 0 || cert.witness_g == 0)
            return false;

        auto chain_ok = [&](const SparseChain& sc, const SimplicialComplex& lk,
                            int want_dim) {
            return with_field(spec, [&](auto fld) {
                auto ch = from_sparse(fld, sc);
                if (ch.dim != want_dim || ch.is_zero())
                    return false;
                validate_chain(fld, lk, ch);
                return is_cycle(fld, ch) && !is_boundary(fld, lk, ch);
            });
        };
        if (cert.sigma_f && !chain_ok(*cert.sigma_f, lk_f, cert.a - 2))
            return false;
        if (cert.sigma_g && !chain_ok(*cert.sigma_g, lk_g, cert.b - 2))
            return false;
        return true;
    } catch (...) {
        return false;
    }
}

/** Independent re-check of an induced certificate.  Never throws. */
inline bool verify_certificate_induced(const SimplicialComplex& K,
                                       const BreakCertificateInduced& cert,
                                       const FieldSpec& spec)
{
    try {
        if (cert.a < 1 || cert.b < 1)
            return false;
        if (cert.C.empty() || cert.D.empty())
            return false;
        if ((cert.C | cert.D) != K.ground().full())
            return false;
        if (!K.membership(cert.C & cert.D))
            return false;
        int hc = reduced_homology_dim(induced(K, cert.C),
                                      cert.C.size() - cert.a - 1, spec);
        int hd = reduced_homology_dim(induced(K, cert.D),
                                      cert.D.size() - cert.b - 1, spec);
        return hc != 0 && hd != 0 && hc == cert.witness_c && hd == cert.witness_d;
    } catch (...) {
        return false;
    }
}

namespace detail {

/**
 * Every intersection of a nonempty set of facets, face-lex sorted.  These
 * are exactly the candidate faces for the link-splitting question.
 */
inline std::vector<Face> facet_intersection_lattice(const SimplicialComplex& K)
{
    std::set<Face, FaceLexLess> elems(K.facets().begin(), K.facets().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Face> snapshot(elems.begin(), elems.end());
        for (Face e : snapshot) {
            for (Face f : K.facets()) {
                if (elems.insert(e & f).second)
                    grew = true;
            }
        }
        if (elems.size() > (std::size_t{1} << 20))
            throw resource_limit_error(
                "facet intersection lattice exceeds 2^20 elements");
    }
    return {elems.begin(), elems.end()};
}

/** Fills A/B and the witnesses, then verifies; the single exit point. */
template <class Fld>
BreakCertificateLink finish_link_certificate(
    const Fld& fld, const SimplicialComplex& K, int a, int b, Face F, Face G,
    std::type_identity_t<std::optional<Chain<Fld>>> sigma_f,
    std::type_identity_t<std::optional<Chain<Fld>>> sigma_g)
{
    BreakCertificateLink cert;
    cert.a = a;
    cert.b = b;
    cert.F = F;
    cert.G = G;
    const auto& facets = K.facets();
    for (int j = 0; j < static_cast<int>(facets.size()); ++j) {
        if (F.subset_of(facets[static_cast<std::size_t>(j)]))
            cert.A.push_back(j);
        if (G.subset_of(facets[static_cast<std::size_t>(j)]))
            cert.B.push_back(j);
    }
    cert.witness_f = reduced_homology_dim(fld, link(K, F), a - 2);
    cert.witness_g = reduced_homology_dim(fld, link(K, G), b - 2);
    if (sigma_f)
        cert.sigma_f = to_sparse(fld, *sigma_f);
    if (sigma_g)
        cert.sigma_g = to_sparse(fld, *sigma_g);
    if (!verify_certificate_link(K, cert, fld.spec()))
        throw verification_error(
            "break_on_links: emitted certificate failed verification");
    return cert;
}

/** The unit chain {emptyset: 1}, the non-bounding (-1)-cycle of {emptyset}. */
template <class Fld>
Chain<Fld> unit_empty_chain(const Fld& fld)
{
    Chain<Fld> c;
    c.dim = -1;
    c.terms.emplace(Face(), fld.one());
    return c;
}

template <class Fld>
BreakCertificateLink break_on_links_impl(const Fld& fld,
                                         const SimplicialComplex& K, int a, int b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("break_on_links: a and b must be positive");
    const int d = a + b - 2;
    if (reduced_homology_dim(fld, K, d) == 0)
        throw hypothesis_error("break_on_links: H~_" + std::to_string(d) +
                               " of the complex vanishes");

    if (d == K.dim()) {
        // Constructive branches: the cycle is top-dimensional, so its
        // support faces satisfy the facet-intersection property and every
        // descent stays non-bounding.
        Chain<Fld> cycle = *find_nonbounding_cycle(fld, K, d);
        std::vector<Face> support;
        support.reserve(cycle.terms.size());
        for (const auto& [f, c] : cycle.terms)
            support.push_back(f);

        if (a == 1 && b == 1) {
            // 0-dimensional complex: any two support vertices are facets in
            // distinct components.
            Face F = support[0];
            Face G = support[1];
            return finish_link_certificate(
                fld, K, a, b, F, G, descend(fld, K, cycle, F).sigma,
                descend(fld, K, cycle, G).sigma);
        }
        Face uni;
        for (Face f : support)
            uni = uni | f;
        const int v = uni.smallest();
        const Face vertex = Face().with(v);
        if (b == 1) {
            // F = first support vertex, G = first facet avoiding it; G is
            // maximal, so F u G is automatically a nonface.
            Face G;
            for (Face f : K.facets()) {
                if (!f.contains(v)) {
                    G = f;
                    break;
                }
            }
            return finish_link_certificate(fld, K, a, b, vertex, G,
                                           descend(fld, K, cycle, vertex).sigma,
                                           unit_empty_chain(fld));
        }
        if (a == 1) {
            // Mirror image: the vertex carries the b-side.
            Face F;
            for (Face f : K.facets()) {
                if (!f.contains(v)) {
                    F = f;
                    break;
                }
            }
            return finish_link_certificate(fld, K, a, b, F, vertex,
                                           unit_empty_chain(fld),
                                           descend(fld, K, cycle, vertex).sigma);
        }
        // a, b >= 2.  Take the first support facet F1 = {w1, v1, ..., vd}
        // in ascending vertex order.  The (d-1)-face F1 minus v1 must recur
        // in another support facet F2 (its coefficient in the zero chain
        // boundary(cycle) has to cancel); w2 is the vertex F2 adds.  Then
        // G = {v1..va} and F = {v_{a+1}..v_d, w1, w2} have sizes a and b.
        Face F1 = support[0];
        std::vector<int> vs = F1.vertices();
        Face shared = F1.without(vs[1]);
        Face F2;
        bool have_partner = false;
        for (Face f : support) {
            if (f != F1 && shared.subset_of(f)) {
                F2 = f;
                have_partner = true;
                break;
            }
        }
        if (!have_partner)
            throw verification_error(
                "break_on_links: no partner facet shares the punctured face; "
                "boundary cancellation violated");
        const int w2 = F2.minus(shared).smallest();
        Face G;
        for (int k = 1; k <= a; ++k)
            G = G.with(vs[static_cast<std::size_t>(k)]);
        Face F = Face().with(vs[0]).with(w2);
        for (int k = a + 1; k <= d; ++k)
            F = F.with(vs[static_cast<std::size_t>(k)]);
        return finish_link_certificate(fld, K, a, b, F, G,
                                       descend(fld, K, cycle, F).sigma,
                                       descend(fld, K, cycle, G).sigma);
    }

    // The homology lives below the top dimension, where the constructive
    // branches do not apply; fall back to an exhaustive verified search
    // over the facet-intersection lattice.
    std::vector<Face> elems = facet_intersection_lattice(K);
    std::map<Face, int, FaceLexLess> h_a, h_b;
    auto link_h = [&](Face f, int deg, std::map<Face, int, FaceLexLess>& cache) {
        auto it = cache.find(f);
        if (it == cache.end())
            it = cache.emplace(f, reduced_homology_dim(fld, link(K, f), deg)).first;
        return it->second;
    };
    for (Face F : elems) {
        if (F.empty() || link_h(F, a - 2, h_a) == 0)
            continue;
        for (Face G : elems) {
            if (G.empty() || F.intersects(G) || K.membership(F | G))
                continue;
            if (link_h(G, b - 2, h_b) == 0)
                continue;
            return finish_link_certificate(
                fld, K, a, b, F, G,
                find_nonbounding_cycle(fld, link(K, F), a - 2),
                find_nonbounding_cycle(fld, link(K, G), b - 2));
        }
    }
    throw hypothesis_error(
        "break_on_links: no (F, G) pair exists for this split although the "
        "homology hypothesis holds -- potential counterexample instance");
}

}  // namespace detail

/**
 * A verified (F, G) certificate for the split a + b of the homological
 * degree.  Requires H~_{a+b-2}(K) != 0.  When a+b-2 is the dimension of K
 * the certificate comes from the constructive proof (and for a, b >= 2
 * satisfies |F| = b, |G| = a with descent chains attached); otherwise it is
 * found by exhaustive search over the facet-intersection lattice, and its
 * absence raises hypothesis_error flagging a potential counterexample.
 */
inline BreakCertificateLink break_on_links(const SimplicialComplex& K, int a,
                                           int b, const FieldSpec& spec)
{
    return with_field(
        spec, [&](auto fld) { return detail::break_on_links_impl(fld, K, a, b); });
}

/**
 * A verified (C, D) certificate: C u D covers the vertices, C n D is a
 * face, and the induced subcomplexes carry homology in degrees |C|-a-1 and
 * |D|-b-1.  Requires H~_{n-a-b-1}(K) != 0.  The search is canonical: C by
 * (size, face-lex), then the overlap T = C n D by (size, face-lex), first
 * verified hit wins.
 */
inline BreakCertificateInduced break_induced(const SimplicialComplex& K, int a,
                                             int b, const FieldSpec& spec,
                                             int max_n = 24)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("break_induced: a and b must be positive");
    const int n = K.n();
    if (n > max_n)
        throw resource_limit_error(
            "break_induced: vertex count exceeds the subset-enumeration cap");
    const int hdeg = n - a - b - 1;
    if (hdeg < -1)
        throw hypothesis_error(
            "break_induced: degree mismatch -- a + b exceeds the vertex count");
    if (reduced_homology_dim(K, hdeg, spec) == 0)
        throw hypothesis_error("break_induced: H~_" + std::to_string(hdeg) +
                               " of the complex vanishes");

    const Face full = K.ground().full();
    BreakCertificateInduced cert;
    cert.a = a;
    cert.b = b;
    bool found = false;
    for (int cs = 1; cs < n && !found; ++cs) {
        detail::for_each_subset_of_size(full, cs, [&](Face C) {
            if (found)
                return;
            int hc = reduced_homology_dim(induced(K, C), cs - a - 1, spec);
            if (hc == 0)
                return;
            for (int ts = 0; ts <= cs && !found; ++ts) {
                detail::for_each_subset_of_size(C, ts, [&](Face T) {
                    if (found || !K.membership(T))
                        return;
                    Face D = C.complement(n) | T;
                    int hd = reduced_homology_dim(induced(K, D),
                                                  D.size() - b - 1, spec);
                    if (hd == 0)
                        return;
                    cert.C = C;
                    cert.D = D;
                    cert.witness_c = hc;
                    cert.witness_d = hd;
                    found = true;
                });
            }
        });
    }
    if (!found)
        throw hypothesis_error(
            "break_induced: no (C, D) pair exists although the homology "
            "hypothesis holds -- potential counterexample instance");
    if (!verify_certificate_induced(K, cert, spec))
        throw verification_error(
            "break_induced: emitted certificate failed verification");
    return cert;
}

/**
 * Closed-form (C, D) for a disconnected complex covering its ground set:
 * order the components by ascending size, list one representative vertex
 * per component first and the remaining vertices after, component by
 * component; then C = {x_1..x_{a+1}} and D = {x_1, x_{a+2}..x_n} with
 * b = n-a-1, and both induced subcomplexes are disconnected.
 */
inline BreakCertificateInduced break_disconnected(const SimplicialComplex& K,
                                                  int a)
{
    const int n = K.n();
    if (K.vertex_support() != K.ground().full())
        throw std::invalid_argument(
            "break_disconnected: every ground vertex must appear in the complex");
    std::vector<Face> comps = components(K);
    if (comps.size() < 2)
        throw hypothesis_error("break_disconnected: complex is connected");
    if (a < 1 || a >= n - 1)
        throw hypothesis_error("break_disconnected: need 1 <= a < n-1");
    std::stable_sort(comps.begin(), comps.end(),
                     [](Face x, Face y) { return x.size() < y.size(); });

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (Face comp : comps)
        order.push_back(comp.smallest());
    for (Face comp : comps) {
        for (int v : comp.vertices()) {
            if (v != comp.smallest())
                order.push_back(v);
        }
    }

    BreakCertificateInduced cert;
    cert.a = a;
    cert.b = n - a - 1;
    for (int k = 0; k <= a; ++k)
        cert.C = cert.C.with(order[static_cast<std::size_t>(k)]);
    cert.D = Face().with(order[0]);
    for (int k = a + 1; k < n; ++k)
        cert.D = cert.D.with(order[static_cast<std::size_t>(k)]);
    cert.witness_c = static_cast<int>(components(induced(K, cert.C)).size()) - 1;
    cert.witness_d = static_cast<int>(components(induced(K, cert.D)).size()) - 1;
    if (!verify_certificate_induced(K, cert, FieldSpec::rationals()))
        throw verification_error(
            "break_disconnected: emitted certificate failed verification");
    return cert;
}

/**
 * Closed-form (C, D) for a single graph cycle: relabel the vertices along
 * the cycle starting at the smallest vertex, walking toward its smaller
 * neighbour; then C = {x_1, x_3..x_{a+2}} and D = {x_2, x_{a+3}..x_n} with
 * b = n-a-2, and both induced subcomplexes are disconnected.
 */
inline BreakCertificateInduced break_graph_cycle(const SimplicialComplex& K,
                                                 int a)
{
    const int n = K.n();
    const bool covers = K.vertex_support() == K.ground().full();
    bool is_cycle_graph = covers && n >= 3 &&
                          static_cast<int>(K.facets().size()) == n &&
                          components(K).size() == 1;
    std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
    if (is_cycle_graph) {
        for (Face f : K.facets()) {
            if (f.size() != 2) {
                is_cycle_graph = false;
                break;
            }
            std::vector<int> e = f.vertices();
            nb[static_cast<std::size_t>(e[0])].push_back(e[1]);
            nb[static_cast<std::size_t>(e[1])].push_back(e[0]);
        }
    }
    if (is_cycle_graph) {
        for (const auto& adj : nb)
            is_cycle_graph = is_cycle_graph && adj.size() == 2;
    }
    if (!is_cycle_graph)
        throw hypothesis_error("break_graph_cycle: complex is not a single graph cycle");
    if (a < 1 || a >= n - 2)
        throw hypothesis_error("break_graph_cycle: need 1 <= a < n-2");

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    order.push_back(std::min(nb[0][0], nb[0][1]));
    while (static_cast<int>(order.size()) < n) {
        const int cur = order.back();
        const int prev = order[order.size() - 2];
        order.push_back(nb[static_cast<std::size_t>(cur)][0] == prev
                            ? nb[static_cast<std::size_t>(cur)][1]
                            : nb[static_cast<std::size_t>(cur)][0]);
    }

    BreakCertificateInduced cert;
    cert.a = a;
    cert.b = n - a - 2;
    cert.C = Face().with(order[0]);
    for (int k = 2; k <= a + 1; ++k)
        cert.C = cert.C.with(order[static_cast<std::size_t>(k)]);
    cert.D = Face().with(order[1]);
    for (int k = a + 2; k < n; ++k)
        cert.D = cert.D.with(order[static_cast<std::size_t>(k)]);
    cert.witness_c = static_cast<int>(components(induced(K, cert.C)).size()) - 1;
    cert.witness_d = static_cast<int>(components(induced(K, cert.D)).size()) - 1;
    if (!verify_certificate_induced(K, cert, FieldSpec::rationals()))
        throw verification_error(
            "break_graph_cycle: emitted certificate failed verification");
    return cert;
}

// --------------------------------------------------------------------------
// searches

struct SearchOptions {
    FieldSpec field = FieldSpec::rationals();
    int threads = 1;
    std::size_t max_per_split = 1;  // certificates kept per split (not pairs)
    int max_n = 24;                 // subset-enumeration cap
};

struct LinkSplitRecord {
    int i = 0, a = 0, b = 0;
    std::vector<BreakCertificateLink> found;
    bool none_found = false;
};

struct LinkSearchReport {
    std::vector<int> homology_degrees;  // d with H~_d(K) != 0
    std::vector<LinkSplitRecord> splits;
    bool any_none_found = false;
};

struct InducedSplitRecord {
    int i = 0, a = 0, b = 0;
    std::vector<BreakCertificateInduced> found;
    bool none_found = false;
};

struct InducedSearchReport {
    std::vector<int> homology_degrees;
    std::vector<InducedSplitRecord> splits;
    bool any_none_found = false;
};

struct ComplementSplitRecord {
    int i = 0, a = 0, b = 0;
    std::vector<std::pair<Monomial, Monomial>> pairs;  // all witnesses
    bool none_found = false;
};

struct ComplementSearchReport {
    Monomial top;
    std::vector<int> top_indices;  // i with beta_{i, top} != 0
    std::vector<ComplementSplitRecord> splits;
    bool any_none_found = false;
};

/**
 * For every degree d with H~_d(K) != 0 and every split a + b = d + 2,
 * enumerate (F, G) pairs over the facet-intersection lattice satisfying
 * the link-splitting conditions.  A split with no pair is flagged as a
 * potential counterexample.
 */
inline LinkSearchReport search_question_links(const SimplicialComplex& K,
                                              const SearchOptions& opt = {})
{
    LinkSearchReport rep;
    std::vector<int> dims = reduced_homology_all(K, opt.field);
    for (int d = -1; d + 1 < static_cast<int>(dims.size()); ++d) {
        if (dims[static_cast<std::size_t>(d + 1)] != 0)
            rep.homology_degrees.push_back(d);
    }
    if (rep.homology_degrees.empty())
        throw hypothesis_error("search_question_links: all homology vanishes");

    std::vector<std::tuple<int, int, int>> jobs;
    for (int d : rep.homology_degrees) {
        const int i = d + 2;
        for (int a = 1; 2 * a <= i; ++a)
            jobs.emplace_back(i, a, i - a);
    }
    const std::vector<Face> elems = detail::facet_intersection_lattice(K);

    rep.splits = parallel_map<LinkSplitRecord>(
        jobs.size(), opt.threads, [&](std::size_t idx) {
            const auto [i, a, b] = jobs[idx];
            LinkSplitRecord rec;
            rec.i = i;
            rec.a = a;
            rec.b = b;
            return with_field(opt.field, [&](auto fld) {
                std::map<Face, int, FaceLexLess> h_a, h_b;
                auto link_h = [&](Face f, int deg,
                                  std::map<Face, int, FaceLexLess>& cache) {
                    auto it = cache.find(f);
                    if (it == cache.end())
                        it = cache
                                 .emplace(f, reduced_homology_dim(fld, link(K, f),
                                                                  deg))
                                 .first;
                    return it->second;
                };
                for (Face F : elems) {
                    if (rec.found.size() >= opt.max_per_split)
                        break;
                    if (F.empty() || link_h(F, a - 2, h_a) == 0)
                        continue;
                    for (Face G : elems) {
                        if (rec.found.size() >= opt.max_per_split)
                            break;
                        if (G.empty() || F.intersects(G) || K.membership(F | G))
                            continue;
                        if (link_h(G, b - 2, h_b) == 0)
                            continue;
                        rec.found.push_back(detail::finish_link_certificate(
                            fld, K, a, b, F, G,
                            find_nonbounding_cycle(fld, link(K, F), a - 2),
                            find_nonbounding_cycle(fld, link(K, G), b - 2)));
                    }
                }
                rec.none_found = rec.found.empty();
                return rec;
            });
        });
    for (const auto& rec : rep.splits)
        rep.any_none_found = rep.any_none_found || rec.none_found;
    return rep;
}

/**
 * For every degree d with H~_d(K) != 0 and every split a + b = n - d - 1,
 * enumerate (C, D) certificates in canonical order.  A split with no pair
 * is flagged as a potential counterexample.
 */
inline InducedSearchReport search_question_induced(const SimplicialComplex& K,
                                                   const SearchOptions& opt = {})
{
    const int n = K.n();
    if (n > opt.max_n)
        throw resource_limit_error(
            "search_question_induced: vertex count exceeds the "
            "subset-enumeration cap");
    InducedSearchReport rep;
    std::vector<int> dims = reduced_homology_all(K, opt.field);
    for (int d = -1; d + 1 < static_cast<int>(dims.size()); ++d) {
        if (dims[static_cast<std::size_t>(d + 1)] != 0)
            rep.homology_degrees.push_back(d);
    }
    if (rep.homology_degrees.empty())
        throw hypothesis_error("search_question_induced: all homology vanishes");

    std::vector<std::tuple<int, int, int>> jobs;
    for (int d : rep.homology_degrees) {
        const int i = n - d - 1;
        for (int a = 1; 2 * a <= i; ++a)
            jobs.emplace_back(i, a, i - a);
    }

    const Face full = K.ground().full();
    rep.splits = parallel_map<InducedSplitRecord>(
        jobs.size(), opt.threads, [&](std::size_t idx) {
            const auto [i, a, b] = jobs[idx];
            InducedSplitRecord rec;
            rec.i = i;
            rec.a = a;
            rec.b = b;
            for (int cs = 1; cs < n; ++cs) {
                if (rec.found.size() >= opt.max_per_split)
                    break;
                detail::for_each_subset_of_size(full, cs, [&](Face C) {
                    if (rec.found.size() >= opt.max_per_split)
                        return;
                    int hc = reduced_homology_dim(induced(K, C), cs - a - 1,
                                                  opt.field);
                    if (hc == 0)
                        return;
                    for (int ts = 0; ts <= cs; ++ts) {
                        if (rec.found.size() >= opt.max_per_split)
                            break;
                        detail::for_each_subset_of_size(C, ts, [&](Face T) {
                            if (rec.found.size() >= opt.max_per_split ||
                                !K.membership(T))
                                return;
                            Face D = C.complement(n) | T;
                            int hd = reduced_homology_dim(induced(K, D),
                                                          D.size() - b - 1,
                                                          opt.field);
                            if (hd == 0)
                                return;
                            BreakCertificateInduced cert;
                            cert.a = a;
                            cert.b = b;
                            cert.C = C;
                            cert.D = D;
                            cert.witness_c = hc;
                            cert.witness_d = hd;
                            if (!verify_certificate_induced(K, cert, opt.field))
                                throw verification_error(
                                    "search_question_induced: certificate "
                                    "failed verification");
                            rec.found.push_back(cert);
                        });
                    }
                });
            }
            rec.none_found = rec.found.empty();
            return rec;
        });
    for (const auto& rec : rep.splits)
        rep.any_none_found = rep.any_none_found || rec.none_found;
    return rep;
}

/**
 * For every i with beta_{i, top} != 0 and every split a + b = i, list all
 * lattice complement pairs (m, m') with beta_{a, m} != 0 and
 * beta_{b, m'} != 0, computed through the lcm-lattice formula.  A split
 * with no pair is flagged as a potential counterexample.
 */
inline ComplementSearchReport search_question_complements(
    const MonomialIdeal& I, const SearchOptions& opt = {})
{
    BettiOptions bo;
    bo.field = opt.field;
    bo.threads = opt.threads;
    const BettiTable table = betti_lcm_lattice(I, bo);
    const LcmLattice lattice(I);

    ComplementSearchReport rep;
    rep.top = lattice.element(lattice.top());
    for (int i = 1; i <= table.proj_dim(); ++i) {
        if (table.at(i, rep.top) != 0)
            rep.top_indices.push_back(i);
    }
    if (rep.top_indices.empty())
        throw hypothesis_error(
            "search_question_complements: no nonzero Betti number at the top "
            "lcm-lattice degree");

    std::vector<std::tuple<int, int, int>> jobs;
    for (int i : rep.top_indices) {
        for (int a = 1; 2 * a <= i; ++a)
            jobs.emplace_back(i, a, i - a);
    }

    rep.splits = parallel_map<ComplementSplitRecord>(
        jobs.size(), opt.threads, [&](std::size_t idx) {
            const auto [i, a, b] = jobs[idx];
            ComplementSplitRecord rec;
            rec.i = i;
            rec.a = a;
            rec.b = b;
            std::vector<int> row_a, row_b;
            for (int m = 0; m < lattice.size(); ++m) {
                if (table.at(a, lattice.element(m)) != 0)
                    row_a.push_back(m);
                if (table.at(b, lattice.element(m)) != 0)
                    row_b.push_back(m);
            }
            for (int ma : row_a) {
                for (int mb : row_b) {
                    if (lattice.are_complements(ma, mb))
                        rec.pairs.emplace_back(lattice.element(ma),
                                               lattice.element(mb));
                }
            }
            rec.none_found = rec.pairs.empty();
            return rec;
        });
    for (const auto& rec : rep.splits)
        rep.any_none_found = rep.any_none_found || rec.none_found;
    return rep;
}

}  // namespace syzygy

#endif  // SYZYGY_BREAKER_HPP
