#ifndef SYZYGY_HOMOLOGY_HPP
#define SYZYGY_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <vector>

#include "complex.hpp"
#include "linalg.hpp"

/**
 * Reduced simplicial homology over an exact field.
 *
 * The chain complex is augmented: for every nonvoid complex the empty face
 * spans the degree -1 chain group and the boundary of a vertex is the empty
 * face.  Consequently H~_{-1} is one-dimensional exactly for the irrelevant
 * complex {emptyset} and zero otherwise, and H~_0 counts components minus
 * one.  The void complex has no faces and no homology in any degree.
 *
 * Orientation contract: a face is written with ascending vertex indices and
 * dropping its k-th smallest vertex (0-based) contributes the sign (-1)^k,
 * so del [abc] = [bc] - [ac] + [ab].
 */
namespace syzygy {

/** A formal field-linear combination of faces of one dimension. */
template <class Fld>
struct Chain {
    using Element = typename Fld::Element;

    int dim = 0;
    std::map<Face, Element, FaceLexLess> terms;  // nonzero coefficients only

    bool is_zero() const { return terms.empty(); }
};

/** Throws unless every term is a (dim)-face of K with a nonzero coefficient. */
template <class Fld>
void validate_chain(const Fld& K_field, const SimplicialComplex& K, const Chain<Fld>& c)
{
    for (const auto& [face, coeff] : c.terms) {
        if (face.size() != c.dim + 1)
            throw std::invalid_argument("chain term has wrong dimension");
        if (!K.membership(face))
            throw std::invalid_argument("chain term is not a face of the complex");
        if (K_field.is_zero(coeff))
            throw std::invalid_argument("chain stores an explicit zero coefficient");
    }
}

template <class Fld>
void chain_add_term(const Fld& K, Chain<Fld>& c, Face f, typename Fld::Element coeff)
{
    auto it = c.terms.find(f);
    if (it == c.terms.end()) {
        if (!K.is_zero(coeff))
            c.terms.emplace(f, std::move(coeff));
        return;
    }
    it->second = K.add(it->second, coeff);
    if (K.is_zero(it->second))
        c.terms.erase(it);
}

template <class Fld>
Chain<Fld> chain_scale(const Fld& K, const Chain<Fld>& c, const typename Fld::Element& s)
{
    Chain<Fld> out;
    out.dim = c.dim;
    if (K.is_zero(s))
        return out;
    for (const auto& [f, a] : c.terms)
        out.terms.emplace(f, K.mul(a, s));
    return out;
}

/**
 * Boundary of a chain.  A 0-chain maps to its coefficient sum on the empty
 * face (augmentation); a (-1)-chain maps to the zero chain one degree down.
 */
template <class Fld>
Chain<Fld> boundary(const Fld& K, const Chain<Fld>& c)
{
    Chain<Fld> out;
    out.dim = c.dim - 1;
    if (c.dim < 0)
        return out;
    for (const auto& [f, a] : c.terms) {
        std::vector<int> vs = f.vertices();
        for (std::size_t k = 0; k < vs.size(); ++k) {
            typename Fld::Element coeff = (k % 2 == 0) ? a : K.neg(a);
            chain_add_term(K, out, f.without(vs[k]), std::move(coeff));
        }
    }
    return out;
}

template <class Fld>
bool is_cycle(const Fld& K, const Chain<Fld>& c)
{
    return boundary(K, c).is_zero();
}

/** The boundary map from d-faces to (d-1)-faces with its face bases. */
template <class Fld>
struct BoundaryMatrix {
    std::vector<Face> rows;  // (d-1)-faces, face-lex
    std::vector<Face> cols;  // d-faces, face-lex
    Matrix<Fld> m;
};

template <class Fld>
BoundaryMatrix<Fld> boundary_matrix(const Fld& K_field, const SimplicialComplex& K, int d)
{
    BoundaryMatrix<Fld> B;
    B.cols = K.faces_of_dim(d);
    B.rows = K.faces_of_dim(d - 1);
    B.m = Matrix<Fld>(K_field, static_cast<int>(B.rows.size()),
                      static_cast<int>(B.cols.size()));
    std::map<Face, int, FaceLexLess> row_index;
    for (std::size_t r = 0; r < B.rows.size(); ++r)
        row_index.emplace(B.rows[r], static_cast<int>(r));
    for (std::size_t c = 0; c < B.cols.size(); ++c) {
        std::vector<int> vs = B.cols[c].vertices();
        for (std::size_t k = 0; k < vs.size(); ++k) {
            int r = row_index.at(B.cols[c].without(vs[k]));
            B.m.at(r, static_cast<int>(c)) =
                (k % 2 == 0) ? K_field.one() : K_field.neg(K_field.one());
        }
    }
    return B;
}

/**
 * dim H~_d(K) = nullity(del_d) - rank(del_{d+1}).  Zero for the void
 * complex and for any degree without faces.
 */
template <class Fld>
int reduced_homology_dim(const Fld& K_field, const SimplicialComplex& K, int d)
{
    if (K.is_void() || d < -1)
        return 0;
    std::vector<Face> faces_d = K.faces_of_dim(d);
    if (faces_d.empty())
        return 0;
    int rank_d = rank(K_field, boundary_matrix(K_field, K, d).m);
    int rank_d1 = rank(K_field, boundary_matrix(K_field, K, d + 1).m);
    return static_cast<int>(faces_d.size()) - rank_d - rank_d1;
}

/**
 * All reduced homology dimensions of K at once, indexed by d+1 for
 * d = -1 .. dim(K).  Shares each boundary rank between adjacent degrees.
 */
template <class Fld>
std::vector<int> reduced_homology_all(const Fld& K_field, const SimplicialComplex& K)
{
    if (K.is_void())
        return {};
    int top = K.dim();
    std::vector<int> counts, ranks;
    for (int d = -1; d <= top + 1; ++d) {
        BoundaryMatrix<Fld> B = boundary_matrix(K_field, K, d);
        counts.push_back(static_cast<int>(B.cols.size()));
        ranks.push_back(rank(K_field, std::move(B.m)));
    }
    std::vector<int> dims;
    for (int d = -1; d <= top; ++d) {
        std::size_t i = static_cast<std::size_t>(d + 1);
        dims.push_back(counts[i] - ranks[i] - ranks[i + 1]);
    }
    return dims;
}

/** FieldSpec-dispatching overloads. */
inline int reduced_homology_dim(const SimplicialComplex& K, int d, const FieldSpec& spec)
{
    return with_field(spec, [&](auto fld) { return reduced_homology_dim(fld, K, d); });
}

inline std::vector<int> reduced_homology_all(const SimplicialComplex& K,
                                             const FieldSpec& spec)
{
    return with_field(spec, [&](auto fld) { return reduced_homology_all(fld, K); });
}

/**
 * The first kernel basis vector of del_d (in reduced echelon normal form
 * over the face-lex column order) that is not a boundary; nullopt when
 * H~_d(K) = 0.  Deterministic for a fixed complex and field.
 */
template <class Fld>
std::optional<Chain<Fld>> find_nonbounding_cycle(const Fld& K_field,
                                                 const SimplicialComplex& K, int d)
{
    if (K.is_void() || d < -1)
        return std::nullopt;
    BoundaryMatrix<Fld> Bd = boundary_matrix(K_field, K, d);
    if (Bd.cols.empty())
        return std::nullopt;
    auto basis = kernel_basis(K_field, Bd.m);
    if (basis.empty())
        return std::nullopt;
    BoundaryMatrix<Fld> Bup = boundary_matrix(K_field, K, d + 1);
    for (const auto& v : basis) {
        if (!in_column_span(K_field, Bup.m, v)) {
            Chain<Fld> c;
            c.dim = d;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (!K_field.is_zero(v[i]))
                    c.terms.emplace(Bd.cols[i], v[i]);
            }
            return c;
        }
    }
    return std::nullopt;
}

/**
 * Whether the cycle c bounds in K.  The zero chain always bounds; a chain
 * that is not a cycle is a contract violation.
 */
template <class Fld>
bool is_boundary(const Fld& K_field, const SimplicialComplex& K, const Chain<Fld>& c)
{
    validate_chain(K_field, K, c);
    if (!is_cycle(K_field, c))
        throw std::invalid_argument("is_boundary: chain is not a cycle");
    if (c.is_zero())
        return true;
    BoundaryMatrix<Fld> Bup = boundary_matrix(K_field, K, c.dim + 1);
    std::vector<typename Fld::Element> v;
    v.reserve(Bup.rows.size());
    for (Face f : Bup.rows) {
        auto it = c.terms.find(f);
        v.push_back(it == c.terms.end() ? K_field.zero() : it->second);
    }
    return in_column_span(K_field, Bup.m, v);
}

/**
 * The complex generated by the support faces of c.  All support faces have
 * equal dimension, so they are exactly its facets.
 */
template <class Fld>
SimplicialComplex support_complex(const SimplicialComplex& K, const Chain<Fld>& c)
{
    std::vector<Face> gens;
    gens.reserve(c.terms.size());
    for (const auto& [f, a] : c.terms)
        gens.push_back(f);
    return SimplicialComplex::from_facets(K.ground(), std::move(gens));
}

/**
 * A cycle is face-minimal when no proper nonempty subset of its support
 * carries a nonzero cycle.  Since a cycle supported inside S survives into
 * every superset of S, it suffices to test the supports with one face
 * removed.  Supports larger than 20 faces are rejected.
 */
template <class Fld>
bool is_face_minimal(const Fld& K_field, const SimplicialComplex& K, const Chain<Fld>& c)
{
    validate_chain(K_field, K, c);
    if (!is_cycle(K_field, c))
        throw std::invalid_argument("is_face_minimal: chain is not a cycle");
    const std::size_t q = c.terms.size();
    if (q > 20)
        throw resource_limit_error("is_face_minimal: support exceeds 20 faces");
    if (q <= 1)
        return true;

    std::vector<Face> support;
    support.reserve(q);
    for (const auto& [f, a] : c.terms)
        support.push_back(f);
    BoundaryMatrix<Fld> B = boundary_matrix(K_field, K, c.dim);
    std::map<Face, int, FaceLexLess> col_index;
    for (std::size_t i = 0; i < B.cols.size(); ++i)
        col_index.emplace(B.cols[i], static_cast<int>(i));

    for (std::size_t drop = 0; drop < q; ++drop) {
        Matrix<Fld> restricted(K_field, B.m.rows, static_cast<int>(q) - 1);
        int cc = 0;
        for (std::size_t i = 0; i < q; ++i) {
            if (i == drop)
                continue;
            int src = col_index.at(support[i]);
            for (int r = 0; r < B.m.rows; ++r)
                restricted.at(r, cc) = B.m.at(r, src);
            ++cc;
        }
        if (rank(K_field, std::move(restricted)) < static_cast<int>(q) - 1)
            return false;  // nonzero kernel: a cycle lives on a proper subset
    }
    return true;
}

}  // namespace syzygy

#endif  // SYZYGY_HOMOLOGY_HPP
