#pragma once

// Monomials, monomial ideals, the squarefree/complex correspondence,
// polarization, and the lattice of generator lcms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "core.hpp"

namespace syzygy {

/**
 * A monomial in up to 64 variables, stored as a sparse list of
 * (variable index, exponent) pairs with positive exponents, sorted by
 * variable.  The empty list is the unit monomial 1.
 */
class Monomial {
public:
    Monomial() = default;

    /** Builds x_{v_1} * ... * x_{v_k} from a squarefree support. */
    static Monomial squarefree(Face support)
    {
        Monomial m;
        for (int v : support.vertices())
            m.exps_.emplace_back(v, 1);
        return m;
    }

    /** Builds a monomial from a dense exponent vector. */
    static Monomial from_exponents(const std::vector<int>& exps)
    {
        Monomial m;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] < 0)
                throw std::invalid_argument("monomial exponents must be nonnegative");
            if (exps[v] > 0)
                m.exps_.emplace_back(static_cast<int>(v), exps[v]);
        }
        return m;
    }

    /** Builds a monomial from sparse (variable, exponent) pairs. */
    static Monomial from_pairs(std::vector<std::pair<int, int>> pairs)
    {
        std::map<int, long> acc;
        for (auto [v, e] : pairs) {
            if (v < 0 || v >= 64)
                throw std::invalid_argument("variable index out of range");
            if (e < 0)
                throw std::invalid_argument("monomial exponents must be nonnegative");
            acc[v] += e;
        }
        Monomial m;
        for (auto [v, e] : acc) {
            if (e > (1 << 20))
                throw std::invalid_argument("monomial exponent too large");
            if (e > 0)
                m.exps_.emplace_back(v, static_cast<int>(e));
        }
        return m;
    }

    bool is_one() const { return exps_.empty(); }

    bool is_squarefree() const
    {
        for (auto [v, e] : exps_)
            if (e != 1)
                return false;
        return true;
    }

    int exponent(int v) const
    {
        for (auto [w, e] : exps_)
            if (w == v)
                return e;
        return 0;
    }

    /** The set of variables appearing with positive exponent. */
    Face support() const
    {
        Face f;
        for (auto [v, e] : exps_)
            f = f.with(v);
        return f;
    }

    long degree() const
    {
        long d = 0;
        for (auto [v, e] : exps_)
            d += e;
        return d;
    }

    bool divides(const Monomial& other) const
    {
        for (auto [v, e] : exps_)
            if (other.exponent(v) < e)
                return false;
        return true;
    }

    const std::vector<std::pair<int, int>>& pairs() const { return exps_; }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    /** Renders as a product of named powers, e.g. "a*b^2"; the unit is "1". */
    std::string str(const VertexSet& vars) const
    {
        if (exps_.empty())
            return "1";
        std::string out;
        for (auto [v, e] : exps_) {
            if (!out.empty())
                out += '*';
            out += vars.name(v);
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
        return out;
    }

private:
    std::vector<std::pair<int, int>> exps_;
};

inline Monomial lcm(const Monomial& a, const Monomial& b)
{
    std::vector<std::pair<int, int>> pairs;
    for (int v : (a.support() | b.support()).vertices())
        pairs.emplace_back(v, std::max(a.exponent(v), b.exponent(v)));
    return Monomial::from_pairs(std::move(pairs));
}

inline Monomial gcd(const Monomial& a, const Monomial& b)
{
    std::vector<std::pair<int, int>> pairs;
    for (int v : (a.support() & b.support()).vertices())
        pairs.emplace_back(v, std::min(a.exponent(v), b.exponent(v)));
    return Monomial::from_pairs(std::move(pairs));
}

/**
 * Strict total order on monomials: first by support in face-lex order, then
 * lexicographically by exponents along ascending variable index.  Used
 * throughout to make iteration and output order deterministic.
 */
inline bool monomial_less(const Monomial& a, const Monomial& b)
{
    Face sa = a.support();
    Face sb = b.support();
    if (sa != sb)
        return face_lex_less(sa, sb);
    for (int v : sa.vertices()) {
        if (a.exponent(v) != b.exponent(v))
            return a.exponent(v) < b.exponent(v);
    }
    return false;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return monomial_less(a, b);
    }
};

/**
 * A monomial ideal presented by its unique minimal generating set, kept
 * sorted.  Redundant generators passed to the factory are dropped.  The unit
 * monomial is rejected: the ideal must be proper.  An empty generator list
 * gives the zero ideal.
 */
class MonomialIdeal {
public:
    static MonomialIdeal from_generators(VertexSet vars, std::vector<Monomial> gens)
    {
        int n = vars.size();
        for (const Monomial& g : gens) {
            if (g.is_one())
                throw std::invalid_argument(
                    "the unit monomial generates the whole ring; the ideal must "
                    "be proper");
            for (auto [v, e] : g.pairs())
                if (v >= n)
                    throw std::invalid_argument(
                        "generator mentions a variable outside the ring");
        }
        // keep only divisibility-minimal generators, without duplicates
        std::sort(gens.begin(), gens.end(), MonomialLess{});
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> minimal;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
                if (j != i && gens[j].divides(gens[i]))
                    redundant = true;
            if (!redundant)
                minimal.push_back(gens[i]);
        }
        MonomialIdeal I;
        I.vars_ = std::move(vars);
        I.gens_ = std::move(minimal);
        return I;
    }

    const VertexSet& ground() const { return vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int num_vars() const { return vars_.size(); }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool contains(const Monomial& m) const
    {
        for (const Monomial& g : gens_)
            if (g.divides(m))
                return true;
        return false;
    }

    bool is_squarefree() const
    {
        for (const Monomial& g : gens_)
            if (!g.is_squarefree())
                return false;
        return true;
    }

    /** Smallest total degree among the minimal generators. */
    long min_generator_degree() const
    {
        if (gens_.empty())
            throw std::invalid_argument("the zero ideal has no generators");
        long d = gens_.front().degree();
        for (const Monomial& g : gens_)
            d = std::min(d, g.degree());
        return d;
    }

    bool operator==(const MonomialIdeal& o) const
    {
        return vars_ == o.vars_ && gens_ == o.gens_;
    }

private:
    MonomialIdeal() = default;
    VertexSet vars_{std::vector<std::string>{"_"}};
    std::vector<Monomial> gens_;
};

/**
 * The simplicial complex whose nonfaces are exactly the supports of the
 * ideal's generators (requires a squarefree ideal).  The zero ideal gives
 * the full simplex; the ideal of all variables gives the irrelevant complex.
 */
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I)
{
    if (!I.is_squarefree())
        throw std::invalid_argument(
            "only a squarefree ideal corresponds to a simplicial complex");
    std::vector<Face> supports;
    supports.reserve(I.generators().size());
    for (const Monomial& g : I.generators())
        supports.push_back(g.support());
    // a set is a face exactly when its complement hits every support
    Face all = I.ground().full();
    std::vector<Face> facets;
    for (Face t : detail::minimal_transversals(supports))
        facets.push_back(all.minus(t));
    return SimplicialComplex::from_facets(I.ground(), std::move(facets));
}

/**
 * The squarefree ideal generated by the minimal nonfaces of K.  Inverse to
 * stanley_reisner_complex; undefined for the void complex, whose only
 * minimal nonface is the empty set.
 */
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& K)
{
    std::vector<Monomial> gens;
    for (Face nf : minimal_nonfaces(K)) {
        if (nf.empty())
            throw std::invalid_argument(
                "the void complex does not correspond to a proper monomial ideal");
        gens.push_back(Monomial::squarefree(nf));
    }
    return MonomialIdeal::from_generators(K.ground(), std::move(gens));
}

/**
 * Replaces every power x^e by a product of e distinct variables, yielding a
 * squarefree ideal with the same graded Betti numbers.  The first copy of a
 * variable keeps its name; later copies are suffixed "#2", "#3", ....
 * Squarefree input is returned unchanged, over the original ring.
 */
inline MonomialIdeal polarize(const MonomialIdeal& I)
{
    if (I.is_squarefree())
        return I;

    int n = I.num_vars();
    std::vector<int> max_exp(static_cast<std::size_t>(n), 0);
    for (const Monomial& g : I.generators())
        for (auto [v, e] : g.pairs())
            max_exp[static_cast<std::size_t>(v)] =
                std::max(max_exp[static_cast<std::size_t>(v)], e);

    long total = 0;
    for (int v = 0; v < n; ++v)
        total += std::max(max_exp[static_cast<std::size_t>(v)], 1);
    if (total > 64)
        throw resource_limit_error(
            "polarization needs " + std::to_string(total) +
            " variables; at most 64 are supported");

    // copy k of variable v gets index first_copy[v] + k - 1
    std::vector<int> first_copy(static_cast<std::size_t>(n), 0);
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) {
        first_copy[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
        int copies = std::max(max_exp[static_cast<std::size_t>(v)], 1);
        for (int k = 1; k <= copies; ++k) {
            std::string nm = I.ground().name(v);
            if (k > 1)
                nm += "#" + std::to_string(k);
            names.push_back(std::move(nm));
        }
    }

    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const Monomial& g : I.generators()) {
        std::vector<std::pair<int, int>> pairs;
        for (auto [v, e] : g.pairs())
            for (int k = 0; k < e; ++k)
                pairs.emplace_back(first_copy[static_cast<std::size_t>(v)] + k, 1);
        gens.push_back(Monomial::from_pairs(std::move(pairs)));
    }
    return MonomialIdeal::from_generators(VertexSet(std::move(names)),
                                          std::move(gens));
}

/**
 * The lattice of least common multiples of subsets of the minimal
 * generators.  The bottom element is 1 (the empty subset) and the top is the
 * lcm of all generators.  Elements are sorted by total degree, then by the
 * monomial order, so the bottom comes first and the top last.  The order
 * relation is divisibility, joins are lcms, and the meet of two elements is
 * the largest lattice element dividing their gcd.
 */
class LcmLattice {
public:
    static constexpr int max_generators = 24;

    explicit LcmLattice(MonomialIdeal I) : ideal_(std::move(I))
    {
        const auto& gens = ideal_.generators();
        if (static_cast<int>(gens.size()) > max_generators)
            throw resource_limit_error(
                "lcm lattice limited to ideals with at most " +
                std::to_string(max_generators) + " generators (got " +
                std::to_string(gens.size()) + ")");

        std::set<Monomial, MonomialLess> elems;
        elems.insert(Monomial());
        for (const Monomial& g : gens) {
            std::vector<Monomial> fresh;
            for (const Monomial& e : elems)
                fresh.push_back(lcm(e, g));
            elems.insert(fresh.begin(), fresh.end());
            if (elems.size() > (1u << 20))
                throw resource_limit_error("lcm lattice has too many elements");
        }

        elements_.assign(elems.begin(), elems.end());
        std::stable_sort(elements_.begin(), elements_.end(),
                         [](const Monomial& a, const Monomial& b) {
                             if (a.degree() != b.degree())
                                 return a.degree() < b.degree();
                             return monomial_less(a, b);
                         });
        for (std::size_t i = 0; i < elements_.size(); ++i)
            index_[elements_[i]] = static_cast<int>(i);
    }

    const MonomialIdeal& ideal() const { return ideal_; }
    const std::vector<Monomial>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const Monomial& element(int i) const
    {
        return elements_.at(static_cast<std::size_t>(i));
    }

    int bottom() const { return 0; }
    int top() const { return size() - 1; }

    std::optional<int> index_of(const Monomial& m) const
    {
        auto it = index_.find(m);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /** Strict order: element i properly divides element j. */
    bool less(int i, int j) const
    {
        return i != j && element(i).divides(element(j));
    }

    int join(int i, int j) const
    {
        auto idx = index_of(lcm(element(i), element(j)));
        if (!idx)
            throw std::logic_error("lattice not closed under joins");
        return *idx;
    }

    /** Largest lattice element dividing gcd(element(i), element(j)). */
    int meet(int i, int j) const
    {
        Monomial g = gcd(element(i), element(j));
        Monomial m;  // join of everything below both
        for (const Monomial& e : elements_)
            if (e.divides(g))
                m = lcm(m, e);
        auto idx = index_of(m);
        if (!idx)
            throw std::logic_error("lattice not closed under meets");
        return *idx;
    }

    /** True when i and j meet at the bottom and join at the top. */
    bool are_complements(int i, int j) const
    {
        if (join(i, j) != top())
            return false;
        // the meet is the bottom exactly when no generator divides the gcd
        return !ideal_.contains(gcd(element(i), element(j)));
    }

    /**
     * The open interval (lo, hi) as an abstract poset, labelled by monomial
     * strings.  Order of the labels follows the lattice element order.
     */
    Poset open_interval(int lo, int hi) const
    {
        std::vector<int> members;
        for (int k = 0; k < size(); ++k)
            if (less(lo, k) && less(k, hi))
                members.push_back(k);

        Poset P;
        for (int k : members)
            P.labels.push_back(element(k).str(ideal_.ground()));
        std::size_t s = members.size();
        P.less.assign(s, std::vector<bool>(s, false));
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b)
                P.less[a][b] = less(members[a], members[b]);
        return P;
    }

private:
    MonomialIdeal ideal_;
    std::vector<Monomial> elements_;
    std::map<Monomial, int, MonomialLess> index_;
};

}  // namespace syzygy
