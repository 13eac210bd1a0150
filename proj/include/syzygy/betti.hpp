#pragma once

// Multigraded Betti numbers of monomial ideals, computed three independent
// ways: from induced subcomplexes of the associated complex, from links in
// its Alexander dual, and from open intervals in the lattice of generator
// lcms.  Also the degree-subadditivity check at the top multidegree.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homology.hpp"
#include "monomial.hpp"
#include "parallel.hpp"

namespace syzygy {

/**
 * A table of multigraded Betti numbers β_{i,m}.  Only nonzero entries are
 * stored; rows are indexed by homological degree i and, within a row, by the
 * multidegree monomial in the monomial order.  The numbers describe the
 * minimal free resolution of the quotient ring, so β_0 = 1 for every proper
 * ideal and row 1 counts the minimal generators.
 */
class BettiTable {
public:
    using Row = std::map<Monomial, long, MonomialLess>;

    explicit BettiTable(VertexSet vars) : vars_(std::move(vars)) {}

    void add(int i, const Monomial& m, long v)
    {
        if (v == 0)
            return;
        long& slot = data_[i][m];
        slot += v;
        if (slot == 0) {
            data_[i].erase(m);
            if (data_[i].empty())
                data_.erase(i);
        }
    }

    long at(int i, const Monomial& m) const
    {
        auto row = data_.find(i);
        if (row == data_.end())
            return 0;
        auto it = row->second.find(m);
        return it == row->second.end() ? 0 : it->second;
    }

    long total(int i) const
    {
        auto row = data_.find(i);
        if (row == data_.end())
            return 0;
        long t = 0;
        for (const auto& [m, v] : row->second)
            t += v;
        return t;
    }

    /** Totals indexed 0..proj_dim(). */
    std::vector<long> totals() const
    {
        std::vector<long> out;
        for (int i = 0; i <= proj_dim(); ++i)
            out.push_back(total(i));
        return out;
    }

    /** Largest homological degree with a nonzero entry (0 for empty table). */
    int proj_dim() const
    {
        return data_.empty() ? 0 : data_.rbegin()->first;
    }

    /** Largest total degree of a multidegree in row i, if the row is nonzero. */
    std::optional<long> max_degree_at(int i) const
    {
        auto row = data_.find(i);
        if (row == data_.end() || row->second.empty())
            return std::nullopt;
        long best = 0;
        for (const auto& [m, v] : row->second)
            best = std::max(best, m.degree());
        return best;
    }

    /** Coarse table: (i, total degree j) -> sum of entries. */
    std::map<std::pair<int, long>, long> coarse() const
    {
        std::map<std::pair<int, long>, long> out;
        for (const auto& [i, row] : data_)
            for (const auto& [m, v] : row)
                out[{i, m.degree()}] += v;
        return out;
    }

    const std::map<int, Row>& rows() const { return data_; }
    const VertexSet& vars() const { return vars_; }

    bool operator==(const BettiTable& o) const
    {
        return vars_ == o.vars_ && data_ == o.data_;
    }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }

private:
    VertexSet vars_;
    std::map<int, Row> data_;
};

struct BettiOptions {
    FieldSpec field = FieldSpec::rationals();
    int threads = 1;
    /** Refuse subcomplex sweeps over rings with more variables than this. */
    int max_vars = 24;
    /**
     * Sweep every nonempty multidegree instead of only the achievable lcms.
     * Much slower; intended for cross-checks on small inputs.
     */
    bool full_sweep = false;
};

namespace detail {

/**
 * Squarefree multidegrees that can carry a nonzero Betti number: the
 * supports of the nontrivial lcm-lattice elements.  When the ideal has too
 * many generators to enumerate subsets, falls back to scanning all subsets
 * that are unions of the generator supports they contain.
 */
inline std::vector<Face> achievable_degrees(const MonomialIdeal& I)
{
    int n = I.num_vars();
    if (static_cast<int>(I.generators().size()) <= LcmLattice::max_generators) {
        LcmLattice L(I);
        std::vector<Face> out;
        out.reserve(static_cast<std::size_t>(L.size()) - 1);
        for (int e = 1; e < L.size(); ++e)
            out.push_back(L.element(e).support());
        return out;
    }
    if (n > 25)
        throw resource_limit_error(
            "too many generators and variables to enumerate multidegrees");
    std::vector<std::uint64_t> supports;
    for (const Monomial& g : I.generators())
        supports.push_back(g.support().mask());
    std::vector<Face> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        std::uint64_t closure = 0;
        for (std::uint64_t s : supports)
            if ((s & bits) == s)
                closure |= s;
        if (closure == bits)
            out.push_back(Face{bits});
    }
    return out;
}

inline std::vector<Face> all_degrees(int n)
{
    if (n > 20)
        throw resource_limit_error("full multidegree sweep limited to 20 variables");
    std::vector<Face> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
        out.push_back(Face{bits});
    return out;
}

inline void require_squarefree_ring(const MonomialIdeal& I, const BettiOptions& opt)
{
    if (!I.is_squarefree())
        throw std::invalid_argument(
            "this computation needs a squarefree ideal; polarize first");
    if (I.num_vars() > opt.max_vars)
        throw resource_limit_error(
            "ring has " + std::to_string(I.num_vars()) +
            " variables, above the configured limit of " +
            std::to_string(opt.max_vars));
}

}  // namespace detail

/**
 * Betti numbers from the homology of induced subcomplexes: for each
 * multidegree u, β_{i,u} is the dimension of reduced homology in degree
 * |u|-i-1 of the complex induced on u.  Squarefree ideals only.
 */
inline BettiTable betti_hochster(const MonomialIdeal& I,
                                 const BettiOptions& opt = {})
{
    detail::require_squarefree_ring(I, opt);
    SimplicialComplex G = stanley_reisner_complex(I);
    std::vector<Face> degrees = opt.full_sweep
                                    ? detail::all_degrees(I.num_vars())
                                    : detail::achievable_degrees(I);

    auto contributions = parallel_map<std::vector<std::pair<int, long>>>(
        degrees.size(), opt.threads, [&](std::size_t k) {
            Face u = degrees[k];
            SimplicialComplex Gu = induced(G, u);
            std::vector<int> dims = reduced_homology_all(Gu, opt.field);
            std::vector<std::pair<int, long>> row;
            int q = u.size();
            for (int i = 1; i <= q; ++i) {
                int idx = q - i;  // homology degree |u|-i-1, shifted by one
                if (idx < static_cast<int>(dims.size()) && dims[idx] != 0)
                    row.emplace_back(i, dims[idx]);
            }
            return row;
        });

    BettiTable T(I.ground());
    T.add(0, Monomial(), 1);
    for (std::size_t k = 0; k < degrees.size(); ++k)
        for (auto [i, v] : contributions[k])
            T.add(i, Monomial::squarefree(degrees[k]), v);
    return T;
}

/**
 * Betti numbers from the Alexander dual: for each multidegree u with
 * complement a face of the dual complex, β_{i,u} is the dimension of reduced
 * homology in degree i-2 of the link of that complement.  Squarefree only.
 */
inline BettiTable betti_hochster_dual(const MonomialIdeal& I,
                                      const BettiOptions& opt = {})
{
    detail::require_squarefree_ring(I, opt);
    SimplicialComplex G = stanley_reisner_complex(I);
    SimplicialComplex D = alexander_dual(G);
    Face all = I.ground().full();
    std::vector<Face> degrees = opt.full_sweep
                                    ? detail::all_degrees(I.num_vars())
                                    : detail::achievable_degrees(I);

    auto contributions = parallel_map<std::vector<std::pair<int, long>>>(
        degrees.size(), opt.threads, [&](std::size_t k) {
            std::vector<std::pair<int, long>> row;
            Face u = degrees[k];
            Face c = all.minus(u);
            if (!D.membership(c))
                return row;  // u is a face of G, so every β_{i,u} vanishes
            SimplicialComplex lk = link(D, c);
            std::vector<int> dims = reduced_homology_all(lk, opt.field);
            for (int i = 1; i <= u.size(); ++i) {
                int idx = i - 1;  // homology degree i-2, shifted by one
                if (idx < static_cast<int>(dims.size()) && dims[idx] != 0)
                    row.emplace_back(i, dims[idx]);
            }
            return row;
        });

    BettiTable T(I.ground());
    T.add(0, Monomial(), 1);
    for (std::size_t k = 0; k < degrees.size(); ++k)
        for (auto [i, v] : contributions[k])
            T.add(i, Monomial::squarefree(degrees[k]), v);
    return T;
}

/**
 * Betti numbers from the lcm lattice: for each nontrivial lattice element m,
 * β_{i,m} is the dimension of reduced homology in degree i-2 of the order
 * complex of the open interval (1, m).  Works for any monomial ideal.
 */
inline BettiTable betti_lcm_lattice(const MonomialIdeal& I,
                                    const BettiOptions& opt = {})
{
    LcmLattice L(I);
    int count = L.size() - 1;  // skip the bottom element
    auto contributions = parallel_map<std::vector<std::pair<int, long>>>(
        static_cast<std::size_t>(std::max(count, 0)), opt.threads,
        [&](std::size_t k) {
            int e = static_cast<int>(k) + 1;
            SimplicialComplex OC = order_complex(L.open_interval(L.bottom(), e));
            std::vector<int> dims = reduced_homology_all(OC, opt.field);
            std::vector<std::pair<int, long>> row;
            long limit = std::min<long>(L.element(e).degree(),
                                        static_cast<long>(dims.size()));
            for (int i = 1; i <= limit; ++i) {
                int idx = i - 1;  // homology degree i-2, shifted by one
                if (idx < static_cast<int>(dims.size()) && dims[idx] != 0)
                    row.emplace_back(i, dims[idx]);
            }
            return row;
        });

    BettiTable T(I.ground());
    T.add(0, Monomial(), 1);
    for (int e = 1; e < L.size(); ++e)
        for (auto [i, v] : contributions[static_cast<std::size_t>(e - 1)])
            T.add(i, L.element(e), v);
    return T;
}

/** One a+b = i split examined by the subadditivity check. */
struct SubadditivitySplit {
    int a = 0;
    int b = 0;
    long t_a = 0;
    long t_b = 0;
    bool holds = false;
};

/**
 * Result of testing t_i <= t_a + t_b at the top multidegree, where t_j is
 * the largest total degree with β_{j,-} nonzero.  The check applies when
 * β_{i,n} is nonzero for i = n - d + 1, with n the number of variables of
 * the polarized ring and d the smallest generator degree; otherwise it holds
 * vacuously.
 */
struct SubadditivityReport {
    int n = 0;         // variables after polarization
    long d = 0;        // smallest generator degree
    int i = 0;         // n - d + 1
    long beta_top = 0; // β_{i, product of all variables}
    bool applicable = false;
    long t_i = 0;
    std::vector<SubadditivitySplit> splits;
    bool holds = true;
};

inline SubadditivityReport check_subadditivity_at_top(const MonomialIdeal& I,
                                                      BettiOptions opt = {})
{
    if (I.is_zero_ideal())
        throw std::invalid_argument("subadditivity needs a nonzero ideal");
    MonomialIdeal P = polarize(I);

    SubadditivityReport rep;
    rep.n = P.num_vars();
    rep.d = P.min_generator_degree();
    rep.i = rep.n - static_cast<int>(rep.d) + 1;

    if (P.num_vars() > opt.max_vars)
        throw resource_limit_error(
            "polarized ring has " + std::to_string(P.num_vars()) +
            " variables, above the configured limit of " +
            std::to_string(opt.max_vars));

    // β_{i,n} lives at the full multidegree: homology degree d-2 of the
    // associated complex
    SimplicialComplex G = stanley_reisner_complex(P);
    rep.beta_top =
        reduced_homology_dim(G, static_cast<int>(rep.d) - 2, opt.field);
    rep.applicable = rep.beta_top != 0;
    if (!rep.applicable)
        return rep;  // holds vacuously

    BettiTable T = betti_hochster(P, opt);
    auto ti = T.max_degree_at(rep.i);
    if (!ti)
        throw std::logic_error("nonzero top Betti number missing from the table");
    rep.t_i = *ti;

    for (int a = 1; 2 * a <= rep.i; ++a) {
        int b = rep.i - a;
        auto ta = T.max_degree_at(a);
        auto tb = T.max_degree_at(b);
        if (!ta || !tb)
            throw std::logic_error("minimal resolution has a gap below its length");
        SubadditivitySplit s;
        s.a = a;
        s.b = b;
        s.t_a = *ta;
        s.t_b = *tb;
        s.holds = rep.t_i <= s.t_a + s.t_b;
        rep.splits.push_back(s);
        if (!s.holds)
            rep.holds = false;
    }
    return rep;
}

}  // namespace syzygy
