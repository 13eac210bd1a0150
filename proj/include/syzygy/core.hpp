#ifndef SYZYGY_CORE_HPP
#define SYZYGY_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

/**
 * Core value types shared by every module: named ground sets, packed vertex
 * subsets, and the error taxonomy that maps onto the CLI exit codes.
 */
namespace syzygy {

/** Input or document could not be parsed (CLI exit code 1). */
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/** A stated theorem hypothesis does not hold for the instance (exit code 2). */
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

/**
 * An internally produced object failed its own re-verification.  This always
 * signals a bug, never bad input (exit code 3).
 */
struct verification_error : std::logic_error {
    explicit verification_error(const std::string& what) : std::logic_error(what) {}
};

/** A documented resource cap was exceeded (exit code 4). */
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A subset of ground-set indices packed into a 64-bit mask.
 *
 * The canonical order of a face is the ascending order of its vertex
 * indices; every algorithm that enumerates faces or orients boundaries
 * relies on that order.  Ground sets are therefore capped at 64 vertices.
 */
class Face {
  public:
    constexpr Face() : bits_(0) {}
    constexpr explicit Face(std::uint64_t mask) : bits_(mask) {}

    static Face of(std::initializer_list<int> vertices)
    {
        Face f;
        for (int v : vertices)
            f = f.with(v);
        return f;
    }

    static Face from_vertices(const std::vector<int>& vertices)
    {
        Face f;
        for (int v : vertices)
            f = f.with(v);
        return f;
    }

    std::uint64_t mask() const { return bits_; }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int v) const { return (bits_ >> v) & 1u; }
    Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
    Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }

    bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

    Face operator|(Face other) const { return Face(bits_ | other.bits_); }
    Face operator&(Face other) const { return Face(bits_ & other.bits_); }
    /** Set difference. */
    Face minus(Face other) const { return Face(bits_ & ~other.bits_); }
    /** Complement inside the first n indices. */
    Face complement(int n) const
    {
        std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return Face(all & ~bits_);
    }

    /** Ascending vertex indices. */
    std::vector<int> vertices() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        std::uint64_t m = bits_;
        while (m) {
            out.push_back(__builtin_ctzll(m));
            m &= m - 1;
        }
        return out;
    }

    /** Smallest vertex index; face must be nonempty. */
    int smallest() const
    {
        if (empty())
            throw std::invalid_argument("Face::smallest on empty face");
        return __builtin_ctzll(bits_);
    }

    /** The k-th smallest vertex (0-based); k must be < size(). */
    int vertex_at(int k) const
    {
        std::uint64_t m = bits_;
        for (int i = 0; i < k; ++i)
            m &= m - 1;
        if (m == 0)
            throw std::invalid_argument("Face::vertex_at out of range");
        return __builtin_ctzll(m);
    }

    /** 0-based rank of v within the ascending vertex list; v must be a member. */
    int rank_of(int v) const
    {
        if (!contains(v))
            throw std::invalid_argument("Face::rank_of: vertex not in face");
        std::uint64_t below = bits_ & ((std::uint64_t{1} << v) - 1);
        return __builtin_popcountll(below);
    }

    bool operator==(const Face& other) const { return bits_ == other.bits_; }
    bool operator!=(const Face& other) const { return bits_ != other.bits_; }

  private:
    std::uint64_t bits_;
};

/**
 * Lexicographic comparison of the ascending vertex sequences of two faces.
 * A proper prefix sorts before its extensions, so {0,1} < {0,1,2} < {0,2}.
 * This is the tie-breaking order used everywhere a face list is emitted.
 */
inline bool face_lex_less(Face a, Face b)
{
    if (a == b)
        return false;
    std::uint64_t diff = a.mask() ^ b.mask();
    int v = __builtin_ctzll(diff);
    if (a.contains(v)) {
        // a owns the smallest differing vertex; a sorts first unless b is a
        // proper prefix of a (b has nothing beyond the shared part).
        return (b.mask() >> v) != 0;
    }
    return (a.mask() >> v) == 0;
}

struct FaceLexLess {
    bool operator()(Face a, Face b) const { return face_lex_less(a, b); }
};

/**
 * An ordered ground set of uniquely named vertices.  The position of a name
 * in the list is its index; faces and monomial exponents refer to indices.
 * A ground set may contain vertices that appear in no facet: the count n is
 * part of the data.
 */
class VertexSet {
  public:
    VertexSet() = default;

    explicit VertexSet(std::vector<std::string> names) : names_(std::move(names))
    {
        if (names_.size() > 64)
            throw resource_limit_error("ground set exceeds 64 vertices");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("empty vertex name");
            if (!index_.emplace(names_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate vertex name: " + names_[i]);
        }
    }

    /** Convenience ground set x1..xn. */
    static VertexSet numbered(int n, const std::string& prefix = "x")
    {
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            names.push_back(prefix + std::to_string(i));
        return VertexSet(std::move(names));
    }

    /** Ground set with one single-character name per letter, e.g. "abcde". */
    static VertexSet lettered(const std::string& letters)
    {
        std::vector<std::string> names;
        names.reserve(letters.size());
        for (char c : letters)
            names.push_back(std::string(1, c));
        return VertexSet(std::move(names));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(const std::string& name) const
    {
        auto it = index_.find(name);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    Face full() const { return Face().complement(size()); }

    bool operator==(const VertexSet& other) const { return names_ == other.names_; }
    bool operator!=(const VertexSet& other) const { return names_ != other.names_; }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace syzygy

#endif  // SYZYGY_CORE_HPP
