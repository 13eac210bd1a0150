#ifndef SYZYGY_FIELD_HPP
#define SYZYGY_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "core.hpp"

/**
 * Coefficient fields for the homology engine.  Everything is exact: the
 * rationals are GMP-backed, prime fields reduce modulo a runtime prime.
 * No floating point is used anywhere.
 *
 * Algorithms are templated over a field object that supplies the element
 * type and arithmetic; FieldSpec is the runtime description that the CLI
 * and the serializers pass around, dispatched via with_field().
 */
namespace syzygy {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

/** Deterministic Miller-Rabin, valid for all 64-bit inputs. */
inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

}  // namespace detail

/** Runtime field description: the rationals or GF(p) for a prime p. */
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    static FieldSpec gf(std::uint64_t p)
    {
        if (!detail::is_prime_u64(p))
            throw std::invalid_argument("field characteristic is not prime: " +
                                        std::to_string(p));
        return FieldSpec{Kind::prime, p};
    }

    /** Accepts "rat" or "gf:<p>". */
    static FieldSpec parse(const std::string& s)
    {
        if (s == "rat")
            return rationals();
        if (s.rfind("gf:", 0) == 0) {
            const std::string digits = s.substr(3);
            if (digits.empty() ||
                digits.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("bad field spec: " + s);
            try {
                return gf(std::stoull(digits));
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what());
            } catch (const std::out_of_range&) {
                throw parse_error("field characteristic out of range: " + s);
            }
        }
        throw parse_error("bad field spec (want rat or gf:<p>): " + s);
    }

    std::string str() const
    {
        return kind == Kind::rationals ? "rat" : "gf:" + std::to_string(p);
    }

    bool operator==(const FieldSpec&) const = default;
};

/** Exact rational arithmetic on GMP mpq values. */
struct RationalField {
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long v) const { return Element(v); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element div(const Element& a, const Element& b) const { return a / b; }
    Element neg(const Element& a) const { return -a; }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    std::string str(const Element& a) const { return a.get_str(); }

    /** Inverse of str(): accepts "p" or "p/q" in base 10. */
    Element parse(const std::string& s) const
    {
        if (s.empty() || s.find_first_of(" \t\r\n") != std::string::npos)
            throw parse_error("bad rational literal: '" + s + "'");
        Element q;
        if (q.set_str(s, 10) != 0)
            throw parse_error("bad rational literal: '" + s + "'");
        if (q.get_den() == 0)
            throw parse_error("zero denominator in rational literal: '" + s + "'");
        q.canonicalize();
        return q;
    }

    FieldSpec spec() const { return FieldSpec::rationals(); }
};

/** Arithmetic modulo a runtime prime; elements are canonical residues. */
struct PrimeField {
    std::uint64_t p;

    using Element = std::uint64_t;

    Element zero() const { return 0; }
    Element one() const { return 1 % p; }
    Element from_int(long v) const
    {
        long r = v % static_cast<long>(p);
        if (r < 0)
            r += static_cast<long>(p);
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const
    {
        Element s = a + b;
        return s >= p ? s - p : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
    Element mul(Element a, Element b) const { return detail::mulmod_u64(a, b, p); }
    Element neg(Element a) const { return a == 0 ? 0 : p - a; }

    Element inv(Element a) const
    {
        if (a == 0)
            throw std::invalid_argument("division by zero in prime field");
        // extended Euclid on signed 128-bit intermediates
        __int128 t = 0, new_t = 1;
        __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a);
        while (new_r != 0) {
            __int128 q = r / new_r;
            __int128 tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0)
            t += static_cast<__int128>(p);
        return static_cast<Element>(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }
    std::string str(Element a) const { return std::to_string(a); }

    /** Inverse of str(): a decimal integer, reduced into the field. */
    Element parse(const std::string& s) const
    {
        std::size_t pos = 0;
        bool negate = false;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            negate = s[0] == '-';
            pos = 1;
        }
        if (pos >= s.size())
            throw parse_error("bad field element literal: '" + s + "'");
        Element r = 0;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw parse_error("bad field element literal: '" + s + "'");
            r = add(mul(r, 10 % p), static_cast<Element>(s[pos] - '0') % p);
        }
        return negate ? neg(r) : r;
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime, p}; }
};

/** Calls fn with the concrete field object described by spec. */
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.kind == FieldSpec::Kind::rationals)
        return fn(RationalField{});
    return fn(PrimeField{spec.p});
}

}  // namespace syzygy

#endif  // SYZYGY_FIELD_HPP
