#ifndef SYZYGY_IO_HPP
#define SYZYGY_IO_HPP

#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "betti.hpp"
#include "breaker.hpp"
#include "complex.hpp"
#include "monomial.hpp"

/**
 * Text and JSON surfaces: the input document format (a `variables:` header
 * followed by one `ideal:` line or a list of `facet:` lines), the
 * Macaulay2-style Betti table layout, and JSON serialization of
 * certificates and search reports.  JSON objects keep insertion order so
 * output is byte-identical across runs.
 */
namespace syzygy {

using ordered_json = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// input documents

enum class DocumentKind { ideal, complex };

struct InputDocument {
    DocumentKind kind = DocumentKind::complex;
    VertexSet vars;
    std::optional<MonomialIdeal> ideal;        // set iff kind == ideal
    std::optional<SimplicialComplex> complex;  // set iff kind == complex

    bool operator==(const InputDocument& o) const
    {
        if (kind != o.kind || vars != o.vars)
            return false;
        if (ideal.has_value() != o.ideal.has_value() ||
            complex.has_value() != o.complex.has_value())
            return false;
        if (ideal && !(*ideal == *o.ideal))
            return false;
        if (complex && complex->facets() != o.complex->facets())
            return false;
        return true;
    }
};

/**
 * A monomial written as juxtaposed variable names with optional `*`
 * separators and `^` exponents: "ac", "x1*x2^2", "a^2b".  Names are matched
 * greedily (longest first), repeated variables multiply, and "1" is the
 * unit monomial.
 */
inline Monomial parse_monomial(const VertexSet& vars, const std::string& token)
{
    if (token == "1")
        return Monomial{};
    std::map<int, int> exps;
    std::size_t pos = 0;
    while (pos < token.size()) {
        if (token[pos] == '*') {
            ++pos;
            continue;
        }
        int var = -1;
        std::size_t len = 0;
        for (int v = 0; v < vars.size(); ++v) {
            const std::string& name = vars.name(v);
            if (name.size() > len && token.compare(pos, name.size(), name) == 0) {
                var = v;
                len = name.size();
            }
        }
        if (var < 0)
            throw parse_error("cannot read a variable name at \"" +
                              token.substr(pos) + "\" in monomial \"" + token +
                              "\"");
        pos += len;
        int exp = 1;
        if (pos < token.size() && token[pos] == '^') {
            ++pos;
            std::size_t digits = 0;
            int value = 0;
            while (pos < token.size() &&
                   std::isdigit(static_cast<unsigned char>(token[pos]))) {
                value = value * 10 + (token[pos] - '0');
                if (value > 1'000'000)
                    throw parse_error("exponent too large in monomial \"" + token +
                                      "\"");
                ++pos;
                ++digits;
            }
            if (digits == 0 || value == 0)
                throw parse_error("malformed exponent in monomial \"" + token +
                                  "\"");
            exp = value;
        }
        exps[var] += exp;
    }
    if (exps.empty())
        throw parse_error("empty monomial token");
    std::vector<std::pair<int, int>> pairs(exps.begin(), exps.end());
    return Monomial::from_pairs(std::move(pairs));
}

namespace detail {

inline std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_words(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

inline Face face_from_names(const VertexSet& vars,
                            const std::vector<std::string>& names,
                            const std::string& where)
{
    Face f;
    for (const auto& name : names) {
        auto idx = vars.index_of(name);
        if (!idx)
            throw parse_error(where + ": unknown vertex \"" + name + "\"");
        if (f.contains(*idx))
            throw parse_error(where + ": repeated vertex \"" + name + "\"");
        f = f.with(*idx);
    }
    return f;
}

}  // namespace detail

/**
 * Parses a document of the form
 *
 *     # comment
 *     variables: a b c d e
 *     ideal: ac bc ad bd ae be cde
 *
 * or with `facet: a c d` lines instead of the `ideal:` line.  The kind is
 * inferred from the body; mixing the two is an error, as is an `ideal:`
 * line without generators (the zero ideal).
 */
inline InputDocument parse_input(std::istream& in)
{
    InputDocument doc;
    bool have_vars = false;
    bool have_ideal = false;
    std::vector<Face> facets;
    bool have_facets = false;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string where = "line " + std::to_string(lineno);
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error(where + ": expected \"<directive>: ...\"");
        const std::string directive = detail::trim(line.substr(0, colon));
        const std::vector<std::string> words =
            detail::split_words(line.substr(colon + 1));

        if (directive == "variables") {
            if (have_vars)
                throw parse_error(where + ": repeated variables line");
            if (words.empty())
                throw parse_error(where + ": no variable names given");
            try {
                doc.vars = VertexSet(words);
            } catch (const std::invalid_argument& e) {
                throw parse_error(where + ": " + e.what());
            }
            have_vars = true;
            continue;
        }
        if (!have_vars)
            throw parse_error(where + ": the variables line must come first");

        if (directive == "ideal") {
            if (have_ideal)
                throw parse_error(where + ": repeated ideal line");
            if (have_facets)
                throw parse_error(where + ": cannot mix ideal and facet lines");
            if (words.empty())
                throw parse_error(where +
                                  ": zero ideal (no generators listed)");
            std::vector<Monomial> gens;
            for (const auto& w : words)
                gens.push_back(parse_monomial(doc.vars, w));
            try {
                doc.ideal = MonomialIdeal::from_generators(doc.vars, std::move(gens));
            } catch (const std::invalid_argument& e) {
                throw parse_error(where + ": " + e.what());
            }
            have_ideal = true;
            continue;
        }
        if (directive == "facet") {
            if (have_ideal)
                throw parse_error(where + ": cannot mix ideal and facet lines");
            facets.push_back(detail::face_from_names(doc.vars, words, where));
            have_facets = true;
            continue;
        }
        throw parse_error(where + ": unknown directive \"" + directive + "\"");
    }

    if (!have_vars)
        throw parse_error("missing variables line");
    if (have_ideal) {
        doc.kind = DocumentKind::ideal;
    } else {
        doc.kind = DocumentKind::complex;
        doc.complex = SimplicialComplex::from_facets(doc.vars, std::move(facets));
    }
    return doc;
}

inline InputDocument parse_input_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_input(in);
}

/** Canonical rendering; parse_input(print_input(doc)) reproduces doc. */
inline std::string print_input(const InputDocument& doc)
{
    std::string out = "variables:";
    for (const auto& name : doc.vars.names())
        out += " " + name;
    out += "\n";
    if (doc.kind == DocumentKind::ideal) {
        out += "ideal:";
        for (const Monomial& g : doc.ideal->generators())
            out += " " + g.str(doc.vars);
        out += "\n";
    } else {
        for (Face f : doc.complex->facets()) {
            out += "facet:";
            for (int v : f.vertices())
                out += " " + doc.vars.name(v);
            out += "\n";
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// rendering

/** "{a,c,d}"; "{}" for the empty face. */
inline std::string face_str(const VertexSet& vars, Face f)
{
    std::string out = "{";
    bool first = true;
    for (int v : f.vertices()) {
        if (!first)
            out += ",";
        out += vars.name(v);
        first = false;
    }
    return out + "}";
}

/**
 * The Macaulay2 layout: a header row of homological indices, a "total:"
 * row, and one row per regularity slice j - i, with "." marking zeros.
 */
inline std::string render_betti_table(const BettiTable& T)
{
    const auto coarse = T.coarse();
    const int pd = T.proj_dim();
    long max_slice = 0;
    for (const auto& [ij, v] : coarse)
        max_slice = std::max(max_slice, ij.second - ij.first);

    std::vector<long> totals = T.totals();
    auto cell = [&](int i, long slice) -> std::string {
        auto it = coarse.find({i, slice + i});
        return it == coarse.end() ? "." : std::to_string(it->second);
    };

    std::vector<std::string> labels{"", "total:"};
    for (long r = 0; r <= max_slice; ++r)
        labels.push_back(std::to_string(r) + ":");
    std::size_t label_w = 0;
    for (const auto& l : labels)
        label_w = std::max(label_w, l.size());

    std::vector<std::size_t> col_w(static_cast<std::size_t>(pd) + 1);
    for (int i = 0; i <= pd; ++i) {
        std::size_t w = std::to_string(i).size();
        w = std::max(w, std::to_string(totals[static_cast<std::size_t>(i)]).size());
        for (long r = 0; r <= max_slice; ++r)
            w = std::max(w, cell(i, r).size());
        col_w[static_cast<std::size_t>(i)] = w;
    }

    std::string out;
    auto pad_left = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    auto row = [&](const std::string& label, auto text_at) {
        out += pad_left(label, label_w);
        for (int i = 0; i <= pd; ++i)
            out += " " + pad_left(text_at(i), col_w[static_cast<std::size_t>(i)]);
        out += "\n";
    };
    row("", [](int i) { return std::to_string(i); });
    row("total:", [&](int i) {
        return std::to_string(totals[static_cast<std::size_t>(i)]);
    });
    for (long r = 0; r <= max_slice; ++r)
        row(std::to_string(r) + ":", [&](int i) { return cell(i, r); });
    return out;
}

/** One line per split, e.g. "t_3=5 <= t_1+t_2=7 PASS". */
inline std::string render_subadditivity(const SubadditivityReport& rep)
{
    std::string out = "polarized: n=" + std::to_string(rep.n) +
                      " min_generator_degree=" + std::to_string(rep.d) +
                      " i=" + std::to_string(rep.i) +
                      " beta_top=" + std::to_string(rep.beta_top) + "\n";
    if (!rep.applicable) {
        out += "beta_{" + std::to_string(rep.i) + "," + std::to_string(rep.n) +
               "}=0: theorem hypothesis not met; holds vacuously\n";
        return out;
    }
    for (const auto& s : rep.splits) {
        out += "t_" + std::to_string(rep.i) + "=" + std::to_string(rep.t_i) +
               " <= t_" + std::to_string(s.a) + "+t_" + std::to_string(s.b) +
               "=" + std::to_string(s.t_a + s.t_b) +
               (s.holds ? " PASS" : " FAIL") + "\n";
    }
    out += rep.holds ? "subadditivity holds at the top degree\n"
                     : "SUBADDITIVITY VIOLATION\n";
    return out;
}

// --------------------------------------------------------------------------
// JSON

inline ordered_json face_to_json(const VertexSet& vars, Face f)
{
    ordered_json arr = ordered_json::array();
    for (int v : f.vertices())
        arr.push_back(vars.name(v));
    return arr;
}

inline Face face_from_json(const VertexSet& vars, const nlohmann::json& j)
{
    if (!j.is_array())
        throw parse_error("face must be an array of vertex names");
    std::vector<std::string> names;
    for (const auto& e : j)
        names.push_back(e.get<std::string>());
    return detail::face_from_names(vars, names, "face");
}

inline ordered_json document_to_json(const InputDocument& doc)
{
    ordered_json j;
    j["variables"] = doc.vars.names();
    if (doc.kind == DocumentKind::ideal) {
        ordered_json gens = ordered_json::array();
        for (const Monomial& g : doc.ideal->generators())
            gens.push_back(g.str(doc.vars));
        j["ideal"] = std::move(gens);
    } else {
        ordered_json facets = ordered_json::array();
        for (Face f : doc.complex->facets())
            facets.push_back(face_to_json(doc.vars, f));
        j["facets"] = std::move(facets);
    }
    return j;
}

inline ordered_json complex_to_json(const SimplicialComplex& K)
{
    ordered_json j;
    j["variables"] = K.ground().names();
    ordered_json facets = ordered_json::array();
    for (Face f : K.facets())
        facets.push_back(face_to_json(K.ground(), f));
    j["facets"] = std::move(facets);
    return j;
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j)
{
    if (!j.contains("variables") || !j.contains("facets"))
        throw parse_error("complex object needs \"variables\" and \"facets\"");
    VertexSet vars;
    try {
        vars = VertexSet(j.at("variables").get<std::vector<std::string>>());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad variables: ") + e.what());
    }
    std::vector<Face> facets;
    for (const auto& f : j.at("facets"))
        facets.push_back(face_from_json(vars, f));
    return SimplicialComplex::from_facets(std::move(vars), std::move(facets));
}

inline ordered_json betti_to_json(const BettiTable& T, const FieldSpec& field)
{
    ordered_json j;
    j["variables"] = T.vars().names();
    j["field"] = field.str();
    j["projective_dimension"] = T.proj_dim();
    j["totals"] = T.totals();
    ordered_json entries = ordered_json::array();
    for (const auto& [i, row] : T.rows()) {
        for (const auto& [m, v] : row) {
            ordered_json e;
            e["i"] = i;
            e["degree"] = m.str(T.vars());
            e["value"] = v;
            entries.push_back(std::move(e));
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

inline ordered_json sparse_chain_to_json(const VertexSet& vars,
                                         const SparseChain& c)
{
    ordered_json j;
    j["dim"] = c.dim;
    ordered_json terms = ordered_json::array();
    for (const auto& [f, coeff] : c.terms) {
        ordered_json t;
        t["face"] = face_to_json(vars, f);
        t["coeff"] = coeff;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline SparseChain sparse_chain_from_json(const VertexSet& vars,
                                          const nlohmann::json& j)
{
    SparseChain c;
    c.dim = j.at("dim").get<int>();
    for (const auto& t : j.at("terms"))
        c.terms.emplace_back(face_from_json(vars, t.at("face")),
                             t.at("coeff").get<std::string>());
    return c;
}

inline ordered_json link_certificate_to_json(const VertexSet& vars,
                                             const BreakCertificateLink& cert)
{
    ordered_json j;
    j["a"] = cert.a;
    j["b"] = cert.b;
    j["F"] = face_to_json(vars, cert.F);
    j["G"] = face_to_json(vars, cert.G);
    j["facets_containing_F"] = cert.A;
    j["facets_containing_G"] = cert.B;
    j["witness_f"] = cert.witness_f;
    j["witness_g"] = cert.witness_g;
    j["sigma_f"] = cert.sigma_f ? sparse_chain_to_json(vars, *cert.sigma_f)
                                : ordered_json(nullptr);
    j["sigma_g"] = cert.sigma_g ? sparse_chain_to_json(vars, *cert.sigma_g)
                                : ordered_json(nullptr);
    return j;
}

inline BreakCertificateLink link_certificate_from_json(const VertexSet& vars,
                                                       const nlohmann::json& j)
{
    BreakCertificateLink cert;
    cert.a = j.at("a").get<int>();
    cert.b = j.at("b").get<int>();
    cert.F = face_from_json(vars, j.at("F"));
    cert.G = face_from_json(vars, j.at("G"));
    cert.A = j.at("facets_containing_F").get<std::vector<int>>();
    cert.B = j.at("facets_containing_G").get<std::vector<int>>();
    cert.witness_f = j.at("witness_f").get<int>();
    cert.witness_g = j.at("witness_g").get<int>();
    if (j.contains("sigma_f") && !j.at("sigma_f").is_null())
        cert.sigma_f = sparse_chain_from_json(vars, j.at("sigma_f"));
    if (j.contains("sigma_g") && !j.at("sigma_g").is_null())
        cert.sigma_g = sparse_chain_from_json(vars, j.at("sigma_g"));
    return cert;
}

inline ordered_json induced_certificate_to_json(const VertexSet& vars,
                                                const BreakCertificateInduced& cert)
{
    ordered_json j;
    j["a"] = cert.a;
    j["b"] = cert.b;
    j["C"] = face_to_json(vars, cert.C);
    j["D"] = face_to_json(vars, cert.D);
    j["witness_c"] = cert.witness_c;
    j["witness_d"] = cert.witness_d;
    return j;
}

inline BreakCertificateInduced induced_certificate_from_json(
    const VertexSet& vars, const nlohmann::json& j)
{
    BreakCertificateInduced cert;
    cert.a = j.at("a").get<int>();
    cert.b = j.at("b").get<int>();
    cert.C = face_from_json(vars, j.at("C"));
    cert.D = face_from_json(vars, j.at("D"));
    cert.witness_c = j.at("witness_c").get<int>();
    cert.witness_d = j.at("witness_d").get<int>();
    return cert;
}

/** A self-contained break certificate: complex, field, and certificate. */
struct CertificateDocument {
    SimplicialComplex complex;
    FieldSpec field = FieldSpec::rationals();
    std::variant<BreakCertificateLink, BreakCertificateInduced> certificate;
};

inline ordered_json certificate_document_to_json(const CertificateDocument& doc)
{
    ordered_json j;
    const bool is_link =
        std::holds_alternative<BreakCertificateLink>(doc.certificate);
    j["kind"] = is_link ? "link-break" : "induced-break";
    j["field"] = doc.field.str();
    j["complex"] = complex_to_json(doc.complex);
    j["certificate"] =
        is_link ? link_certificate_to_json(
                      doc.complex.ground(),
                      std::get<BreakCertificateLink>(doc.certificate))
                : induced_certificate_to_json(
                      doc.complex.ground(),
                      std::get<BreakCertificateInduced>(doc.certificate));
    return j;
}

inline CertificateDocument certificate_document_from_json(const nlohmann::json& j)
{
    try {
        CertificateDocument doc{complex_from_json(j.at("complex")),
                                FieldSpec::parse(j.at("field").get<std::string>()),
                                BreakCertificateLink{}};
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "link-break")
            doc.certificate = link_certificate_from_json(doc.complex.ground(),
                                                         j.at("certificate"));
        else if (kind == "induced-break")
            doc.certificate = induced_certificate_from_json(doc.complex.ground(),
                                                            j.at("certificate"));
        else
            throw parse_error("unknown certificate kind \"" + kind + "\"");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed certificate document: ") +
                          e.what());
    }
}

inline bool verify_certificate_document(const CertificateDocument& doc)
{
    if (const auto* link = std::get_if<BreakCertificateLink>(&doc.certificate))
        return verify_certificate_link(doc.complex, *link, doc.field);
    return verify_certificate_induced(
        doc.complex, std::get<BreakCertificateInduced>(doc.certificate),
        doc.field);
}

inline ordered_json link_report_to_json(const VertexSet& vars,
                                        const LinkSearchReport& rep)
{
    ordered_json j;
    j["homology_degrees"] = rep.homology_degrees;
    ordered_json splits = ordered_json::array();
    for (const auto& s : rep.splits) {
        ordered_json rec;
        rec["i"] = s.i;
        rec["a"] = s.a;
        rec["b"] = s.b;
        rec["none_found"] = s.none_found;
        ordered_json found = ordered_json::array();
        for (const auto& cert : s.found)
            found.push_back(link_certificate_to_json(vars, cert));
        rec["found"] = std::move(found);
        splits.push_back(std::move(rec));
    }
    j["splits"] = std::move(splits);
    j["any_none_found"] = rep.any_none_found;
    return j;
}

inline ordered_json induced_report_to_json(const VertexSet& vars,
                                           const InducedSearchReport& rep)
{
    ordered_json j;
    j["homology_degrees"] = rep.homology_degrees;
    ordered_json splits = ordered_json::array();
    for (const auto& s : rep.splits) {
        ordered_json rec;
        rec["i"] = s.i;
        rec["a"] = s.a;
        rec["b"] = s.b;
        rec["none_found"] = s.none_found;
        ordered_json found = ordered_json::array();
        for (const auto& cert : s.found)
            found.push_back(induced_certificate_to_json(vars, cert));
        rec["found"] = std::move(found);
        splits.push_back(std::move(rec));
    }
    j["splits"] = std::move(splits);
    j["any_none_found"] = rep.any_none_found;
    return j;
}

inline ordered_json complement_report_to_json(const VertexSet& vars,
                                              const ComplementSearchReport& rep)
{
    ordered_json j;
    j["top"] = rep.top.str(vars);
    j["top_indices"] = rep.top_indices;
    ordered_json splits = ordered_json::array();
    for (const auto& s : rep.splits) {
        ordered_json rec;
        rec["i"] = s.i;
        rec["a"] = s.a;
        rec["b"] = s.b;
        rec["none_found"] = s.none_found;
        ordered_json pairs = ordered_json::array();
        for (const auto& [m, mp] : s.pairs)
            pairs.push_back(ordered_json::array({m.str(vars), mp.str(vars)}));
        rec["pairs"] = std::move(pairs);
        splits.push_back(std::move(rec));
    }
    j["splits"] = std::move(splits);
    j["any_none_found"] = rep.any_none_found;
    return j;
}

inline ordered_json subadditivity_to_json(const SubadditivityReport& rep)
{
    ordered_json j;
    j["n"] = rep.n;
    j["min_generator_degree"] = rep.d;
    j["i"] = rep.i;
    j["beta_top"] = rep.beta_top;
    j["applicable"] = rep.applicable;
    if (rep.applicable) {
        j["t_i"] = rep.t_i;
        ordered_json splits = ordered_json::array();
        for (const auto& s : rep.splits) {
            ordered_json rec;
            rec["a"] = s.a;
            rec["b"] = s.b;
            rec["t_a"] = s.t_a;
            rec["t_b"] = s.t_b;
            rec["holds"] = s.holds;
            splits.push_back(std::move(rec));
        }
        j["splits"] = std::move(splits);
    }
    j["holds"] = rep.holds;
    return j;
}

}  // namespace syzygy

#endif  // SYZYGY_IO_HPP
