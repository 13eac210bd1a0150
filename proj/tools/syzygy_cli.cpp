// Command-line front end: Betti tables, homology-splitting certificates,
// subadditivity checks, structured searches, and certificate verification.
//
// Exit codes:
//   0  success (for `subadditivity`: the inequality holds or is vacuous;
//      for `verify`: the certificate checks out)
//   1  usage or input error (bad flags, malformed documents, bad field spec)
//   2  hypothesis not met (the requested split or search has no answer of
//      the promised shape; reported as a potential counterexample)
//   3  verification failure (a certificate fails its checks, a subadditivity
//      violation, or an internal consistency error)
//   4  resource cap exceeded (see SYZYGY_MAX_N)

#include <CLI11.hpp>
#include <syzygy/syzygy.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace syzygy;

// ---------------------------------------------------------------------------
// shared helpers

int default_threads()
{
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Subset-enumeration cap shared by every command; SYZYGY_MAX_N overrides the
// built-in default of 24.
int enumeration_cap()
{
    const char* s = std::getenv("SYZYGY_MAX_N");
    if (s == nullptr || *s == '\0')
        return 24;
    int value = 0;
    const char* end = s + std::string_view(s).size();
    auto [ptr, ec] = std::from_chars(s, end, value);
    if (ec != std::errc{} || ptr != end || value < 1)
        throw parse_error("SYZYGY_MAX_N must be a positive integer, got \"" +
                          std::string(s) + "\"");
    return value;
}

InputDocument load_document(const std::string& path)
{
    if (path == "-")
        return parse_input(std::cin);
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open input file: " + path);
    return parse_input(in);
}

MonomialIdeal ideal_of_document(const InputDocument& doc)
{
    if (doc.kind == DocumentKind::ideal)
        return *doc.ideal;
    return stanley_reisner_ideal(*doc.complex);
}

// For link questions the natural arena is the Alexander dual of the ideal's
// Stanley-Reisner complex; for induced-subcomplex questions it is the
// Stanley-Reisner complex itself.  Complex documents are used as given.
SimplicialComplex complex_of_document(const InputDocument& doc, bool dual)
{
    if (doc.kind == DocumentKind::complex)
        return *doc.complex;
    if (!doc.ideal->is_squarefree())
        throw parse_error(
            "this command needs a squarefree ideal or an explicit complex; "
            "polarize the ideal first");
    SimplicialComplex K = stanley_reisner_complex(*doc.ideal);
    return dual ? alexander_dual(K) : K;
}

std::string chain_summary(const std::optional<SparseChain>& sigma)
{
    if (!sigma)
        return "(none)";
    return "dim " + std::to_string(sigma->dim) + ", " +
           std::to_string(sigma->terms.size()) + " term" +
           (sigma->terms.size() == 1 ? "" : "s");
}

std::string index_list(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(xs[i]);
    }
    return out.empty() ? "(none)" : out;
}

// ---------------------------------------------------------------------------
// betti

struct BettiArgs {
    std::string input = "-";
    std::string field = "rat";
    std::string format = "text";
    int threads = default_threads();
};

int run_betti(const BettiArgs& args)
{
    InputDocument doc = load_document(args.input);
    MonomialIdeal I = ideal_of_document(doc);

    BettiOptions opt;
    opt.field = FieldSpec::parse(args.field);
    opt.threads = args.threads;
    opt.max_vars = enumeration_cap();

    const bool squarefree = I.is_squarefree();
    BettiTable T = squarefree ? betti_hochster(I, opt) : betti_lcm_lattice(I, opt);

    if (args.format == "json") {
        ordered_json j = betti_to_json(T, opt.field);
        j["route"] = squarefree ? "hochster" : "lcm-lattice";
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << render_betti_table(T);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// break

struct BreakArgs {
    std::string input = "-";
    std::string mode = "links";
    int a = 0;
    int b = 0;
    std::string field = "rat";
    std::string format = "text";
};

int run_break(const BreakArgs& args)
{
    InputDocument doc = load_document(args.input);
    FieldSpec field = FieldSpec::parse(args.field);
    SimplicialComplex K = complex_of_document(doc, args.mode == "links");

    std::variant<BreakCertificateLink, BreakCertificateInduced> cert;
    if (args.mode == "links")
        cert = break_on_links(K, args.a, args.b, field);
    else
        cert = break_induced(K, args.a, args.b, field, enumeration_cap());
    CertificateDocument cert_doc{K, field, std::move(cert)};

    if (!verify_certificate_document(cert_doc))
        throw verification_error("emitted certificate failed verification");

    if (args.format == "json") {
        std::cout << certificate_document_to_json(cert_doc).dump(2) << '\n';
        return 0;
    }

    const VertexSet& vars = K.ground();
    if (const auto* c = std::get_if<BreakCertificateLink>(&cert_doc.certificate)) {
        std::cout << "mode: links\n"
                  << "a=" << c->a << " b=" << c->b << '\n'
                  << "F = " << face_str(vars, c->F) << '\n'
                  << "facets containing F: " << index_list(c->A) << '\n'
                  << "G = " << face_str(vars, c->G) << '\n'
                  << "facets containing G: " << index_list(c->B) << '\n'
                  << "dim H~_" << c->a - 2 << "(link F) = " << c->witness_f << '\n'
                  << "dim H~_" << c->b - 2 << "(link G) = " << c->witness_g << '\n'
                  << "sigma_F: " << chain_summary(c->sigma_f) << '\n'
                  << "sigma_G: " << chain_summary(c->sigma_g) << '\n';
    } else {
        const auto& ci = std::get<BreakCertificateInduced>(cert_doc.certificate);
        std::cout << "mode: induced\n"
                  << "a=" << ci.a << " b=" << ci.b << '\n'
                  << "C = " << face_str(vars, ci.C) << '\n'
                  << "D = " << face_str(vars, ci.D) << '\n'
                  << "dim H~_" << ci.C.size() - ci.a - 1 << "(K[C]) = "
                  << ci.witness_c << '\n'
                  << "dim H~_" << ci.D.size() - ci.b - 1 << "(K[D]) = "
                  << ci.witness_d << '\n';
    }
    std::cout << "verified\n";
    return 0;
}

// ---------------------------------------------------------------------------
// subadditivity

struct SubadditivityArgs {
    std::string input = "-";
    std::string field = "rat";
    std::string format = "text";
    int threads = default_threads();
};

int run_subadditivity(const SubadditivityArgs& args)
{
    InputDocument doc = load_document(args.input);
    MonomialIdeal I = ideal_of_document(doc);

    BettiOptions opt;
    opt.field = FieldSpec::parse(args.field);
    opt.threads = args.threads;
    opt.max_vars = enumeration_cap();

    SubadditivityReport rep = check_subadditivity_at_top(I, opt);

    if (args.format == "json")
        std::cout << subadditivity_to_json(rep).dump(2) << '\n';
    else
        std::cout << render_subadditivity(rep);
    return rep.holds ? 0 : 3;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
    std::string input;
    std::string question;
    std::string field = "rat";
    int threads = default_threads();
    std::size_t max_per_split = 1;
    bool all = false;
    bool random = false;
    int n = 5;
    int gens = 4;
    int trials = 20;
    std::uint64_t seed = 1;
};

// Runs one search and stores the report (and, when the arena complex was
// derived from an ideal, that complex) into `line`.  Returns the
// none-found flag so sweeps can count potential counterexamples.
bool search_into(ordered_json& line, const InputDocument& doc,
                 const std::string& question, const SearchOptions& opt)
{
    if (question == "complements") {
        MonomialIdeal I = ideal_of_document(doc);
        ComplementSearchReport rep = search_question_complements(I, opt);
        line["report"] = complement_report_to_json(I.ground(), rep);
        return rep.any_none_found;
    }
    const bool links = question == "links";
    SimplicialComplex K = complex_of_document(doc, links);
    if (doc.kind == DocumentKind::ideal)
        line["search_complex"] = complex_to_json(K);
    if (links) {
        LinkSearchReport rep = search_question_links(K, opt);
        line["report"] = link_report_to_json(K.ground(), rep);
        return rep.any_none_found;
    }
    InducedSearchReport rep = search_question_induced(K, opt);
    line["report"] = induced_report_to_json(K.ground(), rep);
    return rep.any_none_found;
}

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int n, int max_gens)
{
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        names.push_back("x" + std::to_string(v + 1));
    VertexSet vars(std::move(names));

    const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    std::size_t count = 1 + static_cast<std::size_t>(
                                rng() % static_cast<std::uint64_t>(max_gens));
    std::vector<Monomial> gens;
    gens.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::uint64_t mask = 1 + rng() % full;
        gens.push_back(Monomial::squarefree(Face(mask)));
    }
    return MonomialIdeal::from_generators(vars, std::move(gens));
}

int run_search(const SearchArgs& args)
{
    FieldSpec field = FieldSpec::parse(args.field);
    SearchOptions opt;
    opt.field = field;
    opt.threads = args.threads;
    opt.max_per_split = args.all ? std::max<std::size_t>(args.max_per_split, 64)
                                 : args.max_per_split;
    opt.max_n = enumeration_cap();

    if (!args.random) {
        if (args.input.empty())
            throw parse_error("search: provide an input file or --random");
        InputDocument doc = load_document(args.input);
        ordered_json line;
        line["question"] = args.question;
        line["field"] = field.str();
        line["instance"] = document_to_json(doc);
        search_into(line, doc, args.question, opt);
        std::cout << line.dump() << '\n';
        return 0;
    }

    if (args.n < 1 || args.n > opt.max_n)
        throw resource_limit_error(
            "search --random: --n must lie in [1, " +
            std::to_string(opt.max_n) + "]");
    if (args.gens < 1)
        throw parse_error("search --random: --gens must be positive");
    if (args.trials < 1)
        throw parse_error("search --random: --trials must be positive");

    std::mt19937_64 rng(args.seed);
    int skipped = 0;
    int flagged = 0;
    for (int t = 0; t < args.trials; ++t) {
        MonomialIdeal I = random_squarefree_ideal(rng, args.n, args.gens);
        InputDocument doc;
        doc.kind = DocumentKind::ideal;
        doc.vars = I.ground();
        doc.ideal = I;

        ordered_json line;
        line["trial"] = t;
        line["question"] = args.question;
        line["field"] = field.str();
        line["instance"] = document_to_json(doc);
        try {
            if (search_into(line, doc, args.question, opt))
                ++flagged;
        } catch (const hypothesis_error& e) {
            line["skipped"] = e.what();
            ++skipped;
        }
        std::cout << line.dump() << '\n';
    }
    std::cerr << "search: trials=" << args.trials << " skipped=" << skipped
              << " none_found=" << flagged << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& input)
{
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input);
        if (!in)
            throw parse_error("cannot open input file: " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad certificate JSON: ") + e.what());
    }
    CertificateDocument doc = certificate_document_from_json(j);
    if (verify_certificate_document(doc)) {
        std::cout << "VERIFIED\n";
        return 0;
    }
    std::cout << "FAILED\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "multigraded Betti numbers of monomial ideals, certified splittings "
        "of homology cycles, and subadditivity checks for syzygy degrees"};
    app.require_subcommand(1);
    int exit_code = 0;

    const std::string input_help =
        "input document (file path, or - for stdin)";
    const std::string field_help = "coefficient field: rat or gf:<p>";
    const std::string format_help = "output format: text or json";
    auto format_check = CLI::IsMember({"text", "json"});

    BettiArgs betti_args;
    auto* betti = app.add_subcommand(
        "betti", "print the multigraded Betti table of a monomial ideal "
                 "(a complex document stands for its Stanley-Reisner ideal)");
    betti->add_option("input", betti_args.input, input_help);
    betti->add_option("--field", betti_args.field, field_help);
    betti->add_option("--format", betti_args.format, format_help)
        ->check(format_check);
    betti->add_option("--threads", betti_args.threads,
                      "worker threads (default: available parallelism)");
    betti->callback([&] { exit_code = run_betti(betti_args); });

    BreakArgs break_args;
    auto* brk = app.add_subcommand(
        "break", "split a homology cycle: find faces whose links (mode links) "
                 "or a vertex cover by induced subcomplexes (mode induced) "
                 "carry homology in lower degrees a-2 and b-2 resp. |C|-a-1 "
                 "and |D|-b-1, and emit a verified certificate");
    brk->add_option("input", break_args.input, input_help);
    brk->add_option("--a", break_args.a, "first split part (a >= 1)")
        ->required();
    brk->add_option("--b", break_args.b, "second split part (b >= 1)")
        ->required();
    brk->add_option("--mode", break_args.mode, "links or induced")
        ->check(CLI::IsMember({"links", "induced"}));
    brk->add_option("--field", break_args.field, field_help);
    brk->add_option("--format", break_args.format, format_help)
        ->check(format_check);
    brk->callback([&] { exit_code = run_break(break_args); });

    SubadditivityArgs sub_args;
    auto* sub = app.add_subcommand(
        "subadditivity",
        "check t_i <= t_a + t_b at the top homological degree of the "
        "polarized ideal; exits 3 on a violation");
    sub->add_option("input", sub_args.input, input_help);
    sub->add_option("--field", sub_args.field, field_help);
    sub->add_option("--format", sub_args.format, format_help)
        ->check(format_check);
    sub->add_option("--threads", sub_args.threads,
                    "worker threads (default: available parallelism)");
    sub->callback([&] { exit_code = run_subadditivity(sub_args); });

    SearchArgs search_args;
    auto* search = app.add_subcommand(
        "search", "sweep every homology degree and split of an instance for "
                  "splitting witnesses; emits one JSON line per instance and "
                  "flags splits with no witness as potential counterexamples");
    search->add_option("input", search_args.input, input_help);
    search
        ->add_option("--question", search_args.question,
                     "what to search for: complements (lattice-complement "
                     "pairs, alias 2.1), links (face pairs with homology on "
                     "their links, alias 2.4), or induced (vertex covers by "
                     "induced subcomplexes, alias 2.6)")
        ->required()
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, std::string>{{"complements", "complements"},
                                               {"links", "links"},
                                               {"induced", "induced"},
                                               {"2.1", "complements"},
                                               {"2.4", "links"},
                                               {"2.6", "induced"}}));
    search->add_option("--field", search_args.field, field_help);
    search->add_option("--threads", search_args.threads,
                       "worker threads (default: available parallelism)");
    search->add_option("--max", search_args.max_per_split,
                       "certificates kept per split (default 1)");
    search->add_flag("--all", search_args.all,
                     "keep many certificates per split (bounded cap of 64, "
                     "or --max if larger)");
    auto* random_flag = search->add_flag(
        "--random", search_args.random,
        "sweep random squarefree ideals instead of reading an input");
    search->add_option("--n", search_args.n,
                       "random mode: number of variables (default 5)")
        ->needs(random_flag);
    search->add_option("--gens", search_args.gens,
                       "random mode: max generators per ideal (default 4)")
        ->needs(random_flag);
    search->add_option("--trials", search_args.trials,
                       "random mode: number of instances (default 20)")
        ->needs(random_flag);
    search->add_option("--seed", search_args.seed,
                       "random mode: RNG seed (default 1)")
        ->needs(random_flag);
    search->callback([&] { exit_code = run_search(search_args); });

    std::string verify_input = "-";
    auto* verify = app.add_subcommand(
        "verify", "re-check a certificate document produced by `break "
                  "--format json`; prints VERIFIED or FAILED");
    verify->add_option("input", verify_input, input_help);
    verify->callback([&] { exit_code = run_verify(verify_input); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis not met: " << e.what() << '\n';
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap exceeded: " << e.what() << '\n';
        return 4;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}
