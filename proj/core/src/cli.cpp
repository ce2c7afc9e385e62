#include "solhnn/cli.hpp"

#include "solhnn/bsdetect.hpp"
#include "solhnn/quotient.hpp"
#include "solhnn/subgroup.hpp"
#include "solhnn/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>

namespace solhnn::cli {

namespace {

using ojson = nlohmann::ordered_json;

GroupSpec parse_group(const std::string &s) {
    if (s == "thm21")
        return GroupSpec::thm21();
    if (s == "br")
        return GroupSpec::baumslag_remeslennikov();
    if (s.rfind("matrix:", 0) == 0) {
        std::vector<Int> entries;
        std::string rest = s.substr(7);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty())
                throw CLI::ValidationError("--group", "empty matrix entry");
            entries.emplace_back(tok);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        if (entries.size() != 4)
            throw CLI::ValidationError("--group", "matrix:<a,b,c,d> needs exactly 4 entries");
        IntMatrix m(2, 2);
        m.at(0, 0) = entries[0];
        m.at(0, 1) = entries[1];
        m.at(1, 0) = entries[2];
        m.at(1, 1) = entries[3];
        return GroupSpec::free_abelian(std::move(m));
    }
    throw CLI::ValidationError("--group", "expected thm21, br, or matrix:<a,b,c,d>");
}

std::vector<std::string> expand_at_files(const std::vector<std::string> &words) {
    std::vector<std::string> out;
    for (const auto &w : words) {
        if (!w.empty() && w[0] == '@') {
            std::ifstream f(w.substr(1));
            if (!f)
                throw std::runtime_error("cannot open word file " + w.substr(1));
            std::string line;
            while (std::getline(f, line))
                if (!line.empty())
                    out.push_back(line);
        } else {
            out.push_back(w);
        }
    }
    return out;
}

ojson element_json(const GroupSpec &g, const HnnElement &x) {
    ojson j;
    j["word"] = format_element(g, x);
    j["k"] = x.k;
    j["l"] = x.l;
    j["chi"] = chi(x);
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        const auto &v = std::get<IntVector>(x.w);
        j["base"] = vector_str(v);
    } else {
        const auto &w = std::get<WreathElement>(x.w);
        j["base"] = w.a.str() + " ; s^" + std::to_string(w.shift);
    }
    return j;
}

WindowLattice lattice_from_gens(const GroupSpec &g, const std::vector<std::string> &gens) {
    if (gens.empty()) {
        if (g.kind() == GroupSpec::Kind::FreeAbelian)
            return WindowLattice::full_fiber(g);
        throw std::invalid_argument("wreath lattices need explicit --gen polynomials");
    }
    bool vectors = gens.front().find('(') != std::string::npos;
    if (vectors) {
        if (g.kind() != GroupSpec::Kind::FreeAbelian)
            throw std::invalid_argument("vector generators require a free-abelian base group");
        std::vector<IntVector> vs;
        for (auto &s : gens)
            vs.push_back(parse_vector(s));
        return WindowLattice::from_vectors(g, vs);
    }
    if (g.kind() != GroupSpec::Kind::Wreath)
        throw std::invalid_argument("polynomial generators require the wreath base group");
    std::vector<LaurentPoly> ps;
    for (auto &s : gens)
        ps.push_back(LaurentPoly::parse(s));
    return WindowLattice::from_polys(ps);
}

ojson lattice_json(const WindowLattice &B) {
    ojson j;
    ojson basis = ojson::array();
    if (B.kind == GroupSpec::Kind::Wreath) {
        for (auto &p : B.poly_basis())
            basis.push_back(p.str());
    } else {
        for (auto &v : B.L.basis())
            basis.push_back(vector_str(v));
    }
    j["basis"] = basis;
    j["denom_exp"] = B.denom_exp;
    return j;
}

ojson quotient_json(const CongruenceQuotient &Q) {
    ojson j;
    j["q"] = Q.q().str();
    if (Q.group().kind() == GroupSpec::Kind::Wreath)
        j["r"] = Q.r();
    j["order"] = Q.order().str();
    j["t_order"] = Q.t_order();
    return j;
}

std::string ascension_name(AscensionVerdict::Kind k) {
    switch (k) {
    case AscensionVerdict::Kind::Strict:
        return "Strict";
    case AscensionVerdict::Kind::Equal:
        return "Equal";
    case AscensionVerdict::Kind::NotInvariant:
        return "NotInvariant";
    }
    return "";
}

void emit(std::ostream &out, bool json, const ojson &j, const std::string &text) {
    if (json)
        out << j.dump(2) << "\n";
    else
        out << text << "\n";
}

struct Common {
    std::string group = "thm21";
    bool json = false;
};

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--group", c.group, "group: thm21, br, or matrix:<a,b,c,d>")->capture_default_str();
    sub->add_flag("--json", c.json, "machine-parseable JSON output");
}

} // namespace

const std::vector<std::string> &subcommand_list() {
    static const std::vector<std::string> subs = {"normalize", "eq",        "mul",      "chi",      "sexp",
                                                  "degree",    "bs-search", "bs-certify", "bs-check",
                                                  "ascension", "prop22",    "quotient", "separate"};
    return subs;
}

const std::vector<std::string> &documented_operations() {
    static const std::vector<std::string> ops = {
        "exactalg.laurent_mul",    "exactalg.laurent_degree",   "exactalg.laurent_div_1px",
        "exactalg.hnf",            "exactalg.lattice_contains", "exactalg.int_eigen",
        "bases.base_mul",          "bases.theta_apply",         "bases.theta_preimage",
        "hnn.normalize",           "hnn.mul",                   "hnn.inv",
        "hnn.chi",                 "hnn.s_exponent",            "hnn.conj_by_t",
        "rep.embed",               "rep.rep_compose",           "rep.rep_eq",
        "subgroups.conj_lattice",  "subgroups.lattice_compare", "subgroups.degree_extremes",
        "subgroups.intersect_kernel", "subgroups.ascension_type", "subgroups.self_embedding_search",
        "bsdetect.bs_brute_search", "bsdetect.bs_certificate",  "bsdetect.bs_relation_check",
        "quotients.make_quotient", "quotients.project",         "quotients.image_subgroup",
        "quotients.blass_neumann_check", "cli.parse_word",      "cli.eval_word",
        "cli.run"};
    return ops;
}

const std::vector<CoverageEntry> &coverage_map() {
    static const std::vector<CoverageEntry> map = {
        {"exactalg.laurent_mul", {"normalize", "mul"}},
        {"exactalg.laurent_degree", {"degree"}},
        {"exactalg.laurent_div_1px", {"normalize"}},
        {"exactalg.hnf", {"ascension", "prop22", "separate"}},
        {"exactalg.lattice_contains", {"ascension"}},
        {"exactalg.int_eigen", {"bs-search"}},
        {"bases.base_mul", {"normalize", "mul", "eq"}},
        {"bases.theta_apply", {"mul", "bs-check"}},
        {"bases.theta_preimage", {"normalize"}},
        {"hnn.normalize", {"normalize"}},
        {"hnn.mul", {"mul", "eq", "bs-check"}},
        {"hnn.inv", {"bs-check"}},
        {"hnn.chi", {"chi", "normalize"}},
        {"hnn.s_exponent", {"sexp"}},
        {"hnn.conj_by_t", {"normalize"}},
        {"rep.embed", {"eq"}},
        {"rep.rep_compose", {"eq"}},
        {"rep.rep_eq", {"eq"}},
        {"subgroups.conj_lattice", {"ascension", "separate"}},
        {"subgroups.lattice_compare", {"ascension", "separate"}},
        {"subgroups.degree_extremes", {"degree"}},
        {"subgroups.intersect_kernel", {"prop22"}},
        {"subgroups.ascension_type", {"ascension", "prop22", "separate"}},
        {"subgroups.self_embedding_search", {"ascension"}},
        {"bsdetect.bs_brute_search", {"bs-search"}},
        {"bsdetect.bs_certificate", {"bs-certify"}},
        {"bsdetect.bs_relation_check", {"bs-check"}},
        {"quotients.make_quotient", {"quotient", "separate"}},
        {"quotients.project", {"quotient"}},
        {"quotients.image_subgroup", {"quotient", "separate"}},
        {"quotients.blass_neumann_check", {"separate"}},
        {"cli.parse_word", {"normalize", "eq", "mul", "chi", "sexp", "bs-check", "ascension", "quotient"}},
        {"cli.eval_word", {"normalize", "eq", "mul", "chi", "sexp", "bs-check", "ascension", "quotient"}},
        {"cli.run", subcommand_list()},
    };
    return map;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"exact computation in two soluble ascending HNN extensions"};
    app.require_subcommand(1);

    // normalize
    Common c_norm;
    std::vector<std::string> norm_words;
    long long norm_conj_t = 0;
    auto *sub_norm = app.add_subcommand("normalize", "canonical form t^-k w t^l of words");
    add_common(sub_norm, c_norm);
    sub_norm->add_option("words", norm_words, "words (or @file, one per line)")->required();
    sub_norm->add_option("--conj-t", norm_conj_t, "conjugate the result by t^j");

    // eq
    Common c_eq;
    std::vector<std::string> eq_words;
    auto *sub_eq = app.add_subcommand("eq", "decide the word problem for two words");
    add_common(sub_eq, c_eq);
    sub_eq->add_option("words", eq_words, "two words")->expected(2);

    // mul
    Common c_mul;
    std::vector<std::string> mul_words;
    auto *sub_mul = app.add_subcommand("mul", "product of words in canonical form");
    add_common(sub_mul, c_mul);
    sub_mul->add_option("words", mul_words, "words")->expected(-2);

    // chi
    Common c_chi;
    std::vector<std::string> chi_words;
    auto *sub_chi = app.add_subcommand("chi", "associated homomorphism chi(g) = l - k");
    add_common(sub_chi, c_chi);
    sub_chi->add_option("words", chi_words, "words (or @file)")->required();

    // sexp
    Common c_sexp;
    std::vector<std::string> sexp_words;
    auto *sub_sexp = app.add_subcommand("sexp", "exponent sum of s (wreath-base group)");
    add_common(sub_sexp, c_sexp);
    sub_sexp->add_option("words", sexp_words, "words (or @file)")->required();

    // degree
    Common c_deg;
    std::string deg_poly;
    std::vector<std::string> deg_gens;
    long long deg_bound = 5;
    auto *sub_deg = app.add_subcommand("degree", "support-width degree of a polynomial or lattice extremes");
    add_common(sub_deg, c_deg);
    sub_deg->add_option("--poly", deg_poly, "Laurent polynomial");
    sub_deg->add_option("--gen", deg_gens, "lattice generators (Laurent polynomials)");
    sub_deg->add_option("--bound", deg_bound, "coefficient bound for the minimum-degree search")
        ->capture_default_str();

    // bs-search
    Common c_bss;
    long long bss_nmax = 8;
    std::string bss_mmax = "64";
    auto *sub_bss = app.add_subcommand("bs-search", "brute-force search for a BS(1,m) witness");
    add_common(sub_bss, c_bss);
    sub_bss->add_option("--n-max", bss_nmax, "maximum |n|")->capture_default_str();
    sub_bss->add_option("--m-max", bss_mmax, "maximum |m|")->capture_default_str();

    // bs-certify
    Common c_bsc;
    auto *sub_bsc = app.add_subcommand("bs-certify", "eigenvalue certificate excluding BS(1,m) subgroups");
    add_common(sub_bsc, c_bsc);

    // bs-check
    Common c_bsk;
    std::vector<std::string> bsk_words;
    std::string bsk_m = "2";
    auto *sub_bsk = app.add_subcommand("bs-check", "check the relation y x y^-1 = x^m");
    add_common(sub_bsk, c_bsk);
    sub_bsk->add_option("words", bsk_words, "words x and y")->expected(2);
    sub_bsk->add_option("--m", bsk_m, "exponent m")->capture_default_str();

    // ascension
    Common c_asc;
    std::string asc_tau = "t";
    std::vector<std::string> asc_gens;
    std::vector<long long> asc_search;
    auto *sub_asc = app.add_subcommand("ascension", "classify conjugation of a lattice, or search self-embeddings");
    add_common(sub_asc, c_asc);
    sub_asc->add_option("--tau", asc_tau, "conjugating element")->capture_default_str();
    sub_asc->add_option("--gen", asc_gens, "lattice generators (vectors or polynomials)");
    sub_asc->add_option("--search", asc_search, "i_lo i_hi j_lo j_hi: search s^i t^j self-embeddings")
        ->expected(4);

    // prop22
    Common c_p22;
    std::string p22_cov;
    std::string p22_mod = "0";
    std::string p22_kind = "linear";
    std::string p22_tau = "t";
    std::vector<std::string> p22_gens;
    auto *sub_p22 = app.add_subcommand("prop22", "kernel intersection and strict-ascension reduction");
    add_common(sub_p22, c_p22);
    sub_p22->add_option("--cov", p22_cov, "covector, e.g. (1,0)");
    sub_p22->add_option("--mod", p22_mod, "modulus: 0 for Z, or q >= 2")->capture_default_str();
    sub_p22->add_option("--functional", p22_kind, "chi, sexp, or linear")->capture_default_str();
    sub_p22->add_option("--tau", p22_tau, "conjugating element")->capture_default_str();
    sub_p22->add_option("--gen", p22_gens, "lattice generators");

    // quotient
    Common c_quot;
    std::string quot_q;
    long long quot_r = 0;
    std::string quot_word;
    std::vector<std::string> quot_gens;
    auto *sub_quot = app.add_subcommand("quotient", "congruence finite quotient report");
    add_common(sub_quot, c_quot);
    sub_quot->add_option("--q", quot_q, "fiber modulus")->required();
    sub_quot->add_option("--r", quot_r, "ring exponent (wreath base)");
    sub_quot->add_option("--word", quot_word, "project this word into the quotient");
    sub_quot->add_option("--gen", quot_gens, "report the image of this lattice");

    // separate
    Common c_sep;
    std::string sep_q;
    long long sep_r = 0;
    std::string sep_tau = "t";
    std::vector<std::string> sep_gens;
    auto *sub_sep = app.add_subcommand("separate", "Blass-Neumann non-separation check in a finite quotient");
    add_common(sub_sep, c_sep);
    sub_sep->add_option("--q", sep_q, "fiber modulus")->required();
    sub_sep->add_option("--r", sep_r, "ring exponent (wreath base)");
    sub_sep->add_option("--tau", sep_tau, "conjugating element")->capture_default_str();
    sub_sep->add_option("--gen", sep_gens, "lattice generators");

    std::vector<const char *> argv;
    argv.push_back("solhnn");
    for (auto &a : args)
        argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp &e) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError &e) {
            err << e.what() << "\n";
            return 2;
        }

        if (sub_norm->parsed()) {
            GroupSpec g = parse_group(c_norm.group);
            ojson results = ojson::array();
            std::string text;
            for (auto &ws : expand_at_files(norm_words)) {
                HnnElement x = eval_word(g, parse_word(ws, g));
                if (norm_conj_t != 0)
                    x = conj_by_t(g, x, norm_conj_t);
                ojson j = element_json(g, x);
                j["input"] = ws;
                results.push_back(std::move(j));
                if (!text.empty())
                    text += "\n";
                text += format_element(g, x);
            }
            ojson j{{"schema", 1}, {"results", results}};
            emit(out, c_norm.json, j, text);
            return 0;
        }
        if (sub_eq->parsed()) {
            GroupSpec g = parse_group(c_eq.group);
            Word w1 = parse_word(eq_words[0], g);
            Word w2 = parse_word(eq_words[1], g);
            HnnElement x = eval_word(g, w1), y = eval_word(g, w2);
            bool canonical_equal = hnn_eq(g, x, y);
            bool rep_equal = rep_eq(eval_word_rep(g, w1), eval_word_rep(g, w2));
            if (canonical_equal != rep_equal)
                throw std::logic_error("canonical-form and representation oracles disagree");
            ojson j{{"schema", 1},
                    {"canonical_equal", canonical_equal},
                    {"rep_equal", rep_equal},
                    {"equal", canonical_equal}};
            emit(out, c_eq.json, j, canonical_equal ? "true" : "false");
            return 0;
        }
        if (sub_mul->parsed()) {
            GroupSpec g = parse_group(c_mul.group);
            HnnElement acc = hnn_identity(g);
            for (auto &ws : mul_words)
                acc = mul(g, acc, eval_word(g, parse_word(ws, g)));
            ojson j = element_json(g, acc);
            j["schema"] = 1;
            emit(out, c_mul.json, j, format_element(g, acc));
            return 0;
        }
        if (sub_chi->parsed()) {
            GroupSpec g = parse_group(c_chi.group);
            ojson results = ojson::array();
            std::string text;
            for (auto &ws : expand_at_files(chi_words)) {
                long long v = chi(eval_word(g, parse_word(ws, g)));
                results.push_back(ojson{{"input", ws}, {"chi", v}});
                if (!text.empty())
                    text += "\n";
                text += std::to_string(v);
            }
            emit(out, c_chi.json, ojson{{"schema", 1}, {"results", results}}, text);
            return 0;
        }
        if (sub_sexp->parsed()) {
            GroupSpec g = parse_group(c_sexp.group);
            ojson results = ojson::array();
            std::string text;
            for (auto &ws : expand_at_files(sexp_words)) {
                long long v = s_exponent(g, eval_word(g, parse_word(ws, g)));
                results.push_back(ojson{{"input", ws}, {"s_exponent", v}});
                if (!text.empty())
                    text += "\n";
                text += std::to_string(v);
            }
            emit(out, c_sexp.json, ojson{{"schema", 1}, {"results", results}}, text);
            return 0;
        }
        if (sub_deg->parsed()) {
            GroupSpec g = parse_group(c_deg.group);
            if (!deg_poly.empty()) {
                LaurentPoly p = LaurentPoly::parse(deg_poly);
                long long d = p.degree(); // throws for zero
                emit(out, c_deg.json, ojson{{"schema", 1}, {"degree", d}}, std::to_string(d));
                return 0;
            }
            if (deg_gens.empty())
                throw CLI::RequiredError("--poly or --gen");
            WindowLattice B = lattice_from_gens(GroupSpec::baumslag_remeslennikov(), deg_gens);
            DegreeExtremes ex = degree_extremes(B, deg_bound);
            ojson j{{"schema", 1},
                    {"max_degree", ex.max_degree},
                    {"max_witness", ex.max_witness.str()},
                    {"min_degree", ex.min_degree},
                    {"min_witness", ex.min_witness.str()},
                    {"search_bound", ex.search_bound},
                    {"min_bound_limited", true}};
            emit(out, c_deg.json, j,
                 "max_degree " + std::to_string(ex.max_degree) + " (witness " + ex.max_witness.str() +
                     ")\nmin_degree " + std::to_string(ex.min_degree) + " (witness " + ex.min_witness.str() +
                     ", bound " + std::to_string(ex.search_bound) + ")");
            (void)g;
            return 0;
        }
        if (sub_bss->parsed()) {
            GroupSpec g = parse_group(c_bss.group);
            auto w = bs_brute_search(g.abelian().M, bss_nmax, Int(bss_mmax));
            ojson j{{"schema", 1}, {"found", w.has_value()}};
            std::string text;
            if (w) {
                j["witness"] = ojson{{"n", w->n}, {"m", w->m.str()}, {"a", vector_str(w->a)}};
                text = "witness: n=" + std::to_string(w->n) + " m=" + w->m.str() + " a=" + vector_str(w->a);
            } else {
                j["n_max"] = bss_nmax;
                j["m_max"] = bss_mmax;
                text = "none (n <= " + std::to_string(bss_nmax) + ", |m| <= " + bss_mmax + ")";
            }
            emit(out, c_bss.json, j, text);
            return 0;
        }
        if (sub_bsc->parsed()) {
            GroupSpec g = parse_group(c_bsc.group);
            auto cert = bs_certificate(g.abelian().M);
            ojson j{{"schema", 1}};
            std::string text;
            if (auto *ok = std::get_if<ImpossibilityCertificate>(&cert)) {
                j["T"] = ok->trace.str();
                j["D"] = ok->det.str();
                j["disc"] = ok->disc.str();
                j["bound_lhs"] = ok->bound_lhs.str();
                j["bound_rhs"] = ok->bound_rhs.str();
                j["verdict"] = "certified";
                text = "certified: T=" + ok->trace.str() + " D=" + ok->det.str() + " disc=" + ok->disc.str() +
                       " bound " + ok->bound_lhs.str() + " > " + ok->bound_rhs.str();
            } else {
                j["verdict"] = "inapplicable";
                j["reason"] = std::get<Inapplicable>(cert).reason;
                text = "inapplicable: " + std::get<Inapplicable>(cert).reason;
            }
            emit(out, c_bsc.json, j, text);
            return 0;
        }
        if (sub_bsk->parsed()) {
            GroupSpec g = parse_group(c_bsk.group);
            HnnElement x = eval_word(g, parse_word(bsk_words[0], g));
            HnnElement y = eval_word(g, parse_word(bsk_words[1], g));
            BsRelationResult r = bs_relation_check(g, x, y, Int(bsk_m));
            ojson j{{"schema", 1}, {"holds", r.holds}};
            if (!r.note.empty())
                j["note"] = r.note;
            emit(out, c_bsk.json, j, std::string(r.holds ? "true" : "false") + (r.note.empty() ? "" : " (" + r.note + ")"));
            return 0;
        }
        if (sub_asc->parsed()) {
            GroupSpec g = parse_group(c_asc.group);
            WindowLattice B = lattice_from_gens(g, asc_gens);
            if (!asc_search.empty()) {
                SelfEmbeddingResult r =
                    self_embedding_search(g, B, asc_search[0], asc_search[1], asc_search[2], asc_search[3]);
                ojson j{{"schema", 1}, {"found", r.witness.has_value()}, {"note", r.note}};
                std::string text = r.note;
                if (r.witness) {
                    j["i"] = r.witness->first;
                    j["j"] = r.witness->second;
                    text += " at (i, j) = (" + std::to_string(r.witness->first) + ", " +
                            std::to_string(r.witness->second) + ")";
                }
                emit(out, c_asc.json, j, text);
                return 0;
            }
            HnnElement tau = eval_word(g, parse_word(asc_tau, g));
            AscensionVerdict v = ascension_type(g, tau, B);
            ojson j{{"schema", 1}, {"verdict", ascension_name(v.kind)}};
            std::string text = ascension_name(v.kind);
            if (v.element) {
                j["witness"] = fiber_str(*v.element);
                text += " (witness " + fiber_str(*v.element) + ")";
            }
            j["lattice"] = lattice_json(B);
            emit(out, c_asc.json, j, text);
            return 0;
        }
        if (sub_p22->parsed()) {
            GroupSpec g = parse_group(c_p22.group);
            WindowLattice B = lattice_from_gens(g, p22_gens);
            Functional phi = [&] {
                if (p22_kind == "chi")
                    return Functional::chi();
                if (p22_kind == "sexp")
                    return Functional::s_exponent();
                if (p22_kind != "linear")
                    throw CLI::ValidationError("--functional", "expected chi, sexp, or linear");
                if (p22_cov.empty())
                    throw CLI::RequiredError("--cov");
                return Functional::linear(g, parse_vector(p22_cov), Int(p22_mod));
            }();
            WindowLattice K = intersect_kernel(g, B, phi);
            HnnElement tau = eval_word(g, parse_word(p22_tau, g));
            ojson j{{"schema", 1}};
            ojson jf{{"kind", p22_kind}};
            if (phi.kind() == Functional::Kind::Linear) {
                jf["covector"] = vector_str(phi.covector());
                jf["modulus"] = phi.modulus().str();
            }
            j["functional"] = jf;
            j["kernel"] = lattice_json(K);
            std::string text;
            if (K.is_zero()) {
                j["ascension"] = ojson{{"verdict", "ZeroLattice"}};
                text = "kernel is the zero lattice";
            } else {
                AscensionVerdict v = ascension_type(g, tau, K);
                ojson ja{{"verdict", ascension_name(v.kind)}};
                if (v.element)
                    ja["witness"] = fiber_str(*v.element);
                j["ascension"] = ja;
                text = "kernel basis:";
                for (auto &b : j["kernel"]["basis"])
                    text += " " + b.get<std::string>();
                text += "\nascension " + ascension_name(v.kind);
                if (v.element)
                    text += " (witness " + fiber_str(*v.element) + ")";
            }
            emit(out, c_p22.json, j, text);
            return 0;
        }
        if (sub_quot->parsed()) {
            GroupSpec g = parse_group(c_quot.group);
            CongruenceQuotient Q = CongruenceQuotient::make(g, Int(quot_q), quot_r);
            ojson j{{"schema", 1}, {"quotient", quotient_json(Q)}};
            std::string text = "order " + Q.order().str() + ", t_order " + std::to_string(Q.t_order());
            if (!quot_word.empty()) {
                QuotientElement e = project(g, Q, eval_word(g, parse_word(quot_word, g)));
                ojson je;
                je["fiber"] = vector_str(e.fiber);
                if (g.kind() == GroupSpec::Kind::Wreath)
                    je["s"] = e.s;
                je["t"] = e.t;
                j["projection"] = je;
                text += "\nprojection fiber " + vector_str(e.fiber) + ", t " + std::to_string(e.t);
            }
            if (!quot_gens.empty()) {
                ImageSubgroup img = image_subgroup(g, Q, lattice_from_gens(g, quot_gens));
                ojson ji{{"order", img.order.str()}};
                ojson gens = ojson::array();
                for (auto &v : img.generators)
                    gens.push_back(vector_str(v));
                ji["generators"] = gens;
                j["image"] = ji;
                text += "\nimage order " + img.order.str();
            }
            emit(out, c_quot.json, j, text);
            return 0;
        }
        if (sub_sep->parsed()) {
            GroupSpec g = parse_group(c_sep.group);
            CongruenceQuotient Q = CongruenceQuotient::make(g, Int(sep_q), sep_r);
            WindowLattice B = lattice_from_gens(g, sep_gens);
            HnnElement tau = eval_word(g, parse_word(sep_tau, g));
            BlassNeumannReport r = blass_neumann_check(g, Q, tau, B);
            ojson j{{"schema", 1},
                    {"quotient", quotient_json(Q)},
                    {"subgroup_orders", ojson::array({r.order_b.str(), r.order_conj.str()})},
                    {"separated", r.separated},
                    {"ascension", r.ascension}};
            emit(out, c_sep.json, j,
                 std::string("separated=") + (r.separated ? "true" : "false") + " orders (" + r.order_b.str() +
                     ", " + r.order_conj.str() + ")");
            return 0;
        }
        err << "no subcommand\n";
        return 2;
    } catch (const WordParseError &e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace solhnn::cli
