// Acceptance gate: every criterion prints one pass/fail line; the exit code
// is the number of failed criteria.

#include "solhnn/bsdetect.hpp"
#include "solhnn/cli.hpp"
#include "solhnn/quotient.hpp"
#include "solhnn/subgroup.hpp"
#include "solhnn/words.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace solhnn;

namespace {

int failures = 0;

void report(int idx, const std::string &name, bool ok, const std::string &detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << idx << "] " << name << ": " << detail << "\n";
    if (!ok)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const GroupSpec &abelian() {
    static GroupSpec g = GroupSpec::thm21();
    return g;
}
const GroupSpec &wreath() {
    static GroupSpec g = GroupSpec::baumslag_remeslennikov();
    return g;
}

std::string random_word(std::mt19937 &rng, const GroupSpec &g, int len) {
    static const char *ab[] = {"t", "u", "v"};
    static const char *wr[] = {"t", "s", "a", "a[1]", "a[-1]", "a[2]"};
    std::uniform_int_distribution<int> exp(-3, 3);
    std::string w;
    for (int i = 0; i < len; ++i) {
        int e = exp(rng);
        if (e == 0)
            e = 1;
        const char *gen = g.kind() == GroupSpec::Kind::FreeAbelian ? ab[rng() % 3] : wr[rng() % 6];
        if (!w.empty())
            w += " ";
        w += gen;
        if (e != 1)
            w += "^" + std::to_string(e);
    }
    return w;
}

// insert a relator (a word equal to the identity) at a random position
std::string insert_relator(std::mt19937 &rng, const GroupSpec &g, const std::string &w) {
    static const char *ab[] = {"t u t^-1 v u^-5", "u v u^-1 v^-1", "t t^-1", "t v t^-1 u^-2"};
    static const char *wr[] = {"t s t^-1 s^-1", "t a t^-1 a[1]^-1 a^-1", "s a[2] s^-1 a[3]^-1",
                               "a a[1] a^-1 a[1]^-1", "t^-1 t"};
    const char *rel = g.kind() == GroupSpec::Kind::FreeAbelian ? ab[rng() % 4] : wr[rng() % 5];
    // split at a whitespace boundary
    std::vector<std::string> toks;
    std::istringstream is(w);
    std::string t;
    while (is >> t)
        toks.push_back(t);
    std::size_t cut = toks.empty() ? 0 : rng() % (toks.size() + 1);
    std::string out;
    for (std::size_t i = 0; i <= toks.size(); ++i) {
        if (i == cut) {
            if (!out.empty())
                out += " ";
            out += rel;
        }
        if (i < toks.size()) {
            if (!out.empty())
                out += " ";
            out += toks[i];
        }
    }
    return out;
}

WindowLattice random_wreath_lattice(std::mt19937 &rng, int gens) {
    std::uniform_int_distribution<long long> e(-3, 3), c(-4, 4);
    std::vector<LaurentPoly> ps;
    for (int i = 0; i < gens; ++i) {
        LaurentPoly p;
        for (int t = 0; t < 3; ++t)
            p = p + LaurentPoly::monomial(c(rng), e(rng));
        if (!p.is_zero())
            ps.push_back(p);
    }
    if (ps.empty())
        ps.push_back(LaurentPoly::one());
    return WindowLattice::from_polys(ps);
}

bool lattice_member(const GroupSpec &g, const WindowLattice &B, const LaurentPoly &p) {
    auto cmp = lattice_compare(g, WindowLattice::from_polys({p}), B);
    return cmp.verdict == CmpVerdict::Equal || cmp.verdict == CmpVerdict::FirstInSecond;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(1001);
    std::uniform_int_distribution<int> len(0, 40);
    long long mismatches = 0, pairs = 0, equal_pairs = 0;
    for (const GroupSpec *gp : {&abelian(), &wreath()}) {
        const GroupSpec &g = *gp;
        for (int i = 0; i < 5000; ++i) {
            std::string w1 = random_word(rng, g, len(rng));
            std::string w2 = (i % 2 == 0) ? insert_relator(rng, g, w1) : random_word(rng, g, len(rng));
            Word p1 = parse_word(w1, g), p2 = parse_word(w2, g);
            bool canon = hnn_eq(g, eval_word(g, p1), eval_word(g, p2));
            bool rep = rep_eq(eval_word_rep(g, p1), eval_word_rep(g, p2));
            if (canon != rep)
                ++mismatches;
            if (i % 2 == 0 && !canon)
                ++mismatches; // relator insertion must preserve the element
            ++pairs;
            if (canon)
                ++equal_pairs;
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << pairs << " word pairs (10000 words per group, length <= 40), " << equal_pairs << " equal, "
       << mismatches << " oracle mismatches, " << dt << " s";
    report(1, "word problem oracle agreement", mismatches == 0 && dt < 30.0, os.str());
}

void criterion2() {
    std::mt19937 rng(1002);
    long long bad = 0, trials = 0;
    for (const GroupSpec *gp : {&abelian(), &wreath()}) {
        const GroupSpec &g = *gp;
        for (int i = 0; i < 1000; ++i) {
            HnnElement x = eval_word(g, parse_word(random_word(rng, g, 8), g));
            HnnElement y = eval_word(g, parse_word(random_word(rng, g, 8), g));
            HnnElement z = eval_word(g, parse_word(random_word(rng, g, 8), g));
            if (!hnn_eq(g, mul(g, mul(g, x, y), z), mul(g, x, mul(g, y, z))))
                ++bad;
            if (!hnn_eq(g, mul(g, x, hnn_identity(g)), x) || !hnn_eq(g, mul(g, hnn_identity(g), x), x))
                ++bad;
            if (!hnn_is_identity(g, mul(g, x, inv(g, x))))
                ++bad;
            if (chi(mul(g, x, y)) != chi(x) + chi(y))
                ++bad;
            if (g.kind() == GroupSpec::Kind::Wreath &&
                s_exponent(g, mul(g, x, y)) != s_exponent(g, x) + s_exponent(g, y))
                ++bad;
            ++trials;
        }
    }
    std::ostringstream os;
    os << trials << " random triples per law, " << bad << " violations";
    report(2, "group axioms and homomorphisms", bad == 0, os.str());
}

void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    const IntMatrix &M = abelian().abelian().M;
    bool ok = !bs_brute_search(M, 8, 64).has_value();
    auto cert = bs_certificate(M);
    auto *c = std::get_if<ImpossibilityCertificate>(&cert);
    ok = ok && c && c->trace == 5 && c->det == 2 && c->disc == 17 && c->bound_lhs == 5 && c->bound_rhs == 3;
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "search(n<=8, |m|<=64) empty; certificate T=5 D=2 disc=17 bound 5>3; " << dt << " s";
    report(3, "trace-5 matrix excludes BS(1,m) subgroups", ok && dt < 60.0, os.str());
}

void criterion4() {
    std::mt19937 rng(1004);
    std::uniform_int_distribution<long long> c(-5, 5);
    int tried = 0;
    long long bad = 0;
    while (tried < 50) {
        IntMatrix m(2, 2);
        m.at(0, 0) = c(rng);
        m.at(0, 1) = c(rng);
        m.at(1, 0) = c(rng);
        m.at(1, 1) = c(rng);
        Int d = m.det();
        if (abs_int(d) < 2 || abs_int(d) > 9)
            continue;
        ++tried;
        auto cert = bs_certificate(m);
        auto w = bs_brute_search(m, 6, 32);
        if (std::holds_alternative<ImpossibilityCertificate>(cert) && w.has_value())
            ++bad;
        if (w) {
            long long n = w->n < 0 ? -w->n : w->n;
            IntMatrix p = m.pow(n);
            IntVector img = p.apply(w->a);
            for (std::size_t i = 0; i < 2; ++i) {
                if (w->n > 0 && img[i] != w->m * w->a[i])
                    ++bad;
                if (w->n < 0 && w->m * img[i] != w->a[i])
                    ++bad;
            }
            GroupSpec g = GroupSpec::free_abelian(m);
            HnnElement x = mul(g, pow(g, hnn_base(g, IntVector{1, 0}), w->a[0]),
                               pow(g, hnn_base(g, IntVector{0, 1}), w->a[1]));
            HnnElement y = hnn_t(g, w->n);
            if (!bs_relation_check(g, x, y, w->m).holds)
                ++bad;
        }
    }
    std::ostringstream os;
    os << "50 random matrices with |det| in [2,9], " << bad << " inconsistencies";
    report(4, "certificate/search consistency", bad == 0, os.str());
}

void criterion5() {
    std::mt19937 rng(1005);
    std::uniform_int_distribution<long long> e(-8, 8), c(-9, 9);
    long long bad = 0, done = 0;
    while (done < 1000) {
        LaurentPoly p;
        for (int t = 0; t < 4; ++t)
            p = p + LaurentPoly::monomial(c(rng), e(rng));
        if (p.is_zero())
            continue;
        ++done;
        if ((p * LaurentPoly::one_plus_x()).degree() != p.degree() + 1)
            ++bad;
    }
    std::ostringstream os;
    os << "1000 random nonzero polynomials, " << bad << " degree-law violations";
    report(5, "multiplying by 1+x raises the degree by one", bad == 0, os.str());
}

void criterion6() {
    bool ab = !theta_preimage(abelian(), IntVector{1, 0}).has_value();
    bool wr = !theta_preimage(wreath(), wreath_generator(0)).has_value();
    bool ev = wreath_generator(0).a.eval_at_minus_one() == 1;
    report(6, "strict ascension witnesses lack preimages", ab && wr && ev,
           "(1,0) and a_0 have no theta preimage; eval at -1 gives 1 != 0");
}

void criterion7() {
    long long cases = 0, bad = 0;
    WindowLattice Ba = WindowLattice::from_vectors(abelian(), {IntVector{2, 0}, IntVector{0, 1}});
    for (long long q : {3, 5, 7, 11, 13}) {
        CongruenceQuotient Q = CongruenceQuotient::make(abelian(), q);
        BlassNeumannReport r = blass_neumann_check(abelian(), Q, hnn_t(abelian()), Ba);
        ++cases;
        if (r.separated || r.order_b != r.order_conj)
            ++bad;
    }
    WindowLattice Bw = WindowLattice::from_polys({LaurentPoly::one()});
    for (auto [q, rr] : std::vector<std::pair<long long, long long>>{{3, 3}, {5, 3}, {3, 5}, {7, 3}}) {
        CongruenceQuotient Q = CongruenceQuotient::make(wreath(), q, rr);
        BlassNeumannReport r = blass_neumann_check(wreath(), Q, hnn_t(wreath()), Bw);
        ++cases;
        if (r.separated || r.order_b != r.order_conj)
            ++bad;
    }
    std::ostringstream os;
    os << cases << " finite quotients, image orders of B and tBt^-1 equal in all, " << bad << " separations";
    report(7, "conjugate subgroups are inseparable in finite quotients", bad == 0 && cases >= 9, os.str());
}

void criterion8() {
    bool ok = true;
    std::string note;
    const GroupSpec &g = abelian();
    WindowLattice full = WindowLattice::full_fiber(g);

    WindowLattice k2 = intersect_kernel(g, full, Functional::linear(g, IntVector{1, 0}, 2));
    AscensionVerdict v2 = ascension_type(g, hnn_t(g), k2);
    ok = ok && k2.L == hnf(2, {IntVector{2, 0}, IntVector{0, 1}});
    ok = ok && v2.kind == AscensionVerdict::Kind::Strict && v2.element &&
         std::get<IntVector>(*v2.element) == IntVector{0, 1};

    WindowLattice kchi = intersect_kernel(g, full, Functional::chi());
    AscensionVerdict vchi = ascension_type(g, hnn_t(g), kchi);
    ok = ok && kchi == full && vchi.kind == AscensionVerdict::Kind::Strict;

    // randomized valid functional: solve d (M - I) = 0 mod q by enumeration
    std::mt19937 rng(1008);
    int found = 0, violations = 0;
    const IntMatrix &M = g.abelian().M;
    for (int trial = 0; trial < 200 && found < 5; ++trial) {
        long long q = 2 + rng() % 8;
        IntVector d{Int(rng() % q), Int(rng() % q)};
        if (d[0] == 0 && d[1] == 0)
            continue;
        bool valid = true;
        for (std::size_t j = 0; j < 2; ++j) {
            Int lhs = d[0] * M.at(0, j) + d[1] * M.at(1, j);
            if (mod_floor(lhs - d[j], q) != 0)
                valid = false;
        }
        if (!valid)
            continue;
        ++found;
        WindowLattice k = intersect_kernel(g, full, Functional::linear(g, d, q));
        if (!k.is_zero()) {
            AscensionVerdict v = ascension_type(g, hnn_t(g), k);
            if (v.kind != AscensionVerdict::Kind::Strict)
                ++violations;
        }
    }
    ok = ok && found > 0 && violations == 0;
    std::ostringstream os;
    os << "mod-2 kernel span{(2,0),(0,1)} Strict with witness (0,1); chi kernel full and Strict; " << found
       << " randomized functionals, " << violations << " strictness violations";
    report(8, "kernel intersections preserve strict ascension", ok, os.str());
}

void criterion9() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(1009);
    const GroupSpec &g = wreath();
    long long found = 0, unconfirmed = 0;
    for (int trial = 0; trial < 100; ++trial) {
        WindowLattice B = random_wreath_lattice(rng, 2);
        SelfEmbeddingResult r = self_embedding_search(g, B, -3, 3, -3, 3);
        if (r.witness) {
            ++found;
            continue;
        }
        DegreeExtremes eb = degree_extremes(B, 5);
        long long lo = B.lo, hi = B.hi();
        for (long long j = -3; j <= 3; ++j) {
            WindowLattice Tj = theta_lattice(g, B, j);
            for (long long i = -3; i <= 3; ++i) {
                if (i == 0 && j == 0)
                    continue; // identity conjugator, not a strict embedding
                bool confirmed = false;
                if (j > 0) {
                    // degrees only shrink inside a sublattice; theta grows them
                    DegreeExtremes ec = degree_extremes(Tj, 5);
                    confirmed = ec.max_degree == eb.max_degree + j && ec.max_degree > eb.max_degree;
                } else if (j == 0) {
                    // a pure shift moves the support hull off itself
                    confirmed = (lo + i < lo) || (hi + i > hi);
                } else {
                    if (Tj.denom_exp > 0) {
                        // some generator is not divisible by (1+x)^|j|, so its
                        // conjugate leaves the fiber entirely
                        confirmed = true;
                    } else {
                        // the preimage lattice reaches a smaller degree; its
                        // minimum witness must already fall outside B
                        WindowLattice C = shift_lattice(Tj, i);
                        LaurentPoly c = degree_extremes(C, 5).min_witness;
                        confirmed = !lattice_member(g, B, c);
                    }
                }
                if (!confirmed)
                    ++unconfirmed;
            }
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "100 random lattices, i,j in [-3,3]: " << found << " embeddings found, " << unconfirmed
       << " refutations without independent confirmation, " << dt << " s";
    report(9, "degree obstruction to proper self-embedding", found == 0 && unconfirmed == 0 && dt < 120.0,
           os.str());
}

void criterion10() {
    std::mt19937 rng(1010);
    long long bad = 0, done = 0;
    for (const GroupSpec *gp : {&abelian(), &wreath()}) {
        const GroupSpec &g = *gp;
        for (int i = 0; i < 500; ++i) {
            HnnElement x = eval_word(g, parse_word(random_word(rng, g, 10), g));
            HnnElement back = eval_word(g, parse_word(format_element(g, x), g));
            if (!hnn_eq(g, x, back))
                ++bad;
            ++done;
        }
    }
    // coverage map completeness
    const auto &subs = cli::subcommand_list();
    const auto &ops = cli::documented_operations();
    const auto &map = cli::coverage_map();
    bool cover = true;
    for (const auto &op : ops) {
        auto it = std::find_if(map.begin(), map.end(), [&](const cli::CoverageEntry &e) { return e.operation == op; });
        if (it == map.end() || it->subcommands.empty()) {
            cover = false;
            continue;
        }
        for (const auto &s : it->subcommands)
            if (std::find(subs.begin(), subs.end(), s) == subs.end())
                cover = false;
    }
    for (const auto &s : subs) {
        bool hit = false;
        for (const auto &e : map)
            hit = hit || std::find(e.subcommands.begin(), e.subcommands.end(), s) != e.subcommands.end();
        cover = cover && hit;
    }
    std::ostringstream os;
    os << done << " round-trip words, " << bad << " discrepancies; coverage map "
       << (cover ? "complete" : "incomplete") << " (" << ops.size() << " operations, " << subs.size()
       << " subcommands)";
    report(10, "parser round trip and CLI coverage", bad == 0 && cover, os.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures)) << "\n";
    return failures;
}
