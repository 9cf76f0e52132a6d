// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "cli_cases.hpp"
#include "conj/free_product.hpp"
#include "conj/graph.hpp"
#include "conj/hyperbolic.hpp"
#include "conj/klein.hpp"
#include "conj/oracle.hpp"
#include "conj/seifert.hpp"
#include "conj/sol.hpp"
#include "fixtures.hpp"

using namespace gmc;

namespace {

struct Result {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void fail(const std::string& why) {
        pass = false;
        if (failures.size() < 5) failures.push_back(why);
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

// Calls f(i) for i in [0, n) on all cores; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& f) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

Word conj3(const Word& g, const Word& x) { return concat({&g, &x, &static_cast<const Word&>(inverse(g))}); }

std::size_t random_index(std::mt19937_64& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// ---------------------------------------------------------------- 1

void free_product_suite(Result& r) {
    using namespace gmc::freeprod;
    const GeneratorId X("x"), Y("y");
    std::mt19937_64 rng(101);
    std::size_t exhaustive = 0, exhaustive_pos = 0, random_pairs = 0, positives = 0, equal_pairs = 0;
    for (long long xorder : {2LL, 0LL}) {
        Group G({{X, xorder}, {Y, 3}});
        const std::string name = xorder == 2 ? "<x|x^2>*<y|y^3>" : "<x>*<y|y^3>";
        oracle::GroupHandle H{G.alphabet(), [G](const Word& w) { return normalize(w, G).is_identity(); },
                              [G](const Word& w) { return format(G, normalize(w, G)); }};
        auto check_pair = [&](const Word& a, const Word& b) {
            NF u = normalize(a, G), v = normalize(b, G);
            auto fast = conjugacy(G, u, v);
            auto slow = oracle::brute_conjugator(a, b, H, 8);
            if (fast) {
                NF back = multiply(G, {&*fast, &v, &static_cast<const NF&>(inverse(G, *fast))});
                r.require(back == u, name + ": witness fails for " + format_word(a) + " ~ " + format_word(b));
            }
            r.require(fast.has_value() == slow.has_value(),
                      name + ": disagreement on " + format_word(a) + " vs " + format_word(b));
            return fast.has_value();
        };
        // All elements spelled by words of length <= 4, one word per element.
        std::vector<Word> reps;
        std::vector<NF> seen;
        for (const Word& w : oracle::ball(G.alphabet(), 4)) {
            NF e = normalize(w, G);
            if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
            seen.push_back(e);
            reps.push_back(w);
        }
        auto agree = parallel_map<int>(reps.size(), [&](std::size_t i) {
            int pos = 0;
            for (const Word& b : reps) pos += check_pair(reps[i], b) ? 1 : 0;
            return pos;
        });
        for (int p : agree) exhaustive_pos += static_cast<std::size_t>(p);
        exhaustive += reps.size() * reps.size();
        // Random pairs: half planted conjugates, half independent words.
        std::vector<std::pair<Word, Word>> pairs;
        for (int i = 0; i < 250; ++i) {
            Word v = fixtures::random_word(rng, G.alphabet(), 12);
            Word g = fixtures::random_word(rng, G.alphabet(), 4);
            pairs.emplace_back(oracle::plant_conjugate(v, g), v);
            pairs.emplace_back(fixtures::random_word(rng, G.alphabet(), 12), fixtures::random_word(rng, G.alphabet(), 12));
        }
        auto rp = parallel_map<int>(pairs.size(), [&](std::size_t i) { return check_pair(pairs[i].first, pairs[i].second) ? 1 : 0; });
        for (int p : rp) positives += static_cast<std::size_t>(p);
        random_pairs += pairs.size();
        // Equal pairs by relator insertion.
        std::vector<Word> rels = {letter_word(Y, 3)};
        if (xorder == 2) rels.push_back(letter_word(X, 2));
        for (int i = 0; i < 100; ++i) {
            Word w1 = fixtures::random_word(rng, G.alphabet(), 8);
            Word rel = rels[random_index(rng, rels.size())];
            if (rng() % 2) rel = inverse(rel);
            rel = rotate(rel, random_index(rng, rel.size()));
            std::size_t at = random_index(rng, w1.size() + 1);
            Word w2(w1.begin(), w1.begin() + static_cast<std::ptrdiff_t>(at));
            w2.insert(w2.end(), rel.begin(), rel.end());
            w2.insert(w2.end(), w1.begin() + static_cast<std::ptrdiff_t>(at), w1.end());
            bool nf_equal = normalize(w1, G) == normalize(w2, G);
            bool reachable = oracle::rewrite_reachable(w1, w2, rels, 10);
            r.require(nf_equal && reachable, name + ": relator insertion pair disagrees: " + format_word(w2));
            ++equal_pairs;
        }
    }
    r.detail << exhaustive << " exhaustive pairs (" << exhaustive_pos << " conjugate), " << random_pairs << " random pairs (" << positives
             << " conjugate), " << equal_pairs << " rewriting pairs";
}

// ---------------------------------------------------------------- 2

void klein_suite(Result& r) {
    using namespace gmc::klein;
    oracle::GroupHandle H{{GeneratorId("a"), GeneratorId("b")},
                          [](const Word& w) { return klein_normalize(w) == KleinNF{}; },
                          [](const Word& w) { return klein_normalize(w).str(); }};
    std::vector<KleinNF> elems;
    for (long long n = -4; n <= 4; ++n)
        for (long long m = -4; m <= 4; ++m) elems.push_back({n, m});
    auto counts = parallel_map<int>(elems.size(), [&](std::size_t i) {
        int pos = 0;
        for (const KleinNF& v : elems) {
            const KleinNF& u = elems[i];
            auto fast = klein_conjugacy(u, v);
            auto slow = oracle::brute_conjugator(to_word(u), to_word(v), H, 6);
            r.require(fast.has_value() == slow.has_value(), "klein disagreement " + u.str() + " vs " + v.str());
            if (fast) r.require(conjugate(*fast, v) == u, "klein witness fails " + u.str() + " vs " + v.str());
            pos += fast ? 1 : 0;
        }
        return pos;
    });
    int positives = 0;
    for (int c : counts) positives += c;
    std::size_t families = 0, members = 0;
    for (long long n1 = -5; n1 <= 5; ++n1)
        for (long long m1 = -5; m1 <= 5; ++m1)
            for (long long n2 = -5; n2 <= 5; ++n2)
                for (long long m2 = -5; m2 <= 5; ++m2) {
                    KleinNF u{n1, m1}, v{n2, m2};
                    auto s = klein_two_cosets(u, v);
                    if (s.is_empty()) continue;
                    auto ms = s.members(5);
                    ++families;
                    r.require(ms.size() >= 121, "klein family with fewer than 121 members: " + u.str() + ", " + v.str());
                    for (const auto& [c, c2] : ms) {
                        ++members;
                        r.require(multiply(multiply(from_boundary(c), v), from_boundary(c2)) == u,
                                  "klein coset member fails for " + u.str() + ", " + v.str());
                    }
                }
    r.detail << elems.size() * elems.size() << " pairs (" << positives << " conjugate), " << families
             << " nonempty families, " << members << " coset members";
}

// ---------------------------------------------------------------- 3

bool set_contains(const CosetSolutionSet& s, const Vec2& c, const Vec2& c2) { return s.contains(c, c2); }

void seifert_suite(Result& r) {
    using namespace gmc::seifert;
    std::mt19937_64 rng(303);
    std::size_t relators = 0, homs = 0, parallel = 0, coset_members = 0, complete_checks = 0, conj_pairs = 0,
                conj_pos = 0;
    for (const auto& inv : {fixtures::trefoil_invariants(), fixtures::mobius_invariants()}) {
        SeifertPiece P(inv);
        const std::string name = inv.str();
        auto eq = [&](const Word& a, const Word& b) { return P.normalize(concat(a, inverse(b))).is_identity(); };
        for (const auto& rel : P.presentation().relators) {
            r.require(P.normalize(rel).is_identity(), name + ": relator " + format_word(rel) + " not trivial");
            ++relators;
        }
        for (int i = 0; i < 500; ++i) {
            Word a = fixtures::random_word(rng, P.alphabet(), 10), b = fixtures::random_word(rng, P.alphabet(), 10);
            r.require(P.normalize(concat(a, b)) == P.multiply(P.normalize(a), P.normalize(b)),
                      name + ": normal form not multiplicative");
            ++homs;
        }
        // Parallelism on random words and planted boundary conjugates.
        for (int i = 0; i < 200; ++i) {
            Word w = fixtures::random_word(rng, P.alphabet(), 8);
            if (i % 2) {
                long long a = static_cast<long long>(random_index(rng, 7)) - 3;
                long long b = static_cast<long long>(random_index(rng, 7)) - 3;
                w = conj3(fixtures::random_word(rng, P.alphabet(), 4), P.boundary_word(1, {a, b}));
            }
            auto s = P.boundary_parallelism(w, 1);
            r.require(s.size() <= 2, name + ": parallelism set larger than 2");
            if (i % 2) r.require(!s.empty(), name + ": planted boundary conjugate missed: " + format_word(w));
            for (const auto& e : s.elements)
                r.require(eq(conj3(e.witness, P.boundary_word(1, e.coords)), w), name + ": parallelism witness fails");
            ++parallel;
        }
        // Two cosets: members and completeness.
        std::vector<std::pair<long long, long long>> small;
        for (long long a = -8; a <= 8; ++a)
            for (long long b = -8; b <= 8; ++b)
                if (std::llabs(a) + std::llabs(b) <= 8) small.emplace_back(a, b);
        std::vector<std::pair<Word, Word>> inst;
        for (int i = 0; i < 16; ++i) {
            Word v = fixtures::random_word(rng, P.alphabet(), 4);
            auto [a, b] = small[random_index(rng, small.size())];
            auto [c, d] = small[random_index(rng, small.size())];
            Word cw = P.boundary_word(1, {a, b}), dw = P.boundary_word(1, {c, d});
            inst.emplace_back(concat({&cw, &v, &dw}), v);
        }
        for (int i = 0; i < 4; ++i)
            inst.emplace_back(fixtures::random_word(rng, P.alphabet(), 4), fixtures::random_word(rng, P.alphabet(), 4));
        inst.emplace_back(P.boundary_word(1, {1, 1}), Word{});
        inst.emplace_back(parse_word("c1"), parse_word("c1"));
        auto checks = parallel_map<std::pair<std::size_t, std::size_t>>(inst.size(), [&](std::size_t i) {
            const auto& [u, v] = inst[i];
            auto s = P.two_cosets(u, v, 1, 1);
            std::size_t mem = 0, found = 0;
            for (const auto& [c, c2] : s.members(10)) {
                Word x = P.boundary_word(1, c), y = P.boundary_word(1, c2);
                r.require(eq(concat({&x, &v, &y}), u), name + ": coset member fails");
                ++mem;
            }
            for (const auto& [a, b] : small)
                for (const auto& [c, d] : small) {
                    Word x = P.boundary_word(1, {a, b}), y = P.boundary_word(1, {c, d});
                    if (!eq(concat({&x, &v, &y}), u)) continue;
                    ++found;
                    r.require(set_contains(s, {a, b}, {c, d}),
                              name + ": missed coset solution for u=" + format_word(u) + " v=" + format_word(v));
                }
            return std::make_pair(mem, found);
        });
        for (const auto& [m, f] : checks) {
            coset_members += m;
            complete_checks += f;
        }
        // Conjugacy against brute force.
        oracle::GroupHandle H{P.alphabet(), [&P](const Word& w) { return P.word_problem(w); },
                              [&P](const Word& w) { return P.key(w); }};
        std::vector<std::pair<Word, Word>> pairs;
        for (int i = 0; i < 150; ++i) {
            Word v = fixtures::random_word(rng, P.alphabet(), 8);
            pairs.emplace_back(oracle::plant_conjugate(v, fixtures::random_word(rng, P.alphabet(), 4)), v);
            pairs.emplace_back(fixtures::random_word(rng, P.alphabet(), 8), fixtures::random_word(rng, P.alphabet(), 8));
        }
        auto pos = parallel_map<int>(pairs.size(), [&](std::size_t i) {
            const auto& [u, v] = pairs[i];
            auto fast = P.conjugacy(u, v);
            auto slow = oracle::brute_conjugator(u, v, H, 8);
            if (fast) r.require(eq(conj3(*fast, v), u), name + ": conjugacy witness fails");
            r.require(fast.has_value() == slow.has_value(),
                      name + ": conjugacy disagrees with brute force on " + format_word(u) + " vs " + format_word(v));
            return fast ? 1 : 0;
        });
        for (int p : pos) conj_pos += static_cast<std::size_t>(p);
        conj_pairs += pairs.size();
    }
    r.detail << relators << " relators, " << homs << " products, " << parallel << " parallelism queries, "
             << coset_members << " coset members, " << complete_checks << " exhaustive solutions found in sets, "
             << conj_pairs << " conjugacy pairs (" << conj_pos << " conjugate)";
}

// ---------------------------------------------------------------- 4

void graph_suite(Result& r) {
    using namespace gmc::graph;
    auto G = fixtures::two_trefoil();
    auto verified = [&](const ConjugacyAnswer& a, const Word& u, const Word& v) {
        return gog_word_problem(concat(conj3(a.witness, v), inverse(u)), G);
    };
    Word u0 = parse_word("v1.c1 v1.c2"), v0 = parse_word("v2.h^-1");
    auto ex1 = decide_conjugacy(u0, v0, G);
    r.require(ex1.conjugate() && ex1.case_tag == "ii" && ex1.path.size() == 1 && verified(ex1, u0, v0),
              "worked example c1 c2 ~ h^-1 not reproduced");
    auto ex2 = decide_conjugacy(parse_word("v1.h"), parse_word("v2.h"), G);
    r.require(ex2.verdict == ConjugacyAnswer::Verdict::NotConjugate, "worked example h vs h not an exact negative");

    // Tree letters are trivial, so dropping them keeps the same elements within each radius.
    Alphabet letters = G.alphabet();
    for (std::size_t e = 0; e < G.edges().size(); ++e)
        if (G.is_tree_edge(static_cast<int>(e))) letters.erase(GeneratorId(G.edges()[e].id));
    oracle::GroupHandle H{letters, [&G](const Word& w) { return gog_word_problem(w, G); },
                          [&G](const Word& w) { return *canonical_key(w, G); }};
    std::mt19937_64 rng(404);
    struct Pair {
        Word u, v;
        bool planted;
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < 110; ++i) {
        Word v = fixtures::random_word(rng, G.alphabet(), 10, 1);
        pairs.push_back({oracle::plant_conjugate(v, fixtures::random_word(rng, G.alphabet(), 3)), v, true});
        pairs.push_back({fixtures::random_word(rng, G.alphabet(), 10), fixtures::random_word(rng, G.alphabet(), 10), false});
    }
    struct Outcome {
        bool positive = false, brute = false;
        std::size_t path = 0;
        bool case_ii = false;
    };
    auto outs = parallel_map<Outcome>(pairs.size(), [&](std::size_t i) {
        const Pair& p = pairs[i];
        Outcome o;
        auto a = decide_conjugacy(p.u, p.v, G);
        o.positive = a.conjugate();
        o.case_ii = a.case_tag == "ii";
        o.path = a.path.size();
        o.brute = oracle::brute_conjugator(p.u, p.v, H, 6).has_value();
        const std::string tag = format_word(p.u) + " vs " + format_word(p.v);
        if (o.positive) r.require(verified(a, p.u, p.v), "witness not verified: " + tag);
        r.require(a.verdict != ConjugacyAnswer::Verdict::NotConjugateRadiusConditional, "radius-conditional verdict: " + tag);
        if (o.brute) r.require(o.positive, "brute force finds a conjugator for a negative: " + tag);
        if (p.planted) {
            r.require(o.positive, "planted conjugate missed: " + tag);
            auto fu = cyclically_reduce(form_of_word(p.u, G, -1, Joining::Tree), G);
            auto fv = cyclically_reduce(form_of_word(p.v, G, -1, Joining::Tree), G);
            r.require(fu.form.length() == fv.form.length(), "cyclic length changed under conjugation: " + tag);
        }
        if (o.case_ii) r.require(o.path <= 4, "case ii path longer than 4: " + tag);
        return o;
    });
    std::size_t pos = 0, brute = 0, case_ii = 0, max_path = 0, positive_only = 0;
    for (const auto& o : outs) {
        pos += o.positive;
        brute += o.brute;
        case_ii += o.case_ii;
        if (o.case_ii) max_path = std::max(max_path, o.path);
        positive_only += o.positive && !o.brute;
    }
    r.detail << pairs.size() << " pairs, " << pos << " conjugate (all witnesses verified), " << brute
             << " found by brute force, " << positive_only << " positives beyond radius 6, " << case_ii
             << " case ii (max path " << max_path << ")";
}

// ---------------------------------------------------------------- 5

void sol_suite(Result& r) {
    using namespace gmc::sol;
    TorusBundleGroup G({2, 1, 1, 1});
    auto w = torus_bundle_conjugacy({{1, 0}, 1}, {{0, 0}, 1}, G);
    r.require(w && *w == TorusElement{{0, 1}, 0}, "torus example witness is not (0,1)");
    oracle::GroupHandle H{G.alphabet(), [&G](const Word& x) { return G.normalize(x) == TorusElement{}; },
                          [&G](const Word& x) { return G.normalize(x).str(); }};
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<long long> e(-3, 3);
    std::vector<std::pair<TorusElement, TorusElement>> pairs;
    for (int i = 0; i < 100; ++i) {
        TorusElement a{{e(rng), e(rng)}, e(rng)}, b{{e(rng), e(rng)}, e(rng)};
        if (i % 2) b.p = a.p;
        pairs.emplace_back(a, b);
    }
    auto outs = parallel_map<int>(pairs.size(), [&](std::size_t i) {
        const auto& [a, b] = pairs[i];
        auto fast = torus_bundle_conjugacy(a, b, G);
        // brute_conjugator finds g with g v g^-1 = u; the solver sends a to b.
        auto slow = oracle::brute_conjugator(G.to_word(b), G.to_word(a), H, 6);
        const std::string tag = a.str() + " vs " + b.str();
        if (fast) r.require(G.conjugate(*fast, a) == b, "torus witness fails: " + tag);
        if (slow) r.require(fast.has_value(), "brute force finds a conjugator for a negative: " + tag);
        if (fast && !slow) r.require(G.to_word(*fast).size() > 6, "short witness missed by brute force: " + tag);
        return (fast ? 1 : 0) + (slow ? 2 : 0);
    });
    int pos = 0, agree = 0;
    for (int o : outs) {
        pos += o & 1;
        agree += (o == 0 || o == 3);
    }
    DoubleKleinGroup K({1, 1, 0, 1});
    r.require(K.derived_matrix() == Mat2{1, -2, 0, 1}, "double Klein matrix is not [[1,-2],[0,1]]");
    r.require(row_orbit_power({1, 3}, {1, 1}, K.derived_matrix()) == 1, "double Klein orbit power is not 1");
    auto dk = double_klein_conjugacy(K.from_h({1, 3}), K.from_h({1, 1}), K);
    r.require(dk && K.conjugate(*dk, K.from_h({1, 3})) == K.from_h({1, 1}), "double Klein example not conjugate");
    for (long long p = -5; p <= 5; ++p)
        if (p != 0) r.require((Mat2::identity() - G.phi().pow(p)).det() != 0, "det(I - phi^p) = 0");
    r.detail << "example witness (0,1); " << pairs.size() << " random pairs, " << pos << " conjugate, " << agree
             << " identical verdicts at radius 6; double Klein n=1; det(I-phi^p) != 0 for 0<|p|<=5";
}

// ---------------------------------------------------------------- 6

void hyperbolic_suite(Result& r) {
    using namespace gmc::hyperbolic;
    HyperbolicPiece P = fixtures::figure_eight();
    for (const auto& rel : P.presentation().relators) r.require(P.word_problem(rel), "relator not trivial");
    auto eq = [&](const Word& a, const Word& b) { return P.word_problem(concat(a, inverse(b))); };
    auto in_T = [&](const Word& w) { return P.boundary_membership(w, 1).has_value(); };
    std::mt19937_64 rng(606);
    std::vector<Word> vs;
    while (vs.size() < 50) {
        Word v = free_reduce(fixtures::random_word(rng, P.alphabet(), 5, 1));
        if (!v.empty() && !P.word_problem(v)) vs.push_back(v);
    }
    std::vector<Word> gs;
    for (int i = 0; i < 50; ++i) gs.push_back(free_reduce(fixtures::random_word(rng, P.alphabet(), 3)));
    std::vector<std::pair<Vec2, Vec2>> ts;
    std::uniform_int_distribution<long long> sm(-2, 2), lo(-1, 1);
    for (int i = 0; i < 50; ++i) ts.push_back({{sm(rng), lo(rng)}, {sm(rng), lo(rng)}});
    auto outs = parallel_map<int>(50, [&](std::size_t i) {
        const Word& v = vs[i];
        Word u = oracle::plant_conjugate(v, gs[i]);
        auto c = P.conjugacy(u, v);
        bool ok_conj = c.witness && eq(conj3(*c.witness, v), u);
        r.require(ok_conj, "planted conjugate not recovered: " + format_word(u));
        Word a = P.boundary_word(1, ts[i].first), b = P.boundary_word(1, ts[i].second);
        Word uc = concat({&a, &v, &b});
        auto s = P.two_cosets(uc, v, 1, 1);
        bool ok_coset = set_contains(s, ts[i].first, ts[i].second);
        r.require(ok_coset, "planted coset pair not recovered for v=" + format_word(v));
        for (const auto& [x, y] : s.members(2)) {
            Word xa = P.boundary_word(1, x), yb = P.boundary_word(1, y);
            r.require(eq(concat({&xa, &v, &yb}), uc), "coset member fails");
        }
        if (!in_T(v)) r.require(s.generators.empty(), "coset set larger than one element");
        auto par = P.boundary_parallelism(u, 1);
        r.require(par.size() <= 1, "parallelism set larger than one element");
        for (const auto& e : par.elements)
            r.require(eq(conj3(e.witness, P.boundary_word(1, e.coords)), u), "parallelism witness fails");
        return (ok_conj ? 1 : 0) + (ok_coset ? 2 : 0);
    });
    int conj_ok = 0, coset_ok = 0;
    for (int o : outs) {
        conj_ok += o & 1;
        coset_ok += (o >> 1) & 1;
    }
    // Planted boundary conjugates come back as single elements.
    for (int i = 0; i < 20; ++i) {
        Word t = P.boundary_word(1, ts[static_cast<std::size_t>(i)].first);
        if (t.empty()) continue;
        auto par = P.boundary_parallelism(conj3(gs[static_cast<std::size_t>(i)], t), 1);
        r.require(par.size() == 1, "planted boundary conjugate not recovered");
    }
    // Trace-distinct pairs.
    const auto& R = P.rep().ring;
    int trace_pairs = 0;
    for (std::size_t i = 0; i < vs.size() && trace_pairs < 30; ++i)
        for (std::size_t j = i + 1; j < vs.size() && trace_pairs < 30; ++j) {
            auto ti = poly::mat_trace(R, P.rep().eval(vs[i])), tj = poly::mat_trace(R, P.rep().eval(vs[j]));
            if (ti == tj || ti == R.neg(tj)) continue;
            auto c = P.conjugacy(vs[i], vs[j]);
            r.require(!c.witness && c.exact, "trace-distinct pair not an exact negative");
            ++trace_pairs;
        }
    r.detail << conj_ok << "/50 conjugacy and " << coset_ok << "/50 two-coset plants recovered, " << trace_pairs
             << " trace-distinct exact negatives";
}

// ---------------------------------------------------------------- 7

void cli_suite(Result& r) {
    std::size_t goldens = 0, malformed = 0;
    for (const auto& g : cli_cases::goldens()) {
        auto a = cli_cases::run(g.args), b = cli_cases::run(g.args);
        std::string expected;
        bool have = cli_cases::read_file(cli_cases::golden_path(g.name), expected);
        r.require(have, g.name + ": golden file missing");
        r.require(a.out == b.out && a.code == b.code, g.name + ": output differs across runs");
        r.require(cli_cases::golden_text(a) == expected, g.name + ": output differs from golden file");
        ++goldens;
    }
    for (const auto& m : cli_cases::malformed()) {
        auto o = cli_cases::run(m.args);
        r.require(o.code == m.exit_code, m.what + ": exit " + std::to_string(o.code) + ", expected " +
                                             std::to_string(m.exit_code));
        ++malformed;
    }
    r.detail << goldens << " golden outputs byte-identical, " << malformed << " malformed inputs with correct exit codes";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        void (*run)(Result&);
    };
    const Criterion criteria[] = {
        {1, "free-product", free_product_suite}, {2, "klein", klein_suite},
        {3, "seifert", seifert_suite},           {4, "graph-engine", graph_suite},
        {5, "sol", sol_suite},                   {6, "hyperbolic-oracle", hyperbolic_suite},
        {7, "cli", cli_suite},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Result r;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << c.id << " " << c.name << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                  << r.detail.str() << "; " << std::fixed << std::setprecision(1) << secs << "s)\n";
        for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
        std::cout.flush();
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
