// Command line front end: classify algebras, evaluate out-of-order streams,
// measure space growth, build and verify fooling sets, run the exact oracles.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ooeval/catalog.hpp"
#include "ooeval/common.hpp"
#include "ooeval/eval_generic.hpp"
#include "ooeval/eval_special.hpp"
#include "ooeval/evaluator.hpp"
#include "ooeval/fooling.hpp"
#include "ooeval/harness.hpp"
#include "ooeval/langkit.hpp"
#include "ooeval/oracles.hpp"
#include "ooeval/semigroup.hpp"

namespace {

using namespace ooo;

void put(const std::string& key, const std::string& value) {
    std::cout << key << ": " << value << "\n";
}

void put(const std::string& key, long long value) { put(key, std::to_string(value)); }

// ---------------------------------------------------------------------------
// Subjects: a regular language given as a regex, or an algebra given as a
// multiplication table file.

struct subject_options {
    std::string regex;
    std::string table_path;
    std::string alphabet;
    std::string view = "auto";  // auto | monoid | semigroup

    void attach(CLI::App* cmd) {
        auto* r = cmd->add_option("--regex", regex, "subject language as a regular expression");
        auto* t = cmd->add_option("--semigroup-file", table_path,
                                  "subject algebra as a multiplication table file");
        cmd->add_option("--alphabet", alphabet,
                        "alphabet order for --regex (default: letters of the pattern, sorted)");
        cmd->add_option("--as", view, "algebra view: auto, monoid or semigroup")
            ->check(CLI::IsMember({"auto", "monoid", "semigroup"}));
        r->excludes(t);
    }

    bool given() const { return !regex.empty() || !table_path.empty(); }
};

struct loaded_subject {
    bool language = false;
    std::string display;
    bool monoid_view = false;
    std::optional<dfa> machine;               // language subjects
    std::optional<syntactic_structure> synt;  // view-matching syntactic algebra
    std::optional<finite_semigroup> table;    // table subjects

    const finite_semigroup& algebra() const { return language ? synt->algebra : *table; }
};

loaded_subject load_subject(const subject_options& o) {
    if (o.regex.empty() == o.table_path.empty())
        fail(errc::parse_error, "give exactly one of --regex and --semigroup-file");
    loaded_subject s;
    if (!o.regex.empty()) {
        s.language = true;
        s.display = o.regex;
        std::string alphabet = o.alphabet.empty() ? regex_letters(o.regex) : o.alphabet;
        if (alphabet.empty()) fail(errc::parse_error, "empty alphabet; give --alphabet");
        s.machine = compile_regex(o.regex, alphabet);
        s.monoid_view = o.view != "semigroup";
        s.synt = s.monoid_view ? syntactic_monoid(*s.machine) : syntactic_semigroup(*s.machine);
    } else {
        s.display = o.table_path;
        s.table = load_semigroup_file(o.table_path);
        if (o.view == "monoid" && !s.table->has_identity())
            fail(errc::inapplicable, "--as monoid needs an identity element in the table");
        s.monoid_view = o.view == "monoid" || (o.view == "auto" && s.table->has_identity());
    }
    return s;
}

// ---------------------------------------------------------------------------
// Registry of languages with dedicated evaluators, keyed by DFA equivalence.

struct registry_entry {
    const char* evaluator;
    const char* pattern;
};

constexpr registry_entry registry[] = {
    {"abstar", "(ab)*"},
    {"firstlast", "a(a|b)*b"},
    {"aba", "a*b*a*"},
    {"ababa", "a*b*a*b*a*"},
    {"ababab", "a*b*a*b*a*b*"},
};

std::optional<std::string> registry_match(const dfa& d) {
    if (d.letters != std::vector<char>{'a', 'b'}) return std::nullopt;
    for (const auto& e : registry)
        if (equivalent(d, compile_regex(e.pattern, "ab"))) return std::string(e.evaluator);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Evaluator construction and automatic dispatch.

std::unique_ptr<element_evaluator> build_element_evaluator(const finite_semigroup& alg,
                                                           const std::string& name) {
    if (name == "reference") return make_reference_evaluator(alg);
    if (name == "commutative") return make_commutative_evaluator(alg);
    if (name == "fl") return make_fl_evaluator(alg);
    if (name == "flcom") return make_flcom_evaluator(alg);
    if (name == "li") return make_li_evaluator(alg);
    if (name == "licom") return make_licom_evaluator(alg);
    if (name == "interval") return make_interval_evaluator(alg);
    if (name == "bitpacked") return make_bitpacked_evaluator(alg);
    if (name == "firstlast") return make_firstlast_evaluator(alg);
    fail(errc::parse_error, "unknown element evaluator: " + name);
}

std::string auto_element_choice(const finite_semigroup& alg, bool monoid_view, long long cap) {
    if (monoid_view) {
        if (!check_equation(alg, equation_id::com, cap)) return "commutative";
        if (!check_equation(alg, equation_id::flcom, cap)) return "flcom";
        return "bitpacked";
    }
    if (!check_equation(alg, equation_id::licom, cap)) return "licom";
    return "bitpacked";
}

std::string auto_language_choice(const loaded_subject& s, long long cap) {
    if (!check_equation(s.synt->algebra, equation_id::com, cap)) return "commutative";
    if (auto hit = registry_match(*s.machine)) return *hit;
    if (s.synt->monoid && !check_equation(s.synt->algebra, equation_id::flcom, cap)) return "flcom";
    return "bitpacked";
}

// The printable dispatch decision, view-sensitive (used by classify).
std::string dispatch_name(const loaded_subject& s, long long cap) {
    if (!s.language) return auto_element_choice(s.algebra(), s.monoid_view, cap);
    std::string pick = s.monoid_view ? auto_language_choice(s, cap)
                                     : (!check_equation(s.synt->algebra, equation_id::licom, cap)
                                            ? std::string("licom")
                                            : std::string("bitpacked"));
    for (const auto& e : registry)
        if (pick == e.evaluator) return pick;
    return "morphism:" + pick;
}

std::unique_ptr<language_evaluator> build_language_evaluator(loaded_subject& s,
                                                             const std::string& name,
                                                             long long cap) {
    if (name == "auto") {
        if (!s.monoid_view)
            return build_language_evaluator(
                s, !check_equation(s.synt->algebra, equation_id::licom, cap) ? "licom" : "bitpacked",
                cap);
        return build_language_evaluator(s, auto_language_choice(s, cap), cap);
    }
    if (name == "dfa") return make_dfa_reference_evaluator(*s.machine);
    if (name == "abstar" || name == "aba" || name == "ababa" || name == "ababab") {
        const char* pattern = nullptr;
        for (const auto& e : registry)
            if (name == e.evaluator) pattern = e.pattern;
        if (s.machine->letters != std::vector<char>{'a', 'b'} ||
            !equivalent(*s.machine, compile_regex(pattern, "ab")))
            fail(errc::inapplicable, "evaluator " + name + " decides a different language");
        if (name == "abstar") return make_abstar_evaluator();
        if (name == "aba") return make_aba_evaluator();
        if (name == "ababa") return make_ababa_evaluator();
        return make_ababab_evaluator();
    }
    if (name == "firstlast") {
        // The xyz = xz law only holds on the semigroup side, so this wraps a
        // semigroup-view morphism regardless of --as.
        if (!s.synt || s.synt->monoid) s.synt = syntactic_semigroup(*s.machine);
        return make_morphism_evaluator(*s.synt, make_firstlast_evaluator(s.synt->algebra));
    }
    return make_morphism_evaluator(*s.synt, build_element_evaluator(s.synt->algebra, name));
}

// ---------------------------------------------------------------------------

void print_witness_named(const finite_semigroup& alg, const equation_witness& w) {
    const auto& def = equation(w.id);
    put("witness-equation", equation_name(w.id));
    std::string assign;
    for (std::size_t i = 0; i < def.var_names.size(); ++i)
        assign += (i ? " " : "") + def.var_names[i] + "=" + alg.name(w.assignment[i]);
    put("witness", assign);
    put("witness-lhs", alg.name(w.lhs));
    put("witness-rhs", alg.name(w.rhs));
}

int run_classify(const subject_options& so, long long cap) {
    loaded_subject s = load_subject(so);
    const finite_semigroup& alg = s.algebra();
    put("subject", s.display);
    put("view", s.monoid_view ? "monoid" : "semigroup");
    put("elements", alg.size());
    std::string order;
    for (int i = 0; i < alg.size(); ++i) order += (i ? " " : "") + alg.name(i);
    put("element-order", order);
    put("identity", alg.has_identity() ? alg.name(*alg.identity()) : "none");
    put("omega", alg.idempotent_power());
    regime_report rep = s.monoid_view ? classify_monoid(alg, cap) : classify_semigroup(alg, cap);
    put("regime", regime_name(rep.r));
    if (rep.witness) print_witness_named(alg, *rep.witness);
    put("evaluator", dispatch_name(s, cap));
    return 0;
}

// ---------------------------------------------------------------------------

int run_eval(const subject_options& so, const std::string& evaluator_name,
             const std::string& trace_path, long long cap) {
    loaded_subject s = load_subject(so);
    trace t = load_trace(trace_path);

    if (s.language) {
        auto ev = build_language_evaluator(s, evaluator_name, cap);
        ev->init(t.n);
        long long worst = ev->state_bits();
        for (const auto& [pos, token] : t.events) {
            if (token.size() != 1)
                fail(errc::parse_error, "letter token must be one character: " + token);
            int a = s.machine->letter_index(token[0]);
            if (a < 0) fail(errc::parse_error, "letter not in the alphabet: " + token);
            ev->feed({a, pos, t.n});
            worst = std::max(worst, ev->state_bits());
        }
        bool acc = ev->finish();
        put("evaluator", ev->kind());
        put("result", acc ? "accept" : "reject");
        put("max-state-bits", worst);
        return 0;
    }

    const finite_semigroup& alg = s.algebra();
    std::string choice = evaluator_name == "auto"
                             ? auto_element_choice(alg, s.monoid_view, cap)
                             : evaluator_name;
    auto ev = build_element_evaluator(alg, choice);
    ev->init(t.n);
    long long worst = ev->state_bits();
    for (const auto& [pos, token] : t.events) {
        int e = alg.index_of(token);
        if (e < 0) fail(errc::parse_error, "unknown element: " + token);
        ev->feed({e, pos, t.n});
        worst = std::max(worst, ev->state_bits());
    }
    int value = ev->finish();
    put("evaluator", ev->kind());
    put("element", alg.name(value));
    put("max-state-bits", worst);
    return 0;
}

// ---------------------------------------------------------------------------

std::vector<long long> parse_ll_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(errc::parse_error, std::string("bad ") + what + ": " + item);
        }
    }
    if (out.empty()) fail(errc::parse_error, std::string("empty ") + what + " list");
    return out;
}

int run_measure(const subject_options& so, const std::string& evaluator_name,
                const std::string& ns_text, long long words, const std::string& order_text,
                unsigned long long seed, const std::string& out_path, long long cap) {
    loaded_subject s = load_subject(so);
    measurement_config cfg;
    if (!ns_text.empty()) cfg.ns = parse_ll_list(ns_text, "length");
    cfg.words_per_n = words;
    cfg.order = permutation_spec::parse(order_text);
    cfg.seed = seed;

    std::vector<growth_point> pts;
    std::string kind;
    if (s.language) {
        auto ev = build_language_evaluator(s, evaluator_name, cap);
        kind = ev->kind();
        pts = measure_language(*ev, ev->symbols(), cfg);
    } else {
        const finite_semigroup& alg = s.algebra();
        std::string choice = evaluator_name == "auto"
                                 ? auto_element_choice(alg, s.monoid_view, cap)
                                 : evaluator_name;
        auto ev = build_element_evaluator(alg, choice);
        kind = ev->kind();
        pts = measure_element(*ev, ev->symbols(), cfg);
    }

    growth_fit fit = fit_growth(pts);
    put("evaluator", kind);
    put("order", cfg.order.to_string());
    for (const auto& p : pts) put("bits[" + std::to_string(p.n) + "]", p.bits);
    put("model", growth_model_name(fit.model));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", fit.rel_rms);
    put("fit-error", buf);
    std::snprintf(buf, sizeof buf, "%.3f", fit.scale);
    put("scale", buf);
    if (!out_path.empty()) {
        write_profile_csv(out_path, pts, fit);
        put("csv", out_path);
    }
    return 0;
}

// ---------------------------------------------------------------------------

finite_semigroup default_fool_algebra(const std::string& construction) {
    if (construction == "noncomm") return syntactic_monoid(compile_regex("ab", "ab")).algebra;
    if (construction == "monlin") return syntactic_monoid(compile_regex("a*bba*", "ab")).algebra;
    if (construction == "stswap") return syntactic_semigroup(compile_regex("a*bc*", "abc")).algebra;
    if (construction == "xysep") return syntactic_semigroup(compile_regex("a*bba*", "ab")).algebra;
    fail(errc::parse_error, "construction has no algebra parameter: " + construction);
}

equation_witness require_violation(const finite_semigroup& alg, equation_id id) {
    auto w = check_equation(alg, id);
    if (!w)
        fail(errc::inapplicable, std::string("subject satisfies ") + equation_name(id) +
                                     "; the construction needs a violation");
    return *w;
}

fooling_family build_family(const std::string& construction, long long n,
                            const std::optional<finite_semigroup>& alg_opt) {
    auto algebra = [&]() -> finite_semigroup {
        return alg_opt ? *alg_opt : default_fool_algebra(construction);
    };
    if (construction == "sigma-aa") return make_sigma_aa_fooling(n);
    if (construction == "noncomm") {
        finite_semigroup a = algebra();
        return make_noncomm_fooling(a, require_violation(a, equation_id::com), n);
    }
    if (construction == "monlin") {
        finite_semigroup a = algebra();
        return make_monlin_fooling(a, require_violation(a, equation_id::flcom), n);
    }
    if (construction == "stswap") {
        finite_semigroup a = algebra();
        return make_stswap_fooling(a, require_violation(a, equation_id::licom1), n);
    }
    if (construction == "xysep") {
        finite_semigroup a = algebra();
        return make_xysep_fooling(a, require_violation(a, equation_id::licom2), n);
    }
    if (construction == "ab-semigroup") return make_abstar_semigroup_fooling(n);
    if (construction == "aba") return make_aba_fooling(n);
    fail(errc::parse_error, "unknown construction: " + construction);
}

void dump_family(const fooling_family& f, const std::string& path) {
    if (f.members > 4096)
        fail(errc::cap_exceeded, "refusing to dump more than 4096 members; lower --n");
    std::ofstream out(path);
    if (!out) fail(errc::parse_error, "cannot open for writing: " + path);
    auto row = [&](const partial_word& w) {
        std::string line;
        for (std::size_t i = 0; i < w.cells.size(); ++i) {
            if (i) line += " ";
            line += w.cells[i] < 0 ? std::string("_") : f.symbol_name(w.cells[i]);
        }
        return line;
    };
    out << "# " << f.name << " n=" << f.n << " length=" << f.length << " members=" << f.members
        << "\n";
    for (long long i = 0; i < f.members; ++i) out << "member " << i << ": " << row(f.member(i)) << "\n";
    if (f.members >= 2) out << "witness 0 1: " << row(f.witness(0, 1)) << "\n";
    if (!out) fail(errc::parse_error, "write failed: " + path);
}

int run_fool(const subject_options& so, const std::string& construction, long long n, bool verify,
             unsigned long long seed, const std::string& out_path) {
    std::optional<finite_semigroup> alg;
    if (so.given()) {
        loaded_subject ls = load_subject(so);
        alg = ls.algebra();
    }
    fooling_family f = build_family(construction, n, alg);
    put("construction", f.name);
    put("n", f.n);
    put("members", f.members);
    put("length", f.length);
    std::string dom;
    for (std::size_t i = 0; i < f.domain.size(); ++i)
        dom += (i ? " " : "") + std::to_string(f.domain[i]);
    put("domain", dom);
    put("bits", f.bits());
    if (!out_path.empty()) {
        dump_family(f, out_path);
        put("dump", out_path);
    }
    if (verify) {
        fooling_report r = verify_fooling(f, default_pair_cap, seed);
        put("pairs-checked", r.pairs_checked);
        put("coverage", r.sampled ? "sampled" : "exhaustive");
        put("verify", r.ok ? "pass" : "fail");
        if (!r.ok) {
            put("failure", r.failure);
            return 1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------

int run_oracle(const subject_options& so, const std::string& check, long long n,
               const std::string& domain_text, int k, int max_len, int m, long long cap) {
    if (check == "sum-of-squares") {
        auto r = check_sum_of_squares_lemma(m);
        put("check", check);
        put("m", m);
        put("intervals", r.intervals_checked);
        put("subsets", r.subsets_checked);
        put("holds", r.holds ? "yes" : "no");
        if (!r.holds) put("failure", r.failure);
        return 0;
    }
    if (check == "fl-preservation") {
        loaded_subject s = load_subject(so);
        const finite_semigroup& alg = s.algebra();
        int kk = k > 0 ? k : alg.size();
        auto r = check_fl_preservation(alg, kk, max_len);
        put("check", check);
        put("k", kk);
        put("max-len", max_len);
        put("words", r.words_checked);
        put("holds", r.holds ? "yes" : "no");
        if (!r.holds) {
            std::string w;
            for (std::size_t i = 0; i < r.counterexample.size(); ++i)
                w += (i ? " " : "") + alg.name(r.counterexample[i]);
            put("counterexample", w);
        }
        return 0;
    }
    if (check == "pumping") {
        loaded_subject s = load_subject(so);
        const finite_semigroup& alg = s.algebra();
        auto r = check_pumping_claim(alg);
        put("check", check);
        put("words", r.words_checked);
        put("holds", r.holds ? "yes" : "no");
        if (!r.holds) {
            std::string w;
            for (std::size_t i = 0; i < r.counterexample.size(); ++i)
                w += (i ? " " : "") + alg.name(r.counterexample[i]);
            put("counterexample", w);
        }
        return 0;
    }
    if (check != "one-way") fail(errc::parse_error, "unknown check: " + check);

    // one-way communication bound
    std::function<int(std::span<const int>)> verdict;
    int symbols = 0;
    long long length = n;
    std::vector<long long> domain;

    if (domain_text.rfind("fooling:", 0) == 0) {
        if (so.given())
            fail(errc::parse_error, "fooling domains carry their own subject; drop --regex/--semigroup-file");
        auto rest = domain_text.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            fail(errc::parse_error, "expected fooling:<construction>:<n>");
        std::string cname = rest.substr(0, colon);
        long long fn = 0;
        try {
            std::size_t used = 0;
            fn = std::stoll(rest.substr(colon + 1), &used);
            if (used != rest.size() - colon - 1) throw std::invalid_argument(rest);
        } catch (const std::exception&) {
            fail(errc::parse_error, "bad size in fooling domain: " + domain_text);
        }
        auto family = std::make_shared<fooling_family>(build_family(cname, fn, std::nullopt));
        if (length == 0) length = family->length;
        if (length != family->length)
            fail(errc::parse_error, "--n disagrees with the construction length " +
                                        std::to_string(family->length));
        domain = family->domain;
        symbols = family->symbol_count;
        auto intern = std::make_shared<std::map<std::string, int>>();
        verdict = [family, intern](std::span<const int> w) {
            auto [it, inserted] =
                intern->emplace(family->verdict(w), static_cast<int>(intern->size()));
            (void)inserted;
            return it->second;
        };
        put("domain-source", family->name + ":" + std::to_string(family->n));
    } else {
        if (length <= 0) fail(errc::parse_error, "--n is required for a one-way bound");
        loaded_subject s = load_subject(so);
        if (domain_text == "odd") {
            for (long long p = 1; p <= length; p += 2) domain.push_back(p);
        } else if (domain_text == "even") {
            for (long long p = 2; p <= length; p += 2) domain.push_back(p);
        } else if (!domain_text.empty()) {
            domain = parse_ll_list(domain_text, "domain position");
        } else {
            fail(errc::parse_error, "--domain is required");
        }
        if (s.language) {
            auto machine = std::make_shared<dfa>(*s.machine);
            symbols = machine->alphabet_size();
            verdict = [machine](std::span<const int> w) { return machine->run(w) ? 1 : 0; };
        } else {
            auto alg = std::make_shared<finite_semigroup>(s.algebra());
            symbols = alg->size();
            verdict = [alg](std::span<const int> w) { return alg->evaluate_word(w); };
        }
    }

    auto r = one_way_lower_bound(verdict, symbols, length, domain, cap);
    put("check", check);
    put("n", length);
    put("domain-size", r.domain_size);
    put("assignments", r.assignments);
    put("completions", r.completions);
    put("classes", r.classes);
    put("bits", r.bits);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"out-of-order evaluation of regular languages and finite algebras"};
    app.require_subcommand(1);

    subject_options classify_so, eval_so, measure_so, fool_so, oracle_so;
    long long classify_cap = default_equation_cap;

    auto* classify = app.add_subcommand("classify", "space regime of a language or algebra");
    classify_so.attach(classify);
    classify->add_option("--cap", classify_cap, "equation scan cap (assignments)");

    auto* eval = app.add_subcommand("eval", "run one out-of-order stream from a trace file");
    eval_so.attach(eval);
    std::string eval_evaluator = "auto", eval_trace;
    eval->add_option("--evaluator", eval_evaluator, "evaluator name (default: auto dispatch)");
    eval->add_option("--trace", eval_trace, "trace file: n=<N> header, then <pos> <symbol> lines")
        ->required();
    long long eval_cap = default_equation_cap;
    eval->add_option("--cap", eval_cap, "equation scan cap for auto dispatch");

    auto* measure = app.add_subcommand("measure", "profile max state bits against n");
    measure_so.attach(measure);
    std::string measure_evaluator = "auto", measure_ns, measure_order = "identity", measure_out;
    long long measure_words = 3;
    unsigned long long measure_seed = 0;
    long long measure_cap = default_equation_cap;
    measure->add_option("--evaluator", measure_evaluator, "evaluator name (default: auto dispatch)");
    measure->add_option("--ns", measure_ns, "comma-separated lengths (default: 16..16384 doubling)");
    measure->add_option("--words", measure_words, "words per length (default 3)");
    measure->add_option("--order", measure_order,
                        "arrival order: identity, reverse, random:<seed>, evens-odds, "
                        "blocks:<size>:<seed>, domain-first:<p1,p2,...>");
    measure->add_option("--seed", measure_seed, "word sampling seed");
    measure->add_option("--out", measure_out, "write n,max_state_bits,model,fit_error CSV here");
    measure->add_option("--cap", measure_cap, "equation scan cap for auto dispatch");

    auto* fool = app.add_subcommand("fool", "build a fooling set construction");
    fool_so.attach(fool);
    std::string fool_construction;
    long long fool_n = 4;
    bool fool_verify = false;
    unsigned long long fool_seed = 0;
    std::string fool_out;
    fool->add_option("--construction", fool_construction,
                     "sigma-aa, noncomm, monlin, stswap, xysep, ab-semigroup or aba")
        ->required();
    fool->add_option("--n", fool_n, "construction size parameter");
    fool->add_flag("--verify", fool_verify, "check every pair (sampled past the pair cap)");
    fool->add_option("--seed", fool_seed, "pair sampling seed");
    fool->add_option("--out", fool_out, "dump members and one witness, _ for holes");

    auto* oracle = app.add_subcommand("oracle", "exact cross-checks independent of the evaluators");
    oracle_so.attach(oracle);
    std::string oracle_check = "one-way", oracle_domain;
    long long oracle_n = 0;
    int oracle_k = 0, oracle_maxlen = 6, oracle_m = 14;
    long long oracle_cap = default_lower_bound_cap;
    oracle->add_option("--check", oracle_check,
                       "one-way, fl-preservation, sum-of-squares or pumping")
        ->check(CLI::IsMember({"one-way", "fl-preservation", "sum-of-squares", "pumping"}));
    oracle->add_option("--n", oracle_n, "stream length for one-way");
    oracle->add_option("--domain", oracle_domain,
                       "one-way positions: odd, even, <p1,p2,...> or fooling:<construction>:<n>");
    oracle->add_option("--k", oracle_k, "fl-preservation: occurrences kept (default |M|)");
    oracle->add_option("--max-len", oracle_maxlen, "fl-preservation: max word length");
    oracle->add_option("--m", oracle_m, "sum-of-squares: ground set {1..m}");
    oracle->add_option("--cap", oracle_cap, "one-way: assignments * completions cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(classify_so, classify_cap);
        if (eval->parsed()) return run_eval(eval_so, eval_evaluator, eval_trace, eval_cap);
        if (measure->parsed())
            return run_measure(measure_so, measure_evaluator, measure_ns, measure_words,
                               measure_order, measure_seed, measure_out, measure_cap);
        if (fool->parsed())
            return run_fool(fool_so, fool_construction, fool_n, fool_verify, fool_seed, fool_out);
        if (oracle->parsed())
            return run_oracle(oracle_so, oracle_check, oracle_n, oracle_domain, oracle_k,
                              oracle_maxlen, oracle_m, oracle_cap);
    } catch (const ooo::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::parse_error:
                return 2;
            case errc::cap_exceeded:
                return 3;
            case errc::inapplicable:
                return 4;
            case errc::contract_error:
                return 2;
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
