#include "ooeval/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ooo {

// ---------------------------------------------------------------------------

permutation_spec permutation_spec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);

    auto parse_ll = [&](const std::string& s, const char* what) -> long long {
        try {
            std::size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            fail(errc::parse_error, std::string("bad ") + what + " in order spec: " + text);
        }
    };

    permutation_spec spec;
    const std::string& head = parts[0];
    if (head == "identity" && parts.size() == 1) {
        spec.k = kind::identity;
    } else if (head == "reverse" && parts.size() == 1) {
        spec.k = kind::reverse;
    } else if (head == "evens-odds" && parts.size() == 1) {
        spec.k = kind::evens_odds;
    } else if (head == "random" && parts.size() <= 2) {
        spec.k = kind::random;
        spec.seed = parts.size() == 2 ? static_cast<unsigned long long>(parse_ll(parts[1], "seed")) : 0;
    } else if (head == "blocks" && (parts.size() == 2 || parts.size() == 3)) {
        spec.k = kind::blocks;
        spec.block = parse_ll(parts[1], "block size");
        if (spec.block < 1) fail(errc::parse_error, "block size must be positive: " + text);
        spec.seed = parts.size() == 3 ? static_cast<unsigned long long>(parse_ll(parts[2], "seed")) : 0;
    } else if (head == "domain-first" && parts.size() == 2) {
        spec.k = kind::domain_first;
        std::string item;
        std::istringstream in(parts[1]);
        while (std::getline(in, item, ','))
            if (!item.empty()) spec.domain.push_back(parse_ll(item, "position"));
        if (spec.domain.empty()) fail(errc::parse_error, "domain-first needs positions: " + text);
    } else {
        fail(errc::parse_error, "unknown order spec: " + text);
    }
    return spec;
}

std::string permutation_spec::to_string() const {
    switch (k) {
        case kind::identity:
            return "identity";
        case kind::reverse:
            return "reverse";
        case kind::evens_odds:
            return "evens-odds";
        case kind::random:
            return "random:" + std::to_string(seed);
        case kind::blocks:
            return "blocks:" + std::to_string(block) + ":" + std::to_string(seed);
        case kind::domain_first: {
            std::string s = "domain-first:";
            for (std::size_t i = 0; i < domain.size(); ++i)
                s += (i ? "," : "") + std::to_string(domain[i]);
            return s;
        }
    }
    return "identity";
}

std::vector<long long> make_permutation(const permutation_spec& spec, long long n) {
    std::vector<long long> order;
    order.reserve(static_cast<std::size_t>(n));
    switch (spec.k) {
        case permutation_spec::kind::identity:
            for (long long p = 1; p <= n; ++p) order.push_back(p);
            break;
        case permutation_spec::kind::reverse:
            for (long long p = n; p >= 1; --p) order.push_back(p);
            break;
        case permutation_spec::kind::random: {
            for (long long p = 1; p <= n; ++p) order.push_back(p);
            rng_t rng(spec.seed);
            shuffle_vec(order, rng);
            break;
        }
        case permutation_spec::kind::evens_odds:
            for (long long p = 2; p <= n; p += 2) order.push_back(p);
            for (long long p = 1; p <= n; p += 2) order.push_back(p);
            break;
        case permutation_spec::kind::blocks: {
            long long nblocks = (n + spec.block - 1) / spec.block;
            std::vector<long long> ids(static_cast<std::size_t>(nblocks));
            std::iota(ids.begin(), ids.end(), 0);
            rng_t rng(spec.seed);
            shuffle_vec(ids, rng);
            for (long long b : ids)
                for (long long p = b * spec.block + 1; p <= std::min(n, (b + 1) * spec.block); ++p)
                    order.push_back(p);
            break;
        }
        case permutation_spec::kind::domain_first: {
            std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
            std::vector<long long> first = spec.domain;
            std::sort(first.begin(), first.end());
            for (long long p : first) {
                if (p < 1 || p > n) fail(errc::contract_error, "domain-first position out of range");
                if (in[static_cast<std::size_t>(p)]) fail(errc::contract_error, "domain-first duplicate position");
                in[static_cast<std::size_t>(p)] = true;
                order.push_back(p);
            }
            for (long long p = 1; p <= n; ++p)
                if (!in[static_cast<std::size_t>(p)]) order.push_back(p);
            break;
        }
    }
    return order;
}

// ---------------------------------------------------------------------------

namespace {

template <class Ev>
long long drive(Ev& ev, std::span<const int> w, std::span<const long long> order) {
    if (w.size() != order.size()) fail(errc::contract_error, "order length disagrees with word length");
    long long n = static_cast<long long>(w.size());
    ev.init(n);
    long long worst = ev.state_bits();
    for (long long p : order) {
        ev.feed({w[static_cast<std::size_t>(p - 1)], p, n});
        worst = std::max(worst, ev.state_bits());
    }
    return worst;
}

}  // namespace

element_run run_element_stream(element_evaluator& ev, std::span<const int> w,
                               std::span<const long long> order) {
    element_run r;
    r.max_state_bits = drive(ev, w, order);
    r.value = ev.finish();
    return r;
}

language_run run_language_stream(language_evaluator& ev, std::span<const int> w,
                                 std::span<const long long> order) {
    language_run r;
    r.max_state_bits = drive(ev, w, order);
    r.accepted = ev.finish();
    return r;
}

// ---------------------------------------------------------------------------

namespace {

unsigned long long mix(unsigned long long a, unsigned long long b) {
    unsigned long long x = a + 0x9E3779B97F4A7C15ull + (b << 6) + (b >> 2);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    return x;
}

bool next_word(word& w, int symbol_count) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < symbol_count) return true;
        w[i] = 0;
    }
    return false;
}

long long word_count(int symbol_count, long long n, long long cap) {
    long long v = 1;
    for (long long i = 0; i < n; ++i) {
        if (v > cap / symbol_count) return cap + 1;
        v *= symbol_count;
    }
    return v;
}

std::string word_text(const word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
    return s + "]";
}

void save_replay(const std::string& path, const word& w, std::span<const long long> order) {
    trace t;
    t.n = static_cast<long long>(w.size());
    for (long long p : order)
        t.events.emplace_back(p, std::to_string(w[static_cast<std::size_t>(p - 1)]));
    save_trace(t, path);
}

template <class Ev, class Value>
differential_report diff_campaign(Ev& dut, Ev& reference, const differential_config& cfg,
                                  Value (*run_one)(Ev&, std::span<const int>, std::span<const long long>)) {
    if (dut.symbols() != reference.symbols())
        fail(errc::contract_error, "evaluators disagree on the symbol count");
    int sc = dut.symbols();
    differential_report rep;

    auto run_case = [&](const word& w, const std::vector<long long>& order,
                        const std::string& order_desc) -> bool {
        ++rep.cases;
        auto a = run_one(dut, w, order);
        auto b = run_one(reference, w, order);
        if (a.final_value() == b.final_value()) return true;
        ++rep.discrepancies;
        rep.first_failure = "word " + word_text(w) + " order " + order_desc + ": " + dut.kind() +
                            " gave " + std::to_string(a.final_value()) + ", " + reference.kind() +
                            " gave " + std::to_string(b.final_value());
        if (!cfg.replay_path.empty()) save_replay(cfg.replay_path, w, order);
        return false;
    };

    auto run_orders = [&](long long n, const word& w, long long word_id, int random_orders) -> bool {
        permutation_spec id_spec, rev_spec;
        rev_spec.k = permutation_spec::kind::reverse;
        if (!run_case(w, make_permutation(id_spec, n), "identity")) return false;
        if (!run_case(w, make_permutation(rev_spec, n), "reverse")) return false;
        for (int t = 0; t < random_orders; ++t) {
            permutation_spec rnd;
            rnd.k = permutation_spec::kind::random;
            rnd.seed = mix(mix(cfg.seed, static_cast<unsigned long long>(n)),
                           mix(static_cast<unsigned long long>(word_id), static_cast<unsigned long long>(t)));
            if (!run_case(w, make_permutation(rnd, n), rnd.to_string())) return false;
        }
        return true;
    };

    auto sampled_pass = [&](long long n, int random_orders) -> bool {
        rng_t rng(mix(cfg.seed, static_cast<unsigned long long>(n) * 2654435761ull));
        for (long long s = 0; s < cfg.samples_per_n; ++s) {
            word w(static_cast<std::size_t>(n));
            for (auto& c : w) c = static_cast<int>(rng_below(rng, static_cast<unsigned long long>(sc)));
            if (!run_orders(n, w, s, random_orders)) return false;
        }
        return true;
    };

    for (long long n : cfg.exhaustive_n) {
        if (word_count(sc, n, cfg.exhaustive_word_cap) > cfg.exhaustive_word_cap) {
            if (!sampled_pass(n, cfg.random_orders_exhaustive)) return rep;
            continue;
        }
        word w(static_cast<std::size_t>(n), 0);
        long long word_id = 0;
        do {
            if (!run_orders(n, w, word_id++, cfg.random_orders_exhaustive)) return rep;
        } while (next_word(w, sc));
    }
    for (long long n : cfg.sampled_n)
        if (!sampled_pass(n, cfg.random_orders_sampled)) return rep;
    return rep;
}

struct element_case {
    element_run r;
    int final_value() const { return r.value; }
};

struct language_case {
    language_run r;
    int final_value() const { return r.accepted ? 1 : 0; }
};

element_case run_element_case(element_evaluator& ev, std::span<const int> w,
                              std::span<const long long> order) {
    return {run_element_stream(ev, w, order)};
}

language_case run_language_case(language_evaluator& ev, std::span<const int> w,
                                std::span<const long long> order) {
    return {run_language_stream(ev, w, order)};
}

}  // namespace

differential_report differential_element(element_evaluator& dut, element_evaluator& reference,
                                         const differential_config& cfg) {
    return diff_campaign<element_evaluator, element_case>(dut, reference, cfg, run_element_case);
}

differential_report differential_language(language_evaluator& dut, language_evaluator& reference,
                                          const differential_config& cfg) {
    return diff_campaign<language_evaluator, language_case>(dut, reference, cfg, run_language_case);
}

// ---------------------------------------------------------------------------

const char* growth_model_name(growth_model m) {
    switch (m) {
        case growth_model::constant:
            return "constant";
        case growth_model::logarithmic:
            return "logarithmic";
        case growth_model::sqrt:
            return "sqrt";
        case growth_model::linear:
            return "linear";
        case growth_model::linearithmic:
            return "linearithmic";
    }
    return "constant";
}

growth_fit fit_growth(std::span<const growth_point> pts) {
    if (pts.empty()) fail(errc::contract_error, "no points to fit");
    constexpr growth_model models[] = {growth_model::constant, growth_model::logarithmic,
                                       growth_model::sqrt, growth_model::linear,
                                       growth_model::linearithmic};
    auto shape = [](growth_model m, double n) -> double {
        switch (m) {
            case growth_model::constant:
                return 1.0;
            case growth_model::logarithmic:
                return std::log2(n);
            case growth_model::sqrt:
                return std::sqrt(n);
            case growth_model::linear:
                return n;
            case growth_model::linearithmic:
                return n * std::log2(n);
        }
        return 1.0;
    };

    growth_fit best;
    bool have = false;
    for (growth_model m : models) {
        // Per-point ratios r = y/g; the scale c = sum(r^2)/sum(r) minimizes
        // the relative residuals, whose RMS is the fit error.
        double sum_r = 0, sum_r2 = 0;
        bool ok = true;
        std::vector<double> ratios;
        for (const auto& p : pts) {
            double g = shape(m, static_cast<double>(p.n));
            if (!(g > 0)) {
                ok = false;
                break;
            }
            double r = static_cast<double>(p.bits) / g;
            ratios.push_back(r);
            sum_r += r;
            sum_r2 += r * r;
        }
        if (!ok || sum_r <= 0) continue;
        double c = sum_r2 / sum_r;
        double acc = 0;
        for (double r : ratios) {
            double rel = r / c - 1.0;
            acc += rel * rel;
        }
        double rms = std::sqrt(acc / static_cast<double>(ratios.size()));
        if (!have || rms < best.rel_rms) {
            best.model = m;
            best.scale = c;
            best.rel_rms = rms;
            have = true;
        }
    }
    if (!have) fail(errc::contract_error, "no applicable growth model");
    return best;
}

namespace {

template <class Ev, class Run>
std::vector<growth_point> measure_any(Ev& ev, int symbol_count, const measurement_config& cfg,
                                      Run run_one) {
    std::vector<growth_point> out;
    for (long long n : cfg.ns) {
        long long worst = 0;
        for (long long t = 0; t < cfg.words_per_n; ++t) {
            rng_t rng(mix(cfg.seed, mix(static_cast<unsigned long long>(n), static_cast<unsigned long long>(t))));
            word w;
            if (cfg.generator) {
                w = cfg.generator(n, rng);
                if (static_cast<long long>(w.size()) != n)
                    fail(errc::contract_error, "word generator returned the wrong length");
            } else {
                w.resize(static_cast<std::size_t>(n));
                for (auto& c : w)
                    c = static_cast<int>(rng_below(rng, static_cast<unsigned long long>(symbol_count)));
            }
            auto order = make_permutation(cfg.order, n);
            worst = std::max(worst, run_one(ev, w, order));
        }
        out.push_back({n, worst});
    }
    return out;
}

}  // namespace

std::vector<growth_point> measure_element(element_evaluator& ev, int symbol_count,
                                          const measurement_config& cfg) {
    return measure_any(ev, symbol_count, cfg,
                       [](element_evaluator& e, const word& w, const std::vector<long long>& o) {
                           return run_element_stream(e, w, o).max_state_bits;
                       });
}

std::vector<growth_point> measure_language(language_evaluator& ev, int symbol_count,
                                           const measurement_config& cfg) {
    return measure_any(ev, symbol_count, cfg,
                       [](language_evaluator& e, const word& w, const std::vector<long long>& o) {
                           return run_language_stream(e, w, o).max_state_bits;
                       });
}

void write_profile_csv(const std::string& path, std::span<const growth_point> pts,
                       const growth_fit& fit) {
    std::ofstream out(path);
    if (!out) fail(errc::parse_error, "cannot open for writing: " + path);
    out << "n,max_state_bits,model,fit_error\n";
    char err[32];
    std::snprintf(err, sizeof err, "%.6f", fit.rel_rms);
    for (const auto& p : pts)
        out << p.n << "," << p.bits << "," << growth_model_name(fit.model) << "," << err << "\n";
    if (!out) fail(errc::parse_error, "write failed: " + path);
}

// ---------------------------------------------------------------------------

trace load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open trace: " + path);
    trace t;
    bool have_n = false;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!have_n) {
            if (first.rfind("n=", 0) != 0)
                fail(errc::parse_error, path + ":" + std::to_string(lineno) + ": expected n=<length>");
            try {
                std::size_t used = 0;
                t.n = std::stoll(first.substr(2), &used);
                if (used != first.size() - 2 || t.n < 0) throw std::invalid_argument(first);
            } catch (const std::exception&) {
                fail(errc::parse_error, path + ":" + std::to_string(lineno) + ": bad length");
            }
            std::string extra;
            if (ls >> extra)
                fail(errc::parse_error, path + ":" + std::to_string(lineno) + ": trailing content");
            have_n = true;
            continue;
        }
        long long pos = 0;
        try {
            std::size_t used = 0;
            pos = std::stoll(first, &used);
            if (used != first.size()) throw std::invalid_argument(first);
        } catch (const std::exception&) {
            fail(errc::parse_error, path + ":" + std::to_string(lineno) + ": bad position");
        }
        std::string token, extra;
        if (!(ls >> token))
            fail(errc::parse_error, path + ":" + std::to_string(lineno) + ": missing symbol");
        if (ls >> extra)
            fail(errc::parse_error, path + ":" + std::to_string(lineno) + ": trailing content");
        t.events.emplace_back(pos, token);
    }
    if (!have_n) fail(errc::parse_error, path + ": missing n=<length> header");
    return t;
}

void save_trace(const trace& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::parse_error, "cannot open for writing: " + path);
    out << "n=" << t.n << "\n";
    for (const auto& [pos, token] : t.events) out << pos << " " << token << "\n";
    if (!out) fail(errc::parse_error, "write failed: " + path);
}

}  // namespace ooo
