#ifndef OOEVAL_HARNESS_HPP
#define OOEVAL_HARNESS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ooeval/common.hpp"
#include "ooeval/evaluator.hpp"

namespace ooo {

// ---------------------------------------------------------------------------
// Arrival orders. A permutation lists the 1-based positions in the order
// they are fed. Specs parse from strings for the CLI:
//   identity | reverse | random:<seed> | evens-odds |
//   blocks:<size>:<seed> | domain-first:<p1,p2,...>

struct permutation_spec {
    enum class kind { identity, reverse, random, evens_odds, blocks, domain_first } k =
        kind::identity;
    unsigned long long seed = 0;
    long long block = 1;
    std::vector<long long> domain;

    static permutation_spec parse(const std::string& text);
    std::string to_string() const;
};

std::vector<long long> make_permutation(const permutation_spec& spec, long long n);

// ---------------------------------------------------------------------------
// Streaming drivers. Feed the word in the given order, sampling state_bits
// after init and after every feed; the maximum is the space the run needed.

struct element_run {
    int value = 0;
    long long max_state_bits = 0;
};

struct language_run {
    bool accepted = false;
    long long max_state_bits = 0;
};

element_run run_element_stream(element_evaluator& ev, std::span<const int> w,
                               std::span<const long long> order);
language_run run_language_stream(language_evaluator& ev, std::span<const int> w,
                                 std::span<const long long> order);

// ---------------------------------------------------------------------------
// Differential campaign: same word, same arrival order, two evaluators; any
// disagreement on the final value is a failure. Small lengths run every word,
// larger ones run seeded samples.

struct differential_config {
    std::vector<long long> exhaustive_n = {0, 1, 2, 3, 4, 5, 6};
    std::vector<long long> sampled_n = {7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 32, 64};
    long long samples_per_n = 500;
    int random_orders_exhaustive = 10;  // plus identity and reverse
    int random_orders_sampled = 3;      // plus identity and reverse
    long long exhaustive_word_cap = 300'000;  // lengths past this sample instead
    unsigned long long seed = 0;
    std::string replay_path;  // on failure, the case is saved here (empty: skip)
};

struct differential_report {
    long long cases = 0;
    long long discrepancies = 0;
    std::string first_failure;
};

differential_report differential_element(element_evaluator& dut, element_evaluator& reference,
                                         const differential_config& cfg = {});
differential_report differential_language(language_evaluator& dut, language_evaluator& reference,
                                          const differential_config& cfg = {});

// ---------------------------------------------------------------------------
// Growth profile: fit max-state-bits samples against the candidate shapes
// and report the best relative fit.

enum class growth_model { constant, logarithmic, sqrt, linear, linearithmic };

const char* growth_model_name(growth_model m);

struct growth_point {
    long long n = 0;
    long long bits = 0;
};

struct growth_fit {
    growth_model model = growth_model::constant;
    double scale = 0.0;    // least-squares coefficient for the winning shape
    double rel_rms = 0.0;  // root mean square of the relative residuals
};

growth_fit fit_growth(std::span<const growth_point> pts);

// Measurement driver: for each n, run `words_per_n` seeded words (from the
// generator, or uniform random symbols when absent) under the arrival order
// and keep the worst max_state_bits.
struct measurement_config {
    std::vector<long long> ns = {16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
    long long words_per_n = 3;
    permutation_spec order;  // identity unless overridden
    unsigned long long seed = 0;
    std::function<word(long long, rng_t&)> generator;
};

std::vector<growth_point> measure_element(element_evaluator& ev, int symbol_count,
                                          const measurement_config& cfg);
std::vector<growth_point> measure_language(language_evaluator& ev, int symbol_count,
                                           const measurement_config& cfg);

void write_profile_csv(const std::string& path, std::span<const growth_point> pts,
                       const growth_fit& fit);

// ---------------------------------------------------------------------------
// Trace files:
//   n=<N>
//   <position> <symbol-token>     (one line per event, any order)
// Tokens are letters or element names depending on how the trace is used.

struct trace {
    long long n = 0;
    std::vector<std::pair<long long, std::string>> events;
};

trace load_trace(const std::string& path);
void save_trace(const trace& t, const std::string& path);

}  // namespace ooo

#endif
