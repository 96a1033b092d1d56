#ifndef OOEVAL_EVALUATOR_HPP
#define OOEVAL_EVALUATOR_HPP

#include <memory>
#include <string>
#include <vector>

#include "ooeval/common.hpp"

namespace ooo {

// One stream event: the symbol sitting at `position` (1-based) of a word of
// length `length`. Symbols are element indices for algebra streams and
// alphabet indices for language streams. Every position arrives exactly once;
// the order is adversarial.
struct stream_event {
    int symbol = 0;
    long long position = 0;
    long long length = 0;
};

// Common stream plumbing. feed() enforces the exactly-once contract (length
// consistency, position range, duplicates, symbol range) through a shadow
// presence bitmap. The bitmap is harness instrumentation: a constant-space
// algorithm cannot afford duplicate detection itself, so state_bits() must
// never include it. state_bits() reports the canonical serialized size of the
// data the algorithm itself retains between events.
class evaluator_base {
public:
    virtual ~evaluator_base() = default;

    void init(long long n) {
        if (n < 0) fail(errc::contract_error, "negative stream length");
        n_ = n;
        feeds_ = 0;
        finished_ = false;
        seen_.assign(static_cast<std::size_t>(n), false);
        do_init();
    }

    void feed(const stream_event& ev) {
        if (n_ < 0) fail(errc::contract_error, "feed before init");
        if (finished_) fail(errc::contract_error, "feed after finish");
        if (ev.length != n_) fail(errc::contract_error, "event length disagrees with init");
        if (ev.position < 1 || ev.position > n_) fail(errc::contract_error, "position out of range");
        if (ev.symbol < 0 || ev.symbol >= symbol_count_) fail(errc::contract_error, "symbol out of range");
        auto idx = static_cast<std::size_t>(ev.position - 1);
        if (seen_[idx]) fail(errc::contract_error, "duplicate position " + std::to_string(ev.position));
        seen_[idx] = true;
        ++feeds_;
        do_feed(ev);
    }

    long long length() const { return n_; }
    long long feeds() const { return feeds_; }
    int symbols() const { return symbol_count_; }

    virtual long long state_bits() const = 0;
    virtual const char* kind() const = 0;

protected:
    explicit evaluator_base(int symbol_count) : symbol_count_(symbol_count) {}

    virtual void do_init() = 0;
    virtual void do_feed(const stream_event& ev) = 0;

    void mark_finish() {
        if (n_ < 0) fail(errc::contract_error, "finish before init");
        if (finished_) fail(errc::contract_error, "finish called twice");
        if (feeds_ != n_)
            fail(errc::contract_error, "finish with " + std::to_string(n_ - feeds_) + " positions missing");
        finished_ = true;
    }

    long long n_ = -1;
    int symbol_count_;

private:
    long long feeds_ = 0;
    bool finished_ = false;
    std::vector<bool> seen_;
};

// Evaluates the stream to an element of a finite semigroup.
class element_evaluator : public evaluator_base {
public:
    int finish() {
        mark_finish();
        return do_finish();
    }

protected:
    using evaluator_base::evaluator_base;
    virtual int do_finish() = 0;
};

// Decides membership of the streamed word in a fixed language.
class language_evaluator : public evaluator_base {
public:
    bool finish() {
        mark_finish();
        return do_finish();
    }

protected:
    using evaluator_base::evaluator_base;
    virtual bool do_finish() = 0;
};

}  // namespace ooo

#endif
