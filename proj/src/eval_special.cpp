#include "ooeval/eval_special.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

namespace ooo {

namespace bitpack {

int carry_left_endpoint(std::uint64_t v, int b, int p) {
    if (!test(v, b, p)) fail(errc::contract_error, "carry endpoint needs bit p set");
    std::uint64_t fresh = (v + one(b, p)) & ~v;
    int machine = std::countr_zero(fresh);
    return (b - machine) + 1;
}

}  // namespace bitpack

namespace {

// ---------------------------------------------------------------------------

class dfa_reference_evaluator final : public language_evaluator {
public:
    explicit dfa_reference_evaluator(dfa d)
        : language_evaluator(d.alphabet_size()), d_(std::move(d)), w_(index_bits(d_.alphabet_size())) {}

    long long state_bits() const override { return n_ + feeds() * w_; }
    const char* kind() const override { return "dfa-reference"; }

protected:
    void do_init() override { slots_.assign(static_cast<std::size_t>(n_), -1); }
    void do_feed(const stream_event& ev) override { slots_[static_cast<std::size_t>(ev.position - 1)] = ev.symbol; }
    bool do_finish() override { return d_.run(slots_); }

private:
    dfa d_;
    int w_;
    std::vector<int> slots_;
};

// ---------------------------------------------------------------------------

class abstar_evaluator final : public language_evaluator {
public:
    abstar_evaluator() : language_evaluator(2) {}

    long long state_bits() const override { return 2; }
    const char* kind() const override { return "abstar"; }

protected:
    void do_init() override { bad_ = false; }
    void do_feed(const stream_event& ev) override {
        // Position parity fixes the only letter (ab)* allows there.
        int want = ev.position % 2 == 1 ? 0 : 1;
        if (ev.symbol != want) bad_ = true;
    }
    bool do_finish() override { return !bad_ && n_ % 2 == 0; }

private:
    bool bad_ = false;
};

// ---------------------------------------------------------------------------

class firstlast_evaluator final : public element_evaluator {
public:
    explicit firstlast_evaluator(finite_semigroup s)
        : element_evaluator(s.size()), alg_(std::move(s)), w_(index_bits(alg_.size())) {}

    long long state_bits() const override {
        return 2 + (first_ >= 0 ? w_ : 0) + (last_ >= 0 ? w_ : 0);
    }
    const char* kind() const override { return "firstlast"; }

protected:
    void do_init() override { first_ = last_ = -1; }
    void do_feed(const stream_event& ev) override {
        if (ev.position == 1) first_ = ev.symbol;
        if (ev.position == n_) last_ = ev.symbol;
    }
    int do_finish() override {
        if (n_ == 0) return alg_.evaluate_word({});
        if (n_ == 1) return first_;
        return alg_.mul(first_, last_);
    }

private:
    finite_semigroup alg_;
    int w_;
    int first_ = -1, last_ = -1;
};

// ---------------------------------------------------------------------------

class aba_evaluator final : public language_evaluator {
public:
    aba_evaluator() : language_evaluator(2) {}

    long long state_bits() const override {
        long long v = value_bits(n_);
        return 2 + v + (b_min_ >= 0 ? v : 0) + (b_max_ >= 0 ? v : 0);
    }
    const char* kind() const override { return "aba"; }

protected:
    void do_init() override {
        b_min_ = b_max_ = -1;
        nb_ = 0;
    }
    void do_feed(const stream_event& ev) override {
        if (ev.symbol != 1) return;
        ++nb_;
        if (b_min_ < 0 || ev.position < b_min_) b_min_ = ev.position;
        if (ev.position > b_max_) b_max_ = ev.position;
    }
    bool do_finish() override { return nb_ == 0 || b_max_ - b_min_ == nb_ - 1; }

private:
    long long b_min_ = -1, b_max_ = -1, nb_ = 0;
};

// ---------------------------------------------------------------------------

long long sum1(long long m) { return m * (m + 1) / 2; }
long long sum2(long long m) { return m * (m + 1) * (2 * m + 1) / 6; }

class ababa_evaluator final : public language_evaluator {
public:
    ababa_evaluator() : language_evaluator(2) {}

    long long state_bits() const override {
        long long v = value_bits(n_);
        return 2 + v + value_bits(sum1(n_)) + value_bits(sum2(n_)) +
               (b_min_ >= 0 ? v : 0) + (b_max_ >= 0 ? v : 0);
    }
    const char* kind() const override { return "ababa"; }

protected:
    void do_init() override {
        b_min_ = b_max_ = -1;
        na_ = pa_ = qa_ = 0;
    }
    void do_feed(const stream_event& ev) override {
        if (ev.symbol == 0) {
            ++na_;
            pa_ += ev.position;
            qa_ += ev.position * ev.position;
        } else {
            if (b_min_ < 0 || ev.position < b_min_) b_min_ = ev.position;
            if (ev.position > b_max_) b_max_ = ev.position;
        }
    }
    bool do_finish() override {
        if (na_ == n_) return true;  // no b at all
        // Everything left of b_min and right of b_max is an a; subtract those
        // moments, leaving the a-positions strictly inside the b-span.
        long long na = na_ - (b_min_ - 1) - (n_ - b_max_);
        long long pa = pa_ - sum1(b_min_ - 1) - (sum1(n_) - sum1(b_max_));
        long long qa = qa_ - sum2(b_min_ - 1) - (sum2(n_) - sum2(b_max_));
        if (na == 0) return true;
        // The interior a-positions must be one contiguous interval. Count and
        // sum determine its endpoints; the second moment then matches iff the
        // positions really are that interval.
        long long num = pa - na * (na - 1) / 2;
        if (num % na != 0) return false;
        long long l = num / na, r = l + na - 1;
        if (l < 1 || r > n_) return false;
        long long want = sum2(r) - sum2(l - 1);
        return qa == want;
    }

private:
    long long b_min_ = -1, b_max_ = -1;
    long long na_ = 0, pa_ = 0, qa_ = 0;
};

// ---------------------------------------------------------------------------
// sqrt-space evaluator for a*b*a*b*a*b*. Blocks of ceil(sqrt(n)) positions;
// a block seeing one letter keeps two bits, a block seeing both letters gets
// a cell table. Words in the language have at most five letter changes, and
// each mixed block forces a change, so the seventh mixed block proves
// non-membership and the evaluator drops everything but a flag.

class ababab_evaluator final : public language_evaluator {
public:
    ababab_evaluator() : language_evaluator(2) {}

    long long state_bits() const override {
        if (committed_) return 1;
        return 1 + 2 * blocks_ + full_bits_;
    }
    const char* kind() const override { return "ababab"; }

protected:
    void do_init() override {
        bsize_ = 1;
        while (bsize_ * bsize_ < n_) ++bsize_;
        blocks_ = n_ == 0 ? 0 : (n_ + bsize_ - 1) / bsize_;
        st_.assign(static_cast<std::size_t>(blocks_), 0);
        fulls_.clear();
        full_bits_ = 0;
        committed_ = false;
    }

    long long block_len(long long i) const { return std::min(n_, (i + 1) * bsize_) - i * bsize_; }

    void do_feed(const stream_event& ev) override {
        if (committed_) return;
        long long i = (ev.position - 1) / bsize_;
        long long off = (ev.position - 1) % bsize_;
        std::uint8_t& s = st_[static_cast<std::size_t>(i)];
        if (s == 0) {
            s = static_cast<std::uint8_t>(ev.symbol + 1);
            return;
        }
        if (s == 3) {
            for (auto& fb : fulls_)
                if (fb.idx == i) {
                    fb.cells[static_cast<std::size_t>(off)] = static_cast<signed char>(ev.symbol);
                    full_bits_ += 1;
                    return;
                }
            fail(errc::contract_error, "mixed block without table");
        }
        if (ev.symbol == s - 1) return;
        // The block just turned mixed.
        if (fulls_.size() == 6) {
            committed_ = true;
            st_.clear();
            st_.shrink_to_fit();
            fulls_.clear();
            full_bits_ = 0;
            return;
        }
        full_block fb;
        fb.idx = i;
        fb.first = s - 1;
        fb.cells.assign(static_cast<std::size_t>(block_len(i)), -1);
        fb.cells[static_cast<std::size_t>(off)] = static_cast<signed char>(ev.symbol);
        fulls_.push_back(std::move(fb));
        full_bits_ += 1 + block_len(i) + 1;  // first-seen letter, presence bits, one cell
        s = 3;
    }

    bool do_finish() override {
        if (committed_) return false;
        // Reconstruct the word block by block: pure blocks replay their
        // letter, mixed blocks replay recorded cells with gaps filled by the
        // block's first-seen letter. Count letter changes on the fly.
        int first = -1, last = -1;
        long long changes = 0;
        auto emit = [&](int letter) {
            if (first < 0) first = letter;
            if (last >= 0 && letter != last) ++changes;
            last = letter;
        };
        for (long long i = 0; i < blocks_; ++i) {
            std::uint8_t s = st_[static_cast<std::size_t>(i)];
            if (s == 1 || s == 2) {
                emit(s - 1);  // a run of equal letters adds at most one change
                continue;
            }
            if (s != 3) fail(errc::contract_error, "empty block after a complete stream");
            const full_block* fb = nullptr;
            for (const auto& f : fulls_)
                if (f.idx == i) fb = &f;
            if (!fb) fail(errc::contract_error, "mixed block without table");
            for (signed char c : fb->cells) emit(c >= 0 ? c : fb->first);
        }
        // a*b*a*b*a*b* holds words with at most five changes; six runs must
        // start with a.
        return changes <= 4 || (changes == 5 && first == 0);
    }

private:
    struct full_block {
        long long idx = 0;
        int first = 0;
        std::vector<signed char> cells;
    };

    long long bsize_ = 1, blocks_ = 0;
    std::vector<std::uint8_t> st_;
    std::vector<full_block> fulls_;
    long long full_bits_ = 0;
    bool committed_ = false;
};

// ---------------------------------------------------------------------------
// Interval merging at letter granularity. size_[i] > 0 iff position i is
// covered; a maximal covered run stores its length at both endpoints and its
// product at the left endpoint. Interior cells may hold stale values, but a
// neighbor of an uncovered position is always a true endpoint.

class interval_evaluator final : public element_evaluator {
public:
    explicit interval_evaluator(finite_semigroup s)
        : element_evaluator(s.size()), alg_(std::move(s)), w_(index_bits(alg_.size())) {}

    long long state_bits() const override { return n_ * (value_bits(n_) + w_); }
    const char* kind() const override { return "interval"; }

protected:
    void do_init() override {
        size_.assign(static_cast<std::size_t>(n_) + 1, 0);
        mu_.assign(static_cast<std::size_t>(n_) + 1, -1);
    }

    void do_feed(const stream_event& ev) override {
        long long i = ev.position;
        mu(i) = ev.symbol;
        size(i) = 1;
        if (i < n_ && size(i + 1) > 0) {
            long long l = size(i + 1);
            mu(i) = alg_.mul(mu(i), mu(i + 1));
            size(i) = 1 + l;
            size(i + l) = 1 + l;
        }
        if (i > 1 && size(i - 1) > 0) {
            long long l = size(i - 1), len = size(i), j = i - l;
            mu(j) = alg_.mul(mu(j), mu(i));
            size(j) = l + len;
            size(i + len - 1) = l + len;
        }
    }

    int do_finish() override {
        if (n_ == 0) return alg_.evaluate_word({});
        if (size(1) != n_) fail(errc::contract_error, "incomplete coverage at finish");
        return mu(1);
    }

private:
    long long& size(long long i) { return size_[static_cast<std::size_t>(i)]; }
    int& mu(long long i) { return mu_[static_cast<std::size_t>(i)]; }

    finite_semigroup alg_;
    int w_;
    std::vector<long long> size_;
    std::vector<int> mu_;
};

// ---------------------------------------------------------------------------
// Micro/macro interval merging. Positions pack into blocks of
// b = max(1, ceil(log2 n) - 1); per block a bit vector tracks coverage and
// per-cell element slots hold run products keyed by run left endpoints. A
// completed block promotes its product to a macro layer that repeats the
// interval merge at block granularity. Words shorter than 4 use the plain
// interval evaluator.

class bitpacked_evaluator final : public element_evaluator {
public:
    explicit bitpacked_evaluator(finite_semigroup s)
        : element_evaluator(s.size()), alg_(std::move(s)), w_(index_bits(alg_.size())) {}

    long long state_bits() const override {
        if (inner_) return inner_->state_bits();
        return blocks_ * (bwidth_ + 1) + n_ * w_ + blocks_ * value_bits(blocks_) + blocks_ * w_;
    }
    const char* kind() const override { return "bitpacked"; }

protected:
    void do_init() override {
        inner_.reset();
        if (n_ < 4) {
            inner_ = std::make_unique<interval_evaluator>(alg_);
            inner_->init(n_);
            return;
        }
        bwidth_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned long long>(n_ - 1))) - 1);
        blocks_ = (n_ + bwidth_ - 1) / bwidth_;
        v_.assign(static_cast<std::size_t>(blocks_), 0);
        slots_.assign(static_cast<std::size_t>(n_), -1);
        msize_.assign(static_cast<std::size_t>(blocks_) + 1, 0);
        mmu_.assign(static_cast<std::size_t>(blocks_) + 1, -1);
    }

    void do_feed(const stream_event& ev) override {
        if (inner_) {
            inner_->feed(ev);
            return;
        }
        long long i = (ev.position - 1) / bwidth_;
        int p = static_cast<int>((ev.position - 1) % bwidth_) + 1;
        long long len = std::min(n_, (i + 1) * bwidth_) - i * bwidth_;
        std::uint64_t& v = v_[static_cast<std::size_t>(i)];
        v |= bitpack::one(bwidth_, p);
        slot(i, p) = ev.symbol;
        if (p < len && bitpack::test(v, bwidth_, p + 1))
            slot(i, p) = alg_.mul(slot(i, p), slot(i, p + 1));
        if (p > 1 && bitpack::test(v, bwidth_, p - 1)) {
            int p0 = bitpack::carry_left_endpoint(v, bwidth_, p);
            slot(i, p0) = alg_.mul(slot(i, p0), slot(i, p));
        }
        std::uint64_t complete = ((std::uint64_t{1} << len) - 1) << (bwidth_ - len);
        if (v == complete) macro_insert(i + 1, slot(i, 1));
    }

    int do_finish() override {
        if (inner_) return inner_->finish();
        if (msize(1) != blocks_) fail(errc::contract_error, "incomplete coverage at finish");
        return mmu(1);
    }

private:
    int& slot(long long block, int p) { return slots_[static_cast<std::size_t>(block * bwidth_ + p - 1)]; }
    long long& msize(long long i) { return msize_[static_cast<std::size_t>(i)]; }
    int& mmu(long long i) { return mmu_[static_cast<std::size_t>(i)]; }

    void macro_insert(long long i, int x) {
        mmu(i) = x;
        msize(i) = 1;
        if (i < blocks_ && msize(i + 1) > 0) {
            long long l = msize(i + 1);
            mmu(i) = alg_.mul(mmu(i), mmu(i + 1));
            msize(i) = 1 + l;
            msize(i + l) = 1 + l;
        }
        if (i > 1 && msize(i - 1) > 0) {
            long long l = msize(i - 1), len = msize(i), j = i - l;
            mmu(j) = alg_.mul(mmu(j), mmu(i));
            msize(j) = l + len;
            msize(i + len - 1) = l + len;
        }
    }

    finite_semigroup alg_;
    int w_;
    std::unique_ptr<interval_evaluator> inner_;
    int bwidth_ = 1;
    long long blocks_ = 0;
    std::vector<std::uint64_t> v_;
    std::vector<int> slots_;
    std::vector<long long> msize_;
    std::vector<int> mmu_;
};

// ---------------------------------------------------------------------------

class morphism_evaluator final : public language_evaluator {
public:
    morphism_evaluator(const syntactic_structure& st, std::unique_ptr<element_evaluator> inner)
        : language_evaluator(static_cast<int>(st.letter_to_elem.size())),
          letter_to_elem_(st.letter_to_elem),
          accepting_(st.accepting_elem),
          inner_(std::move(inner)),
          kind_(std::string("morphism:") + inner_->kind()) {
        if (inner_->symbols() != static_cast<int>(accepting_.size()))
            fail(errc::contract_error, "inner evaluator does not match the algebra");
    }

    long long state_bits() const override { return inner_->state_bits(); }
    const char* kind() const override { return kind_.c_str(); }

protected:
    void do_init() override { inner_->init(n_); }
    void do_feed(const stream_event& ev) override {
        inner_->feed({letter_to_elem_[static_cast<std::size_t>(ev.symbol)], ev.position, ev.length});
    }
    bool do_finish() override { return accepting_[static_cast<std::size_t>(inner_->finish())]; }

private:
    std::vector<int> letter_to_elem_;
    std::vector<bool> accepting_;
    std::unique_ptr<element_evaluator> inner_;
    std::string kind_;
};

}  // namespace

std::unique_ptr<language_evaluator> make_dfa_reference_evaluator(dfa d) {
    return std::make_unique<dfa_reference_evaluator>(std::move(d));
}

std::unique_ptr<language_evaluator> make_abstar_evaluator() {
    return std::make_unique<abstar_evaluator>();
}

std::unique_ptr<element_evaluator> make_firstlast_evaluator(const finite_semigroup& s) {
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            for (int z = 0; z < s.size(); ++z)
                if (s.mul(s.mul(x, y), z) != s.mul(x, z))
                    fail(errc::inapplicable, "firstlast evaluator requires xyz = xz");
    return std::make_unique<firstlast_evaluator>(s);
}

std::unique_ptr<language_evaluator> make_aba_evaluator() { return std::make_unique<aba_evaluator>(); }

std::unique_ptr<language_evaluator> make_ababa_evaluator() {
    return std::make_unique<ababa_evaluator>();
}

std::unique_ptr<language_evaluator> make_ababab_evaluator() {
    return std::make_unique<ababab_evaluator>();
}

std::unique_ptr<element_evaluator> make_interval_evaluator(const finite_semigroup& s) {
    return std::make_unique<interval_evaluator>(s);
}

std::unique_ptr<element_evaluator> make_bitpacked_evaluator(const finite_semigroup& s) {
    return std::make_unique<bitpacked_evaluator>(s);
}

std::unique_ptr<language_evaluator> make_morphism_evaluator(const syntactic_structure& st,
                                                            std::unique_ptr<element_evaluator> inner) {
    return std::make_unique<morphism_evaluator>(st, std::move(inner));
}

}  // namespace ooo
