#include "ooeval/eval_generic.hpp"

#include <algorithm>
#include <utility>

namespace ooo {

namespace {

void insert_sorted(std::vector<long long>& v, long long x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void require_equation(const finite_semigroup& s, equation_id id, const char* who) {
    if (check_equation(s, id).has_value())
        fail(errc::inapplicable, std::string(who) + " requires the " + equation_name(id) + " equation to hold");
}

void require_monoid(const finite_semigroup& s, const char* who) {
    if (!s.has_identity()) fail(errc::inapplicable, std::string(who) + " requires a monoid");
}

}  // namespace

threshold_period_counter::threshold_period_counter(long long threshold, long long period)
    : threshold_(threshold), period_(period) {
    if (threshold < 1 || period < 1) fail(errc::contract_error, "counter parameters must be positive");
}

void threshold_period_counter::add() {
    if (head_ < threshold_) ++head_;
    residue_ = (residue_ + 1) % period_;
}

long long threshold_period_counter::canonical_count() const {
    if (head_ < threshold_) return head_;
    return threshold_ + (((residue_ - threshold_) % period_) + period_) % period_;
}

long long threshold_period_counter::bits() const {
    return value_bits(threshold_) + index_bits(period_);
}

namespace {

// ---------------------------------------------------------------------------

class reference_evaluator final : public element_evaluator {
public:
    explicit reference_evaluator(finite_semigroup s)
        : element_evaluator(s.size()), alg_(std::move(s)), w_(index_bits(alg_.size())) {}

    long long state_bits() const override { return n_ + feeds() * w_; }
    const char* kind() const override { return "reference"; }

protected:
    void do_init() override { slots_.assign(static_cast<std::size_t>(n_), -1); }
    void do_feed(const stream_event& ev) override { slots_[static_cast<std::size_t>(ev.position - 1)] = ev.symbol; }
    int do_finish() override { return alg_.evaluate_word(slots_); }

private:
    finite_semigroup alg_;
    int w_;
    std::vector<int> slots_;
};

// ---------------------------------------------------------------------------

class commutative_evaluator final : public element_evaluator {
public:
    explicit commutative_evaluator(finite_semigroup s)
        : element_evaluator(s.size()), alg_(std::move(s)), w_(index_bits(alg_.size())) {}

    long long state_bits() const override { return 1 + w_; }
    const char* kind() const override { return "commutative"; }

protected:
    void do_init() override { acc_ = -1; }
    void do_feed(const stream_event& ev) override {
        acc_ = acc_ < 0 ? ev.symbol : alg_.mul(acc_, ev.symbol);
    }
    int do_finish() override {
        if (acc_ < 0) return alg_.evaluate_word({});
        return acc_;
    }

private:
    finite_semigroup alg_;
    int w_;
    int acc_ = -1;
};

// ---------------------------------------------------------------------------
// Two sorted position lists per element: the k smallest and k largest
// occurrence positions seen so far, k = |M|. entries_ tracks the total stored
// positions so state_bits stays O(1) per feed.

class fl_evaluator : public element_evaluator {
public:
    explicit fl_evaluator(finite_semigroup m)
        : element_evaluator(m.size()),
          alg_(std::move(m)),
          k_(alg_.size()),
          w_pos_(0),
          len_bits_(value_bits(k_)) {}

    long long state_bits() const override {
        return 2LL * alg_.size() * len_bits_ + entries_ * w_pos_;
    }
    const char* kind() const override { return "first-last"; }

protected:
    void do_init() override {
        first_.assign(static_cast<std::size_t>(alg_.size()), {});
        last_.assign(static_cast<std::size_t>(alg_.size()), {});
        entries_ = 0;
        w_pos_ = value_bits(n_);
    }

    void do_feed(const stream_event& ev) override {
        auto& f = first_[static_cast<std::size_t>(ev.symbol)];
        if (static_cast<int>(f.size()) < k_) {
            insert_sorted(f, ev.position);
            ++entries_;
        } else if (ev.position < f.back()) {
            f.pop_back();
            insert_sorted(f, ev.position);
        }
        auto& l = last_[static_cast<std::size_t>(ev.symbol)];
        if (static_cast<int>(l.size()) < k_) {
            insert_sorted(l, ev.position);
            ++entries_;
        } else if (ev.position > l.front()) {
            l.erase(l.begin());
            insert_sorted(l, ev.position);
        }
    }

    int do_finish() override { return fold(nullptr); }

    // Multiplies the retained subword in position order. When extra is given,
    // extra[e] >= 1 means that many surplus copies of e are inserted right
    // after e's k-th retained first occurrence.
    int fold(const std::vector<long long>* extra) const {
        std::vector<std::pair<long long, int>> seq;
        for (int e = 0; e < alg_.size(); ++e) {
            std::vector<long long> u = first_[static_cast<std::size_t>(e)];
            u.insert(u.end(), last_[static_cast<std::size_t>(e)].begin(),
                     last_[static_cast<std::size_t>(e)].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            for (long long p : u) seq.emplace_back(p, e);
        }
        std::sort(seq.begin(), seq.end());
        int acc = *alg_.identity();
        for (const auto& [pos, e] : seq) {
            acc = alg_.mul(acc, e);
            const auto& f = first_[static_cast<std::size_t>(e)];
            if (extra && (*extra)[static_cast<std::size_t>(e)] > 0 &&
                static_cast<int>(f.size()) == k_ && pos == f.back())
                acc = alg_.mul(acc, alg_.power(e, (*extra)[static_cast<std::size_t>(e)]));
        }
        return acc;
    }

    // Distinct retained positions of element e.
    long long retained(int e) const {
        const auto& f = first_[static_cast<std::size_t>(e)];
        const auto& l = last_[static_cast<std::size_t>(e)];
        std::vector<long long> u = f;
        u.insert(u.end(), l.begin(), l.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        return static_cast<long long>(u.size());
    }

    finite_semigroup alg_;
    int k_;
    int w_pos_;
    int len_bits_;
    long long entries_ = 0;
    std::vector<std::vector<long long>> first_, last_;
};

class flcom_evaluator final : public fl_evaluator {
public:
    explicit flcom_evaluator(finite_semigroup m) : fl_evaluator(std::move(m)) {
        threshold_ = alg_.idempotent_power() + 2LL * k_ + 2;
        period_ = alg_.idempotent_power();
    }

    long long state_bits() const override {
        long long c = counters_.empty() ? threshold_period_counter(threshold_, period_).bits()
                                        : counters_.front().bits();
        return fl_evaluator::state_bits() + alg_.size() * c;
    }
    const char* kind() const override { return "first-last-count"; }

protected:
    void do_init() override {
        fl_evaluator::do_init();
        counters_.assign(static_cast<std::size_t>(alg_.size()),
                         threshold_period_counter(threshold_, period_));
    }

    void do_feed(const stream_event& ev) override {
        fl_evaluator::do_feed(ev);
        counters_[static_cast<std::size_t>(ev.symbol)].add();
    }

    int do_finish() override {
        std::vector<long long> extra(static_cast<std::size_t>(alg_.size()), 0);
        for (int e = 0; e < alg_.size(); ++e)
            extra[static_cast<std::size_t>(e)] =
                counters_[static_cast<std::size_t>(e)].canonical_count() - retained(e);
        return fold(&extra);
    }

private:
    long long threshold_ = 1, period_ = 1;
    std::vector<threshold_period_counter> counters_;
};

// ---------------------------------------------------------------------------
// Verbatim window of the first k+1 and last k+1 positions, k = |S|. Slot
// layout: ranks 0..lo_hi-1 cover positions 1..lo_hi, the rest cover
// suf_start..n. For n <= 2k+2 every position is retained.

class li_evaluator : public element_evaluator {
public:
    explicit li_evaluator(finite_semigroup s)
        : element_evaluator(s.size()), alg_(std::move(s)), k_(alg_.size()), w_(index_bits(alg_.size())) {}

    long long state_bits() const override {
        return static_cast<long long>(slots_.size()) + filled_ * w_;
    }
    const char* kind() const override { return "local"; }

protected:
    void do_init() override {
        lo_hi_ = std::min<long long>(n_, k_ + 1);
        suf_start_ = std::max<long long>(lo_hi_ + 1, n_ - k_);
        long long tail = n_ >= suf_start_ ? n_ - suf_start_ + 1 : 0;
        slots_.assign(static_cast<std::size_t>(lo_hi_ + tail), -1);
        filled_ = 0;
    }

    // -1 when the position is interior (not retained).
    long long rank(long long pos) const {
        if (pos <= lo_hi_) return pos - 1;
        if (pos >= suf_start_) return lo_hi_ + (pos - suf_start_);
        return -1;
    }

    void do_feed(const stream_event& ev) override {
        long long r = rank(ev.position);
        if (r < 0) return;
        slots_[static_cast<std::size_t>(r)] = ev.symbol;
        ++filled_;
    }

    int do_finish() override {
        if (n_ == 0) return alg_.evaluate_word({});
        int acc = -1;
        for (int s : slots_) acc = acc < 0 ? s : alg_.mul(acc, s);
        return acc;
    }

    finite_semigroup alg_;
    int k_;
    int w_;
    long long lo_hi_ = 0, suf_start_ = 0;
    long long filled_ = 0;
    std::vector<int> slots_;
};

class licom_evaluator final : public li_evaluator {
public:
    explicit licom_evaluator(finite_semigroup s) : li_evaluator(std::move(s)) {
        threshold_ = alg_.idempotent_power() + 2LL * k_ + 2;
        period_ = alg_.idempotent_power();
    }

    long long state_bits() const override {
        long long c = counters_.empty() ? threshold_period_counter(threshold_, period_).bits()
                                        : counters_.front().bits();
        return li_evaluator::state_bits() + alg_.size() * c;
    }
    const char* kind() const override { return "local-count"; }

protected:
    void do_init() override {
        li_evaluator::do_init();
        counters_.assign(static_cast<std::size_t>(alg_.size()),
                         threshold_period_counter(threshold_, period_));
    }

    void do_feed(const stream_event& ev) override {
        if (rank(ev.position) < 0) {
            counters_[static_cast<std::size_t>(ev.symbol)].add();
            return;
        }
        li_evaluator::do_feed(ev);
    }

    int do_finish() override {
        if (n_ == 0) return alg_.evaluate_word({});
        int acc = -1;
        auto push = [&](int x) { acc = acc < 0 ? x : alg_.mul(acc, x); };
        for (long long r = 0; r < lo_hi_; ++r) push(slots_[static_cast<std::size_t>(r)]);
        // Interior occurrences are replayed as element powers in declaration
        // order; the licom equation makes any interior order equivalent.
        for (int e = 0; e < alg_.size(); ++e) {
            long long c = counters_[static_cast<std::size_t>(e)].canonical_count();
            if (c >= 1) push(alg_.power(e, c));
        }
        for (std::size_t r = static_cast<std::size_t>(lo_hi_); r < slots_.size(); ++r) push(slots_[r]);
        return acc;
    }

private:
    long long threshold_ = 1, period_ = 1;
    std::vector<threshold_period_counter> counters_;
};

// ---------------------------------------------------------------------------

class product_evaluator final : public element_evaluator {
public:
    product_evaluator(std::unique_ptr<element_evaluator> left, std::unique_ptr<element_evaluator> right,
                      int right_size)
        : element_evaluator(left->symbols() * right_size),
          left_(std::move(left)),
          right_(std::move(right)),
          right_size_(right_size) {
        if (right_->symbols() != right_size_)
            fail(errc::contract_error, "right factor size mismatch");
    }

    long long state_bits() const override { return left_->state_bits() + right_->state_bits(); }
    const char* kind() const override { return "product"; }

protected:
    void do_init() override {
        left_->init(n_);
        right_->init(n_);
    }
    void do_feed(const stream_event& ev) override {
        left_->feed({ev.symbol / right_size_, ev.position, ev.length});
        right_->feed({ev.symbol % right_size_, ev.position, ev.length});
    }
    int do_finish() override { return left_->finish() * right_size_ + right_->finish(); }

private:
    std::unique_ptr<element_evaluator> left_, right_;
    int right_size_;
};

class sub_evaluator final : public element_evaluator {
public:
    sub_evaluator(std::unique_ptr<element_evaluator> ambient, std::vector<int> embed)
        : element_evaluator(static_cast<int>(embed.size())),
          ambient_(std::move(ambient)),
          embed_(std::move(embed)),
          back_(static_cast<std::size_t>(ambient_->symbols()), -1) {
        for (std::size_t i = 0; i < embed_.size(); ++i) {
            if (embed_[i] < 0 || embed_[i] >= ambient_->symbols())
                fail(errc::contract_error, "embedding index out of range");
            back_[static_cast<std::size_t>(embed_[i])] = static_cast<int>(i);
        }
    }

    long long state_bits() const override { return ambient_->state_bits(); }
    const char* kind() const override { return "sub"; }

protected:
    void do_init() override { ambient_->init(n_); }
    void do_feed(const stream_event& ev) override {
        ambient_->feed({embed_[static_cast<std::size_t>(ev.symbol)], ev.position, ev.length});
    }
    int do_finish() override {
        int a = ambient_->finish();
        int r = back_[static_cast<std::size_t>(a)];
        if (r < 0) fail(errc::contract_error, "product escaped the subalgebra");
        return r;
    }

private:
    std::unique_ptr<element_evaluator> ambient_;
    std::vector<int> embed_;
    std::vector<int> back_;
};

class quotient_evaluator final : public element_evaluator {
public:
    quotient_evaluator(std::unique_ptr<element_evaluator> source, std::vector<int> class_of,
                       std::vector<int> representative)
        : element_evaluator(static_cast<int>(representative.size())),
          source_(std::move(source)),
          class_of_(std::move(class_of)),
          rep_(std::move(representative)) {
        if (static_cast<int>(class_of_.size()) != source_->symbols())
            fail(errc::contract_error, "class map size mismatch");
        for (int r : rep_)
            if (r < 0 || r >= source_->symbols())
                fail(errc::contract_error, "representative out of range");
    }

    long long state_bits() const override { return source_->state_bits(); }
    const char* kind() const override { return "quotient"; }

protected:
    void do_init() override { source_->init(n_); }
    void do_feed(const stream_event& ev) override {
        source_->feed({rep_[static_cast<std::size_t>(ev.symbol)], ev.position, ev.length});
    }
    int do_finish() override { return class_of_[static_cast<std::size_t>(source_->finish())]; }

private:
    std::unique_ptr<element_evaluator> source_;
    std::vector<int> class_of_;
    std::vector<int> rep_;
};

}  // namespace

std::unique_ptr<element_evaluator> make_reference_evaluator(const finite_semigroup& s) {
    return std::make_unique<reference_evaluator>(s);
}

std::unique_ptr<element_evaluator> make_commutative_evaluator(const finite_semigroup& s) {
    require_equation(s, equation_id::com, "commutative evaluator");
    return std::make_unique<commutative_evaluator>(s);
}

std::unique_ptr<element_evaluator> make_fl_evaluator(const finite_semigroup& m) {
    require_monoid(m, "first-last evaluator");
    require_equation(m, equation_id::fl, "first-last evaluator");
    return std::make_unique<fl_evaluator>(m);
}

std::unique_ptr<element_evaluator> make_flcom_evaluator(const finite_semigroup& m) {
    require_monoid(m, "first-last-count evaluator");
    require_equation(m, equation_id::flcom, "first-last-count evaluator");
    return std::make_unique<flcom_evaluator>(m);
}

std::unique_ptr<element_evaluator> make_li_evaluator(const finite_semigroup& s) {
    require_equation(s, equation_id::li, "local evaluator");
    return std::make_unique<li_evaluator>(s);
}

std::unique_ptr<element_evaluator> make_licom_evaluator(const finite_semigroup& s) {
    require_equation(s, equation_id::licom, "local-count evaluator");
    return std::make_unique<licom_evaluator>(s);
}

std::unique_ptr<element_evaluator> make_product_evaluator(std::unique_ptr<element_evaluator> left,
                                                          std::unique_ptr<element_evaluator> right,
                                                          int right_size) {
    return std::make_unique<product_evaluator>(std::move(left), std::move(right), right_size);
}

std::unique_ptr<element_evaluator> make_sub_evaluator(std::unique_ptr<element_evaluator> ambient,
                                                      std::vector<int> embed) {
    return std::make_unique<sub_evaluator>(std::move(ambient), std::move(embed));
}

std::unique_ptr<element_evaluator> make_quotient_evaluator(std::unique_ptr<element_evaluator> source,
                                                           std::vector<int> class_of,
                                                           std::vector<int> representative) {
    return std::make_unique<quotient_evaluator>(std::move(source), std::move(class_of),
                                                std::move(representative));
}

}  // namespace ooo
