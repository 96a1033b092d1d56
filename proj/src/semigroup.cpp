#include "ooeval/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ooo {

finite_semigroup::finite_semigroup(std::vector<std::string> names, std::vector<int> table,
                                   std::optional<int> declared_identity)
    : k_(static_cast<int>(names.size())), names_(std::move(names)), table_(std::move(table)) {
    validate();
    // Detect the neutral element; at most one can exist.
    for (int e = 0; e < k_; ++e) {
        bool neutral = true;
        for (int x = 0; x < k_ && neutral; ++x)
            neutral = mul(e, x) == x && mul(x, e) == x;
        if (neutral) {
            identity_ = e;
            break;
        }
    }
    if (declared_identity) {
        if (!identity_ || *identity_ != *declared_identity)
            fail(errc::parse_error, "declared identity '" + names_[static_cast<std::size_t>(*declared_identity)] +
                                        "' is not neutral for the table");
    }
}

void finite_semigroup::validate() const {
    if (k_ == 0) fail(errc::parse_error, "semigroup needs at least one element");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || n.find_first_of(" \t\r\n") != std::string::npos)
            fail(errc::parse_error, "bad element name '" + n + "'");
        if (!seen.insert(n).second) fail(errc::parse_error, "duplicate element name '" + n + "'");
    }
    if (table_.size() != static_cast<std::size_t>(k_) * k_)
        fail(errc::parse_error, "table size mismatch");
    for (int v : table_)
        if (v < 0 || v >= k_) fail(errc::parse_error, "table entry out of range");
    for (int a = 0; a < k_; ++a)
        for (int b = 0; b < k_; ++b)
            for (int c = 0; c < k_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    fail(errc::parse_error, "table is not associative at (" + names_[static_cast<std::size_t>(a)] +
                                                "," + names_[static_cast<std::size_t>(b)] + "," +
                                                names_[static_cast<std::size_t>(c)] + ")");
}

int finite_semigroup::index_of(const std::string& name) const {
    for (int i = 0; i < k_; ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

int finite_semigroup::evaluate_word(std::span<const int> w) const {
    if (w.empty()) {
        if (!identity_) fail(errc::contract_error, "empty word over identity-free semigroup");
        return *identity_;
    }
    int acc = w[0];
    for (std::size_t i = 1; i < w.size(); ++i) acc = mul(acc, w[i]);
    return acc;
}

int evaluate_word(const finite_semigroup& s, std::span<const int> w) { return s.evaluate_word(w); }

int finite_semigroup::power(int x, long long e) const {
    if (e < 1) fail(errc::contract_error, "power expects a positive exponent");
    int acc = -1;
    int base = x;
    while (e > 0) {
        if (e & 1) acc = acc < 0 ? base : mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

std::pair<long long, long long> finite_semigroup::index_period(int x) const {
    // Walk x, x^2, ... until the first repeat; pigeonhole bounds the walk by k_.
    std::vector<int> order;
    std::vector<long long> seen_at(static_cast<std::size_t>(k_), -1);
    int cur = x;
    long long step = 1;
    while (seen_at[static_cast<std::size_t>(cur)] < 0) {
        seen_at[static_cast<std::size_t>(cur)] = step;
        order.push_back(cur);
        cur = mul(cur, x);
        ++step;
    }
    long long first = seen_at[static_cast<std::size_t>(cur)];
    return {first, step - first};
}

void finite_semigroup::compute_omega() const {
    long long max_index = 1;
    long long period_lcm = 1;
    for (int x = 0; x < k_; ++x) {
        auto [idx, per] = index_period(x);
        max_index = std::max(max_index, idx);
        period_lcm = std::lcm(period_lcm, per);
        if (period_lcm > (1LL << 50)) fail(errc::cap_exceeded, "idempotent power exceeds practical bounds");
    }
    long long omega = period_lcm;
    while (omega < max_index) omega += period_lcm;
    omega_ = omega;
    omega_pow_.resize(static_cast<std::size_t>(k_));
    for (int x = 0; x < k_; ++x) omega_pow_[static_cast<std::size_t>(x)] = power(x, omega_);
}

long long finite_semigroup::idempotent_power() const {
    if (omega_ < 0) compute_omega();
    return omega_;
}

int finite_semigroup::omega_power(int x) const {
    if (omega_ < 0) compute_omega();
    return omega_pow_[static_cast<std::size_t>(x)];
}

std::vector<std::size_t> fl_subword_positions(std::span<const int> u, int elem_count, int k) {
    std::vector<std::vector<std::size_t>> occ(static_cast<std::size_t>(elem_count));
    for (std::size_t i = 0; i < u.size(); ++i) occ[static_cast<std::size_t>(u[i])].push_back(i);
    std::vector<std::size_t> keep;
    for (const auto& positions : occ) {
        std::size_t m = positions.size();
        std::size_t kk = static_cast<std::size_t>(k);
        for (std::size_t i = 0; i < m; ++i)
            if (i < kk || i + kk >= m) keep.push_back(positions[i]);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

word fl_subword(std::span<const int> u, int elem_count, int k) {
    word out;
    for (std::size_t p : fl_subword_positions(u, elem_count, k)) out.push_back(u[p]);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

equation_def make_eq(equation_id id, std::vector<std::string> vars, std::vector<eq_factor> lhs,
                     std::vector<eq_factor> rhs) {
    return equation_def{id, std::move(vars), std::move(lhs), std::move(rhs)};
}

eq_factor f(std::vector<int> vars) { return eq_factor{std::move(vars), false}; }
eq_factor fw(std::vector<int> vars) { return eq_factor{std::move(vars), true}; }

const std::vector<equation_def>& equation_table() {
    // Variable tuples are listed in scan order; factors read left to right.
    static const std::vector<equation_def> defs = {
        // xy = yx
        make_eq(equation_id::com, {"x", "y"}, {f({0}), f({1})}, {f({1}), f({0})}),
        // (xy)^w s t (xz)^w = (xy)^w s x t (xz)^w
        make_eq(equation_id::fl, {"x", "y", "z", "s", "t"},
                {fw({0, 1}), f({3}), f({4}), fw({0, 2})},
                {fw({0, 1}), f({3}), f({0}), f({4}), fw({0, 2})}),
        // (xa)^w s x t u (xb)^w = (xa)^w s t x u (xb)^w
        make_eq(equation_id::flcom, {"x", "a", "b", "s", "t", "u"},
                {fw({0, 1}), f({3}), f({0}), f({4}), f({5}), fw({0, 2})},
                {fw({0, 1}), f({3}), f({4}), f({0}), f({5}), fw({0, 2})}),
        // x^w y x^w = x^w
        make_eq(equation_id::li, {"x", "y"}, {fw({0}), f({1}), fw({0})}, {fw({0})}),
        // s^w x y t^w = s^w y x t^w
        make_eq(equation_id::licom, {"s", "x", "y", "t"},
                {fw({0}), f({1}), f({2}), fw({3})},
                {fw({0}), f({2}), f({1}), fw({3})}),
        // s^w x s^w t^w = s^w x t^w
        make_eq(equation_id::licom1, {"s", "x", "t"},
                {fw({0}), f({1}), fw({0}), fw({2})},
                {fw({0}), f({1}), fw({2})}),
        // s^w x s^w y s^w = s^w x y s^w
        make_eq(equation_id::licom2, {"s", "x", "y"},
                {fw({0}), f({1}), fw({0}), f({2}), fw({0})},
                {fw({0}), f({1}), f({2}), fw({0})}),
        // s^w x s^w y s^w = s^w y s^w x s^w
        make_eq(equation_id::local_com, {"s", "x", "y"},
                {fw({0}), f({1}), fw({0}), f({2}), fw({0})},
                {fw({0}), f({2}), fw({0}), f({1}), fw({0})}),
    };
    return defs;
}

}  // namespace

const equation_def& equation(equation_id id) {
    for (const auto& def : equation_table())
        if (def.id == id) return def;
    fail(errc::contract_error, "unknown equation id");
}

const char* equation_name(equation_id id) {
    switch (id) {
        case equation_id::com: return "COM";
        case equation_id::fl: return "FL";
        case equation_id::flcom: return "FLCOM";
        case equation_id::li: return "LI";
        case equation_id::licom: return "LICOM";
        case equation_id::licom1: return "LICOM1";
        case equation_id::licom2: return "LICOM2";
        case equation_id::local_com: return "LOCAL_COM";
    }
    return "?";
}

std::optional<equation_id> equation_from_name(const std::string& name) {
    for (const auto& def : equation_table())
        if (name == equation_name(def.id)) return def.id;
    return std::nullopt;
}

int evaluate_equation_side(const finite_semigroup& s, const std::vector<eq_factor>& side,
                           std::span<const int> assignment) {
    int acc = -1;
    for (const auto& factor : side) {
        int v = assignment[static_cast<std::size_t>(factor.vars[0])];
        for (std::size_t i = 1; i < factor.vars.size(); ++i)
            v = s.mul(v, assignment[static_cast<std::size_t>(factor.vars[i])]);
        if (factor.omega) v = s.omega_power(v);
        acc = acc < 0 ? v : s.mul(acc, v);
    }
    return acc;
}

std::optional<equation_witness> check_equation(const finite_semigroup& s, equation_id id, long long cap) {
    const equation_def& def = equation(id);
    const std::size_t v = def.var_names.size();
    const long long k = s.size();

    long long assignments = 1;
    for (std::size_t i = 0; i < v; ++i) {
        if (assignments > cap / k + 1) fail(errc::cap_exceeded, std::string("equation ") + equation_name(id) +
                                                                    ": assignment count exceeds cap");
        assignments *= k;
    }
    if (assignments > cap)
        fail(errc::cap_exceeded, std::string("equation ") + equation_name(id) + ": " +
                                     std::to_string(assignments) + " assignments exceed cap " + std::to_string(cap));

    s.omega_power(0);  // force the omega table once, outside the scan

    std::vector<int> a(v, 0);
    for (;;) {
        int lhs = evaluate_equation_side(s, def.lhs, a);
        int rhs = evaluate_equation_side(s, def.rhs, a);
        if (lhs != rhs) return equation_witness{id, a, lhs, rhs};
        // Odometer with the first variable most significant: lexicographic order.
        std::size_t pos = v;
        while (pos > 0) {
            --pos;
            if (++a[pos] < k) break;
            a[pos] = 0;
            if (pos == 0) return std::nullopt;
        }
    }
}

// ---------------------------------------------------------------------------

const char* regime_name(regime r) {
    switch (r) {
        case regime::constant: return "Constant";
        case regime::logarithmic: return "Logarithmic";
        case regime::linear: return "Linear";
        case regime::at_least_logarithmic: return "AtLeastLogarithmic";
    }
    return "?";
}

regime_report classify_monoid(const finite_semigroup& m, long long cap) {
    if (!m.has_identity()) fail(errc::inapplicable, "monoid classification requires an identity element");
    auto com = check_equation(m, equation_id::com, cap);
    if (!com) return {regime::constant, std::nullopt};
    auto flcom = check_equation(m, equation_id::flcom, cap);
    if (!flcom) return {regime::logarithmic, com};
    return {regime::linear, flcom};
}

regime_report classify_semigroup(const finite_semigroup& s, long long cap) {
    auto licom = check_equation(s, equation_id::licom, cap);
    if (!licom) return {regime::constant, std::nullopt};
    // Diagnostic order mirrors the three-way case split behind the lower bound.
    for (equation_id id : {equation_id::licom1, equation_id::licom2, equation_id::local_com}) {
        auto w = check_equation(s, id, cap);
        if (w) return {regime::at_least_logarithmic, w};
    }
    fail(errc::contract_error, "licom violated but all three diagnostic equations hold");
}

// ---------------------------------------------------------------------------

finite_semigroup direct_product(const finite_semigroup& a, const finite_semigroup& b) {
    const int ka = a.size(), kb = b.size();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(ka) * kb);
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < kb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
    std::vector<int> table(static_cast<std::size_t>(ka) * kb * ka * kb);
    const int k = ka * kb;
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < kb; ++j)
            for (int p = 0; p < ka; ++p)
                for (int q = 0; q < kb; ++q)
                    table[static_cast<std::size_t>(i * kb + j) * k + (p * kb + q)] =
                        a.mul(i, p) * kb + b.mul(j, q);
    return finite_semigroup(std::move(names), std::move(table));
}

finite_semigroup subsemigroup(const finite_semigroup& s, const std::vector<int>& elements) {
    const int k = static_cast<int>(elements.size());
    std::vector<int> back(static_cast<std::size_t>(s.size()), -1);
    for (int i = 0; i < k; ++i) back[static_cast<std::size_t>(elements[static_cast<std::size_t>(i)])] = i;
    std::vector<std::string> names;
    for (int e : elements) names.push_back(s.name(e));
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int prod = s.mul(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]);
            int idx = back[static_cast<std::size_t>(prod)];
            if (idx < 0)
                fail(errc::contract_error, "subset is not closed: " + s.name(elements[static_cast<std::size_t>(i)]) +
                                               " * " + s.name(elements[static_cast<std::size_t>(j)]) + " = " +
                                               s.name(prod));
            table[static_cast<std::size_t>(i) * k + j] = idx;
        }
    return finite_semigroup(std::move(names), std::move(table));
}

finite_semigroup quotient(const finite_semigroup& s, const std::vector<int>& class_of) {
    if (class_of.size() != static_cast<std::size_t>(s.size()))
        fail(errc::contract_error, "class map size mismatch");
    int c = 0;
    for (int v : class_of) c = std::max(c, v + 1);
    std::vector<int> rep(static_cast<std::size_t>(c), -1);
    for (int x = 0; x < s.size(); ++x) {
        int& r = rep[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])];
        if (r < 0) r = x;
    }
    for (int i = 0; i < c; ++i)
        if (rep[static_cast<std::size_t>(i)] < 0) fail(errc::contract_error, "empty congruence class");
    // Congruence: replacing either operand by a class-mate cannot move the product's class.
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            int rx = rep[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])];
            int ry = rep[static_cast<std::size_t>(class_of[static_cast<std::size_t>(y)])];
            if (class_of[static_cast<std::size_t>(s.mul(x, y))] !=
                class_of[static_cast<std::size_t>(s.mul(rx, y))] ||
                class_of[static_cast<std::size_t>(s.mul(x, y))] !=
                class_of[static_cast<std::size_t>(s.mul(x, ry))])
                fail(errc::contract_error, "partition is not a congruence");
        }
    std::vector<std::string> names;
    for (int i = 0; i < c; ++i) names.push_back("[" + s.name(rep[static_cast<std::size_t>(i)]) + "]");
    std::vector<int> table(static_cast<std::size_t>(c) * c);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            table[static_cast<std::size_t>(i) * c + j] = class_of[static_cast<std::size_t>(
                s.mul(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]))];
    return finite_semigroup(std::move(names), std::move(table));
}

// ---------------------------------------------------------------------------

finite_semigroup parse_semigroup_table(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_content_line = [&](bool required) -> std::optional<std::string> {
        while (std::getline(in, line)) {
            ++lineno;
            std::string trimmed = line;
            if (auto pos = trimmed.find('#'); pos != std::string::npos) trimmed.resize(pos);
            if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
            return trimmed;
        }
        if (required) fail(errc::parse_error, origin + ": unexpected end of file");
        return std::nullopt;
    };
    auto tokens_of = [](const std::string& l) {
        std::istringstream ls(l);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        return toks;
    };

    auto header = next_content_line(true);
    auto head_toks = tokens_of(*header);
    if (head_toks.empty() || head_toks[0] != "elements:")
        fail(errc::parse_error, origin + ":" + std::to_string(lineno) + ": expected 'elements:' header");
    std::vector<std::string> names(head_toks.begin() + 1, head_toks.end());
    if (names.empty()) fail(errc::parse_error, origin + ": no elements declared");
    const int k = static_cast<int>(names.size());

    std::unordered_map<std::string, int> index;
    for (int i = 0; i < k; ++i) index[names[static_cast<std::size_t>(i)]] = i;
    if (static_cast<int>(index.size()) != k) fail(errc::parse_error, origin + ": duplicate element names");

    std::optional<int> declared_identity;
    auto first_row = next_content_line(true);
    auto row_toks = tokens_of(*first_row);
    if (!row_toks.empty() && row_toks[0] == "identity:") {
        if (row_toks.size() != 2) fail(errc::parse_error, origin + ": identity line expects one name");
        auto it = index.find(row_toks[1]);
        if (it == index.end()) fail(errc::parse_error, origin + ": unknown identity '" + row_toks[1] + "'");
        declared_identity = it->second;
        first_row = next_content_line(true);
        row_toks = tokens_of(*first_row);
    }

    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(k) * k);
    for (int r = 0; r < k; ++r) {
        if (r > 0) {
            first_row = next_content_line(true);
            row_toks = tokens_of(*first_row);
        }
        if (static_cast<int>(row_toks.size()) != k)
            fail(errc::parse_error, origin + ":" + std::to_string(lineno) + ": row has " +
                                        std::to_string(row_toks.size()) + " entries, expected " + std::to_string(k));
        for (const auto& t : row_toks) {
            auto it = index.find(t);
            if (it == index.end())
                fail(errc::parse_error, origin + ":" + std::to_string(lineno) + ": unknown element '" + t + "'");
            table.push_back(it->second);
        }
    }
    if (next_content_line(false))
        fail(errc::parse_error, origin + ":" + std::to_string(lineno) + ": trailing content after table");
    return finite_semigroup(std::move(names), std::move(table), declared_identity);
}

finite_semigroup load_semigroup_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open semigroup file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_semigroup_table(buf.str(), path);
}

std::string format_semigroup_table(const finite_semigroup& s) {
    std::ostringstream out;
    out << "elements:";
    for (int i = 0; i < s.size(); ++i) out << ' ' << s.name(i);
    out << '\n';
    if (s.identity()) out << "identity: " << s.name(*s.identity()) << '\n';
    for (int i = 0; i < s.size(); ++i) {
        for (int j = 0; j < s.size(); ++j) out << (j ? " " : "") << s.name(s.mul(i, j));
        out << '\n';
    }
    return out.str();
}

}  // namespace ooo
