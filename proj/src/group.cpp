#include "gog/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gog {

namespace word {

Word reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (long long l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word mul(const Word& x, const Word& y) {
    std::size_t k = 0;
    while (k < x.size() && k < y.size() && x[x.size() - 1 - k] == -y[k]) ++k;
    Word out(x.begin(), x.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(k), y.end());
    return out;
}

Word inv(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l = -l;
    return out;
}

Word pow(const Word& w, long long n) {
    Word base = n < 0 ? inv(w) : w;
    if (n < 0) n = -n;
    auto [s, core] = cyclic_split(base);
    Word body;
    body.reserve(core.size() * static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) body.insert(body.end(), core.begin(), core.end());
    if (n == 0) return {};
    return mul(mul(s, body), inv(s));
}

std::pair<Word, Word> cyclic_split(const Word& w) {
    std::size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i] == -w[j - 1]) {
        ++i;
        --j;
    }
    return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)),
            Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j))};
}

}  // namespace word

GroupPtr Group::free(std::vector<std::string> names) {
    auto g = std::make_shared<Group>();
    g->kind_ = Kind::Free;
    g->rank_ = static_cast<int>(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& n = names[i];
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw std::invalid_argument("bad generator name '" + n + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names[j] == n) throw std::invalid_argument("duplicate generator name '" + n + "'");
    }
    g->names_ = std::move(names);
    for (int i = 0; i < g->rank_; ++i) g->gens_.push_back(Elem{{i + 1}});
    return g;
}

GroupPtr Group::abelian(int rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    auto g = std::make_shared<Group>();
    g->kind_ = Kind::Abelian;
    g->rank_ = rank;
    for (int i = 0; i < rank; ++i) {
        Elem e{std::vector<long long>(static_cast<std::size_t>(rank), 0)};
        e.v[static_cast<std::size_t>(i)] = 1;
        g->gens_.push_back(e);
    }
    return g;
}

GroupPtr Group::finite(const std::vector<std::vector<int>>& table, std::vector<int> gens) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("multiplication table entry out of range");
    }
    FiniteTable t;
    t.order = n;
    t.mul.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.mul[static_cast<std::size_t>(i * n + j)] = table[i][j];
    auto M = [&](int i, int j) { return t.mul[static_cast<std::size_t>(i * n + j)]; };
    t.identity = -1;
    for (int e = 0; e < n && t.identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = M(e, x) == x && M(x, e) == x;
        if (ok) t.identity = e;
    }
    if (t.identity < 0) throw std::invalid_argument("multiplication table has no identity");
    t.inv.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (M(x, y) == t.identity && M(y, x) == t.identity) t.inv[static_cast<std::size_t>(x)] = y;
        if (t.inv[static_cast<std::size_t>(x)] < 0) throw std::invalid_argument("element without inverse in table");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (M(M(x, y), z) != M(x, M(y, z))) throw std::invalid_argument("multiplication table is not associative");

    auto g = std::make_shared<Group>();
    g->kind_ = Kind::Finite;
    g->table_ = std::move(t);
    if (gens.empty()) {
        // Greedy: repeatedly add the smallest element outside the current span.
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        in[static_cast<std::size_t>(g->table_.identity)] = 1;
        for (int x = 0; x < n; ++x) {
            if (in[static_cast<std::size_t>(x)]) continue;
            gens.push_back(x);
            std::vector<int> span{g->table_.identity};
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            seen[static_cast<std::size_t>(g->table_.identity)] = 1;
            for (std::size_t k = 0; k < span.size(); ++k)
                for (int s : gens) {
                    int y = g->table_.mul[static_cast<std::size_t>(span[k] * n + s)];
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        span.push_back(y);
                    }
                }
            in = seen;
        }
    }
    for (int s : gens) {
        if (s < 0 || s >= n) throw std::invalid_argument("finite generator index out of range");
        g->gens_.push_back(Elem{{s}});
    }
    return g;
}

GroupPtr Group::cyclic(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return finite(t, n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

bool Group::is_trivial() const {
    return kind_ == Kind::Finite ? table_.order == 1 : rank_ == 0;
}

Elem Group::id() const {
    switch (kind_) {
    case Kind::Free: return Elem{};
    case Kind::Abelian: return Elem{std::vector<long long>(static_cast<std::size_t>(rank_), 0)};
    case Kind::Finite: return Elem{{table_.identity}};
    }
    return {};
}

static long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in abelian arithmetic");
    return r;
}

Elem Group::mul(const Elem& x, const Elem& y) const {
    switch (kind_) {
    case Kind::Free: return Elem{word::mul(x.v, y.v)};
    case Kind::Abelian: {
        Elem r = x;
        for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = checked_add(r.v[i], y.v[i]);
        return r;
    }
    case Kind::Finite:
        return Elem{{table_.mul[static_cast<std::size_t>(x.v[0] * table_.order + y.v[0])]}};
    }
    return {};
}

Elem Group::inv(const Elem& x) const {
    switch (kind_) {
    case Kind::Free: return Elem{word::inv(x.v)};
    case Kind::Abelian: {
        Elem r = x;
        for (auto& c : r.v) c = -c;
        return r;
    }
    case Kind::Finite: return Elem{{table_.inv[static_cast<std::size_t>(x.v[0])]}};
    }
    return {};
}

Elem Group::pow(const Elem& x, long long n) const {
    if (kind_ == Kind::Free) return Elem{word::pow(x.v, n)};
    if (kind_ == Kind::Abelian) {
        Elem r = x;
        for (auto& c : r.v)
            if (__builtin_mul_overflow(c, n, &c)) throw std::overflow_error("integer overflow in abelian arithmetic");
        return r;
    }
    Elem b = n < 0 ? inv(x) : x;
    long long k = n < 0 ? -n : n;
    k %= table_.order;
    Elem r = id();
    for (long long i = 0; i < k; ++i) r = mul(r, b);
    return r;
}

Elem Group::normalize(const Elem& raw) const {
    switch (kind_) {
    case Kind::Free:
        for (long long l : raw.v)
            if (l == 0 || l > rank_ || l < -rank_) throw std::invalid_argument("unknown generator letter");
        return Elem{word::reduce(raw.v)};
    case Kind::Abelian:
        if (static_cast<int>(raw.v.size()) != rank_) throw std::invalid_argument("wrong vector length");
        return raw;
    case Kind::Finite:
        if (raw.v.size() != 1 || raw.v[0] < 0 || raw.v[0] >= table_.order)
            throw std::invalid_argument("element index out of range");
        return raw;
    }
    return raw;
}

Elem Group::letter(int i, long long exp) const {
    if (kind_ == Kind::Free) return Elem{word::pow(Word{i + 1}, exp)};
    return pow(gens_.at(static_cast<std::size_t>(i)), exp);
}

std::vector<Elem> Group::elements() const {
    if (kind_ != Kind::Finite) throw std::logic_error("elements() on an infinite group");
    std::vector<Elem> out;
    for (int i = 0; i < table_.order; ++i) out.push_back(Elem{{i}});
    return out;
}

Elem Group::eval(const Expr& x, const std::vector<Elem>& gens) const {
    Elem r = id();
    for (auto [i, e] : x.terms) r = mul(r, pow(gens.at(static_cast<std::size_t>(i)), e));
    return r;
}

std::string Group::format(const Elem& x) const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Free: {
        if (x.v.empty()) return "1";
        std::size_t i = 0;
        bool first = true;
        while (i < x.v.size()) {
            long long l = x.v[i];
            long long g = l > 0 ? l : -l;
            long long e = 0;
            while (i < x.v.size() && x.v[i] == l) {
                e += l > 0 ? 1 : -1;
                ++i;
            }
            if (!first) os << ' ';
            first = false;
            os << names_[static_cast<std::size_t>(g - 1)];
            if (e != 1) os << e;
        }
        return os.str();
    }
    case Kind::Abelian: {
        os << '(';
        for (std::size_t i = 0; i < x.v.size(); ++i) os << (i ? "," : "") << x.v[i];
        os << ')';
        return os.str();
    }
    case Kind::Finite: os << x.v.at(0); return os.str();
    }
    return {};
}

static bool parse_ll(std::string_view s, long long& out) {
    if (s.empty()) return false;
    if (s[0] == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

Elem Group::parse(std::string_view s) const {
    auto trim = [](std::string_view x) {
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.remove_prefix(1);
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.remove_suffix(1);
        return x;
    };
    s = trim(s);
    switch (kind_) {
    case Kind::Free: {
        Word w;
        std::string buf(s);
        std::istringstream is(buf);
        std::string tok;
        while (is >> tok) {
            if (tok == "1") continue;
            int best = -1;
            long long exp = 1;
            for (int g = 0; g < rank_; ++g) {
                const auto& n = names_[static_cast<std::size_t>(g)];
                if (tok.compare(0, n.size(), n) != 0) continue;
                std::string_view rest = std::string_view(tok).substr(n.size());
                long long e = 1;
                if (!rest.empty() && !parse_ll(rest, e)) continue;
                if (best < 0 || n.size() > names_[static_cast<std::size_t>(best)].size()) {
                    best = g;
                    exp = e;
                }
            }
            if (best < 0) throw std::invalid_argument("cannot parse word token '" + tok + "'");
            w = word::mul(w, word::pow(Word{best + 1}, exp));
        }
        return Elem{w};
    }
    case Kind::Abelian: {
        std::string buf;
        for (char c : s) buf.push_back(c == '(' || c == ')' || c == ',' ? ' ' : c);
        std::istringstream is(buf);
        std::vector<long long> v;
        std::string tok;
        while (is >> tok) {
            long long x;
            if (!parse_ll(tok, x)) throw std::invalid_argument("cannot parse vector entry '" + tok + "'");
            v.push_back(x);
        }
        if (v.empty() && rank_ > 0 && s == "1") return id();
        return normalize(Elem{v});
    }
    case Kind::Finite: {
        long long x;
        if (!parse_ll(s, x)) throw std::invalid_argument("cannot parse element index '" + std::string(s) + "'");
        return normalize(Elem{{x}});
    }
    }
    return {};
}

std::string Group::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Free:
        os << "F(";
        for (std::size_t i = 0; i < names_.size(); ++i) os << (i ? "," : "") << names_[i];
        os << ')';
        break;
    case Kind::Abelian: os << "Z^" << rank_; break;
    case Kind::Finite: os << "finite of order " << table_.order; break;
    }
    return os.str();
}

bool Group::same_as(const Group& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::Free) return names_ == o.names_;
    if (kind_ == Kind::Abelian) return rank_ == o.rank_;
    return table_.order == o.table_.order && table_.mul == o.table_.mul;
}

}  // namespace gog
