#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gog {

// Letters of a free word are +/-(i+1) for generator i.
using Word = std::vector<long long>;

// Canonical element representation, interpreted through its Group:
// free: freely reduced letter word; abelian: coordinate vector;
// finite: a single element index.
struct Elem {
    std::vector<long long> v;

    friend bool operator==(const Elem&, const Elem&) = default;
    friend auto operator<=>(const Elem&, const Elem&) = default;
};

// A word in the generators of some subgroup: (generator index, exponent) pairs.
struct Expr {
    std::vector<std::pair<int, long long>> terms;

    friend bool operator==(const Expr&, const Expr&) = default;
};

enum class Kind { Free, Abelian, Finite };

struct FiniteTable {
    int order = 0;
    int identity = 0;
    std::vector<int> mul;  // order * order, row-major
    std::vector<int> inv;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
public:
    static GroupPtr free(std::vector<std::string> names);
    static GroupPtr abelian(int rank);
    // Throws std::invalid_argument unless the table is a group table.
    // An empty generator list selects a greedy generating set.
    static GroupPtr finite(const std::vector<std::vector<int>>& table, std::vector<int> gens = {});
    static GroupPtr cyclic(int n);

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    int order() const { return table_.order; }
    const std::vector<std::string>& names() const { return names_; }
    const FiniteTable& table() const { return table_; }
    bool is_trivial() const;

    Elem id() const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem pow(const Elem& x, long long n) const;
    Elem conj(const Elem& x, const Elem& g) const { return mul(inv(g), mul(x, g)); }
    bool is_id(const Elem& x) const { return x == id(); }
    template <class... Es>
    Elem prod(const Elem& x, const Es&... rest) const {
        Elem r = x;
        ((r = mul(r, rest)), ...);
        return r;
    }

    // Throws std::invalid_argument on malformed input.
    Elem normalize(const Elem& raw) const;
    Elem letter(int i, long long exp = 1) const;

    // Standard generators: letters, unit vectors or the chosen finite generators.
    const std::vector<Elem>& generators() const { return gens_; }
    std::vector<Elem> elements() const;
    Elem eval(const Expr& x, const std::vector<Elem>& gens) const;

    std::string format(const Elem& x) const;
    Elem parse(std::string_view s) const;

    std::string describe() const;
    bool same_as(const Group& o) const;

private:
    Kind kind_ = Kind::Free;
    int rank_ = 0;
    std::vector<std::string> names_;
    FiniteTable table_;
    std::vector<Elem> gens_;
};

namespace word {
Word reduce(const Word& w);
Word mul(const Word& x, const Word& y);
Word inv(const Word& w);
Word pow(const Word& w, long long n);
// w = s * core * s^-1 with core cyclically reduced.
std::pair<Word, Word> cyclic_split(const Word& w);
}  // namespace word

}  // namespace gog
