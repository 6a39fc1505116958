#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sset {

/// A weakly order-preserving map [m] -> [n] between finite ordinals.
/// The domain [m] has m+1 elements; `values` holds the images of 0..m.
/// These are the morphisms of the simplex category, so all operator
/// algebra on simplicial sets reduces to composing them.
class MonotoneMap {
public:
    MonotoneMap(std::vector<int> values, int codomain_size)
        : values_(std::move(values)), codomain_size_(codomain_size) {
        if (values_.empty())
            throw std::invalid_argument("MonotoneMap: empty domain is not an ordinal");
        if (codomain_size_ <= 0)
            throw std::invalid_argument("MonotoneMap: empty codomain");
        int prev = 0;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            int v = values_[i];
            if (v < 0 || v >= codomain_size_)
                throw std::invalid_argument("MonotoneMap: value out of range");
            if (i > 0 && v < prev)
                throw std::invalid_argument("MonotoneMap: values not weakly increasing");
            prev = v;
        }
    }

    static MonotoneMap identity(int size) {
        std::vector<int> v(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] = i;
        return MonotoneMap(std::move(v), size);
    }

    /// Coface d_i: the injection [n-1] -> [n] whose image misses i.
    static MonotoneMap coface(int n, int i) {
        if (n < 1 || i < 0 || i > n)
            throw std::invalid_argument("coface: index out of range");
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = j < i ? j : j + 1;
        return MonotoneMap(std::move(v), n + 1);
    }

    /// Codegeneracy s_i: the surjection [n+1] ->> [n] hitting i twice.
    static MonotoneMap codegeneracy(int n, int i) {
        if (n < 0 || i < 0 || i > n)
            throw std::invalid_argument("codegeneracy: index out of range");
        std::vector<int> v(static_cast<std::size_t>(n + 2));
        for (int j = 0; j <= n + 1; ++j) v[static_cast<std::size_t>(j)] = j <= i ? j : j - 1;
        return MonotoneMap(std::move(v), n + 1);
    }

    static MonotoneMap constant(int domain_size, int value, int codomain_size) {
        return MonotoneMap(std::vector<int>(static_cast<std::size_t>(domain_size), value),
                           codomain_size);
    }

    /// The surjection [n] ->> [n-|word|] with descent set `word`.
    /// Words are stored with strictly decreasing indices; word [a, b] with
    /// a > b acts on simplices as s_a(s_b(x)).
    static MonotoneMap from_degeneracy_word(const std::vector<int>& word, int target_dim) {
        int n = target_dim + static_cast<int>(word.size());
        MonotoneMap m = identity(n + 1);
        int lvl = n - 1;
        for (int w : word) m = codegeneracy(lvl--, w).after(m);
        return m;
    }

    int domain_size() const { return static_cast<int>(values_.size()); }
    int codomain_size() const { return codomain_size_; }
    int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& values() const { return values_; }

    bool is_identity() const {
        if (codomain_size_ != domain_size()) return false;
        for (int i = 0; i < domain_size(); ++i)
            if (values_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    bool is_injective() const {
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i] == values_[i - 1]) return false;
        return true;
    }

    bool is_surjective() const {
        if (values_.front() != 0 || values_.back() != codomain_size_ - 1) return false;
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i] - values_[i - 1] > 1) return false;
        return true;
    }

    /// Composite this ∘ g, i.e. apply g first.
    MonotoneMap after(const MonotoneMap& g) const {
        if (g.codomain_size_ != domain_size())
            throw std::invalid_argument("MonotoneMap::after: domain mismatch");
        std::vector<int> v(g.values_.size());
        for (std::size_t i = 0; i < g.values_.size(); ++i)
            v[i] = values_[static_cast<std::size_t>(g.values_[i])];
        return MonotoneMap(std::move(v), codomain_size_);
    }

    /// Conjugation by order reversal: i -> n - f(m - i).  This is the
    /// action of the opposite involution on operators.
    MonotoneMap reversed() const {
        std::vector<int> v(values_.size());
        int m = domain_size() - 1;
        for (int i = 0; i <= m; ++i)
            v[static_cast<std::size_t>(i)] =
                codomain_size_ - 1 - values_[static_cast<std::size_t>(m - i)];
        return MonotoneMap(std::move(v), codomain_size_);
    }

    /// Ordinal sum f ⋆ g: [a+b+1] -> [a'+b'+1].
    static MonotoneMap join(const MonotoneMap& f, const MonotoneMap& g) {
        std::vector<int> v;
        v.reserve(f.values_.size() + g.values_.size());
        for (int x : f.values_) v.push_back(x);
        for (int x : g.values_) v.push_back(f.codomain_size_ + x);
        return MonotoneMap(std::move(v), f.codomain_size_ + g.codomain_size_);
    }

    /// Unique factorization surjection-then-injection: returns (s, d) with
    /// d ∘ s == *this, s surjective, d injective.
    std::pair<MonotoneMap, MonotoneMap> ez_factor() const {
        std::vector<int> image;
        for (int x : values_)
            if (image.empty() || image.back() != x) image.push_back(x);
        std::vector<int> surj(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i)
            surj[i] = static_cast<int>(
                std::lower_bound(image.begin(), image.end(), values_[i]) - image.begin());
        int k = static_cast<int>(image.size());
        return {MonotoneMap(std::move(surj), k), MonotoneMap(std::move(image), codomain_size_)};
    }

    /// Positions i with f(i) == f(i+1).
    std::vector<int> descents() const {
        std::vector<int> d;
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i] == values_[i - 1]) d.push_back(static_cast<int>(i) - 1);
        return d;
    }

    /// Canonical word of a surjection: descent set, strictly decreasing.
    std::vector<int> degeneracy_word() const {
        if (!is_surjective())
            throw std::invalid_argument("degeneracy_word: map is not surjective");
        std::vector<int> w = descents();
        std::reverse(w.begin(), w.end());
        return w;
    }

    /// Values of [n] not hit, increasing.  Meaningful for injections.
    std::vector<int> missing_values() const {
        std::vector<int> m;
        std::size_t j = 0;
        for (int v = 0; v < codomain_size_; ++v) {
            while (j < values_.size() && values_[j] < v) ++j;
            if (j >= values_.size() || values_[j] != v) m.push_back(v);
        }
        return m;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(values_[i]);
        }
        s += "]->" + std::to_string(codomain_size_ - 1);
        return s;
    }

    friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
        return a.codomain_size_ == b.codomain_size_ && a.values_ == b.values_;
    }
    friend auto operator<=>(const MonotoneMap& a, const MonotoneMap& b) {
        if (auto c = a.codomain_size_ <=> b.codomain_size_; c != 0) return c;
        return a.values_ <=> b.values_;
    }

private:
    std::vector<int> values_;
    int codomain_size_;
};

}  // namespace sset
