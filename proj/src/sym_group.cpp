#include "symgen/sym_group.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <utility>

#include "symgen/error.hpp"

namespace symgen {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw input_error("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw input_error("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::map<int, int> Partition::multiplicities() const
{
    std::map<int, int> m;
    for (int p : parts_) {
        ++m[p];
    }
    return m;
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    if (!parts_.empty()) {
        for (int j = 1; j <= parts_.front(); ++j) {
            c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
        }
    }
    return Partition(std::move(c));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &current, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n)
{
    if (n < 0) {
        throw input_error("cannot partition a negative integer");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

Integer factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

Integer centralizer_order(const Partition &mu)
{
    Integer z = 1;
    for (const auto &[part, mult] : mu.multiplicities()) {
        for (int i = 0; i < mult; ++i) {
            z *= part;
        }
        z *= factorial(mult);
    }
    return z;
}

Integer class_size(const Partition &mu) { return factorial(mu.size()) / centralizer_order(mu); }

int class_sign(const Partition &mu) { return ((mu.size() - static_cast<int>(mu.length())) % 2 == 0) ? 1 : -1; }

namespace {

// Beta-set (first-column hook lengths) of lambda with exactly `len` entries.
std::vector<int> beta_set(const std::vector<int> &lambda)
{
    const int len = static_cast<int>(lambda.size());
    std::vector<int> b(lambda.size());
    for (int i = 0; i < len; ++i) {
        b[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
    }
    return b;
}

std::vector<int> from_beta_set(std::vector<int> b)
{
    std::sort(b.begin(), b.end(), std::greater<>());
    const int len = static_cast<int>(b.size());
    std::vector<int> lambda;
    for (int i = 0; i < len; ++i) {
        int part = b[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) {
            lambda.push_back(part);
        }
    }
    return lambda;
}

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

std::int64_t mn_rec(const std::vector<int> &lambda, const std::vector<int> &mu, std::size_t mu_pos,
                    std::map<MnKey, std::int64_t> &memo)
{
    if (mu_pos == mu.size()) {
        return lambda.empty() ? 1 : 0;
    }
    MnKey key{lambda, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(mu_pos), mu.end())};
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const int r = mu[mu_pos];
    const auto beta = beta_set(lambda);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        // Leg length of the removed border strip.
        const auto height = std::count_if(beta.begin(), beta.end(), [&](int b) { return b > target && b < beta[i]; });
        auto next = beta;
        next[i] = target;
        const std::int64_t sub = mn_rec(from_beta_set(std::move(next)), mu, mu_pos + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex mn_mutex;
std::map<MnKey, std::int64_t> mn_memo;

} // namespace

std::int64_t mn_character(const Partition &lambda, const Partition &mu)
{
    if (lambda.size() != mu.size()) {
        throw input_error("character of " + lambda.to_string() + " evaluated on class " + mu.to_string()
                          + " of a different symmetric group");
    }
    std::lock_guard lock(mn_mutex);
    return mn_rec(lambda.parts(), mu.parts(), 0, mn_memo);
}

ClassFunction irreducible_character(const Partition &lambda)
{
    ClassFunction f;
    f.n = lambda.size();
    for (const auto &mu : partitions(f.n)) {
        f.values.emplace(mu, Integer(static_cast<long>(mn_character(lambda, mu))));
    }
    return f;
}

CharacterTable character_table(int n)
{
    CharacterTable t;
    t.n = n;
    t.classes = partitions(n);
    for (const auto &lambda : t.classes) {
        std::vector<std::int64_t> row;
        row.reserve(t.classes.size());
        for (const auto &mu : t.classes) {
            row.push_back(mn_character(lambda, mu));
        }
        t.values.push_back(std::move(row));
    }
    return t;
}

Rational Functional::weight(const Partition &mu) const
{
    auto it = weights.find(mu);
    return it == weights.end() ? Rational(0) : it->second;
}

Rational Functional::apply(const ClassFunction &chi) const
{
    if (chi.n != n) {
        throw input_error("functional on S_" + std::to_string(n) + " applied to a class function on S_"
                          + std::to_string(chi.n));
    }
    Rational total = 0;
    for (const auto &[mu, w] : weights) {
        auto it = chi.values.find(mu);
        if (it != chi.values.end()) {
            total += w * Rational(it->second);
        }
    }
    return total;
}

Functional make_functional(FunctionalKind kind, int n)
{
    if (n < 1) {
        throw input_error("power-operation functionals need n >= 1");
    }
    Functional f;
    f.n = n;
    const Integer n_fact = factorial(n);
    for (const auto &mu : partitions(n)) {
        switch (kind) {
        case FunctionalKind::sigma:
            f.weights.emplace(mu, make_rational(class_size(mu), n_fact));
            break;
        case FunctionalKind::lambda:
            f.weights.emplace(mu, make_rational(class_size(mu) * class_sign(mu), n_fact));
            break;
        case FunctionalKind::psi:
            f.weights.emplace(mu, Rational(mu.length() == 1 ? 1 : 0));
            break;
        }
    }
    return f;
}

} // namespace symgen
