#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symgen/rational.hpp"

namespace symgen {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    // Throws input_error unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    // Sorts the parts first; zero parts are dropped.
    static Partition from_unsorted(std::vector<int> parts);

    int size() const { return size_; }
    std::size_t length() const { return parts_.size(); }
    const std::vector<int> &parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    // Multiplicity of each part value.
    std::map<int, int> multiplicities() const;
    Partition conjugate() const;

    // "(2,1)"; the empty partition prints as "()".
    std::string to_string() const;

    auto operator<=>(const Partition &) const = default;
    bool operator==(const Partition &) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);

Integer factorial(int n);
// z_mu = prod_i i^{m_i} m_i!, the centraliser order of a permutation of cycle type mu.
Integer centralizer_order(const Partition &mu);
// Number of permutations of cycle type mu: n! / z_mu.
Integer class_size(const Partition &mu);
// Sign character on the class: (-1)^(n - #parts).
int class_sign(const Partition &mu);

/// chi_lambda(mu) via the Murnaghan-Nakayama rule. Memoised and thread-safe.
std::int64_t mn_character(const Partition &lambda, const Partition &mu);

struct ClassFunction {
    int n = 0;
    std::map<Partition, Integer> values;
};

ClassFunction irreducible_character(const Partition &lambda);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes; // columns, same order as rows
    std::vector<std::vector<std::int64_t>> values; // values[i][j] = chi_{classes[i]}(classes[j])
};

CharacterTable character_table(int n);

enum class FunctionalKind { sigma, lambda, psi };

/// Linear functional on class functions of S_n: phi(chi) = sum_mu w_mu chi(mu).
struct Functional {
    int n = 0;
    std::map<Partition, Rational> weights;

    Rational weight(const Partition &mu) const;
    Rational apply(const ClassFunction &chi) const;
};

// sigma: trivial-isotype projector, lambda: sign-isotype projector, psi: n-cycle trace.
Functional make_functional(FunctionalKind kind, int n);

} // namespace symgen
