#pragma once

#include <string>

#include "symgen/graded_spaces.hpp"
#include "symgen/io.hpp"
#include "symgen/laurent.hpp"

namespace symgen::testing {

inline LaurentPoly H(const std::string &s) { return parse_poly(s, hodge_variables()); }
inline LaurentPoly E(const std::string &s) { return parse_poly(s, e_variables()); }
inline LaurentPoly Y(const std::string &s) { return parse_poly(s, chi_y_variables()); }
inline LaurentPoly Z(const std::string &s) { return parse_poly(s, betti_variables()); }

inline GradedDims dims(std::initializer_list<std::pair<Tridegree, std::int64_t>> entries)
{
    GradedDims v;
    for (const auto &[d, n] : entries) {
        v.add(d, n);
    }
    return v;
}

inline GradedDims p1_dims() { return dims({{{0, 0, 0}, 1}, {{1, 1, 2}, 1}}); }
inline GradedDims odd_line() { return dims({{{0, 1, 1}, 1}}); }
inline GradedDims elliptic_dims() { return dims({{{0, 0, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}, {{1, 1, 2}, 1}}); }

} // namespace symgen::testing
