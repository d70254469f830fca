#pragma once

#include <array>
#include <string>
#include <vector>

#include "pell3/poly.hpp"

namespace pell3 {

// Initial polynomials p_0, p_1, p_2 of a family in compact form.
//   r:     0, 1, 2x
//   s:     0, 2, 2x
//   sigma: 3, 2x, 4x^2
std::array<CompactPell, 3> initial_values(Family family);

// p_n by iterating p_n = 2x p_{n-1} + p_{n-3}. In compact form this is
// c^{(n)}_l = 2 c^{(n-1)}_l + c^{(n-3)}_{l-1}; only three rows are kept.
CompactPell recurrence_gen(Family family, long n);

// Smallest index the binomial-sum closed form is defined for:
// r: 0, s: 2, sigma: 1.
long closed_form_min_index(Family family);

// p_n from the binomial sums
//   r:     c_l = C(n-1-2l, l) 2^{n-1-3l}
//   s:     c_l = (n-l-1)/(n-2l-1) C(n-2l-1, l) 2^{n-1-3l}
//   sigma: c_l = n/(n-2l) C(n-2l, l) 2^{n-3l}
// Prefactors are formed exactly; a non-integral c_l throws IdentityViolation.
// Indices below closed_form_min_index throw DomainError.
CompactPell closed_form(Family family, long n);

// Rows 0..max_n of compact coefficients, generated by recurrence.
std::vector<CompactPell> coefficient_triangle(Family family, long max_n);

// "n,l,coeff" header then one row per stored coefficient.
std::string triangle_csv(const std::vector<CompactPell>& rows);

// {"family": "r", "rows": [{"n": 0, "coeffs": []}, ...]}
std::string triangle_json(Family family, const std::vector<CompactPell>& rows, int indent = -1);

}  // namespace pell3
