#pragma once

#include <cstdint>

#include "sqrtlab/modular.hpp"

namespace sqrtlab {

// Complete and incomplete exponential sums over F_q.  The *_sum functions
// sum term by term (pairwise, through the gather kernels) and need the
// field's residue tables; the *_closed_form functions never sum over F_q.

/// sum_{x in F_q} e_q(a x^2 + b x); a must be nonzero mod q.
Complex gauss_sum(const PrimeField& field, std::uint64_t a, std::uint64_t b);

/// e_q(-inv(4a) b^2) * eps_q * sqrt(q) * (a/q).
Complex gauss_closed_form(const PrimeField& field, std::uint64_t a, std::uint64_t b);

/// Salie sum sum_{x in F_q^*} (x/q) e_q(m x + n inv(x)), defined for all m, n.
Complex salie_sum(const PrimeField& field, std::uint64_t m, std::uint64_t n);

/// sqrt(q) eps_q (n/q) sum_{x^2 = mn} e_q(2x) when mn != 0.  The degenerate
/// cases use S(0, n) = (n/q) eps_q sqrt(q), S(m, 0) = (m/q) eps_q sqrt(q) and
/// S(0, 0) = 0.
Complex salie_closed_form(const PrimeField& field, std::uint64_t m, std::uint64_t n);

/// sum_{w=1}^{W} sum_{x^2 = a w} e_q(h x) for 1 <= W <= q and gcd(ah, q) = 1.
Complex incomplete_sqrt_sum(const PrimeField& field, std::uint64_t a, std::uint64_t h,
                            std::uint64_t W);

/// max over 1 <= W <= q of |incomplete_sqrt_sum(a, h, W)|, in one O(q) pass.
double incomplete_sqrt_max(const PrimeField& field, std::uint64_t a, std::uint64_t h);

}  // namespace sqrtlab
