#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace filtreg {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp; throws BoundTooLarge past a few million bits.
BigInt big_pow(const BigInt& base, std::uint64_t exp);
BigInt binomial(std::int64_t n, std::int64_t k);
/// 3 (d-1)! - 1.
std::uint64_t main_exponent(int d);

/// d = 1: D + r - 1; d >= 2: (D + r + 1)^{3(d-1)! - 1} - d.
BigInt bound_assoc_graded(int d, const BigInt& D, const BigInt& r);
/// i = 0: D; i = 1: (D + r - 1) D; i >= 2: (D + r + 1)^{3 i! - i + 1}.
BigInt bound_hilbert_coeff(int i, int d, const BigInt& D, const BigInt& r);
/// bound_assoc_graded with D = l(A/I)^d hdeg(M).
BigInt bound_graded_hdeg(int d, const BigInt& l_ai, const BigInt& hdeg_m, const BigInt& r);
/// Bound for G_I(A): d = 1: l(A/I) - 1; d >= 2: (l(A/I) + 1)^{3(d-1)! - 1} - d.
BigInt bound_corollary(int d, const BigInt& l_ai);
BigInt bound_graded_regM(int d, const BigInt& l_ai, const BigInt& mu_m, const BigInt& reg_m, const BigInt& i_m,
                         int n, const BigInt& r);
BigInt bound_equigenerated(int d, const BigInt& l_mqm, const BigInt& r, const BigInt& reg_m, const BigInt& i_m,
                           const BigInt& delta);

enum class FiberMode { A0, Reg, E0, Ei };
/// `i` is used only by FiberMode::Ei, where 1 <= i <= d - 1.
BigInt bound_fiber(int d, const BigInt& D, const BigInt& r, FiberMode mode, int i = 0);
/// F_m(I) of an m-primary ideal with D = D(I, A).
BigInt bound_fiber_classical(int d, const BigInt& D);
/// bound_fiber(Reg) with D = l(A/I)^d hdeg(I, M).
BigInt bound_fiber_graded(int d, const BigInt& l_ai, const BigInt& hdeg_im, const BigInt& r);
/// binom(n + d, d) * value.
BigInt bound_hs_binomial(int n, int d, const BigInt& value);

/// Decimal text of a big integer.
std::string to_decimal(const BigInt& v);

}  // namespace filtreg
