#pragma once

// Exact checks of the reflection, shift and Bernstein-integral identities for
// the q-Euler numbers. Every check builds both sides as canonical elements of
// Q(q) and compares them structurally. Arguments outside a result's stated
// range raise PreconditionError.

#include "qeuler/identities/report.hpp"
#include "qeuler/qcore/euler.hpp"

#include <vector>

namespace qeuler::identities {

using qcore::QEulerTable;
using qcore::shared_table;

/// xi_n(2) = 1 + 1/q + xi_n / q^2, n >= 1.
IdentityReport check_theorem1(long n, QEulerTable& table = shared_table());
/// sum_l C(n,l)(-1)^l xi_l = (-1)^n q^n xi_n(-1); cross: closed-form integral of [1-x]_{1/q}^n.
IdentityReport check_prop2(long n, QEulerTable& table = shared_table());
/// Integral of [1-x+x1]_{1/q}^n against mu_{-1/q} (expanded sum) = (-1)^n q^n xi_n(x).
IdentityReport check_prop3(long n, long x, QEulerTable& table = shared_table());
/// xi_{n,1/q}(2) = (-1)^n q^n xi_n(-1).
IdentityReport check_cor4(long n, QEulerTable& table = shared_table());
/// Integral of [1-x]_{1/q}^n against mu_{-q} = [2]_q + q^2 xi_{n,1/q}, n >= 1.
IdentityReport check_theorem5(long n, QEulerTable& table = shared_table());
/// Moment expansion vs reflected expansion of the B_{k,n} integral, n >= k >= 0.
IdentityReport check_theorem6(long n, long k, QEulerTable& table = shared_table());
/// n > k > 0 branch.
IdentityReport check_cor7(long n, long k, QEulerTable& table = shared_table());
/// sum_l C(n,l)(-1)^l xi_l = [2]_q + q^2 xi_{n,1/q}, n >= 1.
IdentityReport check_cor7_moreover(long n, QEulerTable& table = shared_table());
/// m + n > 2k; k > 0 and k = 0 ("moreover") branches.
IdentityReport check_theorem8(long m, long n, long k, QEulerTable& table = shared_table());
/// s-fold generalization; sum(parts) > s k. The k = 0 branch carries the q^2 factor.
IdentityReport check_theorem9(const std::vector<long>& parts, long k, QEulerTable& table = shared_table());
/// The k = 0 branch exactly as printed (no q^2 factor). Recorded, not asserted.
IdentityReport check_theorem9_printed(const std::vector<long>& parts, QEulerTable& table = shared_table());
/// B_{k,n}(x,q) = B_{n-k,n}(1-x, 1/q).
IdentityReport check_eq19(long n, long k, long x);
/// Bernstein-integral moment expansion vs reflected-power expansion, prefactor divided out.
IdentityReport check_eq18_vs_20(long n, long k, QEulerTable& table = shared_table());
/// Same for the product B_{k,n} B_{k,m}; requires k <= min(m, n).
IdentityReport check_eq21_vs_23(long m, long n, long k, QEulerTable& table = shared_table());
/// q xi_n(1) + xi_n = 0 for n >= 1.
IdentityReport check_eq8_corrected(long n, QEulerTable& table = shared_table());
/// q xi_n(1) + xi_n = 1 as printed. Recorded, not asserted.
IdentityReport check_eq8_printed(long n, QEulerTable& table = shared_table());

}  // namespace qeuler::identities
