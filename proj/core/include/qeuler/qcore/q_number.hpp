#pragma once

#include "qeuler/exactfield/rational_function.hpp"

namespace qeuler::qcore {

using field::BigInt;
using field::BigRational;
using field::RationalFunction;

/// Which deformation parameter a q-number is taken in.
enum class QBase { q, inverse_q, negative_q };

/// [x]_b = (1 - b^x) / (1 - b) for b = q and b = 1/q, and
/// [x]_{-q} = (1 - (-q)^x) / (1 + q). Any integer x, including negative.
RationalFunction q_number(long x, QBase base = QBase::q);

}  // namespace qeuler::qcore
