#pragma once

#include "qeuler/errors.hpp"
#include "qeuler/exactfield/big_rational.hpp"
#include "qeuler/exactfield/format.hpp"
#include "qeuler/exactfield/polynomial.hpp"
#include "qeuler/exactfield/rational_function.hpp"
#include "qeuler/identities/checks.hpp"
#include "qeuler/identities/report.hpp"
#include "qeuler/identities/serialize.hpp"
#include "qeuler/identities/suite.hpp"
#include "qeuler/padic/padic.hpp"
#include "qeuler/qcore/bernstein.hpp"
#include "qeuler/qcore/euler.hpp"
#include "qeuler/qcore/q_number.hpp"
