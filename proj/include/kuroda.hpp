#ifndef KURODA_HPP
#define KURODA_HPP

#include "kuroda/rational.hpp"
#include "kuroda/config.hpp"
#include "kuroda/polynomial.hpp"
#include "kuroda/membership.hpp"
#include "kuroda/blowup.hpp"
#include "kuroda/regions.hpp"
#include "kuroda/expression.hpp"
#include "kuroda/report.hpp"

#endif  // KURODA_HPP
