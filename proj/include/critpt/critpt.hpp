#ifndef CRITPT_CRITPT_HPP
#define CRITPT_CRITPT_HPP

#include "critpt/errors.hpp"
#include "critpt/field.hpp"
#include "critpt/monomial.hpp"
#include "critpt/polynomial.hpp"
#include "critpt/critical_system.hpp"
#include "critpt/series.hpp"
#include "critpt/hilbert.hpp"
#include "critpt/grothendieck.hpp"
#include "critpt/eagon_northcott.hpp"
#include "critpt/groebner.hpp"
#include "critpt/macaulay.hpp"
#include "critpt/bench.hpp"

#endif  // CRITPT_CRITPT_HPP
