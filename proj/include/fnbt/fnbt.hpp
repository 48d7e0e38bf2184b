#ifndef FNBT_FNBT_HPP
#define FNBT_FNBT_HPP

#include "fnbt/bpa.hpp"
#include "fnbt/combination.hpp"
#include "fnbt/decision.hpp"
#include "fnbt/diagnostics.hpp"
#include "fnbt/errors.hpp"
#include "fnbt/frame.hpp"
#include "fnbt/fusion.hpp"
#include "fnbt/mass.hpp"

#endif  // FNBT_FNBT_HPP
