#pragma once

#include "recdist/charpoly.hpp"
#include "recdist/cli_report.hpp"
#include "recdist/conv_analyzer.hpp"
#include "recdist/errors.hpp"
#include "recdist/induced_dist.hpp"
#include "recdist/moment_engine.hpp"
#include "recdist/numeric.hpp"
#include "recdist/recurrence.hpp"
#include "recdist/serialize.hpp"
#include "recdist/sums_oracle.hpp"
#include "recdist/verify.hpp"
