#pragma once

// Umbrella header: the whole library.

#include "rsh/classify.hpp"
#include "rsh/csv.hpp"
#include "rsh/curve.hpp"
#include "rsh/errors.hpp"
#include "rsh/family.hpp"
#include "rsh/frenet.hpp"
#include "rsh/indicatrix.hpp"
#include "rsh/report.hpp"
#include "rsh/samples.hpp"
#include "rsh/stencil.hpp"
#include "rsh/svg.hpp"
#include "rsh/tolerances.hpp"
#include "rsh/vec3.hpp"
#include "rsh/verify.hpp"
#include "rsh/version.hpp"

