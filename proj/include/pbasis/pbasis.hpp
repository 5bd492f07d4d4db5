#pragma once

#include "pbasis/adjoint.hpp"
#include "pbasis/errors.hpp"
#include "pbasis/invariants.hpp"
#include "pbasis/lietype.hpp"
#include "pbasis/linalg.hpp"
#include "pbasis/orbit_cache.hpp"
#include "pbasis/output.hpp"
#include "pbasis/principal.hpp"
#include "pbasis/rational.hpp"
#include "pbasis/rootsys.hpp"
#include "pbasis/version.hpp"
