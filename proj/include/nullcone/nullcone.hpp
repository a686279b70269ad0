#pragma once

#include "nullcone/catalog.hpp"
#include "nullcone/exactgeom.hpp"
#include "nullcone/qvec.hpp"
#include "nullcone/report.hpp"
#include "nullcone/rootsystem.hpp"
#include "nullcone/strata.hpp"
#include "nullcone/weightsys.hpp"
