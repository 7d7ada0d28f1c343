#pragma once

#include "tpsurf/basepoint.hpp"
#include "tpsurf/bideg.hpp"
#include "tpsurf/bipoly.hpp"
#include "tpsurf/error.hpp"
#include "tpsurf/exactla.hpp"
#include "tpsurf/format.hpp"
#include "tpsurf/matrix.hpp"
#include "tpsurf/random.hpp"
#include "tpsurf/rational.hpp"
#include "tpsurf/squarefree.hpp"
#include "tpsurf/surface.hpp"
#include "tpsurf/xpoly.hpp"
