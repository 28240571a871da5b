#pragma once

#include "carnot/ansatz.hpp"
#include "carnot/classical.hpp"
#include "carnot/gaussian.hpp"
#include "carnot/hall.hpp"
#include "carnot/isomorphisms.hpp"
#include "carnot/json_io.hpp"
#include "carnot/lie.hpp"
#include "carnot/matrix.hpp"
#include "carnot/model_spaces.hpp"
#include "carnot/nilpotent_models.hpp"
#include "carnot/poly.hpp"
#include "carnot/rational.hpp"
#include "carnot/reps.hpp"
#include "carnot/space3.hpp"
#include "carnot/subspace.hpp"
