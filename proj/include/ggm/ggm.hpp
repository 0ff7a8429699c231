#pragma once

#include "ggm/assembly.hpp"
#include "ggm/cylinder.hpp"
#include "ggm/diskmetric.hpp"
#include "ggm/errors.hpp"
#include "ggm/io.hpp"
#include "ggm/isotopy.hpp"
#include "ggm/lattice.hpp"
#include "ggm/moduli.hpp"
#include "ggm/numeric.hpp"
#include "ggm/rational.hpp"
#include "ggm/slope.hpp"
#include "ggm/spaceform.hpp"
