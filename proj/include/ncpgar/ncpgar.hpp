#pragma once

// Umbrella header.

#include "ncpgar/convex.hpp"
#include "ncpgar/correspondence.hpp"
#include "ncpgar/enumeration.hpp"
#include "ncpgar/garside.hpp"
#include "ncpgar/hurwitz.hpp"
#include "ncpgar/kreweras.hpp"
#include "ncpgar/lattice.hpp"
#include "ncpgar/noncross.hpp"
#include "ncpgar/params.hpp"
#include "ncpgar/partition.hpp"
#include "ncpgar/presentations.hpp"
#include "ncpgar/reflection.hpp"
#include "ncpgar/svg.hpp"
#include "ncpgar/words.hpp"
#include "ncpgar/zeta.hpp"
