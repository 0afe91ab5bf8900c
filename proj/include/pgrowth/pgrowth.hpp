#ifndef PGROWTH_PGROWTH_HPP_INCLUDED
#define PGROWTH_PGROWTH_HPP_INCLUDED

#include "pgrowth/common.hpp"
#include "pgrowth/fplin.hpp"
#include "pgrowth/freealg.hpp"
#include "pgrowth/gscert.hpp"
#include "pgrowth/pgroups/group.hpp"
#include "pgrowth/pgroups/constructors.hpp"
#include "pgrowth/pgroups/subgroups.hpp"
#include "pgrowth/pgroups/lattice.hpp"
#include "pgrowth/fpgmod.hpp"
#include "pgrowth/growth.hpp"
#include "pgrowth/io.hpp"

#endif  // PGROWTH_PGROWTH_HPP_INCLUDED
