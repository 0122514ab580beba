#pragma once
// Umbrella header: the full library.

#include "analysis.hpp"
#include "classes.hpp"
#include "common.hpp"
#include "decomp.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "io.hpp"
#include "iso.hpp"
#include "modules.hpp"
#include "perm.hpp"
#include "subgroup.hpp"
