#pragma once

#include "whitney/complex.hpp"
#include "whitney/cx2.hpp"
#include "whitney/disjoint_set.hpp"
#include "whitney/error.hpp"
#include "whitney/fattening.hpp"
#include "whitney/gallery.hpp"
#include "whitney/graphkit.hpp"
#include "whitney/local_surfaces.hpp"
#include "whitney/multigraph.hpp"
#include "whitney/pipeline.hpp"
#include "whitney/rotation.hpp"
#include "whitney/topology.hpp"
