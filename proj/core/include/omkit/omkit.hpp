#pragma once

#include "omkit/catalog.hpp"
#include "omkit/dot.hpp"
#include "omkit/functors.hpp"
#include "omkit/omp.hpp"
#include "omkit/poset.hpp"
#include "omkit/report.hpp"
#include "omkit/search.hpp"
#include "omkit/structure_file.hpp"
#include "omkit/subset.hpp"
#include "omkit/tables.hpp"
#include "omkit/urp.hpp"
