#pragma once

#include "count.hpp"
#include "four_color.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "reduce.hpp"
#include "series.hpp"
#include "set_partition.hpp"
