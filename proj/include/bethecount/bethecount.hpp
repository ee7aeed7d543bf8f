#pragma once

#include "bethecount/bigint.hpp"
#include "bethecount/characters.hpp"
#include "bethecount/counting.hpp"
#include "bethecount/errors.hpp"
#include "bethecount/occupancy.hpp"
#include "bethecount/poly.hpp"
#include "bethecount/rootsys.hpp"
