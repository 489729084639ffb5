#pragma once

#include "pi1trunc/field.hpp"
#include "pi1trunc/matrix.hpp"
#include "pi1trunc/multigraph.hpp"
#include "pi1trunc/graph_core.hpp"
#include "pi1trunc/trunc_algebra.hpp"
#include "pi1trunc/invariant.hpp"
#include "pi1trunc/reconstruct.hpp"
#include "pi1trunc/whitney.hpp"
#include "pi1trunc/io.hpp"
#include "pi1trunc/enumerate.hpp"
