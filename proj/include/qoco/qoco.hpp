#pragma once
// Convenience umbrella for the whole library.

#include "qoco/array.hpp"
#include "qoco/cocycle.hpp"
#include "qoco/errors.hpp"
#include "qoco/excess.hpp"
#include "qoco/gf2.hpp"
#include "qoco/group.hpp"
#include "qoco/io.hpp"
#include "qoco/pairs.hpp"
#include "qoco/search.hpp"
#include "qoco/sign_matrix.hpp"
