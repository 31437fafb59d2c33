#pragma once

#include "gross/derived.hpp"
#include "gross/error.hpp"
#include "gross/expr.hpp"
#include "gross/geometry.hpp"
#include "gross/gnum.hpp"
#include "gross/measure.hpp"
#include "gross/numeral_system.hpp"
#include "gross/serialize.hpp"
#include "gross/set_expr.hpp"
#include "gross/sets.hpp"
