#pragma once

#include "bw/curve.hpp"
#include "bw/decompose.hpp"
#include "bw/error.hpp"
#include "bw/groebner.hpp"
#include "bw/liealg.hpp"
#include "bw/poly.hpp"
#include "bw/text.hpp"
