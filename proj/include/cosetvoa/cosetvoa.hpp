#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "residue.hpp"
#include "integer_matrix.hpp"
#include "fusion_sum.hpp"
#include "virasoro.hpp"
#include "parafermion.hpp"
#include "u0.hpp"
#include "lattice.hpp"
#include "codes.hpp"
#include "code_io.hpp"
#include "ud_modules.hpp"
#include "verify.hpp"
