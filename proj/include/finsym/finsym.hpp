#pragma once

#include "finsym/error.hpp"
#include "finsym/rational.hpp"
#include "finsym/int_matrix.hpp"
#include "finsym/abelian_group.hpp"
#include "finsym/finite_group.hpp"
#include "finsym/quadratic_form.hpp"
#include "finsym/chain_complex.hpp"
#include "finsym/cohomology.hpp"
#include "finsym/path_integral.hpp"
#include "finsym/tqft2d.hpp"
#include "finsym/fusion.hpp"
#include "finsym/anomaly.hpp"
#include "finsym/ising.hpp"
#include "finsym/parse.hpp"
#include "finsym/json_io.hpp"
