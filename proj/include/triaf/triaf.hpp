#pragma once

#include "triaf/algebra.hpp"
#include "triaf/bitset.hpp"
#include "triaf/embedding.hpp"
#include "triaf/hull_kernel.hpp"
#include "triaf/ideal.hpp"
#include "triaf/lattice.hpp"
#include "triaf/nest_rep.hpp"
#include "triaf/tower.hpp"
