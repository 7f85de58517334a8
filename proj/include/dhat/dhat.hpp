#pragma once

#include "dhat/char_cycle.hpp"
#include "dhat/derham.hpp"
#include "dhat/factor.hpp"
#include "dhat/lattice.hpp"
#include "dhat/module.hpp"
#include "dhat/parse.hpp"
#include "dhat/perfect_complex.hpp"
#include "dhat/session.hpp"
