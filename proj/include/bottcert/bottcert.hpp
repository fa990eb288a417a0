#pragma once

// Umbrella header: the whole pipeline from Cartan matrices to certificates.

#include "bottcert/budget.hpp"
#include "bottcert/bwb.hpp"
#include "bottcert/certify.hpp"
#include "bottcert/character.hpp"
#include "bottcert/context.hpp"
#include "bottcert/dynkin.hpp"
#include "bottcert/errors.hpp"
#include "bottcert/flag.hpp"
#include "bottcert/irreps.hpp"
#include "bottcert/json_io.hpp"
#include "bottcert/parallel.hpp"
#include "bottcert/root_system.hpp"
#include "bottcert/weight.hpp"
