#pragma once

// Convenience include for the whole library.

#include "regtour/constructions.hpp"
#include "regtour/gale_ryser.hpp"
#include "regtour/harness.hpp"
#include "regtour/io.hpp"
#include "regtour/isomorphism.hpp"
#include "regtour/score_sequence.hpp"
#include "regtour/suite.hpp"
#include "regtour/tournament.hpp"
