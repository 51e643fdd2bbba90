#pragma once

// Umbrella header.

#include "exactnum.hpp"
#include "signedperm.hpp"
#include "tableaux.hpp"
#include "qsym.hpp"
#include "report.hpp"
#include "distributions.hpp"
