#pragma once

/// Umbrella header.

#include "errors.hpp"
#include "exactnum.hpp"
#include "family.hpp"
#include "vecspace.hpp"
#include "permgroup.hpp"
#include "schemes.hpp"
#include "spectra.hpp"
#include "oracle.hpp"
#include "bounds.hpp"
#include "extremal.hpp"
#include "familyio.hpp"
#include "verify.hpp"
