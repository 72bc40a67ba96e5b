#ifndef MIXEDSPEC_MIXEDSPEC_HPP
#define MIXEDSPEC_MIXEDSPEC_HPP

#include "mixedspec/errors.hpp"
#include "mixedspec/tolerance.hpp"
#include "mixedspec/graph_core.hpp"
#include "mixedspec/phase.hpp"
#include "mixedspec/spectra.hpp"
#include "mixedspec/expansion_oracle.hpp"
#include "mixedspec/monograph.hpp"
#include "mixedspec/cospectral_rules.hpp"

#endif  // MIXEDSPEC_MIXEDSPEC_HPP
