// Umbrella header for the whole toolkit.
#ifndef FIBERSCOPE_FIBERSCOPE_HPP
#define FIBERSCOPE_FIBERSCOPE_HPP

#include "bounds.hpp"
#include "experiment.hpp"
#include "fibers.hpp"
#include "gcd.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "io.hpp"
#include "module.hpp"
#include "syzygy.hpp"

#endif
