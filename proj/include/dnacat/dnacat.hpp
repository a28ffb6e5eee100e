// Umbrella header.
#ifndef DNACAT_DNACAT_HPP_
#define DNACAT_DNACAT_HPP_

#include "core.hpp"
#include "diagram.hpp"
#include "structures.hpp"
#include "pregroup.hpp"
#include "render.hpp"

#endif
