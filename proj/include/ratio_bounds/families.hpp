#pragma once

#include "ratio_bounds/families/closed_forms.hpp"
#include "ratio_bounds/families/registry.hpp"
#include "ratio_bounds/families/systems.hpp"
