#pragma once

#include "fracstefan/classical.hpp"
#include "fracstefan/errors.hpp"
#include "fracstefan/field.hpp"
#include "fracstefan/inverse.hpp"
#include "fracstefan/problem.hpp"
#include "fracstefan/profiles.hpp"
#include "fracstefan/scalar_root.hpp"
#include "fracstefan/specfun.hpp"
