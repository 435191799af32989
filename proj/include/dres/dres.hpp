#pragma once

#include "errors.hpp"
#include "upoly.hpp"
#include "field.hpp"
#include "pert.hpp"
#include "ore.hpp"
#include "lindiff.hpp"
#include "system.hpp"
#include "profile.hpp"
#include "content.hpp"
#include "matrix.hpp"
#include "resultant.hpp"
#include "perturb.hpp"
#include "implicitize.hpp"
#include "oracle.hpp"
#include "text.hpp"
