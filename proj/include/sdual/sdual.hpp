#pragma once

#include "core.hpp"
#include "genquat.hpp"
#include "io.hpp"
#include "kaehler.hpp"
#include "models.hpp"
#include "random.hpp"
#include "twistor.hpp"
#include "verify.hpp"
#include "vertical_forms.hpp"
