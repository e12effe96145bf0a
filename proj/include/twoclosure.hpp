#pragma once

#include "twoclosure/closure.hpp"
#include "twoclosure/io.hpp"
#include "twoclosure/zoo.hpp"
