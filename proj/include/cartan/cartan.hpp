#pragma once

#include "cartan/blocks.hpp"
#include "cartan/checks.hpp"
#include "cartan/divisors.hpp"
#include "cartan/glaisher.hpp"
#include "cartan/habacus.hpp"
#include "cartan/partitions.hpp"
