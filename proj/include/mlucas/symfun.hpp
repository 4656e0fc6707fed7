#pragma once

#include <mlucas/symfun/alphabet.hpp>
#include <mlucas/symfun/genfun.hpp>
#include <mlucas/symfun/kernel.hpp>
#include <mlucas/symfun/power_series.hpp>
