#pragma once

#include <mlucas/arith/dyadic.hpp>
#include <mlucas/arith/gaussian.hpp>
#include <mlucas/arith/integer.hpp>
#include <mlucas/arith/poly.hpp>
#include <mlucas/arith/render.hpp>
#include <mlucas/arith/ring.hpp>
