#pragma once

// Everything in one include.
#include "collatz/alpha_tree.hpp"
#include "collatz/bitstring.hpp"
#include "collatz/collatz.hpp"
#include "collatz/encoding.hpp"
#include "collatz/engine.hpp"
#include "collatz/mod3k.hpp"
#include "collatz/numeric.hpp"
#include "collatz/oracle.hpp"
#include "collatz/regex.hpp"
#include "collatz/regexgen.hpp"
