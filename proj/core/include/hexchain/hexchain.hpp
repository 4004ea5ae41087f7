#pragma once

#include "hexchain/chain_graph.hpp"
#include "hexchain/checked_math.hpp"
#include "hexchain/code_word.hpp"
#include "hexchain/enumeration.hpp"
#include "hexchain/errors.hpp"
#include "hexchain/graph.hpp"
#include "hexchain/wiener.hpp"
