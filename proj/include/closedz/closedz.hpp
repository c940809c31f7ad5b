#pragma once

#include "closedz/factorize.hpp"
#include "closedz/io.hpp"
#include "closedz/mbonacci.hpp"
#include "closedz/morphism.hpp"
#include "closedz/ocseq.hpp"
#include "closedz/verify.hpp"
#include "closedz/word.hpp"
