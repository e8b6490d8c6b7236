#pragma once

#include "synchrolab/automaton.hpp"
#include "synchrolab/classification.hpp"
#include "synchrolab/digraph_exponents.hpp"
#include "synchrolab/errors.hpp"
#include "synchrolab/exact_lp.hpp"
#include "synchrolab/exact_sync.hpp"
#include "synchrolab/extension_synth.hpp"
#include "synchrolab/generators.hpp"
#include "synchrolab/io.hpp"
#include "synchrolab/markov_spectral.hpp"
#include "synchrolab/rational.hpp"
#include "synchrolab/report.hpp"
#include "synchrolab/state_set.hpp"
