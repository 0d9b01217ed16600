#pragma once

// Exact q-series congruence toolkit: sparse Laurent-polynomial arithmetic
// over Q, q-shifted factorials and q-binomials, residue arithmetic in
// Q[q]/([p]^r), a registry of verifiable identities and congruences, and the
// f_{p,m,r} exponent solver.

#include "qclab/conjecture.hpp"
#include "qclab/congruence.hpp"
#include "qclab/enumerate.hpp"
#include "qclab/errors.hpp"
#include "qclab/parallel.hpp"
#include "qclab/poly.hpp"
#include "qclab/qkit.hpp"
#include "qclab/rat.hpp"
#include "qclab/registry.hpp"
#include "qclab/report.hpp"
#include "qclab/residue.hpp"
#include "qclab/result.hpp"
#include "qclab/runner.hpp"
#include "qclab/verifier.hpp"
