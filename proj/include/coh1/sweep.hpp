#pragma once

#include "coh1/families.hpp"
#include "coh1/oracle.hpp"

#include <string>
#include <vector>

// Box enumeration of valid diagrams with per-diagram formula/oracle agreement.
// The heavy loop is data-parallel over diagrams; run_parallel toggles the
// OpenMP kernel, run_serial is the reference it is diffed against.

namespace coh1::sweep {

using families::FamilyDiagram;
using intlin::Int;

struct SweepRecord {
    FamilyDiagram diagram;
    std::string params;    // short printable parameter tuple
    Int h4_formula = 0;    // |H^4| from the determinant path (0 = infinite)
    Int h4_oracle = 0;     // |H^4| recomputed by lattice quotients
    Int gamma = 0, beta = 0;
    bool agree = false;
    std::string error;     // nonempty if the computation threw
};

struct SweepBounds {
    int slope = 5;  // |p|, |q| box for circle slopes
    int b = 4;      // finite-subgroup orders
    int mn = 3;     // |m|, |n| box (reduced-torus families)
};

// every valid diagram of the family inside the bounds, deterministically ordered
std::vector<FamilyDiagram> enumerate_diagrams(const std::string& family, const SweepBounds& bounds);

std::vector<SweepRecord> run_serial(const std::vector<FamilyDiagram>& diagrams);
std::vector<SweepRecord> run_parallel(const std::vector<FamilyDiagram>& diagrams);

// render one line per record plus a totals footer
std::string render_table(const std::vector<SweepRecord>& records);

int count_disagreements(const std::vector<SweepRecord>& records);

}  // namespace coh1::sweep
