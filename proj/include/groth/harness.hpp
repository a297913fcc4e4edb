#pragma once

#include <functional>
#include <string>
#include <vector>

#include "groth/ortho.hpp"

namespace groth {

struct SweepReport {
    std::string theorem;
    int n_max = 0;
    long cases_checked = 0;
    std::vector<std::string> failures;  // "input | expected | actual"
    double wall_time = 0.0;

    bool passed() const { return cases_checked > 0 && failures.empty(); }
};

// Known ids: qd-thm, ivex-thm, iG-thm, dom-thm, orthogonal-recursion,
// supp-thm, shift-cor, b+conj, fkgsp, lenart, lensot, pieri, 1gr-lem,
// prod-lem, igrass-cor, supp-prop.
SweepReport run_verify(const std::string& theorem, int n_max, int jobs);
std::vector<std::string> verify_ids();

std::string report_text(const SweepReport& r);
std::string report_json(const SweepReport& r);

// Sorted distinct nonzero coefficient values for the reverse permutation.
std::vector<Coeff> values_table(int n);

struct EqualityCensus {
    long dominant_total = 0;
    long dominant_equal = 0;
    long vexillary_total = 0;
    long vexillary_equal = 0;
};
EqualityCensus equality_census(int n, int jobs, const std::function<void(long, long)>& progress = {});

struct LncCounts {
    std::vector<long> vexillary;       // locally noncrossing vexillary in I_m, m = 1..n
    std::vector<long> fixing_one;      // same with z in I_{m+1}, z(1) = 1
};
LncCounts lnc_counts(int n);

// Observational report for the support conjecture on the w_ij family:
// predicted equality iff i = 1 or j - i is odd. Never asserted.
struct WijReportRow {
    int i = 0;
    int j = 0;
    bool predicted = false;
    bool equal = false;
};
std::vector<WijReportRow> wij_report(int n, int jobs);

std::string export_binv_plus_dot(const Involution& z);
std::string export_binv_plus_json(const Involution& z);

void parallel_for(int jobs, std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace groth
