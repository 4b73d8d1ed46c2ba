#ifndef PROBEMR_SCAN_HPP
#define PROBEMR_SCAN_HPP

#include <string>
#include <vector>

namespace probemr {

struct ScanReport {
    std::string check;
    int n_max = 0;
    long tested = 0;
    long passed = 0;
    long failed = 0;
    std::vector<std::string> exhibits; // one reproducible line per failure
    double wall_ms = 0;
};

std::vector<std::string> registered_checks();

// Runs the named invariant over isomorphism classes of graphs and probe
// assignments up to n_max, fanning out over `threads` workers. The report
// content is independent of the thread count.
ScanReport run_scan(const std::string& check, int n_max, int threads = 1);

std::string report_to_json(const ScanReport& report);

} // namespace probemr

#endif
