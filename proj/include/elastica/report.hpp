#pragma once

#include <string>
#include <vector>

namespace elastica {

// Per-level energies with a slab-weighted total, serializable to CSV.
// Level reports use the header "level,t,length,curvature_term,energy";
// smoothing studies use "collar,F_coarea,target,abs_error".
struct EnergyReport {
    struct Level {
        int level = 0;
        double t = 0.0;
        double length = 0.0;
        double curvature_term = 0.0;
        double energy = 0.0;
    };
    struct Study {
        double collar = 0.0;
        double coarea = 0.0;
        double target = 0.0;
        double abs_error = 0.0;
    };

    std::vector<Level> levels;
    std::vector<Study> study;
    double total = 0.0;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const;
    std::string to_csv() const;
};

// 9 significant digits, the CLI-facing number format.
std::string format_g9(double v);

}  // namespace elastica
